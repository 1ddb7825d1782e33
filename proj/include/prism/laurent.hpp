#pragma once

#include <string>
#include <vector>

#include "prism/bigint.hpp"

namespace prism {

// Integer Laurent polynomial in one variable t. Coefficients are stored
// densely over the exponent window [lo, lo + coeffs.size()); the window is
// always trimmed so that the first and last stored coefficients are nonzero
// (the zero polynomial stores nothing).
class LaurentPoly {
public:
    LaurentPoly() = default;

    static LaurentPoly constant(BigInt c);
    static LaurentPoly monomial(BigInt c, int exp);
    // 1 + t + ... + t^(n-1)
    static LaurentPoly geometric(int n);

    bool is_zero() const { return coeffs_.empty(); }
    int min_exp() const; // requires nonzero
    int max_exp() const; // requires nonzero
    int span() const { return is_zero() ? 0 : max_exp() - min_exp(); }
    int term_count() const;

    BigInt coeff(int exp) const;

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
    bool operator==(const LaurentPoly& o) const;
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    // Multiply by c * t^exp in place.
    void scale(const BigInt& c, int exp = 0);
    LaurentPoly shifted(int delta) const;

    // Substitution t -> 1/t (exponent mirror).
    LaurentPoly mirrored() const;
    bool is_symmetric() const { return *this == mirrored(); }

    BigInt eval_one() const;
    BigInt eval_minus_one() const;
    BigInt eval(const BigInt& x) const;

    // Sum of c_e * e * (e - 1): the exact second derivative at t = 1 of the
    // Laurent expression.
    BigInt second_derivative_at_one() const;

    // Ascending exponent order, e.g. "t^-1 - 1 + t".
    std::string to_string() const;

    // Direct access for hot loops (coefficient of t^(lo+i) is coeffs()[i]).
    int lo() const { return lo_; }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    static LaurentPoly from_coeffs(int lo, std::vector<BigInt> coeffs);

private:
    void trim();

    int lo_ = 0;
    std::vector<BigInt> coeffs_;
};

// Exact quotient num / den; throws std::logic_error if the division leaves a
// remainder or den is zero.
LaurentPoly divide_exact(const LaurentPoly& num, const LaurentPoly& den);

} // namespace prism
