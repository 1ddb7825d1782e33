#pragma once

#include <vector>

#include "prism/bigint.hpp"
#include "prism/braid.hpp"
#include "prism/laurent.hpp"

namespace prism {

// Square matrix over Z[t, t^-1]. Dimension n-1 for the reduced Burau
// representation on n strands.
class BurauMatrix {
public:
    explicit BurauMatrix(int dim);
    static BurauMatrix identity(int dim);

    int dim() const { return static_cast<int>(rows_.size()); }
    LaurentPoly& at(int i, int j) { return rows_[static_cast<size_t>(i)][static_cast<size_t>(j)]; }
    const LaurentPoly& at(int i, int j) const {
        return rows_[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }

    BurauMatrix operator*(const BurauMatrix& o) const;
    bool operator==(const BurauMatrix& o) const { return rows_ == o.rows_; }
    bool operator!=(const BurauMatrix& o) const { return !(*this == o); }
    bool is_identity() const;

    // In-place A <- A * b(sigma_g) (column operations; g < 0 for the inverse).
    void right_multiply_letter(int g);

    // Exact fraction-free determinant.
    LaurentPoly det_bareiss() const;

private:
    std::vector<std::vector<LaurentPoly>> rows_;
};

// Reduced Burau matrix of the letter sigma_g (g < 0: inverse) on `strands`
// strands; dimension strands-1. The matrix differs from the identity in row
// |g| only: (t, -t, 1) at columns |g|-1, |g|, |g|+1 for a positive letter.
BurauMatrix burau_letter(int g, int strands);
inline BurauMatrix burau_generator(int i, int strands) { return burau_letter(i, strands); }

BurauMatrix burau_of_word(const BraidWord& b);

// Integer matrices: the t = -1 specialization used by the determinant
// pipeline.
class IntMatrix {
public:
    explicit IntMatrix(int dim);
    static IntMatrix identity(int dim);

    int dim() const { return static_cast<int>(rows_.size()); }
    BigInt& at(int i, int j) { return rows_[static_cast<size_t>(i)][static_cast<size_t>(j)]; }
    const BigInt& at(int i, int j) const {
        return rows_[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }

    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix pow(long long e) const;
    bool operator==(const IntMatrix& o) const { return rows_ == o.rows_; }

    void right_multiply_letter_neg1(int g);

    BigInt det_bareiss() const;

private:
    std::vector<std::vector<BigInt>> rows_;
};

// Burau representation at t = -1 of a whole word.
IntMatrix burau_neg1_of_word(const BraidWord& b);

// Closed form for the t = -1 Burau matrix of (sigma_1...sigma_B)^(m(B+1)/2)
// on B+2 strands (dimension B+1), assembled from the even/odd half-twist
// patterns. Requires odd B; cross-checked against direct powers in tests.
IntMatrix twist_block_closed_form(int B, int m);

// Number of leading repetitions of the full run (1, 2, ..., run_top) in
// `letters`; rest_begin receives the index of the first letter past them.
long long count_full_twist_runs(const std::vector<int>& letters, int run_top, size_t& rest_begin);

// |det(I - b(K sigma_n))| at t = -1, stabilizing with one extra strand and a
// positive generator when the strand count is even so that it is odd. The
// full-twist prefix is raised by binary matrix powering.
// Requires the closure to be a knot.
BigInt knot_determinant(const BraidWord& b);

// Normalized Alexander polynomial of the braid closure: symmetric in t <-> 1/t
// with value 1 at t = 1. Requires the closure to be a knot.
//
// det(I - reduced Burau) is computed exactly by Chinese remaindering of
// per-prime characteristic polynomials (see det_one_minus_shifted); the
// leading full-twist block is first reduced with b((sigma_1...sigma_{n-1})^n)
// = t^n * I, which keeps entry degrees proportional to k mod n rather than k.
LaurentPoly alexander_polynomial(const BraidWord& b);

// det(I - t^shift * M) for a square Laurent matrix, exact. The characteristic
// polynomial of M is interpolated from integer evaluations modulo enough
// 62-bit primes to cover a rigorous coefficient bound (product over rows of
// 1 + the row's coefficient l1-mass).
LaurentPoly det_one_minus_shifted(const BurauMatrix& m, long long shift);

} // namespace prism
