#include "prism/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace prism {

void LaurentPoly::trim() {
    size_t hi = coeffs_.size();
    while (hi > 0 && coeffs_[hi - 1] == 0) --hi;
    coeffs_.resize(hi);
    size_t lo = 0;
    while (lo < coeffs_.size() && coeffs_[lo] == 0) ++lo;
    if (lo > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lo));
        lo_ += static_cast<int>(lo);
    }
    if (coeffs_.empty()) lo_ = 0;
}

LaurentPoly LaurentPoly::constant(BigInt c) { return monomial(std::move(c), 0); }

LaurentPoly LaurentPoly::monomial(BigInt c, int exp) {
    LaurentPoly p;
    if (c != 0) {
        p.lo_ = exp;
        p.coeffs_.push_back(std::move(c));
    }
    return p;
}

LaurentPoly LaurentPoly::geometric(int n) {
    LaurentPoly p;
    p.coeffs_.assign(static_cast<size_t>(n), BigInt(1));
    return p;
}

LaurentPoly LaurentPoly::from_coeffs(int lo, std::vector<BigInt> coeffs) {
    LaurentPoly p;
    p.lo_ = lo;
    p.coeffs_ = std::move(coeffs);
    p.trim();
    return p;
}

int LaurentPoly::min_exp() const {
    if (is_zero()) throw std::logic_error("min_exp of zero polynomial");
    return lo_;
}

int LaurentPoly::max_exp() const {
    if (is_zero()) throw std::logic_error("max_exp of zero polynomial");
    return lo_ + static_cast<int>(coeffs_.size()) - 1;
}

int LaurentPoly::term_count() const {
    int n = 0;
    for (const auto& c : coeffs_)
        if (c != 0) ++n;
    return n;
}

BigInt LaurentPoly::coeff(int exp) const {
    if (is_zero() || exp < lo_ || exp > max_exp()) return 0;
    return coeffs_[static_cast<size_t>(exp - lo_)];
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    int lo = std::min(lo_, o.lo_);
    int hi = std::max(max_exp(), o.max_exp());
    LaurentPoly r;
    r.lo_ = lo;
    r.coeffs_.assign(static_cast<size_t>(hi - lo + 1), BigInt(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        r.coeffs_[static_cast<size_t>(lo_ - lo) + i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i)
        r.coeffs_[static_cast<size_t>(o.lo_ - lo) + i] += o.coeffs_[i];
    r.trim();
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    if (is_zero() || o.is_zero()) return LaurentPoly();
    LaurentPoly r;
    r.lo_ = lo_ + o.lo_;
    r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, BigInt(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (size_t j = 0; j < o.coeffs_.size(); ++j) {
            if (o.coeffs_[j] == 0) continue;
            r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    r.trim();
    return r;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
    return lo_ == o.lo_ && coeffs_ == o.coeffs_;
}

void LaurentPoly::scale(const BigInt& c, int exp) {
    if (c == 0) {
        coeffs_.clear();
        lo_ = 0;
        return;
    }
    lo_ += exp;
    if (c != 1)
        for (auto& v : coeffs_) v *= c;
}

LaurentPoly LaurentPoly::shifted(int delta) const {
    LaurentPoly r = *this;
    if (!r.is_zero()) r.lo_ += delta;
    return r;
}

LaurentPoly LaurentPoly::mirrored() const {
    if (is_zero()) return LaurentPoly();
    LaurentPoly r;
    r.lo_ = -max_exp();
    r.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
    return r;
}

BigInt LaurentPoly::eval_one() const {
    BigInt s = 0;
    for (const auto& c : coeffs_) s += c;
    return s;
}

BigInt LaurentPoly::eval_minus_one() const {
    BigInt s = 0;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        int e = lo_ + static_cast<int>(i);
        if (e % 2 == 0)
            s += coeffs_[i];
        else
            s -= coeffs_[i];
    }
    return s;
}

BigInt LaurentPoly::eval(const BigInt& x) const {
    if (is_zero()) return 0;
    if (lo_ < 0) throw std::logic_error("eval with negative exponents");
    BigInt s = 0;
    for (size_t i = coeffs_.size(); i-- > 0;) {
        s *= x;
        s += coeffs_[i];
    }
    for (int e = 0; e < lo_; ++e) s *= x;
    return s;
}

BigInt LaurentPoly::second_derivative_at_one() const {
    BigInt s = 0;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        long long e = lo_ + static_cast<long long>(i);
        s += coeffs_[i] * e * (e - 1);
    }
    return s;
}

std::string LaurentPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        const BigInt& c = coeffs_[i];
        if (c == 0) continue;
        int e = lo_ + static_cast<int>(i);
        BigInt a = c < 0 ? BigInt(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (a != 1 || e == 0) out << a.str();
        if (e != 0) {
            if (a != 1) out << "*";
            out << "t";
            if (e != 1) out << "^" << e;
        }
    }
    return out.str();
}

LaurentPoly divide_exact(const LaurentPoly& num, const LaurentPoly& den) {
    if (den.is_zero()) throw std::logic_error("division by zero polynomial");
    if (num.is_zero()) return LaurentPoly();
    // Work on the coefficient vectors top-down; Laurent units are split off as
    // a pure exponent shift.
    const auto& a = num.coeffs();
    const auto& b = den.coeffs();
    if (a.size() < b.size()) throw std::logic_error("inexact polynomial division");
    std::vector<BigInt> rem = a;
    std::vector<BigInt> quot(a.size() - b.size() + 1, BigInt(0));
    const BigInt& lead = b.back();
    for (size_t base = quot.size(); base-- > 0;) {
        const BigInt& top = rem[base + b.size() - 1];
        if (top == 0) continue;
        if (top % lead != 0) throw std::logic_error("inexact polynomial division");
        BigInt q = top / lead;
        quot[base] = q;
        for (size_t j = 0; j < b.size(); ++j)
            rem[base + j] -= q * b[j];
    }
    for (const auto& r : rem)
        if (r != 0) throw std::logic_error("inexact polynomial division");
    return LaurentPoly::from_coeffs(num.min_exp() - den.min_exp(), std::move(quot));
}

} // namespace prism
