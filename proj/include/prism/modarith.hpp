#pragma once

#include <cstdint>
#include <vector>

namespace prism {

// Montgomery arithmetic modulo a fixed odd prime p < 2^62. Values are kept in
// Montgomery form; to_form/from_form convert at the boundaries.
class MontgomeryField {
public:
    explicit MontgomeryField(uint64_t p);

    uint64_t modulus() const { return p_; }
    uint64_t one() const { return r1_; }

    uint64_t to_form(uint64_t x) const { return mul(x % p_, r2_); }
    uint64_t from_form(uint64_t x) const { return reduce(static_cast<unsigned __int128>(x)); }

    uint64_t add(uint64_t a, uint64_t b) const {
        uint64_t s = a + b;
        if (s >= p_) s -= p_;
        return s;
    }
    uint64_t sub(uint64_t a, uint64_t b) const { return a >= b ? a - b : a + p_ - b; }
    uint64_t neg(uint64_t a) const { return a == 0 ? 0 : p_ - a; }
    uint64_t mul(uint64_t a, uint64_t b) const {
        return reduce(static_cast<unsigned __int128>(a) * b);
    }
    uint64_t pow(uint64_t base, uint64_t e) const;
    uint64_t inv(uint64_t a) const { return pow(a, p_ - 2); }

private:
    uint64_t reduce(unsigned __int128 x) const {
        uint64_t m = static_cast<uint64_t>(x) * ninv_;
        unsigned __int128 t = x + static_cast<unsigned __int128>(m) * p_;
        uint64_t r = static_cast<uint64_t>(t >> 64);
        if (r >= p_) r -= p_;
        return r;
    }

    uint64_t p_;
    uint64_t ninv_; // -p^-1 mod 2^64
    uint64_t r1_;   // 2^64 mod p
    uint64_t r2_;   // 2^128 mod p
};

bool is_prime_u64(uint64_t n);

// Deterministic descending sequence of primes just below 2^62.
uint64_t nth_verification_prime(size_t index);

// Characteristic polynomial det(xI - A) of a square matrix over Z/p, entries
// in Montgomery form, via Hessenberg reduction. Returns the monic coefficient
// vector c with c[i] the coefficient of x^i (size n+1, c[n] = 1).
std::vector<uint64_t> charpoly_mod(std::vector<std::vector<uint64_t>> a,
                                   const MontgomeryField& f);

// Newton interpolation through (xs[i], ys[i]), all in Montgomery form with
// distinct nodes; returns monomial-basis coefficients (size xs.size()).
std::vector<uint64_t> interpolate_mod(const std::vector<uint64_t>& xs,
                                      const std::vector<uint64_t>& ys,
                                      const MontgomeryField& f);

// Same through the nodes x = 1, 2, ..., ys.size(); the unit spacing makes
// every divided-difference denominator a small constant, so only one modular
// inversion per level is needed.
std::vector<uint64_t> interpolate_consecutive_mod(const std::vector<uint64_t>& ys,
                                                  const MontgomeryField& f);

} // namespace prism
