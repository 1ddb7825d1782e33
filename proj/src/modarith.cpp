#include "prism/modarith.hpp"

#include <stdexcept>

namespace prism {

MontgomeryField::MontgomeryField(uint64_t p) : p_(p) {
    if (p < 3 || p % 2 == 0) throw std::invalid_argument("modulus must be an odd prime");
    // Newton iteration for p^-1 mod 2^64, then negate.
    uint64_t inv = p;
    for (int i = 0; i < 5; ++i) inv *= 2 - p * inv;
    ninv_ = ~inv + 1;
    r1_ = (~uint64_t{0}) % p + 1;
    if (r1_ == p) r1_ = 0;
    unsigned __int128 r2 = static_cast<unsigned __int128>(r1_) * r1_;
    r2_ = static_cast<uint64_t>(r2 % p);
}

uint64_t MontgomeryField::pow(uint64_t base, uint64_t e) const {
    uint64_t acc = one();
    while (e) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

namespace {

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m) {
    uint64_t acc = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) acc = mulmod_u64(acc, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return acc;
}

} // namespace

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    uint64_t d = n - 1;
    int s = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++s;
    }
    // Deterministic Miller-Rabin base set for 64-bit inputs.
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

uint64_t nth_verification_prime(size_t index) {
    uint64_t candidate = (uint64_t{1} << 62) - 1;
    size_t found = 0;
    for (;; candidate -= 2) {
        if (is_prime_u64(candidate)) {
            if (found == index) return candidate;
            ++found;
        }
    }
}

std::vector<uint64_t> charpoly_mod(std::vector<std::vector<uint64_t>> a,
                                   const MontgomeryField& f) {
    const size_t n = a.size();
    for (const auto& row : a)
        if (row.size() != n) throw std::invalid_argument("charpoly_mod: matrix not square");
    // Similarity reduction to upper Hessenberg form.
    for (size_t j = 0; j + 2 < n; ++j) {
        size_t pivot = j + 1;
        while (pivot < n && a[pivot][j] == 0) ++pivot;
        if (pivot == n) continue;
        if (pivot != j + 1) {
            std::swap(a[pivot], a[j + 1]);
            for (size_t r = 0; r < n; ++r) std::swap(a[r][pivot], a[r][j + 1]);
        }
        uint64_t pinv = f.inv(a[j + 1][j]);
        for (size_t i = j + 2; i < n; ++i) {
            if (a[i][j] == 0) continue;
            uint64_t factor = f.mul(a[i][j], pinv);
            for (size_t c = j; c < n; ++c) a[i][c] = f.sub(a[i][c], f.mul(factor, a[j + 1][c]));
            for (size_t r = 0; r < n; ++r) a[r][j + 1] = f.add(a[r][j + 1], f.mul(factor, a[r][i]));
        }
    }
    // p_k = charpoly of the leading k x k block, expanded along the last row:
    // p_k = (x - a_kk) p_{k-1} - sum_i a_{i,k} (prod subdiagonals) p_{i-1}.
    std::vector<std::vector<uint64_t>> p(n + 1);
    p[0] = {f.one()};
    for (size_t k = 1; k <= n; ++k) {
        p[k].assign(k + 1, 0);
        const auto& prev = p[k - 1];
        for (size_t i = 0; i < prev.size(); ++i) {
            p[k][i + 1] = f.add(p[k][i + 1], prev[i]);
            p[k][i] = f.sub(p[k][i], f.mul(a[k - 1][k - 1], prev[i]));
        }
        uint64_t subprod = f.one();
        for (size_t i = k - 1; i-- > 0;) {
            subprod = f.mul(subprod, a[i + 1][i]);
            if (subprod == 0) break;
            uint64_t factor = f.mul(a[i][k - 1], subprod);
            if (factor == 0) continue;
            for (size_t c = 0; c < p[i].size(); ++c)
                p[k][c] = f.sub(p[k][c], f.mul(factor, p[i][c]));
        }
    }
    return p[n];
}

namespace {

std::vector<uint64_t> newton_to_monomial(const std::vector<uint64_t>& xs,
                                         const std::vector<uint64_t>& dd,
                                         const MontgomeryField& f);

} // namespace

std::vector<uint64_t> interpolate_mod(const std::vector<uint64_t>& xs,
                                      const std::vector<uint64_t>& ys,
                                      const MontgomeryField& f) {
    const size_t n = xs.size();
    if (ys.size() != n) throw std::invalid_argument("interpolate_mod: size mismatch");
    if (n == 0) return {};
    // Divided differences in place.
    std::vector<uint64_t> dd = ys;
    for (size_t level = 1; level < n; ++level) {
        for (size_t i = n - 1; i >= level; --i) {
            uint64_t num = f.sub(dd[i], dd[i - 1]);
            uint64_t den = f.sub(xs[i], xs[i - level]);
            dd[i] = f.mul(num, f.inv(den));
            if (i == level) break;
        }
    }
    return newton_to_monomial(xs, dd, f);
}

std::vector<uint64_t> interpolate_consecutive_mod(const std::vector<uint64_t>& ys,
                                                  const MontgomeryField& f) {
    const size_t n = ys.size();
    if (n == 0) return {};
    std::vector<uint64_t> xs(n);
    for (size_t i = 0; i < n; ++i) xs[i] = f.to_form(i + 1);
    std::vector<uint64_t> dd = ys;
    for (size_t level = 1; level < n; ++level) {
        uint64_t inv_level = f.inv(f.to_form(level));
        for (size_t i = n - 1; i >= level; --i) {
            dd[i] = f.mul(f.sub(dd[i], dd[i - 1]), inv_level);
            if (i == level) break;
        }
    }
    return newton_to_monomial(xs, dd, f);
}

namespace {

std::vector<uint64_t> newton_to_monomial(const std::vector<uint64_t>& xs,
                                         const std::vector<uint64_t>& dd,
                                         const MontgomeryField& f) {
    const size_t n = xs.size();
    // Expand the Newton form to monomial coefficients.
    std::vector<uint64_t> coeffs(n, 0);
    std::vector<uint64_t> basis(n, 0); // prod (x - xs[j]), j < level
    basis[0] = f.one();
    size_t basis_deg = 0;
    for (size_t level = 0; level < n; ++level) {
        if (dd[level] != 0)
            for (size_t c = 0; c <= basis_deg; ++c)
                coeffs[c] = f.add(coeffs[c], f.mul(dd[level], basis[c]));
        if (level + 1 < n) {
            // basis *= (x - xs[level])
            uint64_t negx = f.neg(xs[level]);
            ++basis_deg;
            for (size_t c = basis_deg; c >= 1; --c)
                basis[c] = f.add(basis[c - 1], f.mul(negx, basis[c]));
            basis[0] = f.mul(basis[0], negx);
        }
    }
    return coeffs;
}

} // namespace

} // namespace prism
