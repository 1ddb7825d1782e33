#include <algorithm>
#include <stdexcept>

#include "prism/burau.hpp"
#include "prism/modarith.hpp"

namespace prism {

namespace {

uint64_t bigint_mod_u64(const BigInt& v, uint64_t p) {
    BigInt r = v % p;
    if (r < 0) r += p;
    return r.convert_to<uint64_t>();
}

// Incremental CRT: residues r[i] mod primes[i], lifted to the symmetric range.
BigInt crt_symmetric(const std::vector<uint64_t>& residues, const std::vector<uint64_t>& primes) {
    BigInt value = residues[0];
    BigInt modulus = primes[0];
    for (size_t i = 1; i < primes.size(); ++i) {
        uint64_t p = primes[i];
        MontgomeryField f(p);
        uint64_t m_mod_p = bigint_mod_u64(modulus, p);
        uint64_t v_mod_p = bigint_mod_u64(value, p);
        uint64_t diff = f.sub(f.to_form(residues[i]), f.to_form(v_mod_p));
        uint64_t t = f.from_form(f.mul(diff, f.inv(f.to_form(m_mod_p))));
        value += modulus * t;
        modulus *= p;
    }
    if (value * 2 > modulus) value -= modulus;
    return value;
}

} // namespace

LaurentPoly det_one_minus_shifted(const BurauMatrix& m, long long shift) {
    const int n = m.dim();
    if (n == 0) return LaurentPoly::constant(1);

    // Normalize to a polynomial matrix: M~ = t^sigma * M, so that
    // e_j(M) = t^(-j*sigma) * e_j(M~).
    int sigma = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!m.at(i, j).is_zero() && m.at(i, j).min_exp() < -sigma)
                sigma = -m.at(i, j).min_exp();

    int dmax = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!m.at(i, j).is_zero()) dmax = std::max(dmax, m.at(i, j).max_exp() + sigma);

    // Every coefficient of every e_j(M~) is bounded in absolute value by
    // prod_i (1 + l1(row i)): a principal minor's coefficient l1-mass is at
    // most the product of its rows' l1-masses, and summing over all principal
    // minors of all orders is dominated by the product of (1 + l1_i).
    BigInt bound = 1;
    for (int i = 0; i < n; ++i) {
        BigInt l1 = 0;
        for (int j = 0; j < n; ++j)
            for (const auto& c : m.at(i, j).coeffs()) l1 += abs(c);
        bound *= 1 + l1;
    }

    std::vector<uint64_t> primes;
    {
        BigInt prod = 1;
        size_t idx = 0;
        while (prod <= 2 * bound) {
            primes.push_back(nth_verification_prime(idx++));
            prod *= primes.back();
        }
    }

    const size_t max_points = static_cast<size_t>(n) * static_cast<size_t>(dmax) + 1;
    // residues[prime][j-1][exp] for e_j, exp in [0, j*dmax]
    std::vector<std::vector<std::vector<uint64_t>>> residues(primes.size());

    // Sparse term list of M~: most entries of reduced cycle powers are single
    // monomials, so evaluation through a power table beats dense Horner.
    struct MatTerm {
        int cell;
        int exp;
        BigInt coeff;
    };
    std::vector<MatTerm> terms;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const LaurentPoly& e = m.at(i, j);
            if (e.is_zero()) continue;
            for (size_t c = 0; c < e.coeffs().size(); ++c) {
                if (e.coeffs()[c] == 0) continue;
                terms.push_back({i * n + j, e.lo() + static_cast<int>(c) + sigma, e.coeffs()[c]});
            }
        }

    for (size_t pi = 0; pi < primes.size(); ++pi) {
        MontgomeryField f(primes[pi]);
        std::vector<uint64_t> coeff_mod(terms.size());
        for (size_t ti = 0; ti < terms.size(); ++ti)
            coeff_mod[ti] = f.to_form(bigint_mod_u64(terms[ti].coeff, f.modulus()));

        // vals[j-1][point] = e_j(M~)(x) mod p
        std::vector<std::vector<uint64_t>> vals(static_cast<size_t>(n),
                                                std::vector<uint64_t>(max_points));
        std::vector<std::vector<uint64_t>> a(static_cast<size_t>(n),
                                             std::vector<uint64_t>(static_cast<size_t>(n)));
        std::vector<uint64_t> xpow(static_cast<size_t>(dmax) + 1);
        for (size_t pt = 0; pt < max_points; ++pt) {
            uint64_t x = f.to_form(pt + 1);
            xpow[0] = f.one();
            for (int e = 1; e <= dmax; ++e) xpow[static_cast<size_t>(e)] = f.mul(xpow[static_cast<size_t>(e - 1)], x);
            for (auto& row : a) std::fill(row.begin(), row.end(), 0);
            for (size_t ti = 0; ti < terms.size(); ++ti) {
                uint64_t v = f.mul(coeff_mod[ti], xpow[static_cast<size_t>(terms[ti].exp)]);
                auto& cellv = a[static_cast<size_t>(terms[ti].cell / n)][static_cast<size_t>(terms[ti].cell % n)];
                cellv = f.add(cellv, v);
            }
            std::vector<uint64_t> cp = charpoly_mod(a, f);
            for (int j = 1; j <= n; ++j) {
                uint64_t v = cp[static_cast<size_t>(n - j)];
                vals[static_cast<size_t>(j - 1)][pt] = (j % 2 == 1) ? f.neg(v) : v;
            }
        }

        residues[pi].resize(static_cast<size_t>(n));
        for (int j = 1; j <= n; ++j) {
            size_t pts = static_cast<size_t>(j) * static_cast<size_t>(dmax) + 1;
            std::vector<uint64_t> yj(vals[static_cast<size_t>(j - 1)].begin(),
                                     vals[static_cast<size_t>(j - 1)].begin() + static_cast<long>(pts));
            std::vector<uint64_t> coeffs = interpolate_consecutive_mod(yj, f);
            for (auto& c : coeffs) c = f.from_form(c);
            residues[pi][static_cast<size_t>(j - 1)] = std::move(coeffs);
        }
    }

    // CRT-lift each coefficient and assemble
    //   det(I - t^shift M) = sum_j (-1)^j t^(j*(shift - sigma)) e_j(M~).
    const long long step = shift - sigma;
    long long lo = 0, hi = 0;
    for (int j = 1; j <= n; ++j) {
        lo = std::min(lo, static_cast<long long>(j) * step);
        hi = std::max(hi, static_cast<long long>(j) * step + static_cast<long long>(j) * dmax);
    }
    std::vector<BigInt> dense(static_cast<size_t>(hi - lo + 1), BigInt(0));
    dense[static_cast<size_t>(-lo)] += 1; // j = 0 term
    std::vector<uint64_t> rs(primes.size());
    for (int j = 1; j <= n; ++j) {
        size_t pts = static_cast<size_t>(j) * static_cast<size_t>(dmax) + 1;
        for (size_t e = 0; e < pts; ++e) {
            for (size_t pi = 0; pi < primes.size(); ++pi)
                rs[pi] = residues[pi][static_cast<size_t>(j - 1)][e];
            BigInt c = crt_symmetric(rs, primes);
            if (c == 0) continue;
            if (j % 2 == 1) c = -c;
            long long exp = static_cast<long long>(j) * step + static_cast<long long>(e);
            dense[static_cast<size_t>(exp - lo)] += c;
        }
    }
    return LaurentPoly::from_coeffs(static_cast<int>(lo), std::move(dense));
}

LaurentPoly alexander_polynomial(const BraidWord& b) {
    if (closure_components(b) != 1)
        throw std::invalid_argument("closure is not a knot");
    const int n = b.strands;

    // Pull the leading full-twist block out as a power of t:
    // b((sigma_1...sigma_{n-1})^n) = t^n * I. When the residue exceeds n/2 it
    // is cheaper to run the inverse cycle and shift one more full twist, which
    // keeps the matrix entry degrees small on both sides.
    size_t rest_begin = 0;
    long long runs = count_full_twist_runs(b.letters, n - 1, rest_begin);
    long long whole = runs / n;
    long long part = runs % n;
    long long shift = whole * n;

    BurauMatrix m = BurauMatrix::identity(n - 1);
    if (part * 2 <= n) {
        for (long long rep = 0; rep < part; ++rep)
            for (int g = 1; g <= n - 1; ++g) m.right_multiply_letter(g);
    } else {
        shift += n;
        for (long long rep = 0; rep < n - part; ++rep)
            for (int g = n - 1; g >= 1; --g) m.right_multiply_letter(-g);
    }
    for (size_t i = rest_begin; i < b.letters.size(); ++i)
        m.right_multiply_letter(b.letters[i]);

    LaurentPoly det = det_one_minus_shifted(m, shift);
    LaurentPoly quot = divide_exact(det, LaurentPoly::geometric(n));
    if (quot.is_zero())
        throw std::logic_error("Alexander polynomial vanished for a knot closure");

    // Normalize: symmetric exponent window, value 1 at t = 1.
    long long center = static_cast<long long>(quot.min_exp()) + quot.max_exp();
    if (center % 2 != 0)
        throw std::logic_error("Alexander polynomial cannot be centered");
    quot = quot.shifted(static_cast<int>(-center / 2));
    BigInt at_one = quot.eval_one();
    if (at_one == -1)
        quot.scale(-1);
    else if (at_one != 1)
        throw std::logic_error("Alexander normalization failed: Delta(1) != +-1");
    if (!quot.is_symmetric())
        throw std::logic_error("Alexander polynomial is not symmetric");
    return quot;
}

} // namespace prism
