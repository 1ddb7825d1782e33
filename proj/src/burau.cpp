#include "prism/burau.hpp"

#include <stdexcept>

namespace prism {

BurauMatrix::BurauMatrix(int dim) {
    if (dim < 0) throw std::invalid_argument("negative dimension");
    rows_.assign(static_cast<size_t>(dim), std::vector<LaurentPoly>(static_cast<size_t>(dim)));
}

BurauMatrix BurauMatrix::identity(int dim) {
    BurauMatrix m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = LaurentPoly::constant(1);
    return m;
}

BurauMatrix BurauMatrix::operator*(const BurauMatrix& o) const {
    if (dim() != o.dim()) throw std::invalid_argument("dimension mismatch");
    BurauMatrix r(dim());
    for (int i = 0; i < dim(); ++i)
        for (int k = 0; k < dim(); ++k) {
            const LaurentPoly& a = at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < dim(); ++j) {
                const LaurentPoly& b = o.at(k, j);
                if (b.is_zero()) continue;
                r.at(i, j) += a * b;
            }
        }
    return r;
}

bool BurauMatrix::is_identity() const { return *this == identity(dim()); }

void BurauMatrix::right_multiply_letter(int g) {
    int i = g > 0 ? g : -g;
    if (i < 1 || i > dim()) throw std::invalid_argument("letter out of range");
    size_t c = static_cast<size_t>(i - 1); // column of sigma_i in 0-based indexing
    const LaurentPoly t = LaurentPoly::monomial(1, 1);
    const LaurentPoly tinv = LaurentPoly::monomial(1, -1);
    for (auto& row : rows_) {
        LaurentPoly old = row[c];
        if (old.is_zero()) continue;
        if (g > 0) {
            // columns: c-1 += t*c, c+1 += c, c *= -t
            if (c > 0) row[c - 1] += t * old;
            if (c + 1 < row.size()) row[c + 1] += old;
            old.scale(-1, 1);
        } else {
            // inverse letter: c-1 += c, c+1 += t^-1*c, c *= -t^-1
            if (c > 0) row[c - 1] += old;
            if (c + 1 < row.size()) row[c + 1] += tinv * old;
            old.scale(-1, -1);
        }
        row[c] = std::move(old);
    }
}

LaurentPoly BurauMatrix::det_bareiss() const {
    const int n = dim();
    if (n == 0) return LaurentPoly::constant(1);
    std::vector<std::vector<LaurentPoly>> a = rows_;
    LaurentPoly prev = LaurentPoly::constant(1);
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (a[static_cast<size_t>(k)][static_cast<size_t>(k)].is_zero()) {
            int r = k + 1;
            while (r < n && a[static_cast<size_t>(r)][static_cast<size_t>(k)].is_zero()) ++r;
            if (r == n) return LaurentPoly();
            std::swap(a[static_cast<size_t>(k)], a[static_cast<size_t>(r)]);
            sign = -sign;
        }
        const auto& pivot = a[static_cast<size_t>(k)][static_cast<size_t>(k)];
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                LaurentPoly num = pivot * a[static_cast<size_t>(i)][static_cast<size_t>(j)] -
                                  a[static_cast<size_t>(i)][static_cast<size_t>(k)] *
                                      a[static_cast<size_t>(k)][static_cast<size_t>(j)];
                a[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    num.is_zero() ? LaurentPoly() : divide_exact(num, prev);
            }
            a[static_cast<size_t>(i)][static_cast<size_t>(k)] = LaurentPoly();
        }
        prev = pivot;
    }
    LaurentPoly det = a[static_cast<size_t>(n - 1)][static_cast<size_t>(n - 1)];
    if (sign < 0) det.scale(-1);
    return det;
}

BurauMatrix burau_letter(int g, int strands) {
    if (g == 0 || std::abs(g) > strands - 1) throw std::invalid_argument("letter out of range");
    BurauMatrix m = BurauMatrix::identity(strands - 1);
    m.right_multiply_letter(g);
    return m;
}

BurauMatrix burau_of_word(const BraidWord& b) {
    BurauMatrix m = BurauMatrix::identity(b.strands - 1);
    for (int g : b.letters) m.right_multiply_letter(g);
    return m;
}

IntMatrix::IntMatrix(int dim) {
    if (dim < 0) throw std::invalid_argument("negative dimension");
    rows_.assign(static_cast<size_t>(dim), std::vector<BigInt>(static_cast<size_t>(dim), BigInt(0)));
}

IntMatrix IntMatrix::identity(int dim) {
    IntMatrix m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (dim() != o.dim()) throw std::invalid_argument("dimension mismatch");
    IntMatrix r(dim());
    for (int i = 0; i < dim(); ++i)
        for (int k = 0; k < dim(); ++k) {
            const BigInt& a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < dim(); ++j) {
                const BigInt& b = o.at(k, j);
                if (b == 0) continue;
                r.at(i, j) += a * b;
            }
        }
    return r;
}

IntMatrix IntMatrix::pow(long long e) const {
    if (e < 0) throw std::invalid_argument("negative matrix power");
    IntMatrix acc = identity(dim());
    IntMatrix base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        if (e >>= 1) base = base * base;
    }
    return acc;
}

void IntMatrix::right_multiply_letter_neg1(int g) {
    int i = g > 0 ? g : -g;
    if (i < 1 || i > dim()) throw std::invalid_argument("letter out of range");
    size_t c = static_cast<size_t>(i - 1);
    for (auto& row : rows_) {
        const BigInt old = row[c];
        if (old == 0) continue;
        if (g > 0) {
            if (c > 0) row[c - 1] -= old; // t = -1
            if (c + 1 < row.size()) row[c + 1] += old;
            // column c scales by -t = 1
        } else {
            if (c > 0) row[c - 1] += old;
            if (c + 1 < row.size()) row[c + 1] -= old; // t^-1 = -1
            // column c scales by -t^-1 = 1
        }
    }
}

BigInt IntMatrix::det_bareiss() const {
    const int n = dim();
    if (n == 0) return 1;
    std::vector<std::vector<BigInt>> a = rows_;
    BigInt prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (a[static_cast<size_t>(k)][static_cast<size_t>(k)] == 0) {
            int r = k + 1;
            while (r < n && a[static_cast<size_t>(r)][static_cast<size_t>(k)] == 0) ++r;
            if (r == n) return 0;
            std::swap(a[static_cast<size_t>(k)], a[static_cast<size_t>(r)]);
            sign = -sign;
        }
        const BigInt pivot = a[static_cast<size_t>(k)][static_cast<size_t>(k)];
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                BigInt num = pivot * a[static_cast<size_t>(i)][static_cast<size_t>(j)] -
                             a[static_cast<size_t>(i)][static_cast<size_t>(k)] *
                                 a[static_cast<size_t>(k)][static_cast<size_t>(j)];
                a[static_cast<size_t>(i)][static_cast<size_t>(j)] = num / prev;
            }
            a[static_cast<size_t>(i)][static_cast<size_t>(k)] = 0;
        }
        prev = pivot;
    }
    BigInt det = a[static_cast<size_t>(n - 1)][static_cast<size_t>(n - 1)];
    return sign < 0 ? BigInt(-det) : det;
}

IntMatrix burau_neg1_of_word(const BraidWord& b) {
    IntMatrix m = IntMatrix::identity(b.strands - 1);
    for (int g : b.letters) m.right_multiply_letter_neg1(g);
    return m;
}

IntMatrix twist_block_closed_form(int B, int m) {
    if (B < 1 || B % 2 == 0) throw std::invalid_argument("closed form requires odd B");
    if (m < 0) throw std::invalid_argument("negative half-twist power");
    const int n = B + 1;
    IntMatrix a = IntMatrix::identity(n);
    if (m % 2 == 0) {
        // Identity plus a last column of alternating m's: (m,0,...,m,1)^t.
        for (int r = 1; r <= B; r += 2) a.at(r - 1, n - 1) = m;
        return a;
    }
    const int half = n / 2; // (B+1)/2
    const int eps = (half % 2 == 1) ? 1 : -1;
    IntMatrix o(n);
    // Column `half` is constant except for the last row; the shifted identity
    // quadrants carry the opposite sign. Both signs flip with the parity of
    // (B+1)/2.
    for (int r = 1; r <= n - 1; ++r) o.at(r - 1, half - 1) = eps;
    for (int r = 1; r <= half - 1; ++r) {
        o.at(r - 1, half + r - 1) = -eps;
        o.at(half + r - 1, r - 1) = -eps;
    }
    // Last column: rows above the fold alternate (m+1, 0, m+1, 0, ...); from
    // the fold down they alternate between m on odd rows and 1 on even rows.
    for (int r = 1; r <= half - 1; ++r)
        if (r % 2 == 1) o.at(r - 1, n - 1) = m + 1;
    for (int r = half; r <= n; ++r) o.at(r - 1, n - 1) = (r % 2 == 1) ? m : 1;
    return o;
}

// Number of leading repetitions of the full ascending run (1, 2, ..., run_top)
// in `letters`; rest_begin is set to the first letter index past them.
long long count_full_twist_runs(const std::vector<int>& letters, int run_top, size_t& rest_begin) {
    long long runs = 0;
    size_t i = 0;
    while (i + static_cast<size_t>(run_top) <= letters.size()) {
        bool full = true;
        for (int g = 1; g <= run_top; ++g)
            if (letters[i + static_cast<size_t>(g - 1)] != g) {
                full = false;
                break;
            }
        if (!full) break;
        i += static_cast<size_t>(run_top);
        ++runs;
    }
    rest_begin = i;
    return runs;
}

BigInt knot_determinant(const BraidWord& b) {
    if (closure_components(b) != 1)
        throw std::invalid_argument("closure is not a knot");
    BraidWord w = b;
    if (w.strands % 2 == 0) {
        // Markov stabilization K sigma_n: odd strand count makes the
        // (1-t)/(1-t^n) factor equal 1 at t = -1.
        w.letters.push_back(w.strands);
        w.strands += 1;
    }
    size_t rest_begin = 0;
    long long runs = count_full_twist_runs(w.letters, b.strands - 1, rest_begin);
    IntMatrix block = IntMatrix::identity(w.strands - 1);
    for (int g = 1; g <= b.strands - 1; ++g) block.right_multiply_letter_neg1(g);
    IntMatrix acc = block.pow(runs);
    for (size_t i = rest_begin; i < w.letters.size(); ++i)
        acc.right_multiply_letter_neg1(w.letters[i]);
    IntMatrix im = IntMatrix::identity(w.strands - 1);
    for (int i = 0; i < im.dim(); ++i)
        for (int j = 0; j < im.dim(); ++j) im.at(i, j) -= acc.at(i, j);
    BigInt det = im.det_bareiss();
    return det < 0 ? BigInt(-det) : det;
}

} // namespace prism
