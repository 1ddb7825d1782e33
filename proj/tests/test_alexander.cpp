#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <random>

#include "prism/burau.hpp"

using namespace prism;

namespace {

LaurentPoly t_pow(int e) { return LaurentPoly::monomial(1, e); }

// Independent oracle: det(I - burau) via the direct fraction-free determinant
// over Z[t, t^-1], then the same quotient and normalization steps.
LaurentPoly alexander_by_bareiss(const BraidWord& b) {
    BurauMatrix m = burau_of_word(b);
    BurauMatrix im = BurauMatrix::identity(m.dim());
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) im.at(i, j) -= m.at(i, j);
    LaurentPoly det = im.det_bareiss();
    LaurentPoly q = divide_exact(det, LaurentPoly::geometric(b.strands));
    long long center = static_cast<long long>(q.min_exp()) + q.max_exp();
    REQUIRE(center % 2 == 0);
    q = q.shifted(static_cast<int>(-center / 2));
    if (q.eval_one() == -1) q.scale(-1);
    REQUIRE(q.eval_one() == 1);
    return q;
}

// Torus knot closed form: (t^(pq) - 1)(t - 1) / ((t^p - 1)(t^q - 1)),
// centered symmetrically.
LaurentPoly torus_knot_alexander(int p, int q) {
    auto power_minus_one = [](int e) { return t_pow(e) - LaurentPoly::constant(1); };
    LaurentPoly num = power_minus_one(p * q) * power_minus_one(1);
    LaurentPoly den = power_minus_one(p) * power_minus_one(q);
    LaurentPoly r = divide_exact(num, den);
    long long center = static_cast<long long>(r.min_exp()) + r.max_exp();
    r = r.shifted(static_cast<int>(-center / 2));
    if (r.eval_one() == -1) r.scale(-1);
    return r;
}

} // namespace

TEST_CASE("small knots") {
    // Trefoil: t - 1 + t^-1
    LaurentPoly tre = alexander_polynomial(BraidWord(2, {1, 1, 1}));
    CHECK(tre == t_pow(1) - LaurentPoly::constant(1) + t_pow(-1));

    // Figure eight: -t + 3 - t^-1
    LaurentPoly fig8 = alexander_polynomial(BraidWord(3, {1, -2, 1, -2}));
    CHECK(fig8 == -t_pow(1) + LaurentPoly::constant(3) - t_pow(-1));

    // Unknot as sigma_1 on 2 strands.
    CHECK(alexander_polynomial(BraidWord(2, {1})) == LaurentPoly::constant(1));
}

TEST_CASE("rejects links") {
    CHECK_THROWS_AS(alexander_polynomial(BraidWord(2, {1, 1})), std::invalid_argument);
    CHECK_THROWS_AS(knot_determinant(BraidWord(2, {1, 1})), std::invalid_argument);
}

TEST_CASE("torus knot closed form oracle") {
    for (auto [p, q] : {std::pair{2, 3}, {2, 5}, {2, 7}, {3, 4}, {3, 5}, {4, 5}, {5, 6}}) {
        std::vector<int> letters;
        for (int r = 0; r < q; ++r)
            for (int g = 1; g < p; ++g) letters.push_back(g);
        BraidWord w(p, letters);
        REQUIRE(closure_components(w) == 1);
        CHECK(alexander_polynomial(w) == torus_knot_alexander(p, q));
    }
}

TEST_CASE("modular engine agrees with direct bareiss on random knots") {
    std::mt19937 rng(17);
    int checked = 0;
    for (int trial = 0; trial < 200 && checked < 25; ++trial) {
        int n = 2 + static_cast<int>(rng() % 4);
        std::vector<int> ls;
        int len = 1 + static_cast<int>(rng() % 10);
        for (int i = 0; i < len; ++i) {
            int g = 1 + static_cast<int>(rng() % static_cast<unsigned>(n - 1));
            ls.push_back(rng() % 2 ? g : -g);
        }
        BraidWord w(n, ls);
        if (closure_components(w) != 1) continue;
        ++checked;
        CHECK(alexander_polynomial(w) == alexander_by_bareiss(w));
    }
    CHECK(checked == 25);

    // a few larger words, including twist-block prefixes that exercise the
    // power reduction
    int big_checked = 0;
    for (int trial = 0; trial < 200 && big_checked < 8; ++trial) {
        int n = 4 + static_cast<int>(rng() % 5);
        std::vector<int> ls;
        int prefix = static_cast<int>(rng() % 4);
        for (int r = 0; r < prefix; ++r)
            for (int g = 1; g < n; ++g) ls.push_back(g);
        int len = 5 + static_cast<int>(rng() % 30);
        for (int i = 0; i < len; ++i) {
            int g = 1 + static_cast<int>(rng() % static_cast<unsigned>(n - 1));
            ls.push_back(rng() % 2 ? g : -g);
        }
        BraidWord w(n, ls);
        if (closure_components(w) != 1) continue;
        ++big_checked;
        CHECK(alexander_polynomial(w) == alexander_by_bareiss(w));
    }
    CHECK(big_checked == 8);
}

TEST_CASE("determinant pipelines agree") {
    std::mt19937 rng(41);
    int checked = 0;
    while (checked < 15) {
        int n = 2 + static_cast<int>(rng() % 4);
        std::vector<int> ls;
        int len = 1 + static_cast<int>(rng() % 12);
        for (int i = 0; i < len; ++i) {
            int g = 1 + static_cast<int>(rng() % static_cast<unsigned>(n - 1));
            ls.push_back(rng() % 2 ? g : -g);
        }
        BraidWord w(n, ls);
        if (closure_components(w) != 1) continue;
        ++checked;
        BigInt ev = alexander_polynomial(w).eval_minus_one();
        CHECK(knot_determinant(w) == (ev < 0 ? BigInt(-ev) : ev));
    }
}

TEST_CASE("symmetry and normalization on a larger instance") {
    // Family-style word: (sigma_1..sigma_13)^20 (sigma_1..sigma_7)^-3.
    BraidWord w = TwistedTorusSpec(14, 20, 7, -3, TailOrder::Ascending).expand();
    LaurentPoly d = alexander_polynomial(w);
    CHECK(d.eval_one() == 1);
    CHECK(d.is_symmetric());
    BigInt det = d.eval_minus_one();
    CHECK((det < 0 ? BigInt(-det) : det) == knot_determinant(w));
    CHECK(knot_determinant(w) == 39);  // p = 22s+39 at s = 0
}
