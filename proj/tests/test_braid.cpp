#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <random>

#include "prism/braid.hpp"

using namespace prism;

TEST_CASE("parse basic forms") {
    BraidWord w = parse_braid("6 | (1..5)^4 (1..3)^1");
    CHECK(w.strands == 6);
    CHECK(w.length() == 23);

    BraidWord simple = parse_braid("2 | 1 1 1");
    CHECK(simple.strands == 2);
    CHECK(simple.letters == std::vector<int>{1, 1, 1});

    // Negative exponent on a range expands as the group-word inverse.
    BraidWord spor = parse_braid("18 | (1..17)^7 (2..1)^-2");
    CHECK(spor.strands == 18);
    CHECK(spor.length() == 17 * 7 + 4);
    std::vector<int> tail(spor.letters.end() - 4, spor.letters.end());
    CHECK(tail == std::vector<int>{-1, -2, -1, -2});
}

TEST_CASE("parse errors carry a position") {
    CHECK_THROWS_AS(parse_braid("abc"), BraidParseError);
    CHECK_THROWS_AS(parse_braid("4 | 5"), BraidParseError);     // index out of range
    CHECK_THROWS_AS(parse_braid("4 | (1..9)^2"), BraidParseError);
    CHECK_THROWS_AS(parse_braid("4 | 0"), BraidParseError);
    CHECK_THROWS_AS(parse_braid("4"), BraidParseError);
    CHECK_THROWS_AS(parse_braid("4 | (1..2)^"), BraidParseError);
    try {
        parse_braid("4 | (1..2)3");
    } catch (const BraidParseError& e) {
        CHECK(e.position > 0);
    }
}

TEST_CASE("parse-print roundtrip") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 2 + static_cast<int>(rng() % 6);
        std::vector<int> letters;
        int len = static_cast<int>(rng() % 12);
        for (int i = 0; i < len; ++i) {
            int g = 1 + static_cast<int>(rng() % static_cast<unsigned>(n - 1));
            letters.push_back(rng() % 2 ? g : -g);
        }
        if (letters.empty()) letters.push_back(1);
        BraidWord w(n, letters);
        BraidWord reparsed = parse_braid(w.to_string());
        CHECK(reparsed.strands == w.strands);
        CHECK(reparsed.letters == w.letters);
        CHECK(w.concat(reparsed).length() == 2 * w.length());
    }
}

TEST_CASE("expand twisted torus specs") {
    TwistedTorusSpec fig2(6, 4, 3, 1, TailOrder::Ascending);
    BraidWord w = fig2.expand();
    CHECK(w.strands == 6);
    CHECK(w.length() == 23);

    TwistedTorusSpec fig3(8, 5, 7, 2, TailOrder::Descending);
    BraidWord v = fig3.expand();
    CHECK(v.length() == 7 * 5 + 14);
    std::vector<int> tail(v.letters.end() - 7, v.letters.end());
    CHECK(tail == std::vector<int>{7, 6, 5, 4, 3, 2, 1});

    // Negative tail exponent expands with inverse letters in reversed order.
    TwistedTorusSpec neg(14, 20, 7, -3, TailOrder::Ascending);
    BraidWord u = neg.expand();
    std::vector<int> utail(u.letters.end() - 7, u.letters.end());
    CHECK(utail == std::vector<int>{-7, -6, -5, -4, -3, -2, -1});

    CHECK_THROWS_AS(TwistedTorusSpec(2, 3, 1, 1, TailOrder::Ascending), std::invalid_argument);
    CHECK_THROWS_AS(TwistedTorusSpec(6, 4, 6, 1, TailOrder::Ascending), std::invalid_argument);
    CHECK_THROWS_AS(TwistedTorusSpec(6, 4, 3, 0, TailOrder::Ascending), std::invalid_argument);
    CHECK_THROWS_AS(TwistedTorusSpec(6, 0, 3, 1, TailOrder::Ascending), std::invalid_argument);
}

TEST_CASE("braid permutation convention") {
    // sigma_1 sigma_2 sigma_3 on 4 strands: 1->4, 2->1, 3->2, 4->3.
    BraidWord w(4, {1, 2, 3});
    Permutation p = braid_permutation(w);
    CHECK(p.apply(1) == 4);
    CHECK(p.apply(2) == 1);
    CHECK(p.apply(3) == 2);
    CHECK(p.apply(4) == 3);

    CHECK(braid_permutation(BraidWord(5, {})) == Permutation(5));

    // Full twist block to the fourth power moves every strand down by k mod B.
    BraidWord t64 = TwistedTorusSpec(6, 4, 3, 1, TailOrder::Ascending).expand();
    BraidWord block(6, std::vector<int>(t64.letters.begin(), t64.letters.begin() + 20));
    Permutation q = braid_permutation(block);
    for (int i = 1; i <= 6; ++i) CHECK(q.apply(i) == ((i - 4 - 1) % 6 + 6) % 6 + 1);
}

TEST_CASE("permutation homomorphism") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + static_cast<int>(rng() % 5);
        auto random_word = [&](int len) {
            std::vector<int> ls;
            for (int i = 0; i < len; ++i) {
                int g = 1 + static_cast<int>(rng() % static_cast<unsigned>(n - 1));
                ls.push_back(rng() % 2 ? g : -g);
            }
            return BraidWord(n, ls);
        };
        BraidWord u = random_word(static_cast<int>(rng() % 8));
        BraidWord v = random_word(static_cast<int>(rng() % 8));
        // Letters act left to right: perm(u v) = perm(v) after perm(u).
        CHECK(braid_permutation(u.concat(v)) ==
              braid_permutation(v).after(braid_permutation(u)));
    }
}

TEST_CASE("closure component counts") {
    // Torus block T(B, k) closes to gcd(B, k) components.
    for (int B = 2; B <= 12; ++B)
        for (int k = 1; k <= 12; ++k) {
            std::vector<int> letters;
            for (int r = 0; r < k; ++r)
                for (int g = 1; g < B; ++g) letters.push_back(g);
            CHECK(closure_components(BraidWord(B, letters)) == std::gcd(B, k));
        }

    BraidWord w = TwistedTorusSpec(6, 4, 3, 1, TailOrder::Ascending).expand();
    CHECK(closure_components(w) == 1);
    CHECK(closure_components(BraidWord(3, {})) == 3);
}

TEST_CASE("surface slope") {
    CHECK(TwistedTorusSpec(6, 4, 3, 1, TailOrder::Ascending).surface_slope() == 28);
    CHECK(TwistedTorusSpec(18, 7, 2, -2, TailOrder::Descending).surface_slope() == 120);
    CHECK(TwistedTorusSpec(14, 20, 7, -3, TailOrder::Ascending).surface_slope() == 256);
}

TEST_CASE("torus knot spec") {
    BraidWord w = TorusKnotSpec(7).expand();
    CHECK(w.strands == 2);
    CHECK(w.letters == std::vector<int>(7, 1));
    CHECK(closure_components(w) == 1);
}
