#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "prism/laurent.hpp"

using namespace prism;

namespace {

LaurentPoly t_pow(int e) { return LaurentPoly::monomial(1, e); }

} // namespace

TEST_CASE("ring operations") {
    LaurentPoly a = t_pow(1) + LaurentPoly::constant(2);          // t + 2
    LaurentPoly b = t_pow(-1) - LaurentPoly::constant(1);         // t^-1 - 1
    CHECK(a * b == b * a);
    CHECK((a + b) * a == a * a + b * a);
    CHECK(a - a == LaurentPoly());
    CHECK((a * b).coeff(0) == 1 - 2);  // t*t^-1 - 2
    CHECK(LaurentPoly().is_zero());
    CHECK((a * LaurentPoly()).is_zero());
}

TEST_CASE("trim and equality") {
    LaurentPoly p = LaurentPoly::from_coeffs(-2, {BigInt(0), BigInt(3), BigInt(0)});
    CHECK(p.min_exp() == -1);
    CHECK(p.max_exp() == -1);
    CHECK(p == LaurentPoly::monomial(3, -1));
}

TEST_CASE("evaluation") {
    // t - 1 + t^-1
    LaurentPoly tre = t_pow(1) - LaurentPoly::constant(1) + t_pow(-1);
    CHECK(tre.eval_one() == 1);
    CHECK(tre.eval_minus_one() == -3);
    CHECK(tre.is_symmetric());
    LaurentPoly p = t_pow(3) + LaurentPoly::constant(5);
    CHECK(p.eval(BigInt(2)) == 13);
}

TEST_CASE("second derivative at one") {
    LaurentPoly tre = t_pow(1) - LaurentPoly::constant(1) + t_pow(-1);
    CHECK(tre.second_derivative_at_one() == 2);
    CHECK(LaurentPoly::constant(1).second_derivative_at_one() == 0);
    LaurentPoly fig8 = -t_pow(1) + LaurentPoly::constant(3) - t_pow(-1);
    CHECK(fig8.second_derivative_at_one() == -2);
}

TEST_CASE("printing") {
    LaurentPoly tre = t_pow(-1) - LaurentPoly::constant(1) + t_pow(1);
    CHECK(tre.to_string() == "t^-1 - 1 + t");
    CHECK(LaurentPoly().to_string() == "0");
    CHECK(LaurentPoly::monomial(-2, 3).to_string() == "-2*t^3");
    CHECK((LaurentPoly::constant(4) + t_pow(2)).to_string() == "4 + t^2");
}

TEST_CASE("eval guards") {
    LaurentPoly laurent = LaurentPoly::monomial(1, -2);
    CHECK_THROWS_AS(laurent.eval(BigInt(3)), std::logic_error);
    CHECK(laurent.eval_minus_one() == 1);
}

TEST_CASE("mirror") {
    LaurentPoly p = t_pow(2) + LaurentPoly::constant(7);
    CHECK(p.mirrored() == t_pow(-2) + LaurentPoly::constant(7));
    CHECK(!p.is_symmetric());
}

TEST_CASE("exact division") {
    LaurentPoly num = (t_pow(1) + LaurentPoly::constant(1)) * (t_pow(2) - LaurentPoly::constant(3));
    CHECK(divide_exact(num, t_pow(1) + LaurentPoly::constant(1)) ==
          t_pow(2) - LaurentPoly::constant(3));
    // (1 - t^6)/(1 - t) = geometric(6)
    LaurentPoly one_minus_t6 = LaurentPoly::constant(1) - t_pow(6);
    LaurentPoly one_minus_t = LaurentPoly::constant(1) - t_pow(1);
    CHECK(divide_exact(one_minus_t6, one_minus_t) == LaurentPoly::geometric(6));
    CHECK_THROWS_AS(divide_exact(t_pow(2) + LaurentPoly::constant(1), one_minus_t),
                    std::logic_error);
    // Laurent shift passes through division
    CHECK(divide_exact(num.shifted(-4), t_pow(1) + LaurentPoly::constant(1)) ==
          (t_pow(2) - LaurentPoly::constant(3)).shifted(-4));
}
