#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <rwhitney/cauchy.hpp>

#include "test_support.hpp"

using namespace rwhitney;
using namespace rwhitney::testing;

TEST_CASE("first kind")
{
    CHECK(cauchy_first(0) == C(1));
    CHECK(cauchy_first(1) == C(1, 2) - R());
    // Integral of (x - r)(x - r - q) over [0,1], expanded by hand.
    CHECK(cauchy_first(2) == R() * R() + Q() * R() - R() - C(1, 2) * Q() + C(1, 3));
}

TEST_CASE("second kind at -r")
{
    CHECK(cauchy_second_neg(0) == C(1));
    CHECK(cauchy_second_neg(1) == -R() - C(1, 2));
    CHECK(cauchy_second_neg(3) == cauchy_integral_oracle(CauchyKind::second, 3));
}

TEST_CASE("integration oracle")
{
    CHECK(cauchy_integral_oracle(CauchyKind::first, 1) == C(1, 2) - R());
    CHECK(cauchy_integral_oracle(CauchyKind::first, 0) == C(1));
    // (-x-r)(-x-r-q) = x^2 + (2r+q)x + r^2 + qr.
    CHECK(cauchy_integral_oracle(CauchyKind::second, 2) == C(1, 3) + C(1, 2) * (C(2) * R() + Q()) + R() * R() + Q() * R());
}

TEST_CASE("w-sums equal the integrals")
{
    for (int n = 0; n <= 12; ++n) {
        CHECK(cauchy_first(n) == cauchy_integral_oracle(CauchyKind::first, n));
        CHECK(cauchy_second_neg(n) == cauchy_integral_oracle(CauchyKind::second, n));
        CHECK(cauchy(CauchyKind::second, n) == cauchy_second_neg(n));
    }
}

TEST_CASE("W-convolutions collapse to constants")
{
    const auto zero = cauchy_W_convolution_sides(0);
    CHECK(zero[0].lhs == C(1));
    CHECK(zero[1].lhs == C(1));
    const auto one = cauchy_W_convolution_sides(1);
    CHECK(one[0].lhs == C(1, 2));
    CHECK(one[1].lhs == C(-1, 2));
    const auto six = cauchy_W_convolution_sides(6);
    CHECK(six[0].lhs == C(1, 7));
    CHECK(six[1].lhs == C(1, 7));
    for (int n = 0; n <= 12; ++n) {
        CHECK(cauchy_W_convolution_check(n));
    }
}

TEST_CASE("leading structure in r")
{
    for (int n = 0; n <= 10; ++n) {
        const MPoly c = cauchy_first(n);
        CHECK(degree_in(c, Var::r) == static_cast<unsigned>(n));
        CHECK(c.coefficient_of(Var::r, static_cast<unsigned>(n)) == C(n % 2 == 0 ? 1 : -1));
    }
}
