#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <vector>

#include <rwhitney/bernoulli.hpp>

#include "test_support.hpp"

using namespace rwhitney;
using namespace rwhitney::testing;

namespace
{

MPoly b4_listed()
{
    return pow(R(), 4) - C(2) * pow(R(), 3) + (C(4) - C(3) * Q()) * R() * R() - C(2) * (Q() * Q() - C(4) * Q() + C(3)) * R() -
           C(1, 2) * pow(Q(), 3) + C(14, 3) * Q() * Q() - C(9) * Q() + C(24, 5);
}

MPoly b3_listed()
{
    return pow(R(), 3) - C(3, 2) * R() * R() + (C(2) - C(3, 2) * Q()) * R() - C(1, 2) * Q() * Q() + C(2) * Q() - C(3, 2);
}

// Plain Stirling numbers of the second kind by their recurrence; test-local.
long long stirling2(int n, int k)
{
    std::vector<std::vector<long long>> s(static_cast<std::size_t>(n) + 1, std::vector<long long>(static_cast<std::size_t>(n) + 2, 0));
    s[0][0] = 1;
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= i; ++j) {
            s[i][j] = s[i - 1][j - 1] + j * s[i - 1][j];
        }
    }
    return k <= n ? s[n][k] : 0;
}

} // namespace

TEST_CASE("W-sum reproduces the listed polynomials")
{
    CHECK(bernoulli_q_wsum(0) == C(1));
    CHECK(bernoulli_q_wsum(1) == R() - C(1, 2));
    CHECK(bernoulli_q_wsum(2) == R() * R() - R() - C(1, 2) * Q() + C(2, 3));
    CHECK(bernoulli_q_wsum(2).to_string() == "r^2 - r - 1/2*q + 2/3");
    CHECK(bernoulli_q_wsum(3) == b3_listed());
    CHECK(bernoulli_q_wsum(4) == b4_listed());
    CHECK_THROWS_AS(bernoulli_q_wsum(-1), std::out_of_range);
}

TEST_CASE("explicit double sum")
{
    CHECK(bernoulli_q_explicit(1, 3, 2) == Rational(3, 2));
    CHECK(bernoulli_q_explicit(0, Rational(-7, 3), Rational(5)) == Rational(1));
    CHECK(bernoulli_q_explicit(2, 1, 0) == Rational(1, 6));
    CHECK_THROWS_AS(bernoulli_q_explicit(2, 0, 1), std::domain_error);

    Gen gen(17);
    for (int n = 0; n <= 14; ++n) {
        for (int i = 0; i < 5; ++i) {
            const Rational q = gen.nonzero_rational();
            const Rational r = gen.rational();
            CHECK(evaluate(bernoulli_q_wsum(n), {{Var::q, q}, {Var::r, r}}) == MPoly(bernoulli_q_explicit(n, q, r)));
        }
    }
}

TEST_CASE("generating function route")
{
    const auto gf = bernoulli_q_gf(15);
    REQUIRE(gf.size() == 16);
    CHECK(gf[0] == C(1));
    CHECK(gf[1] == R() - C(1, 2));
    CHECK(gf[3] == b3_listed());
    for (int n = 0; n <= 15; ++n) {
        CHECK(gf[static_cast<std::size_t>(n)] == bernoulli_q_wsum(n));
    }
}

TEST_CASE("numbers with a q parameter")
{
    const auto b = bernoulli_q_numbers(4);
    CHECK(b[0] == C(1));
    CHECK(b[1] == C(-1, 2));
    CHECK(b[2] == C(2, 3) - C(1, 2) * Q());
    CHECK(b[4] == C(-1, 2) * pow(Q(), 3) + C(14, 3) * Q() * Q() - C(9) * Q() + C(24, 5));
}

TEST_CASE("poly-Bernoulli with a q parameter")
{
    CHECK(poly_bernoulli_q(1, 1) == std::vector<MPoly>{C(1), C(1, 2) - Z()});
    for (int k = -4; k <= 4; ++k) {
        CHECK(poly_bernoulli_q(0, k)[0] == C(1));
    }
    CHECK(evaluate(poly_bernoulli_q(2, 1)[2], {{Var::q, 1}, {Var::z, 0}}) == C(1, 6));
}

TEST_CASE("poly-Bernoulli at q = 1, z = 0 and negative index matches the double Stirling sum")
{
    // B_n^{(-k)} = sum_j (j!)^2 S(n+1, j+1) S(k+1, j+1).
    for (int k = 0; k <= 5; ++k) {
        const auto values = poly_bernoulli_q(5, -k);
        for (int n = 0; n <= 5; ++n) {
            Rational expected;
            for (int j = 0; j <= std::min(n, k); ++j) {
                expected += factorial(j) * factorial(j) * Rational(stirling2(n + 1, j + 1)) * Rational(stirling2(k + 1, j + 1));
            }
            CAPTURE(n);
            CAPTURE(k);
            CHECK(evaluate(values[static_cast<std::size_t>(n)], {{Var::q, 1}, {Var::z, 0}}) == MPoly(expected));
        }
    }
}

TEST_CASE("sign law between the two conventions")
{
    const auto pb = poly_bernoulli_q(14, 1);
    for (int n = 0; n <= 14; ++n) {
        const MPoly bridged = scale(Rational(n % 2 == 0 ? 1 : -1), substitute(pb[static_cast<std::size_t>(n)], Var::z, R()));
        CHECK(bernoulli_q_wsum(n) == bridged);
    }
}

TEST_CASE("translation identities")
{
    CHECK(bernoulli_translation_check(0));
    const auto one = bernoulli_translation_sides(1);
    CHECK(one.lhs == R() + S() - C(1, 2));
    CHECK(one.rhs == R() + (S() - C(1, 2)));
    CHECK(bernoulli_translation_check(5));
    for (int n = 0; n <= 10; ++n) {
        CHECK(bernoulli_translation_check(n));
    }
}

TEST_CASE("leading structure in r")
{
    for (int n = 1; n <= 14; ++n) {
        const MPoly b = bernoulli_q_wsum(n);
        CHECK(degree_in(b, Var::r) == static_cast<unsigned>(n));
        CHECK(b.coefficient_of(Var::r, static_cast<unsigned>(n)) == C(1));
        CHECK(b.coefficient_of(Var::r, static_cast<unsigned>(n - 1)) == C(-n, 2));
    }
}

TEST_CASE("route names")
{
    CHECK(route_from_name("gf") == BernoulliRoute::gf);
    CHECK(route_from_name("explicit") == BernoulliRoute::explicit_sum);
    CHECK_FALSE(route_from_name("nope").has_value());
    CHECK(route_name(BernoulliRoute::wsum) == "wsum");
}
