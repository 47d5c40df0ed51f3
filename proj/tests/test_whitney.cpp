#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <vector>

#include <rwhitney/whitney.hpp>

#include "test_support.hpp"

using namespace rwhitney;
using namespace rwhitney::testing;

namespace
{

// Falling factorial (x)_n at a rational x.
Rational falling(const Rational &x, int n)
{
    Rational out(1);
    for (int i = 0; i < n; ++i) {
        out *= x - Rational(i);
    }
    return out;
}

} // namespace

TEST_CASE("second kind: small values")
{
    CHECK(whitney_second(0, 0) == C(1));
    CHECK(whitney_second(3, 0) == pow(R(), 3));
    // (qx+r)^2 = q^2 x^2 + 2qr x + r^2 = q^2 (x)_2 + (q^2 + 2qr)(x)_1 + r^2.
    CHECK(whitney_second(2, 1) == Q() + C(2) * R());
    CHECK(whitney_definitional_oracle(WhitneyKind::second, 2)[1] == Q() + C(2) * R());
}

TEST_CASE("first kind: small values")
{
    // q (x)_1 = (qx + r) - r.
    CHECK(whitney_first(1, 1) == C(1));
    CHECK(whitney_first(1, 0) == -R());
    CHECK(whitney_first(0, 0) == C(1));
    CHECK(whitney_first(2, 0) == R() * (R() + Q()));
}

TEST_CASE("index errors")
{
    CHECK_THROWS_AS(whitney_second(2, 3), std::out_of_range);
    CHECK_THROWS_AS(whitney_second(-1, 0), std::out_of_range);
    CHECK_THROWS_AS(whitney_first(1, -1), std::out_of_range);
    CHECK_THROWS_AS(whitney_second_explicit(1, 2, 1, 0), std::out_of_range);
}

TEST_CASE("explicit alternating sum")
{
    CHECK(whitney_second_explicit(2, 1, 1, 0) == Rational(1));
    CHECK(whitney_second_explicit(2, 1, 2, 3) == Rational(8));
    for (int n = 0; n <= 6; ++n) {
        CHECK(whitney_second_explicit(n, n, Rational(-5, 3), Rational(7, 2)) == Rational(1));
    }
    CHECK_THROWS_AS(whitney_second_explicit(3, 1, 0, 1), std::domain_error);

    Gen gen(21);
    for (int n = 0; n <= 10; ++n) {
        for (int k = 0; k <= n; ++k) {
            const Rational q = gen.nonzero_rational();
            const Rational r = gen.rational();
            CHECK(evaluate(whitney_second(n, k), {{Var::q, q}, {Var::r, r}}) ==
                  MPoly(whitney_second_explicit(n, k, q, r)));
        }
    }
}

TEST_CASE("q = 0 is allowed in the symbolic triangle")
{
    // At q = 0 the expansion degenerates to r^n = sum_k W(n,k)|_{q=0} * 0^k (x)_k, so only
    // W(n,0) = r^n is pinned; the triangle must still evaluate without error.
    for (int n = 0; n <= 6; ++n) {
        for (int k = 0; k <= n; ++k) {
            CHECK_NOTHROW(evaluate(whitney_second(n, k), {{Var::q, 0}}));
        }
        CHECK(evaluate(whitney_second(n, 0), {{Var::q, 0}}) == pow(R(), static_cast<unsigned>(n)));
    }
}

TEST_CASE("definitional oracle rows")
{
    CHECK(whitney_definitional_oracle(WhitneyKind::second, 1) == std::vector<MPoly>{R(), C(1)});
    CHECK(whitney_definitional_oracle(WhitneyKind::first, 0) == std::vector<MPoly>{C(1)});
    CHECK(whitney_definitional_oracle(WhitneyKind::first, 2) ==
          std::vector<MPoly>{R() * (R() + Q()), -(C(2) * R() + Q()), C(1)});
}

TEST_CASE("recurrence rows equal the definitional oracle")
{
    for (const auto kind : {WhitneyKind::first, WhitneyKind::second}) {
        for (int n = 0; n <= 14; ++n) {
            CAPTURE(n);
            CHECK(whitney_row(kind, n) == whitney_definitional_oracle(kind, n));
        }
    }
}

TEST_CASE("defining expansions hold at integer points")
{
    // (qx+r)^n = sum_k q^k W(n,k) (x)_k and q^n (x)_n = sum_k w(n,k) (qx+r)^k,
    // checked numerically for a grid of q, r, x.
    for (int n = 0; n <= 7; ++n) {
        for (const int qi : {1, 2, -3}) {
            for (const int ri : {0, 1, 5}) {
                const Rational q(qi);
                const Rational r(ri);
                for (int xi = -2; xi <= n + 2; ++xi) {
                    const Rational x(xi);
                    Rational second;
                    Rational first;
                    for (int k = 0; k <= n; ++k) {
                        const EvalPoint p{{Var::q, q}, {Var::r, r}};
                        second += pow(q, static_cast<unsigned>(k)) * evaluate(whitney_second(n, k), p).constant_value() *
                                  falling(x, k);
                        first += evaluate(whitney_first(n, k), p).constant_value() *
                                 pow(q * x + r, static_cast<unsigned>(k));
                    }
                    CHECK(second == pow(q * x + r, static_cast<unsigned>(n)));
                    CHECK(first == pow(q, static_cast<unsigned>(n)) * falling(x, n));
                }
            }
        }
    }
}

TEST_CASE("triangle boundary invariants and homogeneity")
{
    WhitneyTriangle first(WhitneyKind::first);
    WhitneyTriangle second(WhitneyKind::second);
    MPoly first_col(1);
    for (int n = 0; n <= 12; ++n) {
        CHECK(first.at(n, n) == C(1));
        CHECK(second.at(n, n) == C(1));
        CHECK(second.at(n, 0) == pow(R(), static_cast<unsigned>(n)));
        CHECK(first.at(n, 0) == first_col);
        first_col *= -(R() + scale(Rational(n), Q()));
        for (int k = 0; k <= n; ++k) {
            // Every term of W(n,k), w(n,k) has total degree n - k in q, r.
            for (const auto &[m, c] : second.at(n, k).terms()) {
                CHECK(m.total_degree() == static_cast<unsigned>(n - k));
            }
            for (const auto &[m, c] : first.at(n, k).terms()) {
                CHECK(m.total_degree() == static_cast<unsigned>(n - k));
            }
        }
    }
    CHECK(first.max_n() == 12);
}

TEST_CASE("orthogonality")
{
    for (int n = 0; n <= 10; ++n) {
        for (int k = 0; k <= n; ++k) {
            MPoly wW;
            MPoly Ww;
            for (int l = k; l <= n; ++l) {
                wW += whitney_first(n, l) * whitney_second(l, k);
                Ww += whitney_second(n, l) * whitney_first(l, k);
            }
            CHECK(wW == C(n == k ? 1 : 0));
            CHECK(Ww == C(n == k ? 1 : 0));
        }
    }
}

TEST_CASE("exponential generating function")
{
    CHECK(whitney_egf_check(0, 4));
    CHECK(whitney_egf_check(1, 5));
    CHECK(whitney_egf_check(3, 8));
    CHECK(extract_egf_coefficient(whitney_egf_series(0, 4), 3) == pow(R(), 3));
    CHECK_THROWS_AS(whitney_egf_sides(5, 4), std::out_of_range);
}

TEST_CASE("translation in r")
{
    CHECK(whitney_translation(0, 0));
    const auto sides = whitney_translation_sides(2, 1);
    CHECK(sides.lhs == Q() + C(2) * R() + C(2) * S());
    CHECK(sides.rhs == (Q() + C(2) * S()) + C(2) * R());
    CHECK(whitney_translation(5, 2));
    for (int n = 0; n <= 8; ++n) {
        for (int k = 0; k <= n; ++k) {
            CHECK(whitney_translation(n, k));
        }
    }
}
