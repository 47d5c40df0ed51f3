#ifndef RWHITNEY_TEST_SUPPORT_HPP
#define RWHITNEY_TEST_SUPPORT_HPP

#include <cstdint>
#include <random>

#include <rwhitney/mpoly.hpp>
#include <rwhitney/rational.hpp>

namespace rwhitney::testing
{

inline MPoly Q()
{
    return MPoly::var(Var::q);
}
inline MPoly R()
{
    return MPoly::var(Var::r);
}
inline MPoly S()
{
    return MPoly::var(Var::s);
}
inline MPoly Z()
{
    return MPoly::var(Var::z);
}
inline MPoly X()
{
    return MPoly::var(Var::x);
}
inline MPoly C(long long a, long long b = 1)
{
    return MPoly(Rational(a, b));
}

// Small random values for property tests.
class Gen
{
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long long integer(long long lo, long long hi)
    {
        return lo + static_cast<long long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    Rational rational() { return Rational(integer(-12, 12), integer(1, 7)); }

    Rational nonzero_rational()
    {
        Rational v;
        while (v.is_zero()) {
            v = rational();
        }
        return v;
    }

    // Up to `terms` random terms of degree <= 3 in q, r, s, x.
    MPoly poly(int terms = 4)
    {
        MPoly p;
        for (int i = 0; i < terms; ++i) {
            const Monomial m({static_cast<Monomial::exponent_type>(integer(0, 3)),
                              static_cast<Monomial::exponent_type>(integer(0, 3)),
                              static_cast<Monomial::exponent_type>(integer(0, 1)), 0,
                              static_cast<Monomial::exponent_type>(integer(0, 2))});
            p += MPoly(rational(), m);
        }
        return p;
    }

private:
    std::mt19937_64 rng_;
};

} // namespace rwhitney::testing

#endif
