#include <rwhitney/cauchy.hpp>

#include <stdexcept>

#include <rwhitney/whitney.hpp>

namespace rwhitney
{

namespace
{

MPoly w_weighted_sum(int n, bool alternate)
{
    if (n < 0) {
        throw std::out_of_range("cauchy: negative index");
    }
    const auto row = whitney_row(WhitneyKind::first, n);
    MPoly sum;
    for (int k = 0; k <= n; ++k) {
        const Rational w = Rational(alternate && k % 2 == 1 ? -1 : 1, k + 1);
        sum += scale(w, row[static_cast<std::size_t>(k)]);
    }
    return sum;
}

} // namespace

MPoly cauchy_first(int n)
{
    return w_weighted_sum(n, false);
}

MPoly cauchy_second_neg(int n)
{
    return w_weighted_sum(n, true);
}

MPoly cauchy(CauchyKind kind, int n)
{
    return kind == CauchyKind::first ? cauchy_first(n) : cauchy_second_neg(n);
}

MPoly cauchy_integral_oracle(CauchyKind kind, int n)
{
    if (n < 0) {
        throw std::out_of_range("cauchy_integral_oracle: negative index");
    }
    const MPoly x = MPoly::var(Var::x);
    const MPoly signed_x = kind == CauchyKind::first ? x : -x;
    MPoly product(1);
    for (int i = 0; i < n; ++i) {
        product *= signed_x - MPoly::var(Var::r) - scale(Rational(i), MPoly::var(Var::q));
    }
    return integrate_x_unit(product);
}

std::array<IdentitySides, 2> cauchy_W_convolution_sides(int n)
{
    if (n < 0) {
        throw std::out_of_range("cauchy_W_convolution_sides: negative index");
    }
    const auto row = whitney_row(WhitneyKind::second, n);
    MPoly first;
    MPoly second;
    for (int k = 0; k <= n; ++k) {
        first += row[static_cast<std::size_t>(k)] * cauchy_first(k);
        second += row[static_cast<std::size_t>(k)] * cauchy_second_neg(k);
    }
    const Rational target(1, n + 1);
    return {IdentitySides{first, MPoly(target)}, IdentitySides{second, MPoly(n % 2 == 0 ? target : -target)}};
}

bool cauchy_W_convolution_check(int n)
{
    const auto sides = cauchy_W_convolution_sides(n);
    return sides[0].holds() && sides[1].holds();
}

} // namespace rwhitney
