#include <rwhitney/bernoulli.hpp>

#include <mutex>
#include <stdexcept>
#include <string>

#include <rwhitney/whitney.hpp>

namespace rwhitney
{

namespace
{

void require_nonnegative(int n, const char *what)
{
    if (n < 0) {
        throw std::out_of_range(std::string(what) + ": negative index");
    }
}

// u = (e^{ct}-1)/c with c = sign*q, as a series with polynomial coefficients.
TruncSeries exp_minus_one_over(int sign, std::size_t order)
{
    const MPoly c = scale(Rational(sign), MPoly::var(Var::q));
    const TruncSeries e = series_exp_linear(c, order) - TruncSeries::constant(MPoly(1), order);
    return series_scale(MPoly(Rational(sign)), e.map([](const MPoly &p) {
        return divide_by_var_power(p, Var::q, p.is_zero() ? 0 : 1);
    }));
}

} // namespace

std::string_view route_name(BernoulliRoute route)
{
    switch (route) {
        case BernoulliRoute::wsum:
            return "wsum";
        case BernoulliRoute::explicit_sum:
            return "explicit";
        case BernoulliRoute::gf:
            return "gf";
    }
    return "?";
}

std::optional<BernoulliRoute> route_from_name(std::string_view name)
{
    for (const auto r : {BernoulliRoute::wsum, BernoulliRoute::explicit_sum, BernoulliRoute::gf}) {
        if (route_name(r) == name) {
            return r;
        }
    }
    return std::nullopt;
}

MPoly bernoulli_q_wsum(int n)
{
    require_nonnegative(n, "bernoulli_q_wsum");
    static std::mutex mutex;
    static std::vector<MPoly> cache;
    const std::lock_guard lock(mutex);
    while (static_cast<int>(cache.size()) <= n) {
        const int m = static_cast<int>(cache.size());
        const auto row = whitney_row(WhitneyKind::second, m);
        MPoly sum;
        for (int k = 0; k <= m; ++k) {
            const Rational w = factorial(k) / Rational(k + 1);
            sum += scale(k % 2 == 0 ? w : -w, row[static_cast<std::size_t>(k)]);
        }
        cache.push_back(std::move(sum));
    }
    return cache[static_cast<std::size_t>(n)];
}

Rational bernoulli_q_explicit(int n, const Rational &q, const Rational &r)
{
    require_nonnegative(n, "bernoulli_q_explicit");
    if (q.is_zero()) {
        throw std::domain_error("bernoulli_q_explicit: q must be nonzero (the double sum divides by q^k)");
    }
    Rational total;
    for (int k = 0; k <= n; ++k) {
        Rational inner;
        for (int j = 0; j <= k; ++j) {
            const Rational term = binomial(k, j) * pow(r + Rational(j) * q, static_cast<unsigned>(n));
            inner += j % 2 == 0 ? term : -term;
        }
        total += inner / (pow(q, static_cast<unsigned>(k)) * Rational(k + 1));
    }
    return total;
}

TruncSeries bernoulli_q_gf_series(std::size_t order)
{
    // One guard coefficient absorbs the t-pole of 1/(e^{qt}-1).
    const std::size_t guarded = order + 1;
    const TruncSeries u = exp_minus_one_over(1, guarded);
    const TruncSeries ratio = series_div(shift_down(series_log1p(u), 1), shift_down(u, 1));
    return series_exp_linear(MPoly::var(Var::r), order) * ratio;
}

std::vector<MPoly> bernoulli_q_gf(int n_max)
{
    require_nonnegative(n_max, "bernoulli_q_gf");
    const TruncSeries gf = bernoulli_q_gf_series(static_cast<std::size_t>(n_max));
    std::vector<MPoly> out;
    for (int n = 0; n <= n_max; ++n) {
        out.push_back(extract_egf_coefficient(gf, static_cast<std::size_t>(n)));
    }
    return out;
}

std::vector<MPoly> bernoulli_q_numbers(int n_max)
{
    require_nonnegative(n_max, "bernoulli_q_numbers");
    std::vector<MPoly> out;
    const EvalPoint at_zero{{Var::r, Rational(0)}};
    for (int n = 0; n <= n_max; ++n) {
        out.push_back(evaluate(bernoulli_q_wsum(n), at_zero));
    }
    return out;
}

TruncSeries poly_bernoulli_q_series(std::size_t order, int k)
{
    const std::size_t guarded = order + 1;
    // u = (1 - e^{-qt})/q = -(e^{-qt} - 1)/q.
    const TruncSeries u = exp_minus_one_over(-1, guarded);
    const TruncSeries ratio = series_div(shift_down(series_polylog(u, k), 1), shift_down(u, 1));
    return series_exp_linear(-MPoly::var(Var::z), order) * ratio;
}

std::vector<MPoly> poly_bernoulli_q(int n_max, int k)
{
    require_nonnegative(n_max, "poly_bernoulli_q");
    const TruncSeries gf = poly_bernoulli_q_series(static_cast<std::size_t>(n_max), k);
    std::vector<MPoly> out;
    for (int n = 0; n <= n_max; ++n) {
        out.push_back(extract_egf_coefficient(gf, static_cast<std::size_t>(n)));
    }
    return out;
}

IdentitySides bernoulli_translation_sides(int n)
{
    require_nonnegative(n, "bernoulli_translation_sides");
    const MPoly r = MPoly::var(Var::r);
    const MPoly s = MPoly::var(Var::s);
    MPoly rhs;
    for (int j = 0; j <= n; ++j) {
        rhs += scale(binomial(n, j), pow(r, static_cast<unsigned>(n - j)) * substitute(bernoulli_q_wsum(j), Var::r, s));
    }
    return {substitute(bernoulli_q_wsum(n), Var::r, r + s), rhs};
}

IdentitySides bernoulli_translation_numbers_sides(int n)
{
    require_nonnegative(n, "bernoulli_translation_numbers_sides");
    const MPoly r = MPoly::var(Var::r);
    const auto numbers = bernoulli_q_numbers(n);
    MPoly rhs;
    for (int j = 0; j <= n; ++j) {
        rhs += scale(binomial(n, j), pow(r, static_cast<unsigned>(n - j)) * numbers[static_cast<std::size_t>(j)]);
    }
    return {bernoulli_q_wsum(n), rhs};
}

bool bernoulli_translation_check(int n)
{
    return bernoulli_translation_sides(n).holds() && bernoulli_translation_numbers_sides(n).holds();
}

} // namespace rwhitney
