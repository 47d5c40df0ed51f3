#include <rwhitney/series.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>

namespace rwhitney
{

namespace
{

void require_zero_constant(const TruncSeries &u, const char *what)
{
    if (!u[0].is_zero()) {
        throw std::domain_error(std::string(what) + ": argument has nonzero constant term " + u[0].to_string());
    }
}

// sum_{m=1}^{order} weights[m] u^m by Horner's rule; u has zero constant term so
// powers beyond the order vanish.
TruncSeries compose_zero_constant(const TruncSeries &u, const std::vector<Rational> &weights)
{
    const std::size_t n = u.order();
    TruncSeries acc(n);
    for (std::size_t m = n; m >= 1; --m) {
        acc = (acc + TruncSeries::constant(MPoly(weights[m]), n)) * u;
    }
    return acc;
}

} // namespace

TruncSeries::TruncSeries(std::vector<MPoly> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty()) {
        throw std::invalid_argument("TruncSeries: needs at least one coefficient");
    }
}

TruncSeries TruncSeries::constant(const MPoly &c, std::size_t order)
{
    TruncSeries s(order);
    s.coeffs_[0] = c;
    return s;
}

TruncSeries TruncSeries::t(std::size_t order)
{
    TruncSeries s(order);
    if (order >= 1) {
        s.coeffs_[1] = MPoly(1);
    }
    return s;
}

TruncSeries TruncSeries::truncated(std::size_t order) const
{
    if (order > this->order()) {
        throw std::invalid_argument("TruncSeries: cannot extend precision");
    }
    return TruncSeries(std::vector<MPoly>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(order) + 1));
}

TruncSeries operator+(const TruncSeries &a, const TruncSeries &b)
{
    TruncSeries out(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i < out.coeffs_.size(); ++i) {
        out.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
    }
    return out;
}

TruncSeries operator-(const TruncSeries &a, const TruncSeries &b)
{
    TruncSeries out(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i < out.coeffs_.size(); ++i) {
        out.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
    }
    return out;
}

TruncSeries operator*(const TruncSeries &a, const TruncSeries &b)
{
    TruncSeries out(std::min(a.order(), b.order()));
    const std::size_t n = out.order();
    for (std::size_t i = 0; i <= n; ++i) {
        if (a.coeffs_[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; i + j <= n; ++j) {
            if (!b.coeffs_[j].is_zero()) {
                out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
    }
    return out;
}

TruncSeries operator-(const TruncSeries &a)
{
    return a.map([](const MPoly &c) { return -c; });
}

TruncSeries series_exp_linear(const MPoly &c, std::size_t order)
{
    std::vector<MPoly> coeffs{MPoly(1)};
    for (std::size_t i = 1; i <= order; ++i) {
        coeffs.push_back(scale(Rational(1, static_cast<long long>(i)), coeffs.back() * c));
    }
    return TruncSeries(std::move(coeffs));
}

TruncSeries series_scale(const MPoly &c, const TruncSeries &a)
{
    return a.map([&c](const MPoly &x) { return c * x; });
}

TruncSeries series_div(const TruncSeries &a, const TruncSeries &b)
{
    if (!b[0].is_constant() || b[0].is_zero()) {
        throw std::domain_error("series_div: constant term " + b[0].to_string() + " is not a rational unit");
    }
    const Rational inv = b[0].constant_value().reciprocal();
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<MPoly> c;
    c.reserve(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        MPoly acc = a[i];
        for (std::size_t j = 1; j <= i; ++j) {
            if (!b[j].is_zero()) {
                acc -= b[j] * c[i - j];
            }
        }
        c.push_back(scale(inv, acc));
    }
    return TruncSeries(std::move(c));
}

TruncSeries shift_down(const TruncSeries &a, std::size_t m)
{
    if (m > a.order()) {
        throw std::domain_error("shift_down: shift exceeds series order");
    }
    for (std::size_t i = 0; i < m; ++i) {
        if (!a[i].is_zero()) {
            throw std::domain_error("shift_down: coefficient of t^" + std::to_string(i) + " is nonzero");
        }
    }
    return TruncSeries(std::vector<MPoly>(a.coefficients().begin() + static_cast<std::ptrdiff_t>(m), a.coefficients().end()));
}

TruncSeries series_log1p(const TruncSeries &u)
{
    require_zero_constant(u, "series_log1p");
    std::vector<Rational> w(u.order() + 1);
    for (std::size_t m = 1; m <= u.order(); ++m) {
        w[m] = Rational(m % 2 == 1 ? 1 : -1, static_cast<long long>(m));
    }
    return compose_zero_constant(u, w);
}

TruncSeries series_polylog(const TruncSeries &u, int k)
{
    require_zero_constant(u, "series_polylog");
    std::vector<Rational> w(u.order() + 1);
    for (std::size_t m = 1; m <= u.order(); ++m) {
        const Rational mk = pow(Rational(static_cast<long long>(m)), static_cast<unsigned>(k < 0 ? -k : k));
        w[m] = k >= 0 ? mk.reciprocal() : mk;
    }
    return compose_zero_constant(u, w);
}

MPoly extract_egf_coefficient(const TruncSeries &a, std::size_t n)
{
    if (n > a.order()) {
        throw std::out_of_range("extract_egf_coefficient: n = " + std::to_string(n) + " exceeds series order " +
                                std::to_string(a.order()));
    }
    return scale(factorial(static_cast<int>(n)), a[n]);
}

} // namespace rwhitney
