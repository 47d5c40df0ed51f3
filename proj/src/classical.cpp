#include <rwhitney/classical.hpp>

#include <stdexcept>
#include <string>

#include <rwhitney/series.hpp>

namespace rwhitney
{

namespace
{

const BigInt zero_int{0};

// t/(e^t - 1) e^{ct} to the given order.
TruncSeries bernoulli_gf(const MPoly &shift, std::size_t order)
{
    const TruncSeries denom = series_exp_linear(MPoly(1), order + 1) - TruncSeries::constant(MPoly(1), order + 1);
    const TruncSeries base = series_div(TruncSeries::constant(MPoly(1), order), shift_down(denom, 1));
    return series_exp_linear(shift, order) * base;
}

} // namespace

StirlingTriangle::StirlingTriangle(int rho) : rho_(rho)
{
    if (rho < 0) {
        throw std::out_of_range("StirlingTriangle: negative rho");
    }
}

void StirlingTriangle::extend_to(int n)
{
    while (static_cast<int>(rows_.size()) <= n) {
        const int m = static_cast<int>(rows_.size());
        std::vector<BigInt> row(static_cast<std::size_t>(m) + 1, BigInt(0));
        if (m == rho_) {
            row[static_cast<std::size_t>(m)] = 1;
        } else if (m > rho_) {
            const auto &prev = rows_.back();
            for (int k = 1; k <= m; ++k) {
                BigInt v = prev.size() > static_cast<std::size_t>(k - 1) ? prev[static_cast<std::size_t>(k - 1)] : 0;
                if (k < m) {
                    v += BigInt(k) * prev[static_cast<std::size_t>(k)];
                }
                row[static_cast<std::size_t>(k)] = v;
            }
        }
        rows_.push_back(std::move(row));
    }
}

const BigInt &StirlingTriangle::at(int n, int k)
{
    if (n < 0 || k < 0) {
        throw std::out_of_range("StirlingTriangle: negative index (" + std::to_string(n) + ", " + std::to_string(k) + ")");
    }
    if (k > n) {
        return zero_int;
    }
    extend_to(n);
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

BigInt stirling_oracle(int n, int k)
{
    StirlingTriangle t;
    return t.at(n, k);
}

BigInt r_stirling_oracle(int rho, int n, int k)
{
    StirlingTriangle t(rho);
    return t.at(n, k);
}

std::vector<Rational> classical_bernoulli_oracle(int n_max)
{
    if (n_max < 0) {
        throw std::out_of_range("classical_bernoulli_oracle: negative n_max");
    }
    StirlingTriangle s;
    std::vector<Rational> out;
    for (int n = 0; n <= n_max; ++n) {
        Rational b;
        for (int k = 0; k <= n; ++k) {
            const Rational term = factorial(k) / Rational(k + 1) * Rational(s.at(n, k));
            b += k % 2 == 0 ? term : -term;
        }
        out.push_back(b);
    }
    return out;
}

std::vector<Rational> classical_bernoulli_gf(int n_max)
{
    if (n_max < 0) {
        throw std::out_of_range("classical_bernoulli_gf: negative n_max");
    }
    const TruncSeries gf = bernoulli_gf(MPoly{}, static_cast<std::size_t>(n_max));
    std::vector<Rational> out;
    for (int n = 0; n <= n_max; ++n) {
        out.push_back(extract_egf_coefficient(gf, static_cast<std::size_t>(n)).constant_value());
    }
    return out;
}

std::vector<MPoly> classical_bernoulli_polynomials_gf(int n_max)
{
    if (n_max < 0) {
        throw std::out_of_range("classical_bernoulli_polynomials_gf: negative n_max");
    }
    const TruncSeries gf = bernoulli_gf(MPoly::var(Var::r), static_cast<std::size_t>(n_max));
    std::vector<MPoly> out;
    for (int n = 0; n <= n_max; ++n) {
        out.push_back(extract_egf_coefficient(gf, static_cast<std::size_t>(n)));
    }
    return out;
}

Rational classical_bernoulli_r_stirling(int n, int rho)
{
    if (n < 0) {
        throw std::out_of_range("classical_bernoulli_r_stirling: negative n");
    }
    StirlingTriangle s(rho);
    Rational b;
    for (int k = 0; k <= n; ++k) {
        const Rational term = factorial(k) / Rational(k + 1) * Rational(s.at(n + rho, k + rho));
        b += k % 2 == 0 ? term : -term;
    }
    return b;
}

} // namespace rwhitney
