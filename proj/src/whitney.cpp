#include <rwhitney/whitney.hpp>

#include <stdexcept>
#include <string>

#include <rwhitney/series.hpp>

namespace rwhitney
{

namespace
{

void check_indices(int n, int k)
{
    if (n < 0 || k < 0 || k > n) {
        throw std::out_of_range("Whitney index (" + std::to_string(n) + ", " + std::to_string(k) +
                                ") outside 0 <= k <= n");
    }
}

const MPoly &q_poly()
{
    static const MPoly q = MPoly::var(Var::q);
    return q;
}

const MPoly &r_poly()
{
    static const MPoly r = MPoly::var(Var::r);
    return r;
}

struct SharedTriangle {
    std::mutex mutex;
    WhitneyTriangle triangle;
    explicit SharedTriangle(WhitneyKind kind) : triangle(kind) {}
};

SharedTriangle &shared(WhitneyKind kind)
{
    static SharedTriangle first(WhitneyKind::first);
    static SharedTriangle second(WhitneyKind::second);
    return kind == WhitneyKind::first ? first : second;
}

// Expresses p (a polynomial in x) in the basis b_0..b_n, where b_k has x-degree k
// and leading x-coefficient lead_k. Coefficient k is recovered as
// [x^k](remainder) / lead_k; lead_k is a pure power of q.
std::vector<MPoly> change_of_basis(MPoly p, const std::vector<MPoly> &basis, const std::vector<unsigned> &lead_q_power)
{
    const int n = static_cast<int>(basis.size()) - 1;
    std::vector<MPoly> coeffs(basis.size());
    for (int k = n; k >= 0; --k) {
        const MPoly top = p.coefficient_of(Var::x, static_cast<unsigned>(k));
        coeffs[static_cast<std::size_t>(k)] = divide_by_var_power(top, Var::q, lead_q_power[static_cast<std::size_t>(k)]);
        p -= coeffs[static_cast<std::size_t>(k)] * basis[static_cast<std::size_t>(k)];
    }
    if (!p.is_zero()) {
        throw std::logic_error("change_of_basis: nonzero remainder " + p.to_string());
    }
    return coeffs;
}

} // namespace

WhitneyTriangle::WhitneyTriangle(WhitneyKind kind) : kind_(kind), rows_{{MPoly(1)}} {}

void WhitneyTriangle::extend_to(int n)
{
    while (max_n() < n) {
        const int m = max_n() + 1;
        const auto &prev = rows_.back();
        std::vector<MPoly> row(static_cast<std::size_t>(m) + 1);
        for (int k = 0; k <= m; ++k) {
            MPoly cell = k >= 1 ? prev[static_cast<std::size_t>(k - 1)] : MPoly{};
            if (k < m) {
                const MPoly &below = prev[static_cast<std::size_t>(k)];
                if (kind_ == WhitneyKind::second) {
                    cell += (scale(Rational(k), q_poly()) + r_poly()) * below;
                } else {
                    cell -= (r_poly() + scale(Rational(m - 1), q_poly())) * below;
                }
            }
            row[static_cast<std::size_t>(k)] = std::move(cell);
        }
        rows_.push_back(std::move(row));
    }
}

const MPoly &WhitneyTriangle::at(int n, int k)
{
    check_indices(n, k);
    extend_to(n);
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

const std::vector<MPoly> &WhitneyTriangle::row(int n)
{
    check_indices(n, 0);
    extend_to(n);
    return rows_[static_cast<std::size_t>(n)];
}

MPoly whitney_second(int n, int k)
{
    auto &s = shared(WhitneyKind::second);
    const std::lock_guard lock(s.mutex);
    return s.triangle.at(n, k);
}

MPoly whitney_first(int n, int k)
{
    auto &s = shared(WhitneyKind::first);
    const std::lock_guard lock(s.mutex);
    return s.triangle.at(n, k);
}

std::vector<MPoly> whitney_row(WhitneyKind kind, int n)
{
    auto &s = shared(kind);
    const std::lock_guard lock(s.mutex);
    return s.triangle.row(n);
}

Rational whitney_second_explicit(int n, int k, const Rational &q, const Rational &r)
{
    check_indices(n, k);
    if (q.is_zero()) {
        throw std::domain_error("whitney_second_explicit: q must be nonzero (the sum is divided by q^k)");
    }
    Rational sum;
    for (int j = 0; j <= k; ++j) {
        const Rational term = binomial(k, j) * pow(r + Rational(j) * q, static_cast<unsigned>(n));
        sum += (k - j) % 2 == 0 ? term : -term;
    }
    return sum / (pow(q, static_cast<unsigned>(k)) * factorial(k));
}

MPoly falling_factorial_x(int n)
{
    MPoly out(1);
    for (int i = 0; i < n; ++i) {
        out *= MPoly::var(Var::x) - MPoly(i);
    }
    return out;
}

std::vector<MPoly> whitney_definitional_oracle(WhitneyKind kind, int n)
{
    if (n < 0) {
        throw std::out_of_range("whitney_definitional_oracle: negative n");
    }
    const MPoly x = MPoly::var(Var::x);
    const MPoly qx_r = q_poly() * x + r_poly();
    std::vector<MPoly> basis;
    std::vector<unsigned> lead;
    for (int k = 0; k <= n; ++k) {
        if (kind == WhitneyKind::second) {
            basis.push_back(falling_factorial_x(k));
            lead.push_back(0);
        } else {
            basis.push_back(pow(qx_r, static_cast<unsigned>(k)));
            lead.push_back(static_cast<unsigned>(k));
        }
    }
    if (kind == WhitneyKind::first) {
        return change_of_basis(pow(q_poly(), static_cast<unsigned>(n)) * falling_factorial_x(n), basis, lead);
    }
    // Coefficient of (x)_k is q^k W(n,k).
    auto coeffs = change_of_basis(pow(qx_r, static_cast<unsigned>(n)), basis, lead);
    for (int k = 0; k <= n; ++k) {
        auto &c = coeffs[static_cast<std::size_t>(k)];
        c = divide_by_var_power(c, Var::q, static_cast<unsigned>(k));
    }
    return coeffs;
}

TruncSeries whitney_egf_series(int k, std::size_t order)
{
    if (k < 0) {
        throw std::out_of_range("whitney_egf_series: negative k");
    }
    const TruncSeries u = (series_exp_linear(q_poly(), order) - TruncSeries::constant(MPoly(1), order))
                              .map([](const MPoly &c) { return divide_by_var_power(c, Var::q, c.is_zero() ? 0 : 1); });
    TruncSeries gf = series_exp_linear(r_poly(), order);
    for (int i = 0; i < k; ++i) {
        gf = gf * u;
    }
    return series_scale(MPoly(factorial(k).reciprocal()), gf);
}

std::vector<IdentitySides> whitney_egf_sides(int k, int N)
{
    if (k < 0 || k > N) {
        throw std::out_of_range("whitney_egf_sides: requires 0 <= k <= N");
    }
    const TruncSeries gf = whitney_egf_series(k, static_cast<std::size_t>(N));
    std::vector<IdentitySides> out;
    for (int n = k; n <= N; ++n) {
        out.push_back({extract_egf_coefficient(gf, static_cast<std::size_t>(n)), whitney_second(n, k)});
    }
    return out;
}

bool whitney_egf_check(int k, int N)
{
    for (const auto &sides : whitney_egf_sides(k, N)) {
        if (!sides.holds()) {
            return false;
        }
    }
    return true;
}

IdentitySides whitney_translation_sides(int n, int k)
{
    check_indices(n, k);
    const MPoly r = r_poly();
    const MPoly s = MPoly::var(Var::s);
    MPoly rhs;
    for (int j = k; j <= n; ++j) {
        rhs += scale(binomial(n, j), pow(r, static_cast<unsigned>(n - j)) * substitute(whitney_second(j, k), Var::r, s));
    }
    return {substitute(whitney_second(n, k), Var::r, r + s), rhs};
}

bool whitney_translation(int n, int k)
{
    return whitney_translation_sides(n, k).holds();
}

} // namespace rwhitney
