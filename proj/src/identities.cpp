#include <rwhitney/identities.hpp>

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>
#include <tuple>

#include <rwhitney/bernoulli.hpp>
#include <rwhitney/cauchy.hpp>
#include <rwhitney/classical.hpp>
#include <rwhitney/whitney.hpp>

namespace rwhitney
{

std::strong_ordering operator<=>(const Instance &a, const Instance &b)
{
    return std::tie(a.n, a.k, a.params) <=> std::tie(b.n, b.k, b.params);
}

IdentityReport make_report(std::string identity_id, Instance instance, const MPoly &lhs, const MPoly &rhs)
{
    IdentityReport report{std::move(identity_id), std::move(instance), Status::fail, lhs.to_string(), rhs.to_string()};
    report.status = report.lhs == report.rhs ? Status::pass : Status::fail;
    return report;
}

IdentityReport bernoulli_w_inversion_check(int n)
{
    const auto row = whitney_row(WhitneyKind::first, n);
    MPoly sum;
    for (int j = 0; j <= n; ++j) {
        sum += row[static_cast<std::size_t>(j)] * bernoulli_q_wsum(j);
    }
    if (n % 2 == 1) {
        sum = -sum;
    }
    return make_report("bernoulli_w_inversion", {n, {}, {}}, sum, MPoly(factorial(n) / Rational(n + 1)));
}

std::vector<IdentityReport> cauchy_bernoulli_checks(int n)
{
    if (n < 0) {
        throw std::out_of_range("cauchy_bernoulli_checks: negative index");
    }
    MPoly c_first;
    MPoly c_second;
    MPoly b_from_first;
    MPoly b_from_second;
    const auto w_row = whitney_row(WhitneyKind::first, n);
    const auto W_row = whitney_row(WhitneyKind::second, n);
    for (int k = 0; k <= n; ++k) {
        const auto wk = whitney_row(WhitneyKind::first, k);
        const auto Wk = whitney_row(WhitneyKind::second, k);
        MPoly w_inner;
        MPoly W_first_inner;
        MPoly W_second_inner;
        for (int j = 0; j <= k; ++j) {
            const auto jj = static_cast<std::size_t>(j);
            w_inner += wk[jj] * bernoulli_q_wsum(j);
            W_first_inner += Wk[jj] * cauchy_first(j);
            W_second_inner += Wk[jj] * cauchy_second_neg(j);
        }
        const auto kk = static_cast<std::size_t>(k);
        const Rational inv_fact = factorial(k).reciprocal();
        const Rational sign(k % 2 == 0 ? 1 : -1);
        c_first += scale(sign * inv_fact, w_row[kk] * w_inner);
        c_second += scale(inv_fact, w_row[kk] * w_inner);
        b_from_first += scale(sign * factorial(k), W_row[kk] * W_first_inner);
        b_from_second += scale(factorial(k), W_row[kk] * W_second_inner);
    }
    const Instance inst{n, {}, {}};
    return {
        make_report("cauchy_first_from_bernoulli", inst, c_first, cauchy_first(n)),
        make_report("cauchy_second_from_bernoulli", inst, c_second, cauchy_second_neg(n)),
        make_report("bernoulli_from_cauchy_first", inst, b_from_first, bernoulli_q_wsum(n)),
        make_report("bernoulli_from_cauchy_second", inst, b_from_second, bernoulli_q_wsum(n)),
    };
}

namespace
{

using Reports = std::vector<IdentityReport>;

// Deterministic rational sample points; one generator per family so that family
// filters do not shift the draws of other families.
class PointSampler
{
public:
    PointSampler(std::uint64_t seed, std::uint64_t stream) : gen_(seed * 0x9E3779B97F4A7C15ULL + stream) {}

    Rational nonzero_q()
    {
        const auto a = static_cast<long long>(draw(9)) + 1;
        const auto b = static_cast<long long>(draw(4)) + 1;
        return Rational(draw(2) == 0 ? a : -a, b);
    }

    Rational any_r()
    {
        const auto a = static_cast<long long>(draw(19)) - 9;
        const auto b = static_cast<long long>(draw(4)) + 1;
        return Rational(a, b);
    }

private:
    // Plain modulo keeps the sequence identical across standard libraries.
    std::uint64_t draw(std::uint64_t bound) { return gen_() % bound; }

    std::mt19937_64 gen_;
};

Instance nk(int n, int k)
{
    return {n, k, {}};
}

Instance with_qr(int n, std::optional<int> k, const Rational &q, const Rational &r)
{
    return {n, k, {{"q", q.to_string()}, {"r", r.to_string()}}};
}

MPoly q_var()
{
    return MPoly::var(Var::q);
}

MPoly r_var()
{
    return MPoly::var(Var::r);
}

std::vector<MPoly> golden_bernoulli()
{
    const MPoly q = q_var();
    const MPoly r = r_var();
    const auto c = [](long long a, long long b = 1) { return MPoly(Rational(a, b)); };
    return {
        c(1),
        r - c(1, 2),
        r * r - r - c(1, 2) * q + c(2, 3),
        pow(r, 3) - c(3, 2) * r * r + (c(2) - c(3, 2) * q) * r - c(1, 2) * q * q + c(2) * q - c(3, 2),
        pow(r, 4) - c(2) * pow(r, 3) + (c(4) - c(3) * q) * r * r - c(2) * (q * q - c(4) * q + c(3)) * r -
            c(1, 2) * pow(q, 3) + c(14, 3) * q * q - c(9) * q + c(24, 5),
    };
}

void family_golden(int n_max, std::uint64_t, Reports &out)
{
    const auto golden = golden_bernoulli();
    for (int n = 0; n <= std::min(n_max, 4); ++n) {
        out.push_back(make_report("bernoulli_golden", {n, {}, {}}, bernoulli_q_wsum(n), golden[static_cast<std::size_t>(n)]));
    }
}

void family_whitney_definition(int n_max, std::uint64_t, Reports &out)
{
    for (const auto kind : {WhitneyKind::first, WhitneyKind::second}) {
        const std::string id = kind == WhitneyKind::first ? "whitney_first_recurrence_vs_definition"
                                                          : "whitney_second_recurrence_vs_definition";
        for (int n = 0; n <= n_max; ++n) {
            const auto oracle = whitney_definitional_oracle(kind, n);
            const auto row = whitney_row(kind, n);
            for (int k = 0; k <= n; ++k) {
                out.push_back(make_report(id, nk(n, k), row[static_cast<std::size_t>(k)], oracle[static_cast<std::size_t>(k)]));
            }
        }
    }
}

void family_whitney_explicit(int n_max, std::uint64_t seed, Reports &out)
{
    PointSampler sampler(seed, 1);
    for (int n = 0; n <= n_max; ++n) {
        for (int k = 0; k <= n; ++k) {
            const Rational q = sampler.nonzero_q();
            const Rational r = sampler.any_r();
            const MPoly lhs = evaluate(whitney_second(n, k), {{Var::q, q}, {Var::r, r}});
            out.push_back(make_report("whitney_second_explicit", with_qr(n, k, q, r), lhs,
                                      MPoly(whitney_second_explicit(n, k, q, r))));
        }
    }
}

void family_orthogonality(int n_max, std::uint64_t, Reports &out)
{
    for (int n = 0; n <= n_max; ++n) {
        for (int k = 0; k <= n; ++k) {
            MPoly wW;
            MPoly Ww;
            for (int l = k; l <= n; ++l) {
                wW += whitney_first(n, l) * whitney_second(l, k);
                Ww += whitney_second(n, l) * whitney_first(l, k);
            }
            const MPoly delta(n == k ? 1 : 0);
            out.push_back(make_report("whitney_orthogonality_wW", nk(n, k), wW, delta));
            out.push_back(make_report("whitney_orthogonality_Ww", nk(n, k), Ww, delta));
        }
    }
}

void family_whitney_egf(int n_max, std::uint64_t, Reports &out)
{
    for (int k = 0; k <= n_max; ++k) {
        const auto sides = whitney_egf_sides(k, n_max);
        for (int n = k; n <= n_max; ++n) {
            const auto &s = sides[static_cast<std::size_t>(n - k)];
            out.push_back(make_report("whitney_egf", nk(n, k), s.lhs, s.rhs));
        }
    }
}

void family_whitney_translation(int n_max, std::uint64_t, Reports &out)
{
    for (int n = 0; n <= n_max; ++n) {
        for (int k = 0; k <= n; ++k) {
            const auto s = whitney_translation_sides(n, k);
            out.push_back(make_report("whitney_translation", nk(n, k), s.lhs, s.rhs));
        }
    }
}

void family_whitney_reduction(int n_max, std::uint64_t, Reports &out)
{
    const MPoly q = q_var();
    std::vector<StirlingTriangle> shifted{StirlingTriangle(1), StirlingTriangle(2), StirlingTriangle(3)};
    StirlingTriangle plain;
    for (int n = 0; n <= n_max; ++n) {
        for (int k = 0; k <= n; ++k) {
            const MPoly W = whitney_second(n, k);
            const Rational s(plain.at(n, k));
            out.push_back(make_report("whitney_stirling_reduction", {n, k, {{"q", "1"}, {"r", "0"}}},
                                      evaluate(W, {{Var::q, 1}, {Var::r, 0}}), MPoly(s)));
            out.push_back(make_report("whitney_q_stirling_reduction", {n, k, {{"r", "0"}}}, evaluate(W, {{Var::r, 0}}),
                                      scale(s, pow(q, static_cast<unsigned>(n - k)))));
            for (auto &t : shifted) {
                const int rho = t.rho();
                out.push_back(make_report("whitney_r_stirling_reduction", {n, k, {{"q", "1"}, {"r", std::to_string(rho)}}},
                                          evaluate(W, {{Var::q, 1}, {Var::r, rho}}), MPoly(Rational(t.at(n + rho, k + rho)))));
            }
        }
    }
}

void family_cauchy_integral(int n_max, std::uint64_t, Reports &out)
{
    for (int n = 0; n <= n_max; ++n) {
        out.push_back(make_report("cauchy_first_integral", {n, {}, {}}, cauchy_first(n),
                                  cauchy_integral_oracle(CauchyKind::first, n)));
        out.push_back(make_report("cauchy_second_integral", {n, {}, {}}, cauchy_second_neg(n),
                                  cauchy_integral_oracle(CauchyKind::second, n)));
    }
}

void family_cauchy_convolution(int n_max, std::uint64_t, Reports &out)
{
    for (int n = 0; n <= n_max; ++n) {
        const auto sides = cauchy_W_convolution_sides(n);
        out.push_back(make_report("cauchy_first_W_convolution", {n, {}, {}}, sides[0].lhs, sides[0].rhs));
        out.push_back(make_report("cauchy_second_W_convolution", {n, {}, {}}, sides[1].lhs, sides[1].rhs));
    }
}

void family_bernoulli_w_inversion(int n_max, std::uint64_t, Reports &out)
{
    for (int n = 0; n <= n_max; ++n) {
        out.push_back(bernoulli_w_inversion_check(n));
    }
}

void family_cauchy_bernoulli(int n_max, std::uint64_t, Reports &out)
{
    for (int n = 0; n <= n_max; ++n) {
        for (auto &report : cauchy_bernoulli_checks(n)) {
            out.push_back(std::move(report));
        }
    }
}

void family_bernoulli_routes(int n_max, std::uint64_t seed, Reports &out)
{
    const auto gf = bernoulli_q_gf(n_max);
    PointSampler sampler(seed, 2);
    for (int n = 0; n <= n_max; ++n) {
        const MPoly b = bernoulli_q_wsum(n);
        out.push_back(make_report("bernoulli_wsum_vs_gf", {n, {}, {}}, b, gf[static_cast<std::size_t>(n)]));
        for (int i = 0; i < 5; ++i) {
            const Rational q = sampler.nonzero_q();
            const Rational r = sampler.any_r();
            out.push_back(make_report("bernoulli_wsum_vs_explicit", with_qr(n, {}, q, r),
                                      evaluate(b, {{Var::q, q}, {Var::r, r}}), MPoly(bernoulli_q_explicit(n, q, r))));
        }
    }
}

void family_bernoulli_translation(int n_max, std::uint64_t, Reports &out)
{
    for (int n = 0; n <= n_max; ++n) {
        const auto rs = bernoulli_translation_sides(n);
        const auto numbers = bernoulli_translation_numbers_sides(n);
        out.push_back(make_report("bernoulli_translation_rs", {n, {}, {}}, rs.lhs, rs.rhs));
        out.push_back(make_report("bernoulli_translation_numbers", {n, {}, {}}, numbers.lhs, numbers.rhs));
    }
}

void family_sign_law(int n_max, std::uint64_t, Reports &out)
{
    const auto pb = poly_bernoulli_q(n_max, 1);
    for (int n = 0; n <= n_max; ++n) {
        MPoly bridged = substitute(pb[static_cast<std::size_t>(n)], Var::z, r_var());
        if (n % 2 == 1) {
            bridged = -bridged;
        }
        out.push_back(make_report("poly_bernoulli_sign_law", {n, 1, {}}, bernoulli_q_wsum(n), bridged));
    }
}

void family_classical_reduction(int n_max, std::uint64_t, Reports &out)
{
    const MPoly q = q_var();
    const auto stirling_sum = classical_bernoulli_oracle(n_max);
    const auto gf_numbers = classical_bernoulli_gf(n_max);
    const auto gf_polys = classical_bernoulli_polynomials_gf(n_max);
    const auto numbers_q = bernoulli_q_numbers(n_max);
    StirlingTriangle plain;
    for (int n = 0; n <= n_max; ++n) {
        const auto nn = static_cast<std::size_t>(n);
        const MPoly b = bernoulli_q_wsum(n);
        const MPoly at_q1 = evaluate(b, {{Var::q, 1}});
        const MPoly at_origin = evaluate(b, {{Var::q, 1}, {Var::r, 0}});

        MPoly q_stirling;
        for (int k = 0; k <= n; ++k) {
            const Rational w = factorial(k) / Rational(k + 1) * Rational(plain.at(n, k));
            q_stirling += scale(k % 2 == 0 ? w : -w, pow(q, static_cast<unsigned>(n - k)));
        }
        out.push_back(make_report("bernoulli_numbers_stirling_sum", {n, {}, {{"r", "0"}}}, numbers_q[nn], q_stirling));

        const Instance origin{n, {}, {{"q", "1"}, {"r", "0"}}};
        out.push_back(make_report("classical_bernoulli_stirling", origin, at_origin, MPoly(stirling_sum[nn])));
        out.push_back(make_report("classical_bernoulli_gf", origin, at_origin, MPoly(gf_numbers[nn])));
        out.push_back(make_report("classical_bernoulli_polynomial_gf", {n, {}, {{"q", "1"}}}, at_q1, gf_polys[nn]));
        for (int rho = 1; rho <= 3; ++rho) {
            out.push_back(make_report("classical_bernoulli_r_stirling", {n, {}, {{"q", "1"}, {"r", std::to_string(rho)}}},
                                      evaluate(at_q1, {{Var::r, rho}}), MPoly(classical_bernoulli_r_stirling(n, rho))));
        }
    }
}

// Leading structure in r: degree n, leading coefficient 1 (Bernoulli) or (-1)^n
// (first-kind Cauchy), and r^{n-1} coefficient -n/2 for Bernoulli.
void family_degree_structure(int n_max, std::uint64_t, Reports &out)
{
    const auto describe = [](const MPoly &p, int n) {
        std::string s = "deg_r=" + std::to_string(degree_in(p, Var::r)) +
                        "; lead=" + p.coefficient_of(Var::r, static_cast<unsigned>(n)).to_string();
        return s;
    };
    for (int n = 0; n <= n_max; ++n) {
        const MPoly b = bernoulli_q_wsum(n);
        std::string lhs = describe(b, n);
        std::string rhs = "deg_r=" + std::to_string(n) + "; lead=1";
        if (n >= 1) {
            lhs += "; next=" + b.coefficient_of(Var::r, static_cast<unsigned>(n - 1)).to_string();
            rhs += "; next=" + Rational(-n, 2).to_string();
        }
        IdentityReport report{"bernoulli_leading_structure", {n, {}, {}}, Status::fail, lhs, rhs};
        report.status = lhs == rhs ? Status::pass : Status::fail;
        out.push_back(std::move(report));

        const std::string c_lhs = describe(cauchy_first(n), n);
        const std::string c_rhs = "deg_r=" + std::to_string(n) + "; lead=" + (n % 2 == 0 ? "1" : "-1");
        out.push_back({"cauchy_first_leading_structure", {n, {}, {}}, c_lhs == c_rhs ? Status::pass : Status::fail, c_lhs, c_rhs});
    }
}

using FamilyFn = void (*)(int, std::uint64_t, Reports &);

const std::vector<std::pair<std::string_view, FamilyFn>> &family_table()
{
    static const std::vector<std::pair<std::string_view, FamilyFn>> table{
        {"golden", family_golden},
        {"whitney_definition", family_whitney_definition},
        {"whitney_explicit", family_whitney_explicit},
        {"orthogonality", family_orthogonality},
        {"whitney_egf", family_whitney_egf},
        {"whitney_translation", family_whitney_translation},
        {"whitney_reduction", family_whitney_reduction},
        {"cauchy_integral", family_cauchy_integral},
        {"cauchy_convolution", family_cauchy_convolution},
        {"bernoulli_w_inversion", family_bernoulli_w_inversion},
        {"cauchy_bernoulli", family_cauchy_bernoulli},
        {"bernoulli_routes", family_bernoulli_routes},
        {"bernoulli_translation", family_bernoulli_translation},
        {"sign_law", family_sign_law},
        {"classical_reduction", family_classical_reduction},
        {"degree_structure", family_degree_structure},
    };
    return table;
}

} // namespace

const std::vector<std::string_view> &suite_families()
{
    static const std::vector<std::string_view> names = [] {
        std::vector<std::string_view> out;
        for (const auto &[name, fn] : family_table()) {
            out.push_back(name);
        }
        return out;
    }();
    return names;
}

std::vector<IdentityReport> run_suite(int n_max, std::uint64_t seed, const std::vector<std::string> &families)
{
    if (n_max < 0) {
        throw std::out_of_range("run_suite: negative n_max");
    }
    for (const auto &f : families) {
        const auto &known = suite_families();
        if (std::find(known.begin(), known.end(), f) == known.end()) {
            throw std::invalid_argument("run_suite: unknown identity family '" + f + "'");
        }
    }
    Reports out;
    for (const auto &[name, fn] : family_table()) {
        if (families.empty() || std::find(families.begin(), families.end(), name) != families.end()) {
            fn(n_max, seed, out);
        }
    }
    std::sort(out.begin(), out.end(), [](const IdentityReport &a, const IdentityReport &b) {
        return std::tie(a.identity_id, a.instance) < std::tie(b.identity_id, b.instance);
    });
    return out;
}

bool all_pass(const std::vector<IdentityReport> &reports)
{
    return std::all_of(reports.begin(), reports.end(), [](const IdentityReport &r) { return r.status == Status::pass; });
}

} // namespace rwhitney
