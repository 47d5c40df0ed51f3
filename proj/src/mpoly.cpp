#include <rwhitney/mpoly.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace rwhitney
{

std::string_view var_name(Var v)
{
    static constexpr std::array<std::string_view, var_count> names{"q", "r", "s", "z", "x"};
    return names[static_cast<std::size_t>(v)];
}

Var var_from_name(std::string_view name)
{
    for (const Var v : all_vars) {
        if (var_name(v) == name) {
            return v;
        }
    }
    throw std::invalid_argument("unknown indeterminate '" + std::string(name) + "'");
}

Monomial Monomial::of(Var v, exponent_type e)
{
    Monomial m;
    m.exps_[static_cast<std::size_t>(v)] = e;
    return m;
}

Monomial::exponent_type Monomial::total_degree() const
{
    return std::accumulate(exps_.begin(), exps_.end(), exponent_type{0});
}

Monomial Monomial::with(Var v, exponent_type e) const
{
    Monomial m = *this;
    m.exps_[static_cast<std::size_t>(v)] = e;
    return m;
}

Monomial operator*(const Monomial &a, const Monomial &b)
{
    Monomial m;
    for (std::size_t i = 0; i < var_count; ++i) {
        m.exps_[i] = a.exps_[i] + b.exps_[i];
    }
    return m;
}

std::string Monomial::to_string() const
{
    std::string out;
    for (const Var v : all_vars) {
        const auto e = (*this)[v];
        if (e == 0) {
            continue;
        }
        if (!out.empty()) {
            out += '*';
        }
        out += var_name(v);
        if (e > 1) {
            out += '^' + std::to_string(e);
        }
    }
    return out;
}

bool GrlexDescending::operator()(const Monomial &a, const Monomial &b) const
{
    const auto da = a.total_degree();
    const auto db = b.total_degree();
    if (da != db) {
        return da > db;
    }
    // Ties broken lexicographically from the most significant indeterminate (x) down.
    for (auto i = var_count; i-- > 0;) {
        const auto ea = a.exponents()[i];
        const auto eb = b.exponents()[i];
        if (ea != eb) {
            return ea > eb;
        }
    }
    return false;
}

EvalPoint::EvalPoint(std::initializer_list<std::pair<Var, Rational>> assignments)
{
    for (const auto &[v, value] : assignments) {
        assign(v, value);
    }
}

EvalPoint &EvalPoint::assign(Var v, Rational value)
{
    auto &slot = values_[static_cast<std::size_t>(v)];
    if (slot) {
        throw std::invalid_argument("EvalPoint: '" + std::string(var_name(v)) + "' assigned twice");
    }
    slot = std::move(value);
    return *this;
}

bool EvalPoint::empty() const
{
    return std::none_of(values_.begin(), values_.end(), [](const auto &v) { return v.has_value(); });
}

MPoly::MPoly(const Rational &c)
{
    if (!c.is_zero()) {
        terms_.emplace(Monomial{}, c);
    }
}

MPoly::MPoly(const Rational &c, const Monomial &m)
{
    if (!c.is_zero()) {
        terms_.emplace(m, c);
    }
}

MPoly MPoly::var(Var v)
{
    return MPoly(Rational(1), Monomial::of(v));
}

bool MPoly::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational MPoly::constant_value() const
{
    if (!is_constant()) {
        throw std::domain_error("MPoly: '" + to_string() + "' is not a constant");
    }
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

Rational MPoly::coefficient(const Monomial &m) const
{
    const auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

MPoly MPoly::coefficient_of(Var v, Monomial::exponent_type e) const
{
    MPoly out;
    for (const auto &[m, c] : terms_) {
        if (m[v] == e) {
            out.terms_.emplace(m.with(v, 0), c);
        }
    }
    return out;
}

void MPoly::add_term(const Monomial &m, const Rational &c)
{
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

std::string MPoly::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto &[m, c] : terms_) {
        const bool negative = c.sign() < 0;
        if (first) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        const Rational mag = c.abs();
        if (m.is_one()) {
            out += mag.to_string();
        } else if (mag.is_one()) {
            out += m.to_string();
        } else {
            out += mag.to_string() + "*" + m.to_string();
        }
    }
    return out;
}

MPoly &MPoly::operator+=(const MPoly &o)
{
    for (const auto &[m, c] : o.terms_) {
        add_term(m, c);
    }
    return *this;
}

MPoly &MPoly::operator-=(const MPoly &o)
{
    for (const auto &[m, c] : o.terms_) {
        add_term(m, -c);
    }
    return *this;
}

MPoly &MPoly::operator*=(const MPoly &o)
{
    *this = *this * o;
    return *this;
}

MPoly operator*(const MPoly &a, const MPoly &b)
{
    MPoly out;
    for (const auto &[ma, ca] : a.terms_) {
        for (const auto &[mb, cb] : b.terms_) {
            out.add_term(ma * mb, ca * cb);
        }
    }
    return out;
}

MPoly operator-(MPoly a)
{
    for (auto &[m, c] : a.terms_) {
        c = -c;
    }
    return a;
}

MPoly scale(const Rational &c, const MPoly &a)
{
    if (c.is_zero()) {
        return MPoly{};
    }
    MPoly out = a;
    for (auto &[m, coeff] : out.terms_) {
        coeff *= c;
    }
    return out;
}

MPoly pow(const MPoly &base, unsigned exponent)
{
    MPoly result(1);
    MPoly b = base;
    while (exponent > 0) {
        if ((exponent & 1U) != 0) {
            result *= b;
        }
        exponent >>= 1U;
        if (exponent > 0) {
            b *= b;
        }
    }
    return result;
}

MPoly evaluate(const MPoly &a, const EvalPoint &point)
{
    MPoly out;
    for (const auto &[m, c] : a.terms()) {
        Rational coeff = c;
        Monomial rest = m;
        for (const Var v : all_vars) {
            if (const auto &value = point.get(v); value && m[v] > 0) {
                coeff *= pow(*value, m[v]);
                rest = rest.with(v, 0);
            }
        }
        out += MPoly(coeff, rest);
    }
    return out;
}

MPoly substitute(const MPoly &a, Var v, const MPoly &expr)
{
    const auto deg = degree_in(a, v);
    std::vector<MPoly> powers{MPoly(1)};
    for (Monomial::exponent_type e = 1; e <= deg; ++e) {
        powers.push_back(powers.back() * expr);
    }
    MPoly out;
    for (const auto &[m, c] : a.terms()) {
        out += MPoly(c, m.with(v, 0)) * powers[m[v]];
    }
    return out;
}

MPoly integrate_x_unit(const MPoly &a)
{
    MPoly out;
    for (const auto &[m, c] : a.terms()) {
        out += MPoly(c / Rational(static_cast<long long>(m[Var::x]) + 1), m.with(Var::x, 0));
    }
    return out;
}

MPoly divide_by_var_power(const MPoly &a, Var v, Monomial::exponent_type e)
{
    MPoly out;
    for (const auto &[m, c] : a.terms()) {
        if (m[v] < e) {
            throw std::domain_error("MPoly: '" + a.to_string() + "' is not divisible by " + std::string(var_name(v)) +
                                    "^" + std::to_string(e));
        }
        out += MPoly(c, m.with(v, m[v] - e));
    }
    return out;
}

Monomial::exponent_type total_degree(const MPoly &a)
{
    // Graded order: the first term has maximal total degree.
    return a.is_zero() ? 0 : a.terms().begin()->first.total_degree();
}

Monomial::exponent_type degree_in(const MPoly &a, Var v)
{
    Monomial::exponent_type d = 0;
    for (const auto &[m, c] : a.terms()) {
        d = std::max(d, m[v]);
    }
    return d;
}

} // namespace rwhitney
