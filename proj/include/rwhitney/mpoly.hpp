#ifndef RWHITNEY_MPOLY_HPP
#define RWHITNEY_MPOLY_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include <rwhitney/rational.hpp>

namespace rwhitney
{

/// The fixed indeterminate alphabet, listed in increasing term-order significance.
enum class Var : std::uint8_t { q = 0, r = 1, s = 2, z = 3, x = 4 };

inline constexpr std::size_t var_count = 5;
inline constexpr std::array<Var, var_count> all_vars{Var::q, Var::r, Var::s, Var::z, Var::x};

std::string_view var_name(Var v);
/// Throws std::invalid_argument for names outside the alphabet.
Var var_from_name(std::string_view name);

/// Exponent vector (e_q, e_r, e_s, e_z, e_x).
class Monomial
{
public:
    using exponent_type = std::uint32_t;

    Monomial() = default;
    explicit Monomial(const std::array<exponent_type, var_count> &exps) : exps_(exps) {}
    static Monomial of(Var v, exponent_type e = 1);

    [[nodiscard]] exponent_type operator[](Var v) const { return exps_[static_cast<std::size_t>(v)]; }
    [[nodiscard]] const std::array<exponent_type, var_count> &exponents() const { return exps_; }
    [[nodiscard]] exponent_type total_degree() const;
    [[nodiscard]] bool is_one() const { return total_degree() == 0; }
    [[nodiscard]] Monomial with(Var v, exponent_type e) const;

    friend Monomial operator*(const Monomial &a, const Monomial &b);
    friend bool operator==(const Monomial &, const Monomial &) = default;

    [[nodiscard]] std::string to_string() const;

private:
    std::array<exponent_type, var_count> exps_{};
};

/// Graded lexicographic order with q < r < s < z < x. Orders greater monomials first,
/// so map iteration runs in canonical (descending) order.
struct GrlexDescending {
    bool operator()(const Monomial &a, const Monomial &b) const;
};

/// Partial specialization of indeterminates to rationals.
class EvalPoint
{
public:
    EvalPoint() = default;
    /// Throws std::invalid_argument if an indeterminate is assigned twice.
    EvalPoint(std::initializer_list<std::pair<Var, Rational>> assignments);

    /// Throws std::invalid_argument if v is already assigned.
    EvalPoint &assign(Var v, Rational value);
    [[nodiscard]] const std::optional<Rational> &get(Var v) const { return values_[static_cast<std::size_t>(v)]; }
    [[nodiscard]] bool empty() const;

private:
    std::array<std::optional<Rational>, var_count> values_{};
};

/// Sparse multivariate polynomial over Rational in {q, r, s, z, x}.
/// No stored coefficient is zero, so structural equality is mathematical equality.
class MPoly
{
public:
    using term_map = std::map<Monomial, Rational, GrlexDescending>;

    MPoly() = default;
    MPoly(const Rational &c); // NOLINT: constants embed implicitly
    MPoly(long long c) : MPoly(Rational(c)) {} // NOLINT
    MPoly(const Rational &c, const Monomial &m);

    static MPoly var(Var v);

    [[nodiscard]] const term_map &terms() const { return terms_; }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] bool is_constant() const;
    /// Throws std::domain_error if the polynomial is not constant.
    [[nodiscard]] Rational constant_value() const;
    /// Coefficient of the monomial m (zero when absent).
    [[nodiscard]] Rational coefficient(const Monomial &m) const;
    /// Polynomial coefficient of v^e when the polynomial is viewed as univariate in v.
    [[nodiscard]] MPoly coefficient_of(Var v, Monomial::exponent_type e) const;

    /// Canonical text, e.g. "r^2 - r - 1/2*q + 2/3".
    [[nodiscard]] std::string to_string() const;

    MPoly &operator+=(const MPoly &o);
    MPoly &operator-=(const MPoly &o);
    MPoly &operator*=(const MPoly &o);

    friend MPoly operator+(MPoly a, const MPoly &b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly &b) { return a -= b; }
    friend MPoly operator*(const MPoly &a, const MPoly &b);
    friend MPoly operator-(MPoly a);
    friend MPoly scale(const Rational &c, const MPoly &a);

    friend bool operator==(const MPoly &a, const MPoly &b) { return a.terms_ == b.terms_; }

    friend std::ostream &operator<<(std::ostream &os, const MPoly &a) { return os << a.to_string(); }

private:
    void add_term(const Monomial &m, const Rational &c);

    term_map terms_;
};

MPoly scale(const Rational &c, const MPoly &a);
MPoly pow(const MPoly &base, unsigned exponent);

/// Substitutes the assigned indeterminates; unassigned ones stay symbolic.
MPoly evaluate(const MPoly &a, const EvalPoint &point);

/// Replaces every occurrence of v by expr.
MPoly substitute(const MPoly &a, Var v, const MPoly &expr);

/// Definite integral over x in [0, 1]: x^e maps to 1/(e+1), other indeterminates untouched.
MPoly integrate_x_unit(const MPoly &a);

/// Exact division by v^e. Throws std::domain_error if some term has a smaller v-degree.
MPoly divide_by_var_power(const MPoly &a, Var v, Monomial::exponent_type e);

/// Degrees of the zero polynomial are 0; callers distinguish it with is_zero().
Monomial::exponent_type total_degree(const MPoly &a);
Monomial::exponent_type degree_in(const MPoly &a, Var v);

/// Left and right sides of an identity instance, both in canonical form.
struct IdentitySides {
    MPoly lhs;
    MPoly rhs;
    [[nodiscard]] bool holds() const { return lhs == rhs; }
};

} // namespace rwhitney

#endif
