#ifndef RWHITNEY_RATIONAL_HPP
#define RWHITNEY_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace rwhitney
{

using BigInt = mpz_class;

/// Exact rational number in canonical form: denominator > 0, gcd(|num|, den) = 1,
/// zero stored as 0/1. Immutable value type.
class Rational
{
public:
    Rational() = default;
    Rational(long long v) : value_(static_cast<long>(v)) {} // NOLINT: implicit on purpose
    explicit Rational(const BigInt &v) : value_(v) {}
    Rational(const BigInt &num, const BigInt &den);
    Rational(long long num, long long den);

    /// Parses "p" or "p/q" (p may carry a leading '-'). Throws std::invalid_argument
    /// on malformed input and std::domain_error on a zero denominator.
    static Rational parse(std::string_view text);

    [[nodiscard]] BigInt numerator() const { return value_.get_num(); }
    [[nodiscard]] BigInt denominator() const { return value_.get_den(); }

    [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
    [[nodiscard]] bool is_one() const { return value_ == 1; }
    [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
    [[nodiscard]] int sign() const { return sgn(value_); }

    [[nodiscard]] Rational abs() const;
    /// Throws std::domain_error for zero.
    [[nodiscard]] Rational reciprocal() const;

    /// Canonical "p/q" form; integers print as "p".
    [[nodiscard]] std::string to_string() const;

    /// Display-only decimal approximation.
    [[nodiscard]] double approx() const { return value_.get_d(); }

    Rational &operator+=(const Rational &o);
    Rational &operator-=(const Rational &o);
    Rational &operator*=(const Rational &o);
    Rational &operator/=(const Rational &o);

    friend Rational operator+(Rational a, const Rational &b) { return a += b; }
    friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational &b) { return a /= b; }
    friend Rational operator-(const Rational &a);

    friend bool operator==(const Rational &a, const Rational &b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b);

    friend std::ostream &operator<<(std::ostream &os, const Rational &a) { return os << a.to_string(); }

private:
    mpq_class value_{0};
};

/// a^e for e >= 0.
Rational pow(const Rational &base, unsigned exponent);

/// n! for n >= 0; throws std::invalid_argument for negative n.
Rational factorial(int n);

/// C(n, k); zero when k < 0 or k > n. Throws std::invalid_argument for negative n.
Rational binomial(int n, int k);

} // namespace rwhitney

#endif
