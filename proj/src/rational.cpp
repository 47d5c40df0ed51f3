#include <rwhitney/rational.hpp>

#include <cctype>
#include <stdexcept>
#include <utility>

namespace rwhitney
{

namespace
{

bool all_digits(std::string_view s)
{
    if (s.empty()) {
        return false;
    }
    for (const char c : s) {
        if (std::isdigit(static_cast<unsigned char>(c)) == 0) {
            return false;
        }
    }
    return true;
}

} // namespace

Rational::Rational(const BigInt &num, const BigInt &den)
{
    if (den == 0) {
        throw std::domain_error("Rational: zero denominator");
    }
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational::Rational(long long num, long long den) : Rational(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den))) {}

Rational Rational::parse(std::string_view text)
{
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    bool negative = false;
    if (!num.empty() && num.front() == '-') {
        negative = true;
        num.remove_prefix(1);
    }
    if (!all_digits(num) || !all_digits(den)) {
        throw std::invalid_argument("Rational: cannot parse '" + std::string(text) + "'");
    }
    BigInt n(std::string(num), 10);
    if (negative) {
        n = -n;
    }
    return Rational(n, BigInt(std::string(den), 10));
}

Rational Rational::abs() const
{
    Rational r;
    r.value_ = ::abs(value_);
    return r;
}

Rational Rational::reciprocal() const
{
    if (is_zero()) {
        throw std::domain_error("Rational: reciprocal of zero");
    }
    Rational r;
    r.value_ = 1 / value_;
    return r;
}

std::string Rational::to_string() const
{
    if (is_integer()) {
        return value_.get_num().get_str();
    }
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational &Rational::operator+=(const Rational &o)
{
    value_ += o.value_;
    return *this;
}

Rational &Rational::operator-=(const Rational &o)
{
    value_ -= o.value_;
    return *this;
}

Rational &Rational::operator*=(const Rational &o)
{
    value_ *= o.value_;
    return *this;
}

Rational &Rational::operator/=(const Rational &o)
{
    if (o.is_zero()) {
        throw std::domain_error("Rational: division by zero");
    }
    value_ /= o.value_;
    return *this;
}

Rational operator-(const Rational &a)
{
    Rational r;
    r.value_ = -a.value_;
    return r;
}

std::strong_ordering operator<=>(const Rational &a, const Rational &b)
{
    const int c = cmp(a.value_, b.value_);
    if (c < 0) {
        return std::strong_ordering::less;
    }
    return c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

Rational pow(const Rational &base, unsigned exponent)
{
    BigInt num;
    BigInt den;
    mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), exponent);
    return Rational(num, den);
}

Rational factorial(int n)
{
    if (n < 0) {
        throw std::invalid_argument("factorial: negative argument");
    }
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(f);
}

Rational binomial(int n, int k)
{
    if (n < 0) {
        throw std::invalid_argument("binomial: negative n");
    }
    if (k < 0 || k > n) {
        return Rational(0);
    }
    BigInt c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(c);
}

} // namespace rwhitney
