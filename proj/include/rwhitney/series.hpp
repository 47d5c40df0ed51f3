#ifndef RWHITNEY_SERIES_HPP
#define RWHITNEY_SERIES_HPP

#include <cstddef>
#include <vector>

#include <rwhitney/mpoly.hpp>

namespace rwhitney
{

/// Truncated formal power series in t with MPoly coefficients, known exactly
/// through t^order. Binary operations truncate to the smaller order and never
/// extend precision.
class TruncSeries
{
public:
    /// Zero series of the given order.
    explicit TruncSeries(std::size_t order) : coeffs_(order + 1) {}
    /// Throws std::invalid_argument if coeffs is empty.
    explicit TruncSeries(std::vector<MPoly> coeffs);

    static TruncSeries constant(const MPoly &c, std::size_t order);
    /// The series t (zero when order is 0).
    static TruncSeries t(std::size_t order);

    [[nodiscard]] std::size_t order() const { return coeffs_.size() - 1; }
    [[nodiscard]] const MPoly &operator[](std::size_t i) const { return coeffs_.at(i); }
    [[nodiscard]] const std::vector<MPoly> &coefficients() const { return coeffs_; }
    [[nodiscard]] TruncSeries truncated(std::size_t order) const;

    /// Applies f to every coefficient.
    template <typename F>
    [[nodiscard]] TruncSeries map(F &&f) const
    {
        std::vector<MPoly> out;
        out.reserve(coeffs_.size());
        for (const auto &c : coeffs_) {
            out.push_back(f(c));
        }
        return TruncSeries(std::move(out));
    }

    friend TruncSeries operator+(const TruncSeries &a, const TruncSeries &b);
    friend TruncSeries operator-(const TruncSeries &a, const TruncSeries &b);
    friend TruncSeries operator*(const TruncSeries &a, const TruncSeries &b);
    friend TruncSeries operator-(const TruncSeries &a);
    friend bool operator==(const TruncSeries &, const TruncSeries &) = default;

private:
    std::vector<MPoly> coeffs_;
};

/// sum_{i=0}^{order} c^i t^i / i!, i.e. e^{ct}.
TruncSeries series_exp_linear(const MPoly &c, std::size_t order);

TruncSeries series_scale(const MPoly &c, const TruncSeries &a);

/// a / b. The constant coefficient of b must be a nonzero rational constant,
/// otherwise std::domain_error.
TruncSeries series_div(const TruncSeries &a, const TruncSeries &b);

/// a / t^m with order reduced by m. Throws std::domain_error if any of the
/// coefficients of t^0..t^{m-1} is nonzero or if m exceeds the order.
TruncSeries shift_down(const TruncSeries &a, std::size_t m);

/// ln(1 + u) for u with zero constant term (std::domain_error otherwise).
TruncSeries series_log1p(const TruncSeries &u);

/// Li_k(u) = sum_{m>=1} u^m / m^k for u with zero constant term and any integer k.
TruncSeries series_polylog(const TruncSeries &u, int k);

/// n! [t^n] a. Throws std::out_of_range if n exceeds the order.
MPoly extract_egf_coefficient(const TruncSeries &a, std::size_t n);

} // namespace rwhitney

#endif
