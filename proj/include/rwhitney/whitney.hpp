#ifndef RWHITNEY_WHITNEY_HPP
#define RWHITNEY_WHITNEY_HPP

#include <mutex>
#include <vector>

#include <rwhitney/mpoly.hpp>
#include <rwhitney/rational.hpp>
#include <rwhitney/series.hpp>

namespace rwhitney
{

enum class WhitneyKind { first, second };

/// Memoized r-Whitney triangle over Q[q, r], grown row by row on demand.
///
/// Second kind: W(n,k) = W(n-1,k-1) + (q k + r) W(n-1,k).
/// First kind:  w(n,k) = w(n-1,k-1) - (r + q (n-1)) w(n-1,k).
/// Both recurrences are certified against whitney_definitional_oracle in the tests.
///
/// Not thread-safe while growing; see whitney_first()/whitney_second() for the
/// shared, locked instances.
class WhitneyTriangle
{
public:
    explicit WhitneyTriangle(WhitneyKind kind);

    [[nodiscard]] WhitneyKind kind() const { return kind_; }
    /// Largest row computed so far.
    [[nodiscard]] int max_n() const { return static_cast<int>(rows_.size()) - 1; }

    void extend_to(int n);
    /// Throws std::out_of_range unless 0 <= k <= n.
    const MPoly &at(int n, int k);
    const std::vector<MPoly> &row(int n);

private:
    WhitneyKind kind_;
    std::vector<std::vector<MPoly>> rows_;
};

/// W(n,k) as a polynomial in q and r; throws std::out_of_range unless 0 <= k <= n.
MPoly whitney_second(int n, int k);
/// w(n,k) as a polynomial in q and r; throws std::out_of_range unless 0 <= k <= n.
MPoly whitney_first(int n, int k);
/// Row n of either triangle.
std::vector<MPoly> whitney_row(WhitneyKind kind, int n);

/// Alternating-sum closed form of W(n,k) at a numeric point. Throws
/// std::domain_error when q = 0 (the sum is divided by q^k).
Rational whitney_second_explicit(int n, int k, const Rational &q, const Rational &r);

/// Row n computed straight from the defining basis expansions, without the
/// recurrence:
///   second kind: (qx+r)^n = sum_k q^k W(n,k) (x)_k
///   first kind:  q^n (x)_n = sum_k w(n,k) (qx+r)^k
/// Each is a triangular change of basis in x, solved top-down.
std::vector<MPoly> whitney_definitional_oracle(WhitneyKind kind, int n);

/// e^{rt}((e^{qt}-1)/q)^k / k! to the given order; (e^{qt}-1)/q has polynomial
/// coefficients, so no division by q occurs.
TruncSeries whitney_egf_series(int k, std::size_t order);

/// n! [t^n] e^{rt}((e^{qt}-1)/q)^k / k! against W(n,k) for n = k..N.
std::vector<IdentitySides> whitney_egf_sides(int k, int N);
bool whitney_egf_check(int k, int N);

/// W_{q,r+s}(n,k) against sum_{j=k}^{n} C(n,j) r^{n-j} W_{q,s}(j,k).
IdentitySides whitney_translation_sides(int n, int k);
bool whitney_translation(int n, int k);

/// Falling factorial x(x-1)...(x-n+1) in the indeterminate x.
MPoly falling_factorial_x(int n);

} // namespace rwhitney

#endif
