#ifndef RWHITNEY_BERNOULLI_HPP
#define RWHITNEY_BERNOULLI_HPP

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include <rwhitney/mpoly.hpp>
#include <rwhitney/rational.hpp>
#include <rwhitney/series.hpp>

namespace rwhitney
{

/// How a Bernoulli value was computed. The W-sum is the reference definition;
/// the other two routes exist to cross-check it.
enum class BernoulliRoute { wsum, explicit_sum, gf };

std::string_view route_name(BernoulliRoute route);
std::optional<BernoulliRoute> route_from_name(std::string_view name);

struct BernoulliQValue {
    int n = 0;
    MPoly value;
    BernoulliRoute route = BernoulliRoute::wsum;
};

struct PolyBernoulliQValue {
    int n = 0;
    int k = 1;
    MPoly value;
};

/// B_n^q(r) = sum_k (-1)^k k!/(k+1) W(n,k), symbolic in q and r. Memoized.
MPoly bernoulli_q_wsum(int n);

/// The double sum sum_k 1/(q^k (k+1)) sum_j (-1)^j C(k,j) (r+jq)^n at a numeric
/// point. Throws std::domain_error when q = 0.
Rational bernoulli_q_explicit(int n, const Rational &q, const Rational &r);

/// Generating function q e^{rt} ln(1+u) / (e^{qt}-1) with u = (e^{qt}-1)/q, computed
/// as e^{rt} (ln(1+u)/t) / (u/t) so the only division is by a series with constant
/// term 1. Carried to order `order`.
TruncSeries bernoulli_q_gf_series(std::size_t order);

/// B_0^q(r)..B_{n_max}^q(r) read off bernoulli_q_gf_series.
std::vector<MPoly> bernoulli_q_gf(int n_max);

/// Bernoulli numbers with a q parameter: B_n^q(0) for n = 0..n_max.
std::vector<MPoly> bernoulli_q_numbers(int n_max);

/// Generating function q e^{-zt}/(1-e^{-qt}) Li_k((1-e^{-qt})/q) to the given order.
TruncSeries poly_bernoulli_q_series(std::size_t order, int k);

/// B_{n,q}^{(k)}(z) for n = 0..n_max, symbolic in q and z.
std::vector<MPoly> poly_bernoulli_q(int n_max, int k);

/// The two shift identities:
///   B_n^q(r+s) = sum_j C(n,j) r^{n-j} B_j^q(s)
///   B_n^q(r)   = sum_j C(n,j) r^{n-j} B_j^q(0)
IdentitySides bernoulli_translation_sides(int n);
IdentitySides bernoulli_translation_numbers_sides(int n);
bool bernoulli_translation_check(int n);

} // namespace rwhitney

#endif
