#ifndef RWHITNEY_IDENTITIES_HPP
#define RWHITNEY_IDENTITIES_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <rwhitney/mpoly.hpp>

namespace rwhitney
{

/// Parameters of one identity instance: the index n, an optional second index k,
/// and any numeric specializations (name, canonical rational string).
struct Instance {
    int n = 0;
    std::optional<int> k;
    std::vector<std::pair<std::string, std::string>> params;

    friend bool operator==(const Instance &, const Instance &) = default;
    friend std::strong_ordering operator<=>(const Instance &a, const Instance &b);
};

enum class Status { pass, fail };

/// Outcome of checking one identity at one instance. status is pass iff the
/// canonical lhs and rhs strings coincide.
struct IdentityReport {
    std::string identity_id;
    Instance instance;
    Status status = Status::fail;
    std::string lhs;
    std::string rhs;

    friend bool operator==(const IdentityReport &, const IdentityReport &) = default;
};

IdentityReport make_report(std::string identity_id, Instance instance, const MPoly &lhs, const MPoly &rhs);

/// sum_j (-1)^n w(n,j) B_j^q(r) = n!/(n+1).
IdentityReport bernoulli_w_inversion_check(int n);

/// The four double-sum conversions between the Cauchy and Bernoulli families,
/// each compared against the directly computed value.
std::vector<IdentityReport> cauchy_bernoulli_checks(int n);

/// Identity families the suite knows about, in a fixed order.
const std::vector<std::string_view> &suite_families();

/// Runs the selected families (all when `families` is empty) for every applicable
/// index up to n_max. Numeric specializations are drawn from `seed`. The result is
/// sorted by (identity_id, instance). Throws std::invalid_argument for unknown
/// family names.
std::vector<IdentityReport> run_suite(int n_max, std::uint64_t seed, const std::vector<std::string> &families = {});

bool all_pass(const std::vector<IdentityReport> &reports);

} // namespace rwhitney

#endif
