#ifndef RWHITNEY_SERIALIZE_HPP
#define RWHITNEY_SERIALIZE_HPP

#include <vector>

#include <json.hpp>

#include <rwhitney/identities.hpp>
#include <rwhitney/mpoly.hpp>

// JSON schemas:
//   MPoly:          [{"exponents": [e_q, e_r, e_s, e_z, e_x], "coefficient": "p/q"}, ...] in canonical order
//   IdentityReport: {"identity_id", "instance": {"n", "k"?, "specializations"?}, "status", "lhs", "rhs"}

namespace rwhitney
{

using Json = nlohmann::ordered_json;

Json mpoly_to_json(const MPoly &p);
/// Throws std::invalid_argument on schema violations.
MPoly mpoly_from_json(const Json &j);

Json report_to_json(const IdentityReport &report);
IdentityReport report_from_json(const Json &j);

Json reports_to_json(const std::vector<IdentityReport> &reports);
std::vector<IdentityReport> reports_from_json(const Json &j);

} // namespace rwhitney

#endif
