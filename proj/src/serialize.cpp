#include <rwhitney/serialize.hpp>

#include <stdexcept>
#include <string>

namespace rwhitney
{

Json mpoly_to_json(const MPoly &p)
{
    Json out = Json::array();
    for (const auto &[m, c] : p.terms()) {
        Json exps = Json::array();
        for (const auto e : m.exponents()) {
            exps.push_back(e);
        }
        out.push_back(Json{{"exponents", exps}, {"coefficient", c.to_string()}});
    }
    return out;
}

MPoly mpoly_from_json(const Json &j)
{
    if (!j.is_array()) {
        throw std::invalid_argument("MPoly JSON: expected an array of terms");
    }
    MPoly out;
    for (const auto &term : j) {
        const auto &exps = term.at("exponents");
        if (!exps.is_array() || exps.size() != var_count) {
            throw std::invalid_argument("MPoly JSON: exponents must have " + std::to_string(var_count) + " entries");
        }
        std::array<Monomial::exponent_type, var_count> e{};
        for (std::size_t i = 0; i < var_count; ++i) {
            e[i] = exps[i].get<Monomial::exponent_type>();
        }
        out += MPoly(Rational::parse(term.at("coefficient").get<std::string>()), Monomial(e));
    }
    return out;
}

Json report_to_json(const IdentityReport &report)
{
    Json instance{{"n", report.instance.n}};
    if (report.instance.k) {
        instance["k"] = *report.instance.k;
    }
    if (!report.instance.params.empty()) {
        Json assigned = Json::object();
        for (const auto &[name, value] : report.instance.params) {
            assigned[name] = value;
        }
        instance["specializations"] = assigned;
    }
    return Json{{"identity_id", report.identity_id},
                {"instance", instance},
                {"status", report.status == Status::pass ? "pass" : "fail"},
                {"lhs", report.lhs},
                {"rhs", report.rhs}};
}

IdentityReport report_from_json(const Json &j)
{
    IdentityReport report;
    report.identity_id = j.at("identity_id").get<std::string>();
    const auto &inst = j.at("instance");
    report.instance.n = inst.at("n").get<int>();
    if (inst.contains("k")) {
        report.instance.k = inst.at("k").get<int>();
    }
    if (inst.contains("specializations")) {
        for (const auto &[name, value] : inst.at("specializations").items()) {
            report.instance.params.emplace_back(name, value.get<std::string>());
        }
    }
    const auto status = j.at("status").get<std::string>();
    if (status != "pass" && status != "fail") {
        throw std::invalid_argument("report JSON: bad status '" + status + "'");
    }
    report.status = status == "pass" ? Status::pass : Status::fail;
    report.lhs = j.at("lhs").get<std::string>();
    report.rhs = j.at("rhs").get<std::string>();
    return report;
}

Json reports_to_json(const std::vector<IdentityReport> &reports)
{
    Json out = Json::array();
    for (const auto &r : reports) {
        out.push_back(report_to_json(r));
    }
    return out;
}

std::vector<IdentityReport> reports_from_json(const Json &j)
{
    std::vector<IdentityReport> out;
    for (const auto &r : j) {
        out.push_back(report_from_json(r));
    }
    return out;
}

} // namespace rwhitney
