#include <rwhitney/cli.hpp>

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <rwhitney/bernoulli.hpp>
#include <rwhitney/cauchy.hpp>
#include <rwhitney/identities.hpp>
#include <rwhitney/serialize.hpp>
#include <rwhitney/series.hpp>
#include <rwhitney/whitney.hpp>

namespace rwhitney
{

namespace
{

enum class Format { plain, csv, json };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CommonOptions {
    std::string format_name = "plain";
    Format format = Format::plain;
    std::string out_path;
    int n_max = 5;
};

struct NumericOptions {
    std::optional<std::string> q;
    std::optional<std::string> r;
    std::optional<std::string> z;

    [[nodiscard]] EvalPoint point() const
    {
        EvalPoint p;
        const auto add = [&p](Var v, const std::optional<std::string> &text) {
            if (!text) {
                return;
            }
            try {
                p.assign(v, Rational::parse(*text));
            } catch (const std::exception &e) {
                throw UsageError("--" + std::string(var_name(v)) + ": " + e.what());
            }
        };
        add(Var::q, q);
        add(Var::r, r);
        add(Var::z, z);
        return p;
    }
};

// One output row: values at (n, k0), (n, k0+1), ...
struct Row {
    int n = 0;
    int k0 = 0;
    std::vector<MPoly> values;
};

std::string csv_quote(const std::string &s)
{
    std::string out = "\"";
    for (const char c : s) {
        out += c == '"' ? std::string("\"\"") : std::string(1, c);
    }
    return out + "\"";
}

// Sequences have one value per row and use the index column `index_name`;
// triangles get an extra k column.
void emit_rows(std::ostream &os, Format format, const std::vector<Row> &rows, bool triangular,
               const std::string &index_name = "n")
{
    switch (format) {
        case Format::plain:
            for (const auto &row : rows) {
                for (std::size_t i = 0; i < row.values.size(); ++i) {
                    os << (i == 0 ? "" : ", ") << row.values[i];
                }
                os << '\n';
            }
            break;
        case Format::csv:
            os << index_name << (triangular ? ",k" : "") << ",value\n";
            for (const auto &row : rows) {
                for (std::size_t i = 0; i < row.values.size(); ++i) {
                    os << row.n;
                    if (triangular) {
                        os << ',' << row.k0 + static_cast<int>(i);
                    }
                    os << ',' << csv_quote(row.values[i].to_string()) << '\n';
                }
            }
            break;
        case Format::json: {
            Json arr = Json::array();
            for (const auto &row : rows) {
                if (triangular) {
                    Json values = Json::array();
                    for (const auto &v : row.values) {
                        values.push_back(mpoly_to_json(v));
                    }
                    arr.push_back(Json{{index_name, row.n}, {"k0", row.k0}, {"values", values}});
                } else {
                    arr.push_back(Json{{index_name, row.n}, {"value", mpoly_to_json(row.values.at(0))}});
                }
            }
            os << arr.dump(2) << '\n';
            break;
        }
    }
}

class Output
{
public:
    Output(const std::string &path, std::ostream &fallback)
    {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) {
                throw UsageError("cannot open output file '" + path + "'");
            }
        }
        stream_ = path.empty() ? &fallback : &file_;
    }
    std::ostream &stream() { return *stream_; }

private:
    std::ofstream file_;
    std::ostream *stream_ = nullptr;
};

void require_nonnegative(int v, const char *flag)
{
    if (v < 0) {
        throw UsageError(std::string(flag) + " must be non-negative");
    }
}

MPoly specialize(const MPoly &p, const EvalPoint &point)
{
    return point.empty() ? p : evaluate(p, point);
}

int cmd_whitney(const CommonOptions &common, const std::string &kind_name, std::optional<int> column,
                const NumericOptions &numeric, std::ostream &fallback)
{
    require_nonnegative(common.n_max, "--nmax");
    const WhitneyKind kind = kind_name == "first" ? WhitneyKind::first : WhitneyKind::second;
    const EvalPoint point = numeric.point();
    std::vector<Row> rows;
    if (column) {
        if (*column < 0 || *column > common.n_max) {
            throw UsageError("--k must satisfy 0 <= k <= nmax");
        }
        for (int n = *column; n <= common.n_max; ++n) {
            rows.push_back({n, *column, {specialize(whitney_row(kind, n)[static_cast<std::size_t>(*column)], point)}});
        }
    } else {
        for (int n = 0; n <= common.n_max; ++n) {
            Row row{n, 0, {}};
            for (const auto &cell : whitney_row(kind, n)) {
                row.values.push_back(specialize(cell, point));
            }
            rows.push_back(std::move(row));
        }
    }
    Output out(common.out_path, fallback);
    emit_rows(out.stream(), common.format, rows, true);
    return exit_ok;
}

int emit_route_agreement(const CommonOptions &common, const NumericOptions &numeric, std::ostream &fallback)
{
    const EvalPoint point = numeric.point();
    const bool numeric_point = point.get(Var::q).has_value() && point.get(Var::r).has_value();
    if (numeric_point && point.get(Var::q)->is_zero()) {
        throw UsageError("explicit route requires q != 0 (the double sum divides by q^k)");
    }
    const auto gf = bernoulli_q_gf(common.n_max);
    Output out(common.out_path, fallback);
    auto &os = out.stream();
    bool all_agree = true;
    Json arr = Json::array();
    if (common.format == Format::csv) {
        os << "n,status,wsum,gf" << (numeric_point ? ",explicit" : "") << '\n';
    }
    for (int n = 0; n <= common.n_max; ++n) {
        const MPoly wsum = specialize(bernoulli_q_wsum(n), point);
        const MPoly via_gf = specialize(gf[static_cast<std::size_t>(n)], point);
        bool agree = wsum == via_gf;
        std::optional<Rational> explicit_value;
        if (numeric_point) {
            explicit_value = bernoulli_q_explicit(n, *point.get(Var::q), *point.get(Var::r));
            agree = agree && MPoly(*explicit_value) == wsum;
        }
        all_agree = all_agree && agree;
        const std::string status = agree ? "agree" : "DISAGREE";
        switch (common.format) {
            case Format::plain:
                os << n << ' ' << status << ' ' << wsum << '\n';
                break;
            case Format::csv:
                os << n << ',' << status << ',' << csv_quote(wsum.to_string()) << ',' << csv_quote(via_gf.to_string());
                if (explicit_value) {
                    os << ',' << csv_quote(explicit_value->to_string());
                }
                os << '\n';
                break;
            case Format::json: {
                Json entry{{"n", n}, {"status", status}, {"wsum", mpoly_to_json(wsum)}, {"gf", mpoly_to_json(via_gf)}};
                if (explicit_value) {
                    entry["explicit"] = mpoly_to_json(MPoly(*explicit_value));
                }
                arr.push_back(entry);
                break;
            }
        }
    }
    if (common.format == Format::json) {
        os << arr.dump(2) << '\n';
    }
    return all_agree ? exit_ok : exit_verification_failed;
}

int cmd_bernoulli(const CommonOptions &common, const std::string &route_text, std::optional<int> k_order,
                  const NumericOptions &numeric, std::ostream &fallback)
{
    require_nonnegative(common.n_max, "--nmax");
    const EvalPoint point = numeric.point();
    std::vector<Row> rows;
    if (k_order) {
        const auto values = poly_bernoulli_q(common.n_max, *k_order);
        for (int n = 0; n <= common.n_max; ++n) {
            rows.push_back({n, 0, {specialize(values[static_cast<std::size_t>(n)], point)}});
        }
    } else if (route_text == "all") {
        return emit_route_agreement(common, numeric, fallback);
    } else {
        switch (*route_from_name(route_text)) {
            case BernoulliRoute::wsum:
                for (int n = 0; n <= common.n_max; ++n) {
                    rows.push_back({n, 0, {specialize(bernoulli_q_wsum(n), point)}});
                }
                break;
            case BernoulliRoute::gf: {
                const auto values = bernoulli_q_gf(common.n_max);
                for (int n = 0; n <= common.n_max; ++n) {
                    rows.push_back({n, 0, {specialize(values[static_cast<std::size_t>(n)], point)}});
                }
                break;
            }
            case BernoulliRoute::explicit_sum: {
                const auto q = point.get(Var::q);
                const auto r = point.get(Var::r);
                if (!q || !r) {
                    throw UsageError("explicit route is numeric: give both --q and --r");
                }
                if (q->is_zero()) {
                    throw UsageError("explicit route requires q != 0 (the double sum divides by q^k)");
                }
                for (int n = 0; n <= common.n_max; ++n) {
                    rows.push_back({n, 0, {MPoly(bernoulli_q_explicit(n, *q, *r))}});
                }
                break;
            }
        }
    }
    Output out(common.out_path, fallback);
    emit_rows(out.stream(), common.format, rows, false);
    return exit_ok;
}

int cmd_cauchy(const CommonOptions &common, const std::string &kind_name, const NumericOptions &numeric,
               std::ostream &fallback)
{
    require_nonnegative(common.n_max, "--nmax");
    const CauchyKind kind = kind_name == "first" ? CauchyKind::first : CauchyKind::second;
    const EvalPoint point = numeric.point();
    std::vector<Row> rows;
    for (int n = 0; n <= common.n_max; ++n) {
        rows.push_back({n, 0, {specialize(cauchy(kind, n), point)}});
    }
    Output out(common.out_path, fallback);
    emit_rows(out.stream(), common.format, rows, false);
    return exit_ok;
}

int cmd_series(const CommonOptions &common, const std::string &which, int order, std::optional<int> k,
               const NumericOptions &numeric, std::ostream &fallback)
{
    require_nonnegative(order, "--order");
    const auto ord = static_cast<std::size_t>(order);
    const EvalPoint point = numeric.point();
    std::optional<TruncSeries> series;
    if (which == "ebq") {
        series = bernoulli_q_gf_series(ord);
    } else if (which == "polybern") {
        series = poly_bernoulli_q_series(ord, k.value_or(1));
    } else {
        const int column = k.value_or(0);
        if (column < 0) {
            throw UsageError("--k must be non-negative for egf_W");
        }
        series = whitney_egf_series(column, ord);
    }
    std::vector<Row> rows;
    for (std::size_t i = 0; i <= series->order(); ++i) {
        rows.push_back({static_cast<int>(i), 0, {specialize((*series)[i], point)}});
    }
    Output out(common.out_path, fallback);
    emit_rows(out.stream(), common.format, rows, false, "power");
    return exit_ok;
}

int cmd_verify(const CommonOptions &common, std::uint64_t seed, const std::vector<std::string> &families,
               std::ostream &fallback)
{
    require_nonnegative(common.n_max, "--nmax");
    std::vector<IdentityReport> reports;
    try {
        reports = run_suite(common.n_max, seed, families);
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }
    Output out(common.out_path, fallback);
    auto &os = out.stream();
    switch (common.format) {
        case Format::plain: {
            std::size_t failed = 0;
            for (const auto &r : reports) {
                if (r.status == Status::fail) {
                    ++failed;
                    os << "FAIL " << report_to_json(r).dump() << '\n';
                }
            }
            os << reports.size() - failed << '/' << reports.size() << " identity checks passed\n";
            break;
        }
        case Format::csv:
            os << "identity_id,n,k,specializations,status,lhs,rhs\n";
            for (const auto &r : reports) {
                std::string assigned;
                for (const auto &[name, value] : r.instance.params) {
                    assigned += (assigned.empty() ? "" : ";") + name + "=" + value;
                }
                os << r.identity_id << ',' << r.instance.n << ',' << (r.instance.k ? std::to_string(*r.instance.k) : "")
                   << ',' << csv_quote(assigned) << ',' << (r.status == Status::pass ? "pass" : "fail") << ','
                   << csv_quote(r.lhs) << ',' << csv_quote(r.rhs) << '\n';
            }
            break;
        case Format::json:
            os << reports_to_json(reports).dump(2) << '\n';
            break;
    }
    return all_pass(reports) ? exit_ok : exit_verification_failed;
}

std::vector<std::string> split_commas(const std::string &text)
{
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) {
            out.push_back(item);
        }
    }
    return out;
}

void add_common(CLI::App *cmd, CommonOptions &common)
{
    cmd->add_option("--format", common.format_name, "plain, csv or json")->check(CLI::IsMember({"plain", "csv", "json"}));
    cmd->add_option("--out", common.out_path, "Write output to this file instead of stdout");
    cmd->add_option("--nmax", common.n_max, "Largest index n");
}

void add_numeric(CLI::App *cmd, NumericOptions &numeric, bool with_z)
{
    cmd->add_option("--q", numeric.q, "Specialize q to a rational p or p/q");
    cmd->add_option("--r", numeric.r, "Specialize r to a rational p or p/q");
    if (with_z) {
        cmd->add_option("--z", numeric.z, "Specialize z to a rational p or p/q");
    }
}

} // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Exact r-Whitney numbers, Bernoulli and Cauchy polynomials with a q parameter"};
    app.require_subcommand(1);

    CommonOptions common;
    NumericOptions numeric;
    std::string kind = "second";
    std::string cauchy_kind = "first";
    std::string route = "wsum";
    std::string which = "ebq";
    std::string families;
    std::optional<int> k;
    std::optional<int> k_order;
    int order = 5;
    std::uint64_t seed = 1;

    auto *whitney = app.add_subcommand("whitney", "r-Whitney triangles w(n,k) and W(n,k)");
    add_common(whitney, common);
    add_numeric(whitney, numeric, false);
    whitney->add_option("--kind", kind, "first or second")->check(CLI::IsMember({"first", "second"}));
    whitney->add_option("--k", k, "Print only column k");

    auto *bernoulli = app.add_subcommand("bernoulli", "Bernoulli polynomials with a q parameter");
    add_common(bernoulli, common);
    add_numeric(bernoulli, numeric, true);
    bernoulli->add_option("--route", route, "wsum, explicit, gf or all")
        ->check(CLI::IsMember({"wsum", "explicit", "gf", "all"}));
    bernoulli->add_option("--korder", k_order, "Poly-Bernoulli order k (switches to the poly-Bernoulli family)");

    auto *cauchy_cmd = app.add_subcommand("cauchy", "Cauchy polynomials with a q parameter at z = r (first) or z = -r (second)");
    add_common(cauchy_cmd, common);
    add_numeric(cauchy_cmd, numeric, false);
    cauchy_cmd->add_option("--kind", cauchy_kind, "first or second")->check(CLI::IsMember({"first", "second"}));

    auto *series = app.add_subcommand("series", "Coefficients t^0..t^order of a generating function");
    add_common(series, common);
    add_numeric(series, numeric, true);
    series->add_option("--which", which, "ebq, egf_W or polybern")->check(CLI::IsMember({"ebq", "egf_W", "polybern"}));
    series->add_option("--order", order, "Truncation order");
    series->add_option("--k", k, "Column k for egf_W, order k for polybern");

    auto *verify = app.add_subcommand("verify", "Run the identity verification suite");
    add_common(verify, common);
    verify->add_option("--seed", seed, "Seed for numeric specializations");
    verify->add_option("--families", families, "Comma-separated family filter");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    static const std::map<std::string, Format> formats{{"plain", Format::plain}, {"csv", Format::csv}, {"json", Format::json}};
    common.format = formats.at(common.format_name);

    try {
        if (*whitney) {
            return cmd_whitney(common, kind, k, numeric, out);
        }
        if (*bernoulli) {
            return cmd_bernoulli(common, route, k_order, numeric, out);
        }
        if (*cauchy_cmd) {
            return cmd_cauchy(common, cauchy_kind, numeric, out);
        }
        if (*series) {
            return cmd_series(common, which, order, k, numeric, out);
        }
        return cmd_verify(common, seed, split_commas(families), out);
    } catch (const UsageError &e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
}

} // namespace rwhitney
