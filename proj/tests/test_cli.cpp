#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <rwhitney/cli.hpp>
#include <rwhitney/serialize.hpp>

using namespace rwhitney;

namespace
{

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    args.insert(args.begin(), "rwhitney");
    std::vector<const char *> argv;
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("whitney rows")
{
    auto r = run({"whitney", "--kind", "second", "--nmax", "2"});
    CHECK(r.code == exit_ok);
    CHECK(r.out == "1\nr, 1\nr^2, 2*r + q, 1\n");

    r = run({"whitney", "--nmax", "2", "--q", "1", "--r", "0"});
    CHECK(r.out == "1\n0, 1\n0, 1, 1\n");

    r = run({"whitney", "--kind", "first", "--nmax", "1"});
    CHECK(r.out == "1\n-r, 1\n");

    r = run({"whitney", "--nmax", "3", "--k", "1", "--format", "csv"});
    CHECK(r.out == "n,k,value\n1,1,\"1\"\n2,1,\"2*r + q\"\n3,1,\"3*r^2 + 3*q*r + q^2\"\n");
}

TEST_CASE("whitney JSON uses the structured polynomial form")
{
    const auto r = run({"whitney", "--nmax", "1", "--format", "json"});
    REQUIRE(r.code == exit_ok);
    const auto j = Json::parse(r.out);
    CHECK(j[1]["n"] == 1);
    CHECK(mpoly_from_json(j[1]["values"][0]).to_string() == "r");
    CHECK(j[1]["values"][0][0]["exponents"] == Json::parse("[0,1,0,0,0]"));
}

TEST_CASE("bernoulli")
{
    auto r = run({"bernoulli", "--nmax", "2"});
    CHECK(r.code == exit_ok);
    CHECK(r.out == "1\nr - 1/2\nr^2 - r - 1/2*q + 2/3\n");

    r = run({"bernoulli", "--nmax", "4", "--q", "1", "--r", "0"});
    CHECK(r.out == "1\n-1/2\n1/6\n0\n-1/30\n");

    r = run({"bernoulli", "--nmax", "1", "--korder", "1"});
    CHECK(r.out == "1\n-z + 1/2\n");

    r = run({"bernoulli", "--nmax", "3", "--route", "gf"});
    CHECK(r.out == run({"bernoulli", "--nmax", "3", "--route", "wsum"}).out);

    r = run({"bernoulli", "--nmax", "2", "--route", "explicit", "--q", "3", "--r", "2"});
    CHECK(r.out == run({"bernoulli", "--nmax", "2", "--q", "3", "--r", "2"}).out);

    r = run({"bernoulli", "--nmax", "5", "--route", "all", "--q", "3/2", "--r", "-1", "--format", "csv"});
    CHECK(r.code == exit_ok);
    CHECK(r.out.find("DISAGREE") == std::string::npos);
}

TEST_CASE("explicit route rejects q = 0")
{
    const auto r = run({"bernoulli", "--nmax", "2", "--route", "explicit", "--q", "0", "--r", "1"});
    CHECK(r.code == exit_usage);
    CHECK(r.err.find("q^k") != std::string::npos);
    CHECK(run({"bernoulli", "--route", "explicit"}).code == exit_usage);
}

TEST_CASE("cauchy and series")
{
    auto r = run({"cauchy", "--kind", "first", "--nmax", "1"});
    CHECK(r.out == "1\n-r + 1/2\n");
    r = run({"cauchy", "--kind", "second", "--nmax", "1"});
    CHECK(r.out == "1\n-r - 1/2\n");

    r = run({"series", "--which", "ebq", "--order", "2"});
    CHECK(r.out == "1\nr - 1/2\n1/2*r^2 - 1/2*r - 1/4*q + 1/3\n");
    r = run({"series", "--which", "egf_W", "--k", "1", "--order", "2", "--format", "csv"});
    CHECK(r.out == "power,value\n0,\"0\"\n1,\"1\"\n2,\"r + 1/2*q\"\n");
    r = run({"series", "--which", "polybern", "--k", "1", "--order", "1", "--q", "1", "--z", "0"});
    CHECK(r.out == "1\n1/2\n");
}

TEST_CASE("verify is deterministic and reports pass")
{
    const auto a = run({"verify", "--nmax", "12", "--seed", "1", "--format", "json"});
    const auto b = run({"verify", "--nmax", "12", "--seed", "1", "--format", "json"});
    CHECK(a.code == exit_ok);
    CHECK(a.out == b.out);
    const auto reports = reports_from_json(Json::parse(a.out));
    CHECK(reports.size() > 100);
    CHECK(reports_to_json(reports).dump(2) + "\n" == a.out);

    const auto plain = run({"verify", "--nmax", "3", "--families", "golden,sign_law"});
    CHECK(plain.code == exit_ok);
    CHECK(plain.out == "8/8 identity checks passed\n");
}

TEST_CASE("usage errors")
{
    CHECK(run({}).code == exit_usage);
    CHECK(run({"frobnicate"}).code == exit_usage);
    CHECK(run({"whitney", "--format", "xml"}).code == exit_usage);
    CHECK(run({"whitney", "--q", "1/0"}).code == exit_usage);
    CHECK(run({"whitney", "--q", "abc"}).code == exit_usage);
    CHECK(run({"whitney", "--nmax", "-1"}).code == exit_usage);
    CHECK(run({"whitney", "--nmax", "2", "--k", "3"}).code == exit_usage);
    CHECK(run({"verify", "--families", "nope"}).code == exit_usage);
    CHECK(run({"--help"}).code == exit_ok);
}

TEST_CASE("output file")
{
    const auto path = std::filesystem::temp_directory_path() / "rwhitney_cli_test.csv";
    const auto r = run({"bernoulli", "--nmax", "1", "--format", "csv", "--out", path.string()});
    CHECK(r.code == exit_ok);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == "n,value\n0,\"1\"\n1,\"r - 1/2\"\n");
    std::filesystem::remove(path);
}
