#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "ivpoly/cli.hpp"

using namespace ivpoly;
using nlohmann::json;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("compose matches the documented example") {
    CliResult r = cli({"compose", "C(X,2)", "C(X,2)"});
    CHECK(r.code == 0);
    CHECK(r.out == "3*C(X,3)+3*C(X,4)\n");
}

TEST_CASE("convert reports both bases") {
    CliResult r = cli({"convert", "X^2", "--json"});
    CHECK(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["binomial"] == "X+2*C(X,2)");
    CHECK(j["monomial"] == "X^2");
    CHECK(j["int_valued"] == true);
}

TEST_CASE("coadd and comul emit the tensor expansion") {
    CHECK(cli({"coadd", "C(X,1)"}).out == "Y+X\n");
    CliResult r = cli({"comul", "C(X,2)", "--json"});
    auto j = json::parse(r.out);
    CHECK(j["terms"].size() == 3);
}

TEST_CASE("verify-axioms holds at low degree") {
    CliResult r = cli({"verify-axioms", "--degree", "3"});
    CHECK(r.code == 0);
}

TEST_CASE("relations subcommand is reproducible and green") {
    CliResult a = cli({"relations", "--trials", "10", "--seed", "1", "--json"});
    CliResult b = cli({"relations", "--trials", "10", "--seed", "1", "--json"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    auto j = json::parse(a.out);
    CHECK(j["failures"].empty());
}

TEST_CASE("basis json carries the diagonal") {
    CliResult r = cli({"basis", "--family", "dint:inf", "--degree", "5", "--json"});
    auto j = json::parse(r.out);
    CHECK(j["diagonal"] == json({"1", "1", "2", "6", "12", "60"}));
}

TEST_CASE("cn lists the sequence") {
    CliResult r = cli({"cn", "--upto", "6", "--json"});
    auto j = json::parse(r.out);
    CHECK(j["c"] == json({"1", "1", "2", "6", "12", "60", "360"}));
}

TEST_CASE("chain finds the first strict degree") {
    CliResult r = cli({"chain", "--r", "0", "--dmax", "6", "--json"});
    auto j = json::parse(r.out);
    CHECK(j["degree"] == 2);
    CHECK(j["witness"] == "C(X,2)");
}

TEST_CASE("classify-ring exit codes") {
    CliResult bad = cli({"classify-ring", "F4"});
    CHECK(bad.code == 2);
    CHECK(bad.out.find("not quasi-binomial") != std::string::npos);
    CliResult good = cli({"classify-ring", "Z/4"});
    CHECK(good.code == 0);
}

TEST_CASE("witt subcommand verifies small cases") {
    CHECK(cli({"witt", "--p", "2", "--m", "2"}).code == 0);
    CHECK(cli({"witt", "--p", "3", "--m", "1", "--mul"}).code == 0);
}

TEST_CASE("adams prints the first table") {
    CliResult r = cli({"adams", "--k", "2", "--trunc", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("2*h2-h1^2") != std::string::npos);
}

TEST_CASE("bin-check passes for binomial series") {
    CHECK(cli({"bin-check", "--p", "2", "--m", "3", "--K", "3"}).code == 0);
}

TEST_CASE("dual routes agree") {
    CHECK(cli({"dual", "--r", "2", "--trials", "25"}).code == 0);
}

TEST_CASE("perfection reports stabilization") {
    CliResult r = cli({"perfection", "F2[t]/(t^2)", "--m", "4", "--json"});
    auto j = json::parse(r.out);
    CHECK(j["perfect"] == false);
    CHECK(j["sizes"] == json({4, 2, 2, 2}));
    CHECK(j["stabilized"] == true);
}

TEST_CASE("wlower and wupper") {
    CliResult lo = cli({"wlower", "--m", "6", "--degree", "8", "--json"});
    CHECK(lo.code == 0);
    CHECK(json::parse(lo.out)["reflective"] == true);

    CliResult up = cli({"wupper", "--gen", "X", "--degree", "6", "--json"});
    CHECK(up.code == 0);
    auto j = json::parse(up.out);
    CHECK(j["stable"] == true);
    CHECK(j["module_basis"].size() == 7);
}

TEST_CASE("usage errors exit with 3") {
    CHECK(cli({"nonsense"}).code == 3);
    CHECK(cli({"compose", "C(X,2)"}).code == 3);
    CHECK(cli({"compose", "C(X", "X"}).code == 3);
    CHECK(cli({"basis", "--family", "bogus"}).code == 3);
}

TEST_CASE("precision limits exit with 4") {
    CHECK(cli({"bin-check", "--p", "2", "--m", "1", "--trunc", "5"}).code == 4);
}
