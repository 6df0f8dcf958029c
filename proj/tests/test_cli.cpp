#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <string>

#include "gleafkit/probability.hpp"
#include "gleafkit/topology.hpp"

using nlohmann::json;

namespace {

std::string cli_path() {
    const char* p = std::getenv("GLEAFKIT_CLI");
    REQUIRE(p != nullptr);
    return p;
}

int run_cli(const std::string& args, std::string* out = nullptr) {
    std::string cmd = cli_path() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string text;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) text.append(buf, got);
    int status = pclose(pipe);
    if (out) *out = text;
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
    auto p = std::filesystem::temp_directory_path() / name;
    std::ofstream(p) << content;
    return p;
}

const char* kCorr2 = R"({"vars":["A","B"],"outcomes":["0","1"],"w":{"0,0":"1/2","1,1":"1/2"}})";

}  // namespace

TEST_CASE("check: green instance exits 0 with a parseable report") {
    std::string out;
    int rc = run_cli("check --instance nerve --samples 50 --seed 1", &out);
    CHECK(rc == 0);
    auto j = json::parse(out);
    CHECK(j.at("total_failures") == 0);
    CHECK(j.at("reports").size() > 0);
    for (const auto& r : j.at("reports")) CHECK(r.at("failures").empty());
}

TEST_CASE("check: the broken fixture is caught with exit code 1") {
    std::string out;
    int rc = run_cli("check --instance broken --samples 40", &out);
    CHECK(rc == 1);
    auto j = json::parse(out);
    CHECK(j.at("total_failures").get<long long>() > 0);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("check --instance nosuch") == 2);
    CHECK(run_cli("check") == 2);                       // missing required option
    CHECK(run_cli("frobnicate") == 2);                  // unknown subcommand
    CHECK(run_cli("check --instance topology --mode compository") == 2);
    CHECK(run_cli("compose --instance probability --a /nonexistent --b /nonexistent --k 0") ==
          2);
}

TEST_CASE("deterministic reports for a fixed seed") {
    std::string a, b;
    CHECK(run_cli("check --instance metric --samples 60 --seed 7", &a) == 0);
    CHECK(run_cli("check --instance metric --samples 60 --seed 7", &b) == 0);
    CHECK(a == b);
}

TEST_CASE("compose: probability chain through a shared variable") {
    auto f = write_temp("cli_corr2.json", kCorr2);
    std::string out;
    int rc = run_cli("compose --instance probability --a " + f.string() + " --b " +
                         f.string() + " --k 0",
                     &out);
    CHECK(rc == 0);
    auto P = gleafkit::dist_from_json(json::parse(out));
    auto c = gleafkit::dist_from_json(json::parse(kCorr2));
    CHECK(P == gleafkit::dist_compose(c, 0, c));

    // non-composable pair: diagnostic and exit 2
    auto skew = write_temp("cli_skew.json",
                           R"({"vars":["A","B"],"outcomes":["0","1"],)"
                           R"("w":{"0,0":"1/4","0,1":"1/4","1,1":"1/2"}})");
    CHECK(run_cli("compose --instance probability --a " + skew.string() + " --b " +
                  f.string() + " --k 0") == 2);
}

TEST_CASE("glue: probability and topology sections over a three-point carrier") {
    auto f = write_temp("cli_corr2.json", kCorr2);
    std::string out;
    int rc = run_cli("glue --instance probability --a " + f.string() + " --b " + f.string() +
                         " --incl-a 0,1 --incl-b 1,2 --size-c 3",
                     &out);
    CHECK(rc == 0);
    auto c = gleafkit::dist_from_json(json::parse(kCorr2));
    CHECK(gleafkit::dist_from_json(json::parse(out)) == gleafkit::dist_glue(c, {0, 1}, c, {1, 2}, 3));

    auto sier = write_temp("cli_sier.json",
                           R"({"carrier":["x","y"],"opens":[[],["x"],["x","y"]]})");
    rc = run_cli("glue --instance topology --a " + sier.string() + " --b " + sier.string() +
                     " --incl-a 0,1 --incl-b 1,2 --size-c 3",
                 &out);
    CHECK(rc == 0);
    auto sA = gleafkit::topology_from_json(
        json::parse(R"({"carrier":["x","y"],"opens":[[],["x"],["x","y"]]})"));
    CHECK(gleafkit::topology_from_json(json::parse(out)) ==
          gleafkit::top_glue(sA, {0, 1}, sA, {1, 2}, 3));

    // incompatible glue: exit 2 with no output
    auto disc = write_temp("cli_disc.json",
                           R"({"carrier":["x","y","z"],"opens":[[],["x"],["y"],["z"],)"
                           R"(["x","y"],["x","z"],["y","z"],["x","y","z"]]})");
    auto indis = write_temp("cli_indis.json", R"({"carrier":["y","z"],"opens":[[],["y","z"]]})");
    CHECK(run_cli("glue --instance topology --a " + disc.string() + " --b " + indis.string() +
                  " --incl-a 0,1,2 --incl-b 1,2 --size-c 3") == 2);
}

TEST_CASE("glue: relational natural join") {
    auto a = write_temp("cli_rel_a.json",
                        R"({"attrs":{"x":["0","1"],"y":["0","1"]},)"
                        R"("tuples":[{"x":"0","y":"1"},{"x":"1","y":"0"}]})");
    auto b = write_temp("cli_rel_b.json",
                        R"({"attrs":{"y":["0","1"],"z":["0","1"]},)"
                        R"("tuples":[{"y":"1","z":"1"},{"y":"0","z":"0"}]})");
    std::string out;
    int rc = run_cli("glue --instance relational --a " + a.string() + " --b " + b.string(), &out);
    CHECK(rc == 0);
    auto j = json::parse(out);
    CHECK(j.at("attrs").size() == 3);
    CHECK(j.at("tuples").size() == 2);
    for (const auto& row : j.at("tuples")) CHECK(row.at("x") != row.at("y"));
}

TEST_CASE("act: marginalization and preimage") {
    auto f = write_temp("cli_corr2.json", kCorr2);
    std::string out;
    int rc = run_cli("act --instance probability --in " + f.string() + " --map 1", &out);
    CHECK(rc == 0);
    auto marg = gleafkit::dist_from_json(json::parse(out));
    CHECK(marg.nvars == 1);
    CHECK(marg.at({0}) == gleafkit::Rat(1, 2));
}

TEST_CASE("counterexample subcommands verify and exit 0") {
    for (std::string which : {"span-horn", "prob-triple", "topology-triple", "metric-horn"}) {
        std::string out;
        INFO(which);
        CHECK(run_cli("counterexample --which " + which, &out) == 0);
        auto j = json::parse(out);
        CHECK(j.at("verification").at("confirmed") == true);
    }
    CHECK(run_cli("counterexample --which nosuch") == 2);
}
