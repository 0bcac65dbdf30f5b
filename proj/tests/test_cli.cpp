#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "rigidity/harness.hpp"
#include "rigidity/json_io.hpp"

using namespace rigidity;

namespace {

std::string cli() { return RIGIDITY_CLI_PATH; }

int run(const std::string& args) {
    std::string cmd = cli() + " " + args + " > /dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    REQUIRE(rc != -1);
    return WEXITSTATUS(rc);
}

std::string run_capture(const std::string& args) {
    std::string out = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                      "/rigidity_cli_out.txt";
    std::string cmd = cli() + " " + args + " > " + out + " 2>/dev/null";
    int rc = std::system(cmd.c_str());
    REQUIRE(rc != -1);
    std::ifstream f(out);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") + "/" + name;
    std::ofstream f(path);
    f << content;
    return path;
}

std::string triangle_file() {
    Multigraph g(3);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(1, 2);
    return write_temp("cli_triangle.json", serialize_edge_list(g));
}

std::string banana_file() {
    return write_temp("cli_banana.json", serialize_edge_list(double_banana()));
}

} // namespace

TEST_CASE("cli: rank exit codes") {
    CHECK(run("rank -d 2 " + triangle_file()) == 0);
    CHECK(run("rank -d 3 " + banana_file()) == 1);
    std::string bad = write_temp("cli_bad.g6", "zz~z\n");
    CHECK(run("rank " + bad) == 2);
}

TEST_CASE("cli: theorem exit codes") {
    CHECK(run("theorem -d 2 " + triangle_file()) == 0);
    Multigraph p3(3);
    p3.add_edge(0, 1);
    p3.add_edge(1, 2);
    std::string p3f = write_temp("cli_p3.json", serialize_edge_list(p3));
    CHECK(run("theorem -d 2 " + p3f) == 1);
    // The theorem's own (wrong) claim on the banana, faithfully reported.
    CHECK(run("theorem -d 3 " + banana_file()) == 0);
}

TEST_CASE("cli: compare exits 3 exactly on discrepancies") {
    CHECK(run("compare -d 2 " + triangle_file()) == 0);
    CHECK(run("compare -d 3 " + banana_file()) == 3);
    CHECK(run("compare -d 3 " + banana_file()) == 3); // deterministic
}

TEST_CASE("cli: decompose exit codes") {
    std::string k4 = write_temp("cli_k4.g6", "C~\n");
    CHECK(run("decompose -k 2 " + k4) == 0);
    Multigraph c4(4);
    for (int v = 0; v < 4; ++v) c4.add_edge(v, (v + 1) % 4);
    std::string c4f = write_temp("cli_c4.json", serialize_edge_list(c4));
    CHECK(run("decompose -k 2 " + c4f) == 1);
}

TEST_CASE("cli: pin reports invertibility") {
    CHECK(run("pin --path 0,1 " + triangle_file()) == 0);
    Multigraph c4(4);
    for (int v = 0; v < 4; ++v) c4.add_edge(v, (v + 1) % 4);
    std::string c4f = write_temp("cli_c4b.json", serialize_edge_list(c4));
    CHECK(run("pin --path 0,1 " + c4f) == 1);
}

TEST_CASE("cli: scan flags the banana corpus") {
    std::string corpus = write_temp("cli_corpus.json",
                                    "[" + serialize_edge_list(double_banana()) + "]");
    CHECK(run("scan -d 3 " + corpus) == 3);
    std::string plain = write_temp("cli_corpus2.g6", "Bw\nC~\n");
    CHECK(run("scan -d 2 " + plain) == 0);
}

TEST_CASE("cli: json output round-trips through the serializers") {
    std::string out = run_capture("rank -d 2 --format json " + triangle_file());
    auto j = nlohmann::json::parse(out);
    CHECK(j["verdict"] == "minimally-rigid");
    CHECK(j["rank"] == 3);
    Multigraph g = parse_edge_list(j["graph"].dump());
    CHECK(g.n == 3);
    CHECK(g.edge_count() == 3);

    std::string banana_json = run_capture("banana");
    Multigraph b = parse_edge_list(banana_json);
    CHECK(b == double_banana());
}

TEST_CASE("cli: RIGIDITY_SEED env fallback is honored") {
    std::string cmd = "RIGIDITY_SEED=42 " + cli() + " rank -d 2 --format json " +
                      triangle_file() + " > /tmp/rigidity_seed_out.json 2>/dev/null";
    REQUIRE(std::system(cmd.c_str()) == 0);
    std::ifstream f("/tmp/rigidity_seed_out.json");
    std::ostringstream ss;
    ss << f.rdbuf();
    auto j = nlohmann::json::parse(ss.str());
    CHECK(j["seed"] == 42);
}
