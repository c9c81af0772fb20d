#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "dmatch/graph_io.hpp"
#include "dmatch/reductions.hpp"

namespace {

struct CliResult {
    int exit_code;
    std::string out;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
}

CliResult run_cli(const std::string& args) {
    std::string out_path = "cli_stdout.tmp";
    std::string cmd = std::string(DMATCH_CLI_PATH) + " " + args + " > " + out_path +
                      " 2> cli_stderr.tmp";
    int status = std::system(cmd.c_str());
    CliResult r;
    r.exit_code = WEXITSTATUS(status);
    r.out = slurp(out_path);
    return r;
}

const char* kTwoK2 = "p edge 4 2\ne 1 2\ne 3 4\n";
const char* kK4 = "p edge 4 6\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n";
const char* kP4 = "p edge 4 3\ne 1 2\ne 2 3\ne 3 4\n";
const char* kP5 = "p edge 5 4\ne 1 2\ne 2 3\ne 3 4\ne 4 5\n";
const char* kHub = "p edge 5 6\ne 1 2\ne 3 4\ne 1 5\ne 2 5\ne 3 5\ne 4 5\n";

std::string fig2_json() {
    return dmatch::write_x3c_json(
        dmatch::X3CInstance{6, {{0, 1, 2}, {0, 1, 3}, {0, 1, 4}, {3, 4, 5}}});
}

}  // namespace

TEST_CASE("compute profile and single quantities") {
    spit("two_k2.col", kTwoK2);
    CliResult r = run_cli("compute two_k2.col --what profile");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"nu\": 2") != std::string::npos);
    CHECK(r.out.find("\"nu_s\": 2") != std::string::npos);
    CHECK(r.out.find("\"nu_d\": 2") != std::string::npos);

    spit("k4.col", kK4);
    CliResult nud = run_cli("compute k4.col --what nu_d");
    CHECK(nud.exit_code == 0);
    CHECK(nud.out.find("\"nu_d\": 0") != std::string::npos);

    CliResult oracle = run_cli("compute k4.col --what profile --oracle");
    CHECK(oracle.exit_code == 0);
    CHECK(oracle.out.find("\"nu_s\": 1") != std::string::npos);
}

TEST_CASE("compute budget exhaustion exits 2") {
    spit("hub.col", kHub);
    CliResult r = run_cli("compute hub.col --what nu_d --budget 2");
    CHECK(r.exit_code == 2);
}

TEST_CASE("compute on a missing or malformed file exits 2") {
    CHECK(run_cli("compute does_not_exist.col").exit_code == 2);
    spit("broken.col", "p edge 2 1\ne 1 9\n");
    CHECK(run_cli("compute broken.col").exit_code == 2);
}

TEST_CASE("decide nu-nudj") {
    spit("hub.col", kHub);
    CliResult yes = run_cli("decide hub.col --question nu-nudj --j 2");
    CHECK(yes.exit_code == 0);
    CHECK(yes.out.find("\"vertex\": 4") != std::string::npos);

    spit("p5.col", kP5);
    CliResult pre = run_cli("decide p5.col --question nu-nudj --j 2");
    CHECK(pre.exit_code == 2);  // diameter 4
}

TEST_CASE("decide cw and nu-nus") {
    spit("p4.col", kP4);
    CHECK(run_cli("decide p4.col --question cw").exit_code == 1);
    CHECK(run_cli("decide p4.col --question nu-nus").exit_code == 1);
    CHECK(run_cli("decide p4.col --question nud-nus-bounded").exit_code == 1);

    spit("two_k2.col", kTwoK2);
    CHECK(run_cli("decide two_k2.col --question nu-nus").exit_code == 0);
    CHECK(run_cli("decide two_k2.col --question nud-nus-bounded").exit_code == 0);
}

TEST_CASE("reduce diam4 with witness") {
    spit("fig2.json", fig2_json());
    CliResult r = run_cli("reduce fig2.json --target diam4 --witness");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"predicted_nu\": 14") != std::string::npos);
    CHECK(r.out.find("\"witness\"") != std::string::npos);
    CHECK(r.out.find("\"disconnected\": true") != std::string::npos);

    CliResult sub = run_cli("reduce fig2.json --target subcubic");
    CHECK(sub.exit_code == 0);
    CHECK(sub.out.find("\"Q\": 10") != std::string::npos);
    CHECK(sub.out.find("\"Q'\": 14") != std::string::npos);

    spit("q1.json", dmatch::write_x3c_json(dmatch::X3CInstance{3, {{0, 1, 2}}}));
    CHECK(run_cli("reduce q1.json --target subcubic").exit_code == 2);

    CliResult no_cover =
        run_cli("reduce q1.json --target diam4 --witness");
    CHECK(no_cover.exit_code == 0);
    CHECK(no_cover.out.find("\"witness\"") != std::string::npos);
}

TEST_CASE("reduce conp needs a large enough k") {
    spit("two_k2.col", kTwoK2);
    CHECK(run_cli("reduce two_k2.col --target conp --k 3").exit_code == 0);
    CHECK(run_cli("reduce two_k2.col --target conp --k 2").exit_code == 2);
}

TEST_CASE("construct-sequence") {
    spit("b42.json", "{\"betas\": [4, 2]}\n");
    CliResult r = run_cli("construct-sequence b42.json --verify");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"verified\": true") != std::string::npos);

    spit("bad.json", "{\"betas\": [2, 3]}\n");
    CHECK(run_cli("construct-sequence bad.json").exit_code == 2);

    spit("b22.json", "{\"betas\": [2, 2]}\n");
    CliResult b22 = run_cli("construct-sequence b22.json");
    CHECK(b22.exit_code == 0);
    CHECK(b22.out.find("\"n\": 4") != std::string::npos);
}

TEST_CASE("verify a matching") {
    spit("p5.col", kP5);
    spit("good_matching.json", "[[0,1],[3,4]]\n");
    CliResult good = run_cli("verify p5.col --matching good_matching.json");
    CHECK(good.exit_code == 0);
    CHECK(good.out.find("\"is_disconnected\": true") != std::string::npos);
    CHECK(good.out.find("\"is_induced\": true") != std::string::npos);

    spit("bad_matching.json", "[[0,1],[1,2]]\n");
    CHECK(run_cli("verify p5.col --matching bad_matching.json").exit_code == 1);

    spit("not_json.json", "zzz\n");
    CHECK(run_cli("verify p5.col --matching not_json.json").exit_code == 2);
}

TEST_CASE("gen is deterministic and honors constraints") {
    CliResult a = run_cli("gen --n 8 --m 10 --seed 7");
    CliResult b = run_cli("gen --n 8 --m 10 --seed 7");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("p edge 8 10") != std::string::npos);

    CHECK(run_cli("gen --n 5 --m 11").exit_code == 2);

    CliResult bip = run_cli("gen --n 6 --m 6 --bipartite --seed 1");
    CHECK(bip.exit_code == 0);
    dmatch::Graph g = dmatch::read_dimacs_string(bip.out);
    CHECK(dmatch::bipartition_of(g).has_value());

    CliResult conn = run_cli("gen --n 7 --m 8 --connected --max-degree 3 --seed 5");
    CHECK(conn.exit_code == 0);
    dmatch::Graph cg = dmatch::read_dimacs_string(conn.out);
    CHECK(dmatch::components(cg).size() == 1);
    CHECK(cg.max_degree() <= 3);
}
