#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

int run(const std::string& args) {
    const std::string cmd = std::string(TOOL_PATH) + " " + args + " >cli_stdout.txt 2>cli_stderr.txt";
    const int rc = std::system(cmd.c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct Cleanup {
    ~Cleanup() {
        for (const char* f :
             {"cli_stdout.txt", "cli_stderr.txt", "cli_a.json", "cli_b.json",
              "cli_a.json.invariants.json", "cli_b.json.invariants.json", "cli_sched.json",
              "cli_bad_sched.json"})
            std::remove(f);
    }
} cleanup;

} // namespace

TEST_CASE("usage errors exit 1") {
    CHECK(run("generate") == 1);
    CHECK(run("no-such-command") == 1);
    CHECK(run("schedule") == 1); // --in is required
}

TEST_CASE("validation errors exit 2") {
    CHECK(run("schedule --in does_not_exist.json") == 2);
    CHECK(run("generate random -n 10 --delta 0.5 --out cli_a.json") == 2);
    CHECK(run("generate chain-clique -n 15 --f log --out cli_a.json") == 2);
}

TEST_CASE("generation is byte deterministic") {
    REQUIRE(run("generate random -n 25 --delta 32 --seed 4 --out cli_a.json") == 0);
    REQUIRE(run("generate random -n 25 --delta 32 --seed 4 --out cli_b.json") == 0);
    const std::string a = slurp("cli_a.json");
    CHECK(!a.empty());
    CHECK(a == slurp("cli_b.json"));
    CHECK(!slurp("cli_a.json.invariants.json").empty());
}

TEST_CASE("invariant failure exits 3") {
    // Default f exceeds the placement bound of the recursive construction.
    CHECK(run("generate hard -t 2 --out cli_a.json") == 3);
    CHECK(run("generate hard -t 2 --f const:1 --out cli_a.json") == 0);
}

TEST_CASE("schedule then verify round trip") {
    REQUIRE(run("generate random -n 20 --delta 16 --seed 7 --out cli_a.json") == 0);
    REQUIRE(run("schedule --in cli_a.json --out cli_sched.json") == 0);
    CHECK(run("verify --in cli_a.json --schedule cli_sched.json") == 0);
}

TEST_CASE("verify counts infeasible slots") {
    // Three coincident unit links cannot share a slot.
    REQUIRE(run("generate random -n 1 --delta 1 --seed 1 --out cli_a.json") == 0);
    std::ofstream inst("cli_a.json", std::ios::trunc);
    inst << R"({"alpha":3.0,"beta":1.0,"noise":0.0,
                "metric":{"type":"euclidean","dim":1},
                "links":[{"id":1,"s":[0],"r":[1]},
                         {"id":2,"s":[0.1],"r":[1.1]},
                         {"id":3,"s":[0.2],"r":[1.2]}]})";
    inst.close();
    std::ofstream sched("cli_bad_sched.json", std::ios::trunc);
    sched << R"({"slots":[[1,2,3]]})";
    sched.close();
    CHECK(run("verify --in cli_a.json --schedule cli_bad_sched.json") == 1);
    std::ofstream split("cli_bad_sched.json", std::ios::trunc);
    split << R"({"slots":[[1,2],[3]]})";
    split.close();
    CHECK(run("verify --in cli_a.json --schedule cli_bad_sched.json") == 1);
}

TEST_CASE("measure and capacity emit json") {
    REQUIRE(run("generate random -n 15 --delta 8 --seed 2 --out cli_a.json") == 0);
    CHECK(run("measure --in cli_a.json --out cli_b.json") == 0);
    CHECK(slurp("cli_b.json").find("b_tlog") != std::string::npos);
    CHECK(run("capacity --in cli_a.json --out cli_b.json") == 0);
    CHECK(slurp("cli_b.json").find("chosen") != std::string::npos);
}

TEST_CASE("graph export runs") {
    REQUIRE(run("generate random -n 10 --delta 8 --seed 2 --out cli_a.json") == 0);
    CHECK(run("graph --in cli_a.json --f log --out cli_b.json") == 0);
    CHECK(slurp("cli_b.json").find("order") != std::string::npos);
}
