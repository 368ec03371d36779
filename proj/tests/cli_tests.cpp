#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

#include "acqtime/families.hpp"
#include "acqtime/io.hpp"

using namespace acqtime;
namespace fs = std::filesystem;

namespace {

const char* kCli = ACQTIME_CLI_PATH;

fs::path work_dir() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() /
                     ("acqtime_cli_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

int run_cli(const std::string& args, std::string* out = nullptr) {
    fs::path stdout_file = work_dir() / "stdout.txt";
    std::string cmd = "cd " + work_dir().string() + " && " + kCli + " " + args +
                      " > stdout.txt 2> stderr.txt";
    int status = std::system(cmd.c_str());
    if (out) {
        std::ifstream in(stdout_file);
        std::stringstream buf;
        buf << in.rdbuf();
        *out = buf.str();
    }
    REQUIRE(WIFEXITED(status));
    return WEXITSTATUS(status);
}

std::string slurp(const std::string& name) {
    std::ifstream in(work_dir() / name);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("gen writes canonical families") {
    CHECK(run_cli("gen --family path --params 4 -o p4.txt") == 0);
    CHECK(slurp("p4.txt") == "4 3\n0 1\n1 2\n2 3\n");

    CHECK(run_cli("gen --family path --params 4 -o p4_again.txt") == 0);
    CHECK(slurp("p4_again.txt") == slurp("p4.txt"));

    CHECK(run_cli("gen --family gnp --params 12 --p 0.4 --seed 9 -o g1.txt") == 0);
    CHECK(run_cli("gen --family gnp --params 12 --p 0.4 --seed 9 -o g2.txt") == 0);
    CHECK(slurp("g1.txt") == slurp("g2.txt"));
    CHECK(read_graph_file((work_dir() / "g1.txt").string()).edges() ==
          generate(GnpSpec{12, 0.4, 9}).edges());
}

TEST_CASE("exact prints the value") {
    run_cli("gen --family path --params 4 -o ep4.txt");
    std::string out;
    CHECK(run_cli("exact ep4.txt", &out) == 0);
    CHECK(out == "2\n");

    CHECK(run_cli("exact ep4.txt --max-rounds 1") == 1);

    CHECK(run_cli("exact ep4.txt --max-rounds 4 -o ew.json") == 0);
    CHECK(run_cli("verify ep4.txt ew.json") == 0);
}

TEST_CASE("strategies verify end to end") {
    run_cli("gen --family kbip --params 8,8 -o k88.txt");
    CHECK(run_cli("strat --method kbip k88.txt -o k88.json") == 0);
    StrategyFile f = read_strategy_file((work_dir() / "k88.json").string());
    CHECK(f.strategy.length() == 3);
    CHECK(f.metadata.at("method") == "kbip");

    std::string out;
    CHECK(run_cli("verify k88.txt k88.json", &out) == 0);
    CHECK(out.find("verified rounds 3") != std::string::npos);
}

TEST_CASE("auto picks a specialist method") {
    run_cli("gen --family hypercube --params 3 -o q3.txt");
    CHECK(run_cli("strat --method auto q3.txt -o q3.json") == 0);
    StrategyFile f = read_strategy_file((work_dir() / "q3.json").string());
    CHECK(f.metadata.at("method") == "auto:hamiltonian");
    CHECK(f.strategy.length() == 14);
    CHECK(run_cli("verify q3.txt q3.json") == 0);
}

TEST_CASE("verify distinguishes orderings") {
    run_cli("gen --family path --params 4 -o vp4.txt");
    {
        std::ofstream good(work_dir() / "good.json");
        good << R"({"format_version":1,"n":4,"rounds":[[[0,1]],[[2,3]],[[0,1]]]})";
    }
    {
        std::ofstream bad(work_dir() / "bad.json");
        bad << R"({"format_version":1,"n":4,"rounds":[[[0,1]],[[0,1]],[[2,3]]]})";
    }
    std::string out;
    CHECK(run_cli("verify vp4.txt good.json", &out) == 0);
    CHECK(run_cli("verify vp4.txt bad.json", &out) == 1);
    CHECK(out.find("not a witness") != std::string::npos);

    {
        std::ofstream invalid(work_dir() / "invalid.json");
        invalid << R"({"format_version":1,"n":4,"rounds":[[[0,2]]]})";
    }
    CHECK(run_cli("verify vp4.txt invalid.json") == 1);
}

TEST_CASE("bounds prints the report") {
    run_cli("gen --family octopus --params 2,3 -o bo.txt");
    std::string out;
    CHECK(run_cli("bounds bo.txt --separator 6", &out) == 0);
    CHECK(out.find("bottleneck_bound 3 separator 6") != std::string::npos);
    CHECK(out.find("best_lower 3") != std::string::npos);
}

TEST_CASE("ac1 modes and exit codes") {
    run_cli("gen --family complete --params 6 -o kc6.txt");
    run_cli("gen --family path --params 4 -o kp4.txt");

    CHECK(run_cli("ac1 --mode audit kc6.txt") == 0);
    CHECK(run_cli("ac1 --mode audit kp4.txt") == 3);
    CHECK(run_cli("audit kc6.txt") == 0);
    CHECK(run_cli("audit kp4.txt") == 1);

    CHECK(run_cli("ac1 --mode det kc6.txt -o det6.json") == 0);
    CHECK(run_cli("verify kc6.txt det6.json") == 0);
    CHECK(run_cli("ac1 --mode det kp4.txt") == 3);

    run_cli("gen --family cycle --params 4 -o kc4.txt");
    CHECK(run_cli("ac1 --mode rand kc4.txt -o rand4.json") == 0);
    CHECK(run_cli("verify kc4.txt rand4.json") == 0);
}

TEST_CASE("reduce pipeline") {
    CHECK(run_cli("gen --family plant --params 8,2 --p 0.6 --seed 7 -o cg.txt") == 0);
    CHECK(run_cli("reduce --t 1 cg.txt -o h1.txt --witness w1.json") == 0);
    CHECK(run_cli("verify h1.txt w1.json") == 0);
    StrategyFile w = read_strategy_file((work_dir() / "w1.json").string());
    CHECK(w.strategy.length() == 1);

    CHECK(run_cli("reduce --t 2 cg.txt -o h2.txt --witness w2.json") == 0);
    CHECK(run_cli("verify h2.txt w2.json") == 0);

    CHECK(run_cli("ac1 --mode det h1.txt -o hdet.json") == 0);
    CHECK(run_cli("verify h1.txt hdet.json") == 0);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run_cli("frobnicate") == 2);
    CHECK(run_cli("gen --family nosuch --params 4 -o x.txt") == 2);
    CHECK(run_cli("exact missing_file.txt") == 2);
    CHECK(run_cli("verify") == 2);
}

}  // TEST_SUITE("cli")
