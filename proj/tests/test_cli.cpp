#include <sys/wait.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "polarmin/cli.hpp"

namespace fs = std::filesystem;

namespace {

const std::string kBin = POLARMIN_CLI_BIN;
const std::string kData = POLARMIN_DATA_DIR;

int run_cli(const std::string& args) {
    std::string cmd = kBin + " " + args + " >/dev/null 2>&1";
    int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path fresh_dir(const std::string& name) {
    fs::path dir = fs::temp_directory_path() / ("polarmin_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

// trajectory.csv with the wall_ms column (timing noise) blanked out
std::string mask_wall(const std::string& csv) {
    std::istringstream in(csv);
    std::ostringstream out;
    std::string line;
    while (std::getline(in, line)) {
        auto cut = line.rfind(',');
        out << line.substr(0, cut) << '\n';
    }
    return out.str();
}

}  // namespace

TEST_CASE("cli: run writes the three tables and an id map") {
    fs::path dir = fresh_dir("run_basic");
    int rc = run_cli("run --input " + kData + "/karate.txt --q 3 --k 2 "
                     "--alg exact --seed 5 --out " + dir.string());
    CHECK(rc == 0);
    std::string traj = slurp(dir / "trajectory.csv");
    std::string summ = slurp(dir / "summary.csv");
    std::string chosen = slurp(dir / "chosen_edges.csv");
    CHECK(traj.rfind("repetition,algorithm,k_step,R_Q,wall_ms\n", 0) == 0);
    CHECK(summ.rfind("algorithm,reps,final_r_q_mean,final_r_q_stderr,"
                     "final_r_q_exact_mean\n", 0) == 0);
    CHECK(chosen.rfind("repetition,algorithm,step,leader,follower,"
                       "orig_leader,orig_follower,weight\n", 0) == 0);
    // k+1 trajectory rows + header
    CHECK(std::count(traj.begin(), traj.end(), '\n') == 4);
    CHECK(std::count(chosen.begin(), chosen.end(), '\n') == 3);
    CHECK(fs::exists(dir / "id_map.txt"));
}

TEST_CASE("cli: identical runs yield identical bytes, wall time aside") {
    fs::path a = fresh_dir("det_a"), b = fresh_dir("det_b");
    std::string args = "run --input " + kData + "/karate.txt --q 4 --k 3 "
                       "--alg all --seed 11 --reps 2";
    CHECK(run_cli(args + " --out " + a.string()) == 0);
    CHECK(run_cli(args + " --out " + b.string()) == 0);
    CHECK(slurp(a / "summary.csv") == slurp(b / "summary.csv"));
    CHECK(slurp(a / "chosen_edges.csv") == slurp(b / "chosen_edges.csv"));
    CHECK(mask_wall(slurp(a / "trajectory.csv")) ==
          mask_wall(slurp(b / "trajectory.csv")));
}

TEST_CASE("cli: explicit leaders are given in original ids") {
    fs::path dir = fresh_dir("leaders");
    int rc = run_cli("run --input " + kData + "/karate.txt "
                     "--leaders 32 33 --k 2 --alg exact --out " + dir.string());
    CHECK(rc == 0);
    std::istringstream in(slurp(dir / "chosen_edges.csv"));
    std::string line;
    std::getline(in, line);  // header
    int rows = 0;
    while (std::getline(in, line)) {
        ++rows;
        // orig_leader is the 6th column
        std::istringstream cols(line);
        std::string f;
        std::vector<std::string> v;
        while (std::getline(cols, f, ',')) v.push_back(f);
        REQUIRE(v.size() == 8);
        CHECK((v[5] == "32" || v[5] == "33"));
    }
    CHECK(rows == 2);
}

TEST_CASE("cli: disconnected inputs are restricted to the main component") {
    fs::path dir = fresh_dir("lcc");
    fs::path input = dir / "two_parts.txt";
    {
        std::ofstream out(input);
        out << "0 1\n1 2\n0 2\n5 6\n6 7\n7 8\n8 5\n5 7\n";
    }
    int rc = run_cli("run --input " + input.string() +
                     " --q 1 --k 1 --alg exact --seed 2 --out " + dir.string());
    CHECK(rc == 0);
    CHECK(slurp(dir / "id_map.txt") == "5 0\n6 1\n7 2\n8 3\n");
}

TEST_CASE("cli: exit codes") {
    fs::path dir = fresh_dir("codes");
    CHECK(run_cli("run --input /nonexistent.txt --q 2 --k 1 --out " +
                  dir.string()) == 2);

    fs::path bad = dir / "bad.txt";
    {
        std::ofstream out(bad);
        out << "0 1\noops\n";
    }
    CHECK(run_cli("run --input " + bad.string() + " --q 1 --k 1 --out " +
                  dir.string()) == 2);

    // k larger than the candidate pool
    fs::path tiny = dir / "tiny.txt";
    {
        std::ofstream out(tiny);
        out << "0 1\n1 2\n";
    }
    CHECK(run_cli("run --input " + tiny.string() + " --leaders 2 --k 5 --out " +
                  dir.string()) == 2);

    CHECK(run_cli("run --input " + tiny.string() + " --q 1 --k 1 --alg nope "
                  "--out " + dir.string()) == 2);
    CHECK(run_cli("runx") == 2);
    CHECK(run_cli("--help") == 0);
    CHECK(run_cli("run --help") == 0);
}

TEST_CASE("cli: validate runs its suites") {
    CHECK(run_cli("validate --seed 4") == 0);
    CHECK(run_cli("validate --input " + kData + "/karate.txt --q 3") == 0);
}

TEST_CASE("cli: bench appends one row per algorithm") {
    fs::path dir = fresh_dir("bench");
    int rc = run_cli("bench --input " + kData + "/karate.txt --q 4 --k 3 "
                     "--alg exact --out " + dir.string());
    CHECK(rc == 0);
    rc = run_cli("bench --input " + kData + "/karate.txt --q 4 --k 3 "
                 "--alg approx --eps 0.25 --out " + dir.string());
    CHECK(rc == 0);
    std::string bench = slurp(dir / "bench.csv");
    CHECK(bench.rfind("network,n,m,algorithm,seconds,setup_seconds\n", 0) == 0);
    CHECK(std::count(bench.begin(), bench.end(), '\n') == 3);
    CHECK(bench.find("karate.txt,34,78,exact,") != std::string::npos);
    CHECK(bench.find("karate.txt,34,78,approx,") != std::string::npos);
}

TEST_CASE("cli: value formatting is locale-free and fixed") {
    CHECK(polarmin::format_value(4.0 / 3.0) == "1.33333333333");
    CHECK(polarmin::format_value(3.0) == "3");
    CHECK(polarmin::format_ms(1.23456) == "1.235");
}
