#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "dfs/io.hpp"
#include "dfs/synthetic.hpp"

namespace fs = std::filesystem;

namespace {

int run_cli(const std::string& args) {
    const std::string cmd = std::string(DFS_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path);
    return std::string(std::istreambuf_iterator<char>(in), {});
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("dfs_cli_" + std::to_string(static_cast<unsigned>(::getpid())) + "_" +
                std::to_string(counter++));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    static inline int counter = 0;
};

fs::path write_sample_csv(const TempDir& dir) {
    dfs::SyntheticSpec spec;
    spec.n = 60;
    spec.d = 6;
    spec.c = 2;
    spec.n_informative = 2;
    spec.seed = 12;
    const fs::path path = dir.path / "data.csv";
    dfs::write_dense_csv(path.string(), dfs::generate_synthetic(spec).data, {"a", "b"});
    return path;
}

}  // namespace

TEST_CASE("select writes ranking and manifest") {
    TempDir dir;
    const fs::path csv = write_sample_csv(dir);
    const fs::path out = dir.path / "out";
    const int code = run_cli("select --input " + csv.string() + " --gamma 0.1 --out-dir " +
                             out.string());
    CHECK(code == 0);
    CHECK(fs::exists(out / "ranking.json"));
    CHECK(fs::exists(out / "manifest.json"));
    CHECK(!fs::exists(out / "traces.csv"));
    CHECK(slurp(out / "ranking.json").find("\"feature_index\"") != std::string::npos);
}

TEST_CASE("select with --emit-traces adds the traces file") {
    TempDir dir;
    const fs::path csv = write_sample_csv(dir);
    const fs::path out = dir.path / "out";
    const int code = run_cli("select --input " + csv.string() +
                             " --gamma 0.1 --emit-traces --out-dir " + out.string());
    CHECK(code == 0);
    const std::string traces = slurp(out / "traces.csv");
    CHECK(traces.rfind("iteration,objective_smoothed,objective_raw,divergence\n", 0) == 0);
}

TEST_CASE("missing --gamma is a usage error") {
    TempDir dir;
    const fs::path csv = write_sample_csv(dir);
    CHECK(run_cli("select --input " + csv.string()) == 2);
}

TEST_CASE("unreadable input is an input error") {
    CHECK(run_cli("select --input /nonexistent.csv --gamma 0.1") == 3);
}

TEST_CASE("eval on synthetic data writes report and curve") {
    TempDir dir;
    const fs::path out = dir.path / "out";
    const int code =
        run_cli("eval --synthetic n=60,d=8,c=2,informative=2 --gamma 0.1 --k-grid 2,4 "
                "--folds 3 --seed 5 --out-dir " +
                out.string());
    CHECK(code == 0);
    const std::string report = slurp(out / "report.json");
    CHECK(report.find("\"k_grid\": [\n    2,\n    4\n  ]") != std::string::npos);
    CHECK(slurp(out / "curve.csv").rfind("k,mean_accuracy,redundancy\n", 0) == 0);
}

TEST_CASE("eval reruns with the same seed are byte-identical") {
    TempDir dir;
    const fs::path out1 = dir.path / "a";
    const fs::path out2 = dir.path / "b";
    const std::string args =
        "eval --synthetic n=60,d=8,c=2,informative=2 --gamma 0.1 --k-grid 2,4 "
        "--folds 3 --seed 5 --out-dir ";
    REQUIRE(run_cli(args + out1.string()) == 0);
    REQUIRE(run_cli(args + out2.string()) == 0);
    CHECK(slurp(out1 / "report.json") == slurp(out2 / "report.json"));
    CHECK(slurp(out1 / "curve.csv") == slurp(out2 / "curve.csv"));
}

TEST_CASE("single fold is a configuration error") {
    TempDir dir;
    const fs::path out = dir.path / "out";
    CHECK(run_cli("eval --synthetic n=60,d=8,c=2,informative=2 --folds 1 --out-dir " +
                  out.string()) == 2);
}

TEST_CASE("eval without input or synthetic is a configuration error") {
    CHECK(run_cli("eval") == 2);
}

TEST_CASE("redundancy and scatter-check run on a csv") {
    TempDir dir;
    const fs::path csv = write_sample_csv(dir);
    CHECK(run_cli("redundancy --input " + csv.string() + " --features 0,1,2") == 0);
    CHECK(run_cli("scatter-check --input " + csv.string()) == 0);
}
