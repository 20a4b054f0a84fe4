#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "dfs/io.hpp"
#include "dfs/rng.hpp"
#include "test_util.hpp"

using namespace dfs;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name, const std::string& content) {
        path = (std::filesystem::temp_directory_path() / name).string();
        std::ofstream out(path);
        out << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    return std::string(std::istreambuf_iterator<char>(in), {});
}

}  // namespace

TEST_CASE("dense csv with header, labels mapped by first appearance") {
    const TempFile file("dfs_io_dense.csv",
                        "x,y,label\n"
                        "1.5,2,a\n"
                        "\n"
                        "3,4.25,a\n"
                        "5,6,b\n"
                        "\n");
    const LoadResult loaded = load_dense_csv(file.path, "label");
    REQUIRE(loaded.data.n_samples() == 3);
    REQUIRE(loaded.data.n_features() == 2);
    CHECK(loaded.data.feature_names == std::vector<std::string>{"x", "y"});
    CHECK(loaded.data.features(0, 0) == 1.5);
    CHECK(loaded.data.features(1, 1) == 4.25);
    CHECK(loaded.data.features(2, 0) == 5.0);
    CHECK(loaded.data.labels == std::vector<int>{0, 0, 1});
    CHECK(loaded.label_values == std::vector<std::string>{"a", "b"});
}

TEST_CASE("label column can be a 0-based index") {
    const TempFile file("dfs_io_idx.csv",
                        "cls,u,v\n"
                        "p,1,2\n"
                        "q,3,4\n");
    const LoadResult loaded = load_dense_csv(file.path, "0");
    CHECK(loaded.data.n_features() == 2);
    CHECK(loaded.data.features(1, 0) == 3.0);
    CHECK(loaded.label_values == std::vector<std::string>{"p", "q"});
}

TEST_CASE("non-numeric cell reports its line and column") {
    const TempFile file("dfs_io_bad.csv",
                        "x,y,label\n"
                        "1,2,a\n"
                        "1,nope,b\n");
    CHECK_THROWS_AS(load_dense_csv(file.path, "label"), NonNumericValue);
    try {
        load_dense_csv(file.path, "label");
    } catch (const NonNumericValue& e) {
        CHECK(e.line == 3);
        CHECK(e.column == 1);
    }
}

TEST_CASE("nan and inf cells are rejected") {
    const TempFile file("dfs_io_nan.csv",
                        "x,label\n"
                        "nan,a\n"
                        "1,b\n");
    CHECK_THROWS_AS(load_dense_csv(file.path, "label"), NonNumericValue);
}

TEST_CASE("missing label column") {
    const TempFile file("dfs_io_nolabel.csv",
                        "x,y\n"
                        "1,2\n");
    CHECK_THROWS_AS(load_dense_csv(file.path, "label"), MissingLabelColumn);
}

TEST_CASE("ragged row is a parse error") {
    const TempFile file("dfs_io_ragged.csv",
                        "x,y,label\n"
                        "1,2\n");
    CHECK_THROWS_AS(load_dense_csv(file.path, "label"), ParseError);
}

TEST_CASE("dense csv round-trips value-identically") {
    Rng rng(67);
    LabeledDataset data = testutil::random_dataset(12, 4, 3, rng);
    data.features(0, 0) = 0.1;  // not exactly representable; exercises shortest form
    const std::vector<std::string> labels = {"red", "green", "blue"};

    const std::string path =
        (std::filesystem::temp_directory_path() / "dfs_io_roundtrip.csv").string();
    write_dense_csv(path, data, labels);
    const LoadResult loaded = load_dense_csv(path, "label");
    std::remove(path.c_str());

    REQUIRE(loaded.data.n_samples() == data.n_samples());
    REQUIRE(loaded.data.n_features() == data.n_features());
    CHECK(loaded.data.features == data.features);
    CHECK(loaded.data.labels == data.labels);
    CHECK(loaded.label_values == labels);
}

TEST_CASE("sparse rows densify with zeros") {
    const TempFile file("dfs_io_sparse.txt",
                        "1 1:0.5 3:2.0\n"
                        "0\n"
                        "1 2:-1\n");
    const LoadResult loaded = load_sparse_libsvm(file.path);
    REQUIRE(loaded.data.n_samples() == 3);
    REQUIRE(loaded.data.n_features() == 3);
    CHECK(loaded.data.features(0, 0) == 0.5);
    CHECK(loaded.data.features(0, 1) == 0.0);
    CHECK(loaded.data.features(0, 2) == 2.0);
    for (std::size_t j = 0; j < 3; ++j) CHECK(loaded.data.features(1, j) == 0.0);
    CHECK(loaded.data.features(2, 1) == -1.0);
    CHECK(loaded.data.labels == std::vector<int>{0, 1, 0});
    CHECK(loaded.label_values == std::vector<std::string>{"1", "0"});
}

TEST_CASE("sparse indices are 1-based") {
    const TempFile file("dfs_io_sparse0.txt", "1 0:3.0\n0 1:1\n");
    CHECK_THROWS_AS(load_sparse_libsvm(file.path), ParseError);
}

TEST_CASE("sparse indices must strictly ascend") {
    const TempFile file("dfs_io_sparsedup.txt", "1 2:1 2:2\n0 1:1\n");
    CHECK_THROWS_AS(load_sparse_libsvm(file.path), NonAscendingIndex);
}

TEST_CASE("traces csv has a blank divergence on the first row") {
    DfsSolution sol;
    sol.objective_trace = {-1.0, -1.5};
    sol.objective_raw_trace = {-1.25, -1.75};
    sol.divergence_trace = {0.25};
    const std::string path =
        (std::filesystem::temp_directory_path() / "dfs_io_traces.csv").string();
    write_traces_csv(path, sol);
    const std::string text = slurp(path);
    std::remove(path.c_str());
    CHECK(text ==
          "iteration,objective_smoothed,objective_raw,divergence\n"
          "1,-1,-1.25,\n"
          "2,-1.5,-1.75,0.25\n");
}

TEST_CASE("curve csv layout") {
    EvalReport report;
    report.k_grid = {2, 4};
    report.mean_accuracy = {0.5, 0.75};
    report.redundancy = {0.125, 0.0};
    const std::string path =
        (std::filesystem::temp_directory_path() / "dfs_io_curve.csv").string();
    write_curve_csv(path, report);
    const std::string text = slurp(path);
    std::remove(path.c_str());
    CHECK(text ==
          "k,mean_accuracy,redundancy\n"
          "2,0.5,0.125\n"
          "4,0.75,0\n");
}
