#include <doctest.h>

#include <cmath>

#include "dfs/linalg.hpp"
#include "dfs/rng.hpp"
#include "dfs/scatter.hpp"
#include "test_util.hpp"

using namespace dfs;

namespace {

LabeledDataset column_dataset(std::vector<double> values, std::vector<int> labels) {
    LabeledDataset data;
    data.features = Matrix(values.size(), 1);
    for (std::size_t i = 0; i < values.size(); ++i) data.features(i, 0) = values[i];
    data.labels = std::move(labels);
    return data;
}

}  // namespace

TEST_CASE("standardize centers and scales by population std") {
    const LabeledDataset data = column_dataset({1, 2, 3}, {0, 0, 1});
    const auto [out, params] = standardize(data);
    const double sigma = std::sqrt(2.0 / 3.0);  // population std of (1,2,3)
    CHECK(out.features(0, 0) == doctest::Approx(-1.0 / sigma).epsilon(1e-12));
    CHECK(out.features(1, 0) == doctest::Approx(0.0).scale(1).epsilon(1e-12));
    CHECK(out.features(2, 0) == doctest::Approx(1.0 / sigma).epsilon(1e-12));
    CHECK(params.mean[0] == doctest::Approx(2.0));
    CHECK(params.constant_columns.empty());
}

TEST_CASE("standardize is idempotent") {
    Rng rng(3);
    LabeledDataset data = testutil::random_dataset(20, 4, 2, rng);
    const LabeledDataset once = standardize(data).first;
    const LabeledDataset twice = standardize(once).first;
    CHECK(max_abs_diff(once.features, twice.features) <= 1e-10);
}

TEST_CASE("constant columns are centered, unscaled and flagged") {
    LabeledDataset data;
    data.features = Matrix(3, 2);
    for (std::size_t i = 0; i < 3; ++i) {
        data.features(i, 0) = 5.0;
        data.features(i, 1) = static_cast<double>(i);
    }
    data.labels = {0, 0, 1};
    const auto [out, params] = standardize(data);
    for (std::size_t i = 0; i < 3; ++i) CHECK(out.features(i, 0) == 0.0);
    REQUIRE(params.constant_columns.size() == 1);
    CHECK(params.constant_columns[0] == 0);
}

TEST_CASE("hand-computed 1-D two-class scatter") {
    // class 0: (-1, +1), class 1: (1, 3); mu = 1, mu0 = 0, mu1 = 2
    const LabeledDataset data = column_dataset({-1, 1, 1, 3}, {0, 0, 1, 1});
    const ScatterTriple sc = compute_scatter(data);
    CHECK(sc.sb.at(0, 0) == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(sc.sw.at(0, 0) == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(sc.st.at(0, 0) == doctest::Approx(8.0).epsilon(1e-12));
    CHECK(sc.total_mean[0] == doctest::Approx(1.0));
    CHECK(sc.class_means(0, 0) == doctest::Approx(0.0));
    CHECK(sc.class_means(1, 0) == doctest::Approx(2.0));
}

TEST_CASE("identical samples give zero scatter") {
    LabeledDataset data;
    data.features = Matrix(4, 3, 2.5);
    data.labels = {0, 1, 0, 1};
    const ScatterTriple sc = compute_scatter(data);
    CHECK(frobenius_norm(sc.st) == 0.0);
    CHECK(frobenius_norm(sc.sb) == 0.0);
    CHECK(frobenius_norm(sc.sw) == 0.0);
}

TEST_CASE("st = sb + sw on random data, against direct sums") {
    Rng rng(19);
    const LabeledDataset data = testutil::random_dataset(20, 5, 3, rng);
    const ScatterTriple sc = compute_scatter(data);
    double worst = 0.0;
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j)
            worst = std::max(worst,
                             std::abs(sc.st.at(i, j) - sc.sb.at(i, j) - sc.sw.at(i, j)));
    CHECK(worst <= 1e-10);
}

TEST_CASE("scatter identity fuzz over random shapes") {
    Rng rng(101);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 4 + rng.below(47);
        const std::size_t d = 1 + rng.below(20);
        const std::size_t c = 2 + rng.below(std::min<std::size_t>(4, n - 1));
        const LabeledDataset data = testutil::random_dataset(n, d, c, rng);
        const ScatterTriple sc = compute_scatter(data);
        const double scale = std::max(1.0, frobenius_norm(sc.st));
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j <= i; ++j)
                CHECK(std::abs(sc.st.at(i, j) - sc.sb.at(i, j) - sc.sw.at(i, j)) <=
                      1e-8 * scale);
    }
}

TEST_CASE("sample permutation does not change the result") {
    Rng rng(5);
    const LabeledDataset data = testutil::random_dataset(15, 4, 3, rng);
    LabeledDataset shuffled;
    shuffled.features = Matrix(15, 4);
    shuffled.labels.resize(15);
    std::vector<std::size_t> perm(15);
    for (std::size_t i = 0; i < 15; ++i) perm[i] = (i * 7 + 3) % 15;
    for (std::size_t i = 0; i < 15; ++i) {
        shuffled.labels[i] = data.labels[perm[i]];
        for (std::size_t j = 0; j < 4; ++j)
            shuffled.features(i, j) = data.features(perm[i], j);
    }
    const ScatterTriple a = compute_scatter(data);
    const ScatterTriple b = compute_scatter(shuffled);
    // the summation order is fixed by class id, so permuting samples of
    // the same class can still reorder floating-point adds; compare tight
    CHECK(std::abs(a.sb.at(0, 0) - b.sb.at(0, 0)) <= 1e-12);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            CHECK(a.st.at(i, j) == doctest::Approx(b.st.at(i, j)).epsilon(1e-12));
            CHECK(a.sw.at(i, j) == doctest::Approx(b.sw.at(i, j)).epsilon(1e-12));
        }
}

TEST_CASE("rank of sb is at most c - 1") {
    Rng rng(23);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t c = 2 + rng.below(3);
        const LabeledDataset data = testutil::random_dataset(30, 6, c, rng);
        const ScatterTriple sc = compute_scatter(data);
        const EigPairs pairs = jacobi_eigensolve(sc.sb.to_dense());
        const double threshold = 1e-8 * std::max(1.0, frobenius_norm(sc.sb));
        std::size_t rank = 0;
        for (double v : pairs.values)
            if (v > threshold) ++rank;
        CHECK(rank <= c - 1);
        // PSD: smallest eigenvalue bounded below
        CHECK(pairs.values.front() >= -threshold);
    }
}

TEST_CASE("degenerate class is rejected") {
    LabeledDataset data;
    data.features = Matrix(3, 2, 1.0);
    data.labels = {0, 0, 2};  // class 1 missing
    CHECK_THROWS_AS(compute_scatter(data), DegenerateClass);
}
