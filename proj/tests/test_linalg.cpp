#include <doctest.h>

#include <cmath>

#include "dfs/linalg.hpp"
#include "dfs/rng.hpp"
#include "oracle.hpp"
#include "test_util.hpp"

using namespace dfs;

namespace {

SymMatrix sym2(double a, double b, double c) {
    SymMatrix m(2);
    m.set(0, 0, a);
    m.set(0, 1, b);
    m.set(1, 1, c);
    return m;
}

}  // namespace

TEST_CASE("cholesky of identity is identity") {
    const Matrix lower = cholesky(SymMatrix::identity(3));
    CHECK(max_abs_diff(lower, Matrix::identity(3)) == 0.0);
}

TEST_CASE("cholesky factors [[4,2],[2,3]]") {
    const SymMatrix m = sym2(4, 2, 3);
    const Matrix lower = cholesky(m);
    CHECK(lower(0, 0) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(lower(0, 1) == 0.0);
    CHECK(lower(1, 0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(lower(1, 1) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));

    // reconstruction to 1e-12
    const Matrix rebuilt = multiply(lower, transpose(lower));
    CHECK(max_abs_diff(rebuilt, m.to_dense()) <= 1e-12);
}

TEST_CASE("cholesky rejects an indefinite matrix") {
    CHECK_THROWS_AS(cholesky(sym2(1, 2, 1)), NotPositiveDefinite);
}

TEST_CASE("generalized eigensolver on a diagonal problem") {
    SymMatrix lhs(3);
    lhs.set(0, 0, 3);
    lhs.set(1, 1, 1);
    lhs.set(2, 2, 2);
    const EigPairs pairs = generalized_eig_smallest(lhs, SymMatrix::identity(3), 2);
    REQUIRE(pairs.values.size() == 2);
    CHECK(pairs.values[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(pairs.values[1] == doctest::Approx(2.0).epsilon(1e-12));
    // unit vectors e2, e3 with positive anchor
    CHECK(pairs.vectors(1, 0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(pairs.vectors(2, 1) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(pairs.vectors(0, 0)) <= 1e-12);
    CHECK(std::abs(pairs.vectors(0, 1)) <= 1e-12);
}

TEST_CASE("scaling rhs by 2 halves the eigenvalues") {
    Rng rng(11);
    const SymMatrix lhs = testutil::random_symmetric(5, rng);
    SymMatrix rhs2(5);
    for (std::size_t i = 0; i < 5; ++i) rhs2.set(i, i, 2.0);

    const EigPairs base = generalized_eig_smallest(lhs, SymMatrix::identity(5), 3);
    const EigPairs scaled = generalized_eig_smallest(lhs, rhs2, 3);
    for (std::size_t j = 0; j < 3; ++j) {
        CHECK(scaled.values[j] == doctest::Approx(0.5 * base.values[j]).epsilon(1e-10));
        // vectors shrink by 1/sqrt(2) to keep A^T rhs A = I
        for (std::size_t i = 0; i < 5; ++i)
            CHECK(scaled.vectors(i, j) ==
                  doctest::Approx(base.vectors(i, j) / std::sqrt(2.0)).epsilon(1e-8));
    }
}

TEST_CASE("random pairs match the brute-force reduction oracle") {
    Rng rng(42);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t d = 6;
        const SymMatrix lhs = testutil::random_symmetric(d, rng);
        const SymMatrix rhs = testutil::random_spd(d, rng);
        const EigPairs pairs = generalized_eig_smallest(lhs, rhs, 3);

        oracle::Mat lhs_o(d, std::vector<double>(d)), rhs_o(d, std::vector<double>(d));
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                lhs_o[i][j] = lhs.at(i, j);
                rhs_o[i][j] = rhs.at(i, j);
            }
        const std::vector<double> reference = oracle::generalized_eigvals(lhs_o, rhs_o);
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(pairs.values[j] ==
                  doctest::Approx(reference[j]).epsilon(1e-9).scale(
                      std::max(1.0, std::abs(reference[j]))));

        // residual and rhs-orthonormality invariants
        const double scale = std::max(1.0, frobenius_norm(lhs));
        for (std::size_t j = 0; j < 3; ++j) {
            std::vector<double> a(d);
            for (std::size_t i = 0; i < d; ++i) a[i] = pairs.vectors(i, j);
            const auto la = multiply_vec(lhs, a);
            const auto ra = multiply_vec(rhs, a);
            double res = 0.0;
            for (std::size_t i = 0; i < d; ++i) {
                const double r = la[i] - pairs.values[j] * ra[i];
                res += r * r;
            }
            CHECK(std::sqrt(res) <= 1e-8 * scale);
        }
        CHECK(max_abs_diff(congruence(pairs.vectors, rhs), Matrix::identity(3)) <= 1e-8);
        CHECK(pairs.values[0] <= pairs.values[1]);
        CHECK(pairs.values[1] <= pairs.values[2]);
    }
}

TEST_CASE("repeated solves are bit-identical") {
    Rng rng(7);
    const SymMatrix lhs = testutil::random_symmetric(8, rng);
    const SymMatrix rhs = testutil::random_spd(8, rng);
    const EigPairs first = generalized_eig_smallest(lhs, rhs, 4);
    const EigPairs second = generalized_eig_smallest(lhs, rhs, 4);
    CHECK(first.values == second.values);
    CHECK(first.vectors == second.vectors);
}

TEST_CASE("dimension and range checks") {
    CHECK_THROWS_AS(generalized_eig_smallest(SymMatrix::identity(3), SymMatrix::identity(4), 1),
                    DimensionMismatch);
    CHECK_THROWS_AS(generalized_eig_smallest(SymMatrix::identity(3), SymMatrix::identity(3), 4),
                    DimensionMismatch);
    CHECK_THROWS_AS(generalized_eig_smallest(SymMatrix::identity(3), SymMatrix::identity(3), 0),
                    DimensionMismatch);
}

TEST_CASE("not-positive-definite rhs propagates") {
    SymMatrix rhs(2);
    rhs.set(0, 0, 1);
    rhs.set(0, 1, 2);
    rhs.set(1, 1, 1);
    CHECK_THROWS_AS(generalized_eig_smallest(SymMatrix::identity(2), rhs, 1),
                    NotPositiveDefinite);
}
