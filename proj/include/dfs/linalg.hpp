#pragma once

#include <vector>

#include "dfs/matrix.hpp"

namespace dfs {

// Eigenpairs sorted ascending by value; column j of `vectors` belongs to
// values[j]. Ties within 1e-10 relative are ordered by the smallest index
// of the largest-magnitude vector component, and every vector's sign is
// fixed so that component is positive.
struct EigPairs {
    std::vector<double> values;
    Matrix vectors;  // d x l
};

// Lower-triangular Cholesky factor, L * L^T = m. Throws
// NotPositiveDefinite when a pivot is <= 0 or non-finite.
Matrix cholesky(const SymMatrix& m);

// Forward substitution: solve L * x = b for lower-triangular L.
std::vector<double> solve_lower(const Matrix& lower, const std::vector<double>& b);
// Back substitution against L^T: solve L^T * x = b.
std::vector<double> solve_lower_transposed(const Matrix& lower, const std::vector<double>& b);

// Full spectrum of a dense symmetric matrix by cyclic Jacobi rotations.
// Converges when the off-diagonal Frobenius mass drops below
// 1e-12 * ||m||_F; capped at 100 sweeps.
EigPairs jacobi_eigensolve(const Matrix& symmetric);

// The l algebraically smallest eigenpairs of lhs * a = lambda * rhs * a,
// for symmetric lhs and SPD rhs, via Cholesky reduction to a standard
// symmetric problem. Returned vectors satisfy A^T * rhs * A = I.
EigPairs generalized_eig_smallest(const SymMatrix& lhs, const SymMatrix& rhs, std::size_t l);

}  // namespace dfs
