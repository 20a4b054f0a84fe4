#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "dfs/dataset.hpp"
#include "dfs/scatter.hpp"

namespace dfs {

// Solver knobs. `l` defaults to c-1 when left at 0; `alpha` < 0 selects
// the trace-relative default ridge 1e-6 * trace(St)/d.
struct DfsConfig {
    double gamma = 0.1;     // regularization weight
    double p = 1.0;         // row-norm exponent, 0 < p <= 2
    std::size_t l = 0;      // target dimensionality; 0 means c-1
    double alpha = -1.0;    // St ridge; negative means trace-relative default
    double zeta = 1e-10;    // row-norm smoothing
    double tol = 1e-6;      // convergence threshold
    std::size_t max_iter = 100;

    void validate(std::size_t d) const;
};

enum class Termination { Converged, MaxIter };

struct DfsSolution {
    Matrix a_matrix;                     // d x l
    std::vector<double> row_scores;      // ||a^i||_2
    std::vector<std::size_t> ranking;    // descending score, ties by index
    std::vector<double> objective_trace;       // smoothed objective per iteration
    std::vector<double> objective_raw_trace;   // unsmoothed l2p objective per iteration
    std::vector<double> divergence_trace;      // Div(k), from the second iteration on
    std::vector<double> constraint_dev_trace;  // max-abs |A^T(St+aI)A - I| per iteration
    // worst eigen residual per iteration, relative to max(1, ||gamma D - Sb||_F)
    std::vector<double> residual_trace;
    std::size_t iterations = 0;
    Termination terminated_by = Termination::MaxIter;
    double alpha_used = 0.0;
    std::size_t l_used = 0;
};

// Positive diagonal reweighting matrix.
struct WeightDiag {
    std::vector<double> diag;
};

// norms[i] = ||row i||_2; second value is sum_i norms[i]^p.
std::pair<std::vector<double>, double> row_norms_2p(const Matrix& m, double p);

// d_ii = (p/2) * ((a^i)^T a^i + zeta)^(p/2 - 1)
WeightDiag update_weights(const Matrix& a, double p, double zeta);

// -tr(a^T sb a) + gamma * sum_i ((a^i)^T a^i + zeta)^(p/2)
double dfs_objective(const Matrix& a, const SymMatrix& sb, double gamma, double p, double zeta);

// sum_i | ||a_next^i||_2 - ||a_prev^i||_2 |
double divergence(const Matrix& a_prev, const Matrix& a_next);

// Iteratively reweighted solve: D_0 = I; repeat A <- l smallest
// generalized eigenpairs of (gamma D - Sb, St + alpha I), D <- reweight,
// until both the objective change and the row-norm divergence fall under
// tolerance, or max_iter.
DfsSolution solve(const ScatterTriple& scatter, const DfsConfig& cfg);
DfsSolution solve(const LabeledDataset& data, const DfsConfig& cfg);

// Evaluates the ratio-form objective -tr((a^T sw a)^-1 (a^T sb a)) +
// gamma * ||a||_{inf,1} at a and at c_scale * a. The penalty shrinks with
// |c_scale| < 1 while the ratio term is scale-invariant, so j_ca <= j_a.
struct ScalingCheck {
    double j_a;
    double j_ca;
};
ScalingCheck ldfs_objective_scaling_check(const Matrix& a, const SymMatrix& sb,
                                          const SymMatrix& sw, double gamma, double c_scale);

// ||a||^p/||a_k||^p - (p/2) ||a||^2/||a_k||^2 <= 1 - p/2, within 1e-12.
bool lemma1_inequality(const std::vector<double>& a, const std::vector<double>& a_k, double p);

}  // namespace dfs
