#include "dfs/solver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "dfs/linalg.hpp"
#include "dfs/log.hpp"

namespace dfs {
namespace {

double trace_of(const SymMatrix& m) {
    double acc = 0.0;
    for (std::size_t i = 0; i < m.order(); ++i) acc += m.at(i, i);
    return acc;
}

double trace_of(const Matrix& m) {
    double acc = 0.0;
    for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) acc += m(i, i);
    return acc;
}

double worst_eigen_residual(const SymMatrix& lhs, const SymMatrix& rhs, const EigPairs& pairs) {
    const std::size_t d = lhs.order();
    double worst = 0.0;
    std::vector<double> a(d);
    for (std::size_t j = 0; j < pairs.values.size(); ++j) {
        for (std::size_t i = 0; i < d; ++i) a[i] = pairs.vectors(i, j);
        const std::vector<double> la = multiply_vec(lhs, a);
        const std::vector<double> ra = multiply_vec(rhs, a);
        double acc = 0.0;
        for (std::size_t i = 0; i < d; ++i) {
            const double r = la[i] - pairs.values[j] * ra[i];
            acc += r * r;
        }
        worst = std::max(worst, std::sqrt(acc));
    }
    return worst;
}

}  // namespace

void DfsConfig::validate(std::size_t d) const {
    if (!(p > 0.0) || p > 2.0) throw InvalidConfig("p must be in (0, 2]");
    if (!(gamma > 0.0)) throw InvalidConfig("gamma must be positive");
    if (!(zeta > 0.0)) throw InvalidConfig("zeta must be positive");
    if (!(tol > 0.0)) throw InvalidConfig("tol must be positive");
    if (max_iter < 1) throw InvalidConfig("max_iter must be at least 1");
    if (l > d)
        throw InvalidConfig("l = " + std::to_string(l) + " exceeds feature count " +
                            std::to_string(d));
}

std::pair<std::vector<double>, double> row_norms_2p(const Matrix& m, double p) {
    if (!(p > 0.0)) throw InvalidConfig("row_norms_2p: p must be positive");
    std::vector<double> norms(m.rows());
    double power_sum = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        double sq = 0.0;
        for (std::size_t j = 0; j < m.cols(); ++j) sq += m(i, j) * m(i, j);
        norms[i] = std::sqrt(sq);
        power_sum += std::pow(norms[i], p);
    }
    return {std::move(norms), power_sum};
}

WeightDiag update_weights(const Matrix& a, double p, double zeta) {
    if (!(zeta > 0.0)) throw InvalidConfig("update_weights: zeta must be positive");
    WeightDiag w;
    w.diag.resize(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        double sq = zeta;
        for (std::size_t j = 0; j < a.cols(); ++j) sq += a(i, j) * a(i, j);
        w.diag[i] = 0.5 * p * std::pow(sq, 0.5 * p - 1.0);
    }
    return w;
}

double dfs_objective(const Matrix& a, const SymMatrix& sb, double gamma, double p, double zeta) {
    if (a.rows() != sb.order())
        throw DimensionMismatch("dfs_objective: a has " + std::to_string(a.rows()) +
                                " rows, sb has order " + std::to_string(sb.order()));
    double penalty = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        double sq = zeta;
        for (std::size_t j = 0; j < a.cols(); ++j) sq += a(i, j) * a(i, j);
        penalty += std::pow(sq, 0.5 * p);
    }
    return -trace_of(congruence(a, sb)) + gamma * penalty;
}

double divergence(const Matrix& a_prev, const Matrix& a_next) {
    if (a_prev.rows() != a_next.rows() || a_prev.cols() != a_next.cols())
        throw DimensionMismatch("divergence: shape mismatch");
    double acc = 0.0;
    for (std::size_t i = 0; i < a_prev.rows(); ++i) {
        double sq_prev = 0.0, sq_next = 0.0;
        for (std::size_t j = 0; j < a_prev.cols(); ++j) {
            sq_prev += a_prev(i, j) * a_prev(i, j);
            sq_next += a_next(i, j) * a_next(i, j);
        }
        acc += std::abs(std::sqrt(sq_next) - std::sqrt(sq_prev));
    }
    return acc;
}

DfsSolution solve(const ScatterTriple& scatter, const DfsConfig& cfg) {
    const std::size_t d = scatter.st.order();
    cfg.validate(d);
    const std::size_t c = scatter.class_counts.size();
    const std::size_t l = cfg.l != 0 ? cfg.l : std::max<std::size_t>(1, c - 1);
    if (l > d) throw InvalidConfig("l exceeds feature count");
    if (c >= 1 && l > c - 1)
        log::warn("solve: l = " + std::to_string(l) + " exceeds rank(Sb) <= " +
                  std::to_string(c - 1) + "; trailing eigenpairs may be noise-driven");

    const double alpha =
        cfg.alpha >= 0.0 ? cfg.alpha : 1e-6 * trace_of(scatter.st) / static_cast<double>(d);
    const SymMatrix st_reg = add_ridge(scatter.st, alpha);

    DfsSolution sol;
    sol.alpha_used = alpha;
    sol.l_used = l;

    std::vector<double> weights(d, 1.0);  // D_0 = I
    Matrix a_prev;
    double obj_prev = 0.0;

    for (std::size_t k = 0; k < cfg.max_iter; ++k) {
        const SymMatrix lhs = weighted_diag_minus(weights, cfg.gamma, scatter.sb);
        const EigPairs pairs = generalized_eig_smallest(lhs, st_reg, l);
        const Matrix& a = pairs.vectors;

        sol.constraint_dev_trace.push_back(
            max_abs_diff(congruence(a, st_reg), Matrix::identity(l)));
        sol.residual_trace.push_back(worst_eigen_residual(lhs, st_reg, pairs) /
                                     std::max(1.0, frobenius_norm(lhs)));

        const double obj = dfs_objective(a, scatter.sb, cfg.gamma, cfg.p, cfg.zeta);
        const auto [norms, power_sum] = row_norms_2p(a, cfg.p);
        sol.objective_trace.push_back(obj);
        sol.objective_raw_trace.push_back(-trace_of(congruence(a, scatter.sb)) +
                                          cfg.gamma * power_sum);
        sol.iterations = k + 1;

        bool converged = false;
        if (k > 0) {
            const double div = divergence(a_prev, a);
            sol.divergence_trace.push_back(div);
            converged = std::abs(obj - obj_prev) <= cfg.tol * std::max(1.0, std::abs(obj_prev)) &&
                        div <= cfg.tol * static_cast<double>(d);
        }

        a_prev = a;
        obj_prev = obj;
        if (converged) {
            sol.terminated_by = Termination::Converged;
            break;
        }
        weights = update_weights(a, cfg.p, cfg.zeta).diag;
    }

    sol.a_matrix = a_prev;
    sol.row_scores = row_norms_2p(sol.a_matrix, cfg.p).first;
    sol.ranking.resize(d);
    std::iota(sol.ranking.begin(), sol.ranking.end(), 0);
    std::stable_sort(sol.ranking.begin(), sol.ranking.end(), [&](std::size_t x, std::size_t y) {
        return sol.row_scores[x] > sol.row_scores[y];
    });
    return sol;
}

DfsSolution solve(const LabeledDataset& data, const DfsConfig& cfg) {
    return solve(compute_scatter(data), cfg);
}

ScalingCheck ldfs_objective_scaling_check(const Matrix& a, const SymMatrix& sb,
                                          const SymMatrix& sw, double gamma, double c_scale) {
    if (a.rows() != sb.order() || a.rows() != sw.order())
        throw DimensionMismatch("ldfs_objective_scaling_check: dimension mismatch");
    if (!(std::abs(c_scale) > 0.0) || std::abs(c_scale) >= 1.0)
        throw InvalidConfig("ldfs_objective_scaling_check: need 0 < |c| < 1");
    if (frobenius_norm(a) == 0.0) throw ZeroVector("ldfs_objective_scaling_check: a is zero");

    const std::size_t l = a.cols();
    const Matrix mw = congruence(a, sw);
    const Matrix mb = congruence(a, sb);

    SymMatrix mw_sym(l);
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = 0; j <= i; ++j)
            mw_sym.set(i, j, 0.5 * (mw(i, j) + mw(j, i)));

    Matrix lower;
    try {
        lower = cholesky(mw_sym);
    } catch (const NotPositiveDefinite&) {
        throw SingularWithinScatter("ldfs_objective_scaling_check: a^T sw a is not invertible");
    }

    // tr((a^T sw a)^-1 (a^T sb a)): scale-invariant, computed once.
    double ratio = 0.0;
    std::vector<double> col(l);
    for (std::size_t j = 0; j < l; ++j) {
        for (std::size_t i = 0; i < l; ++i) col[i] = mb(i, j);
        const std::vector<double> x = solve_lower_transposed(lower, solve_lower(lower, col));
        ratio += x[j];
    }

    double penalty = 0.0;  // ||a||_{inf,1}
    for (std::size_t i = 0; i < a.rows(); ++i) {
        double row_max = 0.0;
        for (std::size_t j = 0; j < l; ++j) row_max = std::max(row_max, std::abs(a(i, j)));
        penalty += row_max;
    }

    return {-ratio + gamma * penalty, -ratio + gamma * std::abs(c_scale) * penalty};
}

bool lemma1_inequality(const std::vector<double>& a, const std::vector<double>& a_k, double p) {
    if (!(p > 0.0) || p > 2.0) throw InvalidConfig("lemma1_inequality: p must be in (0, 2]");
    auto norm2 = [](const std::vector<double>& v) {
        double acc = 0.0;
        for (double x : v) acc += x * x;
        return std::sqrt(acc);
    };
    const double na = norm2(a), nk = norm2(a_k);
    if (na == 0.0 || nk == 0.0) throw ZeroVector("lemma1_inequality: zero vector");
    const double lhs = std::pow(na / nk, p) - 0.5 * p * (na / nk) * (na / nk);
    return lhs <= 1.0 - 0.5 * p + 1e-12;
}

}  // namespace dfs
