#include "dfs/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace dfs {
namespace {

constexpr int kMaxJacobiSweeps = 100;
constexpr double kJacobiTol = 1e-12;
constexpr double kTieRelTol = 1e-10;

// Index of the largest-magnitude component, smallest index on ties.
std::size_t anchor_index(const Matrix& vectors, std::size_t col) {
    std::size_t best = 0;
    double best_mag = std::abs(vectors(0, col));
    for (std::size_t i = 1; i < vectors.rows(); ++i) {
        const double mag = std::abs(vectors(i, col));
        if (mag > best_mag) {
            best_mag = mag;
            best = i;
        }
    }
    return best;
}

bool nearly_equal(double a, double b) {
    return std::abs(a - b) <= kTieRelTol * std::max({1.0, std::abs(a), std::abs(b)});
}

// Sorts pairs ascending by value, resolves ties by anchor index, and
// flips signs so each anchor component is positive.
EigPairs normalize_pairs(const std::vector<double>& values, const Matrix& vectors) {
    const std::size_t d = vectors.rows(), l = values.size();
    std::vector<std::size_t> anchors(l);
    for (std::size_t j = 0; j < l; ++j) anchors[j] = anchor_index(vectors, j);

    std::vector<std::size_t> order(l);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (!nearly_equal(values[a], values[b])) return values[a] < values[b];
        return anchors[a] < anchors[b];
    });

    EigPairs out;
    out.values.resize(l);
    out.vectors = Matrix(d, l);
    for (std::size_t j = 0; j < l; ++j) {
        const std::size_t src = order[j];
        out.values[j] = values[src];
        const double sign = vectors(anchors[src], src) < 0.0 ? -1.0 : 1.0;
        for (std::size_t i = 0; i < d; ++i)
            out.vectors(i, j) = sign * vectors(i, src);
    }
    return out;
}

double offdiag_norm(const Matrix& m) {
    double acc = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (i != j) acc += m(i, j) * m(i, j);
    return std::sqrt(acc);
}

}  // namespace

Matrix cholesky(const SymMatrix& m) {
    const std::size_t n = m.order();
    Matrix lower(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        double diag = m.at(j, j);
        for (std::size_t k = 0; k < j; ++k) diag -= lower(j, k) * lower(j, k);
        if (!(diag > 0.0) || !std::isfinite(diag))
            throw NotPositiveDefinite("cholesky: pivot " + std::to_string(diag) +
                                      " at column " + std::to_string(j) +
                                      "; increase the ridge alpha");
        const double ljj = std::sqrt(diag);
        lower(j, j) = ljj;
        for (std::size_t i = j + 1; i < n; ++i) {
            double acc = m.at(i, j);
            for (std::size_t k = 0; k < j; ++k) acc -= lower(i, k) * lower(j, k);
            lower(i, j) = acc / ljj;
        }
    }
    return lower;
}

std::vector<double> solve_lower(const Matrix& lower, const std::vector<double>& b) {
    const std::size_t n = lower.rows();
    if (b.size() != n) throw DimensionMismatch("solve_lower: size mismatch");
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i) {
        double acc = b[i];
        for (std::size_t k = 0; k < i; ++k) acc -= lower(i, k) * x[k];
        x[i] = acc / lower(i, i);
    }
    return x;
}

std::vector<double> solve_lower_transposed(const Matrix& lower, const std::vector<double>& b) {
    const std::size_t n = lower.rows();
    if (b.size() != n) throw DimensionMismatch("solve_lower_transposed: size mismatch");
    std::vector<double> x(n);
    for (std::size_t ii = n; ii-- > 0;) {
        double acc = b[ii];
        for (std::size_t k = ii + 1; k < n; ++k) acc -= lower(k, ii) * x[k];
        x[ii] = acc / lower(ii, ii);
    }
    return x;
}

EigPairs jacobi_eigensolve(const Matrix& symmetric) {
    if (symmetric.rows() != symmetric.cols())
        throw DimensionMismatch("jacobi_eigensolve: matrix not square");
    const std::size_t n = symmetric.rows();
    Matrix a = symmetric;
    Matrix v = Matrix::identity(n);
    const double stop = kJacobiTol * std::max(frobenius_norm(a), 1e-300);

    for (int sweep = 0; sweep < kMaxJacobiSweeps; ++sweep) {
        if (offdiag_norm(a) <= stop) break;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                // kill residual asymmetry from the two half-updates
                a(p, q) = a(q, p) = 0.5 * (a(p, q) + a(q, p));

                for (std::size_t k = 0; k < n; ++k) {
                    const double vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<double> values(n);
    for (std::size_t i = 0; i < n; ++i) values[i] = a(i, i);
    return normalize_pairs(values, v);
}

EigPairs generalized_eig_smallest(const SymMatrix& lhs, const SymMatrix& rhs, std::size_t l) {
    const std::size_t d = lhs.order();
    if (rhs.order() != d)
        throw DimensionMismatch("generalized_eig_smallest: lhs order " + std::to_string(d) +
                                " vs rhs order " + std::to_string(rhs.order()));
    if (l < 1 || l > d)
        throw DimensionMismatch("generalized_eig_smallest: l = " + std::to_string(l) +
                                " out of range 1.." + std::to_string(d));

    const Matrix lower = cholesky(rhs);

    // C = L^-1 * lhs * L^-T, built column by column through triangular solves.
    Matrix w(d, d);
    std::vector<double> col(d);
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t i = 0; i < d; ++i) col[i] = lhs.at(i, j);
        const std::vector<double> x = solve_lower(lower, col);
        for (std::size_t i = 0; i < d; ++i) w(i, j) = x[i];
    }
    Matrix c(d, d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) col[j] = w(i, j);
        const std::vector<double> x = solve_lower(lower, col);
        for (std::size_t j = 0; j < d; ++j) c(i, j) = x[j];
    }
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
            c(i, j) = c(j, i) = 0.5 * (c(i, j) + c(j, i));

    const EigPairs reduced = jacobi_eigensolve(c);

    // Back-transform the l smallest: a = L^-T y, which keeps A^T rhs A = I.
    std::vector<double> values(reduced.values.begin(), reduced.values.begin() + l);
    Matrix vectors(d, l);
    std::vector<double> y(d);
    for (std::size_t j = 0; j < l; ++j) {
        for (std::size_t i = 0; i < d; ++i) y[i] = reduced.vectors(i, j);
        const std::vector<double> a = solve_lower_transposed(lower, y);
        for (std::size_t i = 0; i < d; ++i) vectors(i, j) = a[i];
    }
    return normalize_pairs(values, vectors);
}

}  // namespace dfs
