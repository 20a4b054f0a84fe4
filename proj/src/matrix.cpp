#include "dfs/matrix.hpp"

#include <cmath>
#include <string>

namespace dfs {

Matrix multiply(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows())
        throw DimensionMismatch("multiply: " + std::to_string(a.cols()) + " vs " +
                                std::to_string(b.rows()));
    Matrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                out(i, j) += aik * b(k, j);
        }
    return out;
}

Matrix transpose(const Matrix& m) {
    Matrix out(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out(j, i) = m(i, j);
    return out;
}

Matrix congruence(const Matrix& a, const SymMatrix& s) {
    if (a.rows() != s.order())
        throw DimensionMismatch("congruence: matrix has " + std::to_string(a.rows()) +
                                " rows, symmetric operand has order " +
                                std::to_string(s.order()));
    const std::size_t d = a.rows(), l = a.cols();
    // t = s * a
    Matrix t(d, l);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < d; ++k) {
            const double sik = s.at(i, k);
            if (sik == 0.0) continue;
            for (std::size_t j = 0; j < l; ++j)
                t(i, j) += sik * a(k, j);
        }
    Matrix out(l, l);
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = 0; j < l; ++j) {
            double acc = 0.0;
            for (std::size_t k = 0; k < d; ++k) acc += a(k, i) * t(k, j);
            out(i, j) = acc;
        }
    return out;
}

std::vector<double> multiply_vec(const SymMatrix& s, const std::vector<double>& v) {
    if (v.size() != s.order())
        throw DimensionMismatch("multiply_vec: size mismatch");
    std::vector<double> out(v.size(), 0.0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < v.size(); ++j) acc += s.at(i, j) * v[j];
        out[i] = acc;
    }
    return out;
}

double frobenius_norm(const Matrix& m) {
    double acc = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            acc += m(i, j) * m(i, j);
    return std::sqrt(acc);
}

double frobenius_norm(const SymMatrix& m) {
    double acc = 0.0;
    for (std::size_t i = 0; i < m.order(); ++i)
        for (std::size_t j = 0; j < m.order(); ++j) {
            const double v = m.at(i, j);
            acc += v * v;
        }
    return std::sqrt(acc);
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatch("max_abs_diff: shape mismatch");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
    return worst;
}

bool all_finite(const Matrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!std::isfinite(m(i, j))) return false;
    return true;
}

bool all_finite(const SymMatrix& m) {
    for (std::size_t i = 0; i < m.order(); ++i)
        for (std::size_t j = 0; j <= i; ++j)
            if (!std::isfinite(m.at(i, j))) return false;
    return true;
}

SymMatrix add_ridge(const SymMatrix& s, double shift) {
    SymMatrix out = s;
    for (std::size_t i = 0; i < s.order(); ++i)
        out.add(i, i, shift);
    return out;
}

SymMatrix weighted_diag_minus(const std::vector<double>& w, double gamma, const SymMatrix& s) {
    if (w.size() != s.order())
        throw DimensionMismatch("weighted_diag_minus: size mismatch");
    SymMatrix out(s.order());
    for (std::size_t i = 0; i < s.order(); ++i)
        for (std::size_t j = 0; j <= i; ++j)
            out.set(i, j, (i == j ? gamma * w[i] : 0.0) - s.at(i, j));
    return out;
}

}  // namespace dfs
