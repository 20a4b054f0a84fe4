#pragma once

#include <cstddef>
#include <vector>

#include "dfs/errors.hpp"

namespace dfs {

// Dense row-major matrix of doubles. Small and boring on purpose: the
// solver only needs products, transposes and norms on matrices up to a
// few thousand rows.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<double>& data() const { return data_; }

    bool operator==(const Matrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

// Symmetric matrix storing the lower triangle only, so symmetry holds
// exactly by construction.
class SymMatrix {
public:
    SymMatrix() = default;
    explicit SymMatrix(std::size_t order)
        : order_(order), tri_(order * (order + 1) / 2, 0.0) {}

    static SymMatrix identity(std::size_t n) {
        SymMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1.0);
        return m;
    }

    std::size_t order() const { return order_; }

    double at(std::size_t i, std::size_t j) const {
        return i >= j ? tri_[idx(i, j)] : tri_[idx(j, i)];
    }
    void set(std::size_t i, std::size_t j, double v) {
        if (i >= j) tri_[idx(i, j)] = v; else tri_[idx(j, i)] = v;
    }
    void add(std::size_t i, std::size_t j, double v) {
        if (i >= j) tri_[idx(i, j)] += v; else tri_[idx(j, i)] += v;
    }

    Matrix to_dense() const {
        Matrix m(order_, order_);
        for (std::size_t i = 0; i < order_; ++i)
            for (std::size_t j = 0; j <= i; ++j)
                m(i, j) = m(j, i) = tri_[idx(i, j)];
        return m;
    }

    bool operator==(const SymMatrix& other) const = default;

private:
    static std::size_t idx(std::size_t i, std::size_t j) { return i * (i + 1) / 2 + j; }

    std::size_t order_ = 0;
    std::vector<double> tri_;
};

Matrix multiply(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& m);
// a^T * s * a for symmetric s; result is symmetric by construction.
Matrix congruence(const Matrix& a, const SymMatrix& s);
std::vector<double> multiply_vec(const SymMatrix& s, const std::vector<double>& v);
double frobenius_norm(const Matrix& m);
double frobenius_norm(const SymMatrix& m);
double max_abs_diff(const Matrix& a, const Matrix& b);
bool all_finite(const Matrix& m);
bool all_finite(const SymMatrix& m);

// s + shift * I
SymMatrix add_ridge(const SymMatrix& s, double shift);
// gamma * diag(w) - s
SymMatrix weighted_diag_minus(const std::vector<double>& w, double gamma, const SymMatrix& s);

}  // namespace dfs
