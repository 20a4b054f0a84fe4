#pragma once

#include "dfs/dataset.hpp"
#include "dfs/matrix.hpp"

namespace dfs {

// The three LDA scatter matrices plus the class statistics they were
// built from. st = sb + sw holds entrywise up to round-off.
struct ScatterTriple {
    SymMatrix st;  // total scatter
    SymMatrix sb;  // between-class
    SymMatrix sw;  // within-class
    Matrix class_means;              // c x d
    std::vector<double> total_mean;  // length d
    std::vector<std::size_t> class_counts;
};

// sb = sum_k n_k (mu_k - mu)(mu_k - mu)^T
// sw = sum_k sum_i (x_i - mu_k)(x_i - mu_k)^T
// st = sum_i (x_i - mu)(x_i - mu)^T
// Summation order is fixed (ascending class, then ascending sample index)
// so repeated calls are bit-identical.
ScatterTriple compute_scatter(const LabeledDataset& data);

}  // namespace dfs
