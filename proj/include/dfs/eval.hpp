#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "dfs/dataset.hpp"
#include "dfs/solver.hpp"

namespace dfs {

struct FoldSplit {
    std::vector<std::size_t> train_idx;
    std::vector<std::size_t> test_idx;
};

// Disjoint folds covering 0..n-1, sizes within 1 of each other. With
// labels supplied the split is stratified per class.
std::vector<FoldSplit> kfold_split(std::size_t n, std::size_t k, std::uint64_t seed,
                                   const std::vector<int>& labels = {});

// Each test row gets the class of the nearest train class mean in
// Euclidean distance; ties go to the lower class id.
std::vector<int> classify_nearest_centroid(const LabeledDataset& train,
                                           const Matrix& test_features);

// A selector maps a (training) dataset to a full feature ranking,
// most important first.
using Selector = std::function<std::vector<std::size_t>(const LabeledDataset&)>;

Selector make_dfs_selector(const DfsConfig& cfg);
Selector make_fisher_selector();           // 1-D Fisher ratio ranking
Selector make_random_selector(std::uint64_t seed);

struct EvalReport {
    std::vector<std::size_t> k_grid;
    std::vector<std::vector<double>> fold_accuracy;  // [k][fold]
    std::vector<double> mean_accuracy;               // [k]
    std::vector<double> redundancy;                  // [k], 0 for k < 2
    std::string method_name;
    std::string config_echo;
    std::size_t folds = 0;
    std::uint64_t seed = 0;
    bool abs_corr = false;
};

// Stratified k-fold protocol: per fold, standardization and the selector
// are fit on the training split only; the top-k columns feed a
// nearest-centroid classifier on the held-out split. Redundancy is the
// fold-mean redundancy rate of each fold's selection, measured on the
// full standardized dataset. Folds run in parallel when jobs > 1; the
// report is assembled by fold index so results do not depend on jobs.
EvalReport run_curve(const LabeledDataset& data, const Selector& selector,
                     const std::string& method_name, const std::vector<std::size_t>& k_grid,
                     std::size_t folds, std::uint64_t seed, std::size_t jobs = 1,
                     bool abs_corr = false);

// Default paper-style grid: 10..100 step 5, clipped to d.
std::vector<std::size_t> default_k_grid(std::size_t d);

}  // namespace dfs
