#pragma once

#include <cstdint>

#include "dfs/dataset.hpp"
#include "dfs/metrics.hpp"

namespace dfs {

// Planted-structure generator spec. Features are laid out as
// [0, n_informative) informative, then n_redundant noisy copies of
// informative columns, then pure-noise columns. The same seed always
// yields bit-identical data.
struct SyntheticSpec {
    std::size_t n = 200;
    std::size_t d = 20;
    std::size_t c = 2;
    std::size_t n_informative = 2;
    std::size_t n_redundant = 0;
    double noise_sigma = 1.0;
    double duplicate_rho = 0.95;  // target correlation of redundant copies
    std::uint64_t seed = 0;

    void validate() const;
};

struct SyntheticResult {
    LabeledDataset data;
    FeatureSubset ground_truth;  // the planted informative set
};

// Informative columns get class-dependent means separated by >= 2 sigma
// between adjacent levels, with a per-feature permutation of the level
// assignment so informative columns are not mutual copies. Redundant
// columns are rho * source + Gaussian noise sized to hit the target
// correlation. Remaining columns are unit Gaussian noise.
SyntheticResult generate_synthetic(const SyntheticSpec& spec);

}  // namespace dfs
