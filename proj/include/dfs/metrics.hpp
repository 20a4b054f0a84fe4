#pragma once

#include <cstddef>
#include <vector>

#include "dfs/dataset.hpp"

namespace dfs {

// A set of selected feature ids, kept sorted and distinct.
struct FeatureSubset {
    std::vector<std::size_t> indices;

    static FeatureSubset of(std::vector<std::size_t> ids);
    std::size_t size() const { return indices.size(); }
};

// Standard Pearson coefficient; throws ZeroVariance when either input is
// constant.
double pearson(const std::vector<double>& x, const std::vector<double>& y);

// Mean pairwise feature correlation over the subset, each unordered pair
// counted once but normalized by |F|(|F|-1) (so duplicated pairs top out
// at 0.5). With abs_corr, |corr| is averaged instead: negatively
// correlated features are redundant too.
double redundancy_rate(const LabeledDataset& data, const FeatureSubset& subset,
                       bool abs_corr = false);

}  // namespace dfs
