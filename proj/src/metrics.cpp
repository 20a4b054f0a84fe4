#include "dfs/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace dfs {

FeatureSubset FeatureSubset::of(std::vector<std::size_t> ids) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return FeatureSubset{std::move(ids)};
}

double pearson(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.empty())
        throw DimensionMismatch("pearson: length mismatch");
    const double n = static_cast<double>(x.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, syy = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = x[i] - mx, dy = y[i] - my;
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }
    if (sxx <= 0.0 || syy <= 0.0) throw ZeroVariance("pearson: constant input vector");
    return sxy / std::sqrt(sxx * syy);
}

double redundancy_rate(const LabeledDataset& data, const FeatureSubset& subset, bool abs_corr) {
    if (subset.size() < 2) throw InvalidSpec("redundancy_rate: need at least 2 features");
    const std::size_t n = data.n_samples(), d = data.n_features();
    for (std::size_t id : subset.indices)
        if (id >= d) throw InvalidSpec("redundancy_rate: feature id out of range");

    std::vector<std::vector<double>> cols(subset.size(), std::vector<double>(n));
    for (std::size_t s = 0; s < subset.size(); ++s)
        for (std::size_t i = 0; i < n; ++i)
            cols[s][i] = data.features(i, subset.indices[s]);

    double acc = 0.0;
    for (std::size_t i = 1; i < subset.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            double corr;
            try {
                corr = pearson(cols[i], cols[j]);
            } catch (const ZeroVariance&) {
                // name the offending column, not the pair
                std::size_t bad = subset.indices[i];
                double sq = 0.0, mean = 0.0;
                for (double v : cols[i]) mean += v;
                mean /= static_cast<double>(n);
                for (double v : cols[i]) sq += (v - mean) * (v - mean);
                if (sq > 0.0) bad = subset.indices[j];
                throw ConstantFeature(bad, "redundancy_rate: feature " + std::to_string(bad) +
                                               " has zero variance");
            }
            acc += abs_corr ? std::abs(corr) : corr;
        }
    }
    const double f = static_cast<double>(subset.size());
    return acc / (f * (f - 1.0));
}

}  // namespace dfs
