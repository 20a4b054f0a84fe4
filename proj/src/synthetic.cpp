#include "dfs/synthetic.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "dfs/rng.hpp"

namespace dfs {

void SyntheticSpec::validate() const {
    if (c < 2) throw InvalidSpec("synthetic: need at least 2 classes");
    if (n < 2 * c) throw InvalidSpec("synthetic: need at least 2 samples per class");
    if (d < 1) throw InvalidSpec("synthetic: need at least 1 feature");
    if (n_informative + n_redundant > d)
        throw InvalidSpec("synthetic: informative + redundant exceeds d");
    if (n_redundant > 0 && n_informative == 0)
        throw InvalidSpec("synthetic: redundant copies need an informative source");
    if (!(noise_sigma > 0.0)) throw InvalidSpec("synthetic: noise_sigma must be positive");
    if (!(duplicate_rho > 0.0) || duplicate_rho > 1.0)
        throw InvalidSpec("synthetic: duplicate_rho must be in (0, 1]");
}

SyntheticResult generate_synthetic(const SyntheticSpec& spec) {
    spec.validate();
    Rng rng(spec.seed);

    SyntheticResult out;
    out.data.features = Matrix(spec.n, spec.d);
    out.data.labels.resize(spec.n);
    for (std::size_t i = 0; i < spec.n; ++i)
        out.data.labels[i] = static_cast<int>(i % spec.c);

    const double separation = 3.0 * spec.noise_sigma;

    // informative columns, one at a time so the draw order is pinned
    std::vector<std::size_t> levels(spec.c);
    for (std::size_t j = 0; j < spec.n_informative; ++j) {
        std::iota(levels.begin(), levels.end(), 0);
        rng.shuffle(levels);
        for (std::size_t i = 0; i < spec.n; ++i) {
            const std::size_t k = static_cast<std::size_t>(out.data.labels[i]);
            out.data.features(i, j) =
                separation * static_cast<double>(levels[k]) + spec.noise_sigma * rng.normal();
        }
    }

    // redundant copies: rho * source + noise scaled for the target correlation
    for (std::size_t r = 0; r < spec.n_redundant; ++r) {
        const std::size_t j = spec.n_informative + r;
        const std::size_t src = r % spec.n_informative;
        double mean = 0.0;
        for (std::size_t i = 0; i < spec.n; ++i) mean += out.data.features(i, src);
        mean /= static_cast<double>(spec.n);
        double var = 0.0;
        for (std::size_t i = 0; i < spec.n; ++i) {
            const double dev = out.data.features(i, src) - mean;
            var += dev * dev;
        }
        var /= static_cast<double>(spec.n);
        const double noise_sd =
            std::sqrt(var * (1.0 - spec.duplicate_rho * spec.duplicate_rho));
        for (std::size_t i = 0; i < spec.n; ++i)
            out.data.features(i, j) =
                spec.duplicate_rho * out.data.features(i, src) + noise_sd * rng.normal();
    }

    for (std::size_t j = spec.n_informative + spec.n_redundant; j < spec.d; ++j)
        for (std::size_t i = 0; i < spec.n; ++i)
            out.data.features(i, j) = rng.normal();

    std::vector<std::size_t> truth(spec.n_informative);
    std::iota(truth.begin(), truth.end(), 0);
    out.ground_truth = FeatureSubset::of(std::move(truth));
    out.data.validate();
    return out;
}

}  // namespace dfs
