#include "dfs/scatter.hpp"

#include <string>

namespace dfs {
namespace {

void add_outer(SymMatrix& target, const std::vector<double>& v, double weight) {
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j <= i; ++j)
            target.add(i, j, weight * v[i] * v[j]);
}

}  // namespace

ScatterTriple compute_scatter(const LabeledDataset& data) {
    data.validate();
    const std::size_t n = data.n_samples();
    const std::size_t d = data.n_features();
    const std::size_t c = data.n_classes();

    ScatterTriple out;
    out.class_counts.assign(c, 0);
    out.total_mean.assign(d, 0.0);
    out.class_means = Matrix(c, d);

    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t k = static_cast<std::size_t>(data.labels[i]);
        ++out.class_counts[k];
        for (std::size_t j = 0; j < d; ++j) {
            out.class_means(k, j) += data.features(i, j);
            out.total_mean[j] += data.features(i, j);
        }
    }
    for (std::size_t j = 0; j < d; ++j) out.total_mean[j] /= static_cast<double>(n);
    for (std::size_t k = 0; k < c; ++k)
        for (std::size_t j = 0; j < d; ++j)
            out.class_means(k, j) /= static_cast<double>(out.class_counts[k]);

    out.st = SymMatrix(d);
    out.sb = SymMatrix(d);
    out.sw = SymMatrix(d);
    std::vector<double> dev(d);

    // sb: one weighted outer product per class, ascending class order.
    for (std::size_t k = 0; k < c; ++k) {
        for (std::size_t j = 0; j < d; ++j) dev[j] = out.class_means(k, j) - out.total_mean[j];
        add_outer(out.sb, dev, static_cast<double>(out.class_counts[k]));
    }

    // sw: ascending class, then ascending sample index within the class.
    for (std::size_t k = 0; k < c; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            if (static_cast<std::size_t>(data.labels[i]) != k) continue;
            for (std::size_t j = 0; j < d; ++j) dev[j] = data.features(i, j) - out.class_means(k, j);
            add_outer(out.sw, dev, 1.0);
        }
    }

    // st summed directly, not as sb + sw, so the identity stays a check.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < d; ++j) dev[j] = data.features(i, j) - out.total_mean[j];
        add_outer(out.st, dev, 1.0);
    }

    const double scale = std::max(1.0, frobenius_norm(out.st));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            const double gap = out.st.at(i, j) - out.sb.at(i, j) - out.sw.at(i, j);
            if (std::abs(gap) > 1e-8 * scale)
                throw Error("compute_scatter: st != sb + sw beyond tolerance (gap " +
                            std::to_string(gap) + ")");
        }
    return out;
}

}  // namespace dfs
