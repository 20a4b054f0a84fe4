#include "dfs/eval.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <thread>

#include "dfs/metrics.hpp"
#include "dfs/rng.hpp"
#include "dfs/scatter.hpp"

namespace dfs {
namespace {

std::vector<std::size_t> rank_descending(const std::vector<double>& scores) {
    std::vector<std::size_t> order(scores.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });
    return order;
}

LabeledDataset take_rows(const LabeledDataset& data, const std::vector<std::size_t>& rows) {
    LabeledDataset out;
    out.features = Matrix(rows.size(), data.n_features());
    out.labels.resize(rows.size());
    out.feature_names = data.feature_names;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        out.labels[i] = data.labels[rows[i]];
        for (std::size_t j = 0; j < data.n_features(); ++j)
            out.features(i, j) = data.features(rows[i], j);
    }
    return out;
}

Matrix take_columns(const Matrix& m, const std::vector<std::size_t>& cols) {
    Matrix out(m.rows(), cols.size());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            out(i, j) = m(i, cols[j]);
    return out;
}

}  // namespace

std::vector<FoldSplit> kfold_split(std::size_t n, std::size_t k, std::uint64_t seed,
                                   const std::vector<int>& labels) {
    if (k < 2 || k > n)
        throw InvalidK("kfold_split: k = " + std::to_string(k) + " outside 2.." +
                       std::to_string(n));
    if (!labels.empty() && labels.size() != n)
        throw DimensionMismatch("kfold_split: label count mismatch");

    Rng rng(seed);
    std::vector<std::vector<std::size_t>> test_sets(k);

    if (labels.empty()) {
        std::vector<std::size_t> order(n);
        std::iota(order.begin(), order.end(), 0);
        rng.shuffle(order);
        for (std::size_t i = 0; i < n; ++i) test_sets[i % k].push_back(order[i]);
    } else {
        // stratified: deal each class round-robin, carrying the fold
        // cursor across classes so overall sizes stay within 1
        const int top = *std::max_element(labels.begin(), labels.end());
        std::size_t cursor = 0;
        for (int cls = 0; cls <= top; ++cls) {
            std::vector<std::size_t> members;
            for (std::size_t i = 0; i < n; ++i)
                if (labels[i] == cls) members.push_back(i);
            rng.shuffle(members);
            for (std::size_t t = 0; t < members.size(); ++t)
                test_sets[(cursor + t) % k].push_back(members[t]);
            cursor = (cursor + members.size()) % k;
        }
    }

    std::vector<FoldSplit> out(k);
    std::vector<bool> in_test(n);
    for (std::size_t f = 0; f < k; ++f) {
        std::sort(test_sets[f].begin(), test_sets[f].end());
        out[f].test_idx = test_sets[f];
        std::fill(in_test.begin(), in_test.end(), false);
        for (std::size_t i : test_sets[f]) in_test[i] = true;
        for (std::size_t i = 0; i < n; ++i)
            if (!in_test[i]) out[f].train_idx.push_back(i);
    }
    return out;
}

std::vector<int> classify_nearest_centroid(const LabeledDataset& train,
                                           const Matrix& test_features) {
    train.validate();
    if (test_features.cols() != train.n_features())
        throw DimensionMismatch("classify_nearest_centroid: feature count mismatch");

    const std::size_t c = train.n_classes(), d = train.n_features();
    Matrix means(c, d);
    std::vector<std::size_t> counts(c, 0);
    for (std::size_t i = 0; i < train.n_samples(); ++i) {
        const std::size_t k = static_cast<std::size_t>(train.labels[i]);
        ++counts[k];
        for (std::size_t j = 0; j < d; ++j) means(k, j) += train.features(i, j);
    }
    for (std::size_t k = 0; k < c; ++k)
        for (std::size_t j = 0; j < d; ++j)
            means(k, j) /= static_cast<double>(counts[k]);

    std::vector<int> predicted(test_features.rows());
    for (std::size_t i = 0; i < test_features.rows(); ++i) {
        int best = 0;
        double best_dist = std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k < c; ++k) {
            double dist = 0.0;
            for (std::size_t j = 0; j < d; ++j) {
                const double dev = test_features(i, j) - means(k, j);
                dist += dev * dev;
            }
            if (dist < best_dist) {  // strict: ties keep the lower class id
                best_dist = dist;
                best = static_cast<int>(k);
            }
        }
        predicted[i] = best;
    }
    return predicted;
}

Selector make_dfs_selector(const DfsConfig& cfg) {
    return [cfg](const LabeledDataset& data) { return solve(data, cfg).ranking; };
}

Selector make_fisher_selector() {
    return [](const LabeledDataset& data) {
        const ScatterTriple sc = compute_scatter(data);
        std::vector<double> ratios(data.n_features());
        for (std::size_t j = 0; j < ratios.size(); ++j) {
            const double sw = sc.sw.at(j, j);
            ratios[j] = sw > 0.0 ? sc.sb.at(j, j) / sw
                                 : (sc.sb.at(j, j) > 0.0 ? std::numeric_limits<double>::max() : 0.0);
        }
        return rank_descending(ratios);
    };
}

Selector make_random_selector(std::uint64_t seed) {
    return [seed](const LabeledDataset& data) {
        Rng rng(seed);
        std::vector<std::size_t> order(data.n_features());
        std::iota(order.begin(), order.end(), 0);
        rng.shuffle(order);
        return order;
    };
}

std::vector<std::size_t> default_k_grid(std::size_t d) {
    std::vector<std::size_t> grid;
    for (std::size_t k = 10; k <= 100 && k <= d; k += 5) grid.push_back(k);
    if (grid.empty()) grid.push_back(d);
    return grid;
}

EvalReport run_curve(const LabeledDataset& data, const Selector& selector,
                     const std::string& method_name, const std::vector<std::size_t>& k_grid,
                     std::size_t folds, std::uint64_t seed, std::size_t jobs, bool abs_corr) {
    data.validate();
    if (k_grid.empty()) throw InvalidSpec("run_curve: empty k grid");
    for (std::size_t k : k_grid)
        if (k < 1 || k > data.n_features())
            throw InvalidSpec("run_curve: k = " + std::to_string(k) + " outside 1.." +
                              std::to_string(data.n_features()));

    const auto splits = kfold_split(data.n_samples(), folds, seed, data.labels);
    const LabeledDataset full_std = standardize(data).first;

    EvalReport report;
    report.k_grid = k_grid;
    report.method_name = method_name;
    report.folds = folds;
    report.seed = seed;
    report.abs_corr = abs_corr;
    report.fold_accuracy.assign(k_grid.size(), std::vector<double>(folds, 0.0));
    report.mean_accuracy.assign(k_grid.size(), 0.0);
    report.redundancy.assign(k_grid.size(), 0.0);

    std::vector<std::vector<double>> fold_redundancy(k_grid.size(),
                                                     std::vector<double>(folds, 0.0));

    auto run_fold = [&](std::size_t f) {
        const LabeledDataset train_raw = take_rows(data, splits[f].train_idx);
        const auto [train_std, params] = standardize(train_raw);
        const std::vector<std::size_t> ranking = selector(train_std);

        const LabeledDataset test_raw = take_rows(data, splits[f].test_idx);
        const Matrix test_std = apply_standardization(test_raw.features, params);

        for (std::size_t ki = 0; ki < k_grid.size(); ++ki) {
            const std::size_t k = k_grid[ki];
            std::vector<std::size_t> selected(ranking.begin(), ranking.begin() + k);

            LabeledDataset train_sel = train_std;
            train_sel.features = take_columns(train_std.features, selected);
            train_sel.feature_names.clear();
            const Matrix test_sel = take_columns(test_std, selected);

            const std::vector<int> predicted = classify_nearest_centroid(train_sel, test_sel);
            std::size_t hits = 0;
            for (std::size_t i = 0; i < predicted.size(); ++i)
                if (predicted[i] == test_raw.labels[i]) ++hits;
            report.fold_accuracy[ki][f] =
                static_cast<double>(hits) / static_cast<double>(predicted.size());

            if (k >= 2)
                fold_redundancy[ki][f] =
                    redundancy_rate(full_std, FeatureSubset::of(selected), abs_corr);
        }
    };

    if (jobs <= 1) {
        for (std::size_t f = 0; f < folds; ++f) run_fold(f);
    } else {
        std::vector<std::thread> workers;
        std::atomic<std::size_t> next{0};
        const std::size_t pool = std::min(jobs, folds);
        for (std::size_t w = 0; w < pool; ++w)
            workers.emplace_back([&] {
                for (std::size_t f = next.fetch_add(1); f < folds; f = next.fetch_add(1))
                    run_fold(f);
            });
        for (auto& t : workers) t.join();
    }

    for (std::size_t ki = 0; ki < k_grid.size(); ++ki) {
        double acc = 0.0, red = 0.0;
        for (std::size_t f = 0; f < folds; ++f) {
            acc += report.fold_accuracy[ki][f];
            red += fold_redundancy[ki][f];
        }
        report.mean_accuracy[ki] = acc / static_cast<double>(folds);
        report.redundancy[ki] = red / static_cast<double>(folds);
    }
    return report;
}

}  // namespace dfs
