#pragma once

#include <string>
#include <vector>

#include "dfs/dataset.hpp"
#include "dfs/eval.hpp"
#include "dfs/solver.hpp"

namespace dfs {

// Dataset plus the label mapping (class id -> original label string, in
// order of first appearance) needed to make runs reproducible.
struct LoadResult {
    LabeledDataset data;
    std::vector<std::string> label_values;
};

// Dense CSV with a header row; `label_column` is a header name or a
// 0-based column index. Blank lines are ignored. Non-numeric or
// non-finite feature cells raise NonNumericValue with row/column.
LoadResult load_dense_csv(const std::string& path, const std::string& label_column);

// Sparse "label index:value" lines with 1-based, strictly ascending
// indices per line; absent entries densify to zero and d is the largest
// index seen.
LoadResult load_sparse_libsvm(const std::string& path);

// Writer matching load_dense_csv, full round-trip precision.
void write_dense_csv(const std::string& path, const LabeledDataset& data,
                     const std::vector<std::string>& label_values);

// Everything needed to reproduce a run; serialized next to each output.
struct RunManifest {
    std::string command;
    std::string input_path;
    std::string input_format;
    std::string label_column;
    std::vector<std::string> label_values;
    DfsConfig config;
    std::uint64_t seed = 0;
    std::vector<std::string> output_files;
    std::string tool_version;
};

void write_manifest_json(const std::string& path, const RunManifest& manifest);

// {feature_index, score} descending, plus the leading `top` indices.
void write_ranking_json(const std::string& path, const DfsSolution& solution, std::size_t top);

// CSV: iteration, objective_smoothed, objective_raw, divergence.
void write_traces_csv(const std::string& path, const DfsSolution& solution);

void write_eval_report_json(const std::string& path, const EvalReport& report);

// Plot-ready CSV: k, mean_accuracy, redundancy.
void write_curve_csv(const std::string& path, const EvalReport& report);

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace dfs
