#include "dfs/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace dfs {
namespace {

using nlohmann::json;

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream stream(line);
    while (std::getline(stream, field, sep)) out.push_back(field);
    if (!line.empty() && line.back() == sep) out.push_back("");
    return out;
}

bool parse_double(const std::string& text, double& out) {
    const std::string t = trim(text);
    if (t.empty()) return false;
    const char* first = t.data();
    const char* last = t.data() + t.size();
    const auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last;
}

std::string format_double(double v) {
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

int map_label(const std::string& value, std::vector<std::string>& label_values) {
    const auto it = std::find(label_values.begin(), label_values.end(), value);
    if (it != label_values.end())
        return static_cast<int>(it - label_values.begin());
    label_values.push_back(value);
    return static_cast<int>(label_values.size()) - 1;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open " + path + " for writing");
    return out;
}

json config_to_json(const DfsConfig& cfg) {
    return json{{"gamma", cfg.gamma}, {"p", cfg.p},       {"l", cfg.l},
                {"alpha", cfg.alpha}, {"zeta", cfg.zeta}, {"tol", cfg.tol},
                {"max_iter", cfg.max_iter}};
}

}  // namespace

LoadResult load_dense_csv(const std::string& path, const std::string& label_column) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, 0, "cannot open " + path);

    std::string line;
    std::size_t line_no = 0;
    std::vector<std::string> header;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        header = split(line, ',');
        for (auto& h : header) h = trim(h);
        break;
    }
    if (header.empty()) throw ParseError(line_no, 0, path + ": no header row");

    std::size_t label_idx = header.size();
    for (std::size_t j = 0; j < header.size(); ++j)
        if (header[j] == label_column) label_idx = j;
    if (label_idx == header.size()) {
        std::size_t parsed = 0;
        const auto [ptr, ec] = std::from_chars(
            label_column.data(), label_column.data() + label_column.size(), parsed);
        if (ec == std::errc{} && ptr == label_column.data() + label_column.size() &&
            parsed < header.size())
            label_idx = parsed;
        else
            throw MissingLabelColumn(path + ": no column named '" + label_column + "'");
    }

    LoadResult result;
    for (std::size_t j = 0; j < header.size(); ++j)
        if (j != label_idx) result.data.feature_names.push_back(header[j]);

    std::vector<std::vector<double>> rows;
    std::vector<int> labels;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        const std::vector<std::string> fields = split(line, ',');
        if (fields.size() != header.size())
            throw ParseError(line_no, fields.size(),
                             path + ": line " + std::to_string(line_no) + " has " +
                                 std::to_string(fields.size()) + " fields, expected " +
                                 std::to_string(header.size()));
        std::vector<double> row;
        row.reserve(header.size() - 1);
        for (std::size_t j = 0; j < fields.size(); ++j) {
            if (j == label_idx) continue;
            double value = 0.0;
            if (!parse_double(fields[j], value) || !std::isfinite(value))
                throw NonNumericValue(line_no, j,
                                      path + ": non-numeric value '" + trim(fields[j]) +
                                          "' at line " + std::to_string(line_no) + ", column " +
                                          std::to_string(j) + " ('" + header[j] + "')");
            row.push_back(value);
        }
        labels.push_back(map_label(trim(fields[label_idx]), result.label_values));
        rows.push_back(std::move(row));
    }

    const std::size_t n = rows.size();
    const std::size_t d = header.size() - 1;
    result.data.features = Matrix(n, d);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < d; ++j)
            result.data.features(i, j) = rows[i][j];
    result.data.labels = std::move(labels);
    result.data.validate();
    return result;
}

LoadResult load_sparse_libsvm(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, 0, "cannot open " + path);

    LoadResult result;
    std::vector<std::vector<std::pair<std::size_t, double>>> rows;
    std::vector<int> labels;
    std::size_t d = 0;

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        std::istringstream stream(line);
        std::string token;
        if (!(stream >> token))
            throw ParseError(line_no, 0, path + ": empty line " + std::to_string(line_no));
        labels.push_back(map_label(token, result.label_values));

        std::vector<std::pair<std::size_t, double>> entries;
        std::size_t prev_index = 0;
        while (stream >> token) {
            const auto colon = token.find(':');
            if (colon == std::string::npos)
                throw ParseError(line_no, entries.size() + 1,
                                 path + ": malformed entry '" + token + "' at line " +
                                     std::to_string(line_no));
            std::size_t index = 0;
            const std::string idx_text = token.substr(0, colon);
            const auto [ptr, ec] =
                std::from_chars(idx_text.data(), idx_text.data() + idx_text.size(), index);
            if (ec != std::errc{} || ptr != idx_text.data() + idx_text.size())
                throw ParseError(line_no, entries.size() + 1,
                                 path + ": bad feature index '" + idx_text + "' at line " +
                                     std::to_string(line_no));
            if (index == 0)
                throw ParseError(line_no, entries.size() + 1,
                                 path + ": feature indices are 1-based (line " +
                                     std::to_string(line_no) + ")");
            if (index <= prev_index)
                throw NonAscendingIndex(path + ": index " + std::to_string(index) +
                                        " after " + std::to_string(prev_index) + " at line " +
                                        std::to_string(line_no));
            double value = 0.0;
            if (!parse_double(token.substr(colon + 1), value) || !std::isfinite(value))
                throw NonNumericValue(line_no, entries.size() + 1,
                                      path + ": non-numeric value in '" + token +
                                          "' at line " + std::to_string(line_no));
            entries.emplace_back(index - 1, value);
            prev_index = index;
            d = std::max(d, index);
        }
        rows.push_back(std::move(entries));
    }

    result.data.features = Matrix(rows.size(), d);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (const auto& [j, value] : rows[i])
            result.data.features(i, j) = value;
    result.data.labels = std::move(labels);
    result.data.validate();
    return result;
}

void write_dense_csv(const std::string& path, const LabeledDataset& data,
                     const std::vector<std::string>& label_values) {
    std::ofstream out = open_out(path);
    const std::size_t d = data.n_features();
    for (std::size_t j = 0; j < d; ++j) {
        out << (data.feature_names.empty() ? "f" + std::to_string(j) : data.feature_names[j]);
        out << ',';
    }
    out << "label\n";
    for (std::size_t i = 0; i < data.n_samples(); ++i) {
        for (std::size_t j = 0; j < d; ++j)
            out << format_double(data.features(i, j)) << ',';
        const std::size_t cls = static_cast<std::size_t>(data.labels[i]);
        out << (cls < label_values.size() ? label_values[cls] : std::to_string(cls)) << '\n';
    }
}

void write_manifest_json(const std::string& path, const RunManifest& manifest) {
    json doc{{"command", manifest.command},
             {"input_path", manifest.input_path},
             {"input_format", manifest.input_format},
             {"label_column", manifest.label_column},
             {"label_values", manifest.label_values},
             {"config", config_to_json(manifest.config)},
             {"seed", manifest.seed},
             {"output_files", manifest.output_files},
             {"tool_version", manifest.tool_version}};
    open_out(path) << doc.dump(2) << '\n';
}

void write_ranking_json(const std::string& path, const DfsSolution& solution, std::size_t top) {
    json ranking = json::array();
    for (std::size_t idx : solution.ranking)
        ranking.push_back(json{{"feature_index", idx}, {"score", solution.row_scores[idx]}});
    json doc{{"ranking", ranking},
             {"iterations", solution.iterations},
             {"terminated_by",
              solution.terminated_by == Termination::Converged ? "Converged" : "MaxIter"},
             {"alpha_used", solution.alpha_used},
             {"l_used", solution.l_used}};
    if (top > 0) {
        json selected = json::array();
        for (std::size_t i = 0; i < std::min(top, solution.ranking.size()); ++i)
            selected.push_back(solution.ranking[i]);
        doc["top"] = selected;
    }
    open_out(path) << doc.dump(2) << '\n';
}

void write_traces_csv(const std::string& path, const DfsSolution& solution) {
    std::ofstream out = open_out(path);
    out << "iteration,objective_smoothed,objective_raw,divergence\n";
    for (std::size_t k = 0; k < solution.objective_trace.size(); ++k) {
        out << (k + 1) << ',' << format_double(solution.objective_trace[k]) << ','
            << format_double(solution.objective_raw_trace[k]) << ',';
        // the divergence trace starts at the second iteration
        if (k >= 1) out << format_double(solution.divergence_trace[k - 1]);
        out << '\n';
    }
}

void write_eval_report_json(const std::string& path, const EvalReport& report) {
    json per_k = json::array();
    for (std::size_t ki = 0; ki < report.k_grid.size(); ++ki)
        per_k.push_back(json{{"k", report.k_grid[ki]},
                             {"mean_accuracy", report.mean_accuracy[ki]},
                             {"fold_accuracy", report.fold_accuracy[ki]},
                             {"redundancy", report.redundancy[ki]}});
    json doc{{"method", report.method_name},
             {"config", report.config_echo},
             {"folds", report.folds},
             {"seed", report.seed},
             {"abs_corr", report.abs_corr},
             {"k_grid", report.k_grid},
             {"results", per_k}};
    open_out(path) << doc.dump(2) << '\n';
}

void write_curve_csv(const std::string& path, const EvalReport& report) {
    std::ofstream out = open_out(path);
    out << "k,mean_accuracy,redundancy\n";
    for (std::size_t ki = 0; ki < report.k_grid.size(); ++ki)
        out << report.k_grid[ki] << ',' << format_double(report.mean_accuracy[ki]) << ','
            << format_double(report.redundancy[ki]) << '\n';
}

}  // namespace dfs
