// Command-line front end: select / eval / redundancy / scatter-check.
// Exit codes: 0 success, 2 usage or configuration error, 3 input or
// parse error, 4 numeric error, 1 anything else.

#include <cmath>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "dfs/eval.hpp"
#include "dfs/io.hpp"
#include "dfs/log.hpp"
#include "dfs/metrics.hpp"
#include "dfs/scatter.hpp"
#include "dfs/solver.hpp"
#include "dfs/synthetic.hpp"

namespace {

namespace fs = std::filesystem;

struct InputArgs {
    std::string input;
    std::string format = "csv";
    std::string label = "label";
};

void add_input_flags(CLI::App* cmd, InputArgs& args, bool required = true) {
    auto* opt = cmd->add_option("--input", args.input, "Path to the dataset file");
    if (required) opt->required();
    cmd->add_option("--format", args.format, "Input format")
        ->check(CLI::IsMember({"csv", "sparse"}));
    cmd->add_option("--label", args.label,
                    "Label column name or 0-based index (csv format only)");
}

dfs::LoadResult load_input(const InputArgs& args) {
    if (args.format == "sparse") return dfs::load_sparse_libsvm(args.input);
    return dfs::load_dense_csv(args.input, args.label);
}

std::vector<std::size_t> parse_k_grid(const std::string& text, std::size_t d) {
    if (text.empty()) return dfs::default_k_grid(d);
    std::vector<std::size_t> grid;
    if (text.find(':') != std::string::npos) {
        std::size_t lo = 0, hi = 0, step = 1;
        if (std::sscanf(text.c_str(), "%zu:%zu:%zu", &lo, &hi, &step) != 3 || step == 0)
            throw dfs::InvalidSpec("--k-grid: expected lo:hi:step, got '" + text + "'");
        for (std::size_t k = lo; k <= hi && k <= d; k += step) grid.push_back(k);
    } else {
        std::stringstream stream(text);
        std::string token;
        while (std::getline(stream, token, ','))
            grid.push_back(static_cast<std::size_t>(std::stoul(token)));
    }
    if (grid.empty()) throw dfs::InvalidSpec("--k-grid: no usable values in '" + text + "'");
    return grid;
}

dfs::SyntheticSpec parse_synthetic(const std::string& text, std::uint64_t seed) {
    dfs::SyntheticSpec spec;
    spec.seed = seed;
    std::stringstream stream(text);
    std::string token;
    while (std::getline(stream, token, ',')) {
        const auto eq = token.find('=');
        if (eq == std::string::npos)
            throw dfs::InvalidSpec("--synthetic: expected key=value, got '" + token + "'");
        const std::string key = token.substr(0, eq);
        const std::string value = token.substr(eq + 1);
        if (key == "n") spec.n = std::stoul(value);
        else if (key == "d") spec.d = std::stoul(value);
        else if (key == "c") spec.c = std::stoul(value);
        else if (key == "informative") spec.n_informative = std::stoul(value);
        else if (key == "redundant") spec.n_redundant = std::stoul(value);
        else if (key == "sigma") spec.noise_sigma = std::stod(value);
        else if (key == "rho") spec.duplicate_rho = std::stod(value);
        else throw dfs::InvalidSpec("--synthetic: unknown key '" + key + "'");
    }
    return spec;
}

std::vector<std::size_t> parse_index_list(const std::string& text) {
    std::vector<std::size_t> out;
    std::stringstream stream(text);
    std::string token;
    while (std::getline(stream, token, ','))
        out.push_back(static_cast<std::size_t>(std::stoul(token)));
    return out;
}

std::string out_path(const std::string& dir, const std::string& name) {
    fs::create_directories(dir);
    return (fs::path(dir) / name).string();
}

int run(int argc, char** argv) {
    CLI::App app{"Discriminative feature selection by row-sparse LDA"};
    app.require_subcommand(1);

    InputArgs select_in, eval_in, red_in, check_in;
    dfs::DfsConfig cfg;
    std::string out_dir = ".";
    std::string k_grid_text, synthetic_text, features_text;
    std::size_t top = 0, folds = 5, jobs = 1;
    std::uint64_t seed = 0;
    bool emit_traces = false, abs_corr = false;

    auto* select = app.add_subcommand("select", "Rank features on a labeled dataset");
    add_input_flags(select, select_in);
    select->add_option("--gamma", cfg.gamma, "Regularization weight")->required();
    select->add_option("--p", cfg.p, "Row-norm exponent in (0, 2]");
    select->add_option("--l", cfg.l, "Target dimensionality (0 = classes - 1)");
    select->add_option("--alpha", cfg.alpha, "Total-scatter ridge (negative = auto)");
    select->add_option("--zeta", cfg.zeta, "Row-norm smoothing");
    select->add_option("--tol", cfg.tol, "Convergence threshold");
    select->add_option("--max-iter", cfg.max_iter, "Iteration cap");
    select->add_option("--top", top, "Also list the top-N selected features");
    select->add_option("--seed", seed, "Seed recorded in the manifest");
    select->add_option("--out-dir", out_dir, "Output directory");
    select->add_flag("--emit-traces", emit_traces, "Write per-iteration traces CSV");

    auto* eval = app.add_subcommand("eval", "Cross-validated accuracy/redundancy curves");
    add_input_flags(eval, eval_in, false);
    eval->add_option("--synthetic", synthetic_text,
                     "Generate data: n=..,d=..,c=..,informative=..,redundant=..,sigma=..,rho=..");
    eval->add_option("--gamma", cfg.gamma, "Regularization weight");
    eval->add_option("--p", cfg.p, "Row-norm exponent in (0, 2]");
    eval->add_option("--l", cfg.l, "Target dimensionality (0 = classes - 1)");
    eval->add_option("--alpha", cfg.alpha, "Total-scatter ridge (negative = auto)");
    eval->add_option("--zeta", cfg.zeta, "Row-norm smoothing");
    eval->add_option("--tol", cfg.tol, "Convergence threshold");
    eval->add_option("--max-iter", cfg.max_iter, "Iteration cap");
    eval->add_option("--k-grid", k_grid_text, "Subset sizes: lo:hi:step or comma list");
    eval->add_option("--folds", folds, "Cross-validation folds");
    eval->add_option("--jobs", jobs, "Parallel fold workers");
    eval->add_option("--seed", seed, "Random seed");
    eval->add_option("--out-dir", out_dir, "Output directory");
    eval->add_flag("--abs-corr", abs_corr, "Use |corr| in redundancy rates");

    auto* redundancy = app.add_subcommand("redundancy", "Redundancy rate of a feature subset");
    add_input_flags(redundancy, red_in);
    redundancy->add_option("--features", features_text, "Comma-separated feature indices")
        ->required();
    redundancy->add_flag("--abs-corr", abs_corr, "Use |corr| instead of signed correlation");

    auto* scatter_check =
        app.add_subcommand("scatter-check", "Print max-abs of St - Sb - Sw (debug)");
    add_input_flags(scatter_check, check_in);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // all usage problems map to exit code 2; --help stays 0
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (select->parsed()) {
        const dfs::LoadResult loaded = load_input(select_in);
        const auto [standardized, params] = dfs::standardize(loaded.data);
        if (!params.constant_columns.empty())
            dfs::log::warn("select: " + std::to_string(params.constant_columns.size()) +
                           " constant feature column(s) left unscaled");
        const dfs::DfsSolution solution = dfs::solve(standardized, cfg);

        dfs::RunManifest manifest;
        manifest.command = "select";
        manifest.input_path = select_in.input;
        manifest.input_format = select_in.format;
        manifest.label_column = select_in.label;
        manifest.label_values = loaded.label_values;
        manifest.config = cfg;
        manifest.seed = seed;
        manifest.tool_version = dfs::kToolVersion;

        const std::string ranking_path = out_path(out_dir, "ranking.json");
        dfs::write_ranking_json(ranking_path, solution, top);
        manifest.output_files.push_back(ranking_path);
        if (emit_traces) {
            const std::string traces_path = out_path(out_dir, "traces.csv");
            dfs::write_traces_csv(traces_path, solution);
            manifest.output_files.push_back(traces_path);
        }
        dfs::write_manifest_json(out_path(out_dir, "manifest.json"), manifest);
        std::cout << "wrote " << ranking_path << " ("
                  << (solution.terminated_by == dfs::Termination::Converged ? "converged"
                                                                            : "max-iter")
                  << " after " << solution.iterations << " iterations)\n";
        return 0;
    }

    if (eval->parsed()) {
        dfs::RunManifest manifest;
        manifest.command = "eval";
        manifest.config = cfg;
        manifest.seed = seed;
        manifest.tool_version = dfs::kToolVersion;

        dfs::LabeledDataset data;
        if (!synthetic_text.empty()) {
            data = dfs::generate_synthetic(parse_synthetic(synthetic_text, seed)).data;
            manifest.input_format = "synthetic";
            manifest.input_path = synthetic_text;
        } else if (!eval_in.input.empty()) {
            const dfs::LoadResult loaded = load_input(eval_in);
            data = loaded.data;
            manifest.label_values = loaded.label_values;
            manifest.input_path = eval_in.input;
            manifest.input_format = eval_in.format;
            manifest.label_column = eval_in.label;
        } else {
            throw dfs::InvalidSpec("eval: need --input or --synthetic");
        }

        const auto grid = parse_k_grid(k_grid_text, data.n_features());
        dfs::EvalReport report =
            dfs::run_curve(data, dfs::make_dfs_selector(cfg), "dfs", grid, folds, seed, jobs,
                           abs_corr);
        report.config_echo = "gamma=" + std::to_string(cfg.gamma) + ",p=" + std::to_string(cfg.p);

        const std::string report_path = out_path(out_dir, "report.json");
        const std::string curve_path = out_path(out_dir, "curve.csv");
        dfs::write_eval_report_json(report_path, report);
        dfs::write_curve_csv(curve_path, report);
        manifest.output_files = {report_path, curve_path};
        dfs::write_manifest_json(out_path(out_dir, "manifest.json"), manifest);
        std::cout << "wrote " << report_path << '\n';
        return 0;
    }

    if (redundancy->parsed()) {
        const dfs::LoadResult loaded = load_input(red_in);
        const double rate = dfs::redundancy_rate(
            loaded.data, dfs::FeatureSubset::of(parse_index_list(features_text)), abs_corr);
        std::cout << rate << '\n';
        return 0;
    }

    if (scatter_check->parsed()) {
        const dfs::LoadResult loaded = load_input(check_in);
        const dfs::ScatterTriple sc = dfs::compute_scatter(loaded.data);
        double worst = 0.0;
        for (std::size_t i = 0; i < sc.st.order(); ++i)
            for (std::size_t j = 0; j <= i; ++j)
                worst = std::max(worst,
                                 std::abs(sc.st.at(i, j) - sc.sb.at(i, j) - sc.sw.at(i, j)));
        std::cout << worst << '\n';
        return 0;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const dfs::InvalidConfig& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const dfs::InvalidK& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const dfs::InvalidSpec& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const dfs::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const dfs::MissingLabelColumn& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const dfs::NonNumericValue& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const dfs::NonAscendingIndex& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const dfs::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
