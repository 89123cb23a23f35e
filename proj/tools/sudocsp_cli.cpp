// Command-line front end: solve puzzles from text, benchmark the arc
// consistency algorithms, read puzzles out of grid images, and run the
// image-to-solution pipeline.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sudocsp/arc_consistency.hpp"
#include "sudocsp/errors.hpp"
#include "sudocsp/idx.hpp"
#include "sudocsp/knn.hpp"
#include "sudocsp/netpbm.hpp"
#include "sudocsp/recognize.hpp"
#include "sudocsp/solver.hpp"
#include "sudocsp/sudoku.hpp"
#include "sudocsp/synthetic.hpp"

namespace {

using namespace sudocsp;

constexpr int kExitSolved = 0;
constexpr int kExitUnsatisfiable = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitLimitExceeded = 3;
constexpr int kExitMisrecognized = 4;

struct NamedPuzzle {
    std::string name;
    SudokuGrid grid;
};

// Puzzle files hold either one puzzle in any whitespace layout or several
// puzzles, one 81-character line each. '#' starts a comment line.
std::vector<NamedPuzzle> load_puzzles(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open puzzle file: " + path);

    std::vector<std::string> lines;
    std::string all;
    for (std::string line; std::getline(in, line);) {
        std::string trimmed;
        for (char c : line) {
            if (c == '#') break;
            if (!std::isspace(static_cast<unsigned char>(c))) trimmed.push_back(c);
        }
        if (trimmed.empty()) continue;
        lines.push_back(trimmed);
        all += trimmed;
    }

    const std::string stem = std::filesystem::path(path).stem().string();
    std::vector<NamedPuzzle> puzzles;
    if (all.size() == 81) {
        puzzles.push_back({stem, parse_grid(all)});
        return puzzles;
    }
    for (size_t i = 0; i < lines.size(); ++i) {
        std::string name = lines.size() == 1 ? stem : stem + "#" + std::to_string(i + 1);
        puzzles.push_back({name, parse_grid(lines[i])});
    }
    if (puzzles.empty()) throw FormatError("no puzzles in file: " + path);
    return puzzles;
}

AcAlgorithm algorithm_or_throw(const std::string& token) {
    auto algorithm = parse_algorithm(token);
    if (!algorithm) throw FormatError("unknown arc consistency algorithm: " + token);
    return *algorithm;
}

void print_stats(std::ostream& out, const SearchResult& result) {
    out << "nodes:               " << result.nodes << "\n"
        << "backtracks:          " << result.backtracks << "\n"
        << "wall_seconds:        " << result.wall_seconds << "\n"
        << "revise_calls:        " << result.propagation.revise_calls << "\n"
        << "values_removed:      " << result.propagation.values_removed << "\n"
        << "queue_pushes:        " << result.propagation.queue_pushes << "\n"
        << "propagation_seconds: " << result.propagation.wall_seconds << "\n";
}

// ---- solve ----------------------------------------------------------------

struct SolveArgs {
    std::string puzzle_path;
    std::string ac = "3";
    std::string heuristic = "mrv";
    bool stats = false;
    double time_limit = 0.0;
    long long node_limit = 0;
};

SearchConfig search_config(const SolveArgs& args) {
    SearchConfig config;
    config.algorithm = algorithm_or_throw(args.ac);
    if (args.heuristic == "mrv") {
        config.heuristic = Heuristic::Mrv;
    } else if (args.heuristic == "first") {
        config.heuristic = Heuristic::FirstUnassigned;
    } else {
        throw FormatError("unknown heuristic: " + args.heuristic);
    }
    if (args.time_limit > 0.0) config.time_limit_seconds = args.time_limit;
    if (args.node_limit > 0) config.node_limit = args.node_limit;
    return config;
}

int cmd_solve(const SolveArgs& args) {
    SudokuGrid grid = load_puzzles(args.puzzle_path).front().grid;
    SearchResult result = solve(grid, search_config(args));
    if (args.stats) print_stats(std::cerr, result);
    switch (result.status) {
        case SearchStatus::Solved:
            std::cout << serialize_grid(*result.solution);
            return kExitSolved;
        case SearchStatus::Unsatisfiable:
            std::cerr << "no solution\n";
            return kExitUnsatisfiable;
        case SearchStatus::LimitExceeded:
            std::cerr << "limit exceeded after " << result.nodes << " nodes\n";
            return kExitLimitExceeded;
    }
    return kExitUnsatisfiable;
}

// ---- bench ----------------------------------------------------------------

struct BenchArgs {
    std::vector<std::string> puzzle_paths;
    int trials = 3;
    int warmup = 0;
    std::string ac = "1,2,3,4";
    std::string format = "table";
};

struct TrialRow {
    std::string algorithm;
    std::string puzzle;
    int trial;
    double seconds;
    long long nodes;
    long long backtracks;
    long long revise_calls;
    std::string outcome;
};

const char* outcome_name(SearchStatus status) {
    switch (status) {
        case SearchStatus::Solved:
            return "solved";
        case SearchStatus::Unsatisfiable:
            return "no_solution";
        case SearchStatus::LimitExceeded:
            return "limit_exceeded";
    }
    return "?";
}

std::vector<AcAlgorithm> parse_algorithm_list(const std::string& list) {
    std::vector<AcAlgorithm> algorithms;
    std::stringstream stream(list);
    for (std::string token; std::getline(stream, token, ',');) {
        if (!token.empty()) algorithms.push_back(algorithm_or_throw(token));
    }
    if (algorithms.empty()) throw FormatError("empty --ac list");
    return algorithms;
}

int cmd_bench(const BenchArgs& args) {
    if (args.trials < 1) throw FormatError("--trials must be at least 1");
    if (args.warmup < 0) throw FormatError("--warmup must be non-negative");
    std::vector<NamedPuzzle> puzzles;
    for (const std::string& path : args.puzzle_paths) {
        auto batch = load_puzzles(path);
        puzzles.insert(puzzles.end(), batch.begin(), batch.end());
    }
    std::vector<AcAlgorithm> algorithms = parse_algorithm_list(args.ac);

    std::vector<TrialRow> rows;
    for (const NamedPuzzle& puzzle : puzzles) {
        for (AcAlgorithm algorithm : algorithms) {
            SearchConfig config;
            config.algorithm = algorithm;
            for (int w = 0; w < args.warmup; ++w) solve(puzzle.grid, config);
            for (int t = 1; t <= args.trials; ++t) {
                SearchResult result = solve(puzzle.grid, config);
                rows.push_back(TrialRow{std::string(to_string(algorithm)), puzzle.name,
                                        t, result.wall_seconds, result.nodes,
                                        result.backtracks,
                                        result.propagation.revise_calls,
                                        outcome_name(result.status)});
            }
        }
    }

    if (args.format == "csv") {
        std::printf("algorithm,puzzle,trial,seconds,nodes,backtracks,revise_calls,outcome\n");
        for (const TrialRow& row : rows) {
            std::printf("%s,%s,%d,%.6f,%lld,%lld,%lld,%s\n", row.algorithm.c_str(),
                        row.puzzle.c_str(), row.trial, row.seconds, row.nodes,
                        row.backtracks, row.revise_calls, row.outcome.c_str());
        }
        return kExitSolved;
    }
    if (args.format != "table") throw FormatError("unknown format: " + args.format);

    std::printf("%-14s %-14s %7s %10s   %-28s %8s %10s %12s %s\n", "algorithm",
                "puzzle", "trials", "mean_s", "trial_s", "nodes", "backtracks",
                "revise_calls", "outcome");
    for (size_t i = 0; i < rows.size(); i += static_cast<size_t>(args.trials)) {
        double mean = 0.0;
        std::string trial_list;
        for (int t = 0; t < args.trials; ++t) {
            const TrialRow& row = rows[i + static_cast<size_t>(t)];
            mean += row.seconds;
            if (t > 0) trial_list += "|";
            char buffer[32];
            std::snprintf(buffer, sizeof buffer, "%.6f", row.seconds);
            trial_list += buffer;
        }
        mean /= args.trials;
        const TrialRow& last = rows[i + static_cast<size_t>(args.trials) - 1];
        std::printf("%-14s %-14s %7d %10.6f   %-28s %8lld %10lld %12lld %s\n",
                    last.algorithm.c_str(), last.puzzle.c_str(), args.trials, mean,
                    trial_list.c_str(), last.nodes, last.backtracks, last.revise_calls,
                    last.outcome.c_str());
    }
    return kExitSolved;
}

// ---- recognize / pipeline ---------------------------------------------------

struct RecognizeArgs {
    std::string image_path;
    std::string encoding = "morph";
    int k = 5;
    std::string train = "synthetic";
    std::string train_images;
    std::string train_labels;
    int train_count = 60;
    double train_noise = 0.05;
    std::uint64_t train_seed = 7;
    bool idx_invert = false;
    double margin = 0.15;
    double ink_threshold = 0.02;
    int binarize_threshold = 128;
    int cell_size = 16;
};

KnnModel build_model(const RecognizeArgs& args) {
    auto encoding = parse_encoding(args.encoding);
    if (!encoding) throw FormatError("unknown encoding: " + args.encoding);

    if (args.train == "synthetic") {
        return KnnModel(generate_synthetic(args.train_count, args.train_noise,
                                           args.train_seed, *encoding, args.cell_size),
                        args.k);
    }
    if (args.train == "idx") {
        if (args.train_images.empty() || args.train_labels.empty()) {
            throw FormatError("--train idx needs --train-images and --train-labels");
        }
        IdxOptions options;
        options.encoding = *encoding;
        options.cell_size = args.cell_size;
        options.binarize_threshold = args.binarize_threshold;
        options.invert = args.idx_invert;
        return KnnModel(load_idx(args.train_images, args.train_labels, options), args.k);
    }
    throw FormatError("unknown training source: " + args.train);
}

std::string recognize_to_line(const RecognizeArgs& args) {
    BinaryImage img = load_binary_pnm(args.image_path, args.binarize_threshold);
    KnnModel model = build_model(args);
    RecognizeOptions options;
    options.margin_fraction = args.margin;
    options.ink_threshold = args.ink_threshold;
    options.cell_size = args.cell_size;
    return recognize_grid(img, model, options);
}

int cmd_recognize(const RecognizeArgs& args) {
    std::cout << recognize_to_line(args) << "\n";
    return kExitSolved;
}

int cmd_pipeline(const RecognizeArgs& recognize_args, const SolveArgs& solve_args) {
    std::string line = recognize_to_line(recognize_args);
    std::cerr << line << "\n";
    SudokuGrid grid = parse_grid(line);

    SearchResult result;
    try {
        result = solve(grid, search_config(solve_args));
    } catch (const InvalidPuzzle& e) {
        std::cerr << "recognized grid is not a valid puzzle: " << e.what() << "\n";
        return kExitMisrecognized;
    }
    if (solve_args.stats) print_stats(std::cerr, result);
    switch (result.status) {
        case SearchStatus::Solved:
            std::cout << serialize_grid(*result.solution);
            return kExitSolved;
        case SearchStatus::Unsatisfiable:
            std::cerr << "no solution\n";
            return kExitUnsatisfiable;
        case SearchStatus::LimitExceeded:
            std::cerr << "limit exceeded after " << result.nodes << " nodes\n";
            return kExitLimitExceeded;
    }
    return kExitUnsatisfiable;
}

void add_solve_flags(CLI::App* cmd, SolveArgs& args) {
    cmd->add_option("--ac", args.ac, "arc consistency algorithm: 1|2|2paper|3|4")
        ->capture_default_str();
    cmd->add_option("--heuristic", args.heuristic, "variable ordering: mrv|first")
        ->capture_default_str();
    cmd->add_flag("--stats", args.stats, "print search counters to stderr");
    cmd->add_option("--time-limit", args.time_limit, "wall clock limit in seconds");
    cmd->add_option("--node-limit", args.node_limit, "assignment limit");
}

void add_recognize_flags(CLI::App* cmd, RecognizeArgs& args) {
    cmd->add_option("--encoding", args.encoding,
                    "feature encoding: basic|inverted|morph|pcf")
        ->capture_default_str();
    cmd->add_option("--k", args.k, "neighbor count")->capture_default_str();
    cmd->add_option("--train", args.train, "training source: synthetic|idx")
        ->capture_default_str();
    cmd->add_option("--train-images", args.train_images, "IDX images file");
    cmd->add_option("--train-labels", args.train_labels, "IDX labels file");
    cmd->add_option("--train-count", args.train_count,
                    "synthetic samples per digit")
        ->capture_default_str();
    cmd->add_option("--train-noise", args.train_noise,
                    "synthetic per-pixel flip probability")
        ->capture_default_str();
    cmd->add_option("--train-seed", args.train_seed, "synthetic generator seed")
        ->capture_default_str();
    cmd->add_flag("--idx-invert", args.idx_invert,
                  "treat bright pixels as ink when loading IDX data");
    cmd->add_option("--margin", args.margin, "cell margin fraction to crop")
        ->capture_default_str();
    cmd->add_option("--ink-threshold", args.ink_threshold,
                    "foreground fraction below which a cell is blank")
        ->capture_default_str();
    cmd->add_option("--threshold", args.binarize_threshold,
                    "grayscale binarization threshold")
        ->capture_default_str();
    cmd->add_option("--cell-size", args.cell_size, "classifier input side in pixels")
        ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sudoku constraint solver with image recognition front end"};
    app.require_subcommand(1);

    SolveArgs solve_args;
    CLI::App* solve_cmd = app.add_subcommand("solve", "solve a puzzle file");
    solve_cmd->add_option("puzzle", solve_args.puzzle_path, "puzzle text file")
        ->required();
    add_solve_flags(solve_cmd, solve_args);

    BenchArgs bench_args;
    CLI::App* bench_cmd =
        app.add_subcommand("bench", "time the arc consistency algorithms");
    bench_cmd->add_option("puzzles", bench_args.puzzle_paths, "puzzle text files")
        ->required();
    bench_cmd->add_option("--trials", bench_args.trials, "timed runs per configuration")
        ->capture_default_str();
    bench_cmd->add_option("--warmup", bench_args.warmup, "untimed runs to discard")
        ->capture_default_str();
    bench_cmd->add_option("--ac", bench_args.ac, "comma list of algorithms")
        ->capture_default_str();
    bench_cmd->add_option("--format", bench_args.format, "table|csv")
        ->capture_default_str();

    RecognizeArgs recognize_args;
    CLI::App* recognize_cmd =
        app.add_subcommand("recognize", "read a puzzle from a PGM/PBM image");
    recognize_cmd->add_option("image", recognize_args.image_path, "PGM or PBM image")
        ->required();
    add_recognize_flags(recognize_cmd, recognize_args);

    RecognizeArgs pipeline_recognize_args;
    SolveArgs pipeline_solve_args;
    CLI::App* pipeline_cmd =
        app.add_subcommand("pipeline", "recognize an image and solve the result");
    pipeline_cmd
        ->add_option("image", pipeline_recognize_args.image_path, "PGM or PBM image")
        ->required();
    add_recognize_flags(pipeline_cmd, pipeline_recognize_args);
    add_solve_flags(pipeline_cmd, pipeline_solve_args);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitBadInput;
    }

    try {
        if (solve_cmd->parsed()) return cmd_solve(solve_args);
        if (bench_cmd->parsed()) return cmd_bench(bench_args);
        if (recognize_cmd->parsed()) return cmd_recognize(recognize_args);
        if (pipeline_cmd->parsed()) {
            return cmd_pipeline(pipeline_recognize_args, pipeline_solve_args);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitBadInput;
}
