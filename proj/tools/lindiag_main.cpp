#include <chrono>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "lindiag/bench.hpp"
#include "lindiag/gen.hpp"
#include "lindiag/heuristics.hpp"
#include "lindiag/io.hpp"
#include "lindiag/pqtree.hpp"
#include "lindiag/render.hpp"
#include "lindiag/solve.hpp"
#include "lindiag/verify.hpp"

namespace {

using Clock = std::chrono::steady_clock;
using nlohmann::json;

constexpr int kExitParse = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitTimeLimit = 4;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        lindiag::write_file(out_path, text);
    }
}

lindiag::RowWeights parse_weights_file(const std::string& path, int rows) {
    const std::string text = lindiag::read_file(path);
    std::vector<std::int64_t> weights;
    std::size_t start = 0;
    int line_no = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string::npos) end = text.size();
        std::string line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.pop_back();
        start = end + 1;
        ++line_no;
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        try {
            std::size_t used = 0;
            const long long v = std::stoll(line, &used);
            if (used != line.size() || v < 1) throw std::invalid_argument("");
            weights.push_back(v);
        } catch (const std::exception&) {
            throw lindiag::ParseError(path + ": line " + std::to_string(line_no) +
                                      ": expected a positive integer weight");
        }
    }
    if (static_cast<int>(weights.size()) != rows) {
        throw lindiag::ParseError(path + ": expected " + std::to_string(rows) +
                                  " weights (one per set), got " + std::to_string(weights.size()));
    }
    return lindiag::RowWeights(std::move(weights));
}

std::pair<int, int> parse_row_pair(const std::string& spec) {
    const auto comma = spec.find(',');
    try {
        if (comma == std::string::npos) throw std::invalid_argument("");
        return {std::stoi(spec.substr(0, comma)), std::stoi(spec.substr(comma + 1))};
    } catch (const std::exception&) {
        throw lindiag::ParseError("--fix-rows expects two comma-separated row indices, e.g. 0,1");
    }
}

lindiag::ColumnPermutation parse_order(const std::string& spec, int cols) {
    std::vector<int> values;
    std::stringstream ss(spec);
    std::string token;
    while (std::getline(ss, token, ',')) {
        try {
            values.push_back(std::stoi(token));
        } catch (const std::exception&) {
            throw lindiag::ParseError("--order expects comma-separated column indices");
        }
    }
    try {
        if (static_cast<int>(values.size()) != cols) throw std::invalid_argument("length");
        return lindiag::ColumnPermutation(std::move(values));
    } catch (const std::invalid_argument&) {
        throw lindiag::ParseError("--order must be a permutation of all " + std::to_string(cols) +
                                  " column indices");
    }
}

lindiag::tsp::Algorithm algorithm_from_name(const std::string& name) {
    if (name == "brute") return lindiag::tsp::Algorithm::brute;
    if (name == "held-karp") return lindiag::tsp::Algorithm::held_karp;
    if (name == "bnb") return lindiag::tsp::Algorithm::branch_and_bound;
    if (name == "tsp-heuristic") return lindiag::tsp::Algorithm::heuristic;
    return lindiag::tsp::Algorithm::auto_dispatch;
}

struct SolveArgs {
    std::string input;
    std::string heuristic;
    std::string fix_rows;
    std::string weights_path;
    std::string pqtree_path;
    std::string tsplib_path;
    std::string algorithm = "auto";
    std::string format = "json";
    std::string out_path;
    double time_limit_s = 60.0;
    std::uint64_t seed = 0;
    int seeds = 100;
    bool exact = false;
    bool no_collapse = false;
    bool polish = false;
    bool require_optimal = false;
};

int cmd_solve(const SolveArgs& args) {
    const auto t0 = Clock::now();
    const lindiag::LoadedInput in = lindiag::load_input_file(args.input);
    json doc;
    if (!args.heuristic.empty()) {
        lindiag::ColumnPermutation order;
        if (args.heuristic == "rodgers") {
            order = lindiag::rodgers_order(in.matrix);
            if (args.polish) order = lindiag::polish_two_opt(in.matrix, order);
        } else {
            lindiag::HeuristicConfig cfg;
            cfg.seeds = args.seeds;
            cfg.seed = args.seed;
            cfg.polish = args.polish;
            order = lindiag::multiseed_order(in.matrix, cfg);
            doc["seeds"] = args.seeds;
        }
        const std::int64_t blocks = lindiag::cons1(lindiag::apply_permutation(in.matrix, order));
        doc["algorithm"] = args.heuristic;
        doc["blocks"] = blocks;
        doc["optimal"] = blocks == in.matrix.nonzero_rows();
        doc["order"] = order.mapping();
        doc["runtime_ms"] = ms_since(t0);
        doc["seed"] = args.seed;
    } else {
        lindiag::SolveOptions opt;
        opt.collapse = !args.no_collapse;
        opt.solver.algorithm = algorithm_from_name(args.algorithm);
        opt.solver.time_limit =
            std::chrono::milliseconds(static_cast<std::int64_t>(args.time_limit_s * 1000.0));
        opt.solver.seed = args.seed;
        opt.tsplib_out = args.tsplib_path;
        if (!args.fix_rows.empty()) opt.fix_rows = parse_row_pair(args.fix_rows);
        if (!args.weights_path.empty()) {
            opt.weights = parse_weights_file(args.weights_path, in.matrix.rows());
        }
        if (!args.pqtree_path.empty()) {
            opt.pq_constraint = lindiag::parse_pqtree(lindiag::read_file(args.pqtree_path));
        }
        const lindiag::OrderResult res = lindiag::solve_ordering(in.matrix, opt);
        if (args.require_optimal && !res.optimal) {
            std::cerr << "error: time limit reached before optimality was proven (lower bound "
                      << res.objective_lower_bound << ", best " << res.objective << ")\n";
            return kExitTimeLimit;
        }
        doc["algorithm"] = res.algorithm;
        doc["blocks"] = res.blocks;
        doc["optimal"] = res.optimal;
        doc["order"] = res.order.mapping();
        doc["runtime_ms"] = ms_since(t0);
        doc["seed"] = args.seed;
        if (res.weighted) doc["weighted_value"] = res.objective;
        if (!res.optimal) doc["lower_bound"] = res.objective_lower_bound;
    }
    if (args.format == "json") {
        emit(args.out_path, doc.dump(2) + "\n");
    } else {
        std::ostringstream out;
        out << "order:   ";
        for (const auto& v : doc["order"]) out << v.get<int>() << ' ';
        out << "\nblocks:  " << doc["blocks"].get<std::int64_t>();
        if (doc.contains("weighted_value")) {
            out << "\nweighted value: " << doc["weighted_value"].get<std::int64_t>();
        }
        out << "\noptimal: " << (doc["optimal"].get<bool>() ? "yes" : "no");
        if (doc.contains("lower_bound")) {
            out << "\nlower bound: " << doc["lower_bound"].get<std::int64_t>();
        }
        out << "\nruntime: " << doc["runtime_ms"].get<double>() << " ms\n";
        emit(args.out_path, out.str());
    }
    return 0;
}

struct BenchArgs {
    std::string corpus_dir;
    std::string algos = "exact,rodgers,multiseed";
    std::string buckets;
    std::string format = "table";
    std::string out_path;
    double time_limit_s = 60.0;
    std::uint64_t seed = 0;
    int seeds = 100;
    int workers = 1;
};

int cmd_bench(const BenchArgs& args) {
    namespace fs = std::filesystem;
    std::vector<fs::path> files;
    if (!fs::is_directory(args.corpus_dir)) {
        throw lindiag::ParseError("not a directory: " + args.corpus_dir);
    }
    for (const auto& entry : fs::directory_iterator(args.corpus_dir)) {
        if (!entry.is_regular_file()) continue;
        const auto ext = entry.path().extension();
        if (ext == ".txt" || ext == ".json") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    std::vector<lindiag::BenchInstance> instances;
    for (const auto& f : files) {
        instances.push_back({f.filename().string(), lindiag::load_input_file(f.string()).matrix});
    }
    if (instances.empty()) throw lindiag::ParseError("empty corpus: " + args.corpus_dir);
    lindiag::BenchConfig cfg;
    cfg.algorithms.clear();
    std::stringstream ss(args.algos);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (!token.empty()) cfg.algorithms.push_back(token);
    }
    cfg.solver.time_limit =
        std::chrono::milliseconds(static_cast<std::int64_t>(args.time_limit_s * 1000.0));
    cfg.heuristic.seeds = args.seeds;
    cfg.heuristic.seed = args.seed;
    cfg.workers = args.workers;
    const lindiag::BenchmarkReport report = lindiag::run_benchmark(instances, cfg);
    emit(args.out_path, args.format == "json" ? lindiag::report_json(report, args.buckets)
                                              : lindiag::report_table(report, args.buckets));
    return 0;
}

struct GenArgs {
    std::string gadget_path;
    std::string out_path;
    std::string out_dir;
    std::string format = "table";
    double density = 0.3;
    std::uint64_t seed = 0;
    int rows = 10;
    int cols = 20;
    int count = 1;
    bool random_mode = false;
    bool t1_mode = false;
    bool t2_mode = false;
};

int cmd_gen(const GenArgs& args) {
    if (!args.gadget_path.empty()) {
        const lindiag::SimpleGraph g =
            lindiag::parse_edge_list(lindiag::read_file(args.gadget_path));
        const lindiag::GadgetInstance gadget = lindiag::hampath_gadget(g);
        const std::string matrix_text = lindiag::serialize_matrix_text(gadget.matrix);
        if (args.format == "json") {
            json doc{{"rows", gadget.matrix.rows()},
                     {"cols", gadget.matrix.cols()},
                     {"threshold", gadget.threshold}};
            std::vector<std::string> lines;
            for (int i = 0; i < gadget.matrix.rows(); ++i) {
                std::string line;
                for (int j = 0; j < gadget.matrix.cols(); ++j) {
                    line += gadget.matrix.get(i, j) ? '1' : '0';
                }
                lines.push_back(std::move(line));
            }
            doc["matrix"] = lines;
            emit(args.out_path, doc.dump(2) + "\n");
        } else if (!args.out_path.empty()) {
            lindiag::write_file(args.out_path, matrix_text);
            std::cout << "threshold: " << gadget.threshold << "\n";
        } else {
            std::cout << matrix_text;
            std::cerr << "threshold: " << gadget.threshold << "\n";
        }
        return 0;
    }
    auto make = [&](std::uint64_t seed) -> lindiag::BinaryMatrix {
        if (args.t1_mode) return lindiag::t1_like_matrix(args.cols, seed);
        if (args.t2_mode) return lindiag::t2_like_matrix(args.rows, args.cols, seed);
        return lindiag::random_matrix(args.rows, args.cols, args.density, seed);
    };
    if (!args.out_dir.empty()) {
        std::filesystem::create_directories(args.out_dir);
        for (int i = 0; i < args.count; ++i) {
            char name[32];
            std::snprintf(name, sizeof(name), "inst_%04d.txt", i);
            const auto path = std::filesystem::path(args.out_dir) / name;
            lindiag::write_file(path.string(), lindiag::serialize_matrix_text(make(args.seed + i)));
        }
        std::cout << "wrote " << args.count << " instance(s) to " << args.out_dir << " (seed "
                  << args.seed << ")\n";
        return 0;
    }
    emit(args.out_path, lindiag::serialize_matrix_text(make(args.seed)));
    return 0;
}

struct RenderArgs {
    std::string input;
    std::string order;
    std::string out_path;
    bool text = false;
    bool no_grid = false;
};

int cmd_render(const RenderArgs& args) {
    const lindiag::LoadedInput in = lindiag::load_input_file(args.input);
    lindiag::ColumnPermutation order;
    if (!args.order.empty()) {
        order = parse_order(args.order, in.matrix.cols());
    } else {
        order = lindiag::solve_ordering(in.matrix).order;
    }
    if (args.text) {
        emit(args.out_path, lindiag::render_text(in.matrix, order));
        return 0;
    }
    const lindiag::SetSystem system = in.system ? *in.system : lindiag::to_set_system(in.matrix);
    lindiag::RenderStyle style;
    style.grid = !args.no_grid;
    emit(args.out_path, lindiag::render_svg(system, order, style));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"lindiag: optimal column orders for linear diagrams"};
    app.require_subcommand(1);

    SolveArgs solve_args;
    auto* solve = app.add_subcommand("solve", "compute a column order minimizing drawn segments");
    solve->add_option("input", solve_args.input, "matrix text or set-system JSON file")->required();
    solve->add_flag("--exact", solve_args.exact, "exact TSP pipeline (default)");
    auto* heur_opt =
        solve->add_option("--heuristic", solve_args.heuristic, "rodgers or multiseed ordering")
            ->check(CLI::IsMember({"rodgers", "multiseed"}));
    auto* fix_opt = solve->add_option("--fix-rows", solve_args.fix_rows,
                                      "draw these two rows as single segments, e.g. 0,1");
    auto* weights_opt =
        solve->add_option("--weights", solve_args.weights_path, "row weights file (one per set)");
    auto* pq_opt = solve->add_option("--pqtree", solve_args.pqtree_path,
                                     "PQ-tree constraint file, e.g. ( [0 1 2] (3 4) )");
    heur_opt->excludes(fix_opt)->excludes(weights_opt)->excludes(pq_opt);
    fix_opt->excludes(weights_opt)->excludes(pq_opt);
    weights_opt->excludes(pq_opt);
    solve->add_flag("--no-collapse", solve_args.no_collapse, "skip duplicate-column collapsing");
    solve->add_option("--time-limit", solve_args.time_limit_s, "solver time limit in seconds");
    solve->add_option("--seed", solve_args.seed, "seed for randomized heuristics");
    solve->add_option("--seeds", solve_args.seeds, "restarts for multiseed");
    solve->add_flag("--polish", solve_args.polish, "2-opt polish for heuristic orders");
    solve->add_flag("--require-optimal", solve_args.require_optimal,
                    "exit 4 unless optimality is proven");
    solve->add_option("--algorithm", solve_args.algorithm, "auto|brute|held-karp|bnb|tsp-heuristic")
        ->check(CLI::IsMember({"auto", "brute", "held-karp", "bnb", "tsp-heuristic"}));
    solve->add_option("--export-tsplib", solve_args.tsplib_path, "write the reduced TSP instance");
    solve->add_option("--format", solve_args.format, "json or table")
        ->check(CLI::IsMember({"json", "table"}));
    solve->add_option("-o,--output", solve_args.out_path, "output file (default stdout)");

    BenchArgs bench_args;
    auto* bench = app.add_subcommand("bench", "gap benchmark over a corpus directory");
    bench->add_option("corpus", bench_args.corpus_dir, "directory of .txt/.json instances")
        ->required();
    bench->add_option("--algos", bench_args.algos, "comma list: exact,rodgers,multiseed");
    bench->add_option("--buckets", bench_args.buckets,
                      "bucket spec: exact counts or ranges, e.g. 10,20,30 or 20-50,55-80");
    bench->add_option("--time-limit", bench_args.time_limit_s, "per-instance limit in seconds");
    bench->add_option("--seed", bench_args.seed, "base seed for multiseed");
    bench->add_option("--seeds", bench_args.seeds, "restarts for multiseed");
    bench->add_option("--workers", bench_args.workers, "parallel instance workers");
    bench->add_option("--format", bench_args.format, "table or json")
        ->check(CLI::IsMember({"json", "table"}));
    bench->add_option("-o,--output", bench_args.out_path, "output file (default stdout)");

    GenArgs gen_args;
    auto* gen = app.add_subcommand("gen", "generate instances");
    gen->add_flag("--random", gen_args.random_mode, "independent Bernoulli entries");
    gen->add_option("--gadget", gen_args.gadget_path,
                    "edge-list file; emits the Hamiltonian-path incidence gadget");
    gen->add_flag("--t1-like", gen_args.t1_mode, "duplication-heavy benchmark matrix (uses --cols)");
    gen->add_flag("--t2-like", gen_args.t2_mode, "sparse duplication-heavy matrix (uses --rows/--cols)");
    gen->add_option("--rows", gen_args.rows, "row count");
    gen->add_option("--cols", gen_args.cols, "column count");
    gen->add_option("--density", gen_args.density, "probability of a 1-entry");
    gen->add_option("--seed", gen_args.seed, "generator seed");
    gen->add_option("--count", gen_args.count, "number of instances (with --out-dir)");
    gen->add_option("--out-dir", gen_args.out_dir, "write inst_NNNN.txt files here");
    gen->add_option("--format", gen_args.format, "table or json (gadget only)")
        ->check(CLI::IsMember({"json", "table"}));
    gen->add_option("-o,--output", gen_args.out_path, "output file (default stdout)");

    RenderArgs render_args;
    auto* render = app.add_subcommand("render", "draw a linear diagram");
    render->add_option("input", render_args.input, "matrix text or set-system JSON file")
        ->required();
    render->add_option("--order", render_args.order,
                       "comma-separated column order (default: solve exactly)");
    render->add_flag("--text", render_args.text, "terminal rendering instead of SVG");
    render->add_flag("--no-grid", render_args.no_grid, "omit grid lines");
    render->add_option("-o,--output", render_args.out_path, "output file (default stdout)");

    int verify_trials = 500;
    std::uint64_t verify_seed = 7;
    auto* verify = app.add_subcommand("verify", "run the seeded property suite");
    verify->add_option("--trials", verify_trials, "trials per property");
    verify->add_option("--seed", verify_seed, "seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*solve) return cmd_solve(solve_args);
        if (*bench) return cmd_bench(bench_args);
        if (*gen) return cmd_gen(gen_args);
        if (*render) return cmd_render(render_args);
        if (*verify) return lindiag::run_verification(verify_trials, verify_seed, std::cout) ? 0 : 1;
    } catch (const lindiag::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const lindiag::InfeasibleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: invalid input: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
