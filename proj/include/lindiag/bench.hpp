#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lindiag/heuristics.hpp"
#include "lindiag/matrix.hpp"
#include "lindiag/tsp.hpp"

namespace lindiag {

struct BenchInstance {
    std::string id;
    BinaryMatrix matrix;
};

struct BenchEntry {
    std::string instance_id;
    int rows = 0;
    int cols = 0;
    std::string algorithm;  // "exact", "rodgers", "multiseed"
    std::int64_t blocks = 0;
    double runtime_ms = 0.0;
    bool optimal = false;  // proven; always false for heuristics
    std::int64_t blocks_lower_bound = 0;
};

struct BenchConfig {
    std::vector<std::string> algorithms{"exact", "rodgers", "multiseed"};
    tsp::SolverConfig solver;
    HeuristicConfig heuristic;
    int workers = 1;
};

struct BenchmarkReport {
    std::vector<BenchEntry> entries;
};

/// Runs the chosen algorithms over every instance. Instances may be solved
/// in parallel (cfg.workers); entries come back in deterministic
/// (instance, algorithm) order regardless.
BenchmarkReport run_benchmark(const std::vector<BenchInstance>& instances,
                              const BenchConfig& cfg);

/// Bucketed table in the usual benchmark layout: exact blocks/row and
/// runtime, then per-heuristic mean relative/absolute optimality gaps and
/// runtimes. bucket_spec is a comma list of exact counts ("10,20") or
/// ranges ("20-50"), or the presets "t1" / "t2"; empty buckets by distinct
/// column count. Instances whose exact run is not proven optimal are
/// excluded from gap means and reported with a gap interval from the
/// certified lower bound.
std::string report_table(const BenchmarkReport& report, const std::string& bucket_spec = "");
std::string report_json(const BenchmarkReport& report, const std::string& bucket_spec = "");

}  // namespace lindiag
