#include "lindiag/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <iomanip>
#include <limits>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"
#include "lindiag/solve.hpp"

namespace lindiag {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::vector<BenchEntry> run_instance(const BenchInstance& inst, const BenchConfig& cfg) {
    std::vector<BenchEntry> out;
    for (const auto& algo : cfg.algorithms) {
        BenchEntry e;
        e.instance_id = inst.id;
        e.rows = inst.matrix.rows();
        e.cols = inst.matrix.cols();
        e.algorithm = algo;
        const auto t0 = Clock::now();
        if (algo == "exact") {
            SolveOptions opt;
            opt.solver = cfg.solver;
            const OrderResult r = solve_ordering(inst.matrix, opt);
            e.blocks = r.blocks;
            e.optimal = r.optimal;
            e.blocks_lower_bound = r.objective_lower_bound;
        } else if (algo == "rodgers") {
            const auto order = rodgers_order(inst.matrix);
            e.blocks = cons1(apply_permutation(inst.matrix, order));
        } else if (algo == "multiseed") {
            const auto order = multiseed_order(inst.matrix, cfg.heuristic);
            e.blocks = cons1(apply_permutation(inst.matrix, order));
        } else {
            throw std::invalid_argument("unknown benchmark algorithm: " + algo);
        }
        e.runtime_ms = ms_since(t0);
        out.push_back(std::move(e));
    }
    return out;
}

struct Bucket {
    std::string label;
    long lo = 0;
    long hi = 0;
};

std::vector<Bucket> parse_buckets(std::string spec) {
    // presets mirroring the usual benchmark layouts
    if (spec == "t1") spec = "10,20,30,50,70";
    if (spec == "t2") spec = "20-50,55-80,85-110,115-140,145-160";
    std::vector<Bucket> out;
    std::stringstream ss(spec);
    std::string token;
    while (std::getline(ss, token, ',')) {
        const auto b = token.find_first_not_of(" \t");
        const auto e = token.find_last_not_of(" \t");
        if (b == std::string::npos) continue;
        token = token.substr(b, e - b + 1);
        try {
            const auto dash = token.find('-');
            if (dash == std::string::npos) {
                const long v = std::stol(token);
                out.push_back({token, v, v});
            } else {
                const long lo = std::stol(token.substr(0, dash));
                const long hi = std::stol(token.substr(dash + 1));
                out.push_back({token, lo, hi});
            }
        } catch (const std::exception&) {
            throw std::invalid_argument("invalid bucket token: " + token);
        }
    }
    std::sort(out.begin(), out.end(), [](const Bucket& a, const Bucket& b) { return a.lo < b.lo; });
    return out;
}

struct HeurAgg {
    double rel_sum = 0;
    double abs_sum = 0;
    double ms_sum = 0;
    int counted = 0;  // instances with a proven exact reference
    int runs = 0;
};

struct BucketAgg {
    long sort_key = 0;
    int instances = 0;
    double blocks_per_row_sum = 0;
    double exact_ms_sum = 0;
    int exact_runs = 0;
    int unproven = 0;
    std::map<std::string, HeurAgg> heuristics;
};

std::map<std::string, BucketAgg> aggregate(const BenchmarkReport& report,
                                           const std::vector<Bucket>& buckets,
                                           std::vector<std::string>& heuristic_names) {
    // group entries per instance, keeping first-seen instance order
    std::vector<std::string> instance_order;
    std::map<std::string, std::vector<const BenchEntry*>> per_instance;
    for (const auto& e : report.entries) {
        auto [it, fresh] = per_instance.try_emplace(e.instance_id);
        if (fresh) instance_order.push_back(e.instance_id);
        it->second.push_back(&e);
        if (e.algorithm != "exact" &&
            std::find(heuristic_names.begin(), heuristic_names.end(), e.algorithm) ==
                heuristic_names.end()) {
            heuristic_names.push_back(e.algorithm);
        }
    }
    auto label_for = [&](int cols) -> std::pair<std::string, long> {
        if (buckets.empty()) return {std::to_string(cols), cols};
        for (const auto& b : buckets) {
            if (cols >= b.lo && cols <= b.hi) return {b.label, b.lo};
        }
        return {"other", std::numeric_limits<long>::max()};
    };
    std::map<std::string, BucketAgg> agg;
    for (const auto& id : instance_order) {
        const auto& entries = per_instance[id];
        const BenchEntry* exact = nullptr;
        for (const auto* e : entries) {
            if (e->algorithm == "exact") exact = e;
        }
        const int cols = entries.front()->cols;
        const auto [label, key] = label_for(cols);
        BucketAgg& b = agg[label];
        b.sort_key = key;
        b.instances += 1;
        if (exact != nullptr) {
            b.exact_runs += 1;
            b.exact_ms_sum += exact->runtime_ms;
            if (exact->optimal) {
                if (entries.front()->rows > 0) {
                    b.blocks_per_row_sum +=
                        static_cast<double>(exact->blocks) / entries.front()->rows;
                }
            } else {
                b.unproven += 1;
            }
        }
        for (const auto* e : entries) {
            if (e->algorithm == "exact") continue;
            HeurAgg& h = b.heuristics[e->algorithm];
            h.runs += 1;
            h.ms_sum += e->runtime_ms;
            if (exact != nullptr && exact->optimal) {
                const double rel = exact->blocks > 0
                                       ? 100.0 * (static_cast<double>(e->blocks) / exact->blocks - 1.0)
                                       : 0.0;
                h.rel_sum += rel;
                h.abs_sum += static_cast<double>(e->blocks - exact->blocks);
                h.counted += 1;
            }
        }
    }
    return agg;
}

std::vector<std::pair<std::string, BucketAgg>> sorted_buckets(
    const std::map<std::string, BucketAgg>& agg) {
    std::vector<std::pair<std::string, BucketAgg>> rows(agg.begin(), agg.end());
    std::sort(rows.begin(), rows.end(),
              [](const auto& a, const auto& b) { return a.second.sort_key < b.second.sort_key; });
    return rows;
}

}  // namespace

BenchmarkReport run_benchmark(const std::vector<BenchInstance>& instances,
                              const BenchConfig& cfg) {
    if (instances.empty()) throw std::invalid_argument("empty corpus");
    std::vector<std::vector<BenchEntry>> slots(instances.size());
    const int workers = std::max(1, cfg.workers);
    if (workers == 1) {
        for (std::size_t i = 0; i < instances.size(); ++i) {
            slots[i] = run_instance(instances[i], cfg);
        }
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                while (true) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= instances.size()) return;
                    try {
                        slots[i] = run_instance(instances[i], cfg);
                    } catch (...) {
                        const std::lock_guard<std::mutex> lock(failure_mutex);
                        if (!failure) failure = std::current_exception();
                    }
                }
            });
        }
        for (auto& t : pool) t.join();
        if (failure) std::rethrow_exception(failure);
    }
    BenchmarkReport report;
    for (auto& s : slots) {
        for (auto& e : s) report.entries.push_back(std::move(e));
    }
    return report;
}

std::string report_table(const BenchmarkReport& report, const std::string& bucket_spec) {
    const auto buckets = parse_buckets(bucket_spec);
    std::vector<std::string> heuristics;
    const auto agg = aggregate(report, buckets, heuristics);
    std::ostringstream out;
    out << std::fixed << std::setprecision(1);
    out << std::setw(10) << "#columns" << std::setw(6) << "n" << std::setw(12) << "blocks/row"
        << std::setw(10) << "t[ms]";
    for (const auto& h : heuristics) {
        out << std::setw(static_cast<int>(h.size()) + 16) << (h + " gap[rel/abs]") << std::setw(10)
            << "t[ms]";
    }
    out << "\n";
    for (const auto& [label, b] : sorted_buckets(agg)) {
        out << std::setw(10) << label << std::setw(6) << b.instances;
        const int proven = b.exact_runs - b.unproven;
        if (proven > 0) {
            out << std::setw(12) << b.blocks_per_row_sum / proven;
        } else {
            out << std::setw(12) << "-";
        }
        if (b.exact_runs > 0) {
            out << std::setw(10) << b.exact_ms_sum / b.exact_runs;
        } else {
            out << std::setw(10) << "-";
        }
        for (const auto& name : heuristics) {
            const auto it = b.heuristics.find(name);
            if (it == b.heuristics.end() || it->second.counted == 0) {
                out << std::setw(static_cast<int>(name.size()) + 16) << "-";
            } else {
                std::ostringstream gap;
                gap << std::fixed << std::setprecision(1)
                    << it->second.rel_sum / it->second.counted << "/"
                    << it->second.abs_sum / it->second.counted;
                out << std::setw(static_cast<int>(name.size()) + 16) << gap.str();
            }
            if (it == b.heuristics.end() || it->second.runs == 0) {
                out << std::setw(10) << "-";
            } else {
                out << std::setw(10) << it->second.ms_sum / it->second.runs;
            }
        }
        out << "\n";
        if (b.unproven > 0) {
            out << "    (" << b.unproven
                << " instance(s) without proven optimum: excluded from gap means, see lower bounds)\n";
        }
    }
    return std::move(out).str();
}

std::string report_json(const BenchmarkReport& report, const std::string& bucket_spec) {
    using nlohmann::json;
    const auto buckets = parse_buckets(bucket_spec);
    std::vector<std::string> heuristics;
    const auto agg = aggregate(report, buckets, heuristics);
    std::map<std::string, const BenchEntry*> exact_of;
    for (const auto& e : report.entries) {
        if (e.algorithm == "exact") exact_of[e.instance_id] = &e;
    }
    json doc;
    doc["entries"] = json::array();
    for (const auto& e : report.entries) {
        json row{{"instance", e.instance_id}, {"rows", e.rows},       {"cols", e.cols},
                 {"algorithm", e.algorithm},  {"blocks", e.blocks},   {"runtime_ms", e.runtime_ms},
                 {"optimal", e.optimal}};
        if (e.algorithm == "exact" && !e.optimal) {
            row["blocks_lower_bound"] = e.blocks_lower_bound;
        }
        if (e.algorithm != "exact") {
            const auto it = exact_of.find(e.instance_id);
            if (it != exact_of.end() && !it->second->optimal) {
                // the true optimum sits between the certified bound and the
                // best order found, so the gap is only known as an interval
                const auto* exact = it->second;
                json interval = json::array();
                interval.push_back(exact->blocks > 0
                                       ? 100.0 * (static_cast<double>(e.blocks) / exact->blocks - 1.0)
                                       : 0.0);
                if (exact->blocks_lower_bound > 0) {
                    interval.push_back(
                        100.0 * (static_cast<double>(e.blocks) / exact->blocks_lower_bound - 1.0));
                } else {
                    interval.push_back(nullptr);
                }
                row["rel_gap_interval_percent"] = std::move(interval);
            }
        }
        doc["entries"].push_back(std::move(row));
    }
    doc["buckets"] = json::array();
    for (const auto& [label, b] : sorted_buckets(agg)) {
        json row{{"bucket", label}, {"instances", b.instances}, {"unproven", b.unproven}};
        const int proven = b.exact_runs - b.unproven;
        if (proven > 0) row["exact_mean_blocks_per_row"] = b.blocks_per_row_sum / proven;
        if (b.exact_runs > 0) row["exact_mean_runtime_ms"] = b.exact_ms_sum / b.exact_runs;
        json hs = json::object();
        for (const auto& [name, h] : b.heuristics) {
            json hrow{{"runs", h.runs}};
            if (h.runs > 0) hrow["mean_runtime_ms"] = h.ms_sum / h.runs;
            if (h.counted > 0) {
                hrow["mean_rel_gap_percent"] = h.rel_sum / h.counted;
                hrow["mean_abs_gap"] = h.abs_sum / h.counted;
            }
            hs[name] = std::move(hrow);
        }
        row["heuristics"] = std::move(hs);
        doc["buckets"].push_back(std::move(row));
    }
    return doc.dump(2) + "\n";
}

}  // namespace lindiag
