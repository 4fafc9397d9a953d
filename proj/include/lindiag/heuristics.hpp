#pragma once

#include <cstdint>

#include "lindiag/matrix.hpp"

namespace lindiag {

struct HeuristicConfig {
    int seeds = 100;           // randomized restarts for multiseed_order
    std::uint64_t seed = 0;    // base seed
    bool polish = false;       // run polish_two_opt on the winning order
};

/// Greedy chain: start at the column with the most ones, then repeatedly
/// attach the unplaced column sharing the most rows with either end of the
/// chain, at that end (ties: heavier column, then smaller index).
ColumnPermutation rodgers_order(const BinaryMatrix& a);

/// Best of cfg.seeds greedy runs. Restart 0 uses the unperturbed
/// similarity; later restarts add uniform noise in [0, 0.5) to every pair
/// similarity, seeded per restart.
ColumnPermutation multiseed_order(const BinaryMatrix& a, const HeuristicConfig& cfg = {});

/// Reverses column sub-ranges while the block count strictly decreases;
/// first-improvement scan, i then j ascending.
ColumnPermutation polish_two_opt(const BinaryMatrix& a, const ColumnPermutation& p);

}  // namespace lindiag
