#pragma once

#include <cstdint>
#include <ostream>

namespace lindiag {

/// Seeded self-check suite: tour-length identity, weighted identity,
/// collapse round-trip, and the Hamiltonian-path gadget equivalence.
/// Prints one line per check; returns true when every trial passed.
bool run_verification(int trials, std::uint64_t seed, std::ostream& out);

}  // namespace lindiag
