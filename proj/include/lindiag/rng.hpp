#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace lindiag {

/// Seeded RNG with hand-rolled draw helpers. mt19937_64 output is fixed by
/// the standard; std::uniform_*_distribution is not, so reproducible
/// streams must not go through it.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    Rng(std::uint64_t seed, std::uint64_t stream)
        : engine_(seed ^ (0x9E3779B97F4A7C15ULL * (stream + 1))) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform in [0, 1).
    double next_unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [lo, hi], inclusive.
    int next_int(int lo, int hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<int>(engine_() % span);
    }

    bool next_bool(double p) { return next_unit() < p; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (int i = static_cast<int>(v.size()) - 1; i > 0; --i) {
            const int j = next_int(0, i);
            std::swap(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(j)]);
        }
    }

    std::vector<int> permutation(int n) {
        std::vector<int> p(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
        shuffle(p);
        return p;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace lindiag
