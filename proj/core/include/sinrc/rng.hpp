#pragma once

#include <cmath>
#include <cstdint>

namespace sinrc {

/// Counter-based generator: each draw is a stateless mix of (seed, counter),
/// so streams can be split deterministically and results do not depend on
/// call interleaving across threads.
class Rng {
public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
        : seed_(mix(seed + 0x9e3779b97f4a7c15ull * (stream + 1))) {}

    std::uint64_t next_u64() { return mix(seed_ + 0x9e3779b97f4a7c15ull * ++ctr_); }

    /// Uniform in [0, 1).
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    /// Log-uniform in [lo, hi]; requires 0 < lo <= hi.
    double log_uniform(double lo, double hi) {
        if (lo == hi) return lo;
        return std::exp2(uniform(std::log2(lo), std::log2(hi)));
    }

    /// Uniform integer in [lo, hi] inclusive.
    int uniform_int(int lo, int hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<int>(next_u64() % span);
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xbf58476d1ce4e5b9ull;
        z ^= z >> 27;
        z *= 0x94d049bb133111ebull;
        z ^= z >> 31;
        return z;
    }

    std::uint64_t seed_;
    std::uint64_t ctr_ = 0;
};

} // namespace sinrc
