#pragma once

#include <cstdint>

namespace nilspectra {

/// Counter-based deterministic RNG (splitmix64 finalizer on a keyed
/// counter). Sample i, dimension j always yields the same value for a
/// given seed, independent of how samples are partitioned over workers.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

    static std::uint64_t mix(std::uint64_t x) {
        x += 0x9E3779B97F4A7C15ULL;
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
        return x ^ (x >> 31);
    }

    /// Uniform in [0, 1).
    double uniform(std::uint64_t counter, std::uint64_t dim) const {
        const std::uint64_t key =
            mix(seed_ ^ (counter * 0x632BE59BD9B4E019ULL) ^ (dim * 0x2545F4914F6CDD1DULL));
        return static_cast<double>(key >> 11) * 0x1.0p-53;
    }

    /// Uniform in [lo, hi).
    double uniform(std::uint64_t counter, std::uint64_t dim, double lo, double hi) const {
        return lo + (hi - lo) * uniform(counter, dim);
    }

private:
    std::uint64_t seed_;
};

/// Thread cap from NILSPECTRA_THREADS (>=1); hardware concurrency otherwise.
int thread_budget();

}  // namespace nilspectra
