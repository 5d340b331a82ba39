#pragma once

#include <cstdint>

namespace quot {

/// Counter-based deterministic generator: the value stream is a pure
/// function of (seed, stream, call index), so parallel tasks seeded with
/// (seed, task index) reproduce independently of scheduling and platform.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
        : seed_(seed), stream_(stream) {}

    std::uint64_t next_u64() {
        // splitmix64 applied to a per-call key.
        std::uint64_t z = seed_ + 0x9E3779B97F4A7C15ull * (stream_ + 1) + 0xBF58476D1CE4E5B9ull * ++counter_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, bound), bound >= 1. Debiased by rejection.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t r = next_u64();
            if (r >= threshold) return r % bound;
        }
    }

    /// Uniform integer in the inclusive box [lo, hi].
    long long int_in(long long lo, long long hi) {
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

private:
    std::uint64_t seed_;
    std::uint64_t stream_;
    std::uint64_t counter_ = 0;
};

} // namespace quot
