#pragma once

#include <cstdint>

namespace kitaev {

/// Counter-based 64-bit generator (splitmix64 finalizer over an advancing
/// Weyl sequence). Bit-exact across platforms, which keeps seeded outputs
/// byte-identical regardless of worker count or build host.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform double in [-1, 1) using the top 53 bits.
    double next_symmetric() {
        return static_cast<double>(next_u64() >> 11) * (1.0 / 9007199254740992.0) * 2.0 - 1.0;
    }

private:
    std::uint64_t state_;
};

} // namespace kitaev
