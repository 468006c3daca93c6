#pragma once

#include <cstdint>
#include <random>

namespace evoternary {

/// Deterministic random source. All randomness in the library flows through
/// this type so that a fixed seed reproduces byte-identical results anywhere.
/// std::mt19937_64 output is fully specified by the standard; the bounded
/// draws below avoid std::uniform_int_distribution, whose mapping is
/// implementation-defined.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform draw from [0, n) by rejection. n must be nonzero.
    std::uint64_t below(std::uint64_t n) {
        // Largest multiple of n that fits; draws at or above it would bias.
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v;
        do {
            v = engine_();
        } while (v >= limit);
        return v % n;
    }

    /// Uniform draw from the inclusive range [lo, hi].
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(below(span));
    }

    bool coin() { return (engine_() & 1u) != 0; }

private:
    std::mt19937_64 engine_;
};

}  // namespace evoternary
