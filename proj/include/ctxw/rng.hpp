#pragma once

#include <cstdint>
#include <random>

namespace ctxw {

// Repo-wide deterministic generator: std::mt19937_64 (a 64-bit twisted
// generalized feedback shift register, fully specified by the standard) fed
// through our own 53-bit conversion. std::uniform_real_distribution is
// implementation-defined, so it is never used.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 engine_;
};

}  // namespace ctxw
