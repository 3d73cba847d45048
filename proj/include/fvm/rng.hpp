#pragma once

#include <array>
#include <cstdint>

namespace fvm {

/// Counter-based Philox4x32-10 generator.
///
/// Every API in this library takes an explicit 64-bit seed; independent
/// streams (per path, per block) are addressed through the stream id, so
/// parallel generation is reproducible regardless of scheduling. Draw order
/// is part of the output contract: identical (seed, stream) produce
/// bit-identical sequences.
class Philox {
public:
    explicit Philox(std::uint64_t seed, std::uint64_t stream = 0) noexcept;

    std::uint32_t next_u32() noexcept;
    std::uint64_t next_u64() noexcept;

    /// Uniform double in the open interval (0, 1).
    double next_uniform() noexcept;

    /// Standard normal via Box-Muller (one value cached per pair).
    double next_normal() noexcept;

    /// SplitMix64 stream derivation: index-th derived seed of a master seed.
    static std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) noexcept;

private:
    void refill() noexcept;

    std::array<std::uint32_t, 2> key_;
    std::array<std::uint32_t, 4> counter_;
    std::array<std::uint32_t, 4> block_{};
    int pos_ = 4; // forces refill on first draw
    double cached_normal_ = 0.0;
    bool has_cached_normal_ = false;
};

} // namespace fvm
