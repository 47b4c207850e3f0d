#pragma once

#include "relaysim/kernels.hpp"

#include <cstdint>
#include <span>

namespace relaysim {

// sequential view over one counter-based substream. Every fill consumes
// whole 128-bit blocks (two doubles per block, odd tails discard a word),
// so the block cursor depends only on the sequence of fill sizes — never
// on threading or backend choice.
struct UniformStream {
    kernels::StreamKey key;
    std::uint64_t next_block = 0;

    explicit UniformStream(std::uint64_t seed, std::uint32_t chunk = 0, std::uint32_t tag = 0)
        : key{seed, chunk, tag} {}

    void fill(std::span<double> out) {
        kernels::fill_uniform(key, next_block, out);
        next_block += (out.size() + 1) / 2;
    }
};

// purpose tags keep substreams of one seed disjoint across uses; sweep
// runners add the row index in the high bits via row_tag
namespace stream_tag {
inline constexpr std::uint32_t generic = 0;
inline constexpr std::uint32_t direct_wins = 1;
inline constexpr std::uint32_t route = 2;
inline constexpr std::uint32_t orthogonal = 3;
inline constexpr std::uint32_t simultaneous = 4;
inline constexpr std::uint32_t test_a = 250;
inline constexpr std::uint32_t test_b = 251;
} // namespace stream_tag

inline constexpr std::uint32_t row_tag(std::uint32_t purpose, std::uint32_t row) {
    return purpose | (row << 8);
}

} // namespace relaysim
