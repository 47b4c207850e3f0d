#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

// Hot-loop kernels. Every operation exists twice: a scalar reference in
// kernels::scalar and a vector variant in kernels::avx2. Both follow one
// op-order contract (no FMA, identical expression trees), so results are
// bit-identical and a runtime dispatcher can pick either freely. The
// top-level functions route through the dispatcher.

namespace relaysim::kernels {

// counter-based stream identity: one (seed, chunk, tag) triple names an
// independent substream; blocks within it are addressed by a 64-bit index
struct StreamKey {
    std::uint64_t seed = 0;
    std::uint32_t chunk = 0;
    std::uint32_t tag = 0;
};

struct IndexedMax {
    double value;
    std::size_t index;
};

enum class Backend { scalar, avx2 };

bool avx2_available();
Backend active_backend();
// returns previous backend; requesting avx2 on a host without it throws
Backend force_backend(Backend b);

// fill out with uniforms on (0,1], consuming blocks [block0, block0 + ceil(n/2))
void fill_uniform(const StreamKey& key, std::uint64_t block0, std::span<double> out);
// x <- -log(x) elementwise; inputs must be in (0,1]
void neg_log(std::span<double> x);
double min_value(std::span<const double> x);
double max_value(std::span<const double> x);
// maximum element and its index; first occurrence wins ties
IndexedMax argmax(std::span<const double> x);
// max over i of s*num[i] / (b*den[i] + 1); first occurrence wins ties
IndexedMax ratio_argmax(std::span<const double> num, std::span<const double> den,
                        double s, double b);

namespace scalar {
void fill_uniform(const StreamKey& key, std::uint64_t block0, std::span<double> out);
void neg_log(std::span<double> x);
double min_value(std::span<const double> x);
double max_value(std::span<const double> x);
IndexedMax argmax(std::span<const double> x);
IndexedMax ratio_argmax(std::span<const double> num, std::span<const double> den,
                        double s, double b);
// single block -> two u64 words (exposed for known-answer tests)
void philox_block(const StreamKey& key, std::uint64_t block, std::uint64_t out[2]);
// raw 4x32 form matching published test vectors
void philox4x32_raw(const std::uint32_t ctr[4], const std::uint32_t key[2],
                    std::uint32_t out[4]);
} // namespace scalar

namespace avx2 {
void fill_uniform(const StreamKey& key, std::uint64_t block0, std::span<double> out);
void neg_log(std::span<double> x);
double min_value(std::span<const double> x);
double max_value(std::span<const double> x);
IndexedMax argmax(std::span<const double> x);
IndexedMax ratio_argmax(std::span<const double> num, std::span<const double> den,
                        double s, double b);
} // namespace avx2

namespace detail {
// shared scalar pieces, also used by the avx2 tail loops
inline constexpr double kTwoPow53Inv = 0x1.0p-53;

inline double u64_to_unit(std::uint64_t x) {
    return static_cast<double>((x >> 11) + 1) * kTwoPow53Inv;
}

double log_core(double x);   // table-free log for x in (0,1]; shared op order
} // namespace detail

} // namespace relaysim::kernels
