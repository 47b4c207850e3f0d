#pragma once

#include "relaysim/channel.hpp"
#include "relaysim/fading.hpp"
#include "relaysim/rng.hpp"
#include "relaysim/schedulers.hpp"

#include <cstdint>

namespace relaysim {

struct Estimate {
    double mean = 0.0;
    double halfwidth95 = 0.0; // 1.96 * sample std / sqrt(trials)
    long trials = 0;
    std::uint64_t seed = 0;
};

// trials are partitioned into fixed-size chunks, one substream per chunk;
// partial sums reduce in chunk order, so results are byte-identical for
// any thread count
inline constexpr long kChunkTrials = 4096;

// fraction of realizations where the direct route strictly beats the
// half-duplex relay route
Estimate estimate_direct_wins(const RelayScenario& sc, const FadingLaw& law_h,
                              const FadingLaw& law_g, long trials, std::uint64_t seed,
                              int threads = 1, std::uint32_t tag = stream_tag::direct_wins);

// mean spectral efficiency of the routing scheduler
Estimate estimate_route_avg_se(const RelayScenario& sc, const FadingLaw& law_h,
                               const FadingLaw& law_g, long trials, std::uint64_t seed,
                               int threads = 1, std::uint32_t tag = stream_tag::route);

enum class BroadcastProtocol { orthogonal, simultaneous };

// mean spectral efficiency of a broadcast protocol; h carries the
// base-station links, g the relay links
Estimate estimate_broadcast_avg_se(BroadcastProtocol protocol, const BroadcastScenario& sc,
                                   const FadingLaw& law_h, const FadingLaw& law_g, long trials,
                                   std::uint64_t seed, int threads = 1, std::uint32_t tag = 0);

// quadrature value of E[log2(1 + snr * max of K powers)] (no asymptotics)
double expected_max_se(const FadingLaw& law, double snr, long K);

// quadrature value of the exact direct-wins probability at finite K
double exact_direct_wins(const RelayScenario& sc, const FadingLaw& law_h,
                         const FadingLaw& law_g);

} // namespace relaysim
