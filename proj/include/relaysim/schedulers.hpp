#pragma once

#include "relaysim/channel.hpp"

#include <cstddef>
#include <span>

namespace relaysim {

enum class RoutePath { direct, two_hop };

// per-realization scheduling decision. rate is the end-to-end spectral
// efficiency in bit/s/Hz. path is set by max_route_se; far_index/near_index
// by the broadcast protocols. backhaul_limited reports whether the backhaul
// term achieved the min (ties count as limited).
struct RealizationOutcome {
    double rate = 0.0;
    RoutePath path = RoutePath::direct;
    std::size_t near_index = 0;
    std::size_t far_index = 0;
    bool backhaul_limited = false;
};

// pick the better of best-direct-user and half-duplex best-relayed-user;
// ties go to the direct path
RealizationOutcome max_route_se(std::span<const double> h_pow, std::span<const double> g_pow,
                                const RelayScenario& sc);

// orthogonal split: near users on beta_N from the base station, far users
// on beta_F from the relay, relay fed over beta_B of backhaul
RealizationOutcome orthogonal_se(std::span<const double> h_near, std::span<const double> g_far,
                                 const BroadcastScenario& sc);

// spectrum reuse: base station and relay transmit together on beta_F+beta_N,
// each link seeing the other as interference
RealizationOutcome simultaneous_se(std::span<const double> h_near, std::span<const double> g_near,
                                   std::span<const double> h_far, std::span<const double> g_far,
                                   const BroadcastScenario& sc);

} // namespace relaysim
