#include "relaysim/schedulers.hpp"

#include "relaysim/errors.hpp"
#include "relaysim/kernels.hpp"

#include <algorithm>

namespace relaysim {

namespace {

void require_k(std::span<const double> h, std::span<const double> g, long k, const char* who) {
    if (h.size() != static_cast<std::size_t>(k) || g.size() != static_cast<std::size_t>(k)) {
        throw LengthMismatchError(std::string(who) + ": power spans must have scenario length");
    }
}

} // namespace

RealizationOutcome max_route_se(std::span<const double> h_pow, std::span<const double> g_pow,
                                const RelayScenario& sc) {
    sc.validate();
    require_k(h_pow, g_pow, sc.K, "max_route_se");

    double direct = spectral_efficiency(sc.snr_b * kernels::max_value(h_pow));
    double relay_hop = spectral_efficiency(sc.snr_r * kernels::max_value(g_pow));
    double backhaul = spectral_efficiency(sc.snr_B);
    double two_hop = 0.5 * std::min(backhaul, relay_hop);

    RealizationOutcome out;
    out.backhaul_limited = backhaul <= relay_hop;
    if (direct >= two_hop) {
        out.rate = direct;
        out.path = RoutePath::direct;
    } else {
        out.rate = two_hop;
        out.path = RoutePath::two_hop;
    }
    return out;
}

RealizationOutcome orthogonal_se(std::span<const double> h_near, std::span<const double> g_far,
                                 const BroadcastScenario& sc) {
    sc.validate();
    if (h_near.size() != static_cast<std::size_t>(sc.V)) {
        throw LengthMismatchError("orthogonal_se: near span must have length V");
    }
    if (g_far.size() != static_cast<std::size_t>(sc.U)) {
        throw LengthMismatchError("orthogonal_se: far span must have length U");
    }

    auto best_near = kernels::argmax(h_near);
    auto best_far = kernels::argmax(g_far);
    double near_rate = sc.beta_N * spectral_efficiency(sc.snr_N_b * best_near.value);
    double far_wireless = sc.beta_F * spectral_efficiency(sc.snr_F_r * best_far.value);
    double backhaul = sc.beta_B * spectral_efficiency(sc.snr_B);

    RealizationOutcome out;
    out.near_index = best_near.index;
    out.far_index = best_far.index;
    out.backhaul_limited = backhaul <= far_wireless;
    out.rate = near_rate + std::min(backhaul, far_wireless);
    return out;
}

RealizationOutcome simultaneous_se(std::span<const double> h_near, std::span<const double> g_near,
                                   std::span<const double> h_far, std::span<const double> g_far,
                                   const BroadcastScenario& sc) {
    sc.validate();
    if (h_near.size() != static_cast<std::size_t>(sc.V) ||
        g_near.size() != static_cast<std::size_t>(sc.V)) {
        throw LengthMismatchError("simultaneous_se: near spans must have length V");
    }
    if (h_far.size() != static_cast<std::size_t>(sc.U) ||
        g_far.size() != static_cast<std::size_t>(sc.U)) {
        throw LengthMismatchError("simultaneous_se: far spans must have length U");
    }

    // both stations share the non-backhaul band; each user's own station is
    // the signal, the other one the interferer
    auto best_near = kernels::ratio_argmax(h_near, g_near, sc.snr_N_b, sc.snr_N_r);
    auto best_far = kernels::ratio_argmax(g_far, h_far, sc.snr_F_r, sc.snr_F_b);
    double share = sc.beta_F + sc.beta_N;
    double near_rate = share * spectral_efficiency(best_near.value);
    double far_wireless = share * spectral_efficiency(best_far.value);
    double backhaul = sc.beta_B * spectral_efficiency(sc.snr_B);

    RealizationOutcome out;
    out.near_index = best_near.index;
    out.far_index = best_far.index;
    out.backhaul_limited = backhaul <= far_wireless;
    out.rate = near_rate + std::min(backhaul, far_wireless);
    return out;
}

} // namespace relaysim
