#pragma once

#include "relaysim/fading.hpp"
#include "relaysim/parent.hpp"

namespace relaysim {

// uplink-routing setup: K candidate users, each reachable directly from the
// base station (per-link snr_b) or via a relay hop (snr_r) whose traffic
// must cross a backhaul pipe of snr snr_B
struct RelayScenario {
    double snr_b = 1.0;
    double snr_r = 10.0;
    double snr_B = 100.0;
    long K = 1;

    void validate() const; // throws DomainError
};

// downlink setup: V near users served by the base station, U far users by
// the relay; bandwidth fractions beta_B (backhaul), beta_F (far), beta_N
// (near) must partition the band
struct BroadcastScenario {
    double snr_F_b = 1.0;   // base station as seen by far users (interference)
    double snr_F_r = 100.0; // relay to far users
    double snr_N_b = 100.0; // base station to near users
    double snr_N_r = 1.0;   // relay as seen by near users (interference)
    double snr_B = 1000.0;
    double beta_B = 0.25;
    double beta_F = 0.25;
    double beta_N = 0.5;
    long U = 1;
    long V = 1;

    void validate() const;
};

// log2(1 + x); throws DomainError for x < 0
double spectral_efficiency(double x);

// far user: relay signal, base-station transmission as interference
double sinr_far(double g_pow, double h_pow, const BroadcastScenario& sc);
// near user: base-station signal, relay transmission as interference
double sinr_near(double h_pow, double g_pow, const BroadcastScenario& sc);

// law of s*G / (1 + b*H) for independent unit-exponential G, H (closed form)
ParentDistribution sinr_parent_exponential(double signal_snr, double interferer_snr);

// same construction for arbitrary signal/interferer power laws; cdf/pdf are
// evaluated by adaptive quadrature over the interferer, pdf' by finite
// differences. used when either law is not rayleigh.
ParentDistribution sinr_parent_quadrature(const FadingLaw& signal, const FadingLaw& interferer,
                                          double signal_snr, double interferer_snr);

} // namespace relaysim
