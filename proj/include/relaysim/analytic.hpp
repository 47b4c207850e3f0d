#pragma once

#include "relaysim/channel.hpp"
#include "relaysim/evt.hpp"
#include "relaysim/fading.hpp"

namespace relaysim {

// large-K approximation of the routing decision. A = "the relay's wireless
// hop stays below the backhaul cap", C = "the direct path wins".
struct DirectWinsBreakdown {
    double z1 = 0.0; // exp((d_g - 2 d_h) / c_g)
    double z2 = 0.0; // exp((d_g - C_B) / c_g)
    double z3 = 0.0; // exp((d_h - C_B/2) / c_h)
    double p_uncapped = 0.0;            // P(A)   = exp(-z2)
    double p_direct_given_capped = 0.0; // P(C|~A) = 1 - exp(-z3)
    double p_direct_and_uncapped = 0.0; // P(C & A)
    double p_direct_wins = 0.0;         // total P(C)
    RateGumbelConstants direct_link;    // (c_h, d_h) at snr_b
    RateGumbelConstants relay_link;     // (c_g, d_g) at snr_r
};

// asymptotic probability that scheduling picks the direct route over the
// half-duplex relay route, for K -> infinity with Gumbel-domain fading.
// throws TailDomainError when a parent law fails the light-tail precheck.
DirectWinsBreakdown direct_wins_asymptotic(const RelayScenario& sc, const FadingLaw& law_h,
                                           const FadingLaw& law_g);

// asymptotic mean spectral efficiency of the orthogonal-bands broadcast
// protocol (near users from base station on beta_N, far users via relay on
// beta_F, relay fed over beta_B backhaul)
double orthogonal_avg_se_asymptotic(const BroadcastScenario& sc, const FadingLaw& near_law,
                                    const FadingLaw& far_law);

// asymptotic mean spectral efficiency of the spectrum-reuse protocol; uses
// the closed-form SINR law for rayleigh/rayleigh and quadrature otherwise
double simultaneous_avg_se_asymptotic(const BroadcastScenario& sc, const FadingLaw& law_h,
                                      const FadingLaw& law_g);

// light-tail admission check shared by the closed forms: survival-decade
// grid 1e-2..1e-10; passes when the strict convergence flag is set or the
// final hazard-ratio deviation is within 0.05
void ensure_light_tail(const ParentDistribution& p);

// E1 evaluated from the log of its argument, with asymptotic guards on
// both flanks (ln_z < -36 and ln_z > 709)
double exp_integral_from_log(double ln_z);

} // namespace relaysim
