#include "relaysim/analytic.hpp"

#include "relaysim/errors.hpp"
#include "relaysim/special_functions.hpp"

#include <cfloat>
#include <cmath>
#include <numbers>

namespace relaysim {

namespace {

// y = z3 sqrt(2 z1) + 1/sqrt(2 z1), assembled from exponents so that huge
// z3 against tiny z1 cancels in the exponent instead of overflowing
double tail_gaussian_argument(double e1, double e3) {
    double half = 0.5 * (std::numbers::ln2 + e1);
    return std::exp(e3 + half) + std::exp(-half);
}

// P(C & A) tail term: algebraically sqrt(pi/z1) e^{1/(4 z1)} Q(y), but
// evaluated as sqrt(pi/z1) * erfcx(y/sqrt 2)/2 * exp(-(z1 z3^2 + z3)),
// which never forms e^{1/(4 z1)} or the doubly-tiny Q value separately
double direct_and_uncapped_tail(double e1, double e3) {
    double z1 = std::exp(e1);
    double z3 = std::exp(e3);
    if (z1 < DBL_MIN) return std::exp(-z3); // exact z1 -> 0 limit
    if (std::isinf(z1)) return 0.0;
    double y = tail_gaussian_argument(e1, e3);
    double w = std::exp(e1 + 2.0 * e3) + z3; // z1 z3^2 + z3
    double damp = std::exp(-w);              // 0 when w overflows, no NaN
    if (damp == 0.0) return 0.0;
    return std::sqrt(std::numbers::pi / z1) * 0.5 *
           erfcx_positive(y / std::numbers::sqrt2) * damp;
}

ParentDistribution checked_parent(const FadingLaw& law) {
    ParentDistribution p = law.parent();
    ensure_light_tail(p);
    return p;
}

} // namespace

void ensure_light_tail(const ParentDistribution& p) {
    double grid[9];
    double sf = 1e-2;
    for (int i = 0; i < 9; ++i, sf *= 1e-1) grid[i] = upper_quantile(p, sf);
    TypeOneReport rep = check_type1(p, grid);
    double final_dev = std::fabs(rep.ratios.back() + 1.0);
    if (!rep.converged && !(final_dev <= 0.05)) {
        throw TailDomainError("ensure_light_tail: " + p.name +
                              " is not in the light-tail class (hazard ratio " +
                              std::to_string(rep.ratios.back()) + " at the 1e-10 tail)");
    }
}

double exp_integral_from_log(double ln_z) {
    if (ln_z < -36.0) return -kEulerGamma - ln_z;
    if (ln_z > 709.0) return 0.0;
    return exp_integral(std::exp(ln_z));
}

DirectWinsBreakdown direct_wins_asymptotic(const RelayScenario& sc, const FadingLaw& law_h,
                                           const FadingLaw& law_g) {
    sc.validate();
    if (sc.K < 2) throw DomainError("direct_wins_asymptotic: requires K >= 2");
    ParentDistribution ph = checked_parent(law_h);
    ParentDistribution pg = checked_parent(law_g);

    DirectWinsBreakdown out;
    out.direct_link = to_rate_constants(normalizing_constants(ph, sc.K), sc.snr_b);
    out.relay_link = to_rate_constants(normalizing_constants(pg, sc.K), sc.snr_r);
    double c_h = out.direct_link.c, d_h = out.direct_link.d;
    double c_g = out.relay_link.c, d_g = out.relay_link.d;
    double cap = spectral_efficiency(sc.snr_B);

    double e1 = (d_g - 2.0 * d_h) / c_g;
    double e2 = (d_g - cap) / c_g;
    double e3 = (d_h - 0.5 * cap) / c_h;
    out.z1 = std::exp(e1);
    out.z2 = std::exp(e2);
    out.z3 = std::exp(e3);

    out.p_uncapped = std::exp(-out.z2);
    out.p_direct_given_capped = -std::expm1(-out.z3);
    out.p_direct_and_uncapped =
        direct_and_uncapped_tail(e1, e3) + out.p_uncapped * (-std::expm1(-out.z3));
    out.p_direct_wins =
        out.p_direct_and_uncapped + out.p_direct_given_capped * (1.0 - out.p_uncapped);
    return out;
}

double orthogonal_avg_se_asymptotic(const BroadcastScenario& sc, const FadingLaw& near_law,
                                    const FadingLaw& far_law) {
    sc.validate();
    if (sc.U < 2 || sc.V < 2) {
        throw DomainError("orthogonal_avg_se_asymptotic: requires U, V >= 2");
    }
    ParentDistribution pn = checked_parent(near_law);
    ParentDistribution pf = checked_parent(far_law);

    RateGumbelConstants near_c = to_rate_constants(normalizing_constants(pn, sc.V), sc.snr_N_b);
    RateGumbelConstants far_c = to_rate_constants(normalizing_constants(pf, sc.U), sc.snr_F_r);
    double cap = sc.beta_B * spectral_efficiency(sc.snr_B);

    // E[min(cap, beta_F * best far rate)] = cap - beta_F c_U E1(z) with the
    // crossing point z in Gumbel coordinates
    double ln_z = (sc.beta_F * far_c.d - cap) / (sc.beta_F * far_c.c);
    double correction = sc.beta_F * far_c.c * exp_integral_from_log(ln_z);
    return sc.beta_N * (near_c.c * kEulerGamma + near_c.d) + cap - correction;
}

double simultaneous_avg_se_asymptotic(const BroadcastScenario& sc, const FadingLaw& law_h,
                                      const FadingLaw& law_g) {
    sc.validate();
    if (sc.U < 2 || sc.V < 2) {
        throw DomainError("simultaneous_avg_se_asymptotic: requires U, V >= 2");
    }
    bool exponential = law_h.kind == FadingKind::rayleigh && law_g.kind == FadingKind::rayleigh;
    ParentDistribution near_sinr =
        exponential ? sinr_parent_exponential(sc.snr_N_b, sc.snr_N_r)
                    : sinr_parent_quadrature(law_h, law_g, sc.snr_N_b, sc.snr_N_r);
    ParentDistribution far_sinr =
        exponential ? sinr_parent_exponential(sc.snr_F_r, sc.snr_F_b)
                    : sinr_parent_quadrature(law_g, law_h, sc.snr_F_r, sc.snr_F_b);
    ensure_light_tail(near_sinr);
    ensure_light_tail(far_sinr);

    // the SINR law already folds in the link gains, so the rate map runs
    // at unit snr
    RateGumbelConstants near_c = to_rate_constants(normalizing_constants(near_sinr, sc.V), 1.0);
    RateGumbelConstants far_c = to_rate_constants(normalizing_constants(far_sinr, sc.U), 1.0);
    double share = sc.beta_F + sc.beta_N;
    double cap = sc.beta_B * spectral_efficiency(sc.snr_B);

    double ln_z = (share * far_c.d - cap) / (share * far_c.c);
    double correction = share * far_c.c * exp_integral_from_log(ln_z);
    return share * (near_c.c * kEulerGamma + near_c.d) + cap - correction;
}

} // namespace relaysim
