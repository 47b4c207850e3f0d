#include "relaysim/channel.hpp"

#include "relaysim/errors.hpp"
#include "relaysim/quadrature.hpp"

#include <cmath>
#include <memory>
#include <numbers>
#include <vector>

namespace relaysim {

void RelayScenario::validate() const {
    if (!(snr_b > 0.0) || !(snr_r > 0.0) || !(snr_B > 0.0)) {
        throw DomainError("RelayScenario: snr values must be positive");
    }
    if (K < 1) throw DomainError("RelayScenario: requires K >= 1");
}

void BroadcastScenario::validate() const {
    if (!(snr_F_b > 0.0) || !(snr_F_r > 0.0) || !(snr_N_b > 0.0) || !(snr_N_r > 0.0) ||
        !(snr_B > 0.0)) {
        throw DomainError("BroadcastScenario: snr values must be positive");
    }
    if (!(beta_B > 0.0) || !(beta_F > 0.0) || !(beta_N > 0.0)) {
        throw DomainError("BroadcastScenario: bandwidth fractions must be positive");
    }
    if (std::fabs(beta_B + beta_F + beta_N - 1.0) > 1e-12) {
        throw DomainError("BroadcastScenario: bandwidth fractions must sum to 1");
    }
    if (U < 1 || V < 1) throw DomainError("BroadcastScenario: requires U, V >= 1");
}

double spectral_efficiency(double x) {
    if (!(x >= 0.0)) throw DomainError("spectral_efficiency: requires x >= 0");
    return std::log1p(x) / std::numbers::ln2;
}

double sinr_far(double g_pow, double h_pow, const BroadcastScenario& sc) {
    return sc.snr_F_r * g_pow / (1.0 + sc.snr_F_b * h_pow);
}

double sinr_near(double h_pow, double g_pow, const BroadcastScenario& sc) {
    return sc.snr_N_b * h_pow / (1.0 + sc.snr_N_r * g_pow);
}

ParentDistribution sinr_parent_exponential(double signal_snr, double interferer_snr) {
    if (!(signal_snr > 0.0) || !(interferer_snr >= 0.0)) {
        throw DomainError("sinr_parent_exponential: requires signal_snr > 0, interferer_snr >= 0");
    }
    double s = signal_snr;
    double q = interferer_snr / signal_snr;
    ParentDistribution p;
    p.name = "sinr-exponential";
    p.survival = [s, q](double x) {
        if (x <= 0.0) return 1.0;
        return std::exp(-x / s) / (1.0 + q * x);
    };
    p.cdf = [s, q](double x) {
        if (x <= 0.0) return 0.0;
        // stable near 0: 1 - e^-t/(1+qx) with both pieces expanded
        double d = 1.0 + q * x;
        return 1.0 - std::exp(-x / s) / d;
    };
    p.pdf = [s, q](double x) {
        if (x < 0.0) return 0.0;
        double d = 1.0 + q * x;
        return std::exp(-x / s) * (1.0 / (s * d) + q / (d * d));
    };
    p.pdf_derivative = [s, q](double x) {
        if (x < 0.0) return 0.0;
        double d = 1.0 + q * x;
        return -std::exp(-x / s) *
               (1.0 / (s * s * d) + 2.0 * q / (s * d * d) + 2.0 * q * q / (d * d * d));
    };
    return p;
}

ParentDistribution sinr_parent_quadrature(const FadingLaw& signal, const FadingLaw& interferer,
                                          double signal_snr, double interferer_snr) {
    if (!(signal_snr > 0.0) || !(interferer_snr >= 0.0)) {
        throw DomainError("sinr_parent_quadrature: requires signal_snr > 0, interferer_snr >= 0");
    }
    auto sig = std::make_shared<ParentDistribution>(signal.parent());
    auto intf = std::make_shared<ParentDistribution>(interferer.parent());
    double s = signal_snr;
    double b = interferer_snr;
    // interferer support truncated where its survival drops to 1e-13; the
    // omitted integrand mass is below that in relative terms
    double t_hi = upper_quantile(*intf, 1e-13);
    std::vector<double> splits;
    for (double sf : {0.5, 1e-2, 1e-5, 1e-9}) splits.push_back(upper_quantile(*intf, sf));

    ParentDistribution p;
    p.name = "sinr-quadrature(" + signal.name() + "/" + interferer.name() + ")";
    p.survival = [=](double x) {
        if (x <= 0.0) return 1.0;
        auto f = [&](double t) { return sig->sf(x * (1.0 + b * t) / s) * intf->pdf(t); };
        return integrate(f, 0.0, t_hi, 1e-9, 1e-300, splits).value;
    };
    p.cdf = [=](double x) {
        if (x <= 0.0) return 0.0;
        auto f = [&](double t) { return sig->cdf(x * (1.0 + b * t) / s) * intf->pdf(t); };
        return integrate(f, 0.0, t_hi, 1e-9, 1e-300, splits).value;
    };
    p.pdf = [=](double x) {
        if (x < 0.0) return 0.0;
        auto f = [&](double t) {
            double scale = (1.0 + b * t) / s;
            return sig->pdf(x * scale) * scale * intf->pdf(t);
        };
        return integrate(f, 0.0, t_hi, 1e-9, 1e-300, splits).value;
    };
    // pdf_derivative left empty: finite-difference fallback
    return p;
}

} // namespace relaysim
