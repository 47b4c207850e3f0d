#include "relaysim/fading.hpp"

#include "relaysim/errors.hpp"
#include "relaysim/special_functions.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <vector>

namespace relaysim {

FadingLaw FadingLaw::make_rayleigh() { return {FadingKind::rayleigh, 0.0}; }

FadingLaw FadingLaw::make_rician(double k_factor) {
    if (!(k_factor >= 0.0)) throw DomainError("rician: requires k_factor >= 0");
    return {FadingKind::rician, k_factor};
}

FadingLaw FadingLaw::make_lognormal(double sigma_db) {
    if (!(sigma_db > 0.0)) throw DomainError("lognormal: requires sigma_db > 0");
    return {FadingKind::lognormal, sigma_db};
}

int FadingLaw::uniforms_per_draw() const {
    return kind == FadingKind::rayleigh ? 1 : 2;
}

void FadingLaw::sample_powers(std::span<double> out, UniformStream& stream) const {
    if (kind == FadingKind::rayleigh) {
        stream.fill(out);
        kernels::neg_log(out);
        return;
    }
    static thread_local std::vector<double> scratch;
    scratch.resize(2 * out.size());
    stream.fill(scratch);
    constexpr double two_pi = 2.0 * std::numbers::pi;
    if (kind == FadingKind::rician) {
        // power = |LOS + scattered|^2 via a Box-Muller pair per draw
        double k = param;
        double nu = std::sqrt(k / (1.0 + k));
        double sigma = std::sqrt(0.5 / (1.0 + k));
        for (std::size_t i = 0; i < out.size(); ++i) {
            double r = std::sqrt(-2.0 * std::log(scratch[2 * i]));
            double ang = two_pi * scratch[2 * i + 1];
            double re = nu + sigma * (r * std::cos(ang));
            double im = sigma * (r * std::sin(ang));
            out[i] = re * re + im * im;
        }
    } else {
        // one gaussian per draw (cosine branch), mean fixed so E[power] = 1
        double s = param * std::numbers::ln10 / 10.0;
        double mu = -0.5 * s * s;
        for (std::size_t i = 0; i < out.size(); ++i) {
            double z = std::sqrt(-2.0 * std::log(scratch[2 * i])) * std::cos(two_pi * scratch[2 * i + 1]);
            out[i] = std::exp(mu + s * z);
        }
    }
}

ParentDistribution FadingLaw::parent() const {
    ParentDistribution p;
    p.name = name();
    switch (kind) {
        case FadingKind::rayleigh: {
            p.cdf = [](double x) { return x <= 0.0 ? 0.0 : -std::expm1(-x); };
            p.survival = [](double x) { return x <= 0.0 ? 1.0 : std::exp(-x); };
            p.pdf = [](double x) { return x < 0.0 ? 0.0 : std::exp(-x); };
            p.pdf_derivative = [](double x) { return x < 0.0 ? 0.0 : -std::exp(-x); };
            break;
        }
        case FadingKind::rician: {
            double k = param;
            double a = std::sqrt(2.0 * k);
            double c1 = 1.0 + k;
            p.survival = [a, c1](double x) {
                return x <= 0.0 ? 1.0 : marcum_q1(a, std::sqrt(2.0 * c1 * x));
            };
            p.cdf = [a, c1](double x) {
                return x <= 0.0 ? 0.0 : 1.0 - marcum_q1(a, std::sqrt(2.0 * c1 * x));
            };
            p.pdf = [k, c1](double x) {
                if (x < 0.0) return 0.0;
                double arg = 2.0 * std::sqrt(k * c1 * x);
                return c1 * std::exp(-k - c1 * x) * std::cyl_bessel_i(0.0, arg);
            };
            p.pdf_derivative = [k, c1](double x) {
                if (x <= 0.0) return 0.0;
                double arg = 2.0 * std::sqrt(k * c1 * x);
                double i0 = std::cyl_bessel_i(0.0, arg);
                double i1 = std::cyl_bessel_i(1.0, arg);
                return c1 * std::exp(-k - c1 * x) * (-c1 * i0 + i1 * std::sqrt(k * c1 / x));
            };
            break;
        }
        case FadingKind::lognormal: {
            double s = param * std::numbers::ln10 / 10.0;
            double mu = -0.5 * s * s;
            auto t_of = [s, mu](double x) { return (std::log(x) - mu) / s; };
            p.survival = [t_of](double x) {
                return x <= 0.0 ? 1.0 : 0.5 * std::erfc(t_of(x) / std::numbers::sqrt2);
            };
            p.cdf = [t_of](double x) {
                return x <= 0.0 ? 0.0 : 0.5 * std::erfc(-t_of(x) / std::numbers::sqrt2);
            };
            p.pdf = [s, t_of](double x) {
                if (x <= 0.0) return 0.0;
                double t = t_of(x);
                return std::exp(-0.5 * t * t) / (x * s * std::sqrt(2.0 * std::numbers::pi));
            };
            p.pdf_derivative = [s, t_of](double x) {
                if (x <= 0.0) return 0.0;
                double t = t_of(x);
                double f = std::exp(-0.5 * t * t) / (x * s * std::sqrt(2.0 * std::numbers::pi));
                return -f * (t / s + 1.0) / x;
            };
            break;
        }
    }
    return p;
}

std::string FadingLaw::name() const {
    char buf[64];
    switch (kind) {
        case FadingKind::rayleigh:
            return "rayleigh";
        case FadingKind::rician:
            std::snprintf(buf, sizeof buf, "rician(%g)", param);
            return buf;
        case FadingKind::lognormal:
            std::snprintf(buf, sizeof buf, "lognormal(%gdB)", param);
            return buf;
    }
    return "unknown";
}

} // namespace relaysim
