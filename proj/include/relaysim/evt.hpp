#pragma once

#include "relaysim/parent.hpp"

#include <span>
#include <vector>

namespace relaysim {

// affine normalization of the sample maximum in the power domain:
// (max - b) / a converges to the standard Gumbel law as the number of
// contenders M grows, provided the parent has an exponential-class tail
struct NormalizingConstants {
    double a = 0.0;
    double b = 0.0;
    long sample_size = 0;
};

// the same normalization carried through x -> log2(1 + snr * x): the best
// user's spectral efficiency behaves like c * G + d with G standard Gumbel
struct RateGumbelConstants {
    double c = 0.0;
    double d = 0.0;
    long sample_size = 0;
    double snr = 0.0;
};

struct TypeOneReport {
    std::vector<double> ratios; // f'(x) (1-F(x)) / f(x)^2 sampled on the grid
    bool converged = false;     // last ratio within 1e-3 of -1, approach nonincreasing
};

// mean residual-life scale (1 - F(x)) / f(x)
double reciprocal_hazard(const ParentDistribution& p, double x);

// von Mises criterion along an increasing grid: ratios f'(x)(1-F(x))/f(x)^2
// must approach -1 for the Gumbel (light-tail) domain of attraction
TypeOneReport check_type1(const ParentDistribution& p, std::span<const double> grid);

// b solves 1 - F(b) = 1/M; a is the reciprocal hazard at b
NormalizingConstants normalizing_constants(const ParentDistribution& p, long M);

// power-domain constants -> spectral-efficiency-domain Gumbel constants
RateGumbelConstants to_rate_constants(const NormalizingConstants& nc, double snr);

double gumbel_cdf(double x);

} // namespace relaysim
