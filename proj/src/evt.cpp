#include "relaysim/evt.hpp"

#include "relaysim/errors.hpp"

#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>

namespace relaysim {

double reciprocal_hazard(const ParentDistribution& p, double x) {
    double s = p.sf(x);
    if (!(s > 0.0)) {
        throw DomainError("reciprocal_hazard: survival is zero at x = " + std::to_string(x));
    }
    double f = p.pdf(x);
    if (!(f > 0.0)) {
        throw DomainError("reciprocal_hazard: density is zero at x = " + std::to_string(x));
    }
    return s / f;
}

TypeOneReport check_type1(const ParentDistribution& p, std::span<const double> grid) {
    if (grid.empty()) throw DomainError("check_type1: empty grid");
    TypeOneReport rep;
    rep.ratios.reserve(grid.size());
    double prev = -std::numbers::pi; // below any valid grid start
    for (double x : grid) {
        if (x <= prev) throw DomainError("check_type1: grid must be strictly increasing");
        prev = x;
        if (x >= p.upper_endpoint) {
            throw DomainError("check_type1: grid point beyond the upper endpoint");
        }
        double s = p.sf(x);
        if (!(s > 0.0)) {
            std::string last = rep.ratios.empty()
                                   ? std::string("none")
                                   : std::to_string(grid[rep.ratios.size() - 1]);
            throw TailUnderflowError(
                "check_type1: survival underflowed to 0 at x = " + std::to_string(x) +
                " (last usable grid point: " + last + ")");
        }
        double f = p.pdf(x);
        if (!(f > 0.0)) {
            throw DomainError("check_type1: density vanished inside the support at x = " +
                              std::to_string(x));
        }
        rep.ratios.push_back(p.fprime(x) * s / (f * f));
    }

    // converged: the last deviation is within 1e-3 and the deviations are
    // nonincreasing (ties allowed) over the trailing window of 5 points
    double last_dev = std::fabs(rep.ratios.back() + 1.0);
    bool monotone = true;
    std::size_t n = rep.ratios.size();
    std::size_t window = n < 5 ? n : std::size_t{5};
    for (std::size_t i = n - window; i + 1 < n; ++i) {
        if (std::fabs(rep.ratios[i] + 1.0) < std::fabs(rep.ratios[i + 1] + 1.0)) {
            monotone = false;
            break;
        }
    }
    rep.converged = last_dev <= 1e-3 && monotone;
    return rep;
}

NormalizingConstants normalizing_constants(const ParentDistribution& p, long M) {
    if (M < 2) throw DomainError("normalizing_constants: requires M >= 2");
    double b = upper_quantile(p, 1.0 / static_cast<double>(M));
    double a = reciprocal_hazard(p, b);
    return {a, b, M};
}

RateGumbelConstants to_rate_constants(const NormalizingConstants& nc, double snr) {
    if (!(snr > 0.0)) throw DomainError("to_rate_constants: requires snr > 0");
    if (!(nc.a > 0.0)) throw DomainError("to_rate_constants: requires a > 0");
    double c = std::numbers::log2e * snr * nc.a / (1.0 + snr * nc.b);
    double d = std::log2(1.0 + snr * nc.b);
    return {c, d, nc.sample_size, snr};
}

double gumbel_cdf(double x) {
    return std::exp(-std::exp(-x));
}

} // namespace relaysim
