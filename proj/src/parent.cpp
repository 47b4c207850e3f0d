#include "relaysim/parent.hpp"

#include "relaysim/errors.hpp"

#include <cmath>

namespace relaysim {

double ParentDistribution::fprime(double x) const {
    if (pdf_derivative) return pdf_derivative(x);
    double h = 1e-6 * std::fmax(std::fabs(x), 1.0);
    return (pdf(x + h) - pdf(x - h)) / (2.0 * h);
}

double upper_quantile(const ParentDistribution& p, double sf_target) {
    if (!(sf_target > 0.0) || !(sf_target < 1.0)) {
        throw DomainError("upper_quantile: requires 0 < sf_target < 1");
    }
    double lo = 0.0;
    double hi = 1.0;
    if (p.sf(hi) > sf_target) {
        while (p.sf(hi) > sf_target) {
            lo = hi;
            hi *= 2.0;
            if (hi > 1e300 || hi >= p.upper_endpoint) {
                throw BracketError("upper_quantile: doubling bracket escaped the support");
            }
        }
    }
    for (int i = 0; i < 200; ++i) {
        if (hi - lo <= 1e-12 * std::fmax(hi, 1e-300)) break;
        double mid = 0.5 * (lo + hi);
        if (p.sf(mid) > sf_target) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace relaysim
