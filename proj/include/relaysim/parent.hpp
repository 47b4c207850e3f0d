#pragma once

#include <functional>
#include <limits>
#include <string>

namespace relaysim {

// parent law of the per-user channel power (or SINR): everything the
// extreme-value machinery needs. survival is optional but strongly
// recommended: 1 - cdf(x) loses all precision past cdf ~ 1 - 1e-16, while
// an analytic survival function stays accurate arbitrarily deep.
struct ParentDistribution {
    std::function<double(double)> cdf;
    std::function<double(double)> pdf;
    std::function<double(double)> pdf_derivative; // optional; empty -> finite difference
    std::function<double(double)> survival;       // optional; empty -> 1 - cdf
    double upper_endpoint = std::numeric_limits<double>::infinity();
    std::string name = "unnamed";

    double sf(double x) const { return survival ? survival(x) : 1.0 - cdf(x); }
    // analytic f'(x) when provided, else a central difference with
    // step 1e-6 * max(|x|, 1)
    double fprime(double x) const;
};

// smallest x with sf(x) <= sf_target, located by doubling from x = 1 and
// bisecting to relative width 1e-12. throws BracketError if the doubling
// walks past the representable range or the upper endpoint.
double upper_quantile(const ParentDistribution& p, double sf_target);

} // namespace relaysim
