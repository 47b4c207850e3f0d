#include "relaysim/special_functions.hpp"

#include "relaysim/errors.hpp"

#include <cmath>
#include <numbers>

namespace relaysim {

double q_function(double x) {
    return 0.5 * std::erfc(x / std::numbers::sqrt2);
}

namespace {

// alternating series -gamma - ln x + sum (-1)^{n+1} x^n / (n n!), x <= 1
double exp_integral_series(double x) {
    double sum = -kEulerGamma - std::log(x);
    double a = -1.0; // a_n = (-1)^{n+1} x^n / n!
    for (int n = 1; n <= 60; ++n) {
        a *= -x / n;
        double term = a / n;
        sum += term;
        if (std::fabs(term) < 1e-18 + 1e-16 * std::fabs(sum)) break;
    }
    return sum;
}

// modified Lentz continued fraction, x > 1
double exp_integral_cf(double x) {
    double b = x + 1.0;
    double c = 1e308;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 200; ++i) {
        double a = -static_cast<double>(i) * i;
        b += 2.0;
        d = 1.0 / (a * d + b);
        c = b + a / c;
        double del = c * d;
        h *= del;
        if (std::fabs(del - 1.0) < 1e-16) return h * std::exp(-x);
    }
    throw QuadratureError("exp_integral: continued fraction did not converge");
}

} // namespace

double exp_integral(double x) {
    if (!(x > 0.0)) throw DomainError("exp_integral: requires x > 0");
    return x <= 1.0 ? exp_integral_series(x) : exp_integral_cf(x);
}

double erfcx_positive(double t) {
    if (t < 25.0) return std::exp(t * t) * std::erfc(t);
    const double inv_sqrt_pi = 1.0 / std::sqrt(std::numbers::pi);
    if (t > 6.7e7) return inv_sqrt_pi / t; // covers t = inf -> 0
    // asymptotic 1/(t sqrt(pi)) (1 - 1/(2t^2) + 3/(2t^2)^2 ...)
    double z = 1.0 / (2.0 * t * t);
    double s = 1.0;
    double term = 1.0;
    for (int m = 1; m <= 12; ++m) {
        term *= -(2 * m - 1) * z;
        s += term;
        if (std::fabs(term) < 1e-18) break;
    }
    return s * inv_sqrt_pi / t;
}

double marcum_q1(double a, double b) {
    if (a < 0.0 || b < 0.0) throw DomainError("marcum_q1: requires a, b >= 0");
    double x2 = 0.5 * a * a; // noncentrality / 2, Poisson weight rate
    double y2 = 0.5 * b * b; // threshold / 2, inner Poisson rate
    if (y2 == 0.0) return 1.0;

    // Q1 = sum_j [e^-x2 x2^j / j!] P(Poisson(y2) <= j); increments decline
    // monotonically once j clears both the weight peak x2 and sqrt(x2 y2)
    double w = std::exp(-x2);
    double t = std::exp(-y2);
    double g = t;
    double total = w * g;
    double jmin = std::fmax(x2, std::sqrt(x2 * y2)) + 1.0;
    for (int j = 1; j <= 1000000; ++j) {
        w *= x2 / j;
        t *= y2 / j;
        g += t;
        if (g > 1.0) g = 1.0;
        double inc = w * g;
        total += inc;
        if (j >= jmin && inc <= 1e-18 * total) break;
    }
    return total < 1.0 ? total : 1.0;
}

} // namespace relaysim
