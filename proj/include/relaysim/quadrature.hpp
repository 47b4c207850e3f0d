#pragma once

#include <functional>
#include <span>

namespace relaysim {

struct QuadratureResult {
    double value = 0.0;
    double abs_error = 0.0; // accumulated error estimate
    int segments = 0;       // final segment count
};

// adaptive Gauss-Kronrod (7/15) on [lo, hi]. split_points pre-partitions the
// domain (values outside (lo, hi) are ignored); the worst segment is bisected
// until sum(err) <= max(abs_tol, rel_tol * |sum(value)|) or the segment
// budget is exhausted (throws QuadratureError).
QuadratureResult integrate(const std::function<double(double)>& f, double lo, double hi,
                           double rel_tol, double abs_tol = 0.0,
                           std::span<const double> split_points = {},
                           int max_segments = 4000);

// maps [lo, inf) onto [0, 1) via x = lo + t/(1-t) and integrates adaptively
QuadratureResult integrate_to_inf(const std::function<double(double)>& f, double lo,
                                  double rel_tol, double abs_tol = 0.0,
                                  int max_segments = 4000);

} // namespace relaysim
