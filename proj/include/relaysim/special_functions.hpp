#pragma once

namespace relaysim {

// Euler-Mascheroni constant
inline constexpr double kEulerGamma = 0.57721566490153286061;

// Gaussian tail probability Q(x) = P(N(0,1) > x)
double q_function(double x);

// exponential integral E1(x) = int_x^inf e^-t / t dt, x > 0.
// underflows to 0 past x ~ 740; throws DomainError for x <= 0.
double exp_integral(double x);

// scaled complementary error function exp(t^2) erfc(t) for t >= 0;
// erfcx(inf) = 0. monotone decreasing, no overflow for any t.
double erfcx_positive(double t);

// Marcum Q1(a, b): survival function of a noncentral chi-square with two
// degrees of freedom, P(X > b^2) with noncentrality a^2. underflows to
// exactly 0 once b^2/2 exceeds ~745 + a^2/2.
double marcum_q1(double a, double b);

} // namespace relaysim
