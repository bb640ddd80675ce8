// Incomplete gamma functions and exponential integrals, series / continued
// fraction evaluation. Only what the measure calculus needs; no external
// special-function library.
#pragma once

namespace smalldev {

// Regularized lower incomplete gamma P(s, x) for s > 0, x >= 0.
double gamma_p(double s, double x);

// Lower incomplete gamma(s, x) = P(s, x) * Gamma(s), s > 0.
double lower_incomplete_gamma(double s, double x);

// Upper incomplete Gamma(s, x) for any real s and x > 0.
// Negative and zero s are reached by downward recurrence
// Gamma(s-1, x) = (Gamma(s, x) - x^{s-1} e^{-x}) / (s - 1).
double upper_incomplete_gamma(double s, double x);

// Exponential integral E1(x), x > 0.
double exp_integral_e1(double x);

// Ein(x) = int_0^x (1 - e^{-t})/t dt = euler_gamma + log x + E1(x), x >= 0.
double ein(double x);

inline constexpr double euler_gamma = 0.57721566490153286060651209008240243;

} // namespace smalldev
