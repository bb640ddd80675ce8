#include "smalldev/special_functions.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace smalldev {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kFpMin = std::numeric_limits<double>::min() / kEps;

// series for P(s,x), x < s+1
double gamma_p_series(double s, double x) {
    double ap = s;
    double del = 1.0 / s;
    double sum = del;
    for (int n = 0; n < 10000; ++n) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::fabs(del) < std::fabs(sum) * kEps)
            return sum * std::exp(-x + s * std::log(x) - std::lgamma(s));
    }
    throw std::runtime_error("gamma_p_series: no convergence");
}

// Lentz continued fraction for Q(s,x), x >= s+1
double gamma_q_cf(double s, double x) {
    double b = x + 1.0 - s;
    double c = 1.0 / kFpMin;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 10000; ++i) {
        double an = -i * (i - s);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < kFpMin) d = kFpMin;
        c = b + an / c;
        if (std::fabs(c) < kFpMin) c = kFpMin;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) <= kEps)
            return std::exp(-x + s * std::log(x) - std::lgamma(s)) * h;
    }
    throw std::runtime_error("gamma_q_cf: no convergence");
}

// x^p * e^{-x} without intermediate overflow
double pow_exp(double p, double x) {
    return std::exp(p * std::log(x) - x);
}

} // namespace

double gamma_p(double s, double x) {
    if (s <= 0.0 || x < 0.0) throw std::domain_error("gamma_p: need s > 0, x >= 0");
    if (x == 0.0) return 0.0;
    if (x < s + 1.0) return gamma_p_series(s, x);
    return 1.0 - gamma_q_cf(s, x);
}

double lower_incomplete_gamma(double s, double x) {
    return gamma_p(s, x) * std::tgamma(s);
}

double exp_integral_e1(double x) {
    if (x <= 0.0) throw std::domain_error("exp_integral_e1: need x > 0");
    if (x <= 1.0) {
        // E1 = -gamma - log x + sum (-1)^{n+1} x^n / (n n!)
        double sum = 0.0, term = 1.0;
        for (int n = 1; n <= 60; ++n) {
            term *= -x / n;
            sum -= term / n;
            if (std::fabs(term / n) < kEps * (std::fabs(sum) + 1.0)) break;
        }
        return -euler_gamma - std::log(x) + sum;
    }
    // Lentz CF: E1(x) = e^{-x} / (x + 1 - 1/(x + 3 - 4/(x + 5 - ...)))
    double b = x + 1.0;
    double c = 1.0 / kFpMin;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 10000; ++i) {
        double an = -static_cast<double>(i) * i;
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < kFpMin) d = kFpMin;
        c = b + an / c;
        if (std::fabs(c) < kFpMin) c = kFpMin;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) <= kEps) return std::exp(-x) * h;
    }
    throw std::runtime_error("exp_integral_e1: no convergence");
}

double ein(double x) {
    if (x < 0.0) throw std::domain_error("ein: need x >= 0");
    if (x == 0.0) return 0.0;
    if (x <= 1.0) {
        double sum = 0.0, term = 1.0;
        for (int n = 1; n <= 60; ++n) {
            term *= -x / n;
            sum -= term / n;
            if (std::fabs(term / n) < kEps * (std::fabs(sum) + 1.0)) break;
        }
        return sum;
    }
    return euler_gamma + std::log(x) + exp_integral_e1(x);
}

double upper_incomplete_gamma(double s, double x) {
    if (x <= 0.0) throw std::domain_error("upper_incomplete_gamma: need x > 0");
    if (s > 0.0) {
        if (x < s + 1.0) return (1.0 - gamma_p_series(s, x)) * std::tgamma(s);
        return gamma_q_cf(s, x) * std::tgamma(s);
    }
    double rounded = std::round(s);
    if (std::fabs(s - rounded) < 1e-12) {
        // integer s <= 0: start from Gamma(0,x) = E1(x), recurse down
        int n = static_cast<int>(-rounded);
        double g = exp_integral_e1(x);
        for (int k = 0; k < n; ++k) {
            double sk = -static_cast<double>(k) - 1.0;
            g = (g - pow_exp(sk, x)) / sk;
        }
        return g;
    }
    // fractional s < 0: start at s + m in (0,1), recurse down m times
    int m = static_cast<int>(std::ceil(-s));
    double s0 = s + m;
    double g = upper_incomplete_gamma(s0, x);
    for (int k = 1; k <= m; ++k) {
        double sk = s0 - k; // target order after this step
        g = (g - pow_exp(sk, x)) / sk;
    }
    return g;
}

} // namespace smalldev
