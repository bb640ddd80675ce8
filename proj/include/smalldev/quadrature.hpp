// Adaptive Gauss-Kronrod (G7,K15) quadrature with helpers for endpoint
// singularities: exact power-flattening substitution for power-law integrands
// and geometric panel subdivision for generic densities.
#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace smalldev {

struct QuadResult {
    double value = 0.0;
    double error = 0.0;
    bool converged = true;
};

namespace quad_detail {

// G7,K15 nodes/weights on [-1,1]: {abscissa, gauss weight, kronrod weight}
inline constexpr double g7k15[8][3] = {
    {0.000000000000000, 0.417959183673469, 0.209482141084728},
    {0.405845151377397, 0.381830050505119, 0.190350578064785},
    {0.741531185599394, 0.279705391489277, 0.140653259715525},
    {0.949107912342759, 0.129484966168870, 0.063092092629979},
    {0.207784955007898, 0.0, 0.204432940075298},
    {0.586087235467691, 0.0, 0.169004726639267},
    {0.864864423359769, 0.0, 0.104790010322250},
    {0.991455371120813, 0.0, 0.022935322010529},
};

// Kronrod value; err is the (conservative) |K15 - G7| difference.
template <class F>
double panel_g7k15(const F& f, double a, double b, double& err) {
    const double mid = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double y0 = f(mid);
    double g7 = g7k15[0][1] * y0;
    double k15 = g7k15[0][2] * y0;
    for (int i = 1; i < 8; ++i) {
        double dx = h * g7k15[i][0];
        double yi = f(mid + dx) + f(mid - dx);
        g7 += g7k15[i][1] * yi;
        k15 += g7k15[i][2] * yi;
    }
    g7 *= h;
    k15 *= h;
    err = std::fabs(k15 - g7);
    return k15;
}

} // namespace quad_detail

// Adaptive bisection until the sum of panel errors meets abs_tol + rel_tol*|I|.
template <class F>
QuadResult integrate_adaptive(const F& f, double lo, double hi,
                              double abs_tol = 1e-11, double rel_tol = 1e-10,
                              std::size_t max_panels = 4000) {
    QuadResult out;
    if (lo == hi) return out;
    struct Seg { double a, b, val, err; };
    std::vector<Seg> segs;
    double e0;
    double v0 = quad_detail::panel_g7k15(f, lo, hi, e0);
    segs.push_back({lo, hi, v0, e0});
    for (std::size_t splits = 0; splits < max_panels; ++splits) {
        double total = 0.0, err = 0.0;
        std::size_t worst = 0;
        double worst_err = -1.0;
        for (std::size_t i = 0; i < segs.size(); ++i) {
            total += segs[i].val;
            err += segs[i].err;
            if (segs[i].err > worst_err) { worst_err = segs[i].err; worst = i; }
        }
        if (err <= abs_tol + rel_tol * std::fabs(total)) {
            out.value = total;
            out.error = err;
            return out;
        }
        Seg s = segs[worst];
        double m = 0.5 * (s.a + s.b);
        if (m <= s.a || m >= s.b) { // machine resolution, freeze this panel
            segs[worst].err = 0.0;
            continue;
        }
        double e1, e2;
        double v1 = quad_detail::panel_g7k15(f, s.a, m, e1);
        double v2 = quad_detail::panel_g7k15(f, m, s.b, e2);
        segs[worst] = {s.a, m, v1, e1};
        segs.push_back({m, s.b, v2, e2});
    }
    double total = 0.0, err = 0.0;
    for (const auto& s : segs) { total += s.val; err += s.err; }
    out.value = total;
    out.error = err;
    out.converged = false;
    return out;
}

// Integral of f over (0, hi] where f(x) ~ x^{-a_eff} near 0, a_eff < 1.
// Substitutes x = t^q with q = 1/(1 - a_eff) so the leading power is flat.
template <class F>
QuadResult integrate_left_singular(const F& f, double a_eff, double hi,
                                   double abs_tol = 1e-11, double rel_tol = 1e-10) {
    if (hi <= 0.0) return {};
    if (a_eff <= 0.0) return integrate_adaptive(f, 0.0, hi, abs_tol, rel_tol);
    if (a_eff >= 1.0) throw std::domain_error("integrate_left_singular: divergent (a_eff >= 1)");
    const double q = 1.0 / (1.0 - a_eff);
    const double t_hi = std::pow(hi, 1.0 / q);
    auto g = [&](double t) {
        double x = std::pow(t, q);
        if (x <= 0.0) return 0.0;
        return f(x) * q * std::pow(t, q - 1.0);
    };
    return integrate_adaptive(g, 0.0, t_hi, abs_tol, rel_tol);
}

// Integral of f over (0, hi] with an integrable singularity of unknown shape
// at 0 (power or logarithmic). Geometric panels [hi 2^{-j-1}, hi 2^{-j}],
// stopping once the extrapolated tail is below tolerance; the extrapolated
// tail is added to the value and counted toward the error estimate.
template <class F>
QuadResult integrate_geometric_to_zero(const F& f, double hi,
                                       double abs_tol = 1e-11, double rel_tol = 1e-10,
                                       int max_halvings = 220) {
    QuadResult out;
    if (hi <= 0.0) return out;
    double total = 0.0, err = 0.0;
    double prev = 0.0, last = 0.0;
    double tail = 0.0;
    bool tail_ok = false;
    for (int j = 0; j < max_halvings; ++j) {
        double b = hi * std::ldexp(1.0, -j);
        double a = 0.5 * b;
        QuadResult seg = integrate_adaptive(f, a, b, abs_tol * 0.25, rel_tol * 0.25, 400);
        total += seg.value;
        err += seg.error;
        prev = last;
        last = std::fabs(seg.value);
        if (j >= 4 && prev > 0.0 && last < prev) {
            double r = last / prev;
            tail = last * r / (1.0 - r);
            tail_ok = true;
            if (tail <= 0.5 * (abs_tol + rel_tol * std::fabs(total))) break;
        } else if (j >= 4 && last == 0.0) {
            tail = 0.0;
            tail_ok = true;
            break;
        } else {
            tail_ok = false;
        }
    }
    if (tail_ok) {
        total += tail;      // geometric extrapolation of the remaining mass
        err += 0.5 * tail;
    } else {
        err += std::fabs(last) * max_halvings;
        out.converged = false;
    }
    out.value = total;
    out.error = err;
    return out;
}

} // namespace smalldev
