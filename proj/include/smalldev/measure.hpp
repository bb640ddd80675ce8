// Levy triplet data model: compositional Levy measures (tempered power laws,
// atoms, numeric densities), Gaussian variance and drift, plus symbolic
// asymptotic rate expressions.
#pragma once

#include <functional>
#include <string>
#include <variant>
#include <vector>

namespace smalldev {

enum class Side { positive, negative };

// density C e^{-lambda |x|} / |x|^{1+alpha} on its side, for 0 < |x| <= cutoff
struct TemperedPowerLaw {
    double C = 1.0;         // mass coefficient >= 0
    double alpha = 0.5;     // singularity exponent, < 2
    double lambda = 0.0;    // tempering rate >= 0
    Side side = Side::positive;
    double cutoff = 1.0;    // outer support radius in (0, inf]
};

struct Atom {
    double location = 1.0;  // != 0
    double mass = 1.0;      // > 0
};

struct NumericDensity {
    std::function<double(double)> density;  // on R \ {0}, >= 0
    double support_lo = 0.0;
    double support_hi = 1.0;
    // declared growth: density(x) * |x|^{1 + sing_exp} bounded near 0, < 2
    double sing_exp = 0.0;
    std::string label = "numeric";
};

using MeasureComponent = std::variant<TemperedPowerLaw, Atom, NumericDensity>;

struct LevyTriplet {
    std::vector<MeasureComponent> components;
    double sigma2 = 0.0;    // Gaussian variance >= 0
    double b = 0.0;         // drift under the 1_{|x|<=1} compensation of the LK formula
};

struct Violation {
    std::string component;  // which component (or "triplet")
    std::string message;
};

// Empty report iff all type invariants hold.
std::vector<Violation> validate(const LevyTriplet& t);

// True when the components pair up exactly under x -> -x and can be treated
// as symmetric without numerical tests.
bool is_structurally_symmetric(const LevyTriplet& t);

// The triplet of -X: mirrored measure, negated drift.
LevyTriplet reflect(const LevyTriplet& t);

enum class RateMode { strong, weak };

// constant * eps^{-pow_eps} * |log eps|^{pow_log} * (log|log eps|)^{pow_loglog}
struct RateExpression {
    double pow_eps = 0.0;     // >= 0
    double pow_log = 0.0;
    double pow_loglog = 0.0;
    RateMode mode = RateMode::weak;
    double constant = 1.0;    // meaningful only when mode == strong
    std::string regime;
};

// Evaluate on (0, e^{-2}) so |log eps| > 2 and log|log eps| > 0.
double eval_rate(const RateExpression& r, double eps);

} // namespace smalldev
