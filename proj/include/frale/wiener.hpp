#pragma once

#include <functional>
#include <string>
#include <vector>

#include "frale/levy_driver.hpp"
#include "frale/specfun.hpp"

namespace frale {

/// Piecewise-constant integrand sum_j a_j 1_{(s_{j-1}, s_j]} on [0, T].
struct StepFunction {
    std::vector<double> breakpoints; // 0 = s_0 < s_1 < ... < s_n = T
    std::vector<double> levels;      // a_1 ... a_n

    StepFunction(std::vector<double> bp, std::vector<double> lv);

    double horizon() const { return breakpoints.back(); }
    double value(double u) const;

    /// JSON array [{"upto": s_j, "level": a_j}, ...]; breakpoints ascending.
    static StepFunction from_json(const std::string& text);
    std::string to_json() const;
};

using SmoothFn = std::function<double(double)>;

/// (K^H g)(s) for a step function: sum a_j (z_H(s_j, s) - z_H(s_{j-1}, s)).
/// Valid for every H in (0,1).
double apply_KH(const HurstParameter& h, const StepFunction& g, double s);

/// (K^H g)(s) for a general integrand via the right-sided Riemann-Liouville
/// integral; requires H >= 1/2 (the fractional-derivative branch is out of
/// scope, step functions cover H < 1/2).
double apply_KH(const HurstParameter& h, const SmoothFn& g, double s, double T);

/// Wiener integral int_0^T g dY = int (K^H g) dL as a jump sum over one
/// driver realization.
double wiener_integral(const HurstParameter& h, const StepFunction& g, const DriverPath& driver);
double wiener_integral(const HurstParameter& h, const SmoothFn& g, double T,
                       const DriverPath& driver);

/// ||g||_{L2_H} = ||K^H g||_{L2([0,T])}.
double l2h_norm(const HurstParameter& h, const StepFunction& g);
double l2h_norm(const HurstParameter& h, const SmoothFn& g, double T);

/// Midpoint staircase of a smooth integrand on a uniform mesh.
StepFunction staircase(const SmoothFn& g, double T, std::size_t cells);

/// ||staircase(2^{level+1}) - staircase(2^level)||_{L2_H}: the Cauchy
/// increment certifying the step-approximation limit (the H < 1/2 route).
double l2h_refinement_increment(const HurstParameter& h, const SmoothFn& g, double T, int level);

} // namespace frale
