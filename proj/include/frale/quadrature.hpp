#pragma once

#include <functional>

namespace frale {

using Integrand = std::function<double(double)>;

struct QuadOptions {
    double rel_tol = 1e-9;
    double abs_tol = 1e-13;
    int max_panels = 4000;
};

struct QuadResult {
    double value = 0.0;
    double error = 0.0; // absolute error estimate
};

/// Globally adaptive Gauss-Kronrod (G7,K15) on [a,b]. Throws accuracy_error
/// when the panel budget is exhausted before the tolerance is met.
QuadResult integrate(const Integrand& f, double a, double b, const QuadOptions& opt = {});

/// Integral of f over [a,b] where f behaves like (s-a)^{alpha} near a and
/// (b-s)^{beta} near b (alpha, beta > -1; use 0 for a regular endpoint with
/// a mere derivative kink). The interval is split at the midpoint and each
/// half is mapped by the power substitution u = endpoint +/- v^p with p
/// chosen so the transformed integrand is at least C^1; plain panels never
/// touch the singular endpoints.
QuadResult integrate_singular(const Integrand& f, double a, double b, double alpha, double beta,
                              const QuadOptions& opt = {});

/// Integral of f over [a, +inf) via the rational map s = a + z/(1-z).
/// `decay` is the power-law exponent of f at infinity (f ~ s^{decay},
/// decay < -1) and `alpha` the exponent of f near a; both feed the endpoint
/// handling of the mapped integrand.
QuadResult integrate_to_inf(const Integrand& f, double a, double decay, double alpha = 0.0,
                            const QuadOptions& opt = {});

} // namespace frale
