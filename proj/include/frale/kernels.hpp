#pragma once

#include <utility>
#include <vector>

#include "frale/specfun.hpp"

namespace frale {

enum class KernelKind {
    MolchanGolosov,
    MandelbrotVanNess,
};

const char* kernel_name(KernelKind kind);

/// Value of  int kernel(t,.)^K  or a certified-divergent flag. The flag is
/// set analytically (|H - 1/2| >= 1/K for Molchan-Golosov, H <= 1/2 - 1/K
/// for Mandelbrot-Van Ness); value and flag are never both meaningful.
struct KernelMomentResult {
    KernelKind kind;
    int k;
    double hurst;
    double horizon;
    bool divergent;
    double value; // NaN when divergent
    double error; // quadrature error estimate, 0 when divergent
};

/// Molchan-Golosov kernel z_H(t,s); zero outside 0 < s < t.
/// H > 1/2 evaluates the simplified integral form with singularity-absorbing
/// substitution at u = s; H <= 1/2 goes through the hypergeometric function.
double mg_kernel(const HurstParameter& h, double t, double s);

/// Hypergeometric-form evaluation, valid for every H; the cross-check route
/// for the simplified form.
double mg_kernel_hyp(const HurstParameter& h, double t, double s);

/// F(1/2-H, H-1/2, H+1/2, x) for x <= 0, the kernel's hypergeometric factor,
/// with branch selection that stays fast over the whole ray (direct series,
/// Pfaff image, argument->1 connection formula).
double mg_f_tilde(const HurstParameter& h, double x);

/// Simplified integral form, only defined for H > 1/2.
double mg_kernel_simplified(const HurstParameter& h, double t, double s);

/// Mandelbrot-Van Ness kernel f_H(t,s) on all of R^2.
double mvn_kernel(const HurstParameter& h, double t, double s);

/// int_0^t z_H(t,s)^2 ds. Contract: equals t^{2H} to 1e-5 relative; throws
/// accuracy_error when the numerical value violates that identity.
double mg_kernel_l2(const HurstParameter& h, double t);

/// int_0^{max(t,s)} (z_H(t,u) - z_H(s,u))^2 du  (increment isometry; equals
/// |t-s|^{2H}).
double mg_increment_l2(const HurstParameter& h, double t, double s);

/// K-th moment integral of the kernel over its support, with analytic
/// divergence certification (no quadrature is attempted in that case).
KernelMomentResult kernel_moment(KernelKind kind, const HurstParameter& h, double t, int k);

/// Partial Molchan-Golosov moment  int_eps^t z^K ds, used to watch the
/// divergent cases grow as eps -> 0.
double mg_moment_partial(const HurstParameter& h, double t, int k, double eps);

/// Beta-function lower bound g1 for the normalized MG fourth-moment integral
/// and elementary upper bound g2 for the MvN one, H in (1/2, 3/4).
std::pair<double, double> g1_g2_bounds(const HurstParameter& h);

/// d/ds z_H(t,s) for H > 1/2, 0 < s < t.
double mg_kernel_sderivative(const HurstParameter& h, double t, double s);

/// int_a^b d/ds z_H(t,s) ds for H > 1/2, 0 < a < b <= t. For b = t the
/// (t-s)^{q-1} part carries mass below double resolution of s near t, so
/// that factor is integrated in the substituted variable where its limit is
/// smooth; the bounded remainder is integrated directly.
double mg_sderivative_integral(const HurstParameter& h, double t, double a, double b);

/// Amortized evaluation of z_H(t_k, s) for one s across an ascending grid of
/// t values. For H > 1/2 the inner integral is accumulated cell by cell, so
/// a whole row costs little more than a single point evaluation.
class MgKernelRow {
public:
    MgKernelRow(const HurstParameter& h, double s, const std::vector<double>& t_grid);

    /// z_H(t_grid[i], s); zero where t_grid[i] <= s.
    const std::vector<double>& values() const { return values_; }

private:
    std::vector<double> values_;
};

} // namespace frale
