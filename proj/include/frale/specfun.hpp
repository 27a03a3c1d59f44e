#pragma once

#include <stdexcept>

namespace frale {

/// Hurst parameter, strictly inside (0,1). Carries the derived quantities
/// every kernel evaluation needs: the fractional exponent q = H - 1/2 and
/// the normalizing constant of the integral representations.
class HurstParameter {
public:
    explicit HurstParameter(double h);

    double value() const noexcept { return h_; }
    /// H - 1/2, the exponent appearing in both kernels.
    double q() const noexcept { return q_; }
    /// Normalizing constant (c_H and C_H coincide; see constant_cH/CH).
    double norm_constant() const noexcept { return c_; }

private:
    double h_;
    double q_;
    double c_;
};

struct HypergeometricParams {
    double a;
    double b;
    double c;

    HypergeometricParams(double a_, double b_, double c_);
};

/// Gamma function for x > 0, Lanczos approximation. Relative error below
/// 1e-13 on (0, 50].
double gamma_fn(double x);

/// log Gamma for x > 0.
double gamma_ln(double x);

/// Euler Beta B(x,y) = Gamma(x)Gamma(y)/Gamma(x+y), x,y > 0.
double beta_fn(double x, double y);

/// Gauss hypergeometric F(a,b,c,x) for x <= 0. Direct series on (-1, 0],
/// Pfaff transformation F(a,b,c,x) = (1-x)^{-a} F(a, c-b, c, x/(x-1)) for
/// x <= -1. Series truncated at 1e-14 relative term size; throws
/// accuracy_error with the partial sum if 10000 terms do not suffice.
double hyp2f1(const HypergeometricParams& p, double x);

namespace detail {
/// Raw Gauss series at |x| < 1; shared by hyp2f1 and the kernel evaluators,
/// which pick their own transformation before the argument gets close to 1.
double hyp_series(double a, double b, double c, double x);
} // namespace detail

/// c_H = Gamma(H+1/2)^{-1} (2H Gamma(H+1/2) Gamma(3/2-H) / Gamma(2-2H))^{1/2}
double constant_cH(const HurstParameter& h);

/// C_H = (2H sin(pi H) Gamma(2H))^{1/2} / Gamma(H+1/2); equals c_H.
double constant_CH(const HurstParameter& h);

} // namespace frale
