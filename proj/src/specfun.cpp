#include "frale/specfun.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "frale/errors.hpp"

namespace frale {

namespace {

// Lanczos, g = 607/128, 15 terms (Godfrey's coefficients). Good to ~1e-15
// relative over the positive reals in double precision.
constexpr double kLanczosG = 607.0 / 128.0;
constexpr double kLanczos[15] = {
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

constexpr double kSqrtTwoPi = 2.5066282746310005024157652848110;

// Valid for x >= 0.5.
double lanczos_ln(double x) {
    double sum = kLanczos[0];
    for (int i = 1; i < 15; ++i) sum += kLanczos[i] / (x - 1.0 + i);
    double base = x + kLanczosG - 0.5;
    return (x - 0.5) * std::log(base) - base + std::log(kSqrtTwoPi * sum / x) + std::log(x);
}

double lanczos_gamma(double x) {
    double sum = kLanczos[0];
    for (int i = 1; i < 15; ++i) sum += kLanczos[i] / (x - 1.0 + i);
    double base = x + kLanczosG - 0.5;
    return kSqrtTwoPi * sum * std::pow(base, x - 0.5) * std::exp(-base);
}

} // namespace

double gamma_fn(double x) {
    if (!(x > 0.0)) throw std::domain_error("gamma_fn: requires x > 0");
    if (x < 0.5) return lanczos_gamma(x + 1.0) / x;
    return lanczos_gamma(x);
}

double gamma_ln(double x) {
    if (!(x > 0.0)) throw std::domain_error("gamma_ln: requires x > 0");
    if (x < 0.5) return lanczos_ln(x + 1.0) - std::log(x);
    return lanczos_ln(x);
}

double beta_fn(double x, double y) {
    if (!(x > 0.0) || !(y > 0.0)) throw std::domain_error("beta_fn: requires x, y > 0");
    if (x + y < 100.0) return gamma_fn(x) * gamma_fn(y) / gamma_fn(x + y);
    return std::exp(gamma_ln(x) + gamma_ln(y) - gamma_ln(x + y));
}

HurstParameter::HurstParameter(double h) : h_(h), q_(h - 0.5) {
    if (!(h > 0.0) || !(h < 1.0))
        throw std::invalid_argument("HurstParameter: H must lie strictly in (0,1), got " +
                                    std::to_string(h));
    c_ = std::sqrt(2.0 * h * std::sin(M_PI * h) * gamma_fn(2.0 * h)) / gamma_fn(h + 0.5);
}

HypergeometricParams::HypergeometricParams(double a_, double b_, double c_) : a(a_), b(b_), c(c_) {
    double r = std::round(c);
    if (c <= 0.0 && std::abs(c - r) < 1e-12)
        throw std::invalid_argument("HypergeometricParams: c must not be a non-positive integer");
}

namespace detail {

// Series at |x| < 1. Terms are generated by the recurrence
// t_{j+1} = t_j (a+j)(b+j)/((c+j)(j+1)) x; stops once two consecutive terms
// fall below 1e-14 relative (the series may alternate for x < 0).
double hyp_series(double a, double b, double c, double x) {
    double term = 1.0;
    double sum = 1.0;
    int small_streak = 0;
    for (int j = 0; j < 10000; ++j) {
        term *= (a + j) * (b + j) / ((c + j) * (j + 1.0)) * x;
        sum += term;
        if (term == 0.0) return sum;
        if (std::abs(term) <= 1e-14 * std::abs(sum)) {
            if (++small_streak >= 2) return sum;
        } else {
            small_streak = 0;
        }
    }
    throw accuracy_error("hyp2f1: series did not converge within 10000 terms", sum);
}

} // namespace detail

double hyp2f1(const HypergeometricParams& p, double x) {
    if (x > 0.0) throw std::domain_error("hyp2f1: only x <= 0 supported");
    if (x == 0.0 || p.a == 0.0 || p.b == 0.0) return 1.0;
    if (x > -1.0) return detail::hyp_series(p.a, p.b, p.c, x);
    // Pfaff: transformed argument x/(x-1) lies in [1/2, 1) for x <= -1.
    double y = x / (x - 1.0);
    return std::pow(1.0 - x, -p.a) * detail::hyp_series(p.a, p.c - p.b, p.c, y);
}

double constant_cH(const HurstParameter& h) {
    double H = h.value();
    return std::sqrt(2.0 * H * gamma_fn(H + 0.5) * gamma_fn(1.5 - H) / gamma_fn(2.0 - 2.0 * H)) /
           gamma_fn(H + 0.5);
}

double constant_CH(const HurstParameter& h) {
    double H = h.value();
    return std::sqrt(2.0 * H * std::sin(M_PI * H) * gamma_fn(2.0 * H)) / gamma_fn(H + 0.5);
}

} // namespace frale
