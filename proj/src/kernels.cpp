#include "frale/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "frale/errors.hpp"
#include "frale/parallel.hpp"
#include "frale/quadrature.hpp"

namespace frale {

const char* kernel_name(KernelKind kind) {
    return kind == KernelKind::MolchanGolosov ? "mg" : "mvn";
}

namespace {

// x_+^p with the indicator convention at p == 0.
double pow_plus(double x, double p) {
    if (x <= 0.0) return 0.0;
    if (p == 0.0) return 1.0;
    return std::pow(x, p);
}

// (t+r)^q - r^q for r > 0, written to keep precision when t/r is tiny.
double power_diff(double t, double r, double q) {
    return std::pow(r, q) * std::expm1(q * std::log1p(t / r));
}

// int_s^t u^q (u-s)^{q-1} du via the substitution v = (u-s)^q, which absorbs
// the endpoint singularity exactly. Requires q > 0.
double simplified_integral(double q, double t, double s, double rel_tol) {
    double vmax = std::pow(t - s, q);
    double inv_q = 1.0 / q;
    QuadOptions opt;
    opt.rel_tol = rel_tol;
    auto f = [&](double v) { return std::pow(s + std::pow(v, inv_q), q); };
    return integrate(f, 0.0, vmax, opt).value * inv_q;
}

// int_s^t u^{q-1} (u-s)^{q-1} du via the same substitution; q > 0.
double simplified_integral_dminus(double q, double t, double s, double rel_tol) {
    double vmax = std::pow(t - s, q);
    double inv_q = 1.0 / q;
    QuadOptions opt;
    opt.rel_tol = rel_tol;
    auto f = [&](double v) { return std::pow(s + std::pow(v, inv_q), q - 1.0); };
    return integrate(f, 0.0, vmax, opt).value * inv_q;
}

} // namespace

// Branch selection keeps every series far from its slow zone: the direct
// series degrades as x -> -1 and the Pfaff series as its argument
// x/(x-1) -> 1 (x -> -infinity).
double mg_f_tilde(const HurstParameter& h, double x) {
    if (x > 0.0) throw std::domain_error("mg_f_tilde: only x <= 0 arises");
    double H = h.value(), q = h.q();
    if (q == 0.0) return 1.0;
    if (x > -0.5) return detail::hyp_series(0.5 - H, H - 0.5, H + 0.5, x);
    if (x >= -49.0) {
        // Pfaff: F = (1-x)^q F(-q, 1, H+1/2, x/(x-1)), argument in [1/3, 0.98].
        return std::pow(1.0 - x, q) * detail::hyp_series(0.5 - H, 1.0, H + 0.5, x / (x - 1.0));
    }
    // The Pfaff series needs O(|x|) terms here; switch to the argument -> 1
    // connection formula of the transformed series, whose first coefficient
    // collapses to 1/2 and whose second hypergeometric factor is elementary:
    //   F(-q, 1, 1+q, 1-w) = 1/2 F(-q, 1, 1-2q, w) + B w^{2q} (1-w)^{-q},
    //   B = Gamma(1+q) Gamma(1-2q) / (2 Gamma(1-q)),  w = 1/(1-x).
    double w = 1.0 / (1.0 - x);
    double B = gamma_fn(1.0 + q) * gamma_fn(1.0 - 2.0 * q) / (2.0 * gamma_fn(1.0 - q));
    double term = 1.0;
    double sum = 1.0;
    for (int j = 0; j < 64; ++j) {
        term *= (-q + j) * (1.0 + j) / ((1.0 - 2.0 * q + j) * (j + 1.0)) * w;
        sum += term;
        if (std::abs(term) <= 1e-15 * std::abs(sum)) break;
    }
    double F = 0.5 * sum + B * std::pow(w, 2.0 * q) * std::pow(1.0 - w, -q);
    return std::pow(1.0 - x, q) * F;
}

double mg_kernel_hyp(const HurstParameter& h, double t, double s) {
    if (!(t > 0.0)) throw std::domain_error("mg_kernel: requires t > 0");
    if (s <= 0.0 || s >= t) return 0.0;
    if (h.q() == 0.0) return 1.0;
    return h.norm_constant() * std::pow(t - s, h.q()) * mg_f_tilde(h, (s - t) / s);
}

double mg_kernel_simplified(const HurstParameter& h, double t, double s) {
    if (!(h.q() > 0.0)) throw std::domain_error("mg_kernel_simplified: requires H > 1/2");
    if (!(t > 0.0)) throw std::domain_error("mg_kernel: requires t > 0");
    if (s <= 0.0 || s >= t) return 0.0;
    double q = h.q();
    double integral = simplified_integral(q, t, s, 1e-10);
    return q * h.norm_constant() * std::pow(s, -q) * integral;
}

double mg_kernel(const HurstParameter& h, double t, double s) {
    if (!(t > 0.0)) throw std::domain_error("mg_kernel: requires t > 0");
    if (s <= 0.0 || s >= t) return 0.0;
    if (h.q() == 0.0) return 1.0;
    if (h.q() > 0.0) return mg_kernel_simplified(h, t, s);
    return mg_kernel_hyp(h, t, s);
}

double mvn_kernel(const HurstParameter& h, double t, double s) {
    double q = h.q();
    double c = h.norm_constant();
    if (s >= 0.0) {
        if (s >= t) return 0.0;
        return c * pow_plus(t - s, q);
    }
    if (s >= t) return -c * pow_plus(-s, q);
    if (q == 0.0) return 0.0; // both indicators are 1 for s < 0 < t
    return c * power_diff(t, -s, q); // (t-s)^q - (-s)^q
}

double mg_kernel_l2(const HurstParameter& h, double t) {
    if (!(t > 0.0)) throw std::domain_error("mg_kernel_l2: requires t > 0");
    double target = std::pow(t, 2.0 * h.value());
    if (h.q() == 0.0) return t;
    auto f = [&](double s) {
        double z = mg_kernel(h, t, s);
        return z * z;
    };
    QuadOptions opt;
    opt.rel_tol = 1e-8;
    double aq = std::abs(2.0 * h.q());
    QuadResult r = integrate_singular(f, 0.0, t, -aq, 2.0 * h.q(), opt);
    if (std::abs(r.value - target) > 1e-5 * target)
        throw accuracy_error("mg_kernel_l2: isometry contract violated at H=" +
                                 std::to_string(h.value()),
                             r.value);
    return r.value;
}

double mg_increment_l2(const HurstParameter& h, double t, double s) {
    if (!(t > 0.0) || !(s > 0.0)) throw std::domain_error("mg_increment_l2: requires s, t > 0");
    if (t == s) return 0.0;
    double lo = std::min(s, t), hi = std::max(s, t);
    auto diff2 = [&](double u) {
        double d = mg_kernel(h, hi, u) - mg_kernel(h, lo, u);
        return d * d;
    };
    auto upper2 = [&](double u) {
        double z = mg_kernel(h, hi, u);
        return z * z;
    };
    double aq = std::abs(2.0 * h.q());
    double inner_hint = h.q() < 0.0 ? 2.0 * h.q() : h.q();
    QuadOptions opt;
    opt.rel_tol = 1e-8;
    QuadResult left = integrate_singular(diff2, 0.0, lo, -aq, inner_hint, opt);
    QuadResult right = integrate_singular(upper2, lo, hi, inner_hint, 2.0 * h.q(), opt);
    return left.value + right.value;
}

namespace {

KernelMomentResult divergent_result(KernelKind kind, const HurstParameter& h, double t, int k) {
    return {kind, k, h.value(), t, true, std::numeric_limits<double>::quiet_NaN(), 0.0};
}

// MvN moment over (-infinity, 0): int_0^infty ((t+r)^q - r^q)^K dr, split at
// R0 with a log-space sweep out to R chosen from the analytic tail bound.
double mvn_negative_part(double q, double t, int k, double rel_tol, double& err) {
    auto f = [&](double r) {
        if (r == 0.0) return 0.0; // measure-zero point, avoids 0^q for q < 0
        return std::pow(power_diff(t, r, q), static_cast<double>(k));
    };
    double r0 = 8.0 * std::max(t, 1.0);
    double near_hint = q < 0.0 ? k * q : q;
    QuadOptions opt;
    opt.rel_tol = rel_tol;
    QuadResult near = integrate_singular(f, 0.0, r0, near_hint, 0.0, opt);

    // Tail integrand is bounded by (|q| t)^K r^{K(q-1)} (mean-value bound
    // on (1+z)^q - 1); grow the horizon until the bound is negligible.
    double decay = k * (q - 1.0) + 1.0; // tail of the integral ~ R^{decay} < 0
    double tail_coeff = std::pow(std::abs(q) * t, k) / -decay;
    double R = r0;
    double scale = std::max(std::abs(near.value), 1e-300);
    while (tail_coeff * std::pow(R, decay) > 1e-8 * scale && R < 1e280) R *= 4.0;
    QuadResult far{0.0, 0.0};
    if (R > r0) {
        auto g = [&](double x) {
            double r = std::exp(x);
            return f(r) * r;
        };
        far = integrate(g, std::log(r0), std::log(R), opt);
    }
    err = near.error + far.error + tail_coeff * std::pow(R, decay);
    return near.value + far.value;
}

} // namespace

KernelMomentResult kernel_moment(KernelKind kind, const HurstParameter& h, double t, int k) {
    if (k < 2) throw std::invalid_argument("kernel_moment: requires K >= 2");
    if (!(t > 0.0)) throw std::domain_error("kernel_moment: requires t > 0");
    double q = h.q();
    double kd = static_cast<double>(k);

    if (kind == KernelKind::MolchanGolosov) {
        // Divergent iff H >= 1/2 + 1/K (singularity at s = 0) or
        // K(H-1/2) <= -1 (H < 1/2 branch, both endpoints).
        if (q >= 1.0 / kd || kd * q <= -1.0) return divergent_result(kind, h, t, k);
        auto f = [&](double s) { return std::pow(mg_kernel(h, t, s), kd); };
        QuadOptions opt;
        opt.rel_tol = 1e-7;
        opt.max_panels = 8000;
        QuadResult r = integrate_singular(f, 0.0, t, -kd * std::abs(q), kd * q, opt);
        if (r.error > 1e-5 * std::abs(r.value))
            throw accuracy_error("kernel_moment: quadrature above 1e-5 relative", r.value);
        return {kind, k, h.value(), t, false, r.value, r.error};
    }

    // Mandelbrot-Van Ness: the H < 1/2 endpoint singularities diverge at the
    // same threshold as Molchan-Golosov; every K >= 2 is finite for H > 1/2.
    if (kd * q <= -1.0) return divergent_result(kind, h, t, k);
    double c_pow = std::pow(h.norm_constant(), kd);
    // s in [0, t): f = C (t-s)^q exactly, closed-form integral.
    double positive_part = c_pow * std::pow(t, kd * q + 1.0) / (kd * q + 1.0);
    double err = 0.0;
    double negative_part = (q == 0.0) ? 0.0 : c_pow * mvn_negative_part(q, t, k, 1e-7, err);
    err *= c_pow;
    double value = positive_part + negative_part;
    if (err > 1e-5 * std::abs(value))
        throw accuracy_error("kernel_moment: quadrature above 1e-5 relative", value);
    return {kind, k, h.value(), t, false, value, err};
}

double mg_moment_partial(const HurstParameter& h, double t, int k, double eps) {
    if (!(eps > 0.0) || !(eps < t)) throw std::domain_error("mg_moment_partial: need 0 < eps < t");
    auto f = [&](double s) { return std::pow(mg_kernel(h, t, s), static_cast<double>(k)); };
    QuadOptions opt;
    opt.rel_tol = 1e-7;
    opt.max_panels = 8000;
    return integrate_singular(f, eps, t, 0.0, k * h.q(), opt).value;
}

std::pair<double, double> g1_g2_bounds(const HurstParameter& h) {
    double H = h.value();
    if (!(H > 0.5) || !(H < 0.75))
        throw std::domain_error("g1_g2_bounds: requires H strictly in (1/2, 3/4)");
    double p = H - 0.5;
    double g1 = beta_fn(3.0 - 4.0 * H, 4.0 * H - 1.0) / 16.0 +
                beta_fn(2.0 - 2.0 * H, 4.0 * H - 1.0) / 4.0 +
                beta_fn(2.0 * H, 4.0 * H - 1.0) / 4.0 +
                beta_fn(4.0 * H - 1.0, 4.0 * H - 1.0) / 16.0 + 0.375 / (4.0 * H - 1.0);
    double g2 = std::pow(p, 4.0) / (5.0 - 4.0 * p) + 1.0 / (4.0 * p + 1.0);
    return {g1, g2};
}

double mg_kernel_sderivative(const HurstParameter& h, double t, double s) {
    double q = h.q();
    if (!(q > 0.0)) throw std::domain_error("mg_kernel_sderivative: requires H > 1/2");
    if (!(s > 0.0) || !(s < t)) throw std::domain_error("mg_kernel_sderivative: need 0 < s < t");
    double c = h.norm_constant();
    double J = simplified_integral(q, t, s, 1e-10);
    double D = simplified_integral_dminus(q, t, s, 1e-10);
    double Jprime = -std::pow(t, q) * std::pow(t - s, q - 1.0) + q * D;
    return q * c * (-q * std::pow(s, -q - 1.0) * J + std::pow(s, -q) * Jprime);
}

double mg_sderivative_integral(const HurstParameter& h, double t, double a, double b) {
    double q = h.q();
    if (!(q > 0.0)) throw std::domain_error("mg_sderivative_integral: requires H > 1/2");
    if (!(a > 0.0) || !(a < b) || !(b <= t))
        throw std::domain_error("mg_sderivative_integral: need 0 < a < b <= t");
    QuadOptions opt;
    opt.rel_tol = 1e-8;
    opt.abs_tol = 1e-11;
    if (b < t) {
        auto df = [&](double s) { return mg_kernel_sderivative(h, t, s); };
        return integrate(df, a, b, opt).value;
    }
    double c = h.norm_constant();
    // dz/ds = -q c t^q s^{-q} (t-s)^{q-1} + r(s),
    // r(s) = q^2 c s^{-q} (D(s) - J(s)/s) bounded, r -> 0 as s -> t.
    // The first part in the substituted variable v = (t-s)^q:
    //   int_a^t s^{-q}(t-s)^{q-1} ds = (1/q) int_0^{(t-a)^q} (t-v^{1/q})^{-q} dv,
    // smooth all the way to v = 0 even where t - v^{1/q} rounds to t.
    double inv_q = 1.0 / q;
    auto sing = [&](double v) { return std::pow(t - std::pow(v, inv_q), -q); };
    double i_sing = integrate(sing, 0.0, std::pow(t - a, q), opt).value * inv_q;
    auto r = [&](double s) {
        double J = simplified_integral(q, t, s, 1e-10);
        double D = simplified_integral_dminus(q, t, s, 1e-10);
        return q * q * c * std::pow(s, -q) * (D - J / s);
    };
    QuadOptions ropt;
    ropt.rel_tol = 1e-6;
    ropt.abs_tol = 1e-9;
    double i_rest = integrate_singular(r, a, t, 0.0, q, ropt).value;
    return -q * c * std::pow(t, q) * i_sing + i_rest;
}

MgKernelRow::MgKernelRow(const HurstParameter& h, double s, const std::vector<double>& t_grid) {
    values_.assign(t_grid.size(), 0.0);
    double q = h.q();
    double c = h.norm_constant();
    if (s <= 0.0) return;
    if (q == 0.0) {
        for (std::size_t i = 0; i < t_grid.size(); ++i)
            if (t_grid[i] > s) values_[i] = 1.0;
        return;
    }
    if (q < 0.0) {
        for (std::size_t i = 0; i < t_grid.size(); ++i)
            if (t_grid[i] > s) values_[i] = mg_kernel_hyp(h, t_grid[i], s);
        return;
    }
    // H > 1/2: z(t,s) = c s^{-q} [ t^q (t-s)^q - q G(t) ] with
    // G(t) = int_s^t u^{q-1} (u-s)^q du accumulated cell by cell.
    double s_pow = std::pow(s, -q);
    KahanSum G;
    double prev = s;
    QuadOptions opt;
    opt.rel_tol = 1e-10;
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        double t = t_grid[i];
        if (t <= s) continue;
        auto g = [&](double u) { return std::pow(u, q - 1.0) * std::pow(u - s, q); };
        QuadResult cell = (prev == s) ? integrate_singular(g, prev, t, q, 0.0, opt)
                                      : integrate(g, prev, t, opt);
        G.add(cell.value);
        prev = t;
        values_[i] = c * s_pow * (std::pow(t, q) * std::pow(t - s, q) - q * G.value());
    }
}

} // namespace frale
