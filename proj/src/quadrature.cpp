#include "frale/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

#include "frale/errors.hpp"

namespace frale {

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule on [-1,1].
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct Panel {
    double a, b, value, error;
    bool operator<(const Panel& o) const { return error < o.error; }
};

Panel gk15(const Integrand& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double fc = f(c);
    double result_g = fc * kWg[3];
    double result_k = fc * kWgk[7];
    for (int i = 0; i < 7; ++i) {
        double x = h * kXgk[i];
        double fsum = f(c - x) + f(c + x);
        result_k += kWgk[i] * fsum;
        if (i % 2 == 1) result_g += kWg[i / 2] * fsum;
    }
    double value = result_k * h;
    double err = std::abs((result_k - result_g) * h);
    return {a, b, value, err};
}

} // namespace

QuadResult integrate(const Integrand& f, double a, double b, const QuadOptions& opt) {
    if (a == b) return {0.0, 0.0};
    std::priority_queue<Panel> heap;
    heap.push(gk15(f, a, b));
    double total = heap.top().value;
    double total_err = heap.top().error;
    int panels = 1;
    while (total_err > std::max(opt.abs_tol, opt.rel_tol * std::abs(total))) {
        if (panels >= opt.max_panels)
            throw accuracy_error("integrate: panel budget exhausted", total);
        Panel worst = heap.top();
        heap.pop();
        double m = 0.5 * (worst.a + worst.b);
        if (!(worst.a < m && m < worst.b))
            throw accuracy_error("integrate: interval below floating resolution", total);
        Panel left = gk15(f, worst.a, m);
        Panel right = gk15(f, m, worst.b);
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        ++panels;
    }
    return {total, total_err};
}

namespace {

int substitution_power(double gamma) {
    if (gamma >= 1.0) return 1;
    int p = static_cast<int>(std::ceil(2.0 / (gamma + 1.0)));
    return std::clamp(p, 2, 32);
}

// One-sided power substitution u = a + v^p on [a, m] (or mirrored on [m, b]).
QuadResult integrate_left_singular(const Integrand& f, double a, double m, double alpha,
                                   const QuadOptions& opt) {
    if (alpha > -1.0 && alpha < 1.0) {
        int p = substitution_power(alpha);
        double pd = static_cast<double>(p);
        double vmax = std::pow(m - a, 1.0 / pd);
        auto g = [&](double v) {
            double u = a + std::pow(v, pd);
            // v^p underflow: the transformed integrand tends to 0 there for
            // every integrable singularity, and f may be undefined at u = a.
            if (u <= a) return 0.0;
            return f(u) * pd * std::pow(v, pd - 1.0);
        };
        return integrate(g, 0.0, vmax, opt);
    }
    return integrate(f, a, m, opt);
}

} // namespace

QuadResult integrate_singular(const Integrand& f, double a, double b, double alpha, double beta,
                              const QuadOptions& opt) {
    if (a == b) return {0.0, 0.0};
    if (!(alpha > -1.0) || !(beta > -1.0))
        throw std::domain_error("integrate_singular: endpoint exponents must exceed -1");
    double m = 0.5 * (a + b);
    QuadOptions half = opt;
    half.abs_tol = 0.5 * opt.abs_tol;
    QuadResult left = integrate_left_singular(f, a, m, alpha, half);
    // Mirror [m, b] onto [0, b-m] so the b-side singularity sits at 0. Skip
    // offsets below the floating resolution of b; f may be undefined there.
    auto g = [&](double v) {
        double u = b - v;
        if (u >= b) return 0.0;
        return f(u);
    };
    QuadResult right = integrate_left_singular(g, 0.0, b - m, beta, half);
    return {left.value + right.value, left.error + right.error};
}

QuadResult integrate_to_inf(const Integrand& f, double a, double decay, double alpha,
                            const QuadOptions& opt) {
    if (!(decay < -1.0))
        throw std::domain_error("integrate_to_inf: integrand must decay faster than 1/s");
    // s = a + z/(1-z), ds = dz/(1-z)^2; near z=1 the mapped integrand behaves
    // like (1-z)^{-decay-2}, near z=0 like z^{alpha}.
    auto g = [&](double z) {
        double om = 1.0 - z;
        if (om <= 0.0) return 0.0; // beyond double resolution of the map
        double s = a + z / om;
        return f(s) / (om * om);
    };
    double edge = -decay - 2.0;
    return integrate_singular(g, 0.0, 1.0, alpha, std::min(edge, 1.0), opt);
}

} // namespace frale
