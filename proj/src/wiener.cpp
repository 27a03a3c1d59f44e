#include "frale/wiener.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <json.hpp>

#include "frale/kernels.hpp"
#include "frale/parallel.hpp"
#include "frale/quadrature.hpp"

namespace frale {

StepFunction::StepFunction(std::vector<double> bp, std::vector<double> lv)
    : breakpoints(std::move(bp)), levels(std::move(lv)) {
    if (breakpoints.size() < 2 || breakpoints.front() != 0.0)
        throw std::invalid_argument("StepFunction: breakpoints must start at 0");
    if (levels.size() + 1 != breakpoints.size())
        throw std::invalid_argument("StepFunction: need one level per interval");
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i)
        if (!(breakpoints[i] < breakpoints[i + 1]))
            throw std::invalid_argument("StepFunction: breakpoints must increase strictly");
    for (double a : levels)
        if (!std::isfinite(a)) throw std::invalid_argument("StepFunction: non-finite level");
}

double StepFunction::value(double u) const {
    if (u <= 0.0 || u > horizon()) return 0.0;
    auto it = std::lower_bound(breakpoints.begin(), breakpoints.end(), u);
    std::size_t idx = static_cast<std::size_t>(it - breakpoints.begin());
    // u lies in (breakpoints[idx-1], breakpoints[idx]]
    return levels[idx - 1];
}

StepFunction StepFunction::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (!j.is_array() || j.empty())
        throw std::invalid_argument("StepFunction: JSON must be a nonempty array");
    std::vector<double> bp{0.0};
    std::vector<double> lv;
    for (const auto& item : j) {
        bp.push_back(item.at("upto").get<double>());
        lv.push_back(item.at("level").get<double>());
    }
    return StepFunction(std::move(bp), std::move(lv));
}

std::string StepFunction::to_json() const {
    nlohmann::json j = nlohmann::json::array();
    for (std::size_t i = 0; i < levels.size(); ++i)
        j.push_back({{"upto", breakpoints[i + 1]}, {"level", levels[i]}});
    return j.dump();
}

double apply_KH(const HurstParameter& h, const StepFunction& g, double s) {
    if (s <= 0.0 || s >= g.horizon()) return 0.0;
    // Few steps: sum kernel differences directly so the jump-sum identity
    // with the process values is exact to rounding. Many steps: one
    // incremental kernel row over all breakpoints.
    if (g.levels.size() <= 64) {
        double acc = 0.0;
        for (std::size_t j = 0; j < g.levels.size(); ++j) {
            if (g.levels[j] == 0.0) continue;
            double upper = g.breakpoints[j + 1] > s ? mg_kernel(h, g.breakpoints[j + 1], s) : 0.0;
            double lower = g.breakpoints[j] > s ? mg_kernel(h, g.breakpoints[j], s) : 0.0;
            acc += g.levels[j] * (upper - lower);
        }
        return acc;
    }
    MgKernelRow row(h, s, g.breakpoints);
    double acc = 0.0;
    for (std::size_t j = 0; j < g.levels.size(); ++j)
        acc += g.levels[j] * (row.values()[j + 1] - row.values()[j]);
    return acc;
}

double apply_KH(const HurstParameter& h, const SmoothFn& g, double s, double T) {
    if (!(T > 0.0)) throw std::invalid_argument("apply_KH: T must be > 0");
    if (s <= 0.0 || s >= T) return 0.0;
    double q = h.q();
    if (q == 0.0) return g(s); // order-zero fractional integral
    if (q < 0.0)
        throw std::domain_error(
            "apply_KH: general integrands need H >= 1/2; use step functions for H < 1/2");
    // (K^H g)(s) = c_H s^{-q} int_0^{(T-s)^q} (s+v^{1/q})^q g(s+v^{1/q}) dv
    // after v = (u-s)^q absorbs the Riemann-Liouville singularity.
    double inv_q = 1.0 / q;
    QuadOptions opt;
    opt.rel_tol = 1e-9;
    auto f = [&](double v) {
        double u = s + std::pow(v, inv_q);
        return std::pow(u, q) * g(u);
    };
    double integral = integrate(f, 0.0, std::pow(T - s, q), opt).value;
    return h.norm_constant() * std::pow(s, -q) * integral;
}

double wiener_integral(const HurstParameter& h, const StepFunction& g, const DriverPath& driver) {
    double acc = 0.0;
    for (std::size_t i = 0; i < driver.times.size(); ++i)
        acc += apply_KH(h, g, driver.times[i]) * driver.sizes[i];
    return acc;
}

double wiener_integral(const HurstParameter& h, const SmoothFn& g, double T,
                       const DriverPath& driver) {
    double acc = 0.0;
    for (std::size_t i = 0; i < driver.times.size(); ++i)
        acc += apply_KH(h, g, driver.times[i], T) * driver.sizes[i];
    return acc;
}

double l2h_norm(const HurstParameter& h, const StepFunction& g) {
    double q = h.q();
    auto f2 = [&](double s) {
        double v = apply_KH(h, g, s);
        return v * v;
    };
    QuadOptions opt;
    opt.rel_tol = 1e-8;
    double origin_hint = -2.0 * std::abs(q);
    double break_hint = q < 0.0 ? 2.0 * q : q;
    KahanSum acc;
    for (std::size_t j = 0; j + 1 < g.breakpoints.size(); ++j) {
        double a = g.breakpoints[j], b = g.breakpoints[j + 1];
        double alpha = (j == 0) ? origin_hint : 0.0;
        acc.add(integrate_singular(f2, a, b, alpha, break_hint, opt).value);
    }
    return std::sqrt(std::max(acc.value(), 0.0));
}

double l2h_norm(const HurstParameter& h, const SmoothFn& g, double T) {
    if (h.q() < 0.0)
        throw std::domain_error(
            "l2h_norm: general integrands need H >= 1/2; use step functions for H < 1/2");
    auto f2 = [&](double s) {
        double v = apply_KH(h, g, s, T);
        return v * v;
    };
    QuadOptions opt;
    opt.rel_tol = 1e-7;
    opt.abs_tol = 1e-10;
    double q = h.q();
    QuadResult r = integrate_singular(f2, 0.0, T, -2.0 * q, q, opt);
    return std::sqrt(std::max(r.value, 0.0));
}

StepFunction staircase(const SmoothFn& g, double T, std::size_t cells) {
    if (cells == 0) throw std::invalid_argument("staircase: need at least one cell");
    std::vector<double> bp(cells + 1), lv(cells);
    for (std::size_t j = 0; j <= cells; ++j)
        bp[j] = T * static_cast<double>(j) / static_cast<double>(cells);
    for (std::size_t j = 0; j < cells; ++j) lv[j] = g(0.5 * (bp[j] + bp[j + 1]));
    return StepFunction(std::move(bp), std::move(lv));
}

double l2h_refinement_increment(const HurstParameter& h, const SmoothFn& g, double T, int level) {
    if (level < 0 || level > 20) throw std::invalid_argument("l2h_refinement_increment: level");
    std::size_t coarse_cells = std::size_t{1} << level;
    StepFunction coarse = staircase(g, T, coarse_cells);
    StepFunction fine = staircase(g, T, 2 * coarse_cells);
    std::vector<double> diff(fine.levels.size());
    for (std::size_t j = 0; j < diff.size(); ++j) diff[j] = fine.levels[j] - coarse.levels[j / 2];
    StepFunction delta(fine.breakpoints, std::move(diff));
    return l2h_norm(h, delta);
}

} // namespace frale
