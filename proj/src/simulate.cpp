#include "frale/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "frale/errors.hpp"
#include "frale/parallel.hpp"
#include "frale/quadrature.hpp"
#include "frale/rng.hpp"

namespace frale {

const char* process_name(ProcessKind kind) {
    switch (kind) {
        case ProcessKind::FlpMG: return "flpmg";
        case ProcessKind::FlpMvN: return "flpmvn";
        case ProcessKind::FbmMG: return "fbm";
        case ProcessKind::Mixed: return "mixed";
        case ProcessKind::ShiftedMG: return "shifted-mg";
    }
    return "?";
}

const char* scheme_name(SchemeTag tag) {
    switch (tag) {
        case SchemeTag::JumpSum: return "jumpsum";
        case SchemeTag::PathwiseIBP: return "ibp";
        case SchemeTag::RiemannL2: return "riemann-l2";
        case SchemeTag::TruncatedMvN: return "truncated-mvn";
        case SchemeTag::ShiftedMG: return "shifted-mg";
    }
    return "?";
}

std::vector<double> make_uniform_grid(double T, std::size_t n) {
    if (!(T > 0.0) || n == 0) throw std::invalid_argument("make_uniform_grid: need T > 0, n >= 1");
    std::vector<double> g(n + 1);
    for (std::size_t i = 0; i <= n; ++i) g[i] = T * static_cast<double>(i) / static_cast<double>(n);
    return g;
}

std::vector<double> make_dyadic_grid(double t, int level) {
    if (level < 0 || level > 26) throw std::invalid_argument("make_dyadic_grid: level out of range");
    return make_uniform_grid(t, std::size_t{1} << level);
}

namespace {

void check_grid(const std::vector<double>& grid) {
    if (grid.size() < 2 || grid.front() != 0.0)
        throw std::invalid_argument("SamplePath grid must start at 0 with >= 2 points");
    for (std::size_t i = 0; i + 1 < grid.size(); ++i)
        if (!(grid[i] < grid[i + 1]))
            throw std::invalid_argument("SamplePath grid must be strictly increasing");
}

} // namespace

SamplePath simulate_flpmg_jumpsum(const HurstParameter& h, const LevyMeasureSpec& spec,
                                  const std::vector<double>& grid, std::uint64_t seed) {
    check_grid(grid);
    DriverPath driver = sample_compound_poisson(spec, grid.back(), seed);
    SamplePath path;
    path.grid = grid;
    path.values.assign(grid.size(), 0.0);
    path.meta = {ProcessKind::FlpMG, SchemeTag::JumpSum, h.value(), seed,
                 spec.hash(),        std::nullopt,       std::nullopt, std::nullopt};
    for (std::size_t i = 0; i < driver.times.size(); ++i) {
        MgKernelRow row(h, driver.times[i], grid);
        for (std::size_t k = 0; k < grid.size(); ++k)
            path.values[k] += row.values()[k] * driver.sizes[i];
    }
    return path;
}

SamplePath simulate_flpmg_ibp(const HurstParameter& h, const LevyMeasureSpec& spec,
                              const std::vector<double>& grid, std::uint64_t seed) {
    if (!(h.q() > 0.0)) throw std::domain_error("simulate_flpmg_ibp: requires H > 1/2");
    check_grid(grid);
    DriverPath driver = sample_compound_poisson(spec, grid.back(), seed);
    SamplePath path;
    path.grid = grid;
    path.values.assign(grid.size(), 0.0);
    path.meta = {ProcessKind::FlpMG, SchemeTag::PathwiseIBP, h.value(), seed,
                 spec.hash(),        std::nullopt,           std::nullopt, std::nullopt};

    for (std::size_t k = 1; k < grid.size(); ++k) {
        double t = grid[k];
        // Piecewise-constant driver: Y_t = -sum_j L_j int_{piece_j} dz/ds ds,
        // pieces delimited by the jump times below t. The first piece (L = 0)
        // contributes nothing, which also dodges the s -> 0 blowup of dz/ds.
        double level = 0.0;
        KahanSum acc;
        std::size_t i = 0;
        while (i < driver.times.size() && driver.times[i] < t) {
            double a = driver.times[i];
            level += driver.sizes[i];
            double b = (i + 1 < driver.times.size() && driver.times[i + 1] < t)
                           ? driver.times[i + 1]
                           : t;
            acc.add(-level * mg_sderivative_integral(h, t, a, b));
            ++i;
        }
        path.values[k] = acc.value();
    }
    return path;
}

double flpmg_value(const HurstParameter& h, const DriverPath& driver, double t) {
    double acc = 0.0;
    for (std::size_t i = 0; i < driver.times.size() && driver.times[i] < t; ++i)
        acc += mg_kernel(h, t, driver.times[i]) * driver.sizes[i];
    return acc;
}

double flpmvn_value(const HurstParameter& h, const DriverPath& driver, double t) {
    double acc = 0.0;
    for (std::size_t i = 0; i < driver.times.size(); ++i) {
        if (driver.times[i] >= t && driver.times[i] >= 0.0) break; // kernel support ends
        acc += mvn_kernel(h, t, driver.times[i]) * driver.sizes[i];
    }
    return acc;
}

SamplePath simulate_flpmvn(const HurstParameter& h, const LevyMeasureSpec& spec,
                           const std::vector<double>& grid, std::uint64_t seed, double s_trunc) {
    check_grid(grid);
    if (!(s_trunc > 0.0)) throw std::invalid_argument("simulate_flpmvn: s_trunc must be > 0");
    DriverPath driver = sample_two_sided(spec, std::max(s_trunc, grid.back()), seed);
    SamplePath path;
    path.grid = grid;
    path.values.assign(grid.size(), 0.0);
    path.meta = {ProcessKind::FlpMvN, SchemeTag::TruncatedMvN, h.value(),   seed,
                 spec.hash(),         s_trunc,                 std::nullopt, std::nullopt};
    for (std::size_t i = 0; i < driver.times.size(); ++i) {
        double s = driver.times[i];
        if (s < -s_trunc) continue;
        for (std::size_t k = 0; k < grid.size(); ++k) {
            double v = mvn_kernel(h, grid[k], s);
            if (v != 0.0) path.values[k] += v * driver.sizes[i];
        }
    }
    return path;
}

double default_s_trunc(const HurstParameter& h, double T) {
    double q = h.q();
    if (q == 0.0) return std::max(T, 1.0);
    // E (X - X^{(S)})^2 <= m2 C^2 q^2 T^2 S^{2H-2} / (2-2H); solve for the
    // S that pushes this under 1e-3 m2 T^{2H}.
    double c2 = h.norm_constant() * h.norm_constant();
    double coeff = c2 * q * q * T * T / (2.0 - 2.0 * h.value());
    double target = 1e-3 * std::pow(T, 2.0 * h.value());
    double s = std::pow(coeff / target, 1.0 / (2.0 - 2.0 * h.value()));
    return std::clamp(s, std::max(T, 1.0), 1e5);
}

double shifted_mg_value(const HurstParameter& h, const DriverPath& driver, double s_shift,
                        double t) {
    if (!(s_shift > 0.0)) throw std::invalid_argument("shifted_mg_value: s_shift must be > 0");
    double q = h.q();
    double c = h.norm_constant();
    double acc = 0.0;
    for (std::size_t i = 0; i < driver.times.size(); ++i) {
        double v = driver.times[i];
        if (v <= -s_shift) continue;
        double w = 0.0;
        if (v < t) w += std::pow(t - v, q) * mg_f_tilde(h, (v - t) / (v + s_shift));
        if (v < 0.0) w -= std::pow(-v, q) * mg_f_tilde(h, v / (v + s_shift));
        if (w != 0.0) acc += c * w * driver.sizes[i];
    }
    return acc;
}

SamplePath simulate_shifted_mg(const HurstParameter& h, const LevyMeasureSpec& spec,
                               double s_shift, const std::vector<double>& grid,
                               std::uint64_t seed) {
    check_grid(grid);
    if (!(s_shift > 0.0)) throw std::invalid_argument("simulate_shifted_mg: s_shift must be > 0");
    DriverPath driver = sample_two_sided(spec, std::max(s_shift, grid.back()), seed);
    SamplePath path;
    path.grid = grid;
    path.values.assign(grid.size(), 0.0);
    path.meta = {ProcessKind::ShiftedMG, SchemeTag::ShiftedMG, h.value(),   seed,
                 spec.hash(),            s_shift,              std::nullopt, std::nullopt};
    for (std::size_t k = 1; k < grid.size(); ++k)
        path.values[k] = shifted_mg_value(h, driver, s_shift, grid[k]);
    return path;
}

FbmMgWeights::FbmMgWeights(const HurstParameter& h, const std::vector<double>& grid)
    : h_(h), grid_(grid) {
    check_grid(grid_);
    std::size_t n = grid_.size();
    rows_.assign(n, {});
    QuadOptions opt;
    opt.rel_tol = 1e-9;
    double q = h_.q();
    for (std::size_t k = 1; k < n; ++k) {
        double t = grid_[k];
        rows_[k].assign(k, 0.0);
        for (std::size_t j = 0; j < k; ++j) {
            double a = grid_[j], b = grid_[j + 1];
            auto f = [&](double u) { return mg_kernel(h_, t, u); };
            // kernel ~ u^{-|q|} off the origin cell and ~ (t-u)^q at the top.
            double alpha = (j == 0) ? -std::abs(q) : 0.0;
            double beta = (j + 1 == k) ? q : 0.0;
            QuadResult cell = integrate_singular(f, a, b, alpha, beta, opt);
            rows_[k][j] = cell.value / (b - a);
        }
    }
}

SamplePath simulate_fbm_mg(const FbmMgWeights& weights, std::uint64_t seed) {
    const std::vector<double>& grid = weights.grid();
    std::vector<double> inc = sample_brownian_increments(grid, seed);
    SamplePath path;
    path.grid = grid;
    path.values.assign(grid.size(), 0.0);
    path.meta = {ProcessKind::FbmMG, SchemeTag::RiemannL2, weights.hurst().value(), seed,
                 0,                  std::nullopt,         std::nullopt,            std::nullopt};
    for (std::size_t k = 1; k < grid.size(); ++k) {
        KahanSum acc;
        for (std::size_t j = 0; j < k; ++j) acc.add(weights.weight(k, j) * inc[j]);
        path.values[k] = acc.value();
    }
    return path;
}

SamplePath simulate_fbm_mg(const HurstParameter& h, const std::vector<double>& grid,
                           std::uint64_t seed) {
    return simulate_fbm_mg(FbmMgWeights(h, grid), seed);
}

SamplePath simulate_mixed(const HurstParameter& h, const LevyMeasureSpec& spec, double sigma,
                          double epsilon, const std::vector<double>& grid, std::uint64_t seed,
                          KernelKind kind, double s_trunc) {
    if (!(h.q() > 0.0)) throw std::domain_error("simulate_mixed: requires H > 1/2");
    if (!(sigma > 0.0) || !(epsilon > 0.0))
        throw std::invalid_argument("simulate_mixed: requires sigma > 0 and epsilon > 0");
    check_grid(grid);
    SamplePath z;
    if (kind == KernelKind::MolchanGolosov) {
        z = simulate_flpmg_jumpsum(h, spec, grid, derive_seed(seed, 1));
    } else {
        double S = s_trunc > 0.0 ? s_trunc : default_s_trunc(h, grid.back());
        z = simulate_flpmvn(h, spec, grid, derive_seed(seed, 1), S);
    }
    std::vector<double> inc = sample_brownian_increments(grid, derive_seed(seed, 2));
    SamplePath path;
    path.grid = grid;
    path.values.assign(grid.size(), 0.0);
    path.meta = {ProcessKind::Mixed, SchemeTag::JumpSum, h.value(), seed,
                 spec.hash(),        z.meta.s_trunc,     sigma,     epsilon};
    double w = 0.0;
    for (std::size_t k = 1; k < grid.size(); ++k) {
        w += inc[k - 1];
        path.values[k] = sigma * z.values[k] + epsilon * w;
    }
    return path;
}

std::vector<double> exp_path(const SamplePath& path) {
    std::vector<double> out(path.values.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::exp(path.values[i]);
    return out;
}

} // namespace frale
