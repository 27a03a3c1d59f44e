#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "frale/kernels.hpp"
#include "frale/levy_driver.hpp"
#include "frale/specfun.hpp"

namespace frale {

enum class ProcessKind { FlpMG, FlpMvN, FbmMG, Mixed, ShiftedMG };
enum class SchemeTag { JumpSum, PathwiseIBP, RiemannL2, TruncatedMvN, ShiftedMG };

const char* process_name(ProcessKind kind);
const char* scheme_name(SchemeTag tag);

struct PathMeta {
    ProcessKind kind;
    SchemeTag scheme;
    double hurst;
    std::uint64_t seed;
    std::uint64_t spec_hash = 0;
    std::optional<double> s_trunc;
    std::optional<double> sigma;
    std::optional<double> epsilon;
};

/// One realized trajectory: strictly increasing grid starting at 0, values
/// with value[0] == 0, and full provenance.
struct SamplePath {
    std::vector<double> grid;
    std::vector<double> values;
    PathMeta meta;
};

/// Uniform grid 0, T/n, ..., T.
std::vector<double> make_uniform_grid(double T, std::size_t n);
/// Dyadic grid of level n on [0, t]: 2^n + 1 points.
std::vector<double> make_dyadic_grid(double t, int level);

/// Exact jump-sum scheme: Y_t = sum_{jumps s_i < t} z_H(t, s_i) dL_i.
/// Kernels are evaluated at the exact jump times, never grid-snapped.
SamplePath simulate_flpmg_jumpsum(const HurstParameter& h, const LevyMeasureSpec& spec,
                                  const std::vector<double>& grid, std::uint64_t seed);

/// Same path law, opposite route: Y_t = -int_0^t (d/ds z_H(t,s)) L_s ds with
/// the derivative integrated numerically over inter-jump intervals where the
/// driver is constant. H > 1/2. Same seed as the jump-sum scheme gives the
/// same driver path, so the two schemes can be compared pathwise.
SamplePath simulate_flpmg_ibp(const HurstParameter& h, const LevyMeasureSpec& spec,
                              const std::vector<double>& grid, std::uint64_t seed);

/// Mandelbrot-Van Ness path from a two-sided driver truncated at -s_trunc.
SamplePath simulate_flpmvn(const HurstParameter& h, const LevyMeasureSpec& spec,
                           const std::vector<double>& grid, std::uint64_t seed, double s_trunc);

/// Truncation horizon that keeps the analytic truncation error of E X_T^2
/// below 1e-3 * m2 * T^{2H} (slow for H near 1; capped for practicality).
double default_s_trunc(const HurstParameter& h, double T);

/// Shifted process Z^s_t = Y^s_{t+s} - Y^s_s realized on the grid via the
/// substituted representation.
SamplePath simulate_shifted_mg(const HurstParameter& h, const LevyMeasureSpec& spec,
                               double s_shift, const std::vector<double>& grid,
                               std::uint64_t seed);

/// Z^s_t from an existing two-sided driver (only jumps in (-s_shift, t]
/// contribute). Shared-driver evaluation is what couples Z^s across shifts.
double shifted_mg_value(const HurstParameter& h, const DriverPath& driver, double s_shift,
                        double t);

/// MvN value from an existing two-sided driver (all jumps contribute through
/// the kernel's own support).
double flpmvn_value(const HurstParameter& h, const DriverPath& driver, double t);

/// fLpMG value at a single time from a one-sided driver.
double flpmg_value(const HurstParameter& h, const DriverPath& driver, double t);

/// Cell-averaged Molchan-Golosov weights for the Brownian-driver scheme;
/// computed once, reused across a whole ensemble.
class FbmMgWeights {
public:
    FbmMgWeights(const HurstParameter& h, const std::vector<double>& grid);

    const std::vector<double>& grid() const { return grid_; }
    const HurstParameter& hurst() const { return h_; }
    /// weight of cell j for target time grid[k], j < k.
    double weight(std::size_t k, std::size_t j) const { return rows_[k][j]; }

private:
    HurstParameter h_;
    std::vector<double> grid_;
    std::vector<std::vector<double>> rows_;
};

/// fBm by the compact-interval representation, discretized with
/// L2-consistent cell-average weights.
SamplePath simulate_fbm_mg(const FbmMgWeights& weights, std::uint64_t seed);
SamplePath simulate_fbm_mg(const HurstParameter& h, const std::vector<double>& grid,
                           std::uint64_t seed);

/// Mixed market-model exponent U = sigma Z + epsilon W, Z an fLp (MG or MvN
/// by `kind`) independent of the Brownian part. H > 1/2, sigma/epsilon > 0.
SamplePath simulate_mixed(const HurstParameter& h, const LevyMeasureSpec& spec, double sigma,
                          double epsilon, const std::vector<double>& grid, std::uint64_t seed,
                          KernelKind kind, double s_trunc = 0.0);

/// exp(U), the price path of the market model.
std::vector<double> exp_path(const SamplePath& path);

} // namespace frale
