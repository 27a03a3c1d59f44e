#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "frale/kernels.hpp"
#include "frale/levy_driver.hpp"
#include "frale/simulate.hpp"
#include "frale/specfun.hpp"

namespace frale {

/// Dyadic quadratic variation V_n = sum of squared increments over the
/// 2^n-point partition of [0,t], ensemble means against the analytic
/// E V_n = m2 t^{2H} 2^{-n(2H-1)}.
struct DyadicQvReport {
    double t = 0.0;
    double hurst = 0.0;
    double m2 = 0.0;
    std::vector<int> levels;
    std::vector<double> v_mean;
    std::vector<double> v_se;
    std::vector<double> expected;
    double fitted_decay_exponent = 0.0; // e in V_n ~ 2^{-n e}
};

/// From precomputed paths sampled on a dyadic grid of [0, t]; throws
/// std::invalid_argument when a grid cannot be refined to every level.
DyadicQvReport dyadic_qv(const std::vector<SamplePath>& paths, double t,
                         const std::vector<int>& levels);

/// Streaming Monte Carlo variant (paths are generated per index and reduced
/// in index order).
DyadicQvReport dyadic_qv_mc(KernelKind kind, const HurstParameter& h,
                            const LevyMeasureSpec& spec, double t,
                            const std::vector<int>& levels, std::uint64_t ensemble,
                            std::uint64_t seed, double s_trunc = 0.0);

/// k-th cumulant of the process at time t: analytic side
/// (int kernel^k) * m_k with divergence propagation, empirical side from
/// unbiased k-statistics with jackknife standard errors.
struct CumulantReport {
    int k = 0;
    bool analytic_divergent = false;
    double analytic = 0.0;
    double empirical = 0.0;
    double se = 0.0;
};

std::vector<CumulantReport> cumulants(KernelKind kind, const HurstParameter& h,
                                      const LevyMeasureSpec& spec, double t,
                                      std::uint64_t ensemble, std::uint64_t seed,
                                      double s_trunc = 0.0);

/// Joint characteristic function at (times, freqs):
/// analytic exp(int Psi(sum u_j kernel(t_j, s)) ds) vs the ensemble mean of
/// exp(i sum u_j Y_{t_j}).
struct CharFnPoint {
    std::vector<double> times;
    std::vector<double> freqs;
    std::complex<double> analytic;
    std::complex<double> empirical;
    double se_re = 0.0;
    double se_im = 0.0;
};

std::complex<double> charfn_analytic(KernelKind kind, const HurstParameter& h,
                                     const LevyMeasureSpec& spec,
                                     const std::vector<double>& times,
                                     const std::vector<double>& freqs);

CharFnPoint charfn(KernelKind kind, const HurstParameter& h, const LevyMeasureSpec& spec,
                   const std::vector<double>& times, const std::vector<double>& freqs,
                   std::uint64_t ensemble, std::uint64_t seed, double s_trunc = 0.0);

/// P(Y_t = 0) vs P(X_t = 0) discrimination: exact zeros of the MG process
/// are detected structurally (no jumps before t implies a zero value), the
/// MvN side uses a 1e-12 band.
struct ZeroProbReport {
    double p_mg = 0.0;
    double p_mvn = 0.0;
    double se_mg = 0.0;
    double se_mvn = 0.0;
    double bound_mg = 0.0;  // e^{-lambda t}, lower bound for the MG side
    double bound_mvn = 0.0; // lambda (1+t) e^{-lambda (1+t)}, upper bound
};

ZeroProbReport zero_probability_test(const HurstParameter& h, double lambda, double t,
                                     std::uint64_t ensemble, std::uint64_t seed,
                                     double s_trunc = 50.0);

/// Empirical E Y_t Y_s over a time grid with per-cell standard errors and
/// the fBm covariance overlay.
struct CovarianceReport {
    std::vector<double> times;
    std::vector<double> empirical; // row-major, times x times
    std::vector<double> analytic;
    std::vector<double> se;
    double max_abs_z = 0.0;
};

CovarianceReport covariance_grid(KernelKind kind, const HurstParameter& h,
                                 const LevyMeasureSpec& spec, const std::vector<double>& times,
                                 std::uint64_t ensemble, std::uint64_t seed,
                                 double s_trunc = 0.0);

} // namespace frale
