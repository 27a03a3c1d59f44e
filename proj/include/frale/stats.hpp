#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace frale {

struct MeanVar {
    std::size_t n = 0;
    double mean = 0.0;
    double variance = 0.0; // unbiased
    double se_mean = 0.0;  // sqrt(variance / n)
};

/// Ordered, compensated reduction; deterministic regardless of how the data
/// was produced in parallel.
MeanVar summarize(std::span<const double> x);

/// Unbiased cumulant estimators (Fisher k-statistics) k2, k3, k4 with
/// leave-one-out jackknife standard errors.
struct KStatistics {
    std::size_t n = 0;
    double k2 = 0.0, k3 = 0.0, k4 = 0.0;
    double se_k2 = 0.0, se_k3 = 0.0, se_k4 = 0.0;
};

KStatistics k_statistics(std::span<const double> x);

/// Least-squares slope of log(y) against log(x); x, y > 0.
double fit_loglog_slope(std::span<const double> x, std::span<const double> y);

} // namespace frale
