#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace frale {

/// One atom of a discrete Levy measure: a jump size with its arrival rate.
struct LevyAtom {
    double x;    // jump size, nonzero
    double rate; // > 0
};

struct MomentFunctionals {
    double m2;
    double m3;
    double m4;
};

/// Discrete atomic Levy measure nu = sum_i rate_i * delta_{x_i} for a
/// compound Poisson driver. Construction enforces the standing assumptions:
/// zero mean (sum rate_i x_i = 0 within 1e-12 of the jump scale) and a
/// non-degenerate second moment.
class LevyMeasureSpec {
public:
    explicit LevyMeasureSpec(std::vector<LevyAtom> atoms);

    /// nu = (lambda/2)(delta_{-1} + delta_{+1}), the paper's workhorse.
    static LevyMeasureSpec rademacher(double lambda);

    const std::vector<LevyAtom>& atoms() const { return atoms_; }
    double total_rate() const { return total_rate_; } // lambda
    MomentFunctionals moments() const;                // m_k = sum rate_i x_i^k

    std::string to_json() const;
    static LevyMeasureSpec from_json(const std::string& text);
    /// FNV-1a hash of the canonical JSON form, for output metadata.
    std::uint64_t hash() const;

private:
    std::vector<LevyAtom> atoms_;
    double total_rate_;
};

/// Characteristic exponent Psi(u) = sum rate_i (e^{iu x_i} - 1 - iu x_i).
std::complex<double> psi(const LevyMeasureSpec& spec, double u);

/// Drop atoms with |x| < epsilon, re-center the rest to zero mean and report
/// the discarded second moment (the L2 approximation-error certificate).
struct TruncationResult {
    LevyMeasureSpec spec;
    double discarded_m2;
};
TruncationResult truncate_levy_measure(const LevyMeasureSpec& spec, double epsilon);

/// Realized jumps of one compound Poisson path: strictly increasing times in
/// (0, T] (or straddling 0 for two-sided paths) with matching sizes.
struct DriverPath {
    std::vector<double> times;
    std::vector<double> sizes;
    double t_min; // domain [t_min, t_max]
    double t_max;
    std::uint64_t seed;
    double base = 0.0; // L_{t_min}; pins L_0 = 0 for two-sided paths

    /// L_t = base + sum of jumps at times <= t (cadlag).
    double value_at(double t) const;
};

/// One-sided compound Poisson path on (0, T]. Deterministic given
/// (spec, T, seed).
DriverPath sample_compound_poisson(const LevyMeasureSpec& spec, double T, std::uint64_t seed);

/// Two-sided path on [-T, T]: two independent copies glued by
/// L_t = -L2_{(-t)-} for t < 0 (right-continuous at the flipped jumps).
DriverPath sample_two_sided(const LevyMeasureSpec& spec, double T, std::uint64_t seed);

/// Independent centered Gaussian increments over grid cells, variance = dt.
std::vector<double> sample_brownian_increments(const std::vector<double>& grid,
                                               std::uint64_t seed);

} // namespace frale
