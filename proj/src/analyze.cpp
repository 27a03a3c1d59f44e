#include "frale/analyze.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "frale/errors.hpp"
#include "frale/parallel.hpp"
#include "frale/quadrature.hpp"
#include "frale/rng.hpp"
#include "frale/stats.hpp"

namespace frale {

namespace {

double fbm_covariance(double m2, double H2, double t, double s) {
    return 0.5 * m2 * (std::pow(t, H2) + std::pow(s, H2) - std::pow(std::abs(t - s), H2));
}

int dyadic_level_of(const std::vector<double>& grid, double t) {
    if (grid.size() < 2) return -1;
    std::size_t cells = grid.size() - 1;
    if ((cells & (cells - 1)) != 0) return -1; // not a power of two
    int level = 0;
    while ((std::size_t{1} << level) < cells) ++level;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        double expect = t * static_cast<double>(i) / static_cast<double>(cells);
        if (std::abs(grid[i] - expect) > 1e-12 * std::max(1.0, t)) return -1;
    }
    return level;
}

} // namespace

DyadicQvReport dyadic_qv(const std::vector<SamplePath>& paths, double t,
                         const std::vector<int>& levels) {
    if (paths.empty()) throw std::invalid_argument("dyadic_qv: empty ensemble");
    if (levels.empty()) throw std::invalid_argument("dyadic_qv: no levels");
    for (std::size_t i = 1; i < levels.size(); ++i)
        if (levels[i] <= levels[i - 1])
            throw std::invalid_argument("dyadic_qv: levels must be strictly increasing");

    DyadicQvReport report;
    report.t = t;
    report.hurst = paths.front().meta.hurst;
    report.levels = levels;

    std::vector<std::vector<double>> per_level(levels.size(),
                                               std::vector<double>(paths.size()));
    for (std::size_t p = 0; p < paths.size(); ++p) {
        int max_level = dyadic_level_of(paths[p].grid, t);
        if (max_level < levels.back())
            throw std::invalid_argument("dyadic_qv: grid not refinable to the requested level");
        for (std::size_t li = 0; li < levels.size(); ++li) {
            std::size_t stride = std::size_t{1} << (max_level - levels[li]);
            KahanSum v;
            for (std::size_t j = stride; j < paths[p].grid.size(); j += stride) {
                double d = paths[p].values[j] - paths[p].values[j - stride];
                v.add(d * d);
            }
            per_level[li][p] = v.value();
        }
    }
    for (std::size_t li = 0; li < levels.size(); ++li) {
        MeanVar mv = summarize(per_level[li]);
        report.v_mean.push_back(mv.mean);
        report.v_se.push_back(mv.se_mean);
    }
    return report;
}

namespace {

void finish_qv_report(DyadicQvReport& report, double m2, double H) {
    report.m2 = m2;
    report.hurst = H;
    double H2 = 2.0 * H;
    std::vector<double> n2(report.levels.size()), scale(report.levels.size());
    for (std::size_t i = 0; i < report.levels.size(); ++i) {
        report.expected.push_back(m2 * std::pow(report.t, H2) *
                                  std::pow(2.0, -report.levels[i] * (H2 - 1.0)));
        n2[i] = std::pow(2.0, report.levels[i]);
        scale[i] = report.v_mean[i];
    }
    // decay exponent e in V_n ~ 2^{-n e}: slope of log V against log 2^n
    report.fitted_decay_exponent = -fit_loglog_slope(n2, scale);
}

} // namespace

DyadicQvReport dyadic_qv_mc(KernelKind kind, const HurstParameter& h,
                            const LevyMeasureSpec& spec, double t,
                            const std::vector<int>& levels, std::uint64_t ensemble,
                            std::uint64_t seed, double s_trunc) {
    if (levels.empty()) throw std::invalid_argument("dyadic_qv_mc: no levels");
    int max_level = levels.back();
    std::vector<double> grid = make_dyadic_grid(t, max_level);
    double S = s_trunc > 0.0 ? s_trunc : default_s_trunc(h, t);

    std::vector<std::vector<double>> per_level(levels.size(), std::vector<double>(ensemble));
    parallel_for(ensemble, [&](std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t i = lo; i < hi; ++i) {
            SamplePath path =
                kind == KernelKind::MolchanGolosov
                    ? simulate_flpmg_jumpsum(h, spec, grid, derive_seed(seed, i))
                    : simulate_flpmvn(h, spec, grid, derive_seed(seed, i), S);
            for (std::size_t li = 0; li < levels.size(); ++li) {
                std::size_t stride = std::size_t{1} << (max_level - levels[li]);
                KahanSum v;
                for (std::size_t j = stride; j < grid.size(); j += stride) {
                    double d = path.values[j] - path.values[j - stride];
                    v.add(d * d);
                }
                per_level[li][i] = v.value();
            }
        }
    });

    DyadicQvReport report;
    report.t = t;
    report.levels = levels;
    for (std::size_t li = 0; li < levels.size(); ++li) {
        MeanVar mv = summarize(per_level[li]);
        report.v_mean.push_back(mv.mean);
        report.v_se.push_back(mv.se_mean);
    }
    finish_qv_report(report, spec.moments().m2, h.value());
    return report;
}

std::vector<CumulantReport> cumulants(KernelKind kind, const HurstParameter& h,
                                      const LevyMeasureSpec& spec, double t,
                                      std::uint64_t ensemble, std::uint64_t seed,
                                      double s_trunc) {
    if (ensemble < 5) throw std::invalid_argument("cumulants: ensemble too small");
    double S = s_trunc > 0.0 ? s_trunc : default_s_trunc(h, t);
    std::vector<double> values = parallel_map(ensemble, [&](std::uint64_t i) {
        std::uint64_t s = derive_seed(seed, i);
        if (kind == KernelKind::MolchanGolosov) {
            DriverPath driver = sample_compound_poisson(spec, t, s);
            return flpmg_value(h, driver, t);
        }
        DriverPath driver = sample_two_sided(spec, std::max(S, t), s);
        return flpmvn_value(h, driver, t);
    });
    KStatistics ks = k_statistics(values);

    MomentFunctionals m = spec.moments();
    double mk[3] = {m.m2, m.m3, m.m4};
    double emp[3] = {ks.k2, ks.k3, ks.k4};
    double se[3] = {ks.se_k2, ks.se_k3, ks.se_k4};

    std::vector<CumulantReport> out;
    for (int k = 2; k <= 4; ++k) {
        CumulantReport r;
        r.k = k;
        r.empirical = emp[k - 2];
        r.se = se[k - 2];
        if (mk[k - 2] == 0.0) {
            r.analytic = 0.0; // symmetric measure: the moment functional kills it
        } else {
            KernelMomentResult mom = kernel_moment(kind, h, t, k);
            if (mom.divergent) {
                r.analytic_divergent = true;
                r.analytic = std::numeric_limits<double>::quiet_NaN();
            } else {
                r.analytic = mom.value * mk[k - 2];
            }
        }
        out.push_back(r);
    }
    return out;
}

namespace {

// int Psi(sum_j u_j kernel(t_j, s)) ds over the kernel's support, as a
// complex value assembled from two real quadratures per segment. Psi stays
// bounded for zero-mean measures (the linear term cancels), so even where a
// kernel blows up the integrand only oscillates.
std::complex<double> charfn_exponent(KernelKind kind, const HurstParameter& h,
                                     const LevyMeasureSpec& spec,
                                     const std::vector<double>& times,
                                     const std::vector<double>& freqs) {
    double q = h.q();
    auto field = [&](double s) {
        double w = 0.0;
        for (std::size_t j = 0; j < times.size(); ++j) {
            double k = kind == KernelKind::MolchanGolosov ? mg_kernel(h, times[j], s)
                                                          : mvn_kernel(h, times[j], s);
            w += freqs[j] * k;
        }
        return w;
    };
    auto re = [&](double s) { return psi(spec, field(s)).real(); };
    auto im = [&](double s) { return psi(spec, field(s)).imag(); };

    QuadOptions opt;
    opt.rel_tol = 1e-7;
    opt.abs_tol = 1e-10;
    opt.max_panels = 40000;
    double origin_hint = -std::abs(q);
    double break_hint = std::min(q, 0.0);

    KahanSum re_acc, im_acc;
    // segments between consecutive kernel breakpoints 0 < t_1 < ... < t_n
    double lo = 0.0;
    for (std::size_t j = 0; j < times.size(); ++j) {
        double hi = times[j];
        if (hi <= lo) continue;
        double alpha = (lo == 0.0) ? origin_hint : break_hint;
        re_acc.add(integrate_singular(re, lo, hi, alpha, break_hint, opt).value);
        im_acc.add(integrate_singular(im, lo, hi, alpha, break_hint, opt).value);
        lo = hi;
    }

    if (kind == KernelKind::MandelbrotVanNess) {
        // Negative half-line, r = -s: the field decays like r^{q-1} and
        // Psi(w) ~ -m2 w^2 / 2, so the integrand decays like r^{2q-2}.
        auto re_neg = [&](double r) { return psi(spec, field(-r)).real(); };
        auto im_neg = [&](double r) { return psi(spec, field(-r)).imag(); };
        double near_hint = std::min(2.0 * q, 0.0); // field ~ r^q squared for H < 1/2
        re_acc.add(integrate_to_inf(re_neg, 0.0, 2.0 * q - 2.0, near_hint, opt).value);
        im_acc.add(integrate_to_inf(im_neg, 0.0, 2.0 * q - 2.0, near_hint, opt).value);
    }
    return {re_acc.value(), im_acc.value()};
}

} // namespace

std::complex<double> charfn_analytic(KernelKind kind, const HurstParameter& h,
                                     const LevyMeasureSpec& spec,
                                     const std::vector<double>& times,
                                     const std::vector<double>& freqs) {
    if (times.size() != freqs.size() || times.empty())
        throw std::invalid_argument("charfn: times and freqs must match and be nonempty");
    for (std::size_t i = 0; i < times.size(); ++i) {
        if (!(times[i] > 0.0)) throw std::invalid_argument("charfn: times must be positive");
        if (i > 0 && !(times[i] > times[i - 1]))
            throw std::invalid_argument("charfn: times must be increasing");
    }
    std::complex<double> expo = charfn_exponent(kind, h, spec, times, freqs);
    return std::exp(expo);
}

CharFnPoint charfn(KernelKind kind, const HurstParameter& h, const LevyMeasureSpec& spec,
                   const std::vector<double>& times, const std::vector<double>& freqs,
                   std::uint64_t ensemble, std::uint64_t seed, double s_trunc) {
    CharFnPoint out;
    out.times = times;
    out.freqs = freqs;
    out.analytic = charfn_analytic(kind, h, spec, times, freqs);

    double T = times.back();
    double S = s_trunc > 0.0 ? s_trunc : default_s_trunc(h, T);
    std::vector<double> re(ensemble), im(ensemble);
    parallel_for(ensemble, [&](std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t i = lo; i < hi; ++i) {
            std::uint64_t s = derive_seed(seed, i);
            double phase = 0.0;
            if (kind == KernelKind::MolchanGolosov) {
                DriverPath driver = sample_compound_poisson(spec, T, s);
                for (std::size_t j = 0; j < times.size(); ++j)
                    phase += freqs[j] * flpmg_value(h, driver, times[j]);
            } else {
                DriverPath driver = sample_two_sided(spec, std::max(S, T), s);
                for (std::size_t j = 0; j < times.size(); ++j)
                    phase += freqs[j] * flpmvn_value(h, driver, times[j]);
            }
            re[i] = std::cos(phase);
            im[i] = std::sin(phase);
        }
    });
    MeanVar mre = summarize(re), mim = summarize(im);
    out.empirical = {mre.mean, mim.mean};
    out.se_re = mre.se_mean;
    out.se_im = mim.se_mean;
    return out;
}

ZeroProbReport zero_probability_test(const HurstParameter& h, double lambda, double t,
                                     std::uint64_t ensemble, std::uint64_t seed,
                                     double s_trunc) {
    if (!(h.q() > 0.0)) throw std::domain_error("zero_probability_test: requires H > 1/2");
    if (!(lambda > 0.0) || !(t > 0.0))
        throw std::invalid_argument("zero_probability_test: lambda, t must be > 0");
    LevyMeasureSpec spec = LevyMeasureSpec::rademacher(lambda);

    std::vector<double> mg_zero = parallel_map(ensemble, [&](std::uint64_t i) {
        DriverPath driver = sample_compound_poisson(spec, t, derive_seed(seed, i));
        // structural zero: no jumps strictly before t
        bool zero = true;
        for (double s : driver.times)
            if (s < t) zero = false;
        return zero ? 1.0 : 0.0;
    });
    std::vector<double> mvn_zero = parallel_map(ensemble, [&](std::uint64_t i) {
        DriverPath driver = sample_two_sided(spec, std::max(s_trunc, t), derive_seed(seed ^ 0x9e3779b9, i));
        double x = 0.0;
        for (std::size_t j = 0; j < driver.times.size(); ++j) {
            double s = driver.times[j];
            if (s < -s_trunc) continue;
            x += mvn_kernel(h, t, s) * driver.sizes[j];
        }
        return std::abs(x) < 1e-12 ? 1.0 : 0.0;
    });

    ZeroProbReport out;
    MeanVar mg = summarize(mg_zero), mvn = summarize(mvn_zero);
    out.p_mg = mg.mean;
    out.p_mvn = mvn.mean;
    double n = static_cast<double>(ensemble);
    out.se_mg = std::sqrt(std::max(mg.mean * (1.0 - mg.mean), 1.0 / n) / n);
    out.se_mvn = std::sqrt(std::max(mvn.mean * (1.0 - mvn.mean), 1.0 / n) / n);
    out.bound_mg = std::exp(-lambda * t);
    out.bound_mvn = lambda * (1.0 + t) * std::exp(-lambda * (1.0 + t));
    return out;
}

CovarianceReport covariance_grid(KernelKind kind, const HurstParameter& h,
                                 const LevyMeasureSpec& spec, const std::vector<double>& times,
                                 std::uint64_t ensemble, std::uint64_t seed, double s_trunc) {
    if (times.empty()) throw std::invalid_argument("covariance_grid: empty time grid");
    if (ensemble < 2) throw std::invalid_argument("covariance_grid: ensemble must be >= 2");
    std::size_t n_t = times.size();
    double T = *std::max_element(times.begin(), times.end());
    double S = s_trunc > 0.0 ? s_trunc : default_s_trunc(h, T);

    // per-path values at each time, then ordered reduction per cell
    std::vector<std::vector<double>> vals(n_t, std::vector<double>(ensemble));
    parallel_for(ensemble, [&](std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t i = lo; i < hi; ++i) {
            std::uint64_t s = derive_seed(seed, i);
            if (kind == KernelKind::MolchanGolosov) {
                DriverPath driver = sample_compound_poisson(spec, T, s);
                for (std::size_t j = 0; j < n_t; ++j)
                    vals[j][i] = flpmg_value(h, driver, times[j]);
            } else {
                DriverPath driver = sample_two_sided(spec, std::max(S, T), s);
                for (std::size_t j = 0; j < n_t; ++j)
                    vals[j][i] = flpmvn_value(h, driver, times[j]);
            }
        }
    });

    CovarianceReport out;
    out.times = times;
    out.empirical.assign(n_t * n_t, 0.0);
    out.analytic.assign(n_t * n_t, 0.0);
    out.se.assign(n_t * n_t, 0.0);
    double m2 = spec.moments().m2;
    double H2 = 2.0 * h.value();
    std::vector<double> prod(ensemble);
    for (std::size_t a = 0; a < n_t; ++a) {
        for (std::size_t b = a; b < n_t; ++b) {
            for (std::uint64_t i = 0; i < ensemble; ++i) prod[i] = vals[a][i] * vals[b][i];
            MeanVar mv = summarize(prod);
            double analytic = fbm_covariance(m2, H2, times[a], times[b]);
            std::size_t ij = a * n_t + b, ji = b * n_t + a;
            out.empirical[ij] = out.empirical[ji] = mv.mean;
            out.analytic[ij] = out.analytic[ji] = analytic;
            out.se[ij] = out.se[ji] = mv.se_mean;
            if (mv.se_mean > 0.0)
                out.max_abs_z = std::max(out.max_abs_z, std::abs(mv.mean - analytic) / mv.se_mean);
        }
    }
    return out;
}

} // namespace frale
