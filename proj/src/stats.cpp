#include "frale/stats.hpp"

#include <cmath>
#include <stdexcept>

#include "frale/parallel.hpp"

namespace frale {

MeanVar summarize(std::span<const double> x) {
    MeanVar out;
    out.n = x.size();
    if (x.empty()) return out;
    KahanSum s;
    for (double v : x) s.add(v);
    out.mean = s.value() / static_cast<double>(x.size());
    if (x.size() < 2) return out;
    KahanSum s2;
    for (double v : x) {
        double d = v - out.mean;
        s2.add(d * d);
    }
    out.variance = s2.value() / static_cast<double>(x.size() - 1);
    out.se_mean = std::sqrt(out.variance / static_cast<double>(x.size()));
    return out;
}

namespace {

struct PowerSums {
    double n, s1, s2, s3, s4;
};

// Fisher k-statistics from raw power sums.
void k_from_sums(const PowerSums& p, double& k2, double& k3, double& k4) {
    double n = p.n;
    double s1 = p.s1, s2 = p.s2, s3 = p.s3, s4 = p.s4;
    k2 = (n * s2 - s1 * s1) / (n * (n - 1.0));
    k3 = (n * n * s3 - 3.0 * n * s2 * s1 + 2.0 * s1 * s1 * s1) / (n * (n - 1.0) * (n - 2.0));
    k4 = (n * n * (n + 1.0) * s4 - 4.0 * n * (n + 1.0) * s3 * s1 - 3.0 * n * (n - 1.0) * s2 * s2 +
          12.0 * n * s2 * s1 * s1 - 6.0 * s1 * s1 * s1 * s1) /
         (n * (n - 1.0) * (n - 2.0) * (n - 3.0));
}

} // namespace

KStatistics k_statistics(std::span<const double> x) {
    KStatistics out;
    out.n = x.size();
    if (x.size() < 5) throw std::invalid_argument("k_statistics: need at least 5 samples");
    double n = static_cast<double>(x.size());

    // Center at the grand mean first; the k-statistics are shift-invariant
    // and the power-sum formulas are ill-conditioned around large means.
    KahanSum mean_acc;
    for (double v : x) mean_acc.add(v);
    double shift = mean_acc.value() / n;

    KahanSum a1, a2, a3, a4;
    for (double v : x) {
        double d = v - shift;
        double d2 = d * d;
        a1.add(d);
        a2.add(d2);
        a3.add(d2 * d);
        a4.add(d2 * d2);
    }
    PowerSums full{n, a1.value(), a2.value(), a3.value(), a4.value()};
    k_from_sums(full, out.k2, out.k3, out.k4);

    // Leave-one-out jackknife; each deletion is an O(1) power-sum update.
    KahanSum j2, j3, j4, j2sq, j3sq, j4sq;
    for (double v : x) {
        double d = v - shift;
        double d2 = d * d;
        PowerSums loo{n - 1.0, full.s1 - d, full.s2 - d2, full.s3 - d2 * d, full.s4 - d2 * d2};
        double k2i, k3i, k4i;
        k_from_sums(loo, k2i, k3i, k4i);
        j2.add(k2i);
        j3.add(k3i);
        j4.add(k4i);
        j2sq.add(k2i * k2i);
        j3sq.add(k3i * k3i);
        j4sq.add(k4i * k4i);
    }
    auto jackknife_se = [&](const KahanSum& s, const KahanSum& ssq) {
        double m = s.value() / n;
        double var = ssq.value() / n - m * m;
        if (var < 0.0) var = 0.0;
        return std::sqrt((n - 1.0) * var);
    };
    out.se_k2 = jackknife_se(j2, j2sq);
    out.se_k3 = jackknife_se(j3, j3sq);
    out.se_k4 = jackknife_se(j4, j4sq);
    return out;
}

double fit_loglog_slope(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("fit_loglog_slope: need matching arrays of size >= 2");
    double n = static_cast<double>(x.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] > 0.0) || !(y[i] > 0.0))
            throw std::domain_error("fit_loglog_slope: requires positive data");
        double lx = std::log(x[i]), ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

} // namespace frale
