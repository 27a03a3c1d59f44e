#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "frale/stats.hpp"

using namespace frale;

namespace {

// Direct k-statistic formulas on a copy with one element removed: the
// brute-force oracle for the O(n) jackknife path.
void kstats_direct(const std::vector<double>& x, double& k2, double& k3, double& k4) {
    double n = static_cast<double>(x.size());
    double s1 = 0, s2 = 0, s3 = 0, s4 = 0;
    for (double v : x) {
        s1 += v;
        s2 += v * v;
        s3 += v * v * v;
        s4 += v * v * v * v;
    }
    k2 = (n * s2 - s1 * s1) / (n * (n - 1));
    k3 = (n * n * s3 - 3 * n * s2 * s1 + 2 * s1 * s1 * s1) / (n * (n - 1) * (n - 2));
    k4 = (n * n * (n + 1) * s4 - 4 * n * (n + 1) * s3 * s1 - 3 * n * (n - 1) * s2 * s2 +
          12 * n * s2 * s1 * s1 - 6 * s1 * s1 * s1 * s1) /
         (n * (n - 1) * (n - 2) * (n - 3));
}

} // namespace

TEST_CASE("summarize: textbook values") {
    std::vector<double> x{1.0, 2.0, 3.0, 4.0};
    MeanVar mv = summarize(x);
    CHECK(mv.mean == doctest::Approx(2.5));
    CHECK(mv.variance == doctest::Approx(5.0 / 3.0));
}

TEST_CASE("k_statistics: matches brute-force jackknife") {
    std::mt19937_64 gen(3);
    std::normal_distribution<double> normal(0.3, 1.7);
    std::vector<double> x(200);
    for (double& v : x) v = normal(gen) + 0.2 * normal(gen) * normal(gen);

    KStatistics fast = k_statistics(x);

    double k2, k3, k4;
    kstats_direct(x, k2, k3, k4);
    CHECK(fast.k2 == doctest::Approx(k2).epsilon(1e-10));
    CHECK(fast.k3 == doctest::Approx(k3).epsilon(1e-10));
    CHECK(fast.k4 == doctest::Approx(k4).epsilon(1e-10));

    double n = static_cast<double>(x.size());
    std::vector<double> j2, j3, j4;
    for (std::size_t i = 0; i < x.size(); ++i) {
        std::vector<double> loo;
        for (std::size_t j = 0; j < x.size(); ++j)
            if (j != i) loo.push_back(x[j]);
        double a, b, c;
        kstats_direct(loo, a, b, c);
        j2.push_back(a);
        j3.push_back(b);
        j4.push_back(c);
    }
    auto jack_se = [&](const std::vector<double>& v) {
        double m = 0;
        for (double y : v) m += y;
        m /= n;
        double var = 0;
        for (double y : v) var += (y - m) * (y - m);
        return std::sqrt((n - 1.0) / n * var);
    };
    CHECK(fast.se_k2 == doctest::Approx(jack_se(j2)).epsilon(1e-8));
    CHECK(fast.se_k3 == doctest::Approx(jack_se(j3)).epsilon(1e-8));
    CHECK(fast.se_k4 == doctest::Approx(jack_se(j4)).epsilon(1e-8));
}

TEST_CASE("k_statistics: Gaussian data has vanishing k3, k4") {
    std::mt19937_64 gen(11);
    std::normal_distribution<double> normal(0.0, 2.0);
    std::vector<double> x(200000);
    for (double& v : x) v = normal(gen);
    KStatistics ks = k_statistics(x);
    CHECK(std::abs(ks.k2 - 4.0) <= 3.0 * ks.se_k2);
    CHECK(std::abs(ks.k3) <= 3.0 * ks.se_k3);
    CHECK(std::abs(ks.k4) <= 3.0 * ks.se_k4);
}

TEST_CASE("fit_loglog_slope: exact power law") {
    std::vector<double> x{1.0, 2.0, 4.0, 8.0};
    std::vector<double> y;
    for (double v : x) y.push_back(3.0 * std::pow(v, -0.7));
    CHECK(fit_loglog_slope(x, y) == doctest::Approx(-0.7).epsilon(1e-12));
    std::vector<double> one{1.0};
    CHECK_THROWS(fit_loglog_slope(x, one));
}
