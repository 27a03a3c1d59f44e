#include "frale/levy_driver.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "frale/rng.hpp"

namespace frale {

namespace {

double jump_scale(const std::vector<LevyAtom>& atoms) {
    double s = 0.0;
    for (const auto& a : atoms) s = std::max(s, a.rate * std::abs(a.x));
    return s > 0.0 ? s : 1.0;
}

} // namespace

LevyMeasureSpec::LevyMeasureSpec(std::vector<LevyAtom> atoms) : atoms_(std::move(atoms)) {
    if (atoms_.empty()) throw std::invalid_argument("LevyMeasureSpec: no atoms");
    double mean = 0.0, m2 = 0.0;
    total_rate_ = 0.0;
    for (const auto& a : atoms_) {
        if (a.x == 0.0) throw std::invalid_argument("LevyMeasureSpec: zero jump size");
        if (!(a.rate > 0.0)) throw std::invalid_argument("LevyMeasureSpec: rate must be > 0");
        mean += a.rate * a.x;
        m2 += a.rate * a.x * a.x;
        total_rate_ += a.rate;
    }
    if (std::abs(mean) > 1e-12 * jump_scale(atoms_))
        throw std::invalid_argument("LevyMeasureSpec: measure is not zero-mean (E L_1 != 0)");
    if (!(m2 > 0.0)) throw std::invalid_argument("LevyMeasureSpec: degenerate second moment");
}

LevyMeasureSpec LevyMeasureSpec::rademacher(double lambda) {
    if (!(lambda > 0.0)) throw std::invalid_argument("rademacher: lambda must be > 0");
    return LevyMeasureSpec({{-1.0, lambda / 2.0}, {1.0, lambda / 2.0}});
}

MomentFunctionals LevyMeasureSpec::moments() const {
    MomentFunctionals m{0.0, 0.0, 0.0};
    for (const auto& a : atoms_) {
        double x2 = a.x * a.x;
        m.m2 += a.rate * x2;
        m.m3 += a.rate * x2 * a.x;
        m.m4 += a.rate * x2 * x2;
    }
    return m;
}

std::string LevyMeasureSpec::to_json() const {
    nlohmann::json j;
    j["atoms"] = nlohmann::json::array();
    for (const auto& a : atoms_) j["atoms"].push_back({{"x", a.x}, {"rate", a.rate}});
    return j.dump();
}

LevyMeasureSpec LevyMeasureSpec::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (!j.contains("atoms") || !j["atoms"].is_array())
        throw std::invalid_argument("LevyMeasureSpec: JSON must contain an \"atoms\" array");
    std::vector<LevyAtom> atoms;
    for (const auto& item : j["atoms"])
        atoms.push_back({item.at("x").get<double>(), item.at("rate").get<double>()});
    return LevyMeasureSpec(std::move(atoms));
}

std::uint64_t LevyMeasureSpec::hash() const {
    std::string canon = to_json();
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : canon) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::complex<double> psi(const LevyMeasureSpec& spec, double u) {
    std::complex<double> sum = 0.0;
    for (const auto& a : spec.atoms()) {
        double ux = u * a.x;
        sum += a.rate * std::complex<double>(std::cos(ux) - 1.0, std::sin(ux) - ux);
    }
    return sum;
}

TruncationResult truncate_levy_measure(const LevyMeasureSpec& spec, double epsilon) {
    if (!(epsilon > 0.0)) throw std::invalid_argument("truncate_levy_measure: epsilon must be > 0");
    std::vector<LevyAtom> kept;
    double discarded_m2 = 0.0;
    for (const auto& a : spec.atoms()) {
        if (std::abs(a.x) < epsilon)
            discarded_m2 += a.rate * a.x * a.x;
        else
            kept.push_back(a);
    }
    if (kept.empty())
        throw std::invalid_argument("truncate_levy_measure: all atoms removed (degenerate)");
    // Re-center: shift retained sizes by their mean per unit rate.
    double mean = 0.0, rate = 0.0;
    for (const auto& a : kept) {
        mean += a.rate * a.x;
        rate += a.rate;
    }
    double shift = mean / rate;
    if (shift != 0.0)
        for (auto& a : kept) a.x -= shift;
    for (const auto& a : kept)
        if (a.x == 0.0)
            throw std::invalid_argument("truncate_levy_measure: re-centering produced a zero atom");
    return {LevyMeasureSpec(std::move(kept)), discarded_m2};
}

double DriverPath::value_at(double t) const {
    double v = base;
    for (std::size_t i = 0; i < times.size() && times[i] <= t; ++i) v += sizes[i];
    return v;
}

namespace {

// Categorical jump-size draw with P(x_i) = rate_i / lambda.
double draw_size(const LevyMeasureSpec& spec, SplitMix64& rng) {
    double u = rng.uniform() * spec.total_rate();
    double acc = 0.0;
    for (const auto& a : spec.atoms()) {
        acc += a.rate;
        if (u <= acc) return a.x;
    }
    return spec.atoms().back().x;
}

} // namespace

DriverPath sample_compound_poisson(const LevyMeasureSpec& spec, double T, std::uint64_t seed) {
    if (!(T > 0.0)) throw std::invalid_argument("sample_compound_poisson: T must be > 0");
    SplitMix64 rng(seed);
    DriverPath path;
    path.t_min = 0.0;
    path.t_max = T;
    path.seed = seed;
    double lambda = spec.total_rate();
    double t = 0.0;
    for (;;) {
        t += rng.exponential(lambda);
        if (t > T) break;
        path.times.push_back(t);
        path.sizes.push_back(draw_size(spec, rng));
    }
    return path;
}

DriverPath sample_two_sided(const LevyMeasureSpec& spec, double T, std::uint64_t seed) {
    DriverPath pos = sample_compound_poisson(spec, T, derive_seed(seed, 1));
    DriverPath neg = sample_compound_poisson(spec, T, derive_seed(seed, 2));
    // L_t = -L2_{(-t)-} for t < 0: the glued path jumps at -u by +J for each
    // jump (u, J) of the second copy (right-continuous at the flip).
    DriverPath path;
    path.t_min = -T;
    path.t_max = T;
    path.seed = seed;
    path.times.reserve(pos.times.size() + neg.times.size());
    path.sizes.reserve(pos.times.size() + neg.times.size());
    for (std::size_t i = neg.times.size(); i-- > 0;) {
        path.times.push_back(-neg.times[i]);
        path.sizes.push_back(neg.sizes[i]);
        path.base -= neg.sizes[i];
    }
    for (std::size_t i = 0; i < pos.times.size(); ++i) {
        path.times.push_back(pos.times[i]);
        path.sizes.push_back(pos.sizes[i]);
    }
    return path;
}

std::vector<double> sample_brownian_increments(const std::vector<double>& grid,
                                               std::uint64_t seed) {
    if (grid.size() < 2) throw std::invalid_argument("sample_brownian_increments: need >= 2 times");
    SplitMix64 rng(seed);
    std::vector<double> inc(grid.size() - 1);
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        double dt = grid[i + 1] - grid[i];
        if (dt < 0.0) throw std::invalid_argument("sample_brownian_increments: grid not sorted");
        inc[i] = (dt == 0.0) ? 0.0 : std::sqrt(dt) * rng.normal();
    }
    return inc;
}

} // namespace frale
