#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace frale {

/// Worker count: FRALE_THREADS if set, else hardware concurrency.
inline unsigned worker_count() {
    if (const char* env = std::getenv("FRALE_THREADS")) {
        long n = std::strtol(env, nullptr, 10);
        if (n >= 1) return static_cast<unsigned>(n);
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? hc : 1u;
}

/// Static range partition over [0, n). Workers write to disjoint,
/// index-addressed slots only; any reduction happens afterwards in index
/// order, so results do not depend on the number of threads.
inline void parallel_for(std::uint64_t n,
                         const std::function<void(std::uint64_t, std::uint64_t)>& chunk) {
    unsigned workers = worker_count();
    if (workers <= 1 || n < 2) {
        chunk(0, n);
        return;
    }
    workers = std::min<std::uint64_t>(workers, n);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::uint64_t base = n / workers, rem = n % workers, begin = 0;
    for (unsigned w = 0; w < workers; ++w) {
        std::uint64_t len = base + (w < rem ? 1 : 0);
        pool.emplace_back(chunk, begin, begin + len);
        begin += len;
    }
    for (auto& t : pool) t.join();
}

/// Fill out[i] = f(i) for i in [0, n) across the worker pool. Slots are
/// disjoint, so the result is identical for any thread count.
inline std::vector<double> parallel_map(std::uint64_t n,
                                        const std::function<double(std::uint64_t)>& f) {
    std::vector<double> out(n);
    parallel_for(n, [&](std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t i = lo; i < hi; ++i) out[i] = f(i);
    });
    return out;
}

/// Kahan-compensated accumulator for deterministic ordered reductions.
class KahanSum {
public:
    void add(double x) {
        double y = x - c_;
        double t = s_ + y;
        c_ = (t - s_) - y;
        s_ = t;
    }
    double value() const { return s_; }

private:
    double s_ = 0.0;
    double c_ = 0.0;
};

} // namespace frale
