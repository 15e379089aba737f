#include "bbops/util.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <thread>

namespace bbops {

std::vector<double> linspace(double a, double b, int count) {
    if (count < 2)
        throw std::invalid_argument("linspace: need at least 2 points");
    std::vector<double> xs(count);
    const double step = (b - a) / (count - 1);
    for (int i = 0; i < count; ++i)
        xs[i] = a + step * i;
    xs.back() = b;
    return xs;
}

LineFit fit_loglog(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size() || xs.size() < 2)
        throw std::invalid_argument("fit_loglog: need matching spans with >= 2 points");
    const std::size_t n = xs.size();
    std::vector<double> lx(n), ly(n);
    for (std::size_t i = 0; i < n; ++i) {
        lx[i] = std::log(xs[i]);
        ly[i] = std::log(std::max(ys[i], 1e-300));
    }
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += lx[i];
        my += ly[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (lx[i] - mx) * (lx[i] - mx);
        sxy += (lx[i] - mx) * (ly[i] - my);
    }
    LineFit fit;
    fit.slope = sxx > 0 ? sxy / sxx : 0.0;
    fit.intercept = my - fit.slope * mx;
    double ss_res = 0, ss_tot = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double pred = fit.intercept + fit.slope * lx[i];
        ss_res += (ly[i] - pred) * (ly[i] - pred);
        ss_tot += (ly[i] - my) * (ly[i] - my);
    }
    fit.r2 = ss_tot > 0 ? 1.0 - ss_res / ss_tot : 1.0;
    return fit;
}

int max_threads() {
    static const int cap = [] {
        int hw = static_cast<int>(std::thread::hardware_concurrency());
        if (hw < 1)
            hw = 1;
        if (const char* env = std::getenv("BBOPS_THREADS")) {
            const long v = std::strtol(env, nullptr, 10);
            if (v >= 1 && v < hw)
                hw = static_cast<int>(v);
        }
        return hw;
    }();
    return cap;
}

namespace {
thread_local bool in_parallel_region = false;
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
    const int threads = max_threads();
    if (count == 0)
        return;
    if (threads <= 1 || count < 4 || in_parallel_region) {
        for (std::size_t i = 0; i < count; ++i)
            body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        in_parallel_region = true;
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count)
                break;
            body(i);
        }
        in_parallel_region = false;
    };
    std::vector<std::thread> pool;
    const int spawn = static_cast<int>(std::min<std::size_t>(threads, count)) - 1;
    pool.reserve(spawn);
    for (int t = 0; t < spawn; ++t)
        pool.emplace_back(worker);
    worker();
    for (auto& th : pool)
        th.join();
}

}  // namespace bbops
