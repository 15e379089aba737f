#ifndef BBOPS_UTIL_HPP
#define BBOPS_UTIL_HPP

#include <cmath>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace bbops {

/// Neumaier-compensated accumulator; keeps long sums accurate to a few ulps.
class CompensatedSum {
public:
    void add(long double v) {
        const long double t = sum_ + v;
        if (std::fabs(sum_) >= std::fabs(v))
            comp_ += (sum_ - t) + v;
        else
            comp_ += (v - t) + sum_;
        sum_ = t;
    }
    long double value_l() const { return sum_ + comp_; }
    double value() const { return static_cast<double>(value_l()); }

private:
    long double sum_ = 0.0L;
    long double comp_ = 0.0L;
};

std::vector<double> linspace(double a, double b, int count);

struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r2 = 0.0;
};

/// Least-squares line through (log x, log y); y values are floored at 1e-300.
LineFit fit_loglog(std::span<const double> xs, std::span<const double> ys);

/// Worker cap for sweep parallelism (BBOPS_THREADS, else hardware concurrency).
int max_threads();

/// Runs body(i) for i in [0, count). Deterministic as long as each body(i)
/// writes only to its own slot. Nested calls degrade to serial execution.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace bbops

#endif
