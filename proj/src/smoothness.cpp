#include "bbops/smoothness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "bbops/util.hpp"

namespace bbops {

namespace {

constexpr int kModulusSteps = 64;
const double kStepRatio = std::pow(2.0, -1.0 / 8.0);

double golden_max(const std::function<double(double)>& g, double a, double b, int rounds) {
    constexpr double gr = 0.6180339887498949;
    double c = b - gr * (b - a);
    double d = a + gr * (b - a);
    double fc = g(c), fd = g(d);
    for (int i = 0; i < rounds; ++i) {
        if (fc < fd) {
            a = c;
            c = d;
            fc = fd;
            d = a + gr * (b - a);
            fd = g(d);
        } else {
            b = d;
            d = c;
            fd = fc;
            c = b - gr * (b - a);
            fc = g(c);
        }
    }
    return std::max(fc, fd);
}

}  // namespace

void GridSpec::validate() const {
    if (points < 11)
        throw std::domain_error("GridSpec: points must be >= 11");
    if (refine < 0)
        throw std::domain_error("GridSpec: refine must be >= 0");
}

double phi(double x) {
    if (!(x >= 0.0 && x <= 1.0))
        throw std::domain_error("phi: x outside [0,1]");
    return std::sqrt(x * (1.0 - x));
}

double sup_on_grid(const std::function<double(double)>& g, const GridSpec& grid, double lo,
                   double hi) {
    grid.validate();
    const auto xs = linspace(lo, hi, grid.points);
    std::vector<double> vals(xs.size());
    parallel_for(xs.size(), [&](std::size_t i) { vals[i] = g(xs[i]); });
    double best = -std::numeric_limits<double>::infinity();
    for (double v : vals)
        best = std::max(best, v);
    if (grid.refine > 0) {
        std::vector<std::size_t> idx(xs.size());
        for (std::size_t i = 0; i < idx.size(); ++i)
            idx[i] = i;
        const std::size_t top = std::min<std::size_t>(3, idx.size());
        std::partial_sort(idx.begin(), idx.begin() + top, idx.end(),
                          [&](std::size_t a, std::size_t b) { return vals[a] > vals[b]; });
        const double dx = (hi - lo) / (grid.points - 1);
        for (std::size_t i = 0; i < top; ++i) {
            const double a = std::max(lo, xs[idx[i]] - dx);
            const double b = std::min(hi, xs[idx[i]] + dx);
            best = std::max(best, golden_max(g, a, b, grid.refine));
        }
    }
    return best;
}

double sup_norm(const std::function<double(double)>& f, const GridSpec& grid) {
    return sup_on_grid([&](double x) { return std::fabs(f(x)); }, grid);
}

double sup_norm(const FunctionSpec& f, const GridSpec& grid) {
    return sup_norm([&](double x) { return f(x); }, grid);
}

double dt_modulus(const std::function<double(double)>& f, double lambda, double t,
                  const GridSpec& grid) {
    if (!(lambda >= 0.0 && lambda <= 1.0))
        throw std::domain_error("dt_modulus: lambda must lie in [0,1]");
    if (!(t > 0.0 && t <= 1.0))
        throw std::domain_error("dt_modulus: t must lie in (0,1]");
    grid.validate();
    std::vector<double> per_h(kModulusSteps);
    parallel_for(kModulusSteps, [&](std::size_t j) {
        const double h = t * std::pow(kStepRatio, static_cast<double>(j));
        auto g = [&, h](double x) {
            const double delta = 0.5 * h * std::pow(x * (1.0 - x), 0.5 * lambda);
            if (x - delta < 0.0 || x + delta > 1.0)
                return -std::numeric_limits<double>::infinity();
            return std::fabs(f(x + delta) - f(x - delta));
        };
        per_h[j] = sup_on_grid(g, grid);
    });
    double best = 0.0;
    for (double v : per_h)
        best = std::max(best, v);
    return best;
}

double dt_modulus(const FunctionSpec& f, double lambda, double t, const GridSpec& grid) {
    return dt_modulus([&](double x) { return f(x); }, lambda, t, grid);
}

double dt_modulus(const ModulusQuery& q) { return dt_modulus(q.f, q.lambda, q.t, q.grid); }

double classical_modulus(const std::function<double(double)>& f, double delta,
                         const GridSpec& grid) {
    return dt_modulus(f, 0.0, delta, grid);
}

double classical_modulus(const FunctionSpec& f, double delta, const GridSpec& grid) {
    return dt_modulus(f, 0.0, delta, grid);
}

ExponentFit modulus_exponent(const FunctionSpec& f, double lambda,
                             const std::vector<double>& t_list, const GridSpec& grid) {
    if (t_list.size() < 2)
        throw std::invalid_argument("modulus_exponent: need >= 2 step sizes");
    for (std::size_t i = 1; i < t_list.size(); ++i)
        if (!(t_list[i] < t_list[i - 1]))
            throw std::invalid_argument("modulus_exponent: t_list must be decreasing");
    if (t_list.front() / t_list.back() < 100.0)
        throw std::invalid_argument("modulus_exponent: t_list must span >= 2 decades");
    std::vector<double> ts, ws;
    for (double t : t_list) {
        const double w = dt_modulus(f, lambda, t, grid);
        if (w > 0.0) {
            ts.push_back(t);
            ws.push_back(w);
        }
    }
    if (ts.size() < 2)
        throw std::domain_error("modulus_exponent: degenerate fit, moduli all vanish");
    const LineFit fit = fit_loglog(ts, ws);
    return {fit.slope, fit.r2};
}

}  // namespace bbops
