#include "bbops/beta_functional.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "bbops/util.hpp"

namespace bbops {

namespace {

constexpr double kConvergedTol = 1e-11;
constexpr double kFailureGate = 1e-8;
constexpr int kMaxPanels = 4096;

long double lgamma_l(long double x) { return std::lgamma(x); }

}  // namespace

void QuadratureSpec::validate() const {
    if (nodes < 4)
        throw std::domain_error("QuadratureSpec: nodes must be >= 4");
    if (!(window_sigmas > 0.0))
        throw std::domain_error("QuadratureSpec: window_sigmas must be > 0");
}

double log_beta(double p, double q) {
    if (!(p > 0.0) || !(q > 0.0))
        throw std::domain_error("log_beta: arguments must be positive");
    const long double pl = p, ql = q;
    return static_cast<double>(lgamma_l(pl) + lgamma_l(ql) - lgamma_l(pl + ql));
}

double beta_moment(double a, double b, int j) {
    if (!(a > 0.0) || b < 0.0)
        throw std::domain_error("beta_moment: need a > 0, b >= 0");
    if (j < 0)
        throw std::domain_error("beta_moment: j must be >= 0");
    if (b == 0.0)
        return 1.0;
    double r = 1.0;
    for (int i = 0; i < j; ++i)
        r *= (a + i) / (a + b + i);
    return r;
}

double smoothing_variance(int m, int k) {
    if (m < 1 || k < 1 || k > m)
        throw std::domain_error("smoothing_variance: need 1 <= k <= m");
    if (k == m)
        return 0.0;
    const double mk = static_cast<double>(k) / m;
    const double m2 = static_cast<double>(m) * m;
    return mk * (1.0 - mk) / (m2 + 1.0);
}

namespace quad_detail {

std::vector<std::pair<double, double>> gauss_legendre(int n) {
    // Newton iteration on P_n with the usual Chebyshev-like initial guess.
    std::vector<std::pair<double, double>> nw(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int j = 2; j <= n; ++j) {
                const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / pp;
            x -= dx;
            if (std::fabs(dx) < 1e-15)
                break;
        }
        const double w = 2.0 / ((1.0 - x * x) * pp * pp);
        nw[i] = {-x, w};
        nw[n - 1 - i] = {x, w};
    }
    if (n % 2 == 1)
        nw[n / 2].first = 0.0;
    return nw;
}

QuadResult beta_expectation_capped(double a, double b, const std::function<double(double)>& g,
                                   const QuadratureSpec& spec, int max_panels) {
    spec.validate();
    if (!(a > 0.0) || b < 0.0)
        throw std::domain_error("beta_expectation: need a > 0, b >= 0");
    if (b == 0.0)
        return {g(1.0), 0.0};

    const long double lnB = lgamma_l(a) + lgamma_l(b) - lgamma_l(static_cast<long double>(a) + b);
    const double mean = a / (a + b);
    const double sd = std::sqrt(a * b / ((a + b) * (a + b) * (a + b + 1.0)));
    double lo = 0.0, hi = 1.0;
    if (spec.strategy != QuadratureSpec::Strategy::FullComposite) {
        lo = std::max(0.0, mean - spec.window_sigmas * sd);
        hi = std::min(1.0, mean + spec.window_sigmas * sd);
    }

    const auto nw = gauss_legendre(spec.nodes);
    double g_abs_max = 0.0;
    auto integrate = [&](int panels, double& mass) {
        CompensatedSum num, den;
        const double width = (hi - lo) / panels;
        for (int p = 0; p < panels; ++p) {
            const double c = lo + (p + 0.5) * width;
            const double h = 0.5 * width;
            for (const auto& [node, weight] : nw) {
                const double t = c + h * node;
                if (t <= 0.0 || t >= 1.0)
                    continue;
                const long double lrho = (a - 1.0L) * std::log(static_cast<long double>(t)) +
                                         (b - 1.0L) * std::log1p(static_cast<long double>(-t)) -
                                         lnB;
                const double rho = static_cast<double>(std::exp(lrho));
                const double gv = g(t);
                g_abs_max = std::max(g_abs_max, std::fabs(gv));
                num.add(static_cast<long double>(weight) * h * rho * gv);
                den.add(static_cast<long double>(weight) * h * rho);
            }
        }
        mass = den.value();
        return mass > 0.0 ? num.value() / mass : 0.0;
    };

    int panels = 4;
    double mass = 0.0;
    double prev = integrate(panels, mass);
    double cur = prev, node_err = HUGE_VAL;
    while (panels < max_panels) {
        panels *= 2;
        cur = integrate(panels, mass);
        node_err = std::fabs(cur - prev);
        if (node_err < kConvergedTol)
            break;
        prev = cur;
    }
    const double trunc_err = std::fabs(1.0 - mass) * g_abs_max;
    return {cur, node_err + trunc_err};
}

}  // namespace quad_detail

QuadResult beta_expectation(double a, double b, const std::function<double(double)>& g,
                            const QuadratureSpec& spec) {
    return quad_detail::beta_expectation_capped(a, b, g, spec, kMaxPanels);
}

namespace {

/// Exact E[f(beta t + (1-beta) mk)] for polynomial f via binomial expansion.
double exact_poly_functional(double a, double b, double beta, double anchor,
                             const std::vector<double>& coeffs) {
    const int deg = static_cast<int>(coeffs.size()) - 1;
    std::vector<double> tmom(deg + 1);
    for (int i = 0; i <= deg; ++i)
        tmom[i] = beta_moment(a, b, i);
    const double shift = (1.0 - beta) * anchor;
    CompensatedSum total;
    for (int j = 0; j <= deg; ++j) {
        if (coeffs[j] == 0.0)
            continue;
        // E[(beta t + shift)^j] = sum_i C(j,i) beta^i shift^(j-i) E[t^i]
        double binom = 1.0;
        CompensatedSum mj;
        for (int i = 0; i <= j; ++i) {
            mj.add(binom * std::pow(beta, i) * std::pow(shift, j - i) * tmom[i]);
            binom = binom * (j - i) / (i + 1.0);
        }
        total.add(coeffs[j] * mj.value_l());
    }
    return total.value();
}

}  // namespace

double smoothing_functional(int m, int k, double beta, const FunctionSpec& f,
                            const QuadratureSpec& spec) {
    if (m < 1 || k < 1 || k > m)
        throw std::domain_error("smoothing_functional: need 1 <= k <= m");
    if (!(beta >= 0.0 && beta <= 1.0))
        throw std::domain_error("smoothing_functional: beta must lie in [0,1]");
    spec.validate();
    if (k == m)
        return f(1.0);  // point mass at 1
    const double anchor = static_cast<double>(k) / m;
    if (beta == 0.0)
        return f(anchor);  // integrand is constant
    const double a = static_cast<double>(m) * k;
    const double b = static_cast<double>(m) * (m - k);

    const bool want_exact = spec.strategy == QuadratureSpec::Strategy::Auto ||
                            spec.strategy == QuadratureSpec::Strategy::ExactPoly;
    if (f.is_polynomial() && want_exact)
        return exact_poly_functional(a, b, beta, anchor, f.coeffs());
    if (spec.strategy == QuadratureSpec::Strategy::ExactPoly)
        throw std::invalid_argument("smoothing_functional: exact-poly strategy needs a polynomial");

    const auto res =
        beta_expectation(a, b, [&](double t) { return f(beta * t + (1.0 - beta) * anchor); }, spec);
    if (res.error > kFailureGate)
        throw quadrature_error("smoothing_functional: estimated quadrature error " +
                               std::to_string(res.error) + " exceeds the 1e-8 gate for " +
                               f.name());
    return res.value;
}

double smoothing_moment(int m, int k, double beta, int j) {
    if (m < 1 || k < 1 || k > m)
        throw std::domain_error("smoothing_moment: need 1 <= k <= m");
    if (!(beta >= 0.0 && beta <= 1.0))
        throw std::domain_error("smoothing_moment: beta must lie in [0,1]");
    if (j < 0 || j > 2)
        throw std::domain_error("smoothing_moment: j must be 0, 1 or 2");
    const double mk = static_cast<double>(k) / m;
    switch (j) {
        case 0:
            return 1.0;
        case 1:
            return mk;
        default: {
            const double c = beta * beta / (static_cast<double>(m) * m + 1.0);
            return c * mk + (1.0 - c) * mk * mk;
        }
    }
}

double f_functional(int n, int k, double beta, const FunctionSpec& f, const QuadratureSpec& spec) {
    if (n < 2)
        throw std::domain_error("f_functional: need n >= 2");
    if (k < 1 || k > n - 1)
        throw std::domain_error("f_functional: need 1 <= k <= n-1");
    return smoothing_functional(n - 1, k, beta, f, spec);
}

double f_functional_moment(int n, int k, double beta, int j) {
    if (n < 2)
        throw std::domain_error("f_functional_moment: need n >= 2");
    if (k < 1 || k > n - 1)
        throw std::domain_error("f_functional_moment: need 1 <= k <= n-1");
    return smoothing_moment(n - 1, k, beta, j);
}

}  // namespace bbops
