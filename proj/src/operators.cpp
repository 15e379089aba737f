#include "bbops/operators.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "bbops/basis.hpp"
#include "bbops/util.hpp"

namespace bbops {

std::string to_string(OperatorVariant v) {
    switch (v) {
        case OperatorVariant::Bernstein:
            return "bernstein";
        case OperatorVariant::BernsteinBezier:
            return "bernstein-bezier";
        case OperatorVariant::BetaBernstein:
            return "beta-bernstein";
        case OperatorVariant::Generalized:
            return "generalized";
    }
    return "generalized";
}

OperatorVariant variant_from_string(const std::string& s) {
    if (s == "bernstein")
        return OperatorVariant::Bernstein;
    if (s == "bernstein-bezier")
        return OperatorVariant::BernsteinBezier;
    if (s == "beta-bernstein")
        return OperatorVariant::BetaBernstein;
    if (s == "generalized")
        return OperatorVariant::Generalized;
    throw std::invalid_argument("unknown operator variant '" + s + "'");
}

OperatorConfig OperatorConfig::normalized() const {
    OperatorConfig c = *this;
    if (!c.uses_alpha())
        c.alpha = 1.0;
    if (!c.uses_beta())
        c.beta = 0.0;
    return c;
}

void OperatorConfig::validate() const {
    if (n < 2)
        throw std::domain_error("OperatorConfig: n must be >= 2");
    if (uses_alpha() && !(alpha >= 1.0))
        throw std::domain_error("OperatorConfig: alpha must be >= 1");
    if (uses_beta() && !(beta >= 0.0 && beta <= 1.0))
        throw std::domain_error("OperatorConfig: beta must lie in [0,1]");
}

namespace {

void check_x(double x) {
    if (!(x >= 0.0 && x <= 1.0))
        throw std::domain_error("operator: x outside [0,1]");
}

bool uses_q_weights(const OperatorConfig& c) {
    return c.variant == OperatorVariant::BernsteinBezier ||
           c.variant == OperatorVariant::Generalized;
}

bool uses_functionals(const OperatorConfig& c) {
    return c.variant == OperatorVariant::BetaBernstein ||
           c.variant == OperatorVariant::Generalized;
}

std::vector<long double> weights_l(const OperatorConfig& c, double x) {
    if (uses_q_weights(c))
        return basis_detail::q_all_l(c.n, c.alpha, x);
    return basis_detail::binom_all_l(c.n, x);
}

double dot_l(const std::vector<long double>& w, const std::vector<double>& v) {
    CompensatedSum sum;
    for (std::size_t k = 0; k < v.size(); ++k)
        sum.add(w[k] * static_cast<long double>(v[k]));
    return sum.value();
}

}  // namespace

OperatorEvaluator::OperatorEvaluator(const OperatorConfig& config, const FunctionSpec& f,
                                     const QuadratureSpec& quad) {
    cfg_ = config.normalized();
    cfg_.validate();
    const int n = cfg_.n;
    nodes_.resize(n + 1);
    nodes_[0] = f(0.0);
    nodes_[n] = f(1.0);
    if (uses_functionals(cfg_)) {
        // Functional degree: n-1 for the generalized operator, n otherwise.
        const int m = cfg_.variant == OperatorVariant::Generalized ? n - 1 : n;
        for (int k = 1; k < n; ++k)
            nodes_[k] = smoothing_functional(m, k, cfg_.beta, f, quad);
    } else {
        for (int k = 1; k < n; ++k)
            nodes_[k] = f(static_cast<double>(k) / n);
    }
}

OperatorEvaluator OperatorEvaluator::with_node_values(const OperatorConfig& config,
                                                      std::vector<double> node_values) {
    OperatorConfig cfg = config.normalized();
    cfg.validate();
    if (static_cast<int>(node_values.size()) != cfg.n + 1)
        throw std::invalid_argument("with_node_values: need n+1 node values");
    OperatorEvaluator ev;
    ev.cfg_ = cfg;
    ev.nodes_ = std::move(node_values);
    return ev;
}

double OperatorEvaluator::value(double x) const {
    check_x(x);
    if (x == 0.0)
        return nodes_.front();  // only the k = 0 weight survives
    if (x == 1.0)
        return nodes_.back();
    return dot_l(weights_l(cfg_, x), nodes_);
}

double OperatorEvaluator::deriv(double x) const {
    check_x(x);
    if (!uses_q_weights(cfg_))
        throw std::invalid_argument("deriv: unsupported variant " + to_string(cfg_.variant));
    const int n = cfg_.n;
    const long double a = cfg_.alpha;
    const auto J = basis_detail::bezier_all_l(n, x);
    const auto pn1 = basis_detail::binom_all_l(n - 1, x);
    // J'_k = n p_{n-1,k-1} for 1 <= k <= n, zero at both sentinels.
    auto Jp = [&](int k) -> long double {
        if (k == 0 || k == n + 1)
            return 0.0L;
        return static_cast<long double>(n) * pn1[k - 1];
    };
    CompensatedSum sum;
    if (cfg_.alpha == 1.0) {
        for (int k = 0; k <= n; ++k)
            sum.add((Jp(k) - Jp(k + 1)) * static_cast<long double>(nodes_[k]));
    } else {
        std::vector<long double> pw(n + 2);
        for (int k = 0; k <= n + 1; ++k)
            pw[k] = std::pow(J[k], a - 1.0L);
        for (int k = 0; k <= n; ++k)
            sum.add(a * (pw[k] * Jp(k) - pw[k + 1] * Jp(k + 1)) *
                    static_cast<long double>(nodes_[k]));
    }
    return sum.value();
}

double apply(const OperatorConfig& config, const FunctionSpec& f, double x,
             const QuadratureSpec& quad) {
    return OperatorEvaluator(config, f, quad).value(x);
}

double apply_deriv(const OperatorConfig& config, const FunctionSpec& f, double x,
                   const QuadratureSpec& quad) {
    return OperatorEvaluator(config, f, quad).deriv(x);
}

double moment_closed_form(const OperatorConfig& config, int j, double x) {
    const OperatorConfig c = config.normalized();
    c.validate();
    check_x(x);
    if (j < 0 || j > 2)
        throw std::invalid_argument("moment_closed_form: j must be 0, 1 or 2");
    const double n = c.n;
    if (c.variant == OperatorVariant::Bernstein) {
        switch (j) {
            case 0:
                return 1.0;
            case 1:
                return x;
            default:
                return x * x + x * (1.0 - x) / n;
        }
    }
    if (c.variant == OperatorVariant::Generalized && c.alpha == 1.0) {
        const double m = n - 1.0;
        const double xn = std::pow(x, c.n);
        switch (j) {
            case 0:
                return 1.0;
            case 1:
                return x + (x - xn) / m;
            default: {
                // Degree-reindexed second moment, all five printed terms.
                const double cc = c.beta * c.beta / (m * m + 1.0);
                const double phi2 = x * (1.0 - x);
                return n * n / (m * m) * x * x + (n / (m * m) + cc * n / m) * phi2 -
                       cc * n / (m * m) * x + (cc * n / (m * m) - (2.0 * n - 1.0) / (m * m)) * xn;
            }
        }
    }
    throw std::invalid_argument(
        "moment_closed_form: closed forms cover bernstein and generalized with alpha = 1");
}

double central_second_moment(const OperatorConfig& config, double x) {
    const OperatorConfig c = config.normalized();
    c.validate();
    check_x(x);
    const int n = c.n;
    const auto w = weights_l(c, x);
    CompensatedSum sum;
    if (uses_functionals(c)) {
        const int m = c.variant == OperatorVariant::Generalized ? n - 1 : n;
        sum.add(w[0] * static_cast<long double>(x * x));
        sum.add(w[n] * static_cast<long double>((1.0 - x) * (1.0 - x)));
        for (int k = 1; k < n; ++k) {
            const double anchor = static_cast<double>(k) / m;
            const double s =
                c.beta * c.beta * smoothing_variance(m, k) + (anchor - x) * (anchor - x);
            sum.add(w[k] * static_cast<long double>(s));
        }
    } else {
        for (int k = 0; k <= n; ++k) {
            const double d = static_cast<double>(k) / n - x;
            sum.add(w[k] * static_cast<long double>(d * d));
        }
    }
    const double v = sum.value();
    return v < 0.0 ? 0.0 : v;
}

MomentReport moment_report(const OperatorConfig& config, int j, double x) {
    MomentReport r;
    r.config = config.normalized();
    r.x = x;
    r.j = j;
    r.closed_form = moment_closed_form(config, j, x);
    std::vector<double> mono(j + 1, 0.0);
    mono[j] = 1.0;
    r.direct_sum = apply(config, FunctionSpec::poly(mono), x);
    r.abs_gap = std::fabs(r.closed_form - r.direct_sum);
    return r;
}

Lemma3Sums lemma3_sums(int n, double x) {
    if (n < 2)
        throw std::domain_error("lemma3_sums: need n >= 2");
    check_x(x);
    const auto J = basis_detail::bezier_all_l(n, x);
    const double m = n - 1.0;
    CompensatedSum s1, s2;
    for (int k = 1; k <= n - 1; ++k) {
        s1.add(J[k]);
        s2.add(static_cast<long double>(k) * J[k]);
    }
    Lemma3Sums out;
    const double xn = std::pow(x, n);
    out.s1_direct = static_cast<double>(s1.value_l() / m);
    out.s1_closed = n * x / m - xn / m;
    out.s2_direct = static_cast<double>(s2.value_l() / (m * m));
    out.s2_paper = n * x * x / (2.0 * m);
    out.s2_corrected = ((n * static_cast<double>(n) * x * x + n * x * (2.0 - x)) / 2.0 - n * xn) /
                       (m * m);
    return out;
}

bool Lemma4Record::decreasing(double slack) const {
    for (std::size_t i = 1; i < dev1.size(); ++i)
        if (dev1[i] > dev1[i - 1] * (1.0 + slack))
            return false;
    for (std::size_t i = 1; i < dev2.size(); ++i)
        if (dev2[i] > dev2[i - 1] * (1.0 + slack))
            return false;
    return true;
}

Lemma4Record lemma4_limits(double alpha, const std::vector<double>& xs,
                           const std::vector<int>& n_list) {
    if (!(alpha >= 1.0))
        throw std::domain_error("lemma4_limits: alpha must be >= 1");
    Lemma4Record rec;
    rec.alpha = alpha;
    rec.n_list = n_list;
    rec.dev1.resize(n_list.size());
    rec.dev2.resize(n_list.size());
    for (std::size_t i = 0; i < n_list.size(); ++i) {
        const int n = n_list[i];
        if (n < 2)
            throw std::domain_error("lemma4_limits: each n must be >= 2");
        const double m = n - 1.0;
        std::vector<double> d1(xs.size()), d2(xs.size());
        parallel_for(xs.size(), [&](std::size_t xi) {
            const double x = xs[xi];
            const auto J = basis_detail::bezier_all_l(n, x);
            CompensatedSum s1, s2;
            for (int k = 1; k <= n - 1; ++k) {
                const long double jk =
                    alpha == 1.0 ? J[k] : std::pow(J[k], static_cast<long double>(alpha));
                s1.add(jk);
                s2.add(static_cast<long double>(k) * jk);
            }
            d1[xi] = std::fabs(static_cast<double>(s1.value_l() / m) - x);
            d2[xi] = std::fabs(static_cast<double>(s2.value_l() / (m * m)) - x * x / 2.0);
        });
        rec.dev1[i] = *std::max_element(d1.begin(), d1.end());
        rec.dev2[i] = *std::max_element(d2.begin(), d2.end());
    }
    return rec;
}

CheckReport lemma7_check(const OperatorConfig& config, const GridSpec& grid) {
    const OperatorConfig c = config.normalized();
    c.validate();
    grid.validate();
    const int n = c.n;
    const double bound1 = c.alpha / 4.0 * (14.0 + c.beta * c.beta) / (n - 1.0);

    CheckReport rep;
    rep.check = "Lemma 7";
    rep.metric = "max_ratio";
    rep.tolerance = 1.0 + 1e-9;

    double r1 = 0.0, r1_x = 0.0;
    for (double x : linspace(0.0, 1.0, grid.points)) {
        const double ratio = central_second_moment(c, x) / bound1;
        if (ratio > r1) {
            r1 = ratio;
            r1_x = x;
        }
    }
    double r2 = 0.0, r2_x = 1.0 / n;
    for (double x : linspace(1.0 / n, 1.0 - 1.0 / n, grid.points)) {
        const double b2 = 3.0 * x * (1.0 - x) / (n - 1.0);
        if (b2 <= 0.0)
            continue;
        const double ratio = central_second_moment(c, x) / b2;
        if (ratio > r2) {
            r2 = ratio;
            r2_x = x;
        }
    }
    const bool worst_is_1 = r1 >= r2;
    rep.value = std::max(r1, r2);
    rep.pass = rep.value <= rep.tolerance;
    rep.location = {{"n", static_cast<double>(n)},
                    {"alpha", c.alpha},
                    {"beta", c.beta},
                    {"x", worst_is_1 ? r1_x : r2_x},
                    {"bound", worst_is_1 ? 1.0 : 2.0},
                    {"ratio1", r1},
                    {"ratio2", r2}};
    std::ostringstream os;
    os << "bound(1) max ratio " << r1 << " at x=" << r1_x << "; bound(2) max ratio " << r2
       << " at x=" << r2_x;
    rep.detail = os.str();
    return rep;
}

CheckReport lemma6_korovkin(const OperatorConfig& family, const std::vector<int>& n_list,
                            const GridSpec& grid) {
    if (n_list.empty())
        throw std::invalid_argument("lemma6_korovkin: empty n list");
    grid.validate();
    const auto xs = linspace(0.0, 1.0, grid.points);

    CheckReport rep;
    rep.check = "Lemma 6 / Theorem 1";
    rep.metric = "final_sup_gap";
    rep.tolerance = 0.02;
    rep.pass = true;

    std::vector<std::vector<double>> gaps(3);
    for (int n : n_list) {
        OperatorConfig c = family.normalized().with_n(n);
        c.validate();
        for (int j = 0; j <= 2; ++j) {
            std::vector<double> mono(j + 1, 0.0);
            mono[j] = 1.0;
            OperatorEvaluator ev(c, FunctionSpec::poly(mono));
            std::vector<double> g(xs.size());
            parallel_for(xs.size(), [&](std::size_t i) {
                g[i] = std::fabs(ev.value(xs[i]) - std::pow(xs[i], j));
            });
            gaps[j].push_back(*std::max_element(g.begin(), g.end()));
        }
    }
    // j = 0 is an identity; j = 1, 2 must shrink monotonically (5% slack)
    // and end below 0.02.
    for (double g : gaps[0])
        if (g > 1e-12)
            rep.pass = false;
    for (int j = 1; j <= 2; ++j) {
        for (std::size_t i = 1; i < gaps[j].size(); ++i)
            if (gaps[j][i] > gaps[j][i - 1] * 1.05)
                rep.pass = false;
        if (gaps[j].back() > rep.tolerance)
            rep.pass = false;
    }
    rep.value = std::max(gaps[1].back(), gaps[2].back());
    rep.location = {{"n", static_cast<double>(n_list.back())},
                    {"alpha", family.normalized().alpha},
                    {"beta", family.normalized().beta},
                    {"gap_j0", *std::max_element(gaps[0].begin(), gaps[0].end())},
                    {"gap_j1", gaps[1].back()},
                    {"gap_j2", gaps[2].back()}};
    std::ostringstream os;
    os << "sup gaps at n=" << n_list.back() << ": j0=" << gaps[0].back()
       << " j1=" << gaps[1].back() << " j2=" << gaps[2].back();
    rep.detail = os.str();
    return rep;
}

CheckReport beta0_reduction_report(int n, double alpha, const GridSpec& grid) {
    grid.validate();
    const FunctionSpec f = FunctionSpec::exp_x();
    OperatorConfig gen{OperatorVariant::Generalized, n, alpha, 0.0};
    OperatorConfig bez{OperatorVariant::BernsteinBezier, n, alpha, 0.0};
    const OperatorEvaluator L(gen, f);

    // Same Q weights, interior nodes read at k/(n-1) instead of k/n.
    std::vector<double> reindexed(n + 1);
    reindexed[0] = f(0.0);
    reindexed[n] = f(1.0);
    for (int k = 1; k < n; ++k)
        reindexed[k] = f(static_cast<double>(k) / (n - 1));
    const auto Lr = OperatorEvaluator::with_node_values(bez, std::move(reindexed));
    const OperatorEvaluator Bn(bez, f);  // literal k/n nodes

    double d_reindexed = 0.0, d_literal = 0.0;
    for (double x : linspace(0.0, 1.0, grid.points)) {
        const double lv = L.value(x);
        d_reindexed = std::max(d_reindexed, std::fabs(lv - Lr.value(x)));
        d_literal = std::max(d_literal, std::fabs(lv - Bn.value(x)));
    }
    CheckReport rep;
    rep.check = "beta = 0 reduction";
    rep.metric = "sup_distance";
    rep.tolerance = 1e-12;
    rep.value = d_reindexed;
    rep.pass = d_reindexed <= rep.tolerance;
    rep.location = {{"n", static_cast<double>(n)},
                    {"alpha", alpha},
                    {"dist_nodes_over_n_minus_1", d_reindexed},
                    {"dist_nodes_over_n", d_literal}};
    std::ostringstream os;
    os << "sup distance with k/(n-1) nodes: " << d_reindexed
       << "; with literal k/n nodes: " << d_literal << " (fn " << f.name() << ")";
    rep.detail = os.str();
    return rep;
}

}  // namespace bbops
