#include "bbops/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include "bbops/basis.hpp"
#include "bbops/util.hpp"

namespace bbops {

namespace {

constexpr double kBoundTol = 1.0 + 1e-9;

double sup_abs_diff(const OperatorEvaluator& ev, const FunctionSpec& f, const GridSpec& grid) {
    return sup_on_grid([&](double x) { return std::fabs(ev.value(x) - f(x)); }, grid);
}

void require_increasing(const std::vector<int>& n_list, const char* who) {
    if (n_list.empty())
        throw std::invalid_argument(std::string(who) + ": empty n list");
    for (std::size_t i = 0; i < n_list.size(); ++i) {
        if (n_list[i] < 2)
            throw std::invalid_argument(std::string(who) + ": each n must be >= 2");
        if (i > 0 && n_list[i] <= n_list[i - 1])
            throw std::invalid_argument(std::string(who) + ": n list must be strictly increasing");
    }
}

}  // namespace

RateReport convergence_table(const OperatorConfig& family, const FunctionSpec& f,
                             const std::vector<int>& n_list, const GridSpec& grid,
                             const QuadratureSpec& quad) {
    require_increasing(n_list, "convergence_table");
    grid.validate();
    RateReport rep;
    rep.check = "Theorem 1 / Theorem 5 (rate)";
    rep.config = family.normalized().with_n(n_list.front());
    rep.fn = f.name();
    for (int n : n_list) {
        const OperatorEvaluator ev(family.normalized().with_n(n), f, quad);
        rep.rows.push_back({n, sup_abs_diff(ev, f, grid)});
    }
    const std::size_t rows = rep.rows.size();
    const std::size_t drop = rows >= 6 ? 3 : (rows > 3 ? rows - 3 : 0);
    std::vector<double> ns, es;
    for (std::size_t i = drop; i < rows; ++i) {
        ns.push_back(rep.rows[i].n);
        es.push_back(rep.rows[i].sup_error);
    }
    if (ns.size() >= 2) {
        const LineFit fit = fit_loglog(ns, es);
        rep.slope = fit.slope;
        rep.r2 = fit.r2;
    }
    return rep;
}

BoundReport theorem3_check(const OperatorConfig& config, const FunctionSpec& f,
                           const GridSpec& grid) {
    const OperatorConfig c = config.normalized();
    c.validate();
    grid.validate();
    if (!f.is_c1() || !f.has_derivative())
        throw std::invalid_argument("theorem3_check: " + f.name() + " is not C^1");
    const FunctionSpec fp = f.derivative();
    const double fp_norm = sup_norm(fp, grid);
    const double om = classical_modulus(fp, 1.0 / std::sqrt(c.n), grid);
    const double coef = std::sqrt((14.0 + c.beta * c.beta) * c.alpha / (4.0 * c.n));
    const double rhs =
        coef * (fp_norm + om * (1.0 + std::sqrt((14.0 + c.beta * c.beta) * c.alpha / 4.0)));

    const OperatorEvaluator ev(c, f);
    BoundReport rep;
    rep.lemma = "T3";
    rep.check = "Theorem 3";
    double worst_x = 0.0;
    for (double x : linspace(0.0, 1.0, grid.points)) {
        const double ratio = std::fabs(ev.value(x) - f(x)) / rhs;
        if (ratio > rep.max_ratio) {
            rep.max_ratio = ratio;
            worst_x = x;
        }
    }
    rep.pass = rep.max_ratio <= kBoundTol;
    rep.argmax_location = {{"n", static_cast<double>(c.n)},
                           {"alpha", c.alpha},
                           {"beta", c.beta},
                           {"x", worst_x}};
    std::ostringstream os;
    os << "fn " << f.name() << ", ||f'||=" << fp_norm << ", omega(f';1/sqrt n)=" << om
       << ", rhs=" << rhs;
    rep.detail = os.str();
    return rep;
}

BoundReport theorem2_ratio_scan(const OperatorConfig& family, const FunctionSpec& f,
                                double lambda, const std::vector<int>& n_list,
                                const GridSpec& grid) {
    if (lambda != 0.0 && lambda != 0.5 && lambda != 1.0)
        throw std::invalid_argument("theorem2_ratio_scan: lambda must be 0, 0.5 or 1");
    require_increasing(n_list, "theorem2_ratio_scan");
    grid.validate();
    const GridSpec mod_grid{std::min(grid.points, 801), std::min(grid.refine, 20)};

    BoundReport rep;
    rep.lemma = "T2-ratio";
    rep.check = "Theorem 2 (ratio boundedness)";
    std::vector<double> curve;
    for (int n : n_list) {
        const OperatorEvaluator ev(family.normalized().with_n(n), f);
        const double sqrt_n = std::sqrt(static_cast<double>(n));
        double om_fixed = 0.0;
        if (lambda == 1.0)
            om_fixed = dt_modulus(f, 1.0, 1.0 / sqrt_n, mod_grid);
        double R = 0.0, worst_x = 0.0;
        for (double x : linspace(0.0, 1.0, grid.points)) {
            if (x * (1.0 - x) < 1.0 / (static_cast<double>(n) * n))
                continue;
            const double lhs = std::fabs(ev.value(x) - f(x));
            const double t = std::pow(phi(x), 1.0 - lambda) / sqrt_n;
            const double om = lambda == 1.0 ? om_fixed : dt_modulus(f, lambda, t, mod_grid);
            if (om <= 0.0)
                continue;
            if (lhs / om > R) {
                R = lhs / om;
                worst_x = x;
            }
        }
        curve.push_back(R);
        rep.curve.emplace_back(static_cast<double>(n), R);
        if (R >= rep.max_ratio) {
            rep.max_ratio = R;
            rep.argmax_location = {{"n", static_cast<double>(n)},
                                   {"lambda", lambda},
                                   {"x", worst_x}};
        }
    }
    std::vector<double> sorted = curve;
    std::sort(sorted.begin(), sorted.end());
    const double median = sorted[sorted.size() / 2];
    const double max = sorted.back();
    // Normalize so that the shared pass rule max_ratio <= 1 + 1e-9 reads
    // "max over n <= 10 x median".
    rep.max_ratio = median > 0.0 ? max / (10.0 * median) : 0.0;
    rep.pass = rep.max_ratio <= kBoundTol;
    std::ostringstream os;
    os << "fn " << f.name() << ", lambda=" << lambda << ", max R=" << max
       << ", median R=" << median;
    rep.detail = os.str();
    return rep;
}

EquivalenceRecord equivalence_check(const FunctionSpec& f, double lambda, double alpha,
                                    double beta, const std::vector<int>& n_list,
                                    const std::vector<double>& t_list, const GridSpec& grid,
                                    const QuadratureSpec& quad) {
    EquivalenceRecord rec;
    OperatorConfig family{OperatorVariant::Generalized, n_list.front(), alpha, beta};
    rec.rate = convergence_table(family, f, n_list, grid, quad);
    rec.modulus = modulus_exponent(f, lambda, t_list, grid);
    rec.rate_exponent = -rec.rate.slope;
    rec.modulus_exponent = rec.modulus.gamma_hat;
    rec.gap = std::fabs(2.0 * rec.rate_exponent - rec.modulus_exponent);
    rec.pass = rec.gap <= 0.15;
    return rec;
}

BoundReport lemma8_suite(const OperatorConfig& family, const std::vector<FunctionSpec>& fs,
                         const std::vector<double>& lambdas, const std::vector<int>& n_list,
                         const GridSpec& grid) {
    require_increasing(n_list, "lemma8_suite");
    grid.validate();
    const OperatorConfig base = family.normalized();
    BoundReport rep;
    rep.lemma = "L8";
    rep.check = "Lemma 8";
    for (const auto& f : fs) {
        const double fnorm = sup_norm(f, grid);
        if (fnorm == 0.0)
            continue;  // zero function: 0 <= bound trivially
        for (int n : n_list) {
            const OperatorEvaluator ev(base.with_n(n), f);
            auto xs = linspace(1.0 / n, 1.0 - 1.0 / n, grid.points);
            xs.push_back(0.5 / n);
            xs.push_back(1.0 - 0.5 / n);
            const double sqrt_n = std::sqrt(static_cast<double>(n));
            std::vector<double> dv(xs.size());
            parallel_for(xs.size(), [&](std::size_t i) { dv[i] = ev.deriv(xs[i]); });
            for (std::size_t i = 0; i < xs.size(); ++i) {
                const double px = phi(xs[i]);
                for (double lam : lambdas) {
                    const double lhs = std::pow(px, lam) * std::fabs(dv[i]);
                    const double rhs =
                        15.0 * base.alpha * std::pow(px, lam - 1.0) * sqrt_n * fnorm;
                    const double ratio = lhs / rhs;
                    if (ratio > rep.max_ratio) {
                        rep.max_ratio = ratio;
                        rep.argmax_location = {{"n", static_cast<double>(n)},
                                               {"alpha", base.alpha},
                                               {"beta", base.beta},
                                               {"lambda", lam},
                                               {"x", xs[i]}};
                        rep.detail = "worst fn " + f.name();
                    }
                }
            }
        }
    }
    rep.pass = rep.max_ratio <= kBoundTol;
    return rep;
}

BoundReport lemma9_suite(const OperatorConfig& family, const std::vector<FunctionSpec>& fs,
                         const std::vector<double>& lambdas, const std::vector<int>& n_list,
                         const GridSpec& grid) {
    require_increasing(n_list, "lemma9_suite");
    grid.validate();
    const OperatorConfig base = family.normalized();
    BoundReport rep;
    rep.lemma = "L9";
    rep.check = "Lemma 9";
    for (const auto& f : fs) {
        if (!f.w_lambda_member() || !f.has_derivative())
            throw std::invalid_argument("lemma9_suite: " + f.name() + " is not W_lambda tagged");
        const FunctionSpec fp = f.derivative();
        std::map<double, double> weighted_norm;
        for (double lam : lambdas)
            weighted_norm[lam] = sup_norm(
                [&](double x) { return std::pow(x * (1.0 - x), 0.5 * lam) * fp(x); }, grid);
        for (int n : n_list) {
            const OperatorEvaluator ev(base.with_n(n), f);
            const auto xs = linspace(0.0, 1.0, grid.points);
            std::vector<double> dv(xs.size());
            parallel_for(xs.size(), [&](std::size_t i) { dv[i] = ev.deriv(xs[i]); });
            for (std::size_t i = 0; i < xs.size(); ++i) {
                const double p2 = xs[i] * (1.0 - xs[i]);
                for (double lam : lambdas) {
                    const double nrm = weighted_norm[lam];
                    if (nrm == 0.0)
                        continue;
                    const double lhs = std::pow(p2, 0.5 * lam) * std::fabs(dv[i]);
                    const double ratio = lhs / (104.0 * base.alpha * nrm);
                    if (ratio > rep.max_ratio) {
                        rep.max_ratio = ratio;
                        rep.argmax_location = {{"n", static_cast<double>(n)},
                                               {"alpha", base.alpha},
                                               {"beta", base.beta},
                                               {"lambda", lam},
                                               {"x", xs[i]}};
                        rep.detail = "worst fn " + f.name();
                    }
                }
            }
        }
    }
    rep.pass = rep.max_ratio <= kBoundTol;
    return rep;
}

CheckReport e_second_moment_check(const std::vector<int>& n_list,
                                  const std::vector<double>& betas, const GridSpec& grid) {
    grid.validate();
    CheckReport rep;
    rep.check = "E-operator second moment (side claim)";
    rep.metric = "max_ratio";
    rep.tolerance = kBoundTol;
    rep.gate = false;
    for (int n : n_list) {
        if (n < 2)
            throw std::invalid_argument("e_second_moment_check: each n must be >= 2");
        const int m = n - 1;  // claim is about E at degree n-1
        if (m < 2)
            continue;
        for (double beta : betas) {
            OperatorConfig c{OperatorVariant::BetaBernstein, m, 1.0, beta};
            for (double x : linspace(0.0, 1.0, grid.points)) {
                const double b = 2.0 * x * (1.0 - x) / m;
                if (b <= 0.0)
                    continue;
                const double ratio = central_second_moment(c, x) / b;
                if (ratio > rep.value) {
                    rep.value = ratio;
                    rep.location = {{"n", static_cast<double>(n)}, {"beta", beta}, {"x", x}};
                }
            }
        }
    }
    rep.pass = rep.value <= rep.tolerance;
    return rep;
}

CheckReport lemma1_oracle_check(int n_max, const std::vector<double>& betas,
                                const QuadratureSpec& quad) {
    CheckReport rep;
    rep.check = "Lemma 1";
    rep.metric = "max_abs_gap";
    rep.tolerance = 1e-10;

    QuadratureSpec forced = quad;
    forced.strategy = QuadratureSpec::Strategy::WindowedGauss;

    std::vector<int> ns;
    for (int n = 2; n <= n_max; ++n)
        ns.push_back(n);
    struct Slot {
        double gap = 0.0;
        std::map<std::string, double> loc;
    };
    std::vector<Slot> slots(ns.size());
    parallel_for(ns.size(), [&](std::size_t i) {
        const int n = ns[i];
        for (int k = 1; k <= n - 1; ++k) {
            for (double beta : betas) {
                for (int j = 0; j <= 2; ++j) {
                    std::vector<double> mono(j + 1, 0.0);
                    mono[j] = 1.0;
                    const FunctionSpec tj = FunctionSpec::poly(mono);
                    const double closed = f_functional_moment(n, k, beta, j);
                    const double exact = f_functional(n, k, beta, tj, quad);
                    const double viaquad = f_functional(n, k, beta, tj, forced);
                    const double gap =
                        std::max(std::fabs(exact - closed), std::fabs(viaquad - closed));
                    if (gap > slots[i].gap) {
                        slots[i].gap = gap;
                        slots[i].loc = {{"n", static_cast<double>(n)},
                                        {"k", static_cast<double>(k)},
                                        {"beta", beta},
                                        {"j", static_cast<double>(j)}};
                    }
                }
            }
        }
    });
    for (const auto& s : slots) {
        if (s.gap > rep.value) {
            rep.value = s.gap;
            rep.location = s.loc;
        }
    }
    rep.pass = rep.value <= rep.tolerance;
    std::ostringstream os;
    os << "exact-poly and windowed-gauss functional moments vs closed forms, n <= " << n_max;
    rep.detail = os.str();
    return rep;
}

CheckReport lemma2_bruteforce_check(int n_min, int n_max, const std::vector<double>& betas,
                                    const GridSpec& grid) {
    grid.validate();
    CheckReport rep;
    rep.check = "Lemma 2";
    rep.metric = "max_abs_gap";
    rep.tolerance = 1e-10;
    const auto xs = linspace(0.0, 1.0, grid.points);

    double worst_gap = 0.0;
    int worst_n = n_min;
    double worst_beta = 0.0;
    std::vector<int> ns;
    for (int n = n_min; n <= n_max; ++n)
        ns.push_back(n);
    struct Slot {
        double gap = 0.0;
        std::map<std::string, double> loc;
        double beta = 0.0;
    };
    std::vector<Slot> slots(ns.size());
    parallel_for(ns.size(), [&](std::size_t i) {
        const int n = ns[i];
        for (double beta : betas) {
            OperatorConfig c{OperatorVariant::Generalized, n, 1.0, beta};
            for (int j = 0; j <= 2; ++j) {
                std::vector<double> mono(j + 1, 0.0);
                mono[j] = 1.0;
                const OperatorEvaluator ev(c, FunctionSpec::poly(mono));
                for (double x : xs) {
                    const double gap =
                        std::fabs(moment_closed_form(c, j, x) - ev.value(x));
                    if (gap > slots[i].gap) {
                        slots[i].gap = gap;
                        slots[i].beta = beta;
                        slots[i].loc = {{"n", static_cast<double>(n)},
                                        {"beta", beta},
                                        {"j", static_cast<double>(j)},
                                        {"x", x}};
                    }
                }
            }
        }
    });
    for (const auto& s : slots) {
        if (s.gap > worst_gap) {
            worst_gap = s.gap;
            worst_n = static_cast<int>(s.loc.at("n"));
            worst_beta = s.beta;
            rep.location = s.loc;
        }
    }
    rep.value = worst_gap;
    rep.pass = rep.value <= rep.tolerance;
    if (!rep.pass) {
        // Resolve the residual of the second-moment formula against the
        // printed term basis {1, x, x^2, phi^2, x^n} at the worst (n, beta).
        OperatorConfig c{OperatorVariant::Generalized, worst_n, 1.0, worst_beta};
        const OperatorEvaluator ev(c, FunctionSpec::poly({0.0, 0.0, 1.0}));
        std::vector<std::vector<double>> basis;
        std::vector<double> resid;
        for (double x : xs) {
            basis.push_back({1.0, x, x * x, x * (1.0 - x), std::pow(x, worst_n)});
            resid.push_back(moment_closed_form(c, 2, x) - ev.value(x));
        }
        // Normal equations, 5x5.
        double A[5][5] = {};
        double b[5] = {};
        for (std::size_t r = 0; r < basis.size(); ++r)
            for (int p = 0; p < 5; ++p) {
                b[p] += basis[r][p] * resid[r];
                for (int q = 0; q < 5; ++q)
                    A[p][q] += basis[r][p] * basis[r][q];
            }
        for (int p = 0; p < 5; ++p) {  // Gaussian elimination, partial pivot
            int piv = p;
            for (int r = p + 1; r < 5; ++r)
                if (std::fabs(A[r][p]) > std::fabs(A[piv][p]))
                    piv = r;
            std::swap(A[p], A[piv]);
            std::swap(b[p], b[piv]);
            for (int r = p + 1; r < 5; ++r) {
                const double f = A[r][p] / A[p][p];
                for (int q = p; q < 5; ++q)
                    A[r][q] -= f * A[p][q];
                b[r] -= f * b[p];
            }
        }
        double coef[5];
        for (int p = 4; p >= 0; --p) {
            double s = b[p];
            for (int q = p + 1; q < 5; ++q)
                s -= A[p][q] * coef[q];
            coef[p] = s / A[p][p];
        }
        std::ostringstream os;
        os << "residual fit at n=" << worst_n << " beta=" << worst_beta << ": " << coef[0]
           << " + " << coef[1] << " x + " << coef[2] << " x^2 + " << coef[3] << " phi^2 + "
           << coef[4] << " x^n";
        rep.detail = os.str();
    } else {
        rep.detail = "closed forms match direct summation term for term";
    }
    return rep;
}

CheckReport lemma3_check(int n_max, const GridSpec& grid) {
    grid.validate();
    CheckReport rep;
    rep.check = "Lemma 3";
    rep.metric = "max_abs_gap";
    rep.tolerance = 1e-10;

    double worst = 0.0;
    std::map<std::string, double> loc;
    for (int n = 2; n <= n_max; ++n) {
        for (double x : linspace(0.0, 1.0, grid.points)) {
            const Lemma3Sums s = lemma3_sums(n, x);
            const double g1 = std::fabs(s.s1_direct - s.s1_closed);
            const double g2 = std::fabs(s.s2_direct - s.s2_corrected);
            const double g = std::max(g1, g2);
            if (g > worst) {
                worst = g;
                loc = {{"n", static_cast<double>(n)}, {"x", x}};
            }
        }
    }
    rep.value = worst;
    rep.location = loc;

    // Part (2) as printed fails at n = 2, x = 1/2: direct 0.75 vs claimed 0.25.
    const Lemma3Sums probe = lemma3_sums(2, 0.5);
    const bool non_exact_shown = std::fabs(probe.s2_direct - 0.75) <= 1e-12 &&
                                 std::fabs(probe.s2_paper - 0.25) <= 1e-12;
    // The printed value is still the right asymptotic order: its relative
    // deviation from the corrected identity shrinks to within 2% by n = 200.
    const Lemma3Sums tail = lemma3_sums(std::max(200, n_max), 0.5);
    const double rel_dev = std::fabs(tail.s2_paper - tail.s2_corrected) / tail.s2_corrected;

    rep.pass = worst <= rep.tolerance && non_exact_shown && rel_dev <= 0.02;
    std::ostringstream os;
    os << "part (1) and corrected part (2) exact to " << rep.tolerance
       << "; printed part (2) at n=2, x=0.5 gives " << probe.s2_paper << " vs direct "
       << probe.s2_direct << "; relative deviation of printed part (2) at n="
       << std::max(200, n_max) << ", x=0.5: " << rel_dev;
    rep.detail = os.str();
    rep.location["ratio_dev_at_200"] = rel_dev;
    return rep;
}

CheckReport lemma4_check(const std::vector<double>& alphas, const std::vector<int>& n_list,
                         const GridSpec& grid) {
    require_increasing(n_list, "lemma4_check");
    grid.validate();
    const auto xs = linspace(0.0, 1.0, grid.points);
    CheckReport rep;
    rep.check = "Lemma 4";
    rep.metric = "final_max_deviation";
    rep.tolerance = 0.01;
    rep.pass = true;
    for (double alpha : alphas) {
        const Lemma4Record rec = lemma4_limits(alpha, xs, n_list);
        const double fin = std::max(rec.dev1.back(), rec.dev2.back());
        if (fin > rep.value) {
            rep.value = fin;
            rep.location = {{"alpha", alpha}, {"n", static_cast<double>(n_list.back())}};
        }
        if (!rec.decreasing(0.05) || fin > rep.tolerance)
            rep.pass = false;
    }
    rep.detail = "both normalized Bezier power sums approach their limits, deviations decreasing";
    return rep;
}

CheckReport lemma5_check(int n_min, int n_max, const std::vector<double>& alphas,
                         const GridSpec& grid) {
    grid.validate();
    CheckReport rep;
    rep.check = "Lemma 5";
    rep.metric = "max_excess";  // max over the sweep of Q - alpha p
    rep.tolerance = 1e-12;
    const auto xs = linspace(0.0, 1.0, grid.points);
    std::vector<int> ns;
    for (int n = n_min; n <= n_max; ++n)
        ns.push_back(n);
    struct Slot {
        double excess = -1.0;
        std::map<std::string, double> loc;
    };
    std::vector<Slot> slots(ns.size());
    parallel_for(ns.size(), [&](std::size_t i) {
        const int n = ns[i];
        for (double alpha : alphas) {
            for (double x : xs) {
                const auto q = q_basis_all(n, alpha, x);
                const auto p = binom_basis_all(n, x);
                for (int k = 0; k <= n; ++k) {
                    if (q[k] < 0.0) {
                        slots[i].excess = 1.0;  // negativity is an outright failure
                        slots[i].loc = {{"n", static_cast<double>(n)},
                                        {"k", static_cast<double>(k)},
                                        {"alpha", alpha},
                                        {"x", x}};
                        continue;
                    }
                    const double excess = q[k] - alpha * p[k];
                    if (excess > slots[i].excess) {
                        slots[i].excess = excess;
                        slots[i].loc = {{"n", static_cast<double>(n)},
                                        {"k", static_cast<double>(k)},
                                        {"alpha", alpha},
                                        {"x", x}};
                    }
                }
            }
        }
    });
    rep.value = -1.0;
    for (const auto& s : slots) {
        if (s.excess > rep.value) {
            rep.value = s.excess;
            rep.location = s.loc;
        }
    }
    rep.pass = rep.value <= rep.tolerance;
    rep.detail = "0 <= Q <= alpha p over the full (n, k, alpha, x) sweep";
    return rep;
}

CheckReport derivative_consistency_check(int points) {
    if (points < 1)
        throw std::invalid_argument("derivative_consistency_check: points must be >= 1");
    CheckReport rep;
    rep.check = "derivative consistency";
    rep.metric = "max_mixed_error";
    rep.tolerance = 1e-4;

    const int ns[] = {6, 13, 32, 87, 256};
    const double alphas[] = {1.0, 1.5, 2.0, 3.0};
    const double betas[] = {0.0, 0.5, 1.0};
    const std::vector<FunctionSpec> fns = {
        FunctionSpec::poly({0.0, 0.0, 1.0}), FunctionSpec::sin_pi(), FunctionSpec::exp_x(),
        FunctionSpec::abs_half(),            FunctionSpec::poly({0.0, 1.0, -1.0}),
    };
    constexpr double kGolden = 0.6180339887498949;
    constexpr double kStep = 1e-5;

    std::map<std::string, OperatorEvaluator> cache;
    double worst = 0.0;
    std::map<std::string, double> loc;
    for (int i = 0; i < points; ++i) {
        double frac = std::fmod(0.5 + (i + 1) * kGolden, 1.0);
        const double x = 0.01 + 0.98 * frac;
        OperatorConfig c;
        c.variant = i % 2 == 0 ? OperatorVariant::Generalized : OperatorVariant::BernsteinBezier;
        c.n = ns[i % 5];
        c.alpha = alphas[i % 4];
        c.beta = betas[i % 3];
        const FunctionSpec& f = fns[i % fns.size()];
        const std::string key = to_string(c.variant) + "/" + std::to_string(c.n) + "/" +
                                std::to_string(c.alpha) + "/" + std::to_string(c.beta) + "/" +
                                f.name();
        auto it = cache.find(key);
        if (it == cache.end())
            it = cache.emplace(key, OperatorEvaluator(c, f)).first;
        const OperatorEvaluator& ev = it->second;
        const double analytic = ev.deriv(x);
        const double fd = (ev.value(x + kStep) - ev.value(x - kStep)) / (2.0 * kStep);
        const double err = std::fabs(analytic - fd) /
                           (1.0 + std::max(std::fabs(analytic), std::fabs(fd)));
        if (err > worst) {
            worst = err;
            loc = {{"n", static_cast<double>(c.n)}, {"alpha", c.alpha},
                   {"beta", c.beta},                {"x", x},
                   {"analytic", analytic},          {"fd", fd}};
        }
    }
    rep.value = worst;
    rep.location = loc;
    rep.pass = worst <= rep.tolerance;
    std::ostringstream os;
    os << points << " deterministic interior points, step " << kStep;
    rep.detail = os.str();
    return rep;
}

}  // namespace bbops
