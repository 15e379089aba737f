#ifndef BBOPS_EXPERIMENTS_HPP
#define BBOPS_EXPERIMENTS_HPP

#include <vector>

#include "bbops/operators.hpp"
#include "bbops/reports.hpp"
#include "bbops/smoothness.hpp"

namespace bbops {

/// sup|L_n f - f| per n with a log-log slope fit. The three smallest n are
/// dropped from the fit (pre-asymptotic transients bias slopes) as long as
/// at least three rows remain.
RateReport convergence_table(const OperatorConfig& family, const FunctionSpec& f,
                             const std::vector<int>& n_list, const GridSpec& grid = {},
                             const QuadratureSpec& quad = {});

/// max_x |L f - f| / rhs(n, alpha, beta, f) for the explicit C^1 bound
/// sqrt((14+b^2)a/(4n)) (||f'|| + omega(f'; 1/sqrt n)(1 + sqrt((14+b^2)a/4))).
BoundReport theorem3_check(const OperatorConfig& config, const FunctionSpec& f,
                           const GridSpec& grid = {});

/// R(n) = sup_x |L f - f| / omega_{phi^lambda}(f; phi^{1-lambda}(x)/sqrt n)
/// over x with phi(x) >= 1/n. The unspecified constant is handled as a
/// boundedness check: max_n R <= 10 * median_n R.
BoundReport theorem2_ratio_scan(const OperatorConfig& family, const FunctionSpec& f,
                                double lambda, const std::vector<int>& n_list,
                                const GridSpec& grid = {});

struct EquivalenceRecord {
    double rate_exponent = 0.0;     // -slope of the sup-error fit
    double modulus_exponent = 0.0;  // slope of the modulus fit
    double gap = 0.0;               // |2 rate - modulus|
    bool pass = false;              // gap <= 0.15
    RateReport rate;
    ExponentFit modulus;
};

EquivalenceRecord equivalence_check(const FunctionSpec& f, double lambda, double alpha,
                                    double beta, const std::vector<int>& n_list,
                                    const std::vector<double>& t_list, const GridSpec& grid = {},
                                    const QuadratureSpec& quad = {});

/// phi^lambda |(L f)'| <= 15 alpha phi^(lambda-1) sqrt(n) ||f||, swept over
/// x in [1/n, 1-1/n] plus the boundary-adjacent points 1/(2n), 1-1/(2n).
BoundReport lemma8_suite(const OperatorConfig& family, const std::vector<FunctionSpec>& fs,
                         const std::vector<double>& lambdas, const std::vector<int>& n_list,
                         const GridSpec& grid = {});

/// phi^lambda |(L f)'| <= 104 alpha ||phi^lambda f'||; every f must carry the
/// W_lambda tag and a registered derivative.
BoundReport lemma9_suite(const OperatorConfig& family, const std::vector<FunctionSpec>& fs,
                         const std::vector<double>& lambdas, const std::vector<int>& n_list,
                         const GridSpec& grid = {});

/// Unproven side claim E_{n-1,beta}((t-x)^2;x) <= 2 phi^2(x)/(n-1); checked
/// and reported but never an exit gate.
CheckReport e_second_moment_check(const std::vector<int>& n_list,
                                  const std::vector<double>& betas, const GridSpec& grid = {});

// -- sweep-style identity checks shared by the CLI and the acceptance suite --

/// Functional monomial moments against the closed forms, both the exact
/// expansion route and forced windowed quadrature.
CheckReport lemma1_oracle_check(int n_max, const std::vector<double>& betas,
                                const QuadratureSpec& quad = {});

/// Closed-form operator moments (alpha = 1) against direct summation; on
/// violation the residual is least-squares resolved against the printed
/// term basis {1, x, x^2, phi^2, x^n}.
CheckReport lemma2_bruteforce_check(int n_min, int n_max, const std::vector<double>& betas,
                                    const GridSpec& grid = {});

/// Basis-sum identities: part (1) exact, part (2) shown non-exact with the
/// corrected identity verified and the asymptotic ratio tracked.
CheckReport lemma3_check(int n_max, const GridSpec& grid = {});

CheckReport lemma4_check(const std::vector<double>& alphas, const std::vector<int>& n_list,
                         const GridSpec& grid = {});

/// 0 <= Q_{n,k}^{(alpha)} <= alpha p_{n,k} over the sweep.
CheckReport lemma5_check(int n_min, int n_max, const std::vector<double>& alphas,
                         const GridSpec& grid = {});

/// Analytic derivative against central finite differences (step 1e-5, mixed
/// tolerance 1e-4) at deterministic interior points across configurations.
CheckReport derivative_consistency_check(int points);

}  // namespace bbops

#endif
