#ifndef BBOPS_BETA_FUNCTIONAL_HPP
#define BBOPS_BETA_FUNCTIONAL_HPP

#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bbops/function_spec.hpp"

namespace bbops {

// Beta-distribution machinery behind the smoothing functionals
// F_{m,k}^{(beta)}(f) = E[f(beta t + (1-beta) k/m)], t ~ Beta(mk, m(m-k)).
// The k = m case has a zero second shape parameter and is defined as the
// point mass at t = 1, the continuity limit.

struct QuadratureSpec {
    enum class Strategy {
        Auto,           // polynomials exact, everything else windowed Gauss
        ExactPoly,      // closed-form moments only; rejects non-polynomials
        WindowedGauss,  // composite Gauss-Legendre on a +-w*sigma window
        FullComposite,  // composite Gauss-Legendre on all of [0,1]
    };
    Strategy strategy = Strategy::Auto;
    int nodes = 24;               // Gauss-Legendre points per panel, >= 4
    double window_sigmas = 12.0;  // half-width of the integration window

    void validate() const;
};

/// Raised when the estimated quadrature error exceeds the 1e-8 gate.
class quadrature_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// ln B(p,q); relative error <= 1e-12 for p+q <= 1e7.
double log_beta(double p, double q);

/// E[t^j] for t ~ Beta(a,b) by the rational recurrence; b = 0 is the point
/// mass at 1 (all moments 1).
double beta_moment(double a, double b, int j);

/// Var t for the functional's Beta((m)k, m(m-k)) argument; 0 at k = m.
double smoothing_variance(int m, int k);

struct QuadResult {
    double value = 0.0;
    double error = 0.0;  // node error estimate + window truncation estimate
};

/// E[g(t)] for t ~ Beta(a,b) via panel-doubling composite Gauss-Legendre,
/// normalized by the numeric window mass.
QuadResult beta_expectation(double a, double b, const std::function<double(double)>& g,
                            const QuadratureSpec& spec = {});

/// F_{m,k}^{(beta)}(f) for 1 <= k <= m.
double smoothing_functional(int m, int k, double beta, const FunctionSpec& f,
                            const QuadratureSpec& spec = {});

/// Closed-form F_{m,k}^{(beta)}(t^j), j in {0,1,2}.
double smoothing_moment(int m, int k, double beta, int j);

/// F_{n-1,k}^{(beta)}(f), the reindexed functional the generalized operator
/// uses; k in [1, n-1], k = n-1 degenerating to f(1).
double f_functional(int n, int k, double beta, const FunctionSpec& f,
                    const QuadratureSpec& spec = {});

double f_functional_moment(int n, int k, double beta, int j);

namespace quad_detail {

/// (node, weight) pairs on [-1,1].
std::vector<std::pair<double, double>> gauss_legendre(int n);

/// beta_expectation with an explicit panel cap (testing hook for the
/// quadrature-failure path).
QuadResult beta_expectation_capped(double a, double b, const std::function<double(double)>& g,
                                   const QuadratureSpec& spec, int max_panels);

}  // namespace quad_detail

}  // namespace bbops

#endif
