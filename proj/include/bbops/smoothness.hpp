#ifndef BBOPS_SMOOTHNESS_HPP
#define BBOPS_SMOOTHNESS_HPP

#include <functional>
#include <vector>

#include "bbops/function_spec.hpp"

namespace bbops {

struct GridSpec {
    int points = 2001;  // uniform grid size, >= 11
    int refine = 40;    // golden-section rounds around the top-3 maxima

    void validate() const;
};

/// phi(x) = sqrt(x(1-x)).
double phi(double x);

/// Lower bound of sup |g| over [lo,hi]: uniform grid plus golden-section
/// refinement around the top-3 grid maxima. g may return -inf to mark an
/// infeasible point.
double sup_on_grid(const std::function<double(double)>& g, const GridSpec& grid = {},
                   double lo = 0.0, double hi = 1.0);

double sup_norm(const FunctionSpec& f, const GridSpec& grid = {});
double sup_norm(const std::function<double(double)>& f, const GridSpec& grid = {});

/// Ditzian-Totik modulus: sup over h in (0,t] (64 geometric values ending at
/// h = t) and feasible x of |f(x + h phi^lambda(x)/2) - f(x - h phi^lambda(x)/2)|.
/// Candidates with x +- h phi^lambda(x)/2 outside [0,1] are skipped.
double dt_modulus(const FunctionSpec& f, double lambda, double t, const GridSpec& grid = {});
double dt_modulus(const std::function<double(double)>& f, double lambda, double t,
                  const GridSpec& grid = {});

struct ModulusQuery {
    FunctionSpec f;
    double lambda = 0.0;
    double t = 1.0;
    GridSpec grid;
};

double dt_modulus(const ModulusQuery& q);

/// omega(f; delta), the lambda = 0 case.
double classical_modulus(const FunctionSpec& f, double delta, const GridSpec& grid = {});
double classical_modulus(const std::function<double(double)>& f, double delta,
                         const GridSpec& grid = {});

struct ExponentFit {
    double gamma_hat = 0.0;
    double r2 = 0.0;
};

/// Least-squares slope of log dt_modulus against log t. t_list must be
/// decreasing and span at least two decades.
ExponentFit modulus_exponent(const FunctionSpec& f, double lambda,
                             const std::vector<double>& t_list, const GridSpec& grid = {});

}  // namespace bbops

#endif
