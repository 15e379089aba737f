#ifndef BBOPS_BASIS_HPP
#define BBOPS_BASIS_HPP

#include <vector>

namespace bbops {

// Binomial basis p_{n,k}, its tail sums J_{n,k} (Bezier basis), the
// power-difference basis Q_{n,k}^{(alpha)} = J_{n,k}^a - J_{n,k+1}^a, and
// first derivatives of all three. Evaluation runs in long double log space
// so that partition-of-unity sums stay below 1e-12 drift up to n ~ 1e4.
//
// Index conventions: p and Q take 0 <= k <= n; J additionally accepts the
// sentinel k = n+1, which is identically zero.

/// p_{n,k}(x) = C(n,k) x^k (1-x)^(n-k).
double binom_basis(int n, int k, double x);

/// All of p_{n,0..n}(x).
std::vector<double> binom_basis_all(int n, double x);

/// (J_{n,0}, ..., J_{n,n}, J_{n,n+1}): nonincreasing, J_{n,0} = 1, J_{n,n+1} = 0.
std::vector<double> bezier_basis_all(int n, double x);

double bezier_basis(int n, int k, double x);

/// Q_{n,k}^{(alpha)}(x), alpha >= 1; equals p_{n,k}(x) at alpha = 1.
double q_basis(int n, int k, double alpha, double x);

std::vector<double> q_basis_all(int n, double alpha, double x);

/// p'_{n,k}(x); exact boundary values at x in {0,1}.
double binom_basis_deriv(int n, int k, double x);

/// J'_{n,k}(x) = n p_{n-1,k-1}(x) for 1 <= k <= n; zero for k = 0 and k = n+1.
double bezier_basis_deriv(int n, int k, double x);

double q_basis_deriv(int n, int k, double alpha, double x);

namespace basis_detail {

long double log_binomial(int n, int k);
std::vector<long double> binom_all_l(int n, long double x);
std::vector<long double> bezier_all_l(int n, long double x);  // size n+2
std::vector<long double> q_all_l(int n, double alpha, long double x);

}  // namespace basis_detail

}  // namespace bbops

#endif
