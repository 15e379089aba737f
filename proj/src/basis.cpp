#include "bbops/basis.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "bbops/util.hpp"

namespace bbops {

namespace {

constexpr int kLogFactorialTable = 20001;

void check_x(double x) {
    if (!(x >= 0.0 && x <= 1.0))
        throw std::domain_error("basis: x outside [0,1]: " + std::to_string(x));
}

void check_nk(int n, int k, int k_max_extra = 0) {
    if (n < 1)
        throw std::domain_error("basis: degree n must be >= 1");
    if (k < 0 || k > n + k_max_extra)
        throw std::domain_error("basis: index k out of range");
}

void check_alpha(double alpha) {
    if (!(alpha >= 1.0))
        throw std::domain_error("basis: alpha must be >= 1");
}

const std::vector<long double>& log_factorials() {
    static const std::vector<long double> table = [] {
        std::vector<long double> t(kLogFactorialTable);
        t[0] = 0.0L;
        for (int i = 1; i < kLogFactorialTable; ++i)
            t[i] = t[i - 1] + std::log(static_cast<long double>(i));
        return t;
    }();
    return table;
}

long double log_factorial(int n) {
    const auto& table = log_factorials();
    if (n < static_cast<int>(table.size()))
        return table[n];
    return std::lgamma(static_cast<long double>(n) + 1.0L);
}

}  // namespace

namespace basis_detail {

long double log_binomial(int n, int k) {
    return log_factorial(n) - log_factorial(k) - log_factorial(n - k);
}

std::vector<long double> binom_all_l(int n, long double x) {
    std::vector<long double> p(n + 1, 0.0L);
    if (x == 0.0L) {
        p[0] = 1.0L;
        return p;
    }
    if (x == 1.0L) {
        p[n] = 1.0L;
        return p;
    }
    const long double lx = std::log(x);
    const long double l1x = std::log1p(-x);
    for (int k = 0; k <= n; ++k)
        p[k] = std::exp(log_binomial(n, k) + k * lx + (n - k) * l1x);
    return p;
}

std::vector<long double> bezier_all_l(int n, long double x) {
    const auto p = binom_all_l(n, x);
    std::vector<long double> J(n + 2);
    J[n + 1] = 0.0L;
    CompensatedSum tail;
    for (int k = n; k >= 0; --k) {
        tail.add(p[k]);
        long double v = tail.value_l();
        if (v < 0.0L)
            v = 0.0L;
        if (v > 1.0L)
            v = 1.0L;
        J[k] = v;
    }
    return J;
}

std::vector<long double> q_all_l(int n, double alpha, long double x) {
    const auto J = bezier_all_l(n, x);
    std::vector<long double> pw(n + 2);
    if (alpha == 1.0) {
        pw = J;
    } else {
        const long double a = alpha;
        for (int k = 0; k <= n + 1; ++k)
            pw[k] = std::pow(J[k], a);
    }
    std::vector<long double> Q(n + 1);
    for (int k = 0; k <= n; ++k) {
        long double q = pw[k] - pw[k + 1];
        Q[k] = q < 0.0L ? 0.0L : q;
    }
    return Q;
}

}  // namespace basis_detail

double binom_basis(int n, int k, double x) {
    check_nk(n, k);
    check_x(x);
    if (x == 0.0)
        return k == 0 ? 1.0 : 0.0;
    if (x == 1.0)
        return k == n ? 1.0 : 0.0;
    const long double xl = x;
    return static_cast<double>(std::exp(basis_detail::log_binomial(n, k) +
                                        k * std::log(xl) + (n - k) * std::log1p(-xl)));
}

std::vector<double> binom_basis_all(int n, double x) {
    check_nk(n, 0);
    check_x(x);
    const auto pl = basis_detail::binom_all_l(n, x);
    return std::vector<double>(pl.begin(), pl.end());
}

std::vector<double> bezier_basis_all(int n, double x) {
    check_nk(n, 0);
    check_x(x);
    const auto Jl = basis_detail::bezier_all_l(n, x);
    return std::vector<double>(Jl.begin(), Jl.end());
}

double bezier_basis(int n, int k, double x) {
    check_nk(n, k, /*k_max_extra=*/1);
    check_x(x);
    if (k == 0)
        return 1.0;
    if (k == n + 1)
        return 0.0;
    return static_cast<double>(basis_detail::bezier_all_l(n, x)[k]);
}

double q_basis(int n, int k, double alpha, double x) {
    check_nk(n, k);
    check_alpha(alpha);
    check_x(x);
    return static_cast<double>(basis_detail::q_all_l(n, alpha, x)[k]);
}

std::vector<double> q_basis_all(int n, double alpha, double x) {
    check_nk(n, 0);
    check_alpha(alpha);
    check_x(x);
    const auto Ql = basis_detail::q_all_l(n, alpha, x);
    return std::vector<double>(Ql.begin(), Ql.end());
}

double binom_basis_deriv(int n, int k, double x) {
    check_nk(n, k);
    check_x(x);
    // Boundary values taken from the endpoint enumeration of p'_{n,k}.
    if (x == 0.0) {
        if (k == 0)
            return -static_cast<double>(n);
        if (k == 1)
            return static_cast<double>(n);
        return 0.0;
    }
    if (x == 1.0) {
        if (k == n)
            return static_cast<double>(n);
        if (k == n - 1)
            return -static_cast<double>(n);
        return 0.0;
    }
    const double p = binom_basis(n, k, x);
    return n / (x * (1.0 - x)) * (static_cast<double>(k) / n - x) * p;
}

double bezier_basis_deriv(int n, int k, double x) {
    check_nk(n, k, /*k_max_extra=*/1);
    check_x(x);
    if (k == 0 || k == n + 1)
        return 0.0;
    return n * binom_basis(n - 1, k - 1, x);
}

double q_basis_deriv(int n, int k, double alpha, double x) {
    check_nk(n, k);
    check_alpha(alpha);
    check_x(x);
    const double jpk = bezier_basis_deriv(n, k, x);
    const double jpk1 = bezier_basis_deriv(n, k + 1, x);
    if (alpha == 1.0)
        return jpk - jpk1;
    const auto J = basis_detail::bezier_all_l(n, x);
    const long double a = alpha;
    const long double term = a * (std::pow(J[k], a - 1.0L) * static_cast<long double>(jpk) -
                                  std::pow(J[k + 1], a - 1.0L) * static_cast<long double>(jpk1));
    return static_cast<double>(term);
}

}  // namespace bbops
