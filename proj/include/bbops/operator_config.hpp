#ifndef BBOPS_OPERATOR_CONFIG_HPP
#define BBOPS_OPERATOR_CONFIG_HPP

#include <string>

namespace bbops {

enum class OperatorVariant {
    Bernstein,        // node sampling with binomial weights
    BernsteinBezier,  // node sampling with Q^(alpha) weights
    BetaBernstein,    // Beta-smoothed functionals with binomial weights
    Generalized,      // Beta-smoothed functionals with Q^(alpha) weights
};

std::string to_string(OperatorVariant v);
OperatorVariant variant_from_string(const std::string& s);

struct OperatorConfig {
    OperatorVariant variant = OperatorVariant::Generalized;
    int n = 2;
    double alpha = 1.0;  // ignored by Bernstein and BetaBernstein
    double beta = 0.0;   // ignored by Bernstein and BernsteinBezier

    bool uses_alpha() const {
        return variant == OperatorVariant::BernsteinBezier ||
               variant == OperatorVariant::Generalized;
    }
    bool uses_beta() const {
        return variant == OperatorVariant::BetaBernstein ||
               variant == OperatorVariant::Generalized;
    }

    /// Irrelevant parameters collapsed to alpha = 1, beta = 0 so that equal
    /// operators produce identical report identities.
    OperatorConfig normalized() const;
    void validate() const;

    OperatorConfig with_n(int nn) const {
        OperatorConfig c = *this;
        c.n = nn;
        return c;
    }
};

}  // namespace bbops

#endif
