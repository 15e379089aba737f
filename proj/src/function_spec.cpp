#include "bbops/function_spec.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace bbops {

struct FunctionSpec::Impl {
    FunctionKind kind = FunctionKind::Poly;
    std::vector<double> coeffs;  // Poly
    double gamma = 1.0;          // Holder
    std::vector<double> xs, vs;  // Sampled
    std::string name;
};

namespace {

std::string format_poly_name(const std::vector<double>& coeffs) {
    std::ostringstream os;
    os << "poly:";
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (i)
            os << ',';
        os << coeffs[i];
    }
    return os.str();
}

double parse_double(const std::string& s, const std::string& token) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size() || !std::isfinite(v))
            throw std::invalid_argument("trailing");
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("parse error in function token '" + token + "'");
    }
}

}  // namespace

FunctionSpec FunctionSpec::poly(std::vector<double> coeffs) {
    if (coeffs.empty())
        throw std::invalid_argument("poly: needs at least one coefficient");
    for (double c : coeffs)
        if (!std::isfinite(c))
            throw std::invalid_argument("poly: coefficients must be finite");
    auto impl = std::make_shared<Impl>();
    impl->kind = FunctionKind::Poly;
    impl->name = format_poly_name(coeffs);
    impl->coeffs = std::move(coeffs);
    return FunctionSpec(std::move(impl));
}

FunctionSpec FunctionSpec::holder(double gamma) {
    if (!(gamma > 0.0 && gamma <= 1.0))
        throw std::invalid_argument("holder: gamma must lie in (0,1]");
    auto impl = std::make_shared<Impl>();
    impl->kind = FunctionKind::Holder;
    impl->gamma = gamma;
    std::ostringstream os;
    os << "holder:" << gamma;
    impl->name = os.str();
    return FunctionSpec(std::move(impl));
}

FunctionSpec FunctionSpec::simple(FunctionKind kind, const char* name) {
    auto impl = std::make_shared<Impl>();
    impl->kind = kind;
    impl->name = name;
    return FunctionSpec(std::move(impl));
}

FunctionSpec FunctionSpec::abs_half() { return simple(FunctionKind::AbsHalf, "abs_half"); }
FunctionSpec FunctionSpec::sin_pi() { return simple(FunctionKind::SinPi, "sin_pi"); }
FunctionSpec FunctionSpec::exp_x() { return simple(FunctionKind::ExpX, "exp_x"); }

FunctionSpec FunctionSpec::sampled(std::vector<double> xs, std::vector<double> values,
                                   std::string name) {
    if (xs.size() != values.size() || xs.size() < 2)
        throw std::invalid_argument("sampled: need >= 2 matching samples");
    std::vector<std::size_t> order(xs.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return xs[a] < xs[b]; });
    std::vector<double> sx, sv;
    sx.reserve(xs.size());
    sv.reserve(xs.size());
    for (std::size_t i : order) {
        if (!sx.empty() && xs[i] == sx.back()) {
            if (values[i] == sv.back())
                continue;  // exact duplicate row
            throw std::runtime_error("sampled: x not strictly increasing after dedup");
        }
        sx.push_back(xs[i]);
        sv.push_back(values[i]);
    }
    if (sx.front() != 0.0 || sx.back() != 1.0)
        throw std::runtime_error("sampled: x range must span exactly [0,1]");
    auto impl = std::make_shared<Impl>();
    impl->kind = FunctionKind::Sampled;
    impl->xs = std::move(sx);
    impl->vs = std::move(sv);
    impl->name = std::move(name);
    return FunctionSpec(std::move(impl));
}

FunctionSpec FunctionSpec::sampled_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("csv: cannot open '" + path + "'");
    std::vector<double> xs, vs;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos)
            throw std::runtime_error("csv: expected two columns in '" + path + "'");
        double x, v;
        try {
            x = std::stod(line.substr(0, comma));
            v = std::stod(line.substr(comma + 1));
        } catch (const std::exception&) {
            if (first) {
                first = false;  // header row
                continue;
            }
            throw std::runtime_error("csv: malformed row '" + line + "' in '" + path + "'");
        }
        first = false;
        xs.push_back(x);
        vs.push_back(v);
    }
    if (xs.size() < 2)
        throw std::runtime_error("csv: fewer than two data rows in '" + path + "'");
    return sampled(std::move(xs), std::move(vs), "csv:" + path);
}

double FunctionSpec::operator()(double x) const {
    const Impl& im = *impl_;
    switch (im.kind) {
        case FunctionKind::Poly: {
            double r = 0.0;
            for (std::size_t i = im.coeffs.size(); i-- > 0;)
                r = r * x + im.coeffs[i];
            return r;
        }
        case FunctionKind::Holder:
            return std::pow(std::fabs(x - 0.5), im.gamma);
        case FunctionKind::AbsHalf:
            return std::fabs(x - 0.5);
        case FunctionKind::SinPi:
            return std::sin(std::numbers::pi * x);
        case FunctionKind::PiCosPi:
            return std::numbers::pi * std::cos(std::numbers::pi * x);
        case FunctionKind::ExpX:
            return std::exp(x);
        case FunctionKind::SignHalf:
            return x < 0.5 ? -1.0 : (x > 0.5 ? 1.0 : 0.0);
        case FunctionKind::Sampled: {
            const auto& xs = im.xs;
            const auto& vs = im.vs;
            auto it = std::upper_bound(xs.begin(), xs.end(), x);
            if (it == xs.begin())
                return vs.front();
            if (it == xs.end())
                return vs.back();
            const std::size_t hi = static_cast<std::size_t>(it - xs.begin());
            const std::size_t lo = hi - 1;
            const double w = (x - xs[lo]) / (xs[hi] - xs[lo]);
            return vs[lo] + w * (vs[hi] - vs[lo]);
        }
    }
    return 0.0;
}

FunctionKind FunctionSpec::kind() const { return impl_->kind; }
const std::string& FunctionSpec::name() const { return impl_->name; }
bool FunctionSpec::is_polynomial() const { return impl_->kind == FunctionKind::Poly; }

const std::vector<double>& FunctionSpec::coeffs() const {
    if (!is_polynomial())
        throw std::logic_error("coeffs: not a polynomial FunctionSpec");
    return impl_->coeffs;
}

bool FunctionSpec::has_derivative() const {
    switch (impl_->kind) {
        case FunctionKind::Poly:
        case FunctionKind::SinPi:
        case FunctionKind::ExpX:
        case FunctionKind::AbsHalf:
            return true;
        case FunctionKind::Holder:
            return impl_->gamma == 1.0;
        default:
            return false;
    }
}

FunctionSpec FunctionSpec::derivative() const {
    switch (impl_->kind) {
        case FunctionKind::Poly: {
            const auto& c = impl_->coeffs;
            if (c.size() <= 1)
                return poly({0.0});
            std::vector<double> d(c.size() - 1);
            for (std::size_t i = 1; i < c.size(); ++i)
                d[i - 1] = c[i] * static_cast<double>(i);
            return poly(std::move(d));
        }
        case FunctionKind::SinPi:
            return simple(FunctionKind::PiCosPi, "pi_cos_pi");
        case FunctionKind::ExpX:
            return exp_x();
        case FunctionKind::AbsHalf:
            return simple(FunctionKind::SignHalf, "sign_half");
        case FunctionKind::Holder:
            if (impl_->gamma == 1.0)
                return simple(FunctionKind::SignHalf, "sign_half");
            break;
        default:
            break;
    }
    throw std::logic_error("derivative: none registered for " + impl_->name);
}

bool FunctionSpec::is_c1() const {
    switch (impl_->kind) {
        case FunctionKind::Poly:
        case FunctionKind::SinPi:
        case FunctionKind::PiCosPi:
        case FunctionKind::ExpX:
            return true;
        default:
            return false;
    }
}

bool FunctionSpec::w_lambda_member() const {
    switch (impl_->kind) {
        case FunctionKind::Poly:
        case FunctionKind::SinPi:
        case FunctionKind::PiCosPi:
        case FunctionKind::ExpX:
        case FunctionKind::AbsHalf:
            return true;
        case FunctionKind::Holder:
            return impl_->gamma == 1.0;
        default:
            return false;
    }
}

FunctionSpec parse_function(const std::string& token) {
    const auto colon = token.find(':');
    const std::string head = token.substr(0, colon);
    if (head == "abs_half" && colon == std::string::npos)
        return FunctionSpec::abs_half();
    if (head == "sin_pi" && colon == std::string::npos)
        return FunctionSpec::sin_pi();
    if (head == "exp_x" && colon == std::string::npos)
        return FunctionSpec::exp_x();
    if (colon == std::string::npos || colon + 1 >= token.size())
        throw std::invalid_argument("parse error in function token '" + token + "'");
    const std::string rest = token.substr(colon + 1);
    if (head == "poly") {
        std::vector<double> coeffs;
        std::string piece;
        std::istringstream in(rest);
        while (std::getline(in, piece, ','))
            coeffs.push_back(parse_double(piece, token));
        if (coeffs.empty())
            throw std::invalid_argument("parse error in function token '" + token + "'");
        return FunctionSpec::poly(std::move(coeffs));
    }
    if (head == "holder") {
        const double g = parse_double(rest, token);
        if (!(g > 0.0 && g <= 1.0))
            throw std::invalid_argument("parse error in function token '" + token +
                                        "': gamma must lie in (0,1]");
        return FunctionSpec::holder(g);
    }
    if (head == "csv")
        return FunctionSpec::sampled_csv(rest);
    throw std::invalid_argument("parse error in function token '" + token + "'");
}

const std::vector<FunctionSpec>& builtin_registry() {
    static const std::vector<FunctionSpec> registry = {
        FunctionSpec::abs_half(),
        FunctionSpec::holder(0.5),
        FunctionSpec::sin_pi(),
        FunctionSpec::exp_x(),
        FunctionSpec::poly({0.0, 0.0, 1.0}),   // x^2
        FunctionSpec::poly({0.0, 1.0, -1.0}),  // x(1-x)
    };
    return registry;
}

}  // namespace bbops
