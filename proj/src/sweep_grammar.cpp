#include "bbops/sweep_grammar.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace bbops {

namespace {

double parse_num(const std::string& s, const std::string& token) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size() || !std::isfinite(v))
            throw std::invalid_argument("trailing");
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("bad sweep list '" + token + "'");
    }
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string piece;
    std::istringstream in(s);
    while (std::getline(in, piece, sep))
        parts.push_back(piece);
    return parts;
}

}  // namespace

std::vector<double> parse_value_list(const std::string& token) {
    if (token.empty())
        throw std::invalid_argument("bad sweep list ''");
    const auto range = split(token, ':');
    if (range.size() == 3) {
        const double a = parse_num(range[0], token);
        const double b = parse_num(range[1], token);
        const std::string& rule = range[2];
        if (rule.size() < 2)
            throw std::invalid_argument("bad sweep list '" + token + "'");
        std::vector<double> out;
        const double slack = 1e-9;
        if (rule[0] == 'x') {
            const double f = parse_num(rule.substr(1), token);
            if (!(f > 0.0) || f == 1.0)
                throw std::invalid_argument("bad sweep list '" + token + "': factor");
            const bool up = f > 1.0;
            if ((up && b < a) || (!up && b > a))
                throw std::invalid_argument("bad sweep list '" + token + "': direction");
            for (double v = a; up ? v <= b * (1.0 + slack) : v >= b * (1.0 - slack); v *= f) {
                out.push_back(v);
                if (out.size() > 10000)
                    throw std::invalid_argument("bad sweep list '" + token + "': too long");
            }
        } else if (rule[0] == '+') {
            const double d = parse_num(rule.substr(1), token);
            if (d == 0.0)
                throw std::invalid_argument("bad sweep list '" + token + "': zero step");
            const bool up = d > 0.0;
            if ((up && b < a) || (!up && b > a))
                throw std::invalid_argument("bad sweep list '" + token + "': direction");
            const double span = std::fabs(b - a);
            for (double v = a; up ? v <= b + slack * span : v >= b - slack * span; v += d) {
                out.push_back(v);
                if (out.size() > 100000)
                    throw std::invalid_argument("bad sweep list '" + token + "': too long");
            }
        } else {
            throw std::invalid_argument("bad sweep list '" + token + "'");
        }
        return out;
    }
    if (range.size() != 1)
        throw std::invalid_argument("bad sweep list '" + token + "'");
    std::vector<double> out;
    for (const auto& piece : split(token, ','))
        out.push_back(parse_num(piece, token));
    if (out.empty())
        throw std::invalid_argument("bad sweep list '" + token + "'");
    return out;
}

std::vector<int> parse_count_list(const std::string& token) {
    std::vector<int> out;
    for (double v : parse_value_list(token)) {
        const double r = std::round(v);
        if (std::fabs(v - r) > 1e-6 || r < 1 || r > 1e9)
            throw std::invalid_argument("bad sweep list '" + token + "': expected integers");
        const int iv = static_cast<int>(r);
        if (out.empty() || out.back() != iv)
            out.push_back(iv);
    }
    return out;
}

}  // namespace bbops
