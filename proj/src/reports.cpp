#include "bbops/reports.hpp"

#include <charconv>
#include <fstream>
#include <stdexcept>

namespace bbops {

using nlohmann::json;

std::string format_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

json to_json(const OperatorConfig& c) {
    return json{{"variant", to_string(c.variant)},
                {"n", c.n},
                {"alpha", c.alpha},
                {"beta", c.beta}};
}

json to_json(const CheckReport& r) {
    return json{{"type", "check"},     {"anchor", r.check},       {"pass", r.pass},
                {"gate", r.gate},      {"metric", r.metric},      {"value", r.value},
                {"tolerance", r.tolerance}, {"location", r.location}, {"detail", r.detail}};
}

json to_json(const RateReport& r) {
    json rows = json::array();
    for (const auto& row : r.rows)
        rows.push_back({row.n, row.sup_error});
    return json{{"type", "rate"},   {"anchor", r.check}, {"config", to_json(r.config)},
                {"fn", r.fn},       {"rows", rows},      {"slope", r.slope},
                {"r2", r.r2}};
}

json to_json(const BoundReport& r) {
    json curve = json::array();
    for (const auto& [n, v] : r.curve)
        curve.push_back({n, v});
    return json{{"type", "bound"},
                {"lemma", r.lemma},
                {"anchor", r.check},
                {"max_ratio", r.max_ratio},
                {"pass", r.pass},
                {"location", r.argmax_location},
                {"curve", curve},
                {"detail", r.detail}};
}

json to_json(const MomentReport& r) {
    return json{{"type", "moment"},           {"config", to_json(r.config)},
                {"x", r.x},                   {"j", r.j},
                {"closed_form", r.closed_form}, {"direct_sum", r.direct_sum},
                {"abs_gap", r.abs_gap}};
}

RateReport rate_report_from_json(const json& j) {
    RateReport r;
    r.check = j.at("anchor").get<std::string>();
    const auto& cfg = j.at("config");
    r.config.variant = variant_from_string(cfg.at("variant").get<std::string>());
    r.config.n = cfg.at("n").get<int>();
    r.config.alpha = cfg.at("alpha").get<double>();
    r.config.beta = cfg.at("beta").get<double>();
    r.fn = j.at("fn").get<std::string>();
    for (const auto& row : j.at("rows"))
        r.rows.push_back({row.at(0).get<int>(), row.at(1).get<double>()});
    r.slope = j.at("slope").get<double>();
    r.r2 = j.at("r2").get<double>();
    return r;
}

json make_document(const std::string& command, json params, json reports) {
    return json{{"tool_version", kToolVersion},
                {"command", command},
                {"params", std::move(params)},
                {"reports", std::move(reports)}};
}

namespace {
std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}
}  // namespace

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open '" + path + "' for writing");
    auto write_row = [&](const std::vector<std::string>& row) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i)
                out << ',';
            out << csv_field(row[i]);
        }
        out << "\r\n";
    };
    write_row(header);
    for (const auto& row : rows)
        write_row(row);
}

}  // namespace bbops
