#ifndef BBOPS_REPORTS_HPP
#define BBOPS_REPORTS_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bbops/operator_config.hpp"

namespace bbops {

inline constexpr const char* kToolVersion = "0.1.0";

/// Pass/fail record of one identity, limit or inequality check.
struct CheckReport {
    std::string check;     // anchor label, e.g. "Lemma 7(2)"
    bool pass = false;
    bool gate = true;      // informational checks do not drive exit codes
    std::string metric = "max_ratio";
    double value = 0.0;    // worst metric value observed
    double tolerance = 0.0;
    std::map<std::string, double> location;  // where the worst value occurred
    std::string detail;
};

struct RateRow {
    int n = 0;
    double sup_error = 0.0;
};

/// Sup-error decay table with its fitted log-log slope.
struct RateReport {
    std::string check;  // anchor label
    OperatorConfig config;  // n field holds the first entry of the sweep
    std::string fn;
    std::vector<RateRow> rows;
    double slope = 0.0;
    double r2 = 0.0;
};

/// Worst ratio attained against a one-sided bound.
struct BoundReport {
    std::string lemma;  // L7a | L7b | L8 | L9 | T2-ratio | T3
    std::string check;  // anchor label
    double max_ratio = 0.0;
    bool pass = false;
    std::map<std::string, double> argmax_location;
    std::vector<std::pair<double, double>> curve;  // optional (n, value) trace
    std::string detail;
};

struct MomentReport {
    OperatorConfig config;
    double x = 0.0;
    int j = 0;
    double closed_form = 0.0;
    double direct_sum = 0.0;
    double abs_gap = 0.0;
};

nlohmann::json to_json(const OperatorConfig& c);
nlohmann::json to_json(const CheckReport& r);
nlohmann::json to_json(const RateReport& r);
nlohmann::json to_json(const BoundReport& r);
nlohmann::json to_json(const MomentReport& r);

RateReport rate_report_from_json(const nlohmann::json& j);

/// Top-level report document: {tool_version, command, params, reports}.
nlohmann::json make_document(const std::string& command, nlohmann::json params,
                             nlohmann::json reports);

/// RFC-4180 style CSV: header first, CRLF line endings, deterministic order.
void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);

std::string format_double(double v);  // shortest round-trip decimal form

}  // namespace bbops

#endif
