#include "stieltjes/cli/report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>

namespace stieltjes::cli {

using nlohmann::json;

namespace {

json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

std::string csv_number(double v) {
    if (!std::isfinite(v)) return "";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

}  // namespace

bool Report::all_pass() const {
    return std::all_of(cases.begin(), cases.end(), [](const verify::CaseResult& c) { return c.pass; });
}

json case_to_json(const verify::CaseResult& c) {
    return {
        {"id", c.id},
        {"inputs", c.inputs},
        {"value", number(c.value)},
        {"reference", number(c.reference)},
        {"tolerance", number(c.tolerance)},
        {"error_estimate", number(c.error_estimate)},
        {"pass", c.pass},
        {"reason", c.reason},
    };
}

json Report::to_json() const {
    json rows = json::array();
    for (const auto& c : cases) rows.push_back(case_to_json(c));
    const auto failed = std::count_if(cases.begin(), cases.end(), [](const verify::CaseResult& c) { return !c.pass; });
    return {
        {"header", header},
        {"summary", {{"cases", cases.size()}, {"failed", failed}, {"pass", failed == 0}}},
        {"cases", rows},
    };
}

void Report::write_json(std::ostream& os) const { os << to_json().dump(2) << '\n'; }

void Report::write_csv(std::ostream& os) const {
    os << "id,inputs,value,reference,tolerance,error_estimate,pass,reason\n";
    for (const auto& c : cases) {
        os << csv_quote(c.id) << ',' << csv_quote(c.inputs.dump()) << ',' << csv_number(c.value) << ','
           << csv_number(c.reference) << ',' << csv_number(c.tolerance) << ',' << csv_number(c.error_estimate) << ','
           << (c.pass ? "true" : "false") << ',' << csv_quote(c.reason) << '\n';
    }
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace stieltjes::cli
