#pragma once

#include "stieltjes/verify/sweeps.hpp"

#include <json.hpp>

#include <ostream>
#include <string>
#include <vector>

namespace stieltjes::cli {

inline constexpr int kSchemaVersion = 1;

struct Report {
    nlohmann::json header;  // schema_version, version, timestamp, config, notes
    std::vector<verify::CaseResult> cases;

    bool all_pass() const;
    // Non-finite numbers become null.
    nlohmann::json to_json() const;
    // Flat projection of cases; one header row.
    void write_csv(std::ostream& os) const;
    void write_json(std::ostream& os) const;
};

nlohmann::json case_to_json(const verify::CaseResult& c);

// ISO-8601 UTC, second resolution.
std::string utc_timestamp();

}  // namespace stieltjes::cli
