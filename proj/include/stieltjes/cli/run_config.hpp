#pragma once

#include "stieltjes/measures.hpp"
#include "stieltjes/verify/sweeps.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace stieltjes::cli {

enum class Command { vanish, moments, ratio, pearson, qderiv, hankel, gram, holder, all };
enum class Format { json, csv };

std::string to_string(Command c);
// Throws ConfigError("command", ...) for unknown names.
Command parse_command(const std::string& name);

// Invalid run configuration; field() names the offending flag or schema path.
class ConfigError : public std::invalid_argument {
public:
    ConfigError(std::string field, const std::string& message)
        : std::invalid_argument(field + ": " + message), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

// "lo..hi" or a single integer. Throws ConfigError(field, ...) otherwise.
verify::IntRange parse_range(const std::string& text, const std::string& field);

struct RunConfig {
    Command command = Command::all;
    std::vector<double> ks;                    // empty: command default
    std::optional<verify::IntRange> n;         // moment orders
    std::optional<verify::IntRange> j;         // harmonics for vanish
    std::optional<verify::IntRange> degrees;   // hankel / gram
    std::optional<std::string> modulator_path;
    std::optional<double> tolerance;
    int points = 100;                          // pearson / qderiv sample count
    std::uint64_t seed = verify::kDefaultSeed;
    Format format = Format::json;
    std::optional<std::string> output;         // stdout when absent

    // Checks ranges, tolerances and command/flag compatibility; throws ConfigError.
    void validate() const;
    // Echo for the report header; paths and defaults resolved.
    nlohmann::json to_json() const;
};

// Defaults applied when a field is absent.
std::vector<double> effective_ks(const RunConfig& c);
verify::IntRange effective_n(const RunConfig& c);
verify::IntRange effective_j(const RunConfig& c);
verify::IntRange effective_degrees(const RunConfig& c);
double effective_tolerance(const RunConfig& c);

// Densities for the sweep: the modulator file (if any) rebuilt at every k.
// Schema errors surface as ConfigError naming the field path.
std::vector<PerturbedDensity> densities_for(const RunConfig& c);

}  // namespace stieltjes::cli
