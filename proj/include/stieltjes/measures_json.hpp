#pragma once

// JSON schema for a perturbed density (weight + modulator):
//
//   {
//     "k": 1.0,                       // weight shape, > 0
//     "lambda": 0.5,                  // perturbation amplitude (default 0)
//     "positive": true,               // optional; enforce |lambda| * S <= 1
//     "modes": [ {"a": 1.0, "b": 1, "kind": "sine"}, ... ]
//   }
// or, instead of "modes",
//     "weierstrass": {"a": 0.5, "b": 3, "N": 30, "kind": "sine"}
//
// "kind" defaults to "sine"; "N" defaults to 30. Exactly one of "modes" and
// "weierstrass" may appear; neither means the unperturbed weight.

#include "stieltjes/measures.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace stieltjes {

// Schema violation. what() names the offending field path, e.g. "modes[1].b".
class SchemaError : public std::invalid_argument {
public:
    SchemaError(std::string field, const std::string& message)
        : std::invalid_argument(field + ": " + message), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

PerturbedDensity density_from_json(const nlohmann::json& doc);
nlohmann::json density_to_json(const PerturbedDensity& density);

// Reads and parses a file; parse failures are reported as SchemaError("<file>", ...).
PerturbedDensity load_density(const std::string& path);

}  // namespace stieltjes
