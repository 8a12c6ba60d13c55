#include "stieltjes/cli/run_config.hpp"

#include "stieltjes/errors.hpp"
#include "stieltjes/measures_json.hpp"
#include "stieltjes/moments.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <utility>

namespace stieltjes::cli {

using nlohmann::json;

namespace {

constexpr std::array<std::pair<Command, const char*>, 9> kCommands = {{
    {Command::vanish, "vanish"},
    {Command::moments, "moments"},
    {Command::ratio, "ratio"},
    {Command::pearson, "pearson"},
    {Command::qderiv, "qderiv"},
    {Command::hankel, "hankel"},
    {Command::gram, "gram"},
    {Command::holder, "holder"},
    {Command::all, "all"},
}};

bool parse_int(std::string_view s, int& out) {
    if (s.empty()) return false;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size();
}

bool uses_density(Command c) {
    return c == Command::moments || c == Command::ratio || c == Command::qderiv || c == Command::hankel ||
           c == Command::gram || c == Command::holder;
}

json range_json(const verify::IntRange& r) { return {{"lo", r.lo}, {"hi", r.hi}}; }

}  // namespace

std::string to_string(Command c) {
    for (const auto& [cmd, name] : kCommands) {
        if (cmd == c) return name;
    }
    return "unknown";
}

Command parse_command(const std::string& name) {
    for (const auto& [cmd, text] : kCommands) {
        if (name == text) return cmd;
    }
    throw ConfigError("command", "unknown command '" + name + "'");
}

verify::IntRange parse_range(const std::string& text, const std::string& field) {
    verify::IntRange r;
    const auto dots = text.find("..");
    const bool ok = dots == std::string::npos
                        ? parse_int(text, r.lo) && (r.hi = r.lo, true)
                        : parse_int(std::string_view(text).substr(0, dots), r.lo) &&
                              parse_int(std::string_view(text).substr(dots + 2), r.hi);
    if (!ok) throw ConfigError(field, "expected an integer or a range lo..hi, got '" + text + "'");
    if (r.lo > r.hi) throw ConfigError(field, "range " + text + " is empty");
    return r;
}

void RunConfig::validate() const {
    if (command == Command::all) {
        if (!ks.empty()) throw ConfigError("--k", "not accepted by 'all'; the acceptance grid is fixed");
        if (n || j || degrees) throw ConfigError(n ? "--n" : j ? "--j" : "--degrees", "not accepted by 'all'");
        if (modulator_path) throw ConfigError("--modulator", "not accepted by 'all'");
        if (tolerance) throw ConfigError("--tol", "not accepted by 'all'; criteria tolerances are fixed");
    }
    for (double k : ks) {
        if (!(k > 0.0) || !std::isfinite(k)) throw ConfigError("--k", "values must be finite and positive");
    }
    if (n && (n->lo < -1000 || n->hi > 1000)) throw ConfigError("--n", "orders must lie in -1000..1000");
    if (j) {
        if (command != Command::vanish) throw ConfigError("--j", "only used by 'vanish'");
        if (j->lo < 1) throw ConfigError("--j", "harmonics must be >= 1");
    }
    if (degrees) {
        if (command != Command::hankel && command != Command::gram) {
            throw ConfigError("--degrees", "only used by 'hankel' and 'gram'");
        }
        if (degrees->lo < 0 || degrees->hi > kMaxDegree) {
            throw ConfigError("--degrees", "degrees must lie in 0.." + std::to_string(kMaxDegree));
        }
    }
    if (tolerance && (!(*tolerance > 0.0) || !std::isfinite(*tolerance))) {
        throw ConfigError("--tol", "tolerance must be finite and positive");
    }
    if (points < 1) throw ConfigError("--points", "must be >= 1");
    if (modulator_path && !uses_density(command)) {
        throw ConfigError("--modulator", "not used by '" + to_string(command) + "'");
    }
}

json RunConfig::to_json() const {
    json out = {
        {"command", to_string(command)},
        {"format", format == Format::json ? "json" : "csv"},
    };
    if (command == Command::all) return out;
    out["tolerance"] = effective_tolerance(*this);
    switch (command) {
        case Command::vanish:
            out["k"] = effective_ks(*this);
            out["n"] = range_json(effective_n(*this));
            out["j"] = range_json(effective_j(*this));
            break;
        case Command::pearson:
            out["k"] = effective_ks(*this);
            out["points"] = points;
            out["seed"] = seed;
            break;
        default:
            if (!ks.empty()) out["k"] = ks;
            out["modulator"] = modulator_path ? json(*modulator_path) : json(nullptr);
            if (command == Command::moments || command == Command::ratio) out["n"] = range_json(effective_n(*this));
            if (command == Command::hankel || command == Command::gram) {
                out["degrees"] = range_json(effective_degrees(*this));
            }
            if (command == Command::qderiv) {
                out["points"] = points;
                out["seed"] = seed;
            }
            break;
    }
    return out;
}

std::vector<double> effective_ks(const RunConfig& c) {
    if (!c.ks.empty()) return c.ks;
    return {0.5, 1.0, 2.0};
}

verify::IntRange effective_n(const RunConfig& c) { return c.n.value_or(verify::IntRange{0, 10}); }

verify::IntRange effective_j(const RunConfig& c) { return c.j.value_or(verify::IntRange{1, 5}); }

verify::IntRange effective_degrees(const RunConfig& c) {
    if (c.degrees) return *c.degrees;
    return c.command == Command::hankel ? verify::IntRange{0, 5} : verify::IntRange{1, kMaxDegree};
}

double effective_tolerance(const RunConfig& c) {
    if (c.tolerance) return *c.tolerance;
    switch (c.command) {
        case Command::vanish:
        case Command::moments:
            return 1e-10;
        case Command::ratio:
        case Command::hankel:
            return 1e-8;
        case Command::pearson:
            return 1e-13;
        case Command::qderiv:
            return 1e-12;
        case Command::gram:
            return 1e-6;
        case Command::holder:
            return 0.05;
        case Command::all:
            break;
    }
    return 0.0;
}

std::vector<PerturbedDensity> densities_for(const RunConfig& c) {
    std::optional<PerturbedDensity> file;
    if (c.modulator_path) {
        try {
            file = load_density(*c.modulator_path);
        } catch (const SchemaError& e) {
            // what() is "<field>: <message>"
            const std::string message = std::string(e.what()).substr(e.field().size() + 2);
            throw ConfigError("--modulator " + e.field(), message);
        }
    }

    std::vector<double> ks = c.ks;
    if (ks.empty()) ks = {file ? file->weight().k() : 1.0};

    std::vector<PerturbedDensity> out;
    for (double k : ks) {
        const LogNormalWeight w(k);
        if (file) {
            const Modulator& m = file->modulator();
            try {
                out.emplace_back(w, Modulator(w, m.lambda(), m.content(), m.positive()));
            } catch (const std::invalid_argument& e) {
                throw ConfigError("--modulator", e.what());
            }
        } else if (c.command == Command::qderiv) {
            out.emplace_back(w, Modulator(w, 1.0, std::vector<TrigMode>{{1.0, 1, TrigKind::sine}}));
        } else if (c.command == Command::holder) {
            out.emplace_back(w, Modulator(w, 1.0, WeierstrassSpec{}));
        } else {
            out.push_back(PerturbedDensity::base(w));
        }
    }
    return out;
}

}  // namespace stieltjes::cli
