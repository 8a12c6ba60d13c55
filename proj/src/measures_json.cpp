#include "stieltjes/measures_json.hpp"

#include "stieltjes/errors.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace stieltjes {

using nlohmann::json;

namespace {

double get_real(const json& obj, const std::string& key, const std::string& path) {
    const auto it = obj.find(key);
    if (it == obj.end()) throw SchemaError(path, "missing required field");
    if (!it->is_number()) throw SchemaError(path, "expected a number");
    const double v = it->get<double>();
    if (!std::isfinite(v)) throw SchemaError(path, "must be finite");
    return v;
}

std::int64_t get_integer(const json& obj, const std::string& key, const std::string& path) {
    const double v = get_real(obj, key, path);
    if (v != std::floor(v) || std::abs(v) > 9.0e15) {
        std::ostringstream msg;
        msg << "expected an integer, got " << v;
        throw SchemaError(path, msg.str());
    }
    return static_cast<std::int64_t>(v);
}

TrigKind get_kind(const json& obj, const std::string& path) {
    const auto it = obj.find("kind");
    if (it == obj.end()) return TrigKind::sine;
    if (!it->is_string()) throw SchemaError(path, "expected \"sine\" or \"cosine\"");
    const auto s = it->get<std::string>();
    if (s == "sine" || s == "sin") return TrigKind::sine;
    if (s == "cosine" || s == "cos") return TrigKind::cosine;
    throw SchemaError(path, "expected \"sine\" or \"cosine\", got \"" + s + "\"");
}

void reject_unknown(const json& obj, std::initializer_list<const char*> known, const std::string& prefix) {
    for (const auto& [key, value] : obj.items()) {
        bool ok = false;
        for (const char* k : known) ok = ok || key == k;
        if (!ok) throw SchemaError(prefix + key, "unknown field");
    }
}

std::uint32_t checked_harmonic(std::int64_t b, std::int64_t min, const std::string& path) {
    if (b < min || b > std::numeric_limits<std::uint32_t>::max()) {
        std::ostringstream msg;
        msg << "must be an integer >= " << min << ", got " << b;
        throw SchemaError(path, msg.str());
    }
    return static_cast<std::uint32_t>(b);
}

}  // namespace

PerturbedDensity density_from_json(const json& doc) {
    if (!doc.is_object()) throw SchemaError("<root>", "expected a JSON object");
    reject_unknown(doc, {"k", "lambda", "positive", "modes", "weierstrass"}, "");

    const double k = get_real(doc, "k", "k");
    if (!(k > 0.0)) throw SchemaError("k", "must be > 0");
    const LogNormalWeight weight(k);

    const double lambda = doc.contains("lambda") ? get_real(doc, "lambda", "lambda") : 0.0;
    bool positive = false;
    if (doc.contains("positive")) {
        if (!doc["positive"].is_boolean()) throw SchemaError("positive", "expected a boolean");
        positive = doc["positive"].get<bool>();
    }
    if (doc.contains("modes") && doc.contains("weierstrass")) {
        throw SchemaError("weierstrass", "cannot be combined with \"modes\"");
    }

    Modulator::Content content = std::vector<TrigMode>{};
    if (doc.contains("modes")) {
        const auto& modes = doc["modes"];
        if (!modes.is_array()) throw SchemaError("modes", "expected an array");
        std::vector<TrigMode> list;
        for (std::size_t i = 0; i < modes.size(); ++i) {
            const std::string path = "modes[" + std::to_string(i) + "]";
            const auto& m = modes[i];
            if (!m.is_object()) throw SchemaError(path, "expected an object");
            reject_unknown(m, {"a", "b", "kind"}, path + ".");
            TrigMode mode;
            mode.amplitude = get_real(m, "a", path + ".a");
            mode.harmonic = checked_harmonic(get_integer(m, "b", path + ".b"), 1, path + ".b");
            mode.kind = get_kind(m, path + ".kind");
            list.push_back(mode);
        }
        content = std::move(list);
    } else if (doc.contains("weierstrass")) {
        const auto& w = doc["weierstrass"];
        if (!w.is_object()) throw SchemaError("weierstrass", "expected an object");
        reject_unknown(w, {"a", "b", "N", "kind"}, "weierstrass.");
        WeierstrassSpec spec;
        spec.a = get_real(w, "a", "weierstrass.a");
        if (!(spec.a > 0.0 && spec.a < 1.0)) throw SchemaError("weierstrass.a", "must lie in (0, 1)");
        spec.b = checked_harmonic(get_integer(w, "b", "weierstrass.b"), 2, "weierstrass.b");
        if (w.contains("N")) {
            const auto n = get_integer(w, "N", "weierstrass.N");
            if (n < 1 || n > 4096) throw SchemaError("weierstrass.N", "must be an integer in [1, 4096]");
            spec.terms = static_cast<int>(n);
        }
        spec.kind = get_kind(w, "weierstrass.kind");
        content = spec;
    }

    try {
        return PerturbedDensity(weight, Modulator(weight, lambda, std::move(content), positive));
    } catch (const InvalidArgument& e) {
        throw SchemaError(positive ? "positive" : "lambda", e.what());
    }
}

json density_to_json(const PerturbedDensity& density) {
    const auto& m = density.modulator();
    json doc = {{"k", density.weight().k()}, {"lambda", m.lambda()}};
    if (m.positive()) doc["positive"] = true;
    if (const auto* w = m.weierstrass()) {
        doc["weierstrass"] = {{"a", w->a}, {"b", w->b}, {"N", w->terms}, {"kind", to_string(w->kind)}};
    } else {
        json modes = json::array();
        for (const auto& mode : *m.modes()) {
            modes.push_back({{"a", mode.amplitude}, {"b", mode.harmonic}, {"kind", to_string(mode.kind)}});
        }
        doc["modes"] = std::move(modes);
    }
    return doc;
}

PerturbedDensity load_density(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError(path, "cannot open file");
    json doc;
    try {
        in >> doc;
    } catch (const json::parse_error& e) {
        throw SchemaError(path, std::string("malformed JSON: ") + e.what());
    }
    return density_from_json(doc);
}

}  // namespace stieltjes
