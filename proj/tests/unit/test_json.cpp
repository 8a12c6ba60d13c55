#include "stieltjes/measures_json.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>

using namespace stieltjes;
using nlohmann::json;

namespace {

std::string schema_field(const json& doc) {
    try {
        density_from_json(doc);
    } catch (const SchemaError& e) {
        return e.field();
    }
    return "<accepted>";
}

}  // namespace

TEST_CASE("valid documents") {
    const PerturbedDensity d = density_from_json(json::parse(R"({
        "k": 0.5, "lambda": 0.25, "positive": true,
        "modes": [{"a": 1.0, "b": 2, "kind": "cosine"}, {"a": -0.5, "b": 1}]
    })"));
    CHECK(d.weight().k() == 0.5);
    CHECK(d.modulator().lambda() == 0.25);
    REQUIRE(d.modulator().modes() != nullptr);
    CHECK(d.modulator().modes()->size() == 2);
    CHECK(d.modulator().modes()->at(1).kind == TrigKind::sine);

    const PerturbedDensity w = density_from_json(json::parse(R"({"k": 1, "weierstrass": {"a": 0.7, "b": 2}})"));
    REQUIRE(w.modulator().weierstrass() != nullptr);
    CHECK(w.modulator().weierstrass()->terms == WeierstrassSpec::kDefaultTerms);

    CHECK(density_from_json(json::parse(R"({"k": 2})")).modulator().is_zero());
}

TEST_CASE("round trip") {
    const json doc = json::parse(R"({"k": 1.5, "lambda": -0.3, "positive": false,
                                     "weierstrass": {"a": 0.5, "b": 3, "N": 12, "kind": "cosine"}})");
    const json again = density_to_json(density_from_json(doc));
    CHECK(density_to_json(density_from_json(again)) == again);
    CHECK(again["weierstrass"]["N"] == 12);
    CHECK(again["weierstrass"]["kind"] == "cosine");
}

TEST_CASE("schema errors name the offending field") {
    CHECK(schema_field(json::parse(R"({"lambda": 1})")) == "k");
    CHECK(schema_field(json::parse(R"({"k": -1})")) == "k");
    CHECK(schema_field(json::parse(R"({"k": 1, "extra": 3})")) == "extra");
    CHECK(schema_field(json::parse(R"({"k": 1, "modes": [{"a": 1, "b": 1}, {"a": 1, "b": 1.5}]})")) == "modes[1].b");
    CHECK(schema_field(json::parse(R"({"k": 1, "modes": [{"a": 1, "b": 1, "kind": "tan"}]})")) == "modes[0].kind");
    CHECK(schema_field(json::parse(R"({"k": 1, "weierstrass": {"a": 1.5, "b": 3}})")) == "weierstrass.a");
    CHECK(schema_field(json::parse(R"({"k": 1, "modes": [], "weierstrass": {}})")) != "<accepted>");
    CHECK(schema_field(json::parse(R"({"k": 1, "lambda": 2, "positive": true, "modes": [{"a": 1, "b": 1}]})")) != "<accepted>");
}

TEST_CASE("files") {
    const std::string path = "stieltjes_test_density.json";
    {
        std::ofstream(path) << R"({"k": 1, "modes": [ {"a": 1, "b": 1 )";
    }
    CHECK_THROWS_AS(load_density(path), SchemaError);
    {
        std::ofstream(path) << R"({"k": 1, "modes": [{"a": 1, "b": 1}]})";
    }
    CHECK(load_density(path).weight().k() == 1.0);
    std::remove(path.c_str());
    CHECK_THROWS_AS(load_density("does/not/exist.json"), SchemaError);
}
