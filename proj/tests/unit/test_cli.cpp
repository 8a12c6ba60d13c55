#include "stieltjes/cli/run.hpp"

#include <doctest.h>

#include <fstream>
#include <sstream>

using namespace stieltjes::cli;
using nlohmann::json;
namespace verify = stieltjes::verify;

namespace {

struct Outcome {
    int status;
    std::string out;
    std::string err;
};

Outcome invoke(const RunConfig& c) {
    std::ostringstream out, err;
    const int status = run(c, out, err);
    return {status, out.str(), err.str()};
}

std::string without_timestamp(const std::string& report) {
    json doc = json::parse(report);
    doc["header"].erase("timestamp");
    return doc.dump();
}

RunConfig small_vanish() {
    RunConfig c;
    c.command = Command::vanish;
    c.ks = {1.0};
    c.n = verify::IntRange{0, 3};
    c.j = verify::IntRange{1, 2};
    return c;
}

}  // namespace

TEST_CASE("ranges and commands") {
    CHECK(parse_range("0..10", "--n").hi == 10);
    CHECK(parse_range("-2..3", "--n").lo == -2);
    CHECK(parse_range("4", "--n").lo == 4);
    CHECK_THROWS_AS(parse_range("5..2", "--n"), ConfigError);
    CHECK_THROWS_AS(parse_range("a..b", "--j"), ConfigError);
    CHECK_THROWS_AS(parse_range("1...3", "--j"), ConfigError);
    CHECK(parse_command("hankel") == Command::hankel);
    CHECK_THROWS_AS(parse_command("integrate"), ConfigError);
}

TEST_CASE("report schema and exit status") {
    const Outcome o = invoke(small_vanish());
    CHECK(o.status == 0);
    const json doc = json::parse(o.out);
    CHECK(doc["header"]["schema_version"] == 1);
    CHECK(doc["header"]["config"]["command"] == "vanish");
    CHECK(doc["header"]["notes"][0] == verify::kMomentSignNote);
    CHECK(doc["cases"].size() == 8);
    for (const auto& row : doc["cases"]) {
        for (const char* key : {"id", "inputs", "value", "reference", "tolerance", "error_estimate", "pass"}) {
            CHECK(row.contains(key));
        }
    }

    RunConfig strict = small_vanish();
    strict.tolerance = 1e-300;
    CHECK(invoke(strict).status == 1);
}

TEST_CASE("identical configs give identical reports") {
    const Outcome a = invoke(small_vanish());
    const Outcome b = invoke(small_vanish());
    CHECK(without_timestamp(a.out) == without_timestamp(b.out));
}

TEST_CASE("config errors exit with status 2 and name the field") {
    RunConfig c;
    c.command = Command::moments;
    c.modulator_path = "stieltjes_cli_bad.json";
    std::ofstream(*c.modulator_path) << R"({"k": 1, "modes": [{"a": 1, "b": 1}, {"a": 1, "b": "two"}]})";
    Outcome o = invoke(c);
    CHECK(o.status == 2);
    CHECK(o.err.find("modes[1].b") != std::string::npos);
    CHECK(o.out.empty());

    std::ofstream(*c.modulator_path) << R"({"k": 1, "modes": [)";
    o = invoke(c);
    CHECK(o.status == 2);
    CHECK(o.err.find("malformed JSON") != std::string::npos);
    std::remove(c.modulator_path->c_str());

    RunConfig bad = small_vanish();
    bad.tolerance = -1.0;
    o = invoke(bad);
    CHECK(o.status == 2);
    CHECK(o.err.find("--tol") != std::string::npos);

    bad = small_vanish();
    bad.ks = {0.0};
    CHECK(invoke(bad).status == 2);

    bad = small_vanish();
    bad.degrees = verify::IntRange{1, 2};
    CHECK(invoke(bad).status == 2);
}

TEST_CASE("CSV projection and non-finite values") {
    RunConfig c;
    c.command = Command::moments;
    c.ks = {0.25};
    c.n = verify::IntRange{40, 40};
    c.format = Format::csv;
    const Outcome csv = invoke(c);
    CHECK(csv.status == 0);
    CHECK(csv.out.rfind("id,inputs,value,reference,tolerance,error_estimate,pass,reason\n", 0) == 0);

    c.format = Format::json;
    const json doc = json::parse(invoke(c).out);
    CHECK(doc["cases"][0]["value"].is_null());
    CHECK(doc["cases"][0]["pass"] == true);
}

TEST_CASE("ratio over a Weierstrass modulator") {
    RunConfig c;
    c.command = Command::ratio;
    c.modulator_path = "stieltjes_cli_w.json";
    std::ofstream(*c.modulator_path) << R"({"k": 0.5, "lambda": 0.5, "weierstrass": {"a": 0.5, "b": 3, "N": 12, "kind": "cosine"}})";
    c.n = verify::IntRange{0, 10};
    const Outcome o = invoke(c);
    std::remove(c.modulator_path->c_str());
    CHECK(o.status == 0);
    const json doc = json::parse(o.out);
    CHECK(doc["cases"].back()["id"].get<std::string>().find("spread") != std::string::npos);
    CHECK(doc["cases"].back()["value"].get<double>() < 1e-8);
}
