#include "stieltjes/cli/run.hpp"

#include "stieltjes/errors.hpp"
#include "stieltjes/verify/acceptance.hpp"

#include <fstream>

namespace stieltjes::cli {

using nlohmann::json;
using verify::CaseResult;

namespace {

void append(std::vector<CaseResult>& dst, std::vector<CaseResult> src) {
    dst.insert(dst.end(), std::make_move_iterator(src.begin()), std::make_move_iterator(src.end()));
}

std::vector<CaseResult> run_all(json& criteria) {
    std::vector<CaseResult> out;
    criteria = json::array();
    for (int i = 1; i <= verify::kCriterionCount; ++i) {
        verify::CriterionResult r = verify::run_criterion(i);
        criteria.push_back({{"number", r.number},
                            {"title", r.title},
                            {"cases", r.cases.size()},
                            {"failed", r.failures()},
                            {"pass", r.pass()}});
        for (CaseResult& c : r.cases) c.id = "c" + std::to_string(i) + "/" + c.id;
        append(out, std::move(r.cases));
    }
    return out;
}

std::vector<CaseResult> run_holder(const std::vector<PerturbedDensity>& ds, double tol) {
    std::vector<CaseResult> out;
    for (const auto& d : ds) {
        const WeierstrassSpec* spec = d.modulator().weierstrass();
        if (!spec) throw ConfigError("--modulator", "holder needs a \"weierstrass\" modulator");
        append(out, verify::holder_sweep(d.weight(), *spec, tol, 0.98));
    }
    append(out, verify::holder_control_sweep(0.02));
    return out;
}

}  // namespace

Report execute(const RunConfig& config) {
    config.validate();
    Report report;
    report.header = {
        {"schema_version", kSchemaVersion},
        {"version", kToolVersion},
        {"timestamp", utc_timestamp()},
        {"config", config.to_json()},
        {"notes", json::array({verify::kMomentSignNote})},
    };

    const double tol = effective_tolerance(config);
    auto& cases = report.cases;
    switch (config.command) {
        case Command::all: {
            json criteria;
            cases = run_all(criteria);
            report.header["criteria"] = criteria;
            break;
        }
        case Command::vanish:
            cases = verify::vanish_sweep(effective_ks(config), effective_n(config), effective_j(config), tol);
            break;
        case Command::pearson:
            cases = verify::pearson_sweep(effective_ks(config), config.points, tol, config.seed);
            break;
        case Command::holder:
            cases = run_holder(densities_for(config), tol);
            break;
        default:
            for (const PerturbedDensity& d : densities_for(config)) {
                switch (config.command) {
                    case Command::moments:
                        append(cases, verify::moment_sweep(d, effective_n(config), tol));
                        break;
                    case Command::ratio:
                        append(cases, verify::ratio_sweep(d, effective_n(config), tol));
                        break;
                    case Command::qderiv: {
                        const std::string label = "k=" + json(d.weight().k()).dump();
                        append(cases, verify::qderiv_sweep(label, d.modulator(), d.weight().q(), config.points, tol,
                                                           config.seed));
                        break;
                    }
                    case Command::hankel:
                        append(cases, verify::hankel_sweep(d, effective_degrees(config), tol));
                        break;
                    case Command::gram:
                        append(cases, verify::gram_sweep(d, effective_degrees(config), tol));
                        break;
                    default:
                        break;
                }
            }
            break;
    }
    return report;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    Report report;
    try {
        report = execute(config);
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
        return 2;
    }

    std::ofstream file;
    if (config.output) {
        file.open(*config.output);
        if (!file) {
            err << "config error: --output: cannot open '" << *config.output << "' for writing\n";
            return 2;
        }
    }
    std::ostream& sink = config.output ? static_cast<std::ostream&>(file) : out;
    if (config.format == Format::csv) {
        report.write_csv(sink);
    } else {
        report.write_json(sink);
    }
    return report.all_pass() ? 0 : 1;
}

}  // namespace stieltjes::cli
