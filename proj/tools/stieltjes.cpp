// Command-line front end: one subcommand per verification sweep.
//
//   stieltjes vanish --k 1 --n 0..10 --j 1..5
//   stieltjes ratio --modulator weierstrass.json --n 0..10 --format csv
//   stieltjes all --output report.json
//
// Exit status: 0 all cases pass, 1 some case failed, 2 configuration error.

#include "stieltjes/cli/run.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

struct Flags {
    std::vector<double> ks;
    std::string n, j, degrees, modulator, output;
    double tol = 0.0;
    int points = 100;
    std::uint64_t seed = stieltjes::verify::kDefaultSeed;
    std::string format = "json";
};

void add_common(CLI::App& sub, Flags& f) {
    sub.add_option("--format", f.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
    sub.add_option("--output,-o", f.output, "Report path (default: stdout)");
}

}  // namespace

int main(int argc, char** argv) {
    using namespace stieltjes::cli;

    CLI::App app{"Verification harness for the log-normal indeterminate moment problem"};
    app.set_version_flag("--version", kToolVersion);
    app.require_subcommand(1);
    Flags f;

    const auto sub = [&](const char* name, const char* help) {
        CLI::App* s = app.add_subcommand(name, help);
        add_common(*s, f);
        return s;
    };
    const auto k_opt = [&](CLI::App* s) {
        s->add_option("--k", f.ks, "Weight shapes, comma separated")->delimiter(',');
    };
    const auto tol_opt = [&](CLI::App* s) { s->add_option("--tol", f.tol, "Tolerance override"); };
    const auto mod_opt = [&](CLI::App* s) {
        s->add_option("--modulator", f.modulator, "Density JSON file")->check(CLI::ExistingFile);
    };
    const auto sample_opts = [&](CLI::App* s) {
        s->add_option("--points", f.points, "Random sample points per weight");
        s->add_option("--seed", f.seed, "Sampling seed");
    };

    CLI::App* vanish = sub("vanish", "Vanishing of the sine-weighted moments");
    k_opt(vanish);
    vanish->add_option("--n", f.n, "Moment orders lo..hi");
    vanish->add_option("--j", f.j, "Harmonics lo..hi");
    tol_opt(vanish);

    for (auto [name, help] : {std::pair{"moments", "Moments of a perturbed density against C * M_n"},
                              std::pair{"ratio", "Constancy of moment_n / M_n over n"}}) {
        CLI::App* s = sub(name, help);
        k_opt(s);
        mod_opt(s);
        s->add_option("--n", f.n, "Moment orders lo..hi");
        tol_opt(s);
    }

    CLI::App* pearson = sub("pearson", "q-Pearson functional equation of the weight");
    k_opt(pearson);
    sample_opts(pearson);
    tol_opt(pearson);

    CLI::App* qderiv = sub("qderiv", "q-derivative of the modulator");
    k_opt(qderiv);
    mod_opt(qderiv);
    sample_opts(qderiv);
    tol_opt(qderiv);

    for (auto [name, help] : {std::pair{"hankel", "Hankel positivity of quadrature moments"},
                              std::pair{"gram", "Orthogonality of the base polynomials under the perturbed density"}}) {
        CLI::App* s = sub(name, help);
        k_opt(s);
        mod_opt(s);
        s->add_option("--degrees", f.degrees, "Polynomial degrees lo..hi");
        tol_opt(s);
    }

    CLI::App* holder = sub("holder", "Hoelder exponent of a Weierstrass modulator");
    k_opt(holder);
    mod_opt(holder);
    tol_opt(holder);

    sub("all", "Full acceptance suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    RunConfig config;
    try {
        CLI::App* chosen = app.get_subcommands().front();
        config.command = parse_command(chosen->get_name());
        config.ks = f.ks;
        const auto given = [chosen](const char* opt) {
            try {
                return chosen->get_option(opt)->count() > 0;
            } catch (const CLI::OptionNotFound&) {
                return false;
            }
        };
        if (given("--n")) config.n = parse_range(f.n, "--n");
        if (given("--j")) config.j = parse_range(f.j, "--j");
        if (given("--degrees")) config.degrees = parse_range(f.degrees, "--degrees");
        if (given("--modulator")) config.modulator_path = f.modulator;
        if (given("--tol")) config.tolerance = f.tol;
        if (given("--output")) config.output = f.output;
        config.points = f.points;
        config.seed = f.seed;
        config.format = f.format == "csv" ? Format::csv : Format::json;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    }
    return run(config, std::cout, std::cerr);
}
