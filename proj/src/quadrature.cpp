#include "stieltjes/quadrature.hpp"

#include "stieltjes/errors.hpp"
#include "stieltjes/gauss_legendre.hpp"
#include "stieltjes/phase.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace stieltjes {

namespace {

constexpr long double kTwoPi = 2.0L * std::numbers::pi_v<long double>;
constexpr double kNodesPerPeriod = 10.0;
constexpr long kMinPanels = 8;
constexpr double kRoundoffFactor = 32.0 * std::numeric_limits<double>::epsilon();

struct TermIntegral {
    double value = 0.0;
    double error = 0.0;
    long nodes = 0;
};

// Panels needed to put kNodesPerPeriod nodes on every period of `harmonic`
// over [-T, T].
long double min_panels(long double harmonic, double T, long double log_q) {
    const long double periods = 2.0L * T * harmonic / std::fabs(log_q);
    const long double panels = std::ceil(kNodesPerPeriod * periods / panel_rule().order());
    return std::max<long double>(kMinPanels, panels);
}

// Nodes spent by the first refinement check (levels P and 2P).
long double first_check_nodes(long double panels) { return 3.0L * panels * panel_rule().order(); }

// (k/sqrt(pi)) int_{-T}^{T} exp(-k^2 s^2) h(s) ds by panel doubling.
template <typename H>
TermIntegral integrate_term(double k, double T, long panels, const H& h, double target, long budget) {
    const GaussRule& rule = panel_rule();
    const long double norm = k / std::sqrt(std::numbers::pi_v<long double>);
    const double kk = k * k;
    const int p = rule.order();

    auto level = [&](long count, long double& l1) {
        const long double width = 2.0L * T / count;
        const long double half = 0.5L * width;
        long double sum = 0.0L;
        l1 = 0.0L;
        for (long i = 0; i < count; ++i) {
            const long double centre = -T + (i + 0.5L) * width;
            for (int j = 0; j < p; ++j) {
                const long double s = centre + half * rule.nodes[j];
                const double gauss = std::exp(-kk * static_cast<double>(s * s));
                const long double v = rule.weights[j] * gauss * static_cast<long double>(h(s));
                sum += v;
                l1 += std::fabs(v);
            }
        }
        l1 *= half * norm;
        return sum * half * norm;
    };

    TermIntegral out;
    long double l1 = 0.0L;
    long double prev = level(panels, l1);
    out.nodes = panels * p;
    for (;;) {
        panels *= 2;
        if (out.nodes + panels * p > budget) {
            std::ostringstream msg;
            msg << "quadrature did not converge within the node budget of " << budget
                << " (next level needs " << out.nodes + panels * p << ")";
            throw BudgetExceeded(msg.str(), out.nodes + panels * p, budget);
        }
        const long double cur = level(panels, l1);
        out.nodes += panels * p;
        const double diff = static_cast<double>(std::fabs(cur - prev));
        if (diff <= target) {
            out.value = static_cast<double>(cur);
            out.error = diff + kRoundoffFactor * static_cast<double>(l1);
            return out;
        }
        prev = cur;
    }
}

// trig(2 pi H u) with u = (mu + s) / ln q and H = base^power, phase reduced exactly.
struct OscillatoryFactor {
    long double mu;
    long double log_q;
    const ModulatorTerm& term;

    double operator()(long double s) const {
        Phase phase((mu + s) / log_q);
        if (term.exact_harmonic) {
            phase = phase.scaled(*term.exact_harmonic);
        } else {
            for (int i = 0; i < term.power; ++i) phase = phase.scaled(term.base);
        }
        const auto angle = static_cast<double>(kTwoPi * phase.turns());
        return term.kind == TrigKind::sine ? std::sin(angle) : std::cos(angle);
    }
};

double closed_form_factor(const ModulatorTerm& term, long double log_q) {
    if (term.kind == TrigKind::sine) return 0.0;
    const long double pi = std::numbers::pi_v<long double>;
    // exp(-4 pi^2 b^2 k^2) written in q: 1 / (2 k^2) = -ln q
    const long double b = term.harmonic;
    return static_cast<double>(std::exp(2.0L * pi * pi * b * b / log_q));
}

ModulatorTerm single_term(std::uint32_t harmonic, TrigKind kind) {
    ModulatorTerm t;
    t.amplitude = 1.0;
    t.kind = kind;
    t.harmonic = harmonic;
    t.exact_harmonic = harmonic;
    t.power = 1;
    t.base = harmonic;
    return t;
}

TermIntegral integrate_oscillatory(const LogNormalWeight& w, long double mu, double T,
                                   const ModulatorTerm& term, const QuadratureSpec& spec) {
    const long double panels = min_panels(term.harmonic, T, w.log_q());
    if (first_check_nodes(panels) > spec.node_budget) {
        std::ostringstream msg;
        msg << "harmonic " << static_cast<double>(term.harmonic) << " needs "
            << static_cast<double>(first_check_nodes(panels)) << " nodes; budget is "
            << spec.node_budget;
        const long required = first_check_nodes(panels) > std::numeric_limits<long>::max()
                                  ? std::numeric_limits<long>::max()
                                  : static_cast<long>(first_check_nodes(panels));
        throw BudgetExceeded(msg.str(), required, spec.node_budget);
    }
    return integrate_term(w.k(), T, static_cast<long>(panels), OscillatoryFactor{mu, w.log_q(), term},
                          0.1 * spec.rel_tol, spec.node_budget);
}

TermIntegral integrate_gaussian(const LogNormalWeight& w, double T, const QuadratureSpec& spec) {
    return integrate_term(w.k(), T, kMinPanels, [](long double) { return 1.0; }, 0.1 * spec.rel_tol,
                          spec.node_budget);
}

}  // namespace

void QuadratureSpec::validate() const {
    if (!(rel_tol > 0.0) || !std::isfinite(rel_tol)) {
        throw InvalidArgument("QuadratureSpec: tolerance must be a finite positive real");
    }
    if (node_budget < 64) throw InvalidArgument("QuadratureSpec: node budget must be >= 64");
    if (half_width && !(*half_width > 0.0 && std::isfinite(*half_width))) {
        throw InvalidArgument("QuadratureSpec: explicit half-width must be a finite positive real");
    }
}

double QuadratureResult::error_estimate() const { return error.total() * std::exp(log_scale); }

double QuadratureResult::series_tail_budget() const { return error.series_tail * std::exp(log_scale); }

double log_base_moment(const LogNormalWeight& w, int n) {
    const double m = n + 1.0;
    return m * m / (4.0 * w.k() * w.k());
}

LogReal base_moment_closed_form(const LogNormalWeight& w, int n) {
    return LogReal::from_log(log_base_moment(w, n));
}

double modulator_moment_factor(const LogNormalWeight& w, const Modulator& m) {
    if (m.lambda() == 0.0) return 1.0;
    long double sum = 0.0L;
    for (const auto& term : m.terms()) {
        if (term.kind == TrigKind::cosine) sum += term.amplitude * closed_form_factor(term, w.log_q());
    }
    return static_cast<double>(1.0L + m.lambda() * sum);
}

double truncation_half_width(const LogNormalWeight& w, const QuadratureSpec& spec) {
    if (spec.half_width) return *spec.half_width;
    // smallest z with erfc(z) <= tol / 10, by bisection
    const double goal = spec.rel_tol / 10.0;
    double lo = 0.0;
    double hi = 40.0;
    for (int i = 0; i < 200 && hi - lo > 1e-12; ++i) {
        const double mid = 0.5 * (lo + hi);
        (std::erfc(mid) <= goal ? hi : lo) = mid;
    }
    return std::max(hi, 1.0) / w.k();
}

QuadratureResult integrate_moment(const PerturbedDensity& d, int n, const QuadratureSpec& spec) {
    spec.validate();
    const LogNormalWeight& w = d.weight();
    const Modulator& m = d.modulator();
    const double T = truncation_half_width(w, spec);
    const long double mu = (n + 1.0L) / (2.0L * w.k() * w.k());

    const TermIntegral base = integrate_gaussian(w, T, spec);
    long double normalized = base.value;
    double quad_error = base.error;

    QuadratureResult out;
    out.nodes_used = base.nodes;
    out.truncation_T = T;

    const double lambda = m.lambda();
    if (lambda != 0.0) {
        long double perturbation = 0.0L;
        for (const auto& term : m.terms()) {
            if (term.amplitude == 0.0) continue;
            const long double panels = min_panels(term.harmonic, T, w.log_q());
            if (m.is_weierstrass() && first_check_nodes(panels) > spec.node_budget) {
                perturbation += term.amplitude * closed_form_factor(term, w.log_q());
                ++out.analytic_terms;
                continue;
            }
            const TermIntegral ti = integrate_oscillatory(w, mu, T, term, spec);
            perturbation += term.amplitude * ti.value;
            quad_error += std::abs(lambda * term.amplitude) * ti.error;
            out.nodes_used += ti.nodes;
        }
        normalized += lambda * perturbation;
    }

    out.log_scale = log_base_moment(w, n);
    out.normalized = static_cast<double>(normalized);
    out.value = LogReal::from_double(out.normalized) * LogReal::from_log(out.log_scale);
    out.error.quadrature = quad_error;
    out.error.gaussian_tail = std::erfc(w.k() * T) * (1.0 + std::abs(lambda) * m.sup_bound());
    out.error.series_tail = std::abs(lambda) * m.series_tail();
    return out;
}

QuadratureResult vanishing_integral(const LogNormalWeight& w, int n, int j, const QuadratureSpec& spec) {
    spec.validate();
    if (j < 1) throw InvalidArgument("vanishing_integral: harmonic j must be >= 1");
    const double T = truncation_half_width(w, spec);
    const long double mu = (n + 1.0L) / (2.0L * w.k() * w.k());
    const ModulatorTerm term = single_term(static_cast<std::uint32_t>(j), TrigKind::sine);
    const TermIntegral ti = integrate_oscillatory(w, mu, T, term, spec);

    QuadratureResult out;
    // the integrand lacks the k/sqrt(pi) normalisation of the weight
    out.log_scale = log_base_moment(w, n) + std::log(std::sqrt(std::numbers::pi) / w.k());
    out.normalized = ti.value;
    out.value = LogReal::from_double(ti.value) * LogReal::from_log(out.log_scale);
    out.error.quadrature = ti.error;
    out.error.gaussian_tail = std::erfc(w.k() * T);
    out.nodes_used = ti.nodes;
    out.truncation_T = T;
    return out;
}

}  // namespace stieltjes
