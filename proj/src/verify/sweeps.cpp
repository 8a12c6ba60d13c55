#include "stieltjes/verify/sweeps.hpp"

#include "stieltjes/errors.hpp"
#include "stieltjes/moments.hpp"
#include "stieltjes/qcalc.hpp"
#include "stieltjes/roughness.hpp"
#include "stieltjes/verify/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace stieltjes::verify {

using nlohmann::json;

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

CaseResult failed(std::string id, json inputs, const std::exception& e) {
    CaseResult c;
    c.id = std::move(id);
    c.inputs = std::move(inputs);
    c.value = std::nan("");
    c.pass = false;
    c.reason = e.what();
    return c;
}

json modulator_json(const Modulator& m) {
    json out = {{"lambda", m.lambda()}};
    if (const auto* w = m.weierstrass()) {
        out["weierstrass"] = {{"a", w->a}, {"b", w->b}, {"N", w->terms}, {"kind", to_string(w->kind)}};
    } else {
        json modes = json::array();
        for (const auto& mode : *m.modes()) {
            modes.push_back({{"a", mode.amplitude}, {"b", mode.harmonic}, {"kind", to_string(mode.kind)}});
        }
        out["modes"] = modes;
    }
    return out;
}

std::string density_tag(const PerturbedDensity& d) {
    const Modulator& m = d.modulator();
    std::ostringstream os;
    os << "k=" << d.weight().k() << "/lambda=" << m.lambda();
    if (const auto* w = m.weierstrass()) {
        os << "/W(" << w->a << "," << w->b << "," << w->terms << "," << to_string(w->kind) << ")";
    } else if (!m.modes()->empty()) {
        os << "/modes(";
        bool first = true;
        for (const auto& mode : *m.modes()) {
            os << (first ? "" : ",") << mode.amplitude << (mode.kind == TrigKind::sine ? "s" : "c") << mode.harmonic;
            first = false;
        }
        os << ")";
    }
    return os.str();
}

}  // namespace

std::vector<int> IntRange::values() const {
    std::vector<int> out;
    for (int v = lo; v <= hi; ++v) out.push_back(v);
    return out;
}

Uniform::Uniform(std::uint64_t seed) : engine_(seed) {}

double Uniform::next() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double Uniform::log_uniform(double lo, double hi) {
    return std::exp(std::log(lo) + next() * (std::log(hi) - std::log(lo)));
}

// ---------------------------------------------------------------------------

std::vector<CaseResult> vanish_sweep(const std::vector<double>& ks, IntRange n, IntRange j, double tol,
                                     const QuadratureSpec& spec) {
    std::vector<CaseResult> out;
    for (double k : ks) {
        const LogNormalWeight w(k);
        for (int nn : n.values()) {
            for (int jj : j.values()) {
                const std::string id = "vanish/k=" + fmt(k) + "/n=" + std::to_string(nn) + "/j=" + std::to_string(jj);
                const json inputs = {{"k", k}, {"n", nn}, {"j", jj}};
                try {
                    const QuadratureResult r = vanishing_integral(w, nn, jj, spec);
                    const double m_n = std::exp(log_base_moment(w, nn));
                    CaseResult c;
                    c.id = id;
                    c.inputs = inputs;
                    c.value = r.value_double();
                    c.reference = 0.0;
                    c.tolerance = tol * m_n;
                    c.error_estimate = r.error_estimate();
                    // overflow-safe form of |value| <= tol * M_n
                    const double rel = std::abs(r.value.ratio(base_moment_closed_form(w, nn)));
                    c.pass = rel <= tol;
                    if (!c.pass) c.reason = "|value| / M_n = " + fmt(rel);
                    out.push_back(std::move(c));
                } catch (const std::exception& e) {
                    out.push_back(failed(id, inputs, e));
                }
            }
        }
    }
    return out;
}

std::vector<CaseResult> moment_sweep(const PerturbedDensity& d, IntRange n, double tol, const QuadratureSpec& spec) {
    std::vector<CaseResult> out;
    const double factor = modulator_moment_factor(d.weight(), d.modulator());
    const json mod = modulator_json(d.modulator());
    for (int nn : n.values()) {
        const std::string id = "moment/" + density_tag(d) + "/n=" + std::to_string(nn);
        const json inputs = {{"k", d.weight().k()}, {"n", nn}, {"modulator", mod}};
        try {
            const QuadratureResult r = integrate_moment(d, nn, spec);
            CaseResult c;
            c.id = id;
            c.inputs = inputs;
            c.value = r.value_double();
            c.reference = factor * std::exp(r.log_scale);
            c.tolerance = tol * std::abs(c.reference);
            c.error_estimate = r.error_estimate();
            const double rel = std::abs(r.normalized - factor) / std::abs(factor);
            c.pass = rel <= tol;
            if (!c.pass) c.reason = "relative deviation " + fmt(rel);
            out.push_back(std::move(c));
        } catch (const std::exception& e) {
            out.push_back(failed(id, inputs, e));
        }
    }
    return out;
}

std::vector<CaseResult> ratio_sweep(const PerturbedDensity& d, IntRange n, double tol, const QuadratureSpec& spec) {
    std::vector<CaseResult> out;
    const double factor = modulator_moment_factor(d.weight(), d.modulator());
    const json mod = modulator_json(d.modulator());
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    bool all_ok = true;
    for (int nn : n.values()) {
        const std::string id = "ratio/" + density_tag(d) + "/n=" + std::to_string(nn);
        const json inputs = {{"k", d.weight().k()}, {"n", nn}, {"modulator", mod}};
        try {
            const QuadratureResult r = integrate_moment(d, nn, spec);
            CaseResult c;
            c.id = id;
            c.inputs = inputs;
            c.value = r.normalized;
            c.reference = factor;
            c.tolerance = tol * std::abs(factor);
            c.error_estimate = r.error.total();
            c.pass = std::abs(c.value - c.reference) <= c.tolerance;
            if (!c.pass) c.reason = "ratio deviates from the moment factor by " + fmt(std::abs(c.value - factor));
            lo = std::min(lo, c.value);
            hi = std::max(hi, c.value);
            out.push_back(std::move(c));
        } catch (const std::exception& e) {
            all_ok = false;
            out.push_back(failed(id, inputs, e));
        }
    }
    CaseResult spread;
    spread.id = "ratio/" + density_tag(d) + "/spread";
    spread.inputs = {{"k", d.weight().k()}, {"n_lo", n.lo}, {"n_hi", n.hi}, {"modulator", mod}};
    spread.value = all_ok ? hi - lo : std::nan("");
    spread.reference = 0.0;
    spread.tolerance = tol * std::abs(factor);
    spread.pass = all_ok && spread.value <= spread.tolerance;
    if (!spread.pass) spread.reason = all_ok ? "ratio not constant in n" : "some moments failed";
    out.push_back(std::move(spread));
    return out;
}

std::vector<CaseResult> pearson_sweep(const std::vector<double>& ks, int points, double tol, std::uint64_t seed) {
    std::vector<CaseResult> out;
    Uniform rng(seed);
    for (double k : ks) {
        const LogNormalWeight w(k);
        for (int i = 0; i < points; ++i) {
            const double x = rng.log_uniform(1e-3, 1e3);
            CaseResult c;
            c.id = "pearson/k=" + fmt(k) + "/i=" + std::to_string(i);
            c.inputs = {{"k", k}, {"x", x}};
            c.value = q_pearson_residual(w, x);
            c.reference = 0.0;
            c.tolerance = tol * w(x) * std::max(1.0, std::sqrt(w.q()) * x);
            c.pass = std::abs(c.value) <= c.tolerance;
            if (!c.pass) c.reason = "residual exceeds tolerance";
            out.push_back(std::move(c));
        }
    }
    return out;
}

std::vector<CaseResult> qderiv_sweep(const std::string& label, const Modulator& m, double q, int points, double tol,
                                     std::uint64_t seed) {
    std::vector<CaseResult> out;
    Uniform rng(seed);
    const json mod = modulator_json(m);
    for (int i = 0; i < points; ++i) {
        const double x = rng.log_uniform(1e-3, 1e3);
        CaseResult c;
        c.id = "qderiv/" + label + "/i=" + std::to_string(i);
        c.inputs = {{"q", q}, {"x", x}, {"modulator", mod}};
        c.value = q_derivative(m, x, q);
        c.reference = 0.0;
        c.tolerance = tol * (1.0 + std::abs(m(static_cast<long double>(x))) / x);
        c.pass = std::abs(c.value) <= c.tolerance;
        if (!c.pass) c.reason = "q-derivative of a q-periodic modulator is not zero";
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<CaseResult> hankel_sweep(const PerturbedDensity& d, IntRange degrees, double tol_pivots,
                                     const QuadratureSpec& spec) {
    std::vector<CaseResult> out;
    const json mod = modulator_json(d.modulator());
    const std::string tag = density_tag(d);
    MomentSequence quad;
    try {
        quad = MomentSequence::from_quadrature(d, 2 * degrees.hi + 2, spec);
    } catch (const std::exception& e) {
        out.push_back(failed("hankel/" + tag, {{"modulator", mod}}, e));
        return out;
    }
    const MomentSequence exact = MomentSequence::closed_form(d.weight(), 2 * degrees.hi + 2);
    for (int deg : degrees.values()) {
        const json inputs = {{"k", d.weight().k()}, {"d", deg}, {"modulator", mod}};
        const std::string id = "hankel/" + tag + "/d=" + std::to_string(deg);
        try {
            const HankelDiagnostics diag = hankel_check(quad, deg);
            CaseResult c;
            c.id = id;
            c.inputs = inputs;
            double min_pivot = std::numeric_limits<double>::infinity();
            for (double p : diag.pivots) min_pivot = std::min(min_pivot, p);
            for (double p : diag.shifted_pivots) min_pivot = std::min(min_pivot, p);
            c.value = diag.ok() ? min_pivot : 0.0;
            c.reference = 0.0;
            c.tolerance = 0.0;
            c.pass = diag.ok();
            if (!c.pass) c.reason = "Hankel matrix not positive definite";
            out.push_back(std::move(c));

            if (d.modulator().sine_only()) {
                const HankelDiagnostics base = hankel_check(exact, deg);
                CaseResult s;
                s.id = id + "/vs-base";
                s.inputs = inputs;
                double worst = 0.0;
                const auto compare = [&worst](const std::vector<double>& a, const std::vector<double>& b) {
                    if (a.size() != b.size()) {
                        worst = std::numeric_limits<double>::infinity();
                        return;
                    }
                    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]) / std::abs(b[i]));
                };
                compare(diag.pivots, base.pivots);
                compare(diag.shifted_pivots, base.shifted_pivots);
                s.value = worst;
                s.reference = 0.0;
                s.tolerance = tol_pivots;
                s.pass = worst <= tol_pivots;
                if (!s.pass) s.reason = "diagnostics differ from the unperturbed weight";
                out.push_back(std::move(s));
            }
        } catch (const std::exception& e) {
            out.push_back(failed(id, inputs, e));
        }
    }
    return out;
}

std::vector<CaseResult> gram_sweep(const PerturbedDensity& d, IntRange degrees, double tol, const QuadratureSpec& spec) {
    std::vector<CaseResult> out;
    const json mod = modulator_json(d.modulator());
    for (int deg : degrees.values()) {
        const std::string id = "gram/" + density_tag(d) + "/d=" + std::to_string(deg);
        const json inputs = {{"k", d.weight().k()}, {"d", deg}, {"modulator", mod}};
        try {
            const OrthogonalBasis basis =
                orthogonal_basis_from_moments(MomentSequence::closed_form(d.weight(), 2 * deg + 1), deg);
            CaseResult c;
            c.id = id;
            c.inputs = inputs;
            c.value = cross_orthogonality_check(basis, d, spec);
            c.reference = 0.0;
            c.tolerance = tol;
            c.pass = c.value <= tol;
            if (!c.pass) c.reason = "orthogonality lost under the perturbed measure";
            out.push_back(std::move(c));
        } catch (const std::exception& e) {
            out.push_back(failed(id, inputs, e));
        }
    }
    return out;
}

std::vector<CaseResult> holder_sweep(const LogNormalWeight& w, const WeierstrassSpec& spec, double tol,
                                     double min_r_squared) {
    std::vector<CaseResult> out;
    const std::vector<double> scales = default_scales();
    const WeierstrassSpec raised = with_truncation_for(spec, w.log_q(), scales.back());
    const Modulator m(w, 1.0, raised);
    std::vector<double> xs;
    for (int i = 0; i < 16; ++i) xs.push_back(std::exp(0.1 + 0.37 * i));

    std::ostringstream tag;
    tag << "holder/k=" << w.k() << "/a=" << spec.a << "/b=" << spec.b;
    const json inputs = {{"k", w.k()}, {"a", spec.a}, {"b", spec.b}, {"N", raised.terms},
                         {"kind", to_string(spec.kind)}, {"probes", 32}, {"x_samples", xs.size()}};
    try {
        const HolderEstimate est = holder_estimate(m, xs, scales, 32);
        CaseResult c;
        c.id = tag.str() + "/alpha";
        c.inputs = inputs;
        c.value = est.alpha;
        c.reference = spec.holder_exponent();
        c.tolerance = tol;
        c.pass = std::abs(c.value - c.reference) <= tol;
        if (!c.pass) c.reason = "fitted exponent off by " + fmt(std::abs(c.value - c.reference));
        out.push_back(c);

        CaseResult r;
        r.id = tag.str() + "/r_squared";
        r.inputs = inputs;
        r.value = est.r_squared;
        r.reference = 1.0;
        r.tolerance = 1.0 - min_r_squared;
        r.pass = est.r_squared >= min_r_squared;
        if (!r.pass) r.reason = "log-log fit is poor";
        out.push_back(r);

        if (spec.a * spec.b > 1.0) {
            // difference quotients grow as h shrinks over three decades
            const std::vector<double> hs = {1e-3, 1e-4, 1e-5, 1e-6};
            const std::vector<double> dq = divergence_witness(m, 1.0, hs);
            CaseResult g;
            g.id = tag.str() + "/witness";
            g.inputs = inputs;
            g.inputs["scales"] = hs;
            g.value = dq.back() / dq.front();
            g.reference = std::pow(1e3, 1.0 - spec.holder_exponent());
            g.tolerance = 0.0;
            g.pass = std::is_sorted(dq.begin(), dq.end()) && std::adjacent_find(dq.begin(), dq.end()) == dq.end();
            if (!g.pass) g.reason = "difference quotients are not increasing";
            out.push_back(g);
        }
    } catch (const std::exception& e) {
        out.push_back(failed(tag.str(), inputs, e));
    }
    return out;
}

std::vector<CaseResult> holder_control_sweep(double tol) {
    std::vector<CaseResult> out;
    const std::vector<double> scales = default_scales();
    std::vector<double> xs;
    for (int i = 0; i < 16; ++i) xs.push_back(std::exp(0.1 + 0.37 * i));
    const auto log_fn = [](long double x) { return static_cast<double>(std::log(x)); };
    const HolderEstimate est = holder_estimate(log_fn, xs, scales, 32);
    CaseResult c;
    c.id = "holder/control/ln";
    c.inputs = {{"g", "ln x"}, {"probes", 32}, {"x_samples", xs.size()}};
    c.value = est.alpha;
    c.reference = 1.0;
    c.tolerance = tol;
    c.pass = std::abs(c.value - 1.0) <= tol;
    if (!c.pass) c.reason = "smooth control does not fit alpha = 1";
    out.push_back(c);
    return out;
}

std::vector<CaseResult> oracle_sweep(int instances, double rel_tol, std::uint64_t seed) {
    std::vector<CaseResult> out;
    Uniform rng(seed);
    for (int i = 0; i < instances; ++i) {
        const double k = 0.5 + 1.5 * rng.next();
        const int n = static_cast<int>(rng.next() * 11.0);
        const int count = 1 + static_cast<int>(rng.next() * 3.0);
        std::vector<TrigMode> modes;
        for (int m = 0; m < count; ++m) {
            TrigMode mode;
            mode.amplitude = 2.0 * rng.next() - 1.0;
            mode.harmonic = 1 + static_cast<std::uint32_t>(rng.next() * 3.0);
            mode.kind = rng.next() < 0.5 ? TrigKind::sine : TrigKind::cosine;
            modes.push_back(mode);
        }
        const LogNormalWeight w(k);
        Modulator probe(w, 0.0, modes);
        const double lambda = 0.999 * (2.0 * rng.next() - 1.0) * positivity_bound(probe);
        const PerturbedDensity d(w, Modulator(w, lambda, modes, true));

        const std::string id = "oracle/i=" + std::to_string(i);
        const json inputs = {{"k", k}, {"n", n}, {"modulator", modulator_json(d.modulator())}};
        try {
            const QuadratureResult r = integrate_moment(d, n);
            const OracleResult o = oracle_moment(d, n);
            CaseResult c;
            c.id = id;
            c.inputs = inputs;
            c.value = r.value_double();
            c.reference = o.value;
            c.tolerance = rel_tol * std::abs(o.value);
            c.error_estimate = r.error_estimate();
            const double deviation = std::abs(c.value - c.reference);
            const bool agree = deviation <= c.tolerance;
            const bool honest = c.error_estimate >= deviation;
            c.pass = agree && honest && o.converged;
            if (!o.converged) c.reason = "oracle did not converge";
            else if (!agree) c.reason = "production and oracle disagree by " + fmt(deviation / std::abs(o.value));
            else if (!honest) c.reason = "error estimate " + fmt(c.error_estimate) + " below deviation " + fmt(deviation);
            out.push_back(std::move(c));
        } catch (const std::exception& e) {
            out.push_back(failed(id, inputs, e));
        }
    }
    return out;
}

std::vector<CaseResult> closed_form_guard_sweep(const std::vector<double>& ks, IntRange n, double rel_tol,
                                                const QuadratureSpec& spec) {
    std::vector<CaseResult> out;
    for (double k : ks) {
        const LogNormalWeight w(k);
        const PerturbedDensity d = PerturbedDensity::base(w);
        for (int nn : n.values()) {
            const std::string id = "closed-form/k=" + fmt(k) + "/n=" + std::to_string(nn);
            const json inputs = {{"k", k}, {"n", nn}};
            try {
                const QuadratureResult r = integrate_moment(d, nn, spec);
                const double derived = log_base_moment(w, nn);                      // ln q^{-(n+1)^2/2}
                const double printed = (nn + 1.0) * (nn + 1.0) / 2.0 * std::log(w.q());  // ln q^{(n+1)^2/2}
                CaseResult c;
                c.id = id;
                c.inputs = inputs;
                c.inputs["printed_log_moment"] = printed;
                c.value = r.value.log_abs;
                c.reference = derived;
                c.tolerance = rel_tol;
                c.error_estimate = r.error.total();
                const bool matches = r.value.sign > 0 && std::abs(c.value - derived) <= rel_tol;
                const bool rejects_printed = std::abs(c.value - printed) > rel_tol;
                c.pass = matches && rejects_printed;
                if (!matches) c.reason = "quadrature disagrees with exp((n+1)^2/(4k^2))";
                else if (!rejects_printed) c.reason = "cannot discriminate the sign-flipped closed form";
                out.push_back(std::move(c));
            } catch (const std::exception& e) {
                out.push_back(failed(id, inputs, e));
            }
        }
    }
    return out;
}

}  // namespace stieltjes::verify
