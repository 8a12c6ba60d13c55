#include "stieltjes/measures.hpp"

#include "stieltjes/errors.hpp"
#include "stieltjes/phase.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace stieltjes {

namespace {

constexpr long double kTwoPi = 2.0L * std::numbers::pi_v<long double>;

double trig(TrigKind kind, long double turns) {
    const auto angle = static_cast<double>(kTwoPi * turns);
    return kind == TrigKind::sine ? std::sin(angle) : std::cos(angle);
}

void require_positive_x(long double x, const char* what) {
    if (!(x > 0.0L) || !std::isfinite(x)) {
        std::ostringstream msg;
        msg << what << ": x must be a finite positive real, got " << static_cast<double>(x);
        throw DomainError(msg.str());
    }
}

}  // namespace

std::string to_string(TrigKind kind) { return kind == TrigKind::sine ? "sine" : "cosine"; }

// ---------------------------------------------------------------------------

LogNormalWeight::LogNormalWeight(double k) : k_(k) {
    if (!(k > 0.0) || !std::isfinite(k)) {
        throw InvalidArgument("LogNormalWeight: k must be a finite positive real");
    }
    q_ = std::exp(-1.0 / (2.0 * k * k));
    log_q_ = std::log(static_cast<long double>(q_));
    norm_ = k / std::sqrt(std::numbers::pi);
}

double LogNormalWeight::operator()(long double x) const {
    require_positive_x(x, "eval_weight");
    const long double t = std::log(x);
    const long double kk = static_cast<long double>(k_) * k_;
    return norm_ * static_cast<double>(std::exp(-kk * t * t));
}

// ---------------------------------------------------------------------------

void TrigMode::validate() const {
    if (harmonic < 1) throw InvalidArgument("TrigMode: harmonic must be a positive integer");
    if (!std::isfinite(amplitude)) throw InvalidArgument("TrigMode: amplitude must be finite");
}

void WeierstrassSpec::validate() const {
    if (!(a > 0.0 && a < 1.0)) throw InvalidArgument("WeierstrassSpec: a must lie in (0, 1)");
    if (b < 2) throw InvalidArgument("WeierstrassSpec: b must be an integer >= 2");
    if (terms < 1) throw InvalidArgument("WeierstrassSpec: terms must be a positive integer");
}

double WeierstrassSpec::tail_bound() const { return std::pow(a, terms) / (1.0 - a); }

double WeierstrassSpec::holder_exponent() const { return std::log(1.0 / a) / std::log(double(b)); }

// ---------------------------------------------------------------------------

Modulator::Modulator(const LogNormalWeight& weight, double lambda, Content content, bool positive)
    : log_q_(weight.log_q()), lambda_(lambda), content_(std::move(content)), positive_(positive) {
    if (!std::isfinite(lambda)) throw InvalidArgument("Modulator: lambda must be finite");
    if (const auto* modes = std::get_if<std::vector<TrigMode>>(&content_)) {
        for (const auto& mode : *modes) mode.validate();
    } else {
        std::get<WeierstrassSpec>(content_).validate();
    }
    if (positive_ && std::abs(lambda_) * sup_bound() > 1.0) {
        std::ostringstream msg;
        msg << "Modulator: flagged positive but |lambda| * S = " << std::abs(lambda_) * sup_bound()
            << " exceeds 1";
        throw InvalidArgument(msg.str());
    }
}

bool Modulator::is_weierstrass() const { return std::holds_alternative<WeierstrassSpec>(content_); }

const WeierstrassSpec* Modulator::weierstrass() const { return std::get_if<WeierstrassSpec>(&content_); }

const std::vector<TrigMode>* Modulator::modes() const {
    return std::get_if<std::vector<TrigMode>>(&content_);
}

double Modulator::operator()(long double x) const {
    require_positive_x(x, "eval_modulator");
    return at_log_coordinate(std::log(x) / log_q_);
}

double Modulator::at_log_coordinate(long double u) const {
    const Phase base(u);
    if (const auto* modes = this->modes()) {
        double sum = 0.0;
        for (const auto& mode : *modes) {
            sum += mode.amplitude * trig(mode.kind, base.scaled(mode.harmonic).turns());
        }
        return sum;
    }
    const auto& w = std::get<WeierstrassSpec>(content_);
    double sum = 0.0;
    double amp = 1.0;
    Phase phase = base;
    for (int n = 1; n <= w.terms; ++n) {
        amp *= w.a;
        phase = phase.scaled(w.b);
        sum += amp * trig(w.kind, phase.turns());
    }
    return sum;
}

double Modulator::sup_bound() const {
    if (const auto* modes = this->modes()) {
        double s = 0.0;
        for (const auto& mode : *modes) s += std::abs(mode.amplitude);
        return s;
    }
    const auto& w = std::get<WeierstrassSpec>(content_);
    const double aN = std::pow(w.a, w.terms);
    return w.a * (1.0 - aN) / (1.0 - w.a) + w.tail_bound();
}

bool Modulator::is_zero() const { return sup_bound() == 0.0; }

bool Modulator::sine_only() const {
    if (const auto* modes = this->modes()) {
        for (const auto& mode : *modes) {
            if (mode.kind == TrigKind::cosine && mode.amplitude != 0.0) return false;
        }
        return true;
    }
    return std::get<WeierstrassSpec>(content_).kind == TrigKind::sine;
}

double Modulator::series_tail() const {
    if (const auto* w = weierstrass()) return w->tail_bound();
    return 0.0;
}

std::vector<ModulatorTerm> Modulator::terms() const {
    std::vector<ModulatorTerm> out;
    if (const auto* modes = this->modes()) {
        for (const auto& mode : *modes) {
            ModulatorTerm t;
            t.amplitude = mode.amplitude;
            t.kind = mode.kind;
            t.harmonic = mode.harmonic;
            t.exact_harmonic = mode.harmonic;
            t.power = 1;
            t.base = mode.harmonic;
            out.push_back(t);
        }
        return out;
    }
    const auto& w = std::get<WeierstrassSpec>(content_);
    double amp = 1.0;
    long double harmonic = 1.0L;
    std::optional<std::uint64_t> exact = 1;
    for (int n = 1; n <= w.terms; ++n) {
        amp *= w.a;
        harmonic *= w.b;
        if (exact && *exact <= std::numeric_limits<std::uint64_t>::max() / w.b) {
            exact = *exact * w.b;
        } else {
            exact.reset();
        }
        ModulatorTerm t;
        t.amplitude = amp;
        t.kind = w.kind;
        t.harmonic = harmonic;
        t.exact_harmonic = exact;
        t.power = n;
        t.base = w.b;
        out.push_back(t);
    }
    return out;
}

// ---------------------------------------------------------------------------

PerturbedDensity::PerturbedDensity(LogNormalWeight weight, Modulator modulator)
    : weight_(weight), modulator_(std::move(modulator)) {
    if (modulator_.log_q() != weight_.log_q()) {
        throw InvalidArgument("PerturbedDensity: modulator was built for a different q");
    }
}

PerturbedDensity PerturbedDensity::base(const LogNormalWeight& weight) {
    return PerturbedDensity(weight, Modulator(weight, 0.0, std::vector<TrigMode>{}));
}

double PerturbedDensity::operator()(long double x) const {
    require_positive_x(x, "eval_density");
    const double f = weight_(x);
    if (modulator_.lambda() == 0.0) return f;
    return f * (1.0 + modulator_.lambda() * modulator_(x));
}

// ---------------------------------------------------------------------------

double eval_weight(const LogNormalWeight& w, long double x) { return w(x); }

double eval_modulator(const Modulator& m, long double x) { return m(x); }

double eval_density(const PerturbedDensity& d, long double x) { return d(x); }

double positivity_bound(const Modulator& m) {
    const double s = m.sup_bound();
    if (s == 0.0) return std::numeric_limits<double>::infinity();
    return 1.0 / s;
}

}  // namespace stieltjes
