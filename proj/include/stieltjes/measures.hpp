#pragma once

// Log-normal (Stieltjes-Wigert) weight, q-periodic modulators and the
// perturbed densities f(x) * (1 + lambda * g(x)) that share its integer
// moments.
//
// Every modulator is a function of the log-coordinate u = ln x / ln q, in
// which it has period 1; that is the q-periodicity g(qx) = g(x).
//
// Point evaluations take long double arguments. Callers that form q*x
// themselves should do so in long double: for rough modulators the rounding
// of a double q*x alone moves g by |g'(u)| * 1e-16, which for a Weierstrass
// sum grows like (a*b)^N.

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace stieltjes {

enum class TrigKind { sine, cosine };

std::string to_string(TrigKind kind);

class LogNormalWeight {
public:
    // Throws InvalidArgument unless k > 0 and finite.
    explicit LogNormalWeight(double k);

    double k() const { return k_; }
    // q = exp(-1/(2k^2)), rounded to double.
    double q() const { return q_; }
    // Natural log of the stored double q. Modulators use this value so that
    // their period matches q() exactly rather than the unrounded q.
    long double log_q() const { return log_q_; }
    // k / sqrt(pi)
    double normalization() const { return norm_; }

    double operator()(long double x) const;

private:
    double k_;
    double q_;
    long double log_q_;
    double norm_;
};

// a * trig(2 pi * harmonic * u)
struct TrigMode {
    double amplitude = 0.0;
    std::uint32_t harmonic = 1;
    TrigKind kind = TrigKind::sine;

    // Throws InvalidArgument for harmonic < 1 or non-finite amplitude.
    void validate() const;
};

// sum_{n=1}^{terms} a^n * trig(2 pi b^n u)
struct WeierstrassSpec {
    static constexpr int kDefaultTerms = 30;

    double a = 0.5;
    std::uint32_t b = 3;
    int terms = kDefaultTerms;
    TrigKind kind = TrigKind::sine;

    void validate() const;

    // Hardy: continuous and nowhere differentiable in the limit iff a*b >= 1.
    bool nowhere_differentiable() const { return a * b >= 1.0; }
    // a^N / (1 - a), bounds the sup of the omitted tail (loosely).
    double tail_bound() const;
    // ln(1/a) / ln(b), the Hoelder exponent of the limit function when a*b > 1.
    double holder_exponent() const;
};

// One term of a modulator expansion, as seen by the term-by-term integrator.
struct ModulatorTerm {
    double amplitude = 0.0;
    TrigKind kind = TrigKind::sine;
    // b_n as a real magnitude (b^n may exceed 2^64 for long Weierstrass sums).
    long double harmonic = 1.0L;
    // Set when b_n fits in 64 bits; needed for exact phase reduction.
    std::optional<std::uint64_t> exact_harmonic;
    // Weierstrass terms: index n and the base b, so phases can be built by
    // repeated exact scaling even when b^n itself overflows.
    int power = 1;
    std::uint32_t base = 0;
};

class Modulator {
public:
    using Content = std::variant<std::vector<TrigMode>, WeierstrassSpec>;

    // lambda: perturbation amplitude. With positive = true, throws
    // InvalidArgument unless |lambda| * sup_bound() <= 1.
    Modulator(const LogNormalWeight& weight, double lambda, Content content,
              bool positive = false);

    double lambda() const { return lambda_; }
    const Content& content() const { return content_; }
    bool positive() const { return positive_; }
    long double log_q() const { return log_q_; }

    bool is_weierstrass() const;
    const WeierstrassSpec* weierstrass() const;
    const std::vector<TrigMode>* modes() const;

    // g(x); excludes lambda.
    double operator()(long double x) const;
    // g as a function of u = ln x / ln q.
    double at_log_coordinate(long double u) const;

    // S with |g| <= S everywhere. For Weierstrass specs this bounds the full
    // (untruncated) series.
    double sup_bound() const;
    bool is_zero() const;
    bool sine_only() const;
    // Truncation tail carried by every downstream error budget (0 for finite lists).
    double series_tail() const;

    std::vector<ModulatorTerm> terms() const;

private:
    long double log_q_;
    double lambda_;
    Content content_;
    bool positive_;
};

class PerturbedDensity {
public:
    // Throws InvalidArgument if the modulator was built for a different q.
    PerturbedDensity(LogNormalWeight weight, Modulator modulator);

    // Unperturbed density (lambda = 0, empty mode list).
    static PerturbedDensity base(const LogNormalWeight& weight);

    const LogNormalWeight& weight() const { return weight_; }
    const Modulator& modulator() const { return modulator_; }

    double operator()(long double x) const;

private:
    LogNormalWeight weight_;
    Modulator modulator_;
};

// (k / sqrt(pi)) exp(-k^2 ln^2 x). Throws DomainError for x <= 0.
double eval_weight(const LogNormalWeight& w, long double x);
// g(x). Throws DomainError for x <= 0.
double eval_modulator(const Modulator& m, long double x);
// f(x) (1 + lambda g(x)). Throws DomainError for x <= 0.
double eval_density(const PerturbedDensity& d, long double x);
// 1 / sup_bound(); +inf for the zero modulator.
double positivity_bound(const Modulator& m);

}  // namespace stieltjes
