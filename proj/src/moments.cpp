#include "stieltjes/moments.hpp"

#include "stieltjes/errors.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace stieltjes {

namespace {

using Matrix = std::vector<std::vector<double>>;

// Pivots of the unit-diagonal matrices below this are not certifiable.
constexpr double kPivotFloor = 100.0 * std::numeric_limits<double>::epsilon();

double log_rho_of(const MomentSequence& ms) {
    if (ms.size() < 2) return 0.0;
    const LogReal& m0 = ms.entries[0];
    const LogReal& m1 = ms.entries[1];
    if (m0.sign <= 0 || m1.sign <= 0) return 0.0;
    return m1.log_abs - m0.log_abs;
}

// y-scaled, M_0-normalised log moments; signs kept separately.
struct ScaledMoments {
    std::vector<double> log_abs;
    std::vector<int> sign;
};

ScaledMoments scale(const MomentSequence& ms, double log_rho) {
    ScaledMoments out;
    const double log_m0 = ms.entries.empty() || ms.entries[0].sign == 0 ? 0.0 : ms.entries[0].log_abs;
    for (std::size_t n = 0; n < ms.size(); ++n) {
        out.log_abs.push_back(ms.entries[n].log_abs - log_m0 - static_cast<double>(n) * log_rho);
        out.sign.push_back(ms.entries[n].sign);
    }
    return out;
}

// In-place Cholesky of a symmetric matrix; returns pivots (L_ii^2) or an
// empty vector when a pivot falls below the floor.
std::vector<double> cholesky(Matrix& a) {
    const std::size_t n = a.size();
    std::vector<double> pivots;
    for (std::size_t j = 0; j < n; ++j) {
        long double diag = a[j][j];
        for (std::size_t p = 0; p < j; ++p) diag -= static_cast<long double>(a[j][p]) * a[j][p];
        if (!(diag > kPivotFloor)) return {};
        pivots.push_back(static_cast<double>(diag));
        const long double ljj = std::sqrt(diag);
        a[j][j] = static_cast<double>(ljj);
        for (std::size_t i = j + 1; i < n; ++i) {
            long double v = a[i][j];
            for (std::size_t p = 0; p < j; ++p) v -= static_cast<long double>(a[i][p]) * a[j][p];
            a[i][j] = static_cast<double>(v / ljj);
        }
        for (std::size_t i = 0; i < j; ++i) a[i][j] = 0.0;
    }
    return pivots;
}

// Equilibrated Hankel [M_{i+j+shift}] / (D_i D_j) with D_i = sqrt(M_{2i+shift}).
// Returns false if a diagonal entry is not positive.
bool equilibrated_hankel(const ScaledMoments& sm, int d, int shift, Matrix& out, std::vector<double>& log_d) {
    out.assign(d + 1, std::vector<double>(d + 1, 0.0));
    log_d.assign(d + 1, 0.0);
    for (int i = 0; i <= d; ++i) {
        if (sm.sign[2 * i + shift] <= 0) return false;
        log_d[i] = 0.5 * sm.log_abs[2 * i + shift];
    }
    for (int i = 0; i <= d; ++i) {
        for (int j = 0; j <= d; ++j) {
            const int n = i + j + shift;
            out[i][j] = sm.sign[n] == 0 ? 0.0 : sm.sign[n] * std::exp(sm.log_abs[n] - log_d[i] - log_d[j]);
        }
    }
    return true;
}

void require_entries(const MomentSequence& ms, std::size_t needed, const char* what) {
    if (ms.size() < needed) {
        std::ostringstream msg;
        msg << what << ": needs moments M_0..M_" << needed - 1 << ", sequence has " << ms.size();
        throw InvalidArgument(msg.str());
    }
}

void require_degree(int d, const char* what) {
    if (d < 0) throw InvalidArgument(std::string(what) + ": degree must be >= 0");
    if (d > kMaxDegree) {
        std::ostringstream msg;
        msg << what << ": degree " << d << " exceeds the double-precision cap of " << kMaxDegree;
        throw ConditioningError(msg.str());
    }
}

Matrix lower_inverse(const Matrix& l) {
    const std::size_t n = l.size();
    Matrix w(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        w[i][i] = 1.0 / l[i][i];
        for (std::size_t j = 0; j < i; ++j) {
            long double s = 0.0L;
            for (std::size_t p = j; p < i; ++p) s += static_cast<long double>(l[i][p]) * w[p][j];
            w[i][j] = static_cast<double>(-s / l[i][i]);
        }
    }
    return w;
}

}  // namespace

// ---------------------------------------------------------------------------

MomentSequence MomentSequence::closed_form(const LogNormalWeight& w, int count) {
    MomentSequence ms;
    ms.source = MomentSource::closed_form;
    for (int n = 0; n < count; ++n) {
        ms.entries.push_back(base_moment_closed_form(w, n));
        ms.rel_error.push_back(std::numeric_limits<double>::epsilon());
    }
    return ms;
}

MomentSequence MomentSequence::from_quadrature(const PerturbedDensity& d, int count, const QuadratureSpec& spec) {
    MomentSequence ms;
    ms.source = MomentSource::quadrature;
    for (int n = 0; n < count; ++n) {
        const QuadratureResult r = integrate_moment(d, n, spec);
        ms.entries.push_back(r.value);
        ms.rel_error.push_back(r.normalized == 0.0 ? std::numeric_limits<double>::infinity()
                                                   : r.error.total() / std::abs(r.normalized));
    }
    return ms;
}

MomentSequence MomentSequence::from_values(const std::vector<double>& values) {
    MomentSequence ms;
    ms.source = MomentSource::explicit_values;
    for (double v : values) {
        ms.entries.push_back(LogReal::from_double(v));
        ms.rel_error.push_back(0.0);
    }
    return ms;
}

// ---------------------------------------------------------------------------

HankelDiagnostics hankel_check(const MomentSequence& ms, int d) {
    require_degree(d, "hankel_check");
    require_entries(ms, static_cast<std::size_t>(2 * d + 2), "hankel_check");

    HankelDiagnostics diag;
    diag.log_rho = log_rho_of(ms);
    const ScaledMoments sm = scale(ms, diag.log_rho);

    Matrix h;
    std::vector<double> log_d;
    if (ms.entries[0].sign > 0 && equilibrated_hankel(sm, d, 0, h, log_d)) {
        diag.pivots = cholesky(h);
        diag.positive_definite = !diag.pivots.empty();
    }
    if (equilibrated_hankel(sm, d, 1, h, log_d)) {
        diag.shifted_pivots = cholesky(h);
        diag.shifted_positive_definite = !diag.shifted_pivots.empty();
    }
    return diag;
}

OrthogonalBasis orthogonal_basis_from_moments(const MomentSequence& ms, int d) {
    require_degree(d, "orthogonal_basis_from_moments");
    require_entries(ms, static_cast<std::size_t>(2 * d + 1), "orthogonal_basis_from_moments");
    if (ms.entries[0].sign <= 0) throw ConditioningError("orthogonal_basis_from_moments: M_0 must be positive");

    OrthogonalBasis basis;
    basis.degree = d;
    basis.log_rho = log_rho_of(ms);
    const ScaledMoments sm = scale(ms, basis.log_rho);

    Matrix h;
    if (!equilibrated_hankel(sm, d, 0, h, basis.log_scale) || cholesky(h).empty()) {
        std::ostringstream msg;
        msg << "orthogonal_basis_from_moments: Hankel matrix of degree " << d
            << " is not certifiably positive definite";
        throw ConditioningError(msg.str());
    }
    basis.inverse_factor = lower_inverse(h);

    const auto& w = basis.inverse_factor;
    basis.coefficients.assign(d + 1, {});
    for (int j = 0; j <= d; ++j) {
        basis.coefficients[j].resize(j + 1);
        for (int a = 0; a <= j; ++a) {
            basis.coefficients[j][a] = (w[j][a] / w[j][j]) * std::exp(basis.log_scale[j] - basis.log_scale[a]);
        }
    }
    return basis;
}

double OrthogonalBasis::rho() const { return std::exp(log_rho); }

double OrthogonalBasis::coefficient_x(int j, int a) const {
    return coefficients.at(j).at(a) * std::exp((j - a) * log_rho);
}

double OrthogonalBasis::evaluate(int j, double x) const {
    const auto& c = coefficients.at(j);
    const double y = x / rho();
    double v = 0.0;
    for (int a = j; a >= 0; --a) v = v * y + c[a];
    return v * std::exp(j * log_rho);
}

double gram_offdiagonal_ratio(const OrthogonalBasis& basis, const MomentSequence& ms) {
    const int d = basis.degree;
    require_entries(ms, static_cast<std::size_t>(2 * d + 1), "gram_offdiagonal_ratio");
    const ScaledMoments sm = scale(ms, basis.log_rho);

    Matrix hs(d + 1, std::vector<double>(d + 1, 0.0));
    for (int a = 0; a <= d; ++a) {
        for (int b = 0; b <= d; ++b) {
            const int n = a + b;
            hs[a][b] = sm.sign[n] == 0
                           ? 0.0
                           : sm.sign[n] * std::exp(sm.log_abs[n] - basis.log_scale[a] - basis.log_scale[b]);
        }
    }
    const auto& w = basis.inverse_factor;
    Matrix g(d + 1, std::vector<double>(d + 1, 0.0));
    for (int i = 0; i <= d; ++i) {
        for (int j = 0; j <= i; ++j) {
            long double s = 0.0L;
            for (int a = 0; a <= i; ++a) {
                for (int b = 0; b <= j; ++b) s += static_cast<long double>(w[i][a]) * hs[a][b] * w[j][b];
            }
            g[i][j] = g[j][i] = static_cast<double>(s);
        }
    }
    double worst = 0.0;
    for (int i = 0; i <= d; ++i) {
        for (int j = 0; j < i; ++j) {
            const double denom = std::sqrt(std::abs(g[i][i] * g[j][j]));
            const double r = denom == 0.0 ? std::numeric_limits<double>::infinity() : std::abs(g[i][j]) / denom;
            worst = std::max(worst, r);
        }
    }
    return worst;
}

double cross_orthogonality_check(const OrthogonalBasis& basis, const PerturbedDensity& d1,
                                 const QuadratureSpec& spec) {
    const MomentSequence ms = MomentSequence::from_quadrature(d1, 2 * basis.degree + 1, spec);
    return gram_offdiagonal_ratio(basis, ms);
}

}  // namespace stieltjes
