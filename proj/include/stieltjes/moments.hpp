#pragma once

// Moment sequences, Hankel positivity and monic orthogonal polynomials built
// directly from moments.
//
// Conditioning. Moments are first rescaled to the variable y = x / rho with
// rho = M_1 / M_0, then every Hankel matrix is equilibrated symmetrically by
// D = sqrt(diag H) before Cholesky. Both steps are exact changes of basis:
// positive definiteness and the orthogonality ratios are unaffected, but the
// equilibrated matrices stay O(1) even when raw moments span 50+ decades
// (k = 0.5, degree 6). Gram matrices are formed in the same equilibrated
// basis so no large cancellations occur.

#include "stieltjes/log_real.hpp"
#include "stieltjes/measures.hpp"
#include "stieltjes/quadrature.hpp"

#include <vector>

namespace stieltjes {

enum class MomentSource { closed_form, quadrature, explicit_values };

struct MomentSequence {
    std::vector<LogReal> entries;  // M_0 .. M_{size-1}
    std::vector<double> rel_error; // per-entry relative error budget
    MomentSource source = MomentSource::explicit_values;

    std::size_t size() const { return entries.size(); }

    static MomentSequence closed_form(const LogNormalWeight& w, int count);
    static MomentSequence from_quadrature(const PerturbedDensity& d, int count,
                                          const QuadratureSpec& spec = {});
    static MomentSequence from_values(const std::vector<double>& values);
};

// Degree cap for double precision Hankel work.
inline constexpr int kMaxDegree = 6;

struct HankelDiagnostics {
    bool positive_definite = false;          // H_d = [M_{i+j}]
    bool shifted_positive_definite = false;  // [M_{i+j+1}]
    // Cholesky pivots of the equilibrated matrices (squared diagonal of L).
    std::vector<double> pivots;
    std::vector<double> shifted_pivots;
    double log_rho = 0.0;

    bool ok() const { return positive_definite && shifted_positive_definite; }
};

// Needs entries M_0 .. M_{2d+1}. Throws InvalidArgument when entries are
// missing and ConditioningError for d > kMaxDegree.
HankelDiagnostics hankel_check(const MomentSequence& ms, int d);

struct OrthogonalBasis {
    int degree = 0;
    double log_rho = 0.0;  // polynomials are stored in y = x / rho
    // coefficients[j][a]: coefficient of y^a in the monic p_j (a <= j).
    std::vector<std::vector<double>> coefficients;
    // Equilibrated Cholesky data: log D_a and W = L^{-1} (row j gives the
    // orthonormal p_j in the equilibrated monomial basis y^a / D_a).
    std::vector<double> log_scale;
    std::vector<std::vector<double>> inverse_factor;

    double rho() const;
    // Coefficient of x^a in the monic p_j(x) = rho^j P_j(x / rho); may overflow for large j.
    double coefficient_x(int j, int a) const;
    // p_j(x) evaluated through the scaled representation.
    double evaluate(int j, double x) const;
};

// Throws ConditioningError when the Hankel matrix is not certifiably positive
// definite or d exceeds kMaxDegree.
OrthogonalBasis orthogonal_basis_from_moments(const MomentSequence& ms, int d);

// max_{i != j} |<p_i, p_j>| / sqrt(<p_i,p_i> <p_j,p_j>) where the inner
// products use the moment functional of `ms`. Needs M_0 .. M_{2d}.
double gram_offdiagonal_ratio(const OrthogonalBasis& basis, const MomentSequence& ms);

// Same ratio with inner products taken under density d1, its moments computed
// by quadrature. Propagates BudgetExceeded.
double cross_orthogonality_check(const OrthogonalBasis& basis, const PerturbedDensity& d1,
                                 const QuadratureSpec& spec = {});

}  // namespace stieltjes
