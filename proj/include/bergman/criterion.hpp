#pragma once

#include <functional>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "bergman/domains.hpp"
#include "bergman/quadrature.hpp"
#include "bergman/series.hpp"
#include "bergman/transforms.hpp"

namespace bergman {

struct RhoLevel {
  int level;      // n
  double radius;  // r_n
  double rho;     // rho(gamma o phi_n(e^{i theta}))
};

enum class Verdict { bounded, inconclusive };

/// Outcome of a membership experiment: the per-level rho values against
/// the reference norm that bounds them.
struct CriterionReport {
  std::string domain;
  std::string gamma_desc;
  std::vector<RhoLevel> levels;
  double sup_rho = 0.0;
  double reference_norm = 0.0;  // ||g||_{B2(G)} or ||ghat||_{B2(G)}
  double gamma_norm = std::numeric_limits<double>::quiet_NaN();
  double inversion_residual = std::numeric_limits<double>::quiet_NaN();
  Verdict verdict = Verdict::inconclusive;
  double tol_rel = 0.0;
  double tol_abs = 0.0;
};

/// rho(gamma o phi_n) for every exhaustion level, from M uniform samples
/// of gamma on the level curve. Listed poles of gamma must keep at least
/// the guard distance from every sample point; non-finite samples are
/// rejected as well.
std::vector<RhoLevel> rho_sequence(
    const std::function<Complex(Complex)>& gamma, const ExhaustionSequence& ex,
    int samples, std::span<const Complex> poles = {},
    double guard = kDefaultGuard);

/// Necessary-condition experiment: gamma = Kg for a polynomial g on
/// G = phi(D), evaluated exactly on every level curve. The verdict is
/// bounded iff every rho_n <= ||g||_{B2(G)} (1 + tol_rel) + tol_abs.
CriterionReport theorem1_bound_check(const CoefficientSeries& g,
                                     const ExhaustionSequence& ex,
                                     const DiskQuadrature& rule, int samples,
                                     double tol_rel = 1e-6,
                                     double tol_abs = 1e-8);

struct InversionSettings {
  int degree = 12;
  double ring_radius = 2.0;        // collocation ring, map-plane
  double regularization = 1e-12;   // on the column-scaled normal equations
};

/// Least-squares (or, on the disk, diagonal) inverse of the Cauchy
/// transform. The recovered density is returned in pullback form
/// h(w) = ghat(phi(w)) phi'(w), whose disk norm equals ||ghat||_{B2(G)};
/// for the identity map h is ghat itself.
struct InversionResult {
  CoefficientSeries pullback;
  double residual = 0.0;   // ring RMS mismatch (LS) or unmatched-tail norm
  double condition = 1.0;  // Gram diagonal ratio after column scaling
  bool rank_ok = true;
};

/// Diagonal inversion on the unit disk: c_k = -conj(F_{k+1}) (k+1) for
/// k <= degree; the residual is the B2^1 norm of the unmatched tail.
InversionResult invert_cauchy(const LaurentTail& gamma, int degree);

/// Collocation least squares on G = phi(D): minimizes
/// sum_j |K ghat(zeta_j) - gamma(zeta_j)|^2 over a fixed ring of
/// 4 (degree+1) points at the given map-plane radius, solved by normal
/// equations with diagonal regularization.
InversionResult invert_cauchy(const std::function<Complex(Complex)>& gamma,
                              const ConformalMap& phi,
                              const InversionSettings& settings,
                              const DiskQuadrature& rule);

/// Theorem-2 experiment for a finite principal part gamma centered
/// strictly inside G: inverts the Cauchy transform at the configured
/// degree and checks rho_n <= ||ghat||_{B2(G)} (1 + tol_rel) at every
/// level. gamma_norm is filled from the closed form (disk, center 0) or
/// from the exterior-map quadrature when one is supplied.
CriterionReport theorem2_membership(const LaurentTail& gamma,
                                    const ExhaustionSequence& ex,
                                    const DiskQuadrature& rule, int samples,
                                    const InversionSettings& settings = {},
                                    const ConformalMap* exterior = nullptr,
                                    double tol_rel = 1e-3);

/// Boundary functional of the Theorem-1 proof at one exhaustion level:
/// (1/2 pi i) oint_{dG_n} gamma(xi) h(xi) dxi via the M-point trapezoid
/// rule on the level parametrization (spectrally accurate for analytic
/// integrands). Independent of the level once h is holomorphic on the
/// closed level domain.
Complex riesz_functional(const std::function<Complex(Complex)>& gamma,
                         const std::function<Complex(Complex)>& h,
                         const ExhaustionSequence& ex, int level, int samples);

}  // namespace bergman
