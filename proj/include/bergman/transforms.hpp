#pragma once

#include <functional>
#include <span>

#include "bergman/domains.hpp"
#include "bergman/quadrature.hpp"
#include "bergman/series.hpp"

namespace bergman {

/// Minimum map-plane clearance for Cauchy-kernel evaluations.
inline constexpr double kDefaultGuard = 0.05;

/// Cauchy transform (Kg)(zeta) = (1/pi) iint_D conj(g(z)) / (z - zeta) dA
/// of a finite series over the unit disk, in coefficients:
/// F_{k+1} = -conj(c_k) / (k+1).
LaurentTail cauchy_disk_series(const CoefficientSeries& g);

/// Exact evaluator of Kg over G = phi(D) for polynomial data. With the
/// pullback density h(w) = g(phi(w)) phi'(w) (a polynomial),
///   (Kg)(zeta) = sum_j conj(h_j) q_j(zeta) / (j+1),
/// where q is the Taylor expansion of phi'(w) / (phi(w) - zeta); only the
/// first deg(h)+1 terms contribute. q is produced by power-series
/// division, so each evaluation is exact up to roundoff for every zeta
/// outside the closed domain. For the identity map this reduces to
/// evaluating cauchy_disk_series.
class PolynomialCauchyTransform {
 public:
  /// g given in the G-plane variable.
  PolynomialCauchyTransform(const CoefficientSeries& g, const ConformalMap& phi);

  /// Density supplied directly in pullback form.
  static PolynomialCauchyTransform from_pullback(CoefficientSeries pullback,
                                                 const ConformalMap& phi);

  const CoefficientSeries& pullback() const { return pullback_; }

  /// Throws std::domain_error when zeta lies inside the sampled image
  /// curve (the expansion is only valid outside the closure).
  Complex operator()(Complex zeta) const;

 private:
  struct pullback_tag {};
  PolynomialCauchyTransform(pullback_tag, CoefficientSeries pullback,
                            ConformalMap phi);
  CoefficientSeries pullback_;
  ConformalMap phi_;
  std::vector<Complex> check_curve_;
};

/// Quadrature route for the same transform:
/// (1/pi) iint_D conj(g(phi(w))) |phi'(w)|^2 / (phi(w) - zeta) dA(w).
/// zeta must lie outside the curve phi((1+guard) dD); violations throw
/// std::domain_error.
Complex cauchy_quadrature(const std::function<Complex(Complex)>& g,
                          const ConformalMap& phi, Complex zeta,
                          const DiskQuadrature& rule,
                          double guard = kDefaultGuard);

/// Same transform with the density in pullback form h = g(phi) phi':
/// (1/pi) iint_D conj(h(w)) phi'(w) / (phi(w) - zeta) dA(w).
Complex cauchy_quadrature(const CoefficientSeries& pullback,
                          const ConformalMap& phi, Complex zeta,
                          const DiskQuadrature& rule,
                          double guard = kDefaultGuard);

/// Cauchy-type integral of a circle function,
/// F(zeta) = (1/2 pi i) int_{dD} f(t)/(t - zeta) dt for |zeta| > 1,
/// which in modes is the tail F_k = -f_{-k}. Positive and zero modes are
/// ignored.
LaurentTail boundary_cauchy_integral(const BoundaryFunction& f);

/// Beurling transform of the disk-supported density
/// u(z) = sum_k d_k conj(z)^k, evaluated off the support:
/// (Tu)(zeta) = sum_k d_k zeta^{-(k+2)} for |zeta| > 1. Requires
/// |zeta| >= 1 + guard; no principal value is involved off-support.
Complex beurling_offsupport(std::span<const Complex> density, Complex zeta,
                            double guard = kDefaultGuard);

/// ||gamma||_{B2^1(C \ closed G)} through an exterior map psi of the
/// domain complement: with the derivative gamma' supplied,
///   norm^2 = iint_{|w|>1} |gamma'(psi(w))|^2 |psi'(w)|^2 dA(w),
/// computed in the inverted coordinate w = 1/s over the punctured unit
/// disk, where the pulled-back integrand stays bounded.
double b21_norm_exterior_quadrature(
    const std::function<Complex(Complex)>& dgamma, const ConformalMap& psi,
    const DiskQuadrature& rule);

}  // namespace bergman
