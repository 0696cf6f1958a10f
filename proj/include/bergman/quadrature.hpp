#pragma once

#include <functional>
#include <span>
#include <vector>

#include "bergman/common.hpp"

namespace bergman {

class ConformalMap;

/// Gauss-Legendre nodes and weights on [0, 1].
void gauss_legendre_01(int n, std::vector<double>& nodes,
                       std::vector<double>& weights);

/// Tensor rule for area integrals over the unit disk:
/// Gauss-Legendre in r on [0,1] with the polar Jacobian r folded into the
/// weights, uniform (trapezoid) in the angle. Nodes are stored
/// radial-major; integration always reduces in that fixed order.
class DiskQuadrature {
 public:
  static DiskQuadrature build(int n_radial, int n_angular);

  int n_radial() const { return n_radial_; }
  int n_angular() const { return n_angular_; }
  std::size_t size() const { return nodes_.size(); }
  std::span<const Complex> nodes() const { return nodes_; }
  std::span<const double> weights() const { return weights_; }
  double weight_sum() const;  // = pi up to roundoff

 private:
  DiskQuadrature(int nr, int na) : n_radial_(nr), n_angular_(na) {}
  int n_radial_;
  int n_angular_;
  std::vector<Complex> nodes_;
  std::vector<double> weights_;
};

/// Weighted sum of integrand values in fixed node order (compensated).
/// Throws std::domain_error on a non-finite integrand value, reporting
/// the offending node.
Complex integrate_disk(const DiskQuadrature& rule,
                       const std::function<Complex(Complex)>& integrand);

/// ||g||_{B2(G)} for G = phi(D) through the change of variables:
/// (iint_D |g(phi(w))|^2 |phi'(w)|^2 dA)^{1/2}.
double bergman_norm_on_domain(const std::function<Complex(Complex)>& g,
                              const ConformalMap& phi,
                              const DiskQuadrature& rule);

}  // namespace bergman
