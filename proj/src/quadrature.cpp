#include "bergman/quadrature.hpp"

#include <sstream>
#include <stdexcept>

#include "bergman/domains.hpp"

namespace bergman {

void gauss_legendre_01(int n, std::vector<double>& nodes,
                       std::vector<double>& weights) {
  if (n < 1) throw std::invalid_argument("gauss_legendre_01: n >= 1 required");
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    // Newton on P_n with the classical starting guess.
    double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      const double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) < 1e-15) break;
    }
    // map [-1,1] -> [0,1]
    nodes[i] = 0.5 * (1.0 - z);
    nodes[n - 1 - i] = 0.5 * (1.0 + z);
    const double w = 1.0 / ((1.0 - z * z) * pp * pp);
    weights[i] = w;
    weights[n - 1 - i] = w;
  }
}

DiskQuadrature DiskQuadrature::build(int n_radial, int n_angular) {
  if (n_radial < 1)
    throw std::invalid_argument("DiskQuadrature: n_radial >= 1 required");
  if (n_angular < 2)
    throw std::invalid_argument("DiskQuadrature: n_angular >= 2 required");
  DiskQuadrature rule(n_radial, n_angular);
  std::vector<double> x, w;
  gauss_legendre_01(n_radial, x, w);
  const double dtheta = 2.0 * kPi / n_angular;
  rule.nodes_.reserve(static_cast<std::size_t>(n_radial) * n_angular);
  rule.weights_.reserve(rule.nodes_.capacity());
  for (int i = 0; i < n_radial; ++i) {
    for (int j = 0; j < n_angular; ++j) {
      const double theta = dtheta * j;
      rule.nodes_.push_back(std::polar(x[i], theta));
      rule.weights_.push_back(w[i] * x[i] * dtheta);
    }
  }
  return rule;
}

double DiskQuadrature::weight_sum() const {
  CompensatedSum acc;
  for (double w : weights_) acc.add(w);
  return acc.value();
}

Complex integrate_disk(const DiskQuadrature& rule,
                       const std::function<Complex(Complex)>& integrand) {
  CompensatedComplexSum acc;
  const auto nodes = rule.nodes();
  const auto weights = rule.weights();
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const Complex v = integrand(nodes[i]);
    if (!is_finite(v)) {
      std::ostringstream msg;
      msg << "integrate_disk: non-finite integrand at node (" << nodes[i].real()
          << ", " << nodes[i].imag() << ")";
      throw std::domain_error(msg.str());
    }
    acc.add(weights[i] * v);
  }
  return acc.value();
}

double bergman_norm_on_domain(const std::function<Complex(Complex)>& g,
                              const ConformalMap& phi,
                              const DiskQuadrature& rule) {
  const Complex sq = integrate_disk(rule, [&](Complex w) -> Complex {
    const Complex gz = g(phi.evaluate(w));
    const Complex dp = phi.derivative(w);
    return std::norm(gz) * std::norm(dp);
  });
  return std::sqrt(sq.real());
}

}  // namespace bergman
