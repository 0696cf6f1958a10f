#include "bergman/transforms.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace bergman {

namespace {

constexpr int kCheckCurveSamples = 1024;

// h(w) = g(phi(w)) phi'(w) as plain coefficient vectors.
std::vector<Complex> pullback_density(const std::vector<Complex>& g,
                                      const std::vector<Complex>& a) {
  // compose g with phi by Horner over polynomial arithmetic
  std::vector<Complex> comp{Complex{0.0, 0.0}};
  for (std::size_t i = g.size(); i-- > 0;) {
    // comp = comp * phi + g[i]
    std::vector<Complex> next(comp.size() + a.size() - 1, Complex{0.0, 0.0});
    for (std::size_t p = 0; p < comp.size(); ++p)
      for (std::size_t q = 0; q < a.size(); ++q) next[p + q] += comp[p] * a[q];
    next[0] += g[i];
    comp = std::move(next);
  }
  // multiply by phi'
  if (a.size() < 2) return std::vector<Complex>{Complex{0.0, 0.0}};
  std::vector<Complex> dphi(a.size() - 1);
  for (std::size_t k = 1; k < a.size(); ++k)
    dphi[k - 1] = static_cast<double>(k) * a[k];
  std::vector<Complex> h(comp.size() + dphi.size() - 1, Complex{0.0, 0.0});
  for (std::size_t p = 0; p < comp.size(); ++p)
    for (std::size_t q = 0; q < dphi.size(); ++q) h[p + q] += comp[p] * dphi[q];
  return h;
}

}  // namespace

LaurentTail cauchy_disk_series(const CoefficientSeries& g) {
  std::vector<Complex> f(g.size());
  for (std::size_t k = 0; k < g.size(); ++k)
    f[k] = -std::conj(g.coeff(k)) / static_cast<double>(k + 1);
  return LaurentTail(Complex{0.0, 0.0}, std::move(f));
}

PolynomialCauchyTransform::PolynomialCauchyTransform(pullback_tag,
                                                     CoefficientSeries pullback,
                                                     ConformalMap phi)
    : pullback_(std::move(pullback)),
      phi_(std::move(phi)),
      check_curve_(phi_.boundary_points(1.0, kCheckCurveSamples)) {
  if (!phi_.is_interior())
    throw std::invalid_argument(
        "PolynomialCauchyTransform: interior map required");
}

PolynomialCauchyTransform::PolynomialCauchyTransform(const CoefficientSeries& g,
                                                     const ConformalMap& phi)
    : PolynomialCauchyTransform(
          pullback_tag{},
          CoefficientSeries(pullback_density(g.coeffs(), phi.coeffs())), phi) {}

PolynomialCauchyTransform PolynomialCauchyTransform::from_pullback(
    CoefficientSeries pullback, const ConformalMap& phi) {
  return PolynomialCauchyTransform(pullback_tag{}, std::move(pullback), phi);
}

Complex PolynomialCauchyTransform::operator()(Complex zeta) const {
  if (winding_number(check_curve_, zeta) != 0)
    throw std::domain_error(
        "PolynomialCauchyTransform: zeta inside the closed domain");
  const auto& a = phi_.coeffs();
  const auto& h = pullback_.coeffs();
  if (h.empty()) return {0.0, 0.0};
  const Complex den0 = a[0] - zeta;
  // q = phi' / (phi - zeta) mod w^{deg h + 1} by power-series division
  std::vector<Complex> q(h.size());
  for (std::size_t m = 0; m < q.size(); ++m) {
    Complex s = (m + 1 < a.size()) ? static_cast<double>(m + 1) * a[m + 1]
                                   : Complex{0.0, 0.0};
    const std::size_t imax = std::min(m, a.size() - 1);
    for (std::size_t i = 1; i <= imax; ++i) s -= a[i] * q[m - i];
    q[m] = s / den0;
  }
  CompensatedComplexSum acc;
  for (std::size_t j = 0; j < h.size(); ++j)
    acc.add(std::conj(h[j]) * q[j] / static_cast<double>(j + 1));
  return acc.value();
}

namespace {

void require_clearance(const ConformalMap& phi, Complex zeta, double guard) {
  const auto collar = phi.boundary_points(1.0 + guard, kCheckCurveSamples);
  if (winding_number(collar, zeta) != 0) {
    std::ostringstream msg;
    msg << "cauchy_quadrature: zeta within guard distance " << guard
        << " of the domain";
    throw std::domain_error(msg.str());
  }
}

}  // namespace

Complex cauchy_quadrature(const std::function<Complex(Complex)>& g,
                          const ConformalMap& phi, Complex zeta,
                          const DiskQuadrature& rule, double guard) {
  if (!phi.is_interior())
    throw std::invalid_argument("cauchy_quadrature: interior map required");
  require_clearance(phi, zeta, guard);
  const Complex integral = integrate_disk(rule, [&](Complex w) -> Complex {
    const Complex pw = phi.evaluate(w);
    const Complex dpw = phi.derivative(w);
    return std::conj(g(pw)) * std::norm(dpw) / (pw - zeta);
  });
  return integral / kPi;
}

Complex cauchy_quadrature(const CoefficientSeries& pullback,
                          const ConformalMap& phi, Complex zeta,
                          const DiskQuadrature& rule, double guard) {
  if (!phi.is_interior())
    throw std::invalid_argument("cauchy_quadrature: interior map required");
  require_clearance(phi, zeta, guard);
  const Complex integral = integrate_disk(rule, [&](Complex w) -> Complex {
    return std::conj(pullback.evaluate(w)) * phi.derivative(w) /
           (phi.evaluate(w) - zeta);
  });
  return integral / kPi;
}

LaurentTail boundary_cauchy_integral(const BoundaryFunction& f) {
  const BoundaryFunction m = f.to_modes();
  std::vector<Complex> tail(static_cast<std::size_t>(-m.min_mode()));
  for (int k = 1; k <= -m.min_mode(); ++k)
    tail[static_cast<std::size_t>(k - 1)] = -m.mode(-k);
  if (tail.empty()) tail.assign(1, Complex{0.0, 0.0});
  return LaurentTail(Complex{0.0, 0.0}, std::move(tail));
}

Complex beurling_offsupport(std::span<const Complex> density, Complex zeta,
                            double guard) {
  if (std::abs(zeta) < 1.0 + guard) {
    std::ostringstream msg;
    msg << "beurling_offsupport: |zeta| = " << std::abs(zeta) << " < 1 + "
        << guard << " (on/near-support evaluation out of scope)";
    throw std::domain_error(msg.str());
  }
  const Complex u = 1.0 / zeta;
  Complex acc{0.0, 0.0};
  for (std::size_t i = density.size(); i-- > 0;) acc = acc * u + density[i];
  return acc * u * u;
}

double b21_norm_exterior_quadrature(
    const std::function<Complex(Complex)>& dgamma, const ConformalMap& psi,
    const DiskQuadrature& rule) {
  if (psi.kind() != MapKind::exterior)
    throw std::invalid_argument(
        "b21_norm_exterior_quadrature: exterior map required");
  // |(gamma o psi)'(1/s)|^2 / |s|^4, bounded as s -> 0 since gamma' decays
  // like zeta^{-2} at infinity.
  const Complex sq = integrate_disk(rule, [&](Complex s) -> Complex {
    const Complex w = 1.0 / s;
    const Complex v = dgamma(psi.evaluate(w)) * psi.derivative(w);
    return std::norm(v) / std::norm(s * s);
  });
  return std::sqrt(sq.real());
}

}  // namespace bergman
