#include "bergman/series.hpp"

#include <stdexcept>

#include "bergman/fourier.hpp"

namespace bergman {

Complex CoefficientSeries::evaluate(Complex z) const {
  Complex acc{0.0, 0.0};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * z + *it;
  return acc;
}

Complex LaurentTail::evaluate(Complex zeta) const {
  const Complex d = zeta - center_;
  if (d == Complex{0.0, 0.0})
    throw std::domain_error("LaurentTail: evaluation at the center (pole)");
  const Complex u = 1.0 / d;
  Complex acc{0.0, 0.0};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = (acc + *it) * u;
  return acc;
}

Complex LaurentTail::derivative(Complex zeta) const {
  const Complex d = zeta - center_;
  if (d == Complex{0.0, 0.0})
    throw std::domain_error("LaurentTail: evaluation at the center (pole)");
  const Complex u = 1.0 / d;
  // gamma'(zeta) = sum_k -k F_k (zeta - z0)^{-k-1}
  Complex acc{0.0, 0.0};
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const double k = static_cast<double>(i + 1);
    acc = (acc - k * coeffs_[i]) * u;
  }
  return acc * u;
}

BoundaryFunction BoundaryFunction::from_samples(std::vector<Complex> values) {
  if (values.size() < 2)
    throw std::invalid_argument("BoundaryFunction: need M >= 2");
  return BoundaryFunction(Rep::samples, std::move(values));
}

BoundaryFunction BoundaryFunction::from_modes(std::vector<Complex> values) {
  if (values.size() < 2)
    throw std::invalid_argument("BoundaryFunction: need M >= 2");
  return BoundaryFunction(Rep::modes, std::move(values));
}

BoundaryFunction BoundaryFunction::to_modes() const {
  if (rep_ == Rep::modes) return *this;
  return BoundaryFunction(Rep::modes, dft_forward(values_));
}

BoundaryFunction BoundaryFunction::to_samples() const {
  if (rep_ == Rep::samples) return *this;
  return BoundaryFunction(Rep::samples, dft_inverse(values_));
}

std::size_t BoundaryFunction::mode_index(int k, std::size_t grid) {
  const int m = static_cast<int>(grid);
  int idx = k % m;
  if (idx < 0) idx += m;
  return static_cast<std::size_t>(idx);
}

Complex BoundaryFunction::mode(int k) const {
  if (rep_ != Rep::modes)
    throw std::logic_error("BoundaryFunction::mode: convert to modes first");
  if (k < min_mode() || k > max_mode()) return {0.0, 0.0};
  return values_[mode_index(k, values_.size())];
}

int BoundaryFunction::min_mode() const {
  return -static_cast<int>((values_.size() - 1) / 2);
}

int BoundaryFunction::max_mode() const {
  return static_cast<int>(values_.size() / 2);
}

double b2_disk_norm(const CoefficientSeries& g) {
  CompensatedSum acc;
  const auto& c = g.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k)
    acc.add(std::norm(c[k]) / static_cast<double>(k + 1));
  return std::sqrt(kPi * acc.value());
}

double b21_exterior_norm(const LaurentTail& gamma) {
  if (gamma.center() != Complex{0.0, 0.0})
    throw std::invalid_argument(
        "b21_exterior_norm: coefficient formula requires center 0");
  CompensatedSum acc;
  const auto& f = gamma.coeffs();
  for (std::size_t i = 0; i < f.size(); ++i)
    acc.add(static_cast<double>(i + 1) * std::norm(f[i]));
  return std::sqrt(kPi * acc.value());
}

double rho_seminorm(const BoundaryFunction& f) {
  const BoundaryFunction m = f.to_modes();
  CompensatedSum acc;
  for (int k = 1; k <= -m.min_mode(); ++k)
    acc.add(static_cast<double>(k) * std::norm(m.mode(-k)));
  return std::sqrt(kPi * acc.value());
}

}  // namespace bergman
