#include "bergman/domains.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace bergman {

namespace {

double interior_margin_at(const std::vector<Complex>& a, double r) {
  if (a.size() < 2) return -0.0;
  CompensatedSum tail;
  double rpow = r;  // r^{k-1}
  for (std::size_t k = 2; k < a.size(); ++k) {
    tail.add(static_cast<double>(k) * std::abs(a[k]) * rpow);
    rpow *= r;
  }
  return std::abs(a[1]) - tail.value();
}

double exterior_margin(const std::vector<Complex>& b) {
  CompensatedSum tail;
  for (std::size_t k = 1; k < b.size(); ++k)
    tail.add(static_cast<double>(k) * std::abs(b[k]));
  return 1.0 - tail.value();
}

}  // namespace

ConformalMap ConformalMap::make(MapKind kind, std::vector<Complex> coeffs) {
  if (coeffs.empty())
    throw std::invalid_argument("ConformalMap: empty coefficient list");
  const double margin = kind == MapKind::interior
                            ? interior_margin_at(coeffs, 1.0)
                            : exterior_margin(coeffs);
  if (!(margin > 0.0)) {
    std::ostringstream msg;
    msg << "ConformalMap: univalence not certified (margin = " << margin
        << " <= 0)";
    throw std::invalid_argument(msg.str());
  }
  return ConformalMap(kind, std::move(coeffs), margin);
}

double ConformalMap::margin_at(double r) const {
  if (kind_ != MapKind::interior)
    throw std::logic_error("margin_at: interior maps only");
  return interior_margin_at(coeffs_, r);
}

Complex ConformalMap::evaluate(Complex z) const {
  if (kind_ == MapKind::interior) {
    Complex acc{0.0, 0.0};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
      acc = acc * z + *it;
    return acc;
  }
  // psi(zeta) = zeta + b_0 + sum b_k zeta^{-k}
  const Complex u = 1.0 / z;
  Complex acc{0.0, 0.0};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * u + *it;
  return z + acc;
}

Complex ConformalMap::derivative(Complex z) const {
  if (kind_ == MapKind::interior) {
    Complex acc{0.0, 0.0};
    for (std::size_t k = coeffs_.size(); k-- > 1;)
      acc = acc * z + static_cast<double>(k) * coeffs_[k];
    return acc;
  }
  // psi'(zeta) = 1 - sum k b_k zeta^{-k-1}
  const Complex u = 1.0 / z;
  Complex acc{0.0, 0.0};
  for (std::size_t k = coeffs_.size(); k-- > 1;)
    acc = (acc - static_cast<double>(k) * coeffs_[k]) * u;
  return 1.0 + acc * u;
}

ConformalMap ConformalMap::scaled(double r) const {
  if (kind_ != MapKind::interior)
    throw std::logic_error("scaled: interior maps only");
  if (!(margin_at(r) > 0.0)) {
    std::ostringstream msg;
    msg << "scaled: radius " << r << " violates the univalence criterion";
    throw std::invalid_argument(msg.str());
  }
  std::vector<Complex> c(coeffs_.size());
  double rpow = 1.0;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    c[k] = coeffs_[k] * rpow;
    rpow *= r;
  }
  return make(MapKind::interior, std::move(c));
}

std::vector<Complex> ConformalMap::boundary_points(double r, int count) const {
  if (count < 1) throw std::invalid_argument("boundary_points: count >= 1");
  if (kind_ == MapKind::interior) {
    if (!(margin_at(r) > 0.0)) {
      std::ostringstream msg;
      msg << "boundary_points: radius " << r << " not admissible";
      throw std::invalid_argument(msg.str());
    }
  } else if (r < 1.0) {
    throw std::invalid_argument("boundary_points: exterior maps need r >= 1");
  }
  std::vector<Complex> pts(count);
  for (int j = 0; j < count; ++j)
    pts[j] = evaluate(std::polar(r, 2.0 * kPi * j / count));
  return pts;
}

double ConformalMap::mapped_area() const {
  if (kind_ != MapKind::interior)
    throw std::logic_error("mapped_area: interior maps only");
  CompensatedSum acc;
  for (std::size_t k = 1; k < coeffs_.size(); ++k)
    acc.add(static_cast<double>(k) * std::norm(coeffs_[k]));
  return kPi * acc.value();
}

Complex ConformalMap::invert_exterior(Complex zeta) const {
  if (kind_ != MapKind::exterior)
    throw std::logic_error("invert_exterior: exterior maps only");
  Complex w = zeta - coeffs_[0];
  if (std::abs(w) <= 1.0) w = zeta;
  const double scale = std::max(1.0, std::abs(zeta));
  for (int iter = 0; iter < 64; ++iter) {
    const Complex f = evaluate(w) - zeta;
    if (std::abs(f) < 1e-15 * scale) break;
    const Complex dp = derivative(w);
    w -= f / dp;
    if (!is_finite(w) || std::abs(w) <= 1.0)
      throw std::domain_error(
          "invert_exterior: iterate left the disk exterior");
  }
  if (std::abs(evaluate(w) - zeta) > 1e-10 * scale)
    throw std::domain_error("invert_exterior: Newton iteration stalled");
  return w;
}

ExhaustionSequence::ExhaustionSequence(ConformalMap base, int levels,
                                       double delta)
    : base_(std::move(base)), levels_(levels), delta_(delta) {
  if (!base_.is_interior())
    throw std::invalid_argument("ExhaustionSequence: interior map required");
  if (levels_ < 1)
    throw std::invalid_argument("ExhaustionSequence: levels >= 1 required");
  if (!(delta_ > 0.0))
    throw std::invalid_argument("ExhaustionSequence: delta > 0 required");
  if (!(base_.margin_at(1.0 + delta_) > 0.0)) {
    std::ostringstream msg;
    msg << "ExhaustionSequence: map not admissible at radius " << 1.0 + delta_;
    throw std::invalid_argument(msg.str());
  }
}

double ExhaustionSequence::radius(int n) const {
  if (n < 1 || n > levels_)
    throw std::out_of_range("ExhaustionSequence: level out of range");
  return 1.0 + delta_ * std::ldexp(1.0, -(n - 1));
}

ConformalMap ExhaustionSequence::level_map(int n) const {
  return base_.scaled(radius(n));
}

std::vector<Complex> ExhaustionSequence::level_boundary(int n,
                                                        int count) const {
  return base_.boundary_points(radius(n), count);
}

double quasicircle_constant(std::span<const Complex> points) {
  const std::size_t m = points.size();
  if (m < 3)
    throw std::invalid_argument("quasicircle_constant: need >= 3 points");
  const std::size_t half = m / 2;
  double best_sq = 1.0;
  for (std::size_t i = 0; i < m; ++i) {
    double diam_sq = 0.0;
    for (std::size_t d = 1; d <= half; ++d) {
      const Complex pj = points[(i + d) % m];
      // grow the running arc diameter with the new endpoint
      for (std::size_t u = 0; u < d; ++u) {
        const double dd = std::norm(pj - points[(i + u) % m]);
        if (dd > diam_sq) diam_sq = dd;
      }
      const double chord_sq = std::norm(pj - points[i]);
      if (chord_sq == 0.0)
        throw std::invalid_argument("quasicircle_constant: coincident points");
      // forward arc holds d+1 samples, the complement m-d+1; at d = m/2
      // the tie may take either side.
      const double ratio_sq = diam_sq / chord_sq;
      if (ratio_sq > best_sq) best_sq = ratio_sq;
    }
  }
  return std::sqrt(best_sq);
}

int winding_number(std::span<const Complex> curve, Complex z) {
  CompensatedSum total;
  const std::size_t m = curve.size();
  for (std::size_t j = 0; j < m; ++j) {
    const Complex a = curve[j] - z;
    const Complex b = curve[(j + 1) % m] - z;
    total.add(std::arg(b / a));
  }
  return static_cast<int>(std::lround(total.value() / (2.0 * kPi)));
}

}  // namespace bergman
