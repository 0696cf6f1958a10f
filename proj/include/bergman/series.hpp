#pragma once

#include <vector>

#include "bergman/common.hpp"

namespace bergman {

/// Finite Taylor series g(z) = sum_{k=0}^{d} c_k z^k, the coefficient
/// representation of a Bergman-space element on the unit disk (or, pulled
/// through a conformal map, on its image). Trailing zeros are allowed and
/// do not affect evaluation or norms.
class CoefficientSeries {
 public:
  CoefficientSeries() = default;
  explicit CoefficientSeries(std::vector<Complex> coeffs)
      : coeffs_(std::move(coeffs)) {}

  const std::vector<Complex>& coeffs() const { return coeffs_; }
  std::size_t size() const { return coeffs_.size(); }
  Complex coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Complex{0.0, 0.0};
  }

  Complex evaluate(Complex z) const;

 private:
  std::vector<Complex> coeffs_;
};

/// Finite principal part gamma(zeta) = sum_{k=1}^{d} F_k (zeta - z0)^{-k},
/// analytic off a compact set and vanishing at infinity. There is no F_0
/// term. coeffs()[k-1] stores F_k.
class LaurentTail {
 public:
  LaurentTail() = default;
  LaurentTail(Complex center, std::vector<Complex> coeffs)
      : center_(center), coeffs_(std::move(coeffs)) {}

  Complex center() const { return center_; }
  const std::vector<Complex>& coeffs() const { return coeffs_; }
  Complex coeff(std::size_t k) const {  // F_k, k >= 1
    return (k >= 1 && k <= coeffs_.size()) ? coeffs_[k - 1] : Complex{0.0, 0.0};
  }

  /// Throws std::domain_error at the center (pole).
  Complex evaluate(Complex zeta) const;
  Complex derivative(Complex zeta) const;

 private:
  Complex center_{0.0, 0.0};
  std::vector<Complex> coeffs_;
};

/// A function on the unit circle held either as M uniform samples at
/// theta_j = 2 pi j / M or as Fourier modes f_k for -M/2 < k <= M/2.
/// Modes are stored in FFT layout: index m holds mode k = m for m <= M/2
/// and k = m - M otherwise.
class BoundaryFunction {
 public:
  enum class Rep { samples, modes };

  static BoundaryFunction from_samples(std::vector<Complex> values);
  static BoundaryFunction from_modes(std::vector<Complex> values);

  Rep rep() const { return rep_; }
  std::size_t grid_size() const { return values_.size(); }
  const std::vector<Complex>& values() const { return values_; }

  BoundaryFunction to_modes() const;
  BoundaryFunction to_samples() const;

  /// Mode f_k; valid in the modes representation for k in (-M/2, M/2].
  Complex mode(int k) const;
  int min_mode() const;  // -(M-1)/2
  int max_mode() const;  // M/2

  /// FFT-layout index of mode k.
  static std::size_t mode_index(int k, std::size_t grid);

 private:
  BoundaryFunction(Rep rep, std::vector<Complex> values)
      : rep_(rep), values_(std::move(values)) {}

  Rep rep_ = Rep::samples;
  std::vector<Complex> values_;
};

/// ||g||_{B2(D)} = (pi sum_{k>=0} |c_k|^2 / (k+1))^{1/2}.
double b2_disk_norm(const CoefficientSeries& g);

/// ||gamma||_{B2^1(C \ closed D)} = (pi sum_{k>=1} k |F_k|^2)^{1/2}.
/// Requires center 0; the coefficient formula holds only for the
/// unit-disk exterior.
double b21_exterior_norm(const LaurentTail& gamma);

/// rho(f) = (pi sum_{k>=1} k |f_{-k}|^2)^{1/2} over all resolvable
/// negative modes. Depends only on negative-index coefficients.
double rho_seminorm(const BoundaryFunction& f);

}  // namespace bergman
