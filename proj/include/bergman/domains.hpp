#pragma once

#include <span>
#include <vector>

#include "bergman/common.hpp"

namespace bergman {

enum class MapKind { interior, exterior };

/// Explicit polynomial conformal map with a univalence certificate.
///
/// Interior: phi(z) = a_0 + sum_{k>=1} a_k z^k on the unit disk, admitted
/// when the strict coefficient criterion sum_{k>=2} k|a_k| < |a_1| holds.
/// Exterior: psi(zeta) = zeta + b_0 + sum_{k>=1} b_k zeta^{-k} on the disk
/// exterior, admitted when sum_{k>=1} k|b_k| < 1. The margin is the slack
/// in the criterion and is cached at construction.
class ConformalMap {
 public:
  /// Throws std::invalid_argument when the list is empty or the margin is
  /// not strictly positive (the computed margin is reported).
  static ConformalMap make(MapKind kind, std::vector<Complex> coeffs);

  MapKind kind() const { return kind_; }
  const std::vector<Complex>& coeffs() const { return coeffs_; }
  double margin() const { return margin_; }
  bool is_interior() const { return kind_ == MapKind::interior; }

  /// Interior criterion slack at radius r: |a_1| - sum_{k>=2} k|a_k| r^{k-1}.
  /// The map z -> phi(r z) is admissible iff this is > 0.
  double margin_at(double r) const;

  Complex evaluate(Complex z) const;
  Complex derivative(Complex z) const;

  /// Interior only: the map z -> phi(r z) with its own certificate.
  ConformalMap scaled(double r) const;

  /// M points phi(r e^{i theta_j}) at uniform angles. Interior maps
  /// require an admissible radius, exterior maps require r >= 1.
  std::vector<Complex> boundary_points(double r, int count) const;

  /// Interior only: area of phi(D) = pi sum_{k>=1} k |a_k|^2.
  double mapped_area() const;

  /// Exterior only: Newton solve of psi(w) = zeta for |w| > 1. Throws
  /// std::domain_error when the iteration leaves the exterior or stalls.
  Complex invert_exterior(Complex zeta) const;

 private:
  ConformalMap(MapKind kind, std::vector<Complex> coeffs, double margin)
      : kind_(kind), coeffs_(std::move(coeffs)), margin_(margin) {}

  MapKind kind_;
  std::vector<Complex> coeffs_;
  double margin_;
};

/// Level-curve exhaustion G_n = phi(r_n D) with r_n = 1 + delta 2^{-(n-1)}.
/// The radii decrease strictly to 1, each level map is certified
/// admissible, and the nesting of the analytic Jordan curves follows from
/// the construction.
class ExhaustionSequence {
 public:
  /// Throws std::invalid_argument if phi is not interior, not admissible
  /// at radius 1 + delta, or the counts are degenerate.
  ExhaustionSequence(ConformalMap base, int levels, double delta);

  int levels() const { return levels_; }
  double delta() const { return delta_; }
  const ConformalMap& base() const { return base_; }

  double radius(int n) const;  // n in [1, levels]
  ConformalMap level_map(int n) const;
  std::vector<Complex> level_boundary(int n, int count) const;

 private:
  ConformalMap base_;
  int levels_;
  double delta_;
};

/// Sampled arc-diameter-to-chord constant of a closed curve given in
/// cyclic order: max over sampled pairs (a, b) of
/// diam(smaller-arc point set) / |a - b|, where the smaller arc is the one
/// with fewer sample points (ties may take either). Throws
/// std::invalid_argument on fewer than 3 points or coincident points.
double quasicircle_constant(std::span<const Complex> points);

/// Winding number of a sampled closed curve about z (angle-sum form).
int winding_number(std::span<const Complex> curve, Complex z);

}  // namespace bergman
