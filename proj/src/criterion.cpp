#include "bergman/criterion.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace bergman {

namespace {

constexpr int kInsideTestSamples = 1024;

// Hermitian positive-definite solve by unpivoted Cholesky; returns false
// on a non-positive pivot. Sizes here are (degree+1) <= a few dozen.
bool cholesky_solve(std::vector<std::vector<Complex>>& a,
                    std::vector<Complex>& b) {
  const std::size_t n = a.size();
  for (std::size_t j = 0; j < n; ++j) {
    double d = a[j][j].real();
    for (std::size_t k = 0; k < j; ++k) d -= std::norm(a[j][k]);
    if (!(d > 0.0) || !std::isfinite(d)) return false;
    const double ljj = std::sqrt(d);
    a[j][j] = ljj;
    for (std::size_t i = j + 1; i < n; ++i) {
      Complex s = a[i][j];
      for (std::size_t k = 0; k < j; ++k) s -= a[i][k] * std::conj(a[j][k]);
      a[i][j] = s / ljj;
    }
  }
  // forward substitution L y = b
  for (std::size_t i = 0; i < n; ++i) {
    Complex s = b[i];
    for (std::size_t k = 0; k < i; ++k) s -= a[i][k] * b[k];
    b[i] = s / a[i][i].real();
  }
  // back substitution L^H x = y
  for (std::size_t i = n; i-- > 0;) {
    Complex s = b[i];
    for (std::size_t k = i + 1; k < n; ++k) s -= std::conj(a[k][i]) * b[k];
    b[i] = s / a[i][i].real();
  }
  return true;
}

double sup_of(const std::vector<RhoLevel>& levels) {
  double s = 0.0;
  for (const auto& l : levels) s = std::max(s, l.rho);
  return s;
}

bool all_within(const std::vector<RhoLevel>& levels, double ref, double tol_rel,
                double tol_abs) {
  for (const auto& l : levels) {
    if (!std::isfinite(l.rho)) return false;
    if (l.rho > ref * (1.0 + tol_rel) + tol_abs) return false;
  }
  return true;
}

}  // namespace

std::vector<RhoLevel> rho_sequence(const std::function<Complex(Complex)>& gamma,
                                   const ExhaustionSequence& ex, int samples,
                                   std::span<const Complex> poles,
                                   double guard) {
  if (samples < 2)
    throw std::invalid_argument("rho_sequence: samples >= 2 required");
  std::vector<RhoLevel> out;
  out.reserve(static_cast<std::size_t>(ex.levels()));
  for (int n = 1; n <= ex.levels(); ++n) {
    const auto pts = ex.level_boundary(n, samples);
    std::vector<Complex> values(pts.size());
    for (std::size_t j = 0; j < pts.size(); ++j) {
      for (const Complex& p : poles) {
        if (std::abs(pts[j] - p) < guard) {
          std::ostringstream msg;
          msg << "rho_sequence: pole within guard distance of a sample point "
                 "at level "
              << n;
          throw std::domain_error(msg.str());
        }
      }
      values[j] = gamma(pts[j]);
      if (!is_finite(values[j])) {
        std::ostringstream msg;
        msg << "rho_sequence: non-finite sample at level " << n;
        throw std::domain_error(msg.str());
      }
    }
    const double rho =
        rho_seminorm(BoundaryFunction::from_samples(std::move(values)));
    out.push_back({n, ex.radius(n), rho});
  }
  return out;
}

CriterionReport theorem1_bound_check(const CoefficientSeries& g,
                                     const ExhaustionSequence& ex,
                                     const DiskQuadrature& rule, int samples,
                                     double tol_rel, double tol_abs) {
  const PolynomialCauchyTransform kg(g, ex.base());
  CriterionReport report;
  report.gamma_desc = "K[g]";
  report.tol_rel = tol_rel;
  report.tol_abs = tol_abs;
  report.levels = rho_sequence([&](Complex z) { return kg(z); }, ex, samples);
  report.sup_rho = sup_of(report.levels);
  report.reference_norm = bergman_norm_on_domain(
      [&](Complex z) { return g.evaluate(z); }, ex.base(), rule);
  report.verdict =
      all_within(report.levels, report.reference_norm, tol_rel, tol_abs)
          ? Verdict::bounded
          : Verdict::inconclusive;
  return report;
}

InversionResult invert_cauchy(const LaurentTail& gamma, int degree) {
  if (degree < 0) throw std::invalid_argument("invert_cauchy: degree >= 0");
  if (gamma.center() != Complex{0.0, 0.0})
    throw std::invalid_argument(
        "invert_cauchy: diagonal inversion requires center 0");
  InversionResult result;
  std::vector<Complex> c(static_cast<std::size_t>(degree) + 1);
  for (int k = 0; k <= degree; ++k)
    c[static_cast<std::size_t>(k)] =
        -std::conj(gamma.coeff(static_cast<std::size_t>(k) + 1)) *
        static_cast<double>(k + 1);
  result.pullback = CoefficientSeries(std::move(c));
  // unmatched tail F_k, k > degree + 1
  std::vector<Complex> rest;
  for (std::size_t k = static_cast<std::size_t>(degree) + 2;
       k <= gamma.coeffs().size(); ++k)
    rest.push_back(gamma.coeff(k));
  if (rest.empty()) {
    result.residual = 0.0;
  } else {
    std::vector<Complex> shifted(static_cast<std::size_t>(degree) + 1,
                                 Complex{0.0, 0.0});
    shifted.insert(shifted.end(), rest.begin(), rest.end());
    result.residual =
        b21_exterior_norm(LaurentTail(Complex{0.0, 0.0}, std::move(shifted)));
  }
  return result;
}

InversionResult invert_cauchy(const std::function<Complex(Complex)>& gamma,
                              const ConformalMap& phi,
                              const InversionSettings& settings,
                              const DiskQuadrature& rule) {
  (void)rule;  // kept for interface parity with the quadrature-backed oracle
  if (settings.degree < 0)
    throw std::invalid_argument("invert_cauchy: degree >= 0");
  if (!phi.is_interior())
    throw std::invalid_argument("invert_cauchy: interior map required");
  const std::size_t ncoef = static_cast<std::size_t>(settings.degree) + 1;
  const std::size_t nring = 4 * ncoef;

  // Collocation points zeta_j = phi(R e^{i theta_j}); they must lie
  // outside the closed domain.
  std::vector<Complex> zeta(nring);
  for (std::size_t j = 0; j < nring; ++j)
    zeta[j] = phi.evaluate(
        std::polar(settings.ring_radius,
                   2.0 * kPi * static_cast<double>(j) / static_cast<double>(nring)));
  const auto curve = phi.boundary_points(1.0, kInsideTestSamples);
  for (const Complex& z : zeta)
    if (winding_number(curve, z) != 0)
      throw std::domain_error(
          "invert_cauchy: collocation ring intersects the closed domain");

  // A[j][k] = q_k(zeta_j) / (k+1); unknowns b_k = conj(h_k).
  std::vector<std::vector<Complex>> A(nring, std::vector<Complex>(ncoef));
  for (std::size_t j = 0; j < nring; ++j) {
    const auto& a = phi.coeffs();
    const Complex den0 = a[0] - zeta[j];
    std::vector<Complex> q(ncoef);
    for (std::size_t m = 0; m < ncoef; ++m) {
      Complex s = (m + 1 < a.size()) ? static_cast<double>(m + 1) * a[m + 1]
                                     : Complex{0.0, 0.0};
      const std::size_t imax = std::min(m, a.size() - 1);
      for (std::size_t i = 1; i <= imax; ++i) s -= a[i] * q[m - i];
      q[m] = s / den0;
    }
    for (std::size_t k = 0; k < ncoef; ++k)
      A[j][k] = q[k] / static_cast<double>(k + 1);
  }
  std::vector<Complex> y(nring);
  for (std::size_t j = 0; j < nring; ++j) {
    y[j] = gamma(zeta[j]);
    if (!is_finite(y[j]))
      throw std::domain_error("invert_cauchy: non-finite gamma on the ring");
  }

  // Column scaling keeps the Gram matrix well conditioned.
  std::vector<double> scale(ncoef, 0.0);
  for (std::size_t k = 0; k < ncoef; ++k) {
    CompensatedSum s;
    for (std::size_t j = 0; j < nring; ++j) s.add(std::norm(A[j][k]));
    scale[k] = std::sqrt(s.value());
    if (!(scale[k] > 0.0)) scale[k] = 1.0;
  }

  std::vector<std::vector<Complex>> gram(ncoef, std::vector<Complex>(ncoef));
  std::vector<Complex> rhs(ncoef);
  for (std::size_t p = 0; p < ncoef; ++p) {
    for (std::size_t q = 0; q <= p; ++q) {
      CompensatedComplexSum s;
      for (std::size_t j = 0; j < nring; ++j)
        s.add(std::conj(A[j][p]) * A[j][q]);
      gram[p][q] = s.value() / (scale[p] * scale[q]);
    }
    gram[p][p] += settings.regularization;
    CompensatedComplexSum s;
    for (std::size_t j = 0; j < nring; ++j) s.add(std::conj(A[j][p]) * y[j]);
    rhs[p] = s.value() / scale[p];
  }

  InversionResult result;
  double dmax = 0.0, dmin = std::numeric_limits<double>::infinity();
  for (std::size_t p = 0; p < ncoef; ++p) {
    dmax = std::max(dmax, gram[p][p].real());
    dmin = std::min(dmin, gram[p][p].real());
  }
  result.condition = dmin > 0.0 ? dmax / dmin : std::numeric_limits<double>::infinity();

  std::vector<Complex> b = rhs;
  result.rank_ok = cholesky_solve(gram, b);
  if (!result.rank_ok) {
    result.pullback = CoefficientSeries(std::vector<Complex>(ncoef));
    result.residual = std::numeric_limits<double>::quiet_NaN();
    return result;
  }
  for (std::size_t k = 0; k < ncoef; ++k) b[k] /= scale[k];

  CompensatedSum mismatch;
  for (std::size_t j = 0; j < nring; ++j) {
    CompensatedComplexSum fit;
    for (std::size_t k = 0; k < ncoef; ++k) fit.add(A[j][k] * b[k]);
    mismatch.add(std::norm(fit.value() - y[j]));
  }
  result.residual =
      std::sqrt(mismatch.value() / static_cast<double>(nring));

  std::vector<Complex> h(ncoef);
  for (std::size_t k = 0; k < ncoef; ++k) h[k] = std::conj(b[k]);
  result.pullback = CoefficientSeries(std::move(h));
  return result;
}

CriterionReport theorem2_membership(const LaurentTail& gamma,
                                    const ExhaustionSequence& ex,
                                    const DiskQuadrature& rule, int samples,
                                    const InversionSettings& settings,
                                    const ConformalMap* exterior,
                                    double tol_rel) {
  const ConformalMap& phi = ex.base();
  const auto curve = phi.boundary_points(1.0, kInsideTestSamples);
  double dist = std::numeric_limits<double>::infinity();
  for (const Complex& p : curve)
    dist = std::min(dist, std::abs(p - gamma.center()));
  if (winding_number(curve, gamma.center()) == 0 || dist < kDefaultGuard)
    throw std::invalid_argument(
        "theorem2_membership: center must lie strictly inside the domain");

  const bool identity_disk =
      phi.coeffs().size() == 2 && phi.coeffs()[0] == Complex{0.0, 0.0} &&
      phi.coeffs()[1] == Complex{1.0, 0.0} &&
      gamma.center() == Complex{0.0, 0.0};

  InversionResult inv =
      identity_disk
          ? invert_cauchy(gamma, settings.degree)
          : invert_cauchy([&](Complex z) { return gamma.evaluate(z); }, phi,
                          settings, rule);

  CriterionReport report;
  report.gamma_desc = "laurent-tail";
  report.tol_rel = tol_rel;
  report.tol_abs = 0.0;
  report.inversion_residual = inv.residual;
  const Complex pole = gamma.center();
  report.levels = rho_sequence([&](Complex z) { return gamma.evaluate(z); },
                               ex, samples, std::span<const Complex>(&pole, 1));
  report.sup_rho = sup_of(report.levels);
  report.reference_norm = b2_disk_norm(inv.pullback);
  if (exterior != nullptr) {
    report.gamma_norm = b21_norm_exterior_quadrature(
        [&](Complex z) { return gamma.derivative(z); }, *exterior, rule);
  } else if (identity_disk) {
    report.gamma_norm = b21_exterior_norm(gamma);
  }
  report.verdict =
      (inv.rank_ok &&
       all_within(report.levels, report.reference_norm, tol_rel, 0.0))
          ? Verdict::bounded
          : Verdict::inconclusive;
  return report;
}

Complex riesz_functional(const std::function<Complex(Complex)>& gamma,
                         const std::function<Complex(Complex)>& h,
                         const ExhaustionSequence& ex, int level, int samples) {
  if (samples < 2)
    throw std::invalid_argument("riesz_functional: samples >= 2 required");
  const double r = ex.radius(level);
  const ConformalMap& phi = ex.base();
  // (1/2 pi i) int gamma(phi(w)) h(phi(w)) phi'(w) i w dtheta, w = r e^{i theta}
  CompensatedComplexSum acc;
  for (int j = 0; j < samples; ++j) {
    const Complex w = std::polar(r, 2.0 * kPi * j / samples);
    const Complex xi = phi.evaluate(w);
    const Complex v = gamma(xi) * h(xi) * phi.derivative(w) * w;
    if (!is_finite(v))
      throw std::domain_error("riesz_functional: non-finite integrand sample");
    acc.add(v);
  }
  return acc.value() / static_cast<double>(samples);
}

}  // namespace bergman
