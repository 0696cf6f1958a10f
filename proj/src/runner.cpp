#include "bergman/runner.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

namespace bergman::cli {

std::uint64_t Rng::next() {
  // SplitMix64
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double Rng::uniform() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

Complex Rng::complex_box(double half_width) {
  const double re = uniform(-half_width, half_width);
  const double im = uniform(-half_width, half_width);
  return {re, im};
}

int Rng::uniform_int(int lo, int hi) {
  return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
}

std::vector<CatalogEntry> default_catalog() {
  std::vector<CatalogEntry> out;
  out.push_back({"disk",
                 ConformalMap::make(MapKind::interior, {{0.0, 0.0}, {1.0, 0.0}}),
                 std::nullopt});
  out.push_back({"quad_03",
                 ConformalMap::make(MapKind::interior,
                                    {{0.0, 0.0}, {1.0, 0.0}, {0.3, 0.0}}),
                 std::nullopt});
  out.push_back({"cubic_025",
                 ConformalMap::make(
                     MapKind::interior,
                     {{0.0, 0.0}, {1.0, 0.0}, {0.0, 0.0}, {0.25, 0.0}}),
                 std::nullopt});
  out.push_back({"joukowski_02",
                 ConformalMap::make(MapKind::exterior, {{0.0, 0.0}, {0.2, 0.0}}),
                 std::nullopt});
  return out;
}

RunConfig RunConfig::defaults() {
  RunConfig cfg;
  cfg.catalog = default_catalog();
  return cfg;
}

namespace {

const std::vector<std::string> kTheorem2Domains = {"disk", "quad_03"};

void reject_unknown_keys(const json& j, const std::set<std::string>& known,
                         const std::string& path) {
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (!known.count(key))
      throw std::invalid_argument("config: unknown key " + path + "/" + key);
  }
}

}  // namespace

RunConfig config_from_json(const json& j) {
  RunConfig cfg = RunConfig::defaults();
  if (!j.is_object())
    throw std::invalid_argument("config: top-level document must be an object");
  reject_unknown_keys(j,
                      {"seed", "levels", "delta", "samples", "guard",
                       "quadrature", "inversion", "tolerances", "catalog"},
                      "$");
  if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("levels")) cfg.levels = j.at("levels").get<int>();
  if (j.contains("delta")) cfg.delta = j.at("delta").get<double>();
  if (j.contains("samples")) cfg.samples = j.at("samples").get<int>();
  if (j.contains("guard")) cfg.guard = j.at("guard").get<double>();
  if (j.contains("quadrature")) {
    const json& q = j.at("quadrature");
    reject_unknown_keys(q, {"n_radial", "n_angular"}, "$/quadrature");
    if (q.contains("n_radial")) cfg.quadrature.n_radial = q.at("n_radial").get<int>();
    if (q.contains("n_angular"))
      cfg.quadrature.n_angular = q.at("n_angular").get<int>();
  }
  if (j.contains("inversion")) {
    const json& q = j.at("inversion");
    reject_unknown_keys(q,
                        {"degree", "ring_radius", "regularization",
                         "holdout_radius", "holdout_points"},
                        "$/inversion");
    if (q.contains("degree")) cfg.inversion.degree = q.at("degree").get<int>();
    if (q.contains("ring_radius"))
      cfg.inversion.ring_radius = q.at("ring_radius").get<double>();
    if (q.contains("regularization"))
      cfg.inversion.regularization = q.at("regularization").get<double>();
    if (q.contains("holdout_radius"))
      cfg.inversion.holdout_radius = q.at("holdout_radius").get<double>();
    if (q.contains("holdout_points"))
      cfg.inversion.holdout_points = q.at("holdout_points").get<int>();
  }
  if (j.contains("tolerances")) {
    const json& t = j.at("tolerances");
    reject_unknown_keys(
        t, {"lemma1_rel",          "isometry_coeff_rel", "isometry_quad_rel",
            "theorem1_rel",        "theorem1_abs",       "theorem1_spot_abs",
            "theorem2_rel",        "invert_residual",    "holdout_abs",
            "beurling_value_abs",  "beurling_norm_rel",
            "beurling_derivative_abs", "riesz_spread_abs", "riesz_kernel_abs"},
        "$/tolerances");
    auto get = [&](const char* key, double& into) {
      if (t.contains(key)) into = t.at(key).get<double>();
    };
    get("lemma1_rel", cfg.tol.lemma1_rel);
    get("isometry_coeff_rel", cfg.tol.isometry_coeff_rel);
    get("isometry_quad_rel", cfg.tol.isometry_quad_rel);
    get("theorem1_rel", cfg.tol.theorem1_rel);
    get("theorem1_abs", cfg.tol.theorem1_abs);
    get("theorem1_spot_abs", cfg.tol.theorem1_spot_abs);
    get("theorem2_rel", cfg.tol.theorem2_rel);
    get("invert_residual", cfg.tol.invert_residual);
    get("holdout_abs", cfg.tol.holdout_abs);
    get("beurling_value_abs", cfg.tol.beurling_value_abs);
    get("beurling_norm_rel", cfg.tol.beurling_norm_rel);
    get("beurling_derivative_abs", cfg.tol.beurling_derivative_abs);
    get("riesz_spread_abs", cfg.tol.riesz_spread_abs);
    get("riesz_kernel_abs", cfg.tol.riesz_kernel_abs);
  }
  if (j.contains("catalog")) cfg.catalog = catalog_from_json(j.at("catalog"));
  if (cfg.levels < 1) throw std::invalid_argument("config: levels >= 1");
  if (cfg.samples < 2) throw std::invalid_argument("config: samples >= 2");
  if (!(cfg.delta > 0.0)) throw std::invalid_argument("config: delta > 0");
  return cfg;
}

json config_to_json(const RunConfig& cfg) {
  return json{
      {"seed", cfg.seed},
      {"levels", cfg.levels},
      {"delta", cfg.delta},
      {"samples", cfg.samples},
      {"guard", cfg.guard},
      {"quadrature",
       {{"n_radial", cfg.quadrature.n_radial},
        {"n_angular", cfg.quadrature.n_angular}}},
      {"inversion",
       {{"degree", cfg.inversion.degree},
        {"ring_radius", cfg.inversion.ring_radius},
        {"regularization", cfg.inversion.regularization},
        {"holdout_radius", cfg.inversion.holdout_radius},
        {"holdout_points", cfg.inversion.holdout_points}}},
      {"tolerances",
       {{"lemma1_rel", cfg.tol.lemma1_rel},
        {"isometry_coeff_rel", cfg.tol.isometry_coeff_rel},
        {"isometry_quad_rel", cfg.tol.isometry_quad_rel},
        {"theorem1_rel", cfg.tol.theorem1_rel},
        {"theorem1_abs", cfg.tol.theorem1_abs},
        {"theorem1_spot_abs", cfg.tol.theorem1_spot_abs},
        {"theorem2_rel", cfg.tol.theorem2_rel},
        {"invert_residual", cfg.tol.invert_residual},
        {"holdout_abs", cfg.tol.holdout_abs},
        {"beurling_value_abs", cfg.tol.beurling_value_abs},
        {"beurling_norm_rel", cfg.tol.beurling_norm_rel},
        {"beurling_derivative_abs", cfg.tol.beurling_derivative_abs},
        {"riesz_spread_abs", cfg.tol.riesz_spread_abs},
        {"riesz_kernel_abs", cfg.tol.riesz_kernel_abs}}},
      {"catalog", catalog_to_json(cfg.catalog)}};
}

namespace {

ConformalMap identity_map() {
  return ConformalMap::make(MapKind::interior, {{0.0, 0.0}, {1.0, 0.0}});
}

bool is_identity(const ConformalMap& m) {
  return m.is_interior() && m.coeffs().size() == 2 &&
         m.coeffs()[0] == Complex{0.0, 0.0} &&
         m.coeffs()[1] == Complex{1.0, 0.0};
}

void note_failure(SuiteResult& result, const std::string& what) {
  if (result.first_failure.empty()) result.first_failure = what;
  result.pass = false;
}

json base_report(const std::string& suite, const RunConfig& cfg) {
  return json{{"suite", suite}, {"config", config_to_json(cfg)}};
}

// ---------------------------------------------------------------------------
// verify-lemma1

SuiteResult run_lemma1(const RunConfig& cfg) {
  SuiteResult result;
  result.name = "verify-lemma1";
  result.pass = true;
  Rng rng(cfg.seed);
  const std::size_t grid = static_cast<std::size_t>(cfg.samples);

  CsvWriter csv({"trial", "degree", "rho", "b21_norm", "rel_err", "pass"});
  json rows = json::array();
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const int degree = rng.uniform_int(1, 32);
    std::vector<Complex> modes(grid, Complex{0.0, 0.0});
    for (int k = -degree; k <= degree; ++k)
      modes[BoundaryFunction::mode_index(k, grid)] = rng.complex_box(1.0);
    // keep the negative spectrum well away from zero so the relative
    // tolerance is meaningful
    modes[BoundaryFunction::mode_index(-degree, grid)] =
        std::polar(rng.uniform(1.0, 2.0), 2.0 * kPi * rng.uniform());

    const BoundaryFunction f = BoundaryFunction::from_modes(modes);
    const double rho = rho_seminorm(f.to_samples());
    const double norm = b21_exterior_norm(boundary_cauchy_integral(f));
    const double rel = std::abs(rho - norm) / rho;
    const bool ok = rel <= cfg.tol.lemma1_rel;
    worst = std::max(worst, rel);
    if (!ok) {
      std::ostringstream msg;
      msg << "verify-lemma1: trial " << trial << " rel_err " << rel;
      note_failure(result, msg.str());
    }
    csv.add_row({csv_int(trial), csv_int(degree), csv_double(rho),
                 csv_double(norm), csv_double(rel), csv_bool(ok)});
    rows.push_back(json{{"trial", trial},
                        {"degree", degree},
                        {"rho", rho},
                        {"b21_norm", norm},
                        {"rel_err", rel},
                        {"pass", ok}});
  }
  result.csv = csv.str();
  result.report = base_report(result.name, cfg);
  result.report["rows"] = rows;
  result.report["summary"] = json{{"max_rel_err", worst}};
  result.report["pass"] = result.pass;
  return result;
}

// ---------------------------------------------------------------------------
// verify-disk-isometry

SuiteResult run_disk_isometry(const RunConfig& cfg) {
  SuiteResult result;
  result.name = "verify-disk-isometry";
  result.pass = true;
  Rng rng(cfg.seed);
  const ConformalMap disk = identity_map();
  const DiskQuadrature rule =
      DiskQuadrature::build(cfg.quadrature.n_radial, cfg.quadrature.n_angular);

  CsvWriter csv({"trial", "degree", "g_norm", "kg_norm", "coeff_rel_err",
                 "quad_norm", "quad_rel_err", "pass"});
  json rows = json::array();
  double worst_coeff = 0.0, worst_quad = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const int degree = rng.uniform_int(0, 16);
    std::vector<Complex> c(static_cast<std::size_t>(degree) + 1);
    for (auto& v : c) v = rng.complex_box(1.0);
    c.back() = std::polar(rng.uniform(0.5, 1.5), 2.0 * kPi * rng.uniform());
    const CoefficientSeries g(std::move(c));

    const double gnorm = b2_disk_norm(g);
    const double kgnorm = b21_exterior_norm(cauchy_disk_series(g));
    const double coeff_rel = std::abs(kgnorm - gnorm) / gnorm;
    const double qnorm = bergman_norm_on_domain(
        [&](Complex z) { return g.evaluate(z); }, disk, rule);
    const double quad_rel = std::abs(qnorm - gnorm) / gnorm;
    const bool ok = coeff_rel <= cfg.tol.isometry_coeff_rel &&
                    quad_rel <= cfg.tol.isometry_quad_rel;
    worst_coeff = std::max(worst_coeff, coeff_rel);
    worst_quad = std::max(worst_quad, quad_rel);
    if (!ok) {
      std::ostringstream msg;
      msg << "verify-disk-isometry: trial " << trial << " coeff_rel "
          << coeff_rel << " quad_rel " << quad_rel;
      note_failure(result, msg.str());
    }
    csv.add_row({csv_int(trial), csv_int(degree), csv_double(gnorm),
                 csv_double(kgnorm), csv_double(coeff_rel), csv_double(qnorm),
                 csv_double(quad_rel), csv_bool(ok)});
    rows.push_back(json{{"trial", trial},
                        {"degree", degree},
                        {"g_norm", gnorm},
                        {"kg_norm", kgnorm},
                        {"coeff_rel_err", coeff_rel},
                        {"quad_norm", qnorm},
                        {"quad_rel_err", quad_rel},
                        {"pass", ok}});
  }
  result.csv = csv.str();
  result.report = base_report(result.name, cfg);
  result.report["rows"] = rows;
  result.report["summary"] = json{{"max_coeff_rel_err", worst_coeff},
                                  {"max_quad_rel_err", worst_quad}};
  result.report["pass"] = result.pass;
  return result;
}

// ---------------------------------------------------------------------------
// theorem1

SuiteResult run_theorem1(const RunConfig& cfg) {
  SuiteResult result;
  result.name = "theorem1";
  result.pass = true;
  const DiskQuadrature rule =
      DiskQuadrature::build(cfg.quadrature.n_radial, cfg.quadrature.n_angular);

  auto monomial = [](std::size_t k) {
    std::vector<Complex> c(k + 1, Complex{0.0, 0.0});
    c[k] = {1.0, 0.0};
    return CoefficientSeries(std::move(c));
  };
  const std::vector<std::pair<std::string, CoefficientSeries>> test_g = {
      {"1", monomial(0)},
      {"z", monomial(1)},
      {"z^2", monomial(2)},
      {"z^3", monomial(3)}};

  CsvWriter csv(
      {"domain", "g", "n", "r_n", "rho_n", "ref_norm", "ratio", "pass"});
  json reports = json::array();
  double spot_max_err = 0.0;
  for (const auto& entry : cfg.catalog) {
    if (!entry.map.is_interior()) continue;
    const double delta = entry.delta.value_or(cfg.delta);
    const ExhaustionSequence ex(entry.map, cfg.levels, delta);
    for (const auto& [gname, g] : test_g) {
      CriterionReport rep = theorem1_bound_check(
          g, ex, rule, cfg.samples, cfg.tol.theorem1_rel, cfg.tol.theorem1_abs);
      rep.domain = entry.name;
      rep.gamma_desc = "K[" + gname + "]";
      const double bound = rep.reference_norm * (1.0 + cfg.tol.theorem1_rel) +
                           cfg.tol.theorem1_abs;
      for (const auto& lvl : rep.levels) {
        const bool ok = std::isfinite(lvl.rho) && lvl.rho <= bound;
        const double ratio =
            rep.reference_norm > 0.0 ? lvl.rho / rep.reference_norm : 0.0;
        if (!ok) {
          std::ostringstream msg;
          msg << "theorem1: domain=" << entry.name << " g=" << gname
              << " n=" << lvl.level << " rho=" << lvl.rho << " > bound="
              << bound;
          note_failure(result, msg.str());
        }
        csv.add_row({entry.name, gname, csv_int(lvl.level),
                     csv_double(lvl.radius), csv_double(lvl.rho),
                     csv_double(rep.reference_norm), csv_double(ratio),
                     csv_bool(ok)});
        // closed-form spot check: identity domain, g = z
        if (is_identity(entry.map) && gname == "z") {
          const double expected =
              std::sqrt(kPi / 2.0) / (lvl.radius * lvl.radius);
          const double err = std::abs(lvl.rho - expected);
          spot_max_err = std::max(spot_max_err, err);
          if (err > cfg.tol.theorem1_spot_abs) {
            std::ostringstream msg;
            msg << "theorem1: closed-form spot check n=" << lvl.level
                << " err=" << err;
            note_failure(result, msg.str());
          }
        }
      }
      if (rep.verdict != Verdict::bounded) {
        note_failure(result, "theorem1: verdict not bounded for domain=" +
                                 entry.name + " g=" + gname);
      }
      reports.push_back(to_json(rep));
    }
  }
  result.csv = csv.str();
  result.report = base_report(result.name, cfg);
  result.report["reports"] = reports;
  result.report["summary"] = json{{"spot_check_max_err", spot_max_err}};
  result.report["pass"] = result.pass;
  return result;
}

// ---------------------------------------------------------------------------
// theorem2

SuiteResult run_theorem2(const RunConfig& cfg) {
  SuiteResult result;
  result.name = "theorem2";
  result.pass = true;
  const DiskQuadrature rule =
      DiskQuadrature::build(cfg.quadrature.n_radial, cfg.quadrature.n_angular);
  const DiskQuadrature refined = DiskQuadrature::build(
      cfg.quadrature.n_radial * 3 / 2, cfg.quadrature.n_angular * 2);

  InversionSettings settings;
  settings.degree = cfg.inversion.degree;
  settings.ring_radius = cfg.inversion.ring_radius;
  settings.regularization = cfg.inversion.regularization;

  CsvWriter csv({"domain", "gamma", "n", "r_n", "rho_n", "ref_norm", "ratio",
                 "residual", "pass"});
  json reports = json::array();
  json domains = json::array();

  for (const std::string& domain_name : kTheorem2Domains) {
    const CatalogEntry* entry = nullptr;
    for (const auto& e : cfg.catalog)
      if (e.name == domain_name && e.map.is_interior()) entry = &e;
    if (entry == nullptr) {
      note_failure(result,
                   "theorem2: catalog entry not found: " + domain_name);
      continue;
    }
    const double delta = entry->delta.value_or(cfg.delta);
    const ExhaustionSequence ex(entry->map, cfg.levels, delta);

    // Definition-2 certificate for the domain boundary.
    const auto boundary = entry->map.boundary_points(1.0, 512);
    const double qc = quasicircle_constant(boundary);
    domains.push_back(
        json{{"domain", entry->name}, {"quasicircle_constant", qc}});

    std::vector<std::pair<std::string, LaurentTail>> gammas;
    if (is_identity(entry->map)) {
      gammas.emplace_back("1/z", LaurentTail({0.0, 0.0}, {{1.0, 0.0}}));
    } else {
      gammas.emplace_back("1/(z-0.1)",
                          LaurentTail({0.1, 0.0}, {{1.0, 0.0}}));
      gammas.emplace_back("1/(z-0.1)^2",
                          LaurentTail({0.1, 0.0}, {{0.0, 0.0}, {1.0, 0.0}}));
      gammas.emplace_back(
          "mixed-tail",
          LaurentTail({0.1, 0.0}, {{1.0, 0.0}, {-0.5, 0.0}, {0.25, 0.0}}));
    }

    for (const auto& [gname, gamma] : gammas) {
      CriterionReport rep = theorem2_membership(gamma, ex, rule, cfg.samples,
                                                settings, nullptr,
                                                cfg.tol.theorem2_rel);
      rep.domain = entry->name;
      rep.gamma_desc = gname;

      // held-out evaluation of K ghat against gamma via the quadrature
      // oracle on a verified-exterior ring
      InversionResult inv =
          is_identity(entry->map) && gamma.center() == Complex{0.0, 0.0}
              ? invert_cauchy(gamma, settings.degree)
              : invert_cauchy(
                    [&](Complex z) { return gamma.evaluate(z); }, entry->map,
                    settings, rule);
      double holdout_max = 0.0;
      const auto curve = entry->map.boundary_points(1.0, 1024);
      for (int j = 0; j < cfg.inversion.holdout_points; ++j) {
        const Complex w = std::polar(
            cfg.inversion.holdout_radius,
            2.0 * kPi * (j + 0.5) / cfg.inversion.holdout_points);
        const Complex zeta = entry->map.evaluate(w);
        if (winding_number(curve, zeta) != 0) {
          note_failure(result, "theorem2: held-out point inside domain " +
                                   entry->name);
          continue;
        }
        const Complex fitted =
            cauchy_quadrature(inv.pullback, entry->map, zeta, refined, cfg.guard);
        holdout_max =
            std::max(holdout_max, std::abs(fitted - gamma.evaluate(zeta)));
      }

      const bool residual_ok = inv.rank_ok &&
                               rep.inversion_residual <= cfg.tol.invert_residual;
      const bool holdout_ok = holdout_max <= cfg.tol.holdout_abs;
      if (!residual_ok) {
        std::ostringstream msg;
        msg << "theorem2: residual " << rep.inversion_residual
            << " over tolerance for domain=" << entry->name << " gamma="
            << gname;
        note_failure(result, msg.str());
      }
      if (!holdout_ok) {
        std::ostringstream msg;
        msg << "theorem2: holdout error " << holdout_max
            << " over tolerance for domain=" << entry->name << " gamma="
            << gname;
        note_failure(result, msg.str());
      }

      const double bound = rep.reference_norm * (1.0 + cfg.tol.theorem2_rel);
      for (const auto& lvl : rep.levels) {
        const bool ok = std::isfinite(lvl.rho) && lvl.rho <= bound &&
                        residual_ok && holdout_ok;
        const double ratio =
            rep.reference_norm > 0.0 ? lvl.rho / rep.reference_norm : 0.0;
        if (std::isfinite(lvl.rho) && lvl.rho > bound) {
          std::ostringstream msg;
          msg << "theorem2: domain=" << entry->name << " gamma=" << gname
              << " n=" << lvl.level << " rho=" << lvl.rho << " > bound="
              << bound;
          note_failure(result, msg.str());
        }
        csv.add_row({entry->name, gname, csv_int(lvl.level),
                     csv_double(lvl.radius), csv_double(lvl.rho),
                     csv_double(rep.reference_norm), csv_double(ratio),
                     csv_double(rep.inversion_residual), csv_bool(ok)});
      }
      if (rep.verdict != Verdict::bounded)
        note_failure(result, "theorem2: verdict not bounded for domain=" +
                                 entry->name + " gamma=" + gname);
      json rj = to_json(rep);
      rj["holdout_max_err"] = holdout_max;
      reports.push_back(std::move(rj));
    }
  }
  result.csv = csv.str();
  result.report = base_report(result.name, cfg);
  result.report["reports"] = reports;
  result.report["domains"] = domains;
  result.report["pass"] = result.pass;
  return result;
}

// ---------------------------------------------------------------------------
// beurling

SuiteResult run_beurling(const RunConfig& cfg) {
  SuiteResult result;
  result.name = "beurling";
  result.pass = true;
  const DiskQuadrature rule =
      DiskQuadrature::build(cfg.quadrature.n_radial, cfg.quadrature.n_angular);
  const ConformalMap disk = identity_map();
  Rng rng(cfg.seed);

  CsvWriter csv({"check", "k", "zeta_re", "zeta_im", "lhs_re", "lhs_im",
                 "rhs_re", "rhs_im", "err", "pass"});
  json rows = json::array();

  auto emit = [&](const std::string& check, int k, Complex zeta, Complex lhs,
                  Complex rhs, double err, double tol) {
    const bool ok = err <= tol;
    if (!ok) {
      std::ostringstream msg;
      msg << "beurling: " << check << " k=" << k << " err=" << err;
      note_failure(result, msg.str());
    }
    csv.add_row({check, csv_int(k), csv_double(zeta.real()),
                 csv_double(zeta.imag()), csv_double(lhs.real()),
                 csv_double(lhs.imag()), csv_double(rhs.real()),
                 csv_double(rhs.imag()), csv_double(err), csv_bool(ok)});
    rows.push_back(json{{"check", check},
                        {"k", k},
                        {"zeta", complex_to_json(zeta)},
                        {"lhs", complex_to_json(lhs)},
                        {"rhs", complex_to_json(rhs)},
                        {"err", err},
                        {"pass", ok}});
  };

  // series values against the quadrature oracle (1/pi) iint zbar^k/(z-zeta)^2
  for (int k = 0; k <= 8; ++k) {
    std::vector<Complex> density(static_cast<std::size_t>(k) + 1,
                                 Complex{0.0, 0.0});
    density.back() = {1.0, 0.0};
    int angle_idx = 0;
    for (double radius : {1.5, 2.0, 5.0}) {
      const Complex zeta =
          std::polar(radius, 0.35 + 2.0 * kPi * angle_idx / 3.0);
      ++angle_idx;
      const Complex series = beurling_offsupport(density, zeta, cfg.guard);
      const Complex oracle =
          integrate_disk(rule,
                         [&](Complex z) -> Complex {
                           const Complex zb = std::conj(z);
                           Complex p{1.0, 0.0};
                           for (int i = 0; i < k; ++i) p *= zb;
                           return p / ((z - zeta) * (z - zeta));
                         }) /
          kPi;
      emit("value", k, zeta, series, oracle, std::abs(series - oracle),
           cfg.tol.beurling_value_abs);
    }

    // norm bookkeeping: ||zbar^k||^2_{L2(D)} = pi/(k+1) and the same mass
    // for the transform over the exterior (inverted coordinates)
    const double target = kPi / static_cast<double>(k + 1);
    const double lhs =
        integrate_disk(rule,
                       [&](Complex z) -> Complex {
                         return std::pow(std::norm(z), k);
                       })
            .real();
    const double rhs =
        integrate_disk(rule,
                       [&](Complex s) -> Complex {
                         const Complex v =
                             beurling_offsupport(density, 1.0 / s, 0.0);
                         return std::norm(v) / std::norm(s * s);
                       })
            .real();
    const double err = std::max(std::abs(lhs - target), std::abs(rhs - target)) /
                       target;
    emit("norm", k, Complex{0.0, 0.0}, Complex{lhs, 0.0}, Complex{rhs, 0.0},
         err, cfg.tol.beurling_norm_rel);
  }

  // finite-difference derivative relation F' = T(conj density), identity map
  {
    std::vector<CoefficientSeries> gs;
    gs.emplace_back(std::vector<Complex>{{0.0, 0.0}, {0.0, 0.0}, {1.0, 0.0}});
    std::vector<Complex> c(5);
    for (auto& v : c) v = rng.complex_box(1.0);
    gs.emplace_back(std::move(c));
    int gi = 0;
    for (const auto& g : gs) {
      std::vector<Complex> density(g.size());
      for (std::size_t i = 0; i < g.size(); ++i)
        density[i] = std::conj(g.coeff(i));
      for (Complex zeta : {Complex{2.0, 0.0}, Complex{1.5, 1.5}}) {
        const double h = 1e-4;
        const Complex fp = cauchy_quadrature(
            [&](Complex z) { return g.evaluate(z); }, disk, zeta + h, rule,
            cfg.guard);
        const Complex fm = cauchy_quadrature(
            [&](Complex z) { return g.evaluate(z); }, disk, zeta - h, rule,
            cfg.guard);
        const Complex fd = (fp - fm) / (2.0 * h);
        const Complex series = beurling_offsupport(density, zeta, cfg.guard);
        emit("derivative", gi, zeta, fd, series, std::abs(fd - series),
             cfg.tol.beurling_derivative_abs);
      }
      ++gi;
    }
  }

  result.csv = csv.str();
  result.report = base_report(result.name, cfg);
  result.report["rows"] = rows;
  result.report["pass"] = result.pass;
  return result;
}

// ---------------------------------------------------------------------------
// riesz

SuiteResult run_riesz(const RunConfig& cfg) {
  SuiteResult result;
  result.name = "riesz";
  result.pass = true;

  CsvWriter csv({"domain", "gamma", "h", "check", "index", "value_re",
                 "value_im", "ref_re", "ref_im", "err", "pass"});
  json rows = json::array();

  auto emit = [&](const std::string& domain, const std::string& gname,
                  const std::string& hname, const std::string& check,
                  int index, Complex value, Complex ref, double err,
                  double tol) {
    const bool ok = err <= tol;
    if (!ok) {
      std::ostringstream msg;
      msg << "riesz: " << check << " domain=" << domain << " gamma=" << gname
          << " h=" << hname << " err=" << err;
      note_failure(result, msg.str());
    }
    csv.add_row({domain, gname, hname, check, csv_int(index),
                 csv_double(value.real()), csv_double(value.imag()),
                 csv_double(ref.real()), csv_double(ref.imag()),
                 csv_double(err), csv_bool(ok)});
    rows.push_back(json{{"domain", domain},
                        {"gamma", gname},
                        {"h", hname},
                        {"check", check},
                        {"index", index},
                        {"value", complex_to_json(value)},
                        {"ref", complex_to_json(ref)},
                        {"err", err},
                        {"pass", ok}});
  };

  struct Experiment {
    std::string domain;
    LaurentTail gamma;
    std::string gamma_name;
    std::function<Complex(Complex)> h;
    std::string h_name;
    Complex expected;  // residue-calculus value
  };

  const CatalogEntry* disk_entry = nullptr;
  const CatalogEntry* quad_entry = nullptr;
  for (const auto& e : cfg.catalog) {
    if (!e.map.is_interior()) continue;
    if (is_identity(e.map) && disk_entry == nullptr) disk_entry = &e;
    if (!is_identity(e.map) && quad_entry == nullptr) quad_entry = &e;
  }
  if (disk_entry == nullptr || quad_entry == nullptr) {
    note_failure(result, "riesz: catalog needs an identity and a non-identity "
                         "interior map");
    result.report = base_report(result.name, cfg);
    result.report["rows"] = rows;
    result.report["pass"] = result.pass;
    result.csv = csv.str();
    return result;
  }

  const LaurentTail inv_z({0.0, 0.0}, {{1.0, 0.0}});
  const LaurentTail inv_z01({0.1, 0.0}, {{1.0, 0.0}});
  std::vector<Experiment> experiments;
  experiments.push_back({disk_entry->name, inv_z, "1/z",
                         [](Complex) { return Complex{1.0, 0.0}; }, "1",
                         {1.0, 0.0}});
  experiments.push_back({disk_entry->name, inv_z, "1/z",
                         [](Complex z) { return 1.0 / (z - 2.0); }, "1/(z-2)",
                         {-0.5, 0.0}});
  experiments.push_back({quad_entry->name, inv_z01, "1/(z-0.1)",
                         [](Complex) { return Complex{1.0, 0.0}; }, "1",
                         {1.0, 0.0}});
  experiments.push_back({quad_entry->name, inv_z01, "1/(z-0.1)",
                         [](Complex z) { return z * z; }, "z^2",
                         {0.01, 0.0}});

  const int spread_levels = std::min(4, cfg.levels);
  for (const auto& exp : experiments) {
    const CatalogEntry& entry =
        exp.domain == disk_entry->name ? *disk_entry : *quad_entry;
    const ExhaustionSequence ex(entry.map, cfg.levels,
                                entry.delta.value_or(cfg.delta));
    std::vector<Complex> values;
    for (int n = 1; n <= spread_levels; ++n) {
      const Complex v = riesz_functional(
          [&](Complex z) { return exp.gamma.evaluate(z); }, exp.h, ex, n,
          cfg.samples);
      values.push_back(v);
      emit(exp.domain, exp.gamma_name, exp.h_name, "level", n, v, exp.expected,
           std::abs(v - exp.expected), cfg.tol.riesz_kernel_abs);
    }
    double spread = 0.0;
    for (const Complex& a : values)
      for (const Complex& b : values)
        spread = std::max(spread, std::abs(a - b));
    emit(exp.domain, exp.gamma_name, exp.h_name, "spread", 0,
         Complex{spread, 0.0}, Complex{0.0, 0.0}, spread,
         cfg.tol.riesz_spread_abs);
  }

  // kernel identity F(1/(z - zeta0)) = -gamma(zeta0) on a 16-point ring
  // outside the first level curve
  for (const auto* entry : {disk_entry, quad_entry}) {
    const ExhaustionSequence ex(entry->map, cfg.levels,
                                entry->delta.value_or(cfg.delta));
    const LaurentTail& gamma = is_identity(entry->map) ? inv_z : inv_z01;
    const std::string gname = is_identity(entry->map) ? "1/z" : "1/(z-0.1)";
    for (int j = 0; j < 16; ++j) {
      const Complex w = std::polar(2.0, 2.0 * kPi * (j + 0.5) / 16.0);
      const Complex zeta0 = entry->map.evaluate(w);
      const Complex v = riesz_functional(
          [&](Complex z) { return gamma.evaluate(z); },
          [&](Complex z) { return 1.0 / (z - zeta0); }, ex, 2, cfg.samples);
      const Complex ref = -gamma.evaluate(zeta0);
      emit(entry->name, gname, "cauchy-kernel", "kernel", j, v, ref,
           std::abs(v - ref), cfg.tol.riesz_kernel_abs);
    }
  }

  result.csv = csv.str();
  result.report = base_report(result.name, cfg);
  result.report["rows"] = rows;
  result.report["pass"] = result.pass;
  return result;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "verify-lemma1", "verify-disk-isometry", "theorem1",
      "theorem2",      "beurling",             "riesz"};
  return names;
}

SuiteResult run_suite(const std::string& name, const RunConfig& cfg) {
  if (name == "verify-lemma1") return run_lemma1(cfg);
  if (name == "verify-disk-isometry") return run_disk_isometry(cfg);
  if (name == "theorem1") return run_theorem1(cfg);
  if (name == "theorem2") return run_theorem2(cfg);
  if (name == "beurling") return run_beurling(cfg);
  if (name == "riesz") return run_riesz(cfg);
  throw std::invalid_argument("unknown suite: " + name);
}

void write_reports(const SuiteResult& result,
                   const std::filesystem::path& out_dir) {
  write_file_atomic(out_dir / (result.name + ".csv"), result.csv);
  write_file_atomic(out_dir / (result.name + ".json"),
                    result.report.dump(2) + "\n");
}

}  // namespace bergman::cli
