#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "bergman/serialization.hpp"

namespace bergman::cli {

/// Deterministic generator (SplitMix64) so report bytes do not depend on
/// the standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  double uniform();                      // [0, 1)
  double uniform(double lo, double hi);  // [lo, hi)
  Complex complex_box(double half_width);  // square centered at 0
  int uniform_int(int lo, int hi);       // inclusive

 private:
  std::uint64_t state_;
};

struct QuadratureConfig {
  int n_radial = 64;
  int n_angular = 128;
};

struct InversionConfig {
  int degree = 12;
  double ring_radius = 2.0;
  double regularization = 1e-12;
  double holdout_radius = 1.8;  // map-plane ring for held-out evaluation
  int holdout_points = 20;
};

struct Tolerances {
  double lemma1_rel = 1e-12;
  double isometry_coeff_rel = 1e-12;
  double isometry_quad_rel = 1e-6;
  double theorem1_rel = 1e-6;
  double theorem1_abs = 1e-8;
  double theorem1_spot_abs = 1e-10;
  double theorem2_rel = 1e-3;
  double invert_residual = 1e-6;
  double holdout_abs = 1e-5;
  double beurling_value_abs = 1e-8;
  double beurling_norm_rel = 1e-12;
  double beurling_derivative_abs = 1e-6;
  double riesz_spread_abs = 1e-10;
  double riesz_kernel_abs = 1e-8;
};

struct RunConfig {
  std::uint64_t seed = 42;
  int levels = 8;
  double delta = 0.12;
  int samples = 256;
  double guard = 0.05;
  QuadratureConfig quadrature;
  InversionConfig inversion;
  Tolerances tol;
  std::vector<CatalogEntry> catalog;

  static RunConfig defaults();
};

std::vector<CatalogEntry> default_catalog();

/// Parses a config document; unknown keys are rejected so typos do not
/// silently fall back to defaults. Throws std::invalid_argument with the
/// offending key path.
RunConfig config_from_json(const json& j);
json config_to_json(const RunConfig& cfg);

struct SuiteResult {
  std::string name;
  bool pass = false;
  std::string first_failure;  // empty when pass
  std::string csv;
  json report;
};

const std::vector<std::string>& suite_names();

/// Runs one suite by subcommand name (throws on unknown names).
SuiteResult run_suite(const std::string& name, const RunConfig& cfg);

/// Writes <name>.csv and <name>.json atomically under out_dir.
void write_reports(const SuiteResult& result,
                   const std::filesystem::path& out_dir);

}  // namespace bergman::cli
