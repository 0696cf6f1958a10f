#include <doctest.h>

#include <cmath>

#include "bergman/runner.hpp"
#include "bergman/serialization.hpp"

using namespace bergman;

TEST_CASE("complex values round-trip as [re, im] pairs") {
  const Complex z{1.5, -0.25};
  CHECK(complex_from_json(complex_to_json(z)) == z);
  CHECK_THROWS_AS(complex_from_json(json::array({1.0})),
                  std::invalid_argument);
  CHECK_THROWS_AS(complex_from_json(json{{"re", 1.0}}),
                  std::invalid_argument);
}

TEST_CASE("series types round-trip through JSON") {
  const CoefficientSeries g(std::vector<Complex>{{1.0, 2.0}, {-0.5, 0.0}});
  const auto g2 = coefficient_series_from_json(to_json(g));
  CHECK(g2.coeffs() == g.coeffs());

  const LaurentTail t({0.1, -0.2}, {{1.0, 0.0}, {0.0, 3.0}});
  const auto t2 = laurent_tail_from_json(to_json(t));
  CHECK(t2.center() == t.center());
  CHECK(t2.coeffs() == t.coeffs());

  const auto f = BoundaryFunction::from_modes(
      std::vector<Complex>{{1.0, 0.0}, {0.0, 0.0}, {2.0, -1.0}, {0.0, 0.0}});
  const auto f2 = boundary_function_from_json(to_json(f));
  CHECK(f2.rep() == BoundaryFunction::Rep::modes);
  CHECK(f2.values() == f.values());
}

TEST_CASE("conformal maps round-trip and revalidate") {
  const auto m = ConformalMap::make(MapKind::interior,
                                    {{0.0, 0.0}, {1.0, 0.0}, {0.3, 0.0}});
  const auto m2 = conformal_map_from_json(to_json(m));
  CHECK(m2.kind() == MapKind::interior);
  CHECK(m2.coeffs() == m.coeffs());
  CHECK(m2.margin() == doctest::Approx(m.margin()));

  // a serialized non-univalent map is rejected on load
  json bad = to_json(m);
  bad["coeffs"] = json::array({json::array({0.0, 0.0}),
                               json::array({1.0, 0.0}),
                               json::array({0.6, 0.0})});
  CHECK_THROWS_AS(conformal_map_from_json(bad), std::invalid_argument);
}

TEST_CASE("catalog round-trip") {
  const auto catalog = cli::default_catalog();
  const auto again = catalog_from_json(catalog_to_json(catalog));
  REQUIRE(again.size() == catalog.size());
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    CHECK(again[i].name == catalog[i].name);
    CHECK(again[i].map.kind() == catalog[i].map.kind());
    CHECK(again[i].map.coeffs() == catalog[i].map.coeffs());
  }
}

TEST_CASE("CSV writer emits a fixed layout") {
  CsvWriter csv({"a", "b", "c"});
  csv.add_row({"x", csv_int(3), csv_double(0.5)});
  CHECK(csv.str() == "a,b,c\nx,3,0.5\n");
  CHECK(csv.rows() == 1);
  CHECK_THROWS_AS(csv.add_row({"only-one"}), std::invalid_argument);
}

TEST_CASE("number formatting is locale-independent and round-trips") {
  CHECK(csv_double(0.1) == "0.1");
  CHECK(csv_double(3.0) == "3");
  CHECK(csv_int(-7) == "-7");
  CHECK(csv_bool(true) == "true");
  const double v = 1.7724538509055159;
  CHECK(std::stod(csv_double(v)) == v);
}

TEST_CASE("criterion reports serialize with the documented fields") {
  CriterionReport r;
  r.domain = "disk";
  r.gamma_desc = "1/z";
  r.levels = {{1, 1.12, 1.58}, {2, 1.06, 1.67}};
  r.sup_rho = 1.67;
  r.reference_norm = 1.77;
  r.verdict = Verdict::bounded;
  const json j = to_json(r);
  CHECK(j.at("domain") == "disk");
  CHECK(j.at("verdict") == "bounded");
  CHECK(j.at("levels").size() == 2);
  CHECK(!j.contains("gamma_norm"));  // NaN fields stay absent
  r.gamma_norm = 1.5;
  CHECK(to_json(r).contains("gamma_norm"));
}

TEST_CASE("mini schema validator") {
  const json schema = {
      {"type", "object"},
      {"required", json::array({"suite", "pass"})},
      {"properties",
       {{"suite", {{"type", "string"}}},
        {"pass", {{"type", "boolean"}}},
        {"rows", {{"type", "array"}, {"items", {{"type", "object"}}}}}}}};
  CHECK(!schema_violation(json{{"suite", "x"}, {"pass", true}}, schema));
  CHECK(schema_violation(json{{"suite", "x"}}, schema).has_value());
  CHECK(schema_violation(json{{"suite", 3}, {"pass", true}}, schema)
            .has_value());
  CHECK(schema_violation(
            json{{"suite", "x"}, {"pass", true}, {"rows", json::array({1})}},
            schema)
            .has_value());
}

TEST_CASE("config parsing rejects unknown keys and bad values") {
  CHECK_THROWS_AS(cli::config_from_json(json{{"sede", 42}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(cli::config_from_json(json{{"levels", 0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(cli::config_from_json(json::array()),
                  std::invalid_argument);
  const auto cfg = cli::config_from_json(json{{"seed", 7}, {"levels", 3}});
  CHECK(cfg.seed == 7);
  CHECK(cfg.levels == 3);
  CHECK(cfg.samples == 256);  // untouched defaults survive
}

TEST_CASE("config serialization round-trips") {
  const auto cfg = cli::RunConfig::defaults();
  const auto cfg2 = cli::config_from_json(cli::config_to_json(cfg));
  CHECK(cfg2.seed == cfg.seed);
  CHECK(cfg2.levels == cfg.levels);
  CHECK(cfg2.delta == cfg.delta);
  CHECK(cfg2.catalog.size() == cfg.catalog.size());
  CHECK(cfg2.tol.theorem1_rel == cfg.tol.theorem1_rel);
}
