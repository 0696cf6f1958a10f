#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bergman/criterion.hpp"
#include "bergman/domains.hpp"
#include "bergman/series.hpp"

namespace bergman {

using nlohmann::json;

// Complex values serialize as [re, im] pairs throughout.
json complex_to_json(Complex z);
Complex complex_from_json(const json& j);

json to_json(const CoefficientSeries& g);
CoefficientSeries coefficient_series_from_json(const json& j);

json to_json(const LaurentTail& t);
LaurentTail laurent_tail_from_json(const json& j);

json to_json(const BoundaryFunction& f);
BoundaryFunction boundary_function_from_json(const json& j);

json to_json(const ConformalMap& m);
ConformalMap conformal_map_from_json(const json& j);

json to_json(const CriterionReport& r);

/// Named map catalog, as shipped in the default config.
struct CatalogEntry {
  std::string name;
  ConformalMap map;
  std::optional<double> delta;  // per-map exhaustion excess override
};

std::vector<CatalogEntry> catalog_from_json(const json& j);
json catalog_to_json(const std::vector<CatalogEntry>& catalog);

/// CSV assembly with locale-independent number formatting (to_chars):
/// byte-identical output for identical inputs.
class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> columns);
  void add_row(const std::vector<std::string>& cells);
  const std::string& str() const { return text_; }
  std::size_t rows() const { return rows_; }

 private:
  std::size_t ncols_;
  std::size_t rows_ = 0;
  std::string text_;
};

std::string csv_double(double v);
std::string csv_int(long long v);
std::string csv_bool(bool v);

/// Write-to-temp-then-rename so report files appear atomically.
void write_file_atomic(const std::filesystem::path& path,
                       std::string_view content);

/// Minimal JSON-schema check (type / required / properties / items /
/// enum). Returns the first violation as "<path>: <problem>", or nullopt
/// when the document conforms.
std::optional<std::string> schema_violation(const json& doc,
                                            const json& schema);

}  // namespace bergman
