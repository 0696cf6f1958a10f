#include "bergman/serialization.hpp"

#include <charconv>
#include <fstream>
#include <stdexcept>

namespace bergman {

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2)
    throw std::invalid_argument("complex value must be a [re, im] pair");
  return {j[0].get<double>(), j[1].get<double>()};
}

namespace {

json complex_vector_to_json(const std::vector<Complex>& v) {
  json out = json::array();
  for (const Complex& z : v) out.push_back(complex_to_json(z));
  return out;
}

std::vector<Complex> complex_vector_from_json(const json& j) {
  if (!j.is_array())
    throw std::invalid_argument("expected an array of [re, im] pairs");
  std::vector<Complex> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(complex_from_json(e));
  return out;
}

}  // namespace

json to_json(const CoefficientSeries& g) {
  return json{{"coeffs", complex_vector_to_json(g.coeffs())}};
}

CoefficientSeries coefficient_series_from_json(const json& j) {
  return CoefficientSeries(complex_vector_from_json(j.at("coeffs")));
}

json to_json(const LaurentTail& t) {
  return json{{"center", complex_to_json(t.center())},
              {"coeffs", complex_vector_to_json(t.coeffs())}};
}

LaurentTail laurent_tail_from_json(const json& j) {
  return LaurentTail(complex_from_json(j.at("center")),
                     complex_vector_from_json(j.at("coeffs")));
}

json to_json(const BoundaryFunction& f) {
  return json{
      {"rep", f.rep() == BoundaryFunction::Rep::modes ? "modes" : "samples"},
      {"values", complex_vector_to_json(f.values())}};
}

BoundaryFunction boundary_function_from_json(const json& j) {
  const std::string rep = j.at("rep").get<std::string>();
  auto values = complex_vector_from_json(j.at("values"));
  if (rep == "modes") return BoundaryFunction::from_modes(std::move(values));
  if (rep == "samples")
    return BoundaryFunction::from_samples(std::move(values));
  throw std::invalid_argument("BoundaryFunction rep must be samples|modes");
}

json to_json(const ConformalMap& m) {
  return json{
      {"kind", m.kind() == MapKind::interior ? "interior" : "exterior"},
      {"coeffs", complex_vector_to_json(m.coeffs())}};
}

ConformalMap conformal_map_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  auto coeffs = complex_vector_from_json(j.at("coeffs"));
  if (kind == "interior")
    return ConformalMap::make(MapKind::interior, std::move(coeffs));
  if (kind == "exterior")
    return ConformalMap::make(MapKind::exterior, std::move(coeffs));
  throw std::invalid_argument("ConformalMap kind must be interior|exterior");
}

json to_json(const CriterionReport& r) {
  json levels = json::array();
  for (const auto& l : r.levels)
    levels.push_back(
        json{{"n", l.level}, {"r", l.radius}, {"rho", l.rho}});
  json out{{"domain", r.domain},
           {"gamma", r.gamma_desc},
           {"levels", levels},
           {"sup_rho", r.sup_rho},
           {"reference_norm", r.reference_norm},
           {"verdict",
            r.verdict == Verdict::bounded ? "bounded" : "inconclusive"},
           {"tol_rel", r.tol_rel},
           {"tol_abs", r.tol_abs}};
  if (std::isfinite(r.gamma_norm)) out["gamma_norm"] = r.gamma_norm;
  if (std::isfinite(r.inversion_residual))
    out["inversion_residual"] = r.inversion_residual;
  return out;
}

std::vector<CatalogEntry> catalog_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("catalog must be an array");
  std::vector<CatalogEntry> out;
  for (const auto& e : j) {
    CatalogEntry entry{e.at("name").get<std::string>(),
                       conformal_map_from_json(e), std::nullopt};
    if (e.contains("delta")) entry.delta = e.at("delta").get<double>();
    out.push_back(std::move(entry));
  }
  return out;
}

json catalog_to_json(const std::vector<CatalogEntry>& catalog) {
  json out = json::array();
  for (const auto& e : catalog) {
    json m = to_json(e.map);
    m["name"] = e.name;
    if (e.delta) m["delta"] = *e.delta;
    out.push_back(std::move(m));
  }
  return out;
}

CsvWriter::CsvWriter(std::vector<std::string> columns)
    : ncols_(columns.size()) {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i) text_ += ',';
    text_ += columns[i];
  }
  text_ += '\n';
}

void CsvWriter::add_row(const std::vector<std::string>& cells) {
  if (cells.size() != ncols_)
    throw std::invalid_argument("CsvWriter: column count mismatch");
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) text_ += ',';
    text_ += cells[i];
  }
  text_ += '\n';
  ++rows_;
}

std::string csv_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string csv_int(long long v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string csv_bool(bool v) { return v ? "true" : "false"; }

void write_file_atomic(const std::filesystem::path& path,
                       std::string_view content) {
  namespace fs = std::filesystem;
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string());
    out.write(content.data(),
              static_cast<std::streamsize>(content.size()));
    if (!out) throw std::runtime_error("short write to " + tmp.string());
  }
  fs::rename(tmp, path);
}

namespace {

bool type_matches(const json& doc, const std::string& type) {
  if (type == "object") return doc.is_object();
  if (type == "array") return doc.is_array();
  if (type == "string") return doc.is_string();
  if (type == "number") return doc.is_number();
  if (type == "integer") return doc.is_number_integer();
  if (type == "boolean") return doc.is_boolean();
  if (type == "null") return doc.is_null();
  return false;
}

std::optional<std::string> check(const json& doc, const json& schema,
                                 const std::string& path) {
  if (schema.contains("type")) {
    const std::string type = schema.at("type").get<std::string>();
    if (!type_matches(doc, type))
      return path + ": expected " + type;
  }
  if (schema.contains("enum")) {
    bool hit = false;
    for (const auto& v : schema.at("enum"))
      if (v == doc) hit = true;
    if (!hit) return path + ": value not in enum";
  }
  if (doc.is_object()) {
    if (schema.contains("required"))
      for (const auto& key : schema.at("required"))
        if (!doc.contains(key.get<std::string>()))
          return path + ": missing required key " + key.get<std::string>();
    if (schema.contains("properties"))
      for (const auto& [key, sub] : schema.at("properties").items())
        if (doc.contains(key))
          if (auto v = check(doc.at(key), sub, path + "/" + key)) return v;
  }
  if (doc.is_array() && schema.contains("items")) {
    const json& sub = schema.at("items");
    for (std::size_t i = 0; i < doc.size(); ++i)
      if (auto v = check(doc[i], sub, path + "/" + std::to_string(i)))
        return v;
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::string> schema_violation(const json& doc,
                                            const json& schema) {
  return check(doc, schema, "$");
}

}  // namespace bergman
