#include "ringlab/spec_io.hpp"

#include <fstream>
#include <sstream>

namespace ringlab {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::ParseError, where + ": " + what);
}

const Json& member(const Json& obj, const std::string& key, const std::string& where) {
  if (!obj.is_object()) fail(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(where + "." + key, "missing");
  return *it;
}

std::size_t size_value(const Json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 1) fail(where, "expected a positive integer");
  return j.get<std::size_t>();
}

Scalar scalar_value(const FieldDesc& field, const Json& j, const std::string& where) {
  try {
    if (j.is_string()) return field.parse(j.get<std::string>());
    if (j.is_number_integer()) return field.from_int(j.get<long long>());
  } catch (const Error& e) {
    fail(where, e.what());
  }
  fail(where, "expected a scalar string such as \"3\" or \"1/2\"");
}

Vector vector_value(const FieldDesc& field, const Json& j, std::size_t n, const std::string& where) {
  if (!j.is_array() || j.size() != n) fail(where, "expected " + std::to_string(n) + " scalars");
  Vector out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(scalar_value(field, j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

Json scalars_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(s.to_string());
  return out;
}

}  // namespace

FieldDesc field_from_spec(const Json& field) {
  const std::string kind_where = "field.kind";
  const Json& kind = member(field, "kind", "field");
  if (!kind.is_string()) fail(kind_where, "expected \"Fp\" or \"Q\"");
  const std::string k = kind.get<std::string>();
  if (k == "Q") return FieldDesc::rationals();
  if (k != "Fp") fail(kind_where, "expected \"Fp\" or \"Q\", got \"" + k + "\"");
  const Json& p = member(field, "p", "field");
  if (!p.is_number_integer() || p.get<long long>() < 2) fail("field.p", "expected a prime");
  try {
    return FieldDesc::prime(p.get<std::uint64_t>());
  } catch (const Error& e) {
    fail("field.p", e.what());
  }
}

Json field_to_spec(const FieldDesc& field) {
  if (!field.is_finite()) return Json{{"kind", "Q"}};
  return Json{{"kind", "Fp"}, {"p", field.modulus()}};
}

Algebra algebra_from_spec(const Json& spec) {
  FieldDesc field = field_from_spec(member(spec, "field", "spec"));
  std::vector<std::string> names;
  if (auto it = spec.find("names"); it != spec.end()) {
    if (!it->is_array()) fail("names", "expected an array of strings");
    for (std::size_t i = 0; i < it->size(); ++i) {
      if (!(*it)[i].is_string()) fail("names[" + std::to_string(i) + "]", "expected a string");
      names.push_back((*it)[i].get<std::string>());
    }
  }
  const Json& pres = member(spec, "presentation", "spec");
  const Json& kind = member(pres, "kind", "presentation");
  if (!kind.is_string()) fail("presentation.kind", "expected a string");
  const std::string k = kind.get<std::string>();

  if (k == "structure_constants") {
    const std::size_t n = size_value(member(pres, "dim", "presentation"), "presentation.dim");
    Vector unit = vector_value(field, member(pres, "unit", "presentation"), n, "presentation.unit");
    const Json& table = member(pres, "table", "presentation");
    if (!table.is_array() || table.size() != n) fail("presentation.table", "expected " + std::to_string(n) + " rows");
    std::vector<Scalar> flat;
    flat.reserve(n * n * n);
    for (std::size_t i = 0; i < n; ++i) {
      const std::string wi = "presentation.table[" + std::to_string(i) + "]";
      if (!table[i].is_array() || table[i].size() != n) fail(wi, "expected " + std::to_string(n) + " entries");
      for (std::size_t j = 0; j < n; ++j) {
        Vector v = vector_value(field, table[i][j], n, wi + "[" + std::to_string(j) + "]");
        flat.insert(flat.end(), v.begin(), v.end());
      }
    }
    if (!names.empty() && names.size() != n) fail("names", "expected " + std::to_string(n) + " names");
    return Algebra::build(field, n, unit, flat, names);
  }
  if (k == "matrix_basis") {
    const std::size_t size = size_value(member(pres, "size", "presentation"), "presentation.size");
    const Json& mats = member(pres, "matrices", "presentation");
    if (!mats.is_array() || mats.empty()) fail("presentation.matrices", "expected a non-empty array");
    bool autoclose = false;
    if (auto it = pres.find("autoclose"); it != pres.end()) {
      if (!it->is_boolean()) fail("presentation.autoclose", "expected true or false");
      autoclose = it->get<bool>();
    }
    std::vector<Matrix> matrices;
    for (std::size_t t = 0; t < mats.size(); ++t) {
      const std::string wt = "presentation.matrices[" + std::to_string(t) + "]";
      if (!mats[t].is_array() || mats[t].size() != size) fail(wt, "expected " + std::to_string(size) + " rows");
      Matrix m(field, size, size);
      for (std::size_t r = 0; r < size; ++r) m.set_row(r, vector_value(field, mats[t][r], size, wt + "[" + std::to_string(r) + "]"));
      matrices.push_back(std::move(m));
    }
    if (!names.empty() && names.size() != matrices.size())
      fail("names", "expected " + std::to_string(matrices.size()) + " names");
    return from_matrix_basis(field, size, matrices, autoclose, names).algebra;
  }
  fail("presentation.kind", "expected \"structure_constants\" or \"matrix_basis\", got \"" + k + "\"");
}

Algebra load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, path + ": cannot open file");
  Json spec;
  try {
    spec = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
  return algebra_from_spec(spec);
}

Json structure_constants_spec(const Algebra& a) {
  const std::size_t n = a.dim();
  Json table = Json::array();
  for (std::size_t i = 0; i < n; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < n; ++j) {
      Vector v(a.table().begin() + static_cast<std::ptrdiff_t>((i * n + j) * n),
               a.table().begin() + static_cast<std::ptrdiff_t>((i * n + j + 1) * n));
      row.push_back(scalars_json(v));
    }
    table.push_back(std::move(row));
  }
  Json out;
  out["field"] = field_to_spec(a.field());
  out["names"] = a.names();
  out["presentation"] = {{"kind", "structure_constants"}, {"dim", n}, {"unit", scalars_json(a.unit())}, {"table", table}};
  return out;
}

Json matrix_basis_spec(const FieldDesc& field, std::size_t size, const std::vector<Matrix>& matrices,
                       const std::vector<std::string>& names, bool autoclose) {
  Json mats = Json::array();
  for (const auto& m : matrices) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < size; ++r) rows.push_back(scalars_json(m.row(r)));
    mats.push_back(std::move(rows));
  }
  Json out;
  out["field"] = field_to_spec(field);
  out["names"] = names;
  out["presentation"] = {{"kind", "matrix_basis"}, {"size", size}, {"matrices", mats}, {"autoclose", autoclose}};
  return out;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace ringlab
