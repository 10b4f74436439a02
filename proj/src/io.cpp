#include "dqalg/io.hpp"

#include <fstream>

namespace dq {

Json field_to_json(const FieldSpec& field) {
  if (field.kind == FieldKind::Rational) return Json{{"kind", "rational"}};
  return Json{{"kind", "prime"}, {"p", field.p}};
}

FieldSpec field_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
    throw Error(ErrorCode::ParseError, "field descriptor needs a string \"kind\"");
  }
  const auto kind = j["kind"].get<std::string>();
  if (kind == "rational") return FieldSpec::rational();
  if (kind == "prime") {
    if (!j.contains("p") || !j["p"].is_number_unsigned()) {
      throw Error(ErrorCode::ParseError, "prime field descriptor needs a positive integer \"p\"");
    }
    try {
      return FieldSpec::prime(j["p"].get<std::uint64_t>());
    } catch (const Error& e) {
      throw Error(ErrorCode::ParseError, e.detail());
    }
  }
  throw Error(ErrorCode::ParseError, "unknown field kind '" + kind + "'");
}

template <>
Json scalar_to_json<Rational>(const Rational& x) {
  return to_text(x);
}

template <>
Json scalar_to_json<Fp>(const Fp& x) {
  return x.value();
}

template <>
Rational scalar_from_json<Rational>(const FieldSpec&, const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  throw Error(ErrorCode::ParseError, "rational entries must be strings \"a/b\" or integers, got " + j.dump());
}

template <>
Fp scalar_from_json<Fp>(const FieldSpec& field, const Json& j) {
  if (j.is_number_integer()) return Fp::bound(j.get<std::int64_t>(), field.p);
  if (j.is_string()) {
    const Rational r = parse_rational(j.get<std::string>());
    const Integer num = boost::multiprecision::numerator(r) % field.p;
    const Integer den = boost::multiprecision::denominator(r) % field.p;
    const Fp d = Fp::bound(den.convert_to<std::int64_t>(), field.p);
    if (d.is_zero()) throw Error(ErrorCode::ParseError, "denominator vanishes mod p in " + j.dump());
    return Fp::bound(num.convert_to<std::int64_t>(), field.p) / d;
  }
  throw Error(ErrorCode::ParseError, "prime-field entries must be integers, got " + j.dump());
}

template <class S>
Json matrix_to_json(const Matrix<S>& m) {
  Json grid = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json<S>(m(i, j)));
    grid.push_back(std::move(row));
  }
  return grid;
}

template <class S>
Matrix<S> matrix_from_json(const FieldSpec& field, const Json& grid, Index n) {
  if (!grid.is_array() || grid.empty()) throw Error(ErrorCode::ParseError, "matrix must be a non-empty array of rows");
  const Index rows = static_cast<Index>(grid.size());
  if (!grid[0].is_array()) throw Error(ErrorCode::ParseError, "matrix rows must be arrays");
  const Index cols = static_cast<Index>(grid[0].size());
  if (n >= 0 && (rows != n || cols != n)) {
    throw Error(ErrorCode::ParseError, "expected a " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
  }
  Matrix<S> m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    const Json& row = grid[i];
    if (!row.is_array() || static_cast<Index>(row.size()) != cols) {
      throw Error(ErrorCode::ParseError, "matrix rows have different lengths");
    }
    for (Index j = 0; j < cols; ++j) m(i, j) = scalar_from_json<S>(field, row[j]);
  }
  return m;
}

template <class S>
Json algebra_to_json(const MatSubalgebra<S>& a, const Json& metadata) {
  Json basis = Json::array();
  for (const auto& b : a.basis()) basis.push_back(matrix_to_json<S>(b));
  Json doc;
  doc["field"] = field_to_json(a.field());
  doc["n"] = a.n();
  doc["basis"] = std::move(basis);
  if (!metadata.empty()) doc["metadata"] = metadata;
  return doc;
}

template <class S>
MatSubalgebra<S> algebra_from_json_as(const Json& doc) {
  if (!doc.is_object()) throw Error(ErrorCode::ParseError, "algebra document must be an object");
  const FieldSpec field = field_from_json(doc.value("field", Json{}));
  if (!doc.contains("n") || !doc["n"].is_number_unsigned() || doc["n"].get<std::int64_t>() < 1) {
    throw Error(ErrorCode::ParseError, "algebra document needs a positive integer \"n\"");
  }
  const Index n = doc["n"].get<Index>();
  if (!doc.contains("basis") || !doc["basis"].is_array()) {
    throw Error(ErrorCode::ParseError, "algebra document needs a \"basis\" array");
  }
  std::vector<Matrix<S>> basis;
  for (const auto& grid : doc["basis"]) basis.push_back(matrix_from_json<S>(field, grid, n));
  return MatSubalgebra<S>::from_basis(field, n, basis);
}

AnyAlgebra algebra_from_json(const Json& doc) {
  if (!doc.is_object()) throw Error(ErrorCode::ParseError, "algebra document must be an object");
  const FieldSpec field = field_from_json(doc.value("field", Json{}));
  if (field.kind == FieldKind::Rational) return algebra_from_json_as<Rational>(doc);
  return algebra_from_json_as<Fp>(doc);
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path.string() + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::IoError, "cannot write '" + path.string() + "'");
  out << j.dump(2) << '\n';
  if (!out) throw Error(ErrorCode::IoError, "write to '" + path.string() + "' failed");
}

Json block_type_to_json(const BlockType& t) { return Json(t.parts()); }

Json block_ids_to_json(const std::vector<CanonicalBlockId>& ids) {
  Json out = Json::array();
  for (const auto& id : ids) out.push_back(Json::array({id.n, id.k}));
  return out;
}

Json aux_dims_to_json(const AuxDims& d) {
  Json j;
  j["dim_radical"] = d.radical;
  j["dim_commutator_ideal"] = d.commutator;
  j["dim_radical_times_commutator"] = d.radical_times_commutator;
  j["dim_commutator_times_radical"] = d.commutator_times_radical;
  j["dim_top_commutator_power_times_radical"] =
      d.top_power_times_radical ? Json(*d.top_power_times_radical) : Json(nullptr);
  return j;
}

template <class S>
Json report_to_json(const AnalysisReport<S>& r, const FieldSpec& field) {
  Json j;
  j["field"] = field_to_json(field);
  j["n"] = r.n;
  j["dim"] = r.dim;
  j["commutative"] = r.commutative;
  j["min_q"] = r.min_q ? Json(*r.min_q) : Json("not-Dq");
  j["type"] = r.type ? block_type_to_json(*r.type) : Json(nullptr);
  j["type_source"] = r.type ? Json(r.type_source) : Json(nullptr);
  j["type_canonical"] = r.type_canonical;
  j["maximal"] = r.maximal;
  j["block_ids"] = r.block_ids ? block_ids_to_json(*r.block_ids) : Json(nullptr);
  j["conjugator"] = r.conjugator ? matrix_to_json<S>(*r.conjugator) : Json(nullptr);
  j["invariants"] = r.invariants ? aux_dims_to_json(*r.invariants) : Json(nullptr);
  j["field_caveat"] = r.field_caveat;
  return j;
}

Json enumeration_to_json(const TypeEnumeration& e, bool include_ordered) {
  Json j;
  j["n"] = e.n;
  j["q"] = e.q;
  j["m"] = e.m;
  j["r"] = e.r;
  j["dimension"] = e.dimension;
  Json sorted = Json::array();
  Json counts = Json::array();
  Json params = Json::array();
  for (const auto& entry : e.entries) {
    sorted.push_back(block_type_to_json(entry.sorted));
    counts.push_back(entry.ordered_count);
    Json p;
    p[std::string(1, entry.parameter_name)] = entry.parameter;
    params.push_back(std::move(p));
  }
  j["sorted_tuples"] = std::move(sorted);
  j["ordered_count_per_tuple"] = std::move(counts);
  j["parameters"] = std::move(params);
  if (include_ordered) {
    Json ordered = Json::array();
    for (const auto& t : e.ordered) ordered.push_back(block_type_to_json(t));
    j["ordered_tuples"] = std::move(ordered);
  }
  j["field_caveat"] = e.field_caveat;
  return j;
}

#define DQ_INSTANTIATE_IO(S)                                                          \
  template Json matrix_to_json<S>(const Matrix<S>&);                                  \
  template Matrix<S> matrix_from_json<S>(const FieldSpec&, const Json&, Index);       \
  template Json algebra_to_json<S>(const MatSubalgebra<S>&, const Json&);             \
  template MatSubalgebra<S> algebra_from_json_as<S>(const Json&);                     \
  template Json report_to_json<S>(const AnalysisReport<S>&, const FieldSpec&);

DQ_INSTANTIATE_IO(Rational)
DQ_INSTANTIATE_IO(Fp)

}  // namespace dq
