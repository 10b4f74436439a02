#pragma once

// JSON interchange. Field descriptors are {"kind":"rational"} or
// {"kind":"prime","p":101}; rational entries are canonical "a/b" strings and
// prime-field entries are integers in [0, p-1]. Object keys keep insertion
// order so output is byte-stable.

#include <filesystem>
#include <string>
#include <variant>

#include <json.hpp>

#include "dqalg/classification.hpp"

namespace dq {

using Json = nlohmann::ordered_json;

using AnyAlgebra = std::variant<MatSubalgebra<Rational>, MatSubalgebra<Fp>>;

Json field_to_json(const FieldSpec& field);
/// Throws ParseError.
FieldSpec field_from_json(const Json& j);

template <class S>
Json scalar_to_json(const S& x);
template <class S>
S scalar_from_json(const FieldSpec& field, const Json& j);

template <class S>
Json matrix_to_json(const Matrix<S>& m);
/// Throws ParseError on ragged or non-square grids when `n` is given.
template <class S>
Matrix<S> matrix_from_json(const FieldSpec& field, const Json& grid, Index n = -1);

/// AlgebraDocument: field, n, basis (canonical order), metadata.
template <class S>
Json algebra_to_json(const MatSubalgebra<S>& a, const Json& metadata = Json::object());

/// Throws ParseError on malformed documents and ClosureViolation when the
/// basis does not span a multiplicatively closed space.
AnyAlgebra algebra_from_json(const Json& doc);

template <class S>
MatSubalgebra<S> algebra_from_json_as(const Json& doc);

/// Throws IoError or ParseError.
Json read_json_file(const std::filesystem::path& path);
/// Throws IoError.
void write_json_file(const std::filesystem::path& path, const Json& j);

Json block_type_to_json(const BlockType& t);
Json block_ids_to_json(const std::vector<CanonicalBlockId>& ids);
Json aux_dims_to_json(const AuxDims& d);

template <class S>
Json report_to_json(const AnalysisReport<S>& r, const FieldSpec& field);

Json enumeration_to_json(const TypeEnumeration& e, bool include_ordered);

}  // namespace dq
