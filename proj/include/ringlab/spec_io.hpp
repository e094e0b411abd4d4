#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ringlab/algebra.hpp"

namespace ringlab {

using Json = nlohmann::ordered_json;

/// Algebra-spec documents:
///   {"field": {"kind": "Fp", "p": 2} | {"kind": "Q"},
///    "names": [...],
///    "presentation": {"kind": "structure_constants", "dim": n, "unit": [...], "table": [[[...]]]}
///                  | {"kind": "matrix_basis", "size": k, "matrices": [[[...]]], "autoclose": bool}}
/// Scalars are decimal strings ("3", "1/2"). Malformed input raises ParseError
/// naming the offending field.
Algebra algebra_from_spec(const Json& spec);
Algebra load_algebra_file(const std::string& path);

FieldDesc field_from_spec(const Json& field);
Json field_to_spec(const FieldDesc& field);

Json structure_constants_spec(const Algebra& a);
Json matrix_basis_spec(const FieldDesc& field, std::size_t size, const std::vector<Matrix>& matrices,
                       const std::vector<std::string>& names, bool autoclose);

/// Two-space indentation plus trailing newline.
std::string dump_json(const Json& j);

}  // namespace ringlab
