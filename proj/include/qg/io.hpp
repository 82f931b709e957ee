#pragma once

// JSON spec files (schema version "1").
//
// Complex numbers are [re, im]. Dense matrices are arrays of rows. Sparse
// tensors: mult [i, j, k, re, im] meaning e_j e_k has coefficient at e_i;
// delta [i, p, re, im] with p = j*dim + k meaning Delta(e_i) has coefficient
// at e_j (x) e_k; antipode [i, j, re, im] meaning S(e_j) has coefficient at e_i.

#include "qg/catalog.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <string>

namespace qg {

using Json = nlohmann::json;

/// Throws InvalidInput on unreadable or malformed files.
Json load_json_file(const std::string& path);

/// Throws InvalidInput unless version is "1" and kind is known.
std::string spec_kind(const Json& j);

Json complex_to_json(Complex z);
Complex complex_from_json(const Json& j);
Json matrix_to_json(const CMatrix& m);
CMatrix matrix_from_json(const Json& j);
Json vector_to_json(const CVector& v);
CVector vector_from_json(const Json& j);

StructureAlgebra algebra_from_json(const Json& j);
/// Kinds "hopf" and "group"; coalgebra required for "hopf".
HopfPtr hopf_from_json(const Json& j);
Json hopf_to_json(const HopfData& h);

/// The group behind a "group" spec: cayley table or builtin name.
FiniteGroupSpec group_from_json(const Json& j);

/// Named coreps of a spec. "regular" and, for function algebras of
/// permutation groups, "defining" are always available.
std::map<std::string, Corep> coreps_from_json(const Json& j, const HopfPtr& host);
Json corep_to_json(const Corep& u);

/// Kind "presentation": builtin {"sn_plus", n} / {"suq2", q}, or explicit
/// generators, parameters, relations, optional rules and delta.
Presentation presentation_from_json(const Json& j);

/// Kind "irrdata": blocks [{id, q}].
IrrData irrdata_from_json(const Json& j, const Tolerance& tol = {});

/// Kind "magic": entries as an n x n array of dense matrices.
MagicMatrix magic_from_json(const Json& j);

Json report_to_json(const VerificationReport& r);

/// 12 significant digits.
double round12(double x);

}  // namespace qg
