#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "mbasis/algebra.hpp"
#include "mbasis/certifier.hpp"
#include "mbasis/field.hpp"
#include "mbasis/ideals.hpp"
#include "mbasis/linalg.hpp"

namespace mbasis {

using Json = nlohmann::json;

// Every parser below throws InvalidInput on malformed documents.

Json field_to_json(const FieldSpec& field);
FieldSpec field_from_json(const Json& j);

/// ["1","0","1/2"]
Json vector_to_json(std::span<const Scalar> v);
Vector vector_from_json(const FieldSpec& field, const Json& j);

/// {"dim","field","labels"?,"structure_constants":[[i,j,k,"c"],...]} with
/// zero coefficients omitted and triples sorted by (i, j, k).
Json algebra_to_json(const StructureAlgebra& a);
StructureAlgebra algebra_from_json(const Json& j);

/// {"elements":[...],"table":[[...],...]}
Json semigroup_to_json(const SemigroupTable& s);
SemigroupTable semigroup_from_json(const Json& j);
bool looks_like_semigroup(const Json& j);

/// Compact dump with sorted keys.
std::string canonical_dump(const Json& j);
/// Parses text, mapping syntax errors to InvalidInput.
Json parse_json(std::string_view text);

/// Lowercase hex SHA-256 of the canonical algebra JSON.
std::string algebra_digest(const StructureAlgebra& a);
std::string sha256_hex(std::string_view data);

Json subspace_to_json(const Subspace& s);
Json ideal_to_json(const IdealCertificate& c);
Json codim1_report_to_json(const Codim1Report& r);
Json basis_to_json(const BasisCandidate& h);
Json certificate_to_json(const TheoremCertificate& c);

} // namespace mbasis
