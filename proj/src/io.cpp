#include "mbasis/io.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <tuple>

#include <openssl/evp.h>

#include "mbasis/errors.hpp"

namespace mbasis {

namespace {

/// Dimensions above this are rejected when reading files.
constexpr std::size_t kMaxFileDim = 256;

const Json& require_key(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("missing key '") + key + "'");
  return j.at(key);
}

std::size_t require_index(const Json& j, std::size_t bound, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
    throw InvalidInput(std::string(what) + " must be a non-negative integer");
  }
  const auto v = j.get<std::uint64_t>();
  if (v >= bound) throw InvalidInput(std::string(what) + " " + std::to_string(v) + " out of range");
  return static_cast<std::size_t>(v);
}

} // namespace

Json field_to_json(const FieldSpec& field) {
  if (!field.is_finite()) return Json{{"kind", "rational"}};
  return Json{{"kind", "prime"}, {"p", field.modulus()}};
}

FieldSpec field_from_json(const Json& j) {
  const Json& kind = require_key(j, "kind");
  if (!kind.is_string()) throw InvalidInput("field kind must be a string");
  if (kind == "rational") {
    if (j.contains("p")) throw InvalidInput("rational field carries no modulus");
    return FieldSpec::rational();
  }
  if (kind == "prime") {
    const Json& p = require_key(j, "p");
    if (!p.is_number_integer()) throw InvalidInput("field modulus must be an integer");
    if (p.get<std::int64_t>() < 0) throw InvalidInput("field modulus must be positive");
    return FieldSpec::prime(p.get<std::uint64_t>());
  }
  throw InvalidInput("unknown field kind " + kind.dump());
}

Json vector_to_json(std::span<const Scalar> v) {
  Json out = Json::array();
  for (const auto& c : v) out.push_back(c.to_string());
  return out;
}

Vector vector_from_json(const FieldSpec& field, const Json& j) {
  if (!j.is_array()) throw InvalidInput("vector must be a JSON array");
  Vector v;
  for (const auto& c : j) {
    if (!c.is_string()) throw InvalidInput("scalars must be JSON strings");
    v.push_back(field.parse(c.get<std::string>()));
  }
  return v;
}

Json algebra_to_json(const StructureAlgebra& a) {
  Json triples = Json::array();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      const Vector& v = a.product(i, j);
      for (std::size_t k = 0; k < a.dim(); ++k) {
        if (!v[k].is_zero()) triples.push_back(Json::array({i, j, k, v[k].to_string()}));
      }
    }
  }
  Json out{{"field", field_to_json(a.field())}, {"dim", a.dim()}, {"structure_constants", std::move(triples)}};
  if (!a.labels().empty()) out["labels"] = a.labels();
  return out;
}

StructureAlgebra algebra_from_json(const Json& j) {
  if (!j.is_object()) throw InvalidInput("algebra document must be a JSON object");
  const FieldSpec field = field_from_json(require_key(j, "field"));
  const std::size_t n = require_index(require_key(j, "dim"), kMaxFileDim + 1, "dim");
  if (n == 0) throw InvalidInput("dim must be at least 1");

  std::vector<Vector> table(n * n, zero_vector(field, n));
  std::set<std::array<std::size_t, 3>> seen;
  const Json& triples = require_key(j, "structure_constants");
  if (!triples.is_array()) throw InvalidInput("structure_constants must be an array");
  for (const auto& t : triples) {
    if (!t.is_array() || t.size() != 4) throw InvalidInput("structure constant must be [i, j, k, \"coef\"]");
    const std::size_t i = require_index(t[0], n, "index i");
    const std::size_t jj = require_index(t[1], n, "index j");
    const std::size_t k = require_index(t[2], n, "index k");
    if (!t[3].is_string()) throw InvalidInput("structure constant coefficient must be a string");
    if (!seen.insert({i, jj, k}).second) {
      throw InvalidInput("duplicate structure constant for (" + std::to_string(i) + "," + std::to_string(jj) + "," +
                         std::to_string(k) + ")");
    }
    table[i * n + jj][k] = field.parse(t[3].get<std::string>());
  }

  std::vector<std::string> labels;
  if (j.contains("labels")) {
    const Json& l = j.at("labels");
    if (!l.is_array()) throw InvalidInput("labels must be an array of strings");
    for (const auto& s : l) {
      if (!s.is_string()) throw InvalidInput("labels must be an array of strings");
      labels.push_back(s.get<std::string>());
    }
  }
  return StructureAlgebra(field, n, std::move(table), std::move(labels));
}

Json semigroup_to_json(const SemigroupTable& s) {
  return Json{{"elements", s.elements()}, {"table", s.table()}};
}

SemigroupTable semigroup_from_json(const Json& j) {
  const Json& elements = require_key(j, "elements");
  const Json& table = require_key(j, "table");
  if (!elements.is_array() || !table.is_array()) throw InvalidInput("semigroup elements and table must be arrays");
  std::vector<std::string> names;
  for (const auto& e : elements) {
    if (!e.is_string()) throw InvalidInput("semigroup elements must be strings");
    names.push_back(e.get<std::string>());
  }
  const std::size_t m = names.size();
  if (m > kMaxFileDim) throw InvalidInput("semigroup too large");
  std::vector<std::vector<std::size_t>> rows;
  for (const auto& row : table) {
    if (!row.is_array()) throw InvalidInput("semigroup table rows must be arrays");
    std::vector<std::size_t> r;
    for (const auto& v : row) r.push_back(require_index(v, m, "table entry"));
    rows.push_back(std::move(r));
  }
  return SemigroupTable(std::move(names), std::move(rows));
}

bool looks_like_semigroup(const Json& j) {
  return j.is_object() && j.contains("elements") && j.contains("table") && !j.contains("field");
}

std::string canonical_dump(const Json& j) { return j.dump(); }

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

std::string sha256_hex(std::string_view data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md.data(), &len, EVP_sha256(), nullptr) != 1) {
    throw InternalError("SHA-256 computation failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out += kHex[md[i] >> 4];
    out += kHex[md[i] & 0xf];
  }
  return out;
}

std::string algebra_digest(const StructureAlgebra& a) { return sha256_hex(canonical_dump(algebra_to_json(a))); }

Json subspace_to_json(const Subspace& s) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < s.dim(); ++r) rows.push_back(vector_to_json(s.basis().row(r)));
  return rows;
}

Json ideal_to_json(const IdealCertificate& c) {
  return Json{{"rows", subspace_to_json(c.subspace)},
              {"codim", c.codim},
              {"left_closed", c.left_closed},
              {"right_closed", c.right_closed},
              {"origin", to_string(c.origin)}};
}

Json codim1_report_to_json(const Codim1Report& r) {
  Json ideals = Json::array();
  for (const auto& c : r.ideals) ideals.push_back(ideal_to_json(c));
  return Json{{"count", r.ideals.size()},
              {"complete", r.complete},
              {"method", to_string(r.method)},
              {"scanned", r.hyperplanes_scanned},
              {"ideals", std::move(ideals)}};
}

Json basis_to_json(const BasisCandidate& h) {
  Json out = Json::array();
  for (const auto& v : h.vectors()) out.push_back(vector_to_json(v));
  return out;
}

Json certificate_to_json(const TheoremCertificate& c) {
  return Json{{"verdict", to_string(c.verdict)},
              {"algebra_digest", c.algebra_digest},
              {"basis", c.basis ? basis_to_json(*c.basis) : Json(nullptr)},
              {"functional", c.functional ? vector_to_json(*c.functional) : Json(nullptr)},
              {"kernel", c.kernel ? ideal_to_json(*c.kernel) : Json(nullptr)},
              {"codim1", codim1_report_to_json(c.codim1_report)}};
}

} // namespace mbasis
