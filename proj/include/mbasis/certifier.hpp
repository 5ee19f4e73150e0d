#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mbasis/algebra.hpp"
#include "mbasis/ideals.hpp"
#include "mbasis/linalg.hpp"

namespace mbasis {

/// A candidate basis H: distinct nonzero vectors kept in canonical order
/// (ascending integer encoding over GF(p), lexicographic over Q).
class BasisCandidate {
public:
  /// Throws InvalidInput on zero vectors, repeated vectors, wrong lengths or
  /// scalars from another field.
  static BasisCandidate make(const FieldSpec& field, std::size_t dim, std::vector<Vector> vectors);

  const std::vector<Vector>& vectors() const { return vectors_; }
  std::size_t size() const { return vectors_.size(); }
  /// Vectors as rows.
  const Matrix& matrix() const { return matrix_; }

  bool operator==(const BasisCandidate& other) const { return vectors_ == other.vectors_; }

private:
  BasisCandidate(std::vector<Vector> vectors, Matrix matrix)
      : vectors_(std::move(vectors)), matrix_(std::move(matrix)) {}

  std::vector<Vector> vectors_;
  Matrix matrix_;
};

/// Canonical order on vectors used by BasisCandidate.
bool canonical_less(std::span<const Scalar> a, std::span<const Scalar> b);

/// Requires exactly dim(A) vectors of length dim(A); true iff they have full rank.
bool is_basis(const StructureAlgebra& a, std::span<const Vector> vectors);
inline bool is_basis(const StructureAlgebra& a, const BasisCandidate& h) { return is_basis(a, h.vectors()); }

struct ClosureViolation {
  Vector left;
  Vector right;
  Vector product;
};

/// First ordered pair (u, v) of H x H whose product is not literally an element of H.
std::optional<ClosureViolation> is_closed_under_multiplication(const StructureAlgebra& a, const BasisCandidate& h);

/// The row vector f with f(h) = 1 for every h in H: the sum of the
/// coordinates of an element in the basis H.
Vector coefficient_sum_functional(const StructureAlgebra& a, const BasisCandidate& h);

/// f(e_i e_j) == f(e_i) f(e_j) for every pair of basis indices.
bool verify_multiplicative(const StructureAlgebra& a, std::span<const Scalar> f);

/// ker f as a verified codimension-one ideal. Throws InvalidInput when f is
/// zero or not multiplicative and InternalError if verification fails.
IdealCertificate kernel_ideal_certificate(const StructureAlgebra& a, std::span<const Scalar> f);

struct SearchOptions {
  bool find_all = false;
  /// Upper bound on p^n - 1, the number of candidate vectors.
  std::uint64_t element_limit = kDefaultElementLimit;
  unsigned threads = 1;
};

/// Bases closed under multiplication, sorted canonically. Without find_all,
/// at most the canonically first basis is returned. Finite fields only.
std::vector<BasisCandidate> search_multiplicative_basis(const StructureAlgebra& a, const SearchOptions& options = {});

/// (1,0,...,0), (1,1,0,...,0), ..., (1,...,1)
BasisCandidate known_product_basis(std::size_t n, const FieldSpec& field);

enum class Verdict {
  basis_found_ideal_certified,
  no_basis_no_codim1,
  no_basis_but_codim1,
  search_skipped,
  inconsistent,
};
std::string_view to_string(Verdict verdict);

struct TheoremCertificate {
  std::string algebra_digest;
  std::optional<BasisCandidate> basis;
  std::optional<Vector> functional;
  std::optional<IdealCertificate> kernel;
  Codim1Report codim1_report;
  Verdict verdict;
};

struct CertifyOptions {
  SearchOptions search;
  bool allow_nonassociative = false;
  /// Used instead of searching; must be a basis closed under multiplication.
  std::optional<BasisCandidate> supplied_basis;
};

/// Search (or take the supplied basis), run the f -> ker f pipeline, scan
/// codimension-one ideals and cross-check the two.
TheoremCertificate certify(const StructureAlgebra& a, const CertifyOptions& options = {});

} // namespace mbasis
