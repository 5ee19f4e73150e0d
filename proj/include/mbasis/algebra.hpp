#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mbasis/field.hpp"
#include "mbasis/linalg.hpp"
#include "mbasis/vector.hpp"

namespace mbasis {

/// A finite-dimensional algebra presented by structure constants: the
/// product e_i * e_j is stored densely as a coordinate vector.
class StructureAlgebra {
public:
  /// `table` holds dim*dim products in row-major (i, j) order. `labels` is
  /// either empty or has one display string per basis vector.
  StructureAlgebra(FieldSpec field, std::size_t dim, std::vector<Vector> table,
                   std::vector<std::string> labels = {});

  const FieldSpec& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  /// Coordinates of e_i * e_j.
  const Vector& product(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }
  const std::vector<std::string>& labels() const { return labels_; }

  bool operator==(const StructureAlgebra&) const = default;

private:
  FieldSpec field_;
  std::size_t dim_;
  std::vector<Vector> table_;
  std::vector<std::string> labels_;
};

/// Bilinear extension of the structure table.
Vector multiply(const StructureAlgebra& a, std::span<const Scalar> x, std::span<const Scalar> y);

struct AssociativityViolation {
  std::size_t i, j, l;
  Vector lhs; // (e_i e_j) e_l
  Vector rhs; // e_i (e_j e_l)
};

/// First violating triple in lexicographic (i, j, l) order, if any.
std::optional<AssociativityViolation> check_associativity(const StructureAlgebra& a);

/// The two-sided identity element, if one exists.
std::optional<Vector> find_identity(const StructureAlgebra& a);

/// Re-expresses `a` in the basis given by the columns of `p`.
StructureAlgebra change_basis(const StructureAlgebra& a, const Matrix& p);

// Constructors for the standard examples.

/// M_n(k) with matrix units E_ab ordered row-major (index a*n + b).
StructureAlgebra matrix_algebra(std::size_t n, const FieldSpec& field);
/// k^n with component-wise multiplication.
StructureAlgebra product_algebra(std::size_t n, const FieldSpec& field);
/// Hamilton quaternions {1, i, j, k}; characteristic 2 is rejected.
StructureAlgebra quaternion_algebra(const FieldSpec& field);
/// GF(p)[x] / (modulus) with basis 1, w, ..., w^(m-1). `modulus` lists m+1
/// coefficients, constant term first, leading coefficient 1.
StructureAlgebra finite_field_extension(std::uint32_t p, std::size_t m,
                                        std::span<const std::uint32_t> modulus);
/// All products zero.
StructureAlgebra zero_algebra(std::size_t n, const FieldSpec& field);

/// Largest extension degree accepted by finite_field_extension.
inline constexpr std::size_t kMaxExtensionDegree = 8;

/// Monic polynomial irreducibility over GF(p) by trial division. Coefficients
/// are constant term first.
bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> monic);
/// First monic irreducible polynomial of degree m, scanning lower
/// coefficients in ascending encoding order.
std::vector<std::uint32_t> default_modulus(std::uint32_t p, std::size_t m);

/// A finite magma given by its Cayley table; entry (s, t) is the index of s*t.
class SemigroupTable {
public:
  /// Throws InvalidInput on empty, ragged or out-of-range tables.
  SemigroupTable(std::vector<std::string> elements, std::vector<std::vector<std::size_t>> table);

  std::size_t order() const { return elements_.size(); }
  const std::vector<std::string>& elements() const { return elements_; }
  std::size_t op(std::size_t s, std::size_t t) const { return table_[s][t]; }
  const std::vector<std::vector<std::size_t>>& table() const { return table_; }

  bool operator==(const SemigroupTable&) const = default;

private:
  std::vector<std::string> elements_;
  std::vector<std::vector<std::size_t>> table_;
};

struct SemigroupViolation {
  std::size_t s, t, u;
  std::size_t lhs; // (st)u
  std::size_t rhs; // s(tu)
};

std::optional<SemigroupViolation> validate_semigroup(const SemigroupTable& s);

/// k[S]; throws InvalidInput when the table is not associative.
StructureAlgebra semigroup_algebra(const SemigroupTable& s, const FieldSpec& field);

/// s*t = s on n elements.
SemigroupTable left_zero_semigroup(std::size_t n);
/// Z/n under addition.
SemigroupTable cyclic_group(std::size_t n);

} // namespace mbasis
