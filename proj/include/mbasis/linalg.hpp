#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "mbasis/field.hpp"
#include "mbasis/vector.hpp"

namespace mbasis {

/// Dense row-major matrix over a single field.
class Matrix {
public:
  Matrix(FieldSpec field, std::size_t rows, std::size_t cols);

  static Matrix identity(const FieldSpec& field, std::size_t n);
  /// Every row must have length `cols`.
  static Matrix from_rows(const FieldSpec& field, std::size_t cols, std::span<const Vector> rows);
  static Matrix from_columns(const FieldSpec& field, std::size_t rows, std::span<const Vector> columns);

  const FieldSpec& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<const Scalar> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }
  std::span<Scalar> row(std::size_t r) { return {entries_.data() + r * cols_, cols_}; }
  Vector column(std::size_t c) const;
  std::vector<Vector> row_vectors() const;

  void swap_rows(std::size_t a, std::size_t b);
  /// Drops rows at index >= `count`.
  void truncate_rows(std::size_t count);

  Matrix transposed() const;

  bool operator==(const Matrix&) const = default;

private:
  FieldSpec field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> entries_;
};

Vector operator*(const Matrix& m, std::span<const Scalar> x);
Matrix operator*(const Matrix& a, const Matrix& b);

struct RrefResult {
  Matrix reduced;
  std::size_t rank;
  std::vector<std::size_t> pivot_cols;
};

/// Reduced row echelon form, zero rows kept at the bottom.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Throws InvalidInput when `m` is not square or is singular.
Matrix inverse(const Matrix& m);

/// A linear subspace of k^n held as the nonzero rows of its RREF, which makes
/// equal subspaces structurally equal.
class Subspace {
public:
  static Subspace zero(const FieldSpec& field, std::size_t ambient_dim);
  static Subspace full(const FieldSpec& field, std::size_t ambient_dim);

  const FieldSpec& field() const { return basis_.field(); }
  std::size_t ambient_dim() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  /// RREF rows, no zero rows.
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivot_cols() const { return pivots_; }

  bool operator==(const Subspace& other) const { return basis_ == other.basis_; }

private:
  friend Subspace span(const FieldSpec&, std::size_t, std::span<const Vector>);
  friend Subspace kernel(const Matrix&);
  Subspace(Matrix basis, std::vector<std::size_t> pivots)
      : basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace span(const FieldSpec& field, std::size_t ambient_dim, std::span<const Vector> vectors);
Subspace row_space(const Matrix& m);
bool member(const Subspace& s, std::span<const Scalar> v);
/// Right kernel: all x with m * x = 0.
Subspace kernel(const Matrix& m);
/// One solution of constraints * x = rhs with every free variable set to 0,
/// or nullopt when the system is inconsistent.
std::optional<Vector> solve_row(const FieldSpec& field, const Matrix& constraints,
                                std::span<const Scalar> rhs);
std::size_t codimension(const Subspace& s);
Subspace subspace_sum(const Subspace& a, const Subspace& b);
/// a is contained in b.
bool is_subspace_of(const Subspace& a, const Subspace& b);

} // namespace mbasis
