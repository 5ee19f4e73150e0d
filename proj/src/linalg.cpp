#include "mbasis/linalg.hpp"

#include <utility>

#include "mbasis/errors.hpp"

namespace mbasis {

Matrix::Matrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, field.zero()) {}

Matrix Matrix::identity(const FieldSpec& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

Matrix Matrix::from_rows(const FieldSpec& field, std::size_t cols, std::span<const Vector> rows) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw InvalidInput("row " + std::to_string(r) + " has length " + std::to_string(rows[r].size()) +
                         ", expected " + std::to_string(cols));
    }
    for (std::size_t c = 0; c < cols; ++c) {
      if (rows[r][c].field() != field) throw InvalidInput("matrix entry outside " + field.name());
      m(r, c) = rows[r][c];
    }
  }
  return m;
}

Matrix Matrix::from_columns(const FieldSpec& field, std::size_t rows, std::span<const Vector> columns) {
  return from_rows(field, rows, columns).transposed();
}

Vector Matrix::column(std::size_t c) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

std::vector<Vector> Matrix::row_vectors() const {
  std::vector<Vector> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.emplace_back(row(r).begin(), row(r).end());
  return out;
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void Matrix::truncate_rows(std::size_t count) {
  if (count >= rows_) return;
  entries_.erase(entries_.begin() + static_cast<std::ptrdiff_t>(count * cols_), entries_.end());
  rows_ = count;
}

Matrix Matrix::transposed() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

Vector operator*(const Matrix& m, std::span<const Scalar> x) {
  if (x.size() != m.cols()) throw InvalidInput("matrix-vector dimension mismatch");
  Vector out = zero_vector(m.field(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!x[c].is_zero() && !m(r, c).is_zero()) out[r] += m(r, c) * x[c];
    }
  }
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw InvalidInput("matrix product dimension mismatch");
  Matrix out(a.field(), a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(r, k).is_zero()) continue;
      axpy(a(r, k), b.row(k), out.row(r));
    }
  }
  return out;
}

RrefResult rref(const Matrix& m) {
  Matrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
    std::size_t found = pivot_row;
    while (found < a.rows() && a(found, col).is_zero()) ++found;
    if (found == a.rows()) continue;
    a.swap_rows(pivot_row, found);

    const Scalar inv = a(pivot_row, col).inverse();
    for (auto& x : a.row(pivot_row)) x *= inv;

    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == pivot_row || a(r, col).is_zero()) continue;
      const Scalar factor = -a(r, col);
      axpy(factor, a.row(pivot_row), a.row(r));
    }
    pivots.push_back(col);
    ++pivot_row;
  }
  return {std::move(a), pivots.size(), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Matrix inverse(const Matrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw InvalidInput("only square matrices are invertible");
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = m.field().one();
  }
  RrefResult red = rref(aug);
  if (red.rank < n || red.pivot_cols[n - 1] != n - 1) throw InvalidInput("matrix is singular");
  Matrix inv(m.field(), n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = red.reduced(r, n + c);
  }
  return inv;
}

Subspace Subspace::zero(const FieldSpec& field, std::size_t ambient_dim) {
  return span(field, ambient_dim, {});
}

Subspace Subspace::full(const FieldSpec& field, std::size_t ambient_dim) {
  return row_space(Matrix::identity(field, ambient_dim));
}

Subspace span(const FieldSpec& field, std::size_t ambient_dim, std::span<const Vector> vectors) {
  RrefResult red = rref(Matrix::from_rows(field, ambient_dim, vectors));
  red.reduced.truncate_rows(red.rank);
  return Subspace(std::move(red.reduced), std::move(red.pivot_cols));
}

Subspace row_space(const Matrix& m) {
  const auto rows = m.row_vectors();
  return span(m.field(), m.cols(), rows);
}

bool member(const Subspace& s, std::span<const Scalar> v) {
  if (v.size() != s.ambient_dim()) {
    throw InvalidInput("vector of length " + std::to_string(v.size()) + " tested against subspace of k^" +
                       std::to_string(s.ambient_dim()));
  }
  Vector residual(v.begin(), v.end());
  const auto& pivots = s.pivot_cols();
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    const Scalar c = residual[pivots[r]];
    if (!c.is_zero()) axpy(-c, s.basis().row(r), residual);
  }
  return is_zero(residual);
}

Subspace kernel(const Matrix& m) {
  const RrefResult red = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : red.pivot_cols) is_pivot[c] = true;

  std::vector<Vector> generators;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector x = unit_vector(m.field(), m.cols(), free);
    for (std::size_t r = 0; r < red.rank; ++r) x[red.pivot_cols[r]] = -red.reduced(r, free);
    generators.push_back(std::move(x));
  }
  return span(m.field(), m.cols(), generators);
}

std::optional<Vector> solve_row(const FieldSpec& field, const Matrix& constraints,
                                std::span<const Scalar> rhs) {
  if (rhs.size() != constraints.rows()) throw InvalidInput("right-hand side length mismatch");
  const std::size_t n = constraints.cols();
  Matrix aug(field, constraints.rows(), n + 1);
  for (std::size_t r = 0; r < constraints.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = constraints(r, c);
    aug(r, n) = rhs[r];
  }
  const RrefResult red = rref(aug);
  if (!red.pivot_cols.empty() && red.pivot_cols.back() == n) return std::nullopt;
  Vector x = zero_vector(field, n);
  for (std::size_t r = 0; r < red.rank; ++r) x[red.pivot_cols[r]] = red.reduced(r, n);
  return x;
}

std::size_t codimension(const Subspace& s) { return s.ambient_dim() - s.dim(); }

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim() || a.field() != b.field()) {
    throw InvalidInput("subspace sum of mismatched ambient spaces");
  }
  auto rows = a.basis().row_vectors();
  for (auto& r : b.basis().row_vectors()) rows.push_back(std::move(r));
  return span(a.field(), a.ambient_dim(), rows);
}

bool is_subspace_of(const Subspace& a, const Subspace& b) {
  for (std::size_t r = 0; r < a.dim(); ++r) {
    if (!member(b, a.basis().row(r))) return false;
  }
  return true;
}

} // namespace mbasis
