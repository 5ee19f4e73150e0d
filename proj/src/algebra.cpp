#include "mbasis/algebra.hpp"

#include "mbasis/errors.hpp"

namespace mbasis {

StructureAlgebra::StructureAlgebra(FieldSpec field, std::size_t dim, std::vector<Vector> table,
                                   std::vector<std::string> labels)
    : field_(field), dim_(dim), table_(std::move(table)), labels_(std::move(labels)) {
  if (dim_ == 0) throw InvalidInput("algebra dimension must be at least 1");
  if (table_.size() != dim_ * dim_) {
    throw InvalidInput("structure table has " + std::to_string(table_.size()) + " entries, expected " +
                       std::to_string(dim_ * dim_));
  }
  for (const auto& v : table_) {
    if (v.size() != dim_) throw InvalidInput("structure constant vector of wrong length");
    for (const auto& c : v) {
      if (c.field() != field_) throw InvalidInput("structure constant outside " + field_.name());
    }
  }
  if (!labels_.empty() && labels_.size() != dim_) {
    throw InvalidInput("expected " + std::to_string(dim_) + " labels, got " + std::to_string(labels_.size()));
  }
}

Vector multiply(const StructureAlgebra& a, std::span<const Scalar> x, std::span<const Scalar> y) {
  const std::size_t n = a.dim();
  if (x.size() != n || y.size() != n) throw InvalidInput("element dimension does not match the algebra");
  Vector out = zero_vector(a.field(), n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      axpy(x[i] * y[j], a.product(i, j), out);
    }
  }
  return out;
}

std::optional<AssociativityViolation> check_associativity(const StructureAlgebra& a) {
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Vector& ij = a.product(i, j);
      for (std::size_t l = 0; l < n; ++l) {
        Vector lhs = multiply(a, ij, unit_vector(a.field(), n, l));
        Vector rhs = multiply(a, unit_vector(a.field(), n, i), a.product(j, l));
        if (lhs != rhs) return AssociativityViolation{i, j, l, std::move(lhs), std::move(rhs)};
      }
    }
  }
  return std::nullopt;
}

std::optional<Vector> find_identity(const StructureAlgebra& a) {
  const std::size_t n = a.dim();
  Matrix constraints(a.field(), 2 * n * n, n);
  Vector rhs = zero_vector(a.field(), 2 * n * n);
  std::size_t row = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t m = 0; m < n; ++m) {
      // u * e_i = e_i, coordinate m
      for (std::size_t k = 0; k < n; ++k) constraints(row, k) = a.product(k, i)[m];
      if (i == m) rhs[row] = a.field().one();
      ++row;
      // e_i * u = e_i, coordinate m
      for (std::size_t k = 0; k < n; ++k) constraints(row, k) = a.product(i, k)[m];
      if (i == m) rhs[row] = a.field().one();
      ++row;
    }
  }
  return solve_row(a.field(), constraints, rhs);
}

StructureAlgebra change_basis(const StructureAlgebra& a, const Matrix& p) {
  const std::size_t n = a.dim();
  if (p.rows() != n || p.cols() != n || p.field() != a.field()) {
    throw InvalidInput("change of basis must be an invertible " + std::to_string(n) + "x" + std::to_string(n) +
                       " matrix over " + a.field().name());
  }
  const Matrix p_inv = inverse(p);
  std::vector<Vector> cols;
  for (std::size_t i = 0; i < n; ++i) cols.push_back(p.column(i));
  std::vector<Vector> table;
  table.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) table.push_back(p_inv * multiply(a, cols[i], cols[j]));
  }
  return StructureAlgebra(a.field(), n, std::move(table));
}

StructureAlgebra matrix_algebra(std::size_t n, const FieldSpec& field) {
  if (n == 0) throw InvalidInput("matrix size must be at least 1");
  const std::size_t d = n * n;
  std::vector<Vector> table;
  table.reserve(d * d);
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < d; ++x) {
    const std::size_t a = x / n, b = x % n;
    labels.push_back("E(" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ")");
    for (std::size_t y = 0; y < d; ++y) {
      const std::size_t c = y / n, e = y % n;
      table.push_back(b == c ? unit_vector(field, d, a * n + e) : zero_vector(field, d));
    }
  }
  return StructureAlgebra(field, d, std::move(table), std::move(labels));
}

StructureAlgebra product_algebra(std::size_t n, const FieldSpec& field) {
  if (n == 0) throw InvalidInput("product algebra needs at least one factor");
  std::vector<Vector> table;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back("e" + std::to_string(i + 1));
    for (std::size_t j = 0; j < n; ++j) table.push_back(i == j ? unit_vector(field, n, i) : zero_vector(field, n));
  }
  return StructureAlgebra(field, n, std::move(table), std::move(labels));
}

StructureAlgebra quaternion_algebra(const FieldSpec& field) {
  if (field.characteristic() == 2) throw InvalidInput("quaternions need characteristic other than 2");
  // e_i * e_j = sign * e_index for basis {1, i, j, k}
  struct Entry {
    int sign;
    std::size_t index;
  };
  static constexpr Entry kTable[4][4] = {
      {{1, 0}, {1, 1}, {1, 2}, {1, 3}},
      {{1, 1}, {-1, 0}, {1, 3}, {-1, 2}},
      {{1, 2}, {-1, 3}, {-1, 0}, {1, 1}},
      {{1, 3}, {1, 2}, {-1, 1}, {-1, 0}},
  };
  std::vector<Vector> table;
  for (const auto& row : kTable) {
    for (const auto& e : row) {
      Vector v = zero_vector(field, 4);
      v[e.index] = field.from_int(e.sign);
      table.push_back(std::move(v));
    }
  }
  return StructureAlgebra(field, 4, std::move(table), {"1", "i", "j", "k"});
}

namespace {

using Poly = std::vector<std::uint32_t>; // constant term first

// Remainder of `f` modulo the monic polynomial `g` over GF(p).
Poly poly_mod(Poly f, const Poly& g, std::uint32_t p) {
  const std::size_t dg = g.size() - 1;
  while (f.size() > dg) {
    const std::uint64_t lead = f.back();
    const std::size_t shift = f.size() - 1 - dg;
    if (lead != 0) {
      for (std::size_t i = 0; i <= dg; ++i) {
        const std::uint64_t sub = lead * g[i] % p;
        f[shift + i] = static_cast<std::uint32_t>((f[shift + i] + p - sub) % p);
      }
    }
    f.pop_back();
  }
  return f;
}

bool all_zero(const Poly& f) {
  for (auto c : f) {
    if (c != 0) return false;
  }
  return true;
}

// Trial divisions performed for degree m over GF(p): sum of p^d, d <= m/2.
constexpr std::uint64_t kTrialDivisionBudget = std::uint64_t{1} << 26;

} // namespace

bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> monic) {
  if (monic.size() < 2 || monic.back() != 1) throw InvalidInput("polynomial must be monic of degree >= 1");
  const std::size_t m = monic.size() - 1;
  const Poly f(monic.begin(), monic.end());
  std::uint64_t budget = 0;
  for (std::size_t d = 1; d <= m / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) {
      count *= p;
      if (count > kTrialDivisionBudget) break;
    }
    budget += count;
    if (budget > kTrialDivisionBudget) {
      throw LimitExceeded("irreducibility test over GF(" + std::to_string(p) + ") of degree " + std::to_string(m) +
                          " exceeds the trial-division budget");
    }
    Poly g(d + 1, 0);
    g[d] = 1;
    for (std::uint64_t code = 0; code < count; ++code) {
      std::uint64_t c = code;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      if (all_zero(poly_mod(f, g, p))) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> default_modulus(std::uint32_t p, std::size_t m) {
  if (!is_prime(p)) throw InvalidInput(std::to_string(p) + " is not prime");
  if (m == 0 || m > kMaxExtensionDegree) throw InvalidInput("extension degree must be in [1, 8]");
  Poly f(m + 1, 0);
  f[m] = 1;
  for (std::uint64_t code = 0;; ++code) {
    std::uint64_t c = code;
    for (std::size_t i = 0; i < m; ++i) {
      f[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    if (is_irreducible(p, f)) return f;
  }
}

StructureAlgebra finite_field_extension(std::uint32_t p, std::size_t m, std::span<const std::uint32_t> modulus) {
  const FieldSpec field = FieldSpec::prime(p);
  if (m == 0 || m > kMaxExtensionDegree) throw InvalidInput("extension degree must be in [1, 8]");
  if (modulus.size() != m + 1) {
    throw InvalidInput("modulus must list " + std::to_string(m + 1) + " coefficients");
  }
  for (auto c : modulus) {
    if (c >= p) throw InvalidInput("modulus coefficient " + std::to_string(c) + " not reduced mod " + std::to_string(p));
  }
  if (modulus.back() != 1) throw InvalidInput("modulus must be monic");
  if (!is_irreducible(p, modulus)) throw InvalidInput("modulus is reducible over GF(" + std::to_string(p) + ")");

  const Poly g(modulus.begin(), modulus.end());
  std::vector<Vector> table;
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < m; ++a) {
    labels.push_back(a == 0 ? "1" : a == 1 ? "w" : "w^" + std::to_string(a));
    for (std::size_t b = 0; b < m; ++b) {
      Poly f(a + b + 1, 0);
      f[a + b] = 1;
      const Poly r = poly_mod(std::move(f), g, p);
      Vector v = zero_vector(field, m);
      for (std::size_t i = 0; i < r.size(); ++i) v[i] = Scalar::residue(r[i], p);
      table.push_back(std::move(v));
    }
  }
  return StructureAlgebra(field, m, std::move(table), std::move(labels));
}

StructureAlgebra zero_algebra(std::size_t n, const FieldSpec& field) {
  if (n == 0) throw InvalidInput("algebra dimension must be at least 1");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i + 1));
  return StructureAlgebra(field, n, std::vector<Vector>(n * n, zero_vector(field, n)), std::move(labels));
}

SemigroupTable::SemigroupTable(std::vector<std::string> elements, std::vector<std::vector<std::size_t>> table)
    : elements_(std::move(elements)), table_(std::move(table)) {
  const std::size_t m = elements_.size();
  if (m == 0) throw InvalidInput("semigroup must have at least one element");
  if (table_.size() != m) throw InvalidInput("semigroup table must have one row per element");
  for (const auto& row : table_) {
    if (row.size() != m) throw InvalidInput("semigroup table must be square");
    for (auto v : row) {
      if (v >= m) throw InvalidInput("semigroup table entry " + std::to_string(v) + " out of range");
    }
  }
}

std::optional<SemigroupViolation> validate_semigroup(const SemigroupTable& s) {
  const std::size_t m = s.order();
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      for (std::size_t c = 0; c < m; ++c) {
        const std::size_t lhs = s.op(s.op(a, b), c);
        const std::size_t rhs = s.op(a, s.op(b, c));
        if (lhs != rhs) return SemigroupViolation{a, b, c, lhs, rhs};
      }
    }
  }
  return std::nullopt;
}

StructureAlgebra semigroup_algebra(const SemigroupTable& s, const FieldSpec& field) {
  if (auto bad = validate_semigroup(s)) {
    throw InvalidInput("semigroup table is not associative at (" + std::to_string(bad->s) + "," +
                       std::to_string(bad->t) + "," + std::to_string(bad->u) + ")");
  }
  const std::size_t m = s.order();
  std::vector<Vector> table;
  table.reserve(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) table.push_back(unit_vector(field, m, s.op(a, b)));
  }
  return StructureAlgebra(field, m, std::move(table), s.elements());
}

SemigroupTable left_zero_semigroup(std::size_t n) {
  std::vector<std::string> names;
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t s = 0; s < n; ++s) {
    names.push_back("s" + std::to_string(s + 1));
    for (std::size_t t = 0; t < n; ++t) table[s][t] = s;
  }
  return SemigroupTable(std::move(names), std::move(table));
}

SemigroupTable cyclic_group(std::size_t n) {
  std::vector<std::string> names;
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t s = 0; s < n; ++s) {
    names.push_back(s == 0 ? "1" : s == 1 ? "g" : "g^" + std::to_string(s));
    for (std::size_t t = 0; t < n; ++t) table[s][t] = (s + t) % n;
  }
  return SemigroupTable(std::move(names), std::move(table));
}

} // namespace mbasis
