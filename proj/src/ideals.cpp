#include "mbasis/ideals.hpp"

#include "mbasis/errors.hpp"

namespace mbasis {

std::string_view to_string(IdealOrigin origin) {
  switch (origin) {
  case IdealOrigin::hyperplane_scan: return "hyperplane_scan";
  case IdealOrigin::contains_square: return "contains_square";
  case IdealOrigin::functional_kernel: return "functional_kernel";
  case IdealOrigin::generated: return "generated";
  }
  return "unknown";
}

std::string_view to_string(Codim1Method method) {
  return method == Codim1Method::finite_enumeration ? "finite_enumeration" : "square_criterion";
}

std::string_view to_string(SimplicityVerdict::Kind kind) {
  switch (kind) {
  case SimplicityVerdict::Kind::simple: return "simple";
  case SimplicityVerdict::Kind::not_simple: return "not_simple";
  case SimplicityVerdict::Kind::unknown: return "unknown";
  }
  return "unknown";
}

namespace {

void require_ambient(const StructureAlgebra& a, const Subspace& s) {
  if (s.ambient_dim() != a.dim() || s.field() != a.field()) {
    throw InvalidInput("subspace does not live in the algebra");
  }
}

std::vector<Vector> units(const StructureAlgebra& a) {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < a.dim(); ++i) out.push_back(unit_vector(a.field(), a.dim(), i));
  return out;
}

// Row vector phi such that phi(x) = 1 picks out the hyperplane; the first
// nonzero coordinate of a normalized functional is 1.
bool is_normalized(std::span<const Scalar> phi) {
  for (const auto& c : phi) {
    if (!c.is_zero()) return c.is_one();
  }
  return false;
}

} // namespace

IdealClosure is_ideal(const StructureAlgebra& a, const Subspace& s) {
  require_ambient(a, s);
  IdealClosure closure{true, true};
  const auto basis_units = units(a);
  for (std::size_t r = 0; r < s.dim(); ++r) {
    const auto v = s.basis().row(r);
    for (const auto& e : basis_units) {
      if (closure.left_closed && !member(s, multiply(a, e, v))) closure.left_closed = false;
      if (closure.right_closed && !member(s, multiply(a, v, e))) closure.right_closed = false;
      if (!closure.left_closed && !closure.right_closed) return closure;
    }
  }
  return closure;
}

Subspace ideal_generated_by(const StructureAlgebra& a, std::span<const Vector> generators) {
  for (const auto& g : generators) {
    if (g.size() != a.dim()) throw InvalidInput("generator dimension does not match the algebra");
  }
  Subspace current = span(a.field(), a.dim(), generators);
  const auto basis_units = units(a);
  for (;;) {
    std::vector<Vector> images;
    for (std::size_t r = 0; r < current.dim(); ++r) {
      const auto v = current.basis().row(r);
      for (const auto& e : basis_units) {
        images.push_back(multiply(a, e, v));
        images.push_back(multiply(a, v, e));
      }
    }
    Subspace next = subspace_sum(current, span(a.field(), a.dim(), images));
    if (next.dim() == current.dim()) return current;
    current = std::move(next);
  }
}

Subspace algebra_square(const StructureAlgebra& a) {
  std::vector<Vector> products;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) products.push_back(a.product(i, j));
  }
  return span(a.field(), a.dim(), products);
}

Subspace functional_kernel(const FieldSpec& field, std::span<const Scalar> functional) {
  const Vector row(functional.begin(), functional.end());
  return kernel(Matrix::from_rows(field, row.size(), std::span<const Vector>(&row, 1)));
}

namespace {

Codim1Report rational_codim1(const StructureAlgebra& a) {
  Codim1Report report{{}, false, Codim1Method::square_criterion, 0};
  const Subspace square = algebra_square(a);
  if (square.dim() == a.dim()) return report;

  // phi vanishes on A^2 and is 1 on the first coordinate that is not a pivot
  // of A^2; any hyperplane through A^2 is an ideal since A*H and H*A lie in A^2.
  std::vector<bool> is_pivot(a.dim(), false);
  for (auto c : square.pivot_cols()) is_pivot[c] = true;
  std::size_t free_col = 0;
  while (is_pivot[free_col]) ++free_col;

  Matrix constraints(a.field(), square.dim() + 1, a.dim());
  for (std::size_t r = 0; r < square.dim(); ++r) {
    for (std::size_t c = 0; c < a.dim(); ++c) constraints(r, c) = square.basis()(r, c);
  }
  constraints(square.dim(), free_col) = a.field().one();
  Vector rhs = zero_vector(a.field(), square.dim() + 1);
  rhs.back() = a.field().one();
  const auto phi = solve_row(a.field(), constraints, rhs);
  if (!phi) throw InternalError("no functional annihilates a proper A^2");

  Subspace hyperplane = functional_kernel(a.field(), *phi);
  const IdealClosure closure = is_ideal(a, hyperplane);
  if (!closure.two_sided() || codimension(hyperplane) != 1) {
    throw InternalError("hyperplane through A^2 failed ideal verification");
  }
  report.ideals.push_back({std::move(hyperplane), 1, true, true, IdealOrigin::contains_square});
  return report;
}

} // namespace

Codim1Report enumerate_codim1_ideals(const StructureAlgebra& a, std::uint64_t element_limit) {
  if (!a.field().is_finite()) return rational_codim1(a);

  const std::uint64_t total = space_size(a.field(), a.dim(), element_limit);
  Codim1Report report{{}, true, Codim1Method::finite_enumeration, 0};
  for (std::uint64_t code = 1; code < total; ++code) {
    const Vector phi = decode(a.field(), a.dim(), code);
    if (!is_normalized(phi)) continue;
    ++report.hyperplanes_scanned;
    Subspace hyperplane = functional_kernel(a.field(), phi);
    const IdealClosure closure = is_ideal(a, hyperplane);
    if (closure.two_sided()) {
      report.ideals.push_back({std::move(hyperplane), 1, true, true, IdealOrigin::hyperplane_scan});
    }
  }
  return report;
}

std::vector<Vector> enumerate_multiplicative_functionals(const StructureAlgebra& a, std::uint64_t element_limit) {
  const std::uint64_t total = space_size(a.field(), a.dim(), element_limit);
  const std::size_t n = a.dim();
  std::vector<Vector> out;
  for (std::uint64_t code = 1; code < total; ++code) {
    Vector phi = decode(a.field(), n, code);
    bool multiplicative = true;
    for (std::size_t i = 0; i < n && multiplicative; ++i) {
      for (std::size_t j = 0; j < n && multiplicative; ++j) {
        multiplicative = dot(phi, a.product(i, j)) == phi[i] * phi[j];
      }
    }
    if (multiplicative) out.push_back(std::move(phi));
  }
  return out;
}

SimplicityVerdict is_simple(const StructureAlgebra& a, std::uint64_t element_limit) {
  using Kind = SimplicityVerdict::Kind;
  const Subspace square = algebra_square(a);
  if (square.dim() == 0) return {Kind::not_simple, square, std::nullopt, 0};

  if (!a.field().is_finite()) {
    Codim1Report report = enumerate_codim1_ideals(a, element_limit);
    if (!report.ideals.empty()) return {Kind::not_simple, std::move(report.ideals.front().subspace), std::nullopt, 0};
    return {Kind::unknown, std::nullopt, std::nullopt, 0};
  }

  std::uint64_t total = 0;
  try {
    total = space_size(a.field(), a.dim(), element_limit);
  } catch (const LimitExceeded&) {
    return {Kind::unknown, std::nullopt, std::nullopt, 0};
  }

  SimplicityVerdict verdict{Kind::simple, std::nullopt, std::nullopt, 0};
  for (std::uint64_t code = 1; code < total; ++code) {
    Vector v = decode(a.field(), a.dim(), code);
    ++verdict.generators_checked;
    Subspace ideal = ideal_generated_by(a, std::span<const Vector>(&v, 1));
    if (ideal.dim() != a.dim()) {
      verdict.kind = Kind::not_simple;
      verdict.witness = std::move(ideal);
      verdict.generator = std::move(v);
      return verdict;
    }
  }
  return verdict;
}

} // namespace mbasis
