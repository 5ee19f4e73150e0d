#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "mbasis/algebra.hpp"
#include "mbasis/linalg.hpp"

namespace mbasis {

/// Default cap on p^n for exhaustive scans.
inline constexpr std::uint64_t kDefaultElementLimit = std::uint64_t{1} << 20;

enum class IdealOrigin { hyperplane_scan, contains_square, functional_kernel, generated };
std::string_view to_string(IdealOrigin origin);

/// A subspace that has been checked to be a two-sided ideal.
struct IdealCertificate {
  Subspace subspace;
  std::size_t codim;
  bool left_closed;
  bool right_closed;
  IdealOrigin origin;
};

enum class Codim1Method { finite_enumeration, square_criterion };
std::string_view to_string(Codim1Method method);

struct Codim1Report {
  std::vector<IdealCertificate> ideals;
  /// The list is provably exhaustive.
  bool complete;
  Codim1Method method;
  /// Hyperplanes examined by the finite scan (0 for the square criterion).
  std::uint64_t hyperplanes_scanned = 0;
};

struct IdealClosure {
  bool left_closed;
  bool right_closed;
  bool two_sided() const { return left_closed && right_closed; }
};

/// Tests e_i * v and v * e_i against `s` for every basis row v of `s`.
IdealClosure is_ideal(const StructureAlgebra& a, const Subspace& s);

/// Smallest two-sided ideal containing `generators`.
Subspace ideal_generated_by(const StructureAlgebra& a, std::span<const Vector> generators);

/// span{e_i e_j}.
Subspace algebra_square(const StructureAlgebra& a);

/// Over GF(p) every hyperplane is tested; over Q only a hyperplane through
/// A^2 is reported and the report is marked incomplete.
Codim1Report enumerate_codim1_ideals(const StructureAlgebra& a, std::uint64_t element_limit = kDefaultElementLimit);

/// Every nonzero phi with phi(e_i e_j) = phi(e_i) phi(e_j), in ascending
/// encoding order. Finite fields only.
std::vector<Vector> enumerate_multiplicative_functionals(const StructureAlgebra& a,
                                                         std::uint64_t element_limit = kDefaultElementLimit);

/// The hyperplane {x : phi(x) = 0}.
Subspace functional_kernel(const FieldSpec& field, std::span<const Scalar> functional);

struct SimplicityVerdict {
  enum class Kind { simple, not_simple, unknown };
  Kind kind;
  /// A proper nonzero ideal, or A^2 for zero-multiplication algebras.
  std::optional<Subspace> witness;
  /// The vector whose generated ideal is proper, when there is one.
  std::optional<Vector> generator;
  std::uint64_t generators_checked = 0;
};
std::string_view to_string(SimplicityVerdict::Kind kind);

/// Zero-multiplication algebras are never simple, including in dimension 1.
SimplicityVerdict is_simple(const StructureAlgebra& a, std::uint64_t element_limit = kDefaultElementLimit);

} // namespace mbasis
