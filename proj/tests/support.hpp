#pragma once

#include <random>
#include <string>
#include <vector>

#include "mbasis/algebra.hpp"
#include "mbasis/field.hpp"
#include "mbasis/linalg.hpp"

namespace testing {

inline mbasis::Scalar random_scalar(const mbasis::FieldSpec& f, std::mt19937_64& rng) {
  if (f.is_finite()) {
    return mbasis::Scalar::residue(static_cast<std::int64_t>(rng() % f.modulus()), f.modulus());
  }
  std::uniform_int_distribution<long> num(-20, 20), den(1, 9);
  return f.from_int(num(rng)) / f.from_int(den(rng));
}

inline mbasis::Vector random_vector(const mbasis::FieldSpec& f, std::size_t n, std::mt19937_64& rng) {
  mbasis::Vector v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(random_scalar(f, rng));
  return v;
}

inline mbasis::Matrix random_matrix(const mbasis::FieldSpec& f, std::size_t rows, std::size_t cols,
                                    std::mt19937_64& rng) {
  mbasis::Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = random_scalar(f, rng);
  return m;
}

inline mbasis::Matrix random_invertible(const mbasis::FieldSpec& f, std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    mbasis::Matrix m = random_matrix(f, n, n, rng);
    if (mbasis::rank(m) == n) return m;
  }
}

struct Named {
  std::string name;
  mbasis::StructureAlgebra algebra;
};

/// Built-in constructors over GF(p) with dimension at most `max_dim`.
inline std::vector<Named> builtin_corpus(std::uint32_t p, std::size_t max_dim) {
  using namespace mbasis;
  const FieldSpec f = FieldSpec::prime(p);
  const std::string tag = "/gf" + std::to_string(p);
  std::vector<Named> out;
  for (std::size_t n = 1; n * n <= max_dim; ++n) out.push_back({"matrix" + std::to_string(n) + tag, matrix_algebra(n, f)});
  for (std::size_t n = 1; n <= max_dim; ++n) {
    out.push_back({"product" + std::to_string(n) + tag, product_algebra(n, f)});
    out.push_back({"zero" + std::to_string(n) + tag, zero_algebra(n, f)});
    out.push_back({"leftzero" + std::to_string(n) + tag, semigroup_algebra(left_zero_semigroup(n), f)});
    out.push_back({"cyclic" + std::to_string(n) + tag, semigroup_algebra(cyclic_group(n), f)});
    const auto modulus = default_modulus(p, n);
    out.push_back({"gf" + std::to_string(p) + "^" + std::to_string(n), finite_field_extension(p, n, modulus)});
  }
  if (p != 2 && max_dim >= 4) out.push_back({"quaternion" + tag, quaternion_algebra(f)});
  return out;
}

/// All 2- and 3-element semigroup tables, as enumerated over raw tables.
inline std::vector<mbasis::SemigroupTable> all_semigroups(std::size_t m) {
  std::vector<mbasis::SemigroupTable> out;
  std::size_t cells = m * m, total = 1;
  for (std::size_t i = 0; i < cells; ++i) total *= m;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < m; ++i) names.push_back("s" + std::to_string(i));
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<std::vector<std::size_t>> t(m, std::vector<std::size_t>(m));
    std::size_t c = code;
    for (std::size_t i = 0; i < cells; ++i) {
      t[i / m][i % m] = c % m;
      c /= m;
    }
    mbasis::SemigroupTable s(names, std::move(t));
    if (!mbasis::validate_semigroup(s)) out.push_back(std::move(s));
  }
  return out;
}

} // namespace testing
