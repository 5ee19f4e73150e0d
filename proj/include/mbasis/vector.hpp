#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mbasis/field.hpp"

namespace mbasis {

/// Coordinates with respect to the distinguished basis e_1..e_n.
using Vector = std::vector<Scalar>;

Vector zero_vector(const FieldSpec& field, std::size_t n);
Vector unit_vector(const FieldSpec& field, std::size_t n, std::size_t i);

bool is_zero(std::span<const Scalar> v);
Vector add(std::span<const Scalar> a, std::span<const Scalar> b);
Vector sub(std::span<const Scalar> a, std::span<const Scalar> b);
Vector scale(const Scalar& c, std::span<const Scalar> v);
/// y += c * x
void axpy(const Scalar& c, std::span<const Scalar> x, std::span<Scalar> y);
Scalar dot(std::span<const Scalar> a, std::span<const Scalar> b);

/// "(1,0,1/2)"
std::string to_string(std::span<const Scalar> v);

// Integer encodings of vectors over GF(p): code(v) = sum_i v_i * p^i, so
// coordinate 0 is the least significant digit.

/// p^n, or LimitExceeded when it exceeds `limit`.
std::uint64_t space_size(const FieldSpec& field, std::size_t n, std::uint64_t limit);
std::uint64_t encode(std::span<const Scalar> v);
Vector decode(const FieldSpec& field, std::size_t n, std::uint64_t code);

} // namespace mbasis
