#include "mbasis/vector.hpp"

#include "mbasis/errors.hpp"

namespace mbasis {

namespace {

void require_same_length(std::span<const Scalar> a, std::span<const Scalar> b) {
  if (a.size() != b.size()) {
    throw InvalidInput("vector length mismatch: " + std::to_string(a.size()) + " vs " +
                       std::to_string(b.size()));
  }
}

} // namespace

Vector zero_vector(const FieldSpec& field, std::size_t n) { return Vector(n, field.zero()); }

Vector unit_vector(const FieldSpec& field, std::size_t n, std::size_t i) {
  Vector v = zero_vector(field, n);
  v.at(i) = field.one();
  return v;
}

bool is_zero(std::span<const Scalar> v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Vector add(std::span<const Scalar> a, std::span<const Scalar> b) {
  require_same_length(a, b);
  Vector out(a.begin(), a.end());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

Vector sub(std::span<const Scalar> a, std::span<const Scalar> b) {
  require_same_length(a, b);
  Vector out(a.begin(), a.end());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  return out;
}

Vector scale(const Scalar& c, std::span<const Scalar> v) {
  Vector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(c * x);
  return out;
}

void axpy(const Scalar& c, std::span<const Scalar> x, std::span<Scalar> y) {
  require_same_length(x, y);
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i].is_zero()) y[i] += c * x[i];
  }
}

Scalar dot(std::span<const Scalar> a, std::span<const Scalar> b) {
  require_same_length(a, b);
  if (a.empty()) throw InvalidInput("dot product of empty vectors has no field");
  Scalar acc = a[0] * b[0];
  for (std::size_t i = 1; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

std::string to_string(std::span<const Scalar> v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += v[i].to_string();
  }
  return out + ")";
}

std::uint64_t space_size(const FieldSpec& field, std::size_t n, std::uint64_t limit) {
  if (!field.is_finite()) throw Unsupported("enumeration over " + field.name() + " is not supported");
  std::uint64_t size = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (size > limit / field.modulus()) {
      throw LimitExceeded(field.name() + "^" + std::to_string(n) + " exceeds the element limit " +
                          std::to_string(limit));
    }
    size *= field.modulus();
  }
  if (size > limit) {
    throw LimitExceeded(field.name() + "^" + std::to_string(n) + " exceeds the element limit " +
                        std::to_string(limit));
  }
  return size;
}

std::uint64_t encode(std::span<const Scalar> v) {
  std::uint64_t code = 0;
  for (std::size_t i = v.size(); i-- > 0;) {
    const FieldSpec f = v[i].field();
    if (!f.is_finite()) throw Unsupported("only vectors over GF(p) have integer encodings");
    code = code * f.modulus() + v[i].residue_value();
  }
  return code;
}

Vector decode(const FieldSpec& field, std::size_t n, std::uint64_t code) {
  if (!field.is_finite()) throw Unsupported("only vectors over GF(p) have integer encodings");
  Vector v;
  v.reserve(n);
  const std::uint32_t p = field.modulus();
  for (std::size_t i = 0; i < n; ++i) {
    v.push_back(Scalar::residue(static_cast<std::int64_t>(code % p), p));
    code /= p;
  }
  return v;
}

} // namespace mbasis
