#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace mbasis {

class Scalar;

/// The base field k: either the rationals or a prime field GF(p).
class FieldSpec {
public:
  enum class Kind { rational, prime };

  /// Largest accepted modulus is 2^16 - 1.
  static constexpr std::uint32_t kMaxPrime = (1u << 16) - 1;

  static FieldSpec rational() { return FieldSpec(Kind::rational, 0); }
  /// Throws InvalidInput unless 2 <= p < 2^16 and p is prime.
  static FieldSpec prime(std::uint64_t p);

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::prime; }
  /// p for GF(p), 0 for the rationals.
  std::uint32_t modulus() const { return p_; }
  /// Characteristic of the field (0 for the rationals).
  std::uint32_t characteristic() const { return p_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long value) const;

  /// Parses `-?digits(/digits)?` into canonical form.
  Scalar parse(std::string_view text) const;

  /// All elements of a prime field in ascending residue order.
  std::vector<Scalar> elements() const;

  /// "Q" or "GF(p)".
  std::string name() const;

  bool operator==(const FieldSpec&) const = default;

private:
  friend class Scalar;
  FieldSpec(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}

  Kind kind_;
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

/// An exact element of a FieldSpec. Rationals are kept in lowest terms with a
/// positive denominator; residues are kept in [0, p).
class Scalar {
public:
  static Scalar rational(mpq_class value);
  static Scalar residue(std::int64_t value, std::uint32_t p);

  FieldSpec field() const;
  bool is_zero() const;
  bool is_one() const;

  /// Residue value; only meaningful for prime-field scalars.
  std::uint32_t residue_value() const;
  /// Only meaningful for rational scalars.
  const mpq_class& rational_value() const;

  Scalar operator-() const;
  Scalar inverse() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  /// Residue order for GF(p), numeric order for Q.
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

  /// `num/den` with the denominator omitted when it is 1; residues in decimal.
  std::string to_string() const;

private:
  struct Residue {
    std::uint32_t value;
    std::uint32_t p;
  };

  explicit Scalar(Residue r) : rep_(r) {}
  explicit Scalar(mpq_class q) : rep_(std::move(q)) {}

  std::variant<Residue, mpq_class> rep_;
};

enum class ArithOp { add, sub, mul, div, inv, neg };

/// Field operation with operand-membership checks. `b` is required for the
/// binary operations and ignored for inv/neg.
Scalar arith(const FieldSpec& field, ArithOp op, const Scalar& a,
             const std::optional<Scalar>& b = std::nullopt);

/// Free-function spelling of FieldSpec::parse.
inline Scalar parse_scalar(const FieldSpec& field, std::string_view text) {
  return field.parse(text);
}

/// Free-function spelling of FieldSpec::elements.
inline std::vector<Scalar> enumerate_field(const FieldSpec& field) {
  return field.elements();
}

} // namespace mbasis
