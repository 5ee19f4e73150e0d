#include "mbasis/field.hpp"

#include <algorithm>

#include "mbasis/errors.hpp"

namespace mbasis {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

std::uint32_t reduce(const mpz_class& value, std::uint32_t p) {
  mpz_class r = value % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  // extended Euclid on (a, p)
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::tie(t, new_t) = std::pair{new_t, t - q * new_t};
    std::tie(r, new_r) = std::pair{new_r, r - q * new_r};
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

} // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p < 2 || p > kMaxPrime) {
    throw InvalidInput("field modulus " + std::to_string(p) + " outside [2, 2^16)");
  }
  if (!is_prime(p)) throw InvalidInput("field modulus " + std::to_string(p) + " is not prime");
  return FieldSpec(Kind::prime, static_cast<std::uint32_t>(p));
}

Scalar FieldSpec::zero() const { return from_int(0); }
Scalar FieldSpec::one() const { return from_int(1); }

Scalar FieldSpec::from_int(long value) const {
  if (kind_ == Kind::rational) return Scalar::rational(mpq_class(value));
  return Scalar::residue(value, p_);
}

Scalar FieldSpec::parse(std::string_view text) const {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  std::string_view num = body;
  std::string_view den = "1";
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num = body.substr(0, slash);
    den = body.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den)) {
    throw InvalidInput("malformed scalar '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw InvalidInput("zero denominator in '" + std::string(text) + "'");
  if (negative) n = -n;

  if (kind_ == Kind::rational) {
    mpq_class q(n, d);
    q.canonicalize();
    return Scalar::rational(std::move(q));
  }
  std::uint32_t dr = reduce(d, p_);
  if (dr == 0) {
    throw InvalidInput("denominator of '" + std::string(text) + "' vanishes mod " + std::to_string(p_));
  }
  return Scalar::residue(reduce(n, p_), p_) / Scalar::residue(dr, p_);
}

std::vector<Scalar> FieldSpec::elements() const {
  if (kind_ == Kind::rational) throw Unsupported("the rational field is not enumerable");
  std::vector<Scalar> out;
  out.reserve(p_);
  for (std::uint32_t v = 0; v < p_; ++v) out.push_back(Scalar::residue(v, p_));
  return out;
}

std::string FieldSpec::name() const {
  if (kind_ == Kind::rational) return "Q";
  return "GF(" + std::to_string(p_) + ")";
}

Scalar Scalar::rational(mpq_class value) {
  value.canonicalize();
  return Scalar(std::move(value));
}

Scalar Scalar::residue(std::int64_t value, std::uint32_t p) {
  std::int64_t r = value % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return Scalar(Residue{static_cast<std::uint32_t>(r), p});
}

FieldSpec Scalar::field() const {
  if (const auto* r = std::get_if<Residue>(&rep_)) return FieldSpec(FieldSpec::Kind::prime, r->p);
  return FieldSpec::rational();
}

bool Scalar::is_zero() const {
  if (const auto* r = std::get_if<Residue>(&rep_)) return r->value == 0;
  return sgn(std::get<mpq_class>(rep_)) == 0;
}

bool Scalar::is_one() const {
  if (const auto* r = std::get_if<Residue>(&rep_)) return r->value == 1;
  return std::get<mpq_class>(rep_) == 1;
}

std::uint32_t Scalar::residue_value() const { return std::get<Residue>(rep_).value; }

const mpq_class& Scalar::rational_value() const { return std::get<mpq_class>(rep_); }

Scalar Scalar::operator-() const {
  if (const auto* r = std::get_if<Residue>(&rep_)) {
    return Scalar(Residue{r->value == 0 ? 0 : r->p - r->value, r->p});
  }
  return Scalar(mpq_class(-std::get<mpq_class>(rep_)));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (const auto* r = std::get_if<Residue>(&rep_)) return Scalar(Residue{inverse_mod(r->value, r->p), r->p});
  return Scalar(mpq_class(1 / std::get<mpq_class>(rep_)));
}

namespace {

void require_same_field(const FieldSpec& a, const FieldSpec& b) {
  if (a != b) throw InvalidInput("field mismatch: " + a.name() + " vs " + b.name());
}

} // namespace

Scalar operator+(const Scalar& a, const Scalar& b) {
  const auto* ra = std::get_if<Scalar::Residue>(&a.rep_);
  const auto* rb = std::get_if<Scalar::Residue>(&b.rep_);
  if (ra && rb && ra->p == rb->p) {
    std::uint32_t s = ra->value + rb->value;
    if (s >= ra->p) s -= ra->p;
    return Scalar(Scalar::Residue{s, ra->p});
  }
  if (!ra && !rb) return Scalar(mpq_class(std::get<mpq_class>(a.rep_) + std::get<mpq_class>(b.rep_)));
  require_same_field(a.field(), b.field());
  return a; // unreachable
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  const auto* ra = std::get_if<Scalar::Residue>(&a.rep_);
  const auto* rb = std::get_if<Scalar::Residue>(&b.rep_);
  if (ra && rb && ra->p == rb->p) {
    auto prod = static_cast<std::uint64_t>(ra->value) * rb->value % ra->p;
    return Scalar(Scalar::Residue{static_cast<std::uint32_t>(prod), ra->p});
  }
  if (!ra && !rb) return Scalar(mpq_class(std::get<mpq_class>(a.rep_) * std::get<mpq_class>(b.rep_)));
  require_same_field(a.field(), b.field());
  return a; // unreachable
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
  const auto* ra = std::get_if<Scalar::Residue>(&a.rep_);
  const auto* rb = std::get_if<Scalar::Residue>(&b.rep_);
  if (ra && rb) return ra->p == rb->p && ra->value == rb->value;
  if (!ra && !rb) return std::get<mpq_class>(a.rep_) == std::get<mpq_class>(b.rep_);
  return false;
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  const auto* ra = std::get_if<Scalar::Residue>(&a.rep_);
  const auto* rb = std::get_if<Scalar::Residue>(&b.rep_);
  if (ra && rb && ra->p == rb->p) return ra->value <=> rb->value;
  if (!ra && !rb) return cmp(std::get<mpq_class>(a.rep_), std::get<mpq_class>(b.rep_)) <=> 0;
  require_same_field(a.field(), b.field());
  return std::strong_ordering::equal; // unreachable
}

std::string Scalar::to_string() const {
  if (const auto* r = std::get_if<Residue>(&rep_)) return std::to_string(r->value);
  const auto& q = std::get<mpq_class>(rep_);
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Scalar arith(const FieldSpec& field, ArithOp op, const Scalar& a, const std::optional<Scalar>& b) {
  require_same_field(field, a.field());
  if (op == ArithOp::neg) return -a;
  if (op == ArithOp::inv) return a.inverse();
  if (!b) throw InvalidInput("binary field operation needs two operands");
  require_same_field(field, b->field());
  switch (op) {
  case ArithOp::add: return a + *b;
  case ArithOp::sub: return a - *b;
  case ArithOp::mul: return a * *b;
  case ArithOp::div: return a / *b;
  default: break;
  }
  throw InvalidInput("unknown field operation");
}

} // namespace mbasis
