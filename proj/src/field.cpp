#include "ringlab/field.hpp"

#include <cctype>
#include <tuple>
#include <utility>

namespace ringlab {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InversionOfZero: return "InversionOfZero";
    case ErrorCode::MixedFields: return "MixedFields";
    case ErrorCode::CompositeModulus: return "CompositeModulus";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::AmbientMismatch: return "AmbientMismatch";
    case ErrorCode::BadShape: return "BadShape";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::UnitLawFails: return "UnitLawFails";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::NoUnit: return "NoUnit";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotAnIdeal: return "NotAnIdeal";
    case ErrorCode::ImproperIdeal: return "ImproperIdeal";
    case ErrorCode::InfiniteField: return "InfiniteField";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NotNested: return "NotNested";
    case ErrorCode::NotMaximal: return "NotMaximal";
    case ErrorCode::NonIntegralConstants: return "NonIntegralConstants";
    case ErrorCode::WitnessNotCentral: return "WitnessNotCentral";
    case ErrorCode::RadicalUncertified: return "RadicalUncertified";
    case ErrorCode::CertificateFailure: return "CertificateFailure";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

FieldDesc FieldDesc::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31))
    throw Error(ErrorCode::CompositeModulus, "modulus " + std::to_string(p) + " exceeds 2^31");
  if (!is_prime(p))
    throw Error(ErrorCode::CompositeModulus, std::to_string(p) + " is not prime");
  return FieldDesc(FieldKind::prime_field, static_cast<std::uint32_t>(p));
}

Scalar FieldDesc::zero() const { return from_int(0); }
Scalar FieldDesc::one() const { return from_int(1); }

Scalar FieldDesc::from_int(long long value) const {
  if (kind_ == FieldKind::rationals) return Scalar(mpq_class(mpz_class(static_cast<long>(value))));
  long long r = value % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return Scalar(Scalar::Residue{static_cast<std::uint32_t>(r), p_});
}

Scalar FieldDesc::from_mpz(const mpz_class& value) const {
  if (kind_ == FieldKind::rationals) return Scalar(mpq_class(value));
  mpz_class r = value % p_;
  if (r < 0) r += p_;
  return Scalar(Scalar::Residue{static_cast<std::uint32_t>(r.get_ui()), p_});
}

namespace {

mpz_class parse_integer(std::string_view text, std::string_view whole) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) negative = text[i++] == '-';
  if (i == text.size())
    throw Error(ErrorCode::ParseError, "malformed scalar '" + std::string(whole) + "'");
  for (std::size_t j = i; j < text.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(text[j])))
      throw Error(ErrorCode::ParseError, "malformed scalar '" + std::string(whole) + "'");
  mpz_class v(std::string(text.substr(i)), 10);
  return negative ? mpz_class(-v) : v;
}

}  // namespace

Scalar FieldDesc::parse(std::string_view text) const {
  std::size_t slash = text.find('/');
  mpz_class num = parse_integer(text.substr(0, slash), text);
  mpz_class den = 1;
  if (slash != std::string_view::npos) {
    den = parse_integer(text.substr(slash + 1), text);
    if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  }
  if (kind_ == FieldKind::rationals) return Scalar(mpq_class(num, den));
  return from_mpz(num) / from_mpz(den);
}

std::string FieldDesc::name() const {
  return kind_ == FieldKind::rationals ? "Q" : "F" + std::to_string(p_);
}

FieldDesc Scalar::field() const {
  if (const auto* r = std::get_if<Residue>(&value_)) {
    if (r->modulus == 0) throw Error(ErrorCode::MixedFields, "unbound scalar");
    return FieldDesc(FieldKind::prime_field, r->modulus);
  }
  return FieldDesc::rationals();
}

std::uint32_t Scalar::residue() const {
  const auto* r = std::get_if<Residue>(&value_);
  if (!r) throw Error(ErrorCode::MixedFields, "rational scalar has no residue");
  return r->value;
}

const mpq_class& Scalar::rational() const {
  const auto* q = std::get_if<mpq_class>(&value_);
  if (!q) throw Error(ErrorCode::MixedFields, "prime-field scalar is not rational");
  return *q;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::InversionOfZero, "cannot invert zero");
  if (const auto* r = std::get_if<Residue>(&value_)) {
    if (r->modulus == 0) throw Error(ErrorCode::MixedFields, "unbound scalar");
    // Extended Euclid on (value, modulus).
    std::int64_t t = 0, new_t = 1;
    std::int64_t rem = r->modulus, new_rem = r->value;
    while (new_rem != 0) {
      std::int64_t q = rem / new_rem;
      std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
      std::tie(rem, new_rem) = std::make_pair(new_rem, rem - q * new_rem);
    }
    if (t < 0) t += r->modulus;
    return Scalar(Residue{static_cast<std::uint32_t>(t), r->modulus});
  }
  mpq_class inv = 1 / std::get<mpq_class>(value_);
  return Scalar(inv);
}

Scalar Scalar::operator-() const {
  if (const auto* r = std::get_if<Residue>(&value_)) {
    if (r->modulus == 0) throw Error(ErrorCode::MixedFields, "unbound scalar");
    return Scalar(Residue{r->value == 0 ? 0 : r->modulus - r->value, r->modulus});
  }
  mpq_class neg = -std::get<mpq_class>(value_);
  return Scalar(neg);
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  const auto* ra = std::get_if<Scalar::Residue>(&a.value_);
  const auto* rb = std::get_if<Scalar::Residue>(&b.value_);
  if (ra && rb) {
    if (auto c = ra->modulus <=> rb->modulus; c != 0) return c;
    return ra->value <=> rb->value;
  }
  if (ra) return std::strong_ordering::less;
  if (rb) return std::strong_ordering::greater;
  int c = cmp(std::get<mpq_class>(a.value_), std::get<mpq_class>(b.value_));
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string Scalar::to_string() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return std::to_string(r->value);
  return std::get<mpq_class>(value_).get_str();
}

Scalar scalar_arith(const FieldDesc& field, ScalarOp op, const Scalar& x, const Scalar* y) {
  if (x.field() != field || (y && y->field() != field))
    throw Error(ErrorCode::MixedFields, "operand does not belong to " + field.name());
  switch (op) {
    case ScalarOp::add:
      if (!y) throw Error(ErrorCode::BadShape, "add needs two operands");
      return x + *y;
    case ScalarOp::mul:
      if (!y) throw Error(ErrorCode::BadShape, "mul needs two operands");
      return x * *y;
    case ScalarOp::neg: return -x;
    case ScalarOp::inv: return x.inverse();
  }
  return x;
}

}  // namespace ringlab
