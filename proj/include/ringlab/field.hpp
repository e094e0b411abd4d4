#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "ringlab/error.hpp"

namespace ringlab {

class Scalar;

enum class FieldKind { prime_field, rationals };

/// Deterministic primality test, exact for every 32-bit input.
bool is_prime(std::uint64_t n);

/// Coefficient field: either F_p for a prime p < 2^31, or the rationals.
class FieldDesc {
 public:
  static FieldDesc prime(std::uint64_t p);
  static FieldDesc rationals() { return FieldDesc(FieldKind::rationals, 0); }

  FieldKind kind() const noexcept { return kind_; }
  bool is_finite() const noexcept { return kind_ == FieldKind::prime_field; }
  /// Prime modulus, or 0 for the rationals.
  std::uint32_t modulus() const noexcept { return p_; }
  /// Characteristic: p for F_p, 0 for Q.
  std::uint32_t characteristic() const noexcept { return p_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long value) const;
  Scalar from_mpz(const mpz_class& value) const;
  /// Accepts "a" or "a/b" with optional sign; over F_p the result is reduced.
  Scalar parse(std::string_view text) const;
  /// "F2", "F3", ..., or "Q".
  std::string name() const;

  friend bool operator==(const FieldDesc&, const FieldDesc&) = default;

 private:
  friend class Scalar;
  FieldDesc(FieldKind kind, std::uint32_t p) : kind_(kind), p_(p) {}

  FieldKind kind_;
  std::uint32_t p_;
};

/// An exact field element. Prime-field residues are kept in [0, p);
/// rationals are kept in lowest terms with positive denominator.
/// Each scalar remembers its field, so mixing fields is detected.
class Scalar {
 public:
  struct Residue {
    std::uint32_t value;
    std::uint32_t modulus;
    friend bool operator==(const Residue&, const Residue&) = default;
  };

  /// Unbound placeholder; any arithmetic on it raises MixedFields.
  Scalar() : value_(Residue{0, 0}) {}
  Scalar(Residue r) : value_(r) {}
  explicit Scalar(mpq_class q) : value_(std::move(q)) {
    std::get<mpq_class>(value_).canonicalize();
  }

  FieldDesc field() const;
  bool is_rational() const noexcept { return value_.index() == 1; }
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  std::uint32_t residue() const;
  const mpq_class& rational() const;

  Scalar inverse() const;

  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }
  Scalar operator-() const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  /// Total order: residues numerically, rationals numerically.
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

  std::string to_string() const;

 private:
  const Residue& check_residue_pair(const Scalar& other) const;

  std::variant<Residue, mpq_class> value_;
};

using Vector = std::vector<Scalar>;

/// Field-level arithmetic entry point used by generic callers.
enum class ScalarOp { add, mul, neg, inv };
Scalar scalar_arith(const FieldDesc& field, ScalarOp op, const Scalar& x,
                    const Scalar* y = nullptr);

inline bool is_zero_vector(const Vector& v) {
  for (const auto& s : v)
    if (!s.is_zero()) return false;
  return true;
}

// Residue fast paths are inline; everything touching mpq lives in field.cpp.

inline bool Scalar::is_zero() const noexcept {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value == 0;
  return std::get<mpq_class>(value_) == 0;
}

inline bool Scalar::is_one() const noexcept {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->modulus != 0 && r->value == 1;
  return std::get<mpq_class>(value_) == 1;
}

inline const Scalar::Residue& Scalar::check_residue_pair(const Scalar& other) const {
  const auto* a = std::get_if<Residue>(&value_);
  const auto* b = std::get_if<Residue>(&other.value_);
  if (!b || a->modulus != b->modulus || a->modulus == 0)
    throw Error(ErrorCode::MixedFields, "operands belong to different fields");
  return *b;
}

inline Scalar& Scalar::operator+=(const Scalar& other) {
  if (auto* a = std::get_if<Residue>(&value_)) {
    const Residue& b = check_residue_pair(other);
    std::uint32_t s = a->value + b.value;
    if (s >= a->modulus) s -= a->modulus;
    a->value = s;
    return *this;
  }
  const auto* q = std::get_if<mpq_class>(&other.value_);
  if (!q) throw Error(ErrorCode::MixedFields, "operands belong to different fields");
  std::get<mpq_class>(value_) += *q;
  return *this;
}

inline Scalar& Scalar::operator-=(const Scalar& other) {
  if (auto* a = std::get_if<Residue>(&value_)) {
    const Residue& b = check_residue_pair(other);
    a->value = a->value >= b.value ? a->value - b.value : a->value + (a->modulus - b.value);
    return *this;
  }
  const auto* q = std::get_if<mpq_class>(&other.value_);
  if (!q) throw Error(ErrorCode::MixedFields, "operands belong to different fields");
  std::get<mpq_class>(value_) -= *q;
  return *this;
}

inline Scalar& Scalar::operator*=(const Scalar& other) {
  if (auto* a = std::get_if<Residue>(&value_)) {
    const Residue& b = check_residue_pair(other);
    a->value = static_cast<std::uint32_t>(
        (static_cast<std::uint64_t>(a->value) * b.value) % a->modulus);
    return *this;
  }
  const auto* q = std::get_if<mpq_class>(&other.value_);
  if (!q) throw Error(ErrorCode::MixedFields, "operands belong to different fields");
  std::get<mpq_class>(value_) *= *q;
  return *this;
}

inline bool operator==(const Scalar& a, const Scalar& b) {
  const auto* ra = std::get_if<Scalar::Residue>(&a.value_);
  const auto* rb = std::get_if<Scalar::Residue>(&b.value_);
  if (ra && rb) return *ra == *rb;
  if (ra || rb) return false;
  return std::get<mpq_class>(a.value_) == std::get<mpq_class>(b.value_);
}

}  // namespace ringlab
