#pragma once

#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "ringlab/field.hpp"

namespace ringlab {

/// Polynomial in named commuting variables with integer coefficients.
/// Variables keep first-seen order; terms are kept in graded lexicographic
/// order (descending) with no zero coefficients.
class MultiPoly {
 public:
  using Exponents = std::vector<unsigned>;

  struct GrlexDescending {
    bool operator()(const Exponents& x, const Exponents& y) const;
  };
  using Terms = std::map<Exponents, mpz_class, GrlexDescending>;

  MultiPoly() = default;
  static MultiPoly constant(const mpz_class& c);
  static MultiPoly variable(const std::string& name);

  const std::vector<std::string>& variables() const noexcept { return vars_; }
  /// Exponent vectors are aligned with variables().
  const Terms& terms() const noexcept { return terms_; }

  bool is_zero() const noexcept { return terms_.empty(); }
  unsigned degree() const;

  /// Coefficient of the monomial given as variable -> exponent (absent = 0).
  mpz_class coefficient(const std::map<std::string, unsigned>& monomial) const;

  /// Value at the given point; every variable must be assigned.
  Scalar evaluate(const FieldDesc& field, const std::map<std::string, Scalar>& point) const;

  /// e.g. "a^2 + b^2", "alpha*a - 2*c", "0".
  std::string to_string() const;

  MultiPoly& operator+=(const MultiPoly& g);
  MultiPoly& operator-=(const MultiPoly& g);
  friend MultiPoly operator+(MultiPoly f, const MultiPoly& g) { return f += g; }
  friend MultiPoly operator-(MultiPoly f, const MultiPoly& g) { return f -= g; }
  friend MultiPoly operator*(const MultiPoly& f, const MultiPoly& g);
  friend MultiPoly operator*(const mpz_class& c, const MultiPoly& f);
  MultiPoly operator-() const;

  /// Equal as polynomials, whatever the variable lists.
  friend bool operator==(const MultiPoly& f, const MultiPoly& g);

 private:
  void adopt_variables(const std::vector<std::string>& names);
  Exponents aligned(const Exponents& e, const std::vector<std::string>& from) const;

  std::vector<std::string> vars_;
  Terms terms_;
};

enum class PolyOp { add, mul, neg };
MultiPoly poly_arith(PolyOp op, const MultiPoly& f, const MultiPoly& g = {});

}  // namespace ringlab
