#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ringlab/linalg.hpp"

namespace ringlab {

/// Coordinate vector of an algebra element.
using Element = Vector;

enum class Side { right, left };

inline const char* side_name(Side s) { return s == Side::right ? "right" : "left"; }

/// Finite-dimensional associative unital algebra given by structure
/// constants: b_i * b_j = sum_k c[i][j][k] b_k. Instances are validated at
/// construction and immutable afterwards.
class Algebra {
 public:
  /// `table` is indexed (i * n + j) * n + k. Names default to e0, e1, ...
  static Algebra build(FieldDesc field, std::size_t dim, Element unit, std::vector<Scalar> table,
                       std::vector<std::string> names = {});

  const FieldDesc& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return dim_; }
  const Element& unit() const noexcept { return unit_; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::vector<Scalar>& table() const noexcept { return table_; }
  const Scalar& constant(std::size_t i, std::size_t j, std::size_t k) const {
    return table_[(i * dim_ + j) * dim_ + k];
  }

  Element zero() const { return zero_vector(field_, dim_); }
  Element basis(std::size_t i) const { return unit_vector(field_, dim_, i); }

  Element multiply(const Element& u, const Element& v) const;
  /// Matrix of v -> u v (column j holds u b_j).
  Matrix left_multiplication(const Element& u) const;
  /// Matrix of v -> v u (column j holds b_j u).
  Matrix right_multiplication(const Element& u) const;

  /// Same space with the product reversed; its right ideals are the left
  /// ideals of this algebra.
  Algebra opposite() const;

  /// Human-readable linear combination of basis names, e.g. "Ec + 2*Ef".
  std::string format(const Element& v) const;
  std::optional<std::size_t> index_of(const std::string& name) const;

  friend bool operator==(const Algebra& a, const Algebra& b) {
    return a.field_ == b.field_ && a.dim_ == b.dim_ && a.unit_ == b.unit_ && a.table_ == b.table_;
  }

 private:
  struct Term {
    std::size_t k;
    Scalar c;
  };

  Algebra(FieldDesc field, std::size_t dim, Element unit, std::vector<Scalar> table,
          std::vector<std::string> names);
  void check_element(const Element& v) const;

  FieldDesc field_;
  std::size_t dim_;
  Element unit_;
  std::vector<Scalar> table_;
  std::vector<std::string> names_;
  std::vector<std::vector<Term>> products_;  // sparse view of table_, indexed i * n + j
};

/// Algebra built from a span of square matrices, together with the matrix
/// representing each basis element.
struct MatrixAlgebra {
  Algebra algebra;
  std::size_t size;
  std::vector<Matrix> embedding;

  Matrix to_matrix(const Element& v) const;
};

/// Builds the algebra spanned by `matrices`. Without autoclose every product
/// must already lie in the span (NotClosed otherwise) and the generators must
/// be independent (BadShape). With autoclose, dependent generators are
/// dropped and products are added until the span is closed.
MatrixAlgebra from_matrix_basis(FieldDesc field, std::size_t size, const std::vector<Matrix>& matrices,
                                bool autoclose, std::vector<std::string> names = {});

struct CommutativityVerdict {
  bool commutative;
  /// First non-commuting basis pair (i < j) in index order.
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

CommutativityVerdict is_commutative(const Algebra& a);

/// First (generator, multiplier) pair whose product leaves `s`, scanning the
/// basis of `s` in order and multipliers in basis order.
struct MultiplicationEscape {
  std::size_t generator_row;
  std::size_t multiplier;
  Element generator;
  Element product;
};
std::optional<MultiplicationEscape> find_escape(const Algebra& a, const Subspace& s, Side side);

/// A / I on coset representatives supported on the free coordinates of I.
struct QuotientAlgebra {
  Algebra algebra;
  Subspace ideal;
  std::vector<std::size_t> representatives;

  Element project(const Element& v) const;
  Element lift(const Element& w) const;
};

QuotientAlgebra quotient_algebra(const Algebra& a, const Subspace& ideal);

/// A[x]/(x^m); basis element b_i x^j sits at index j * n + i.
Algebra truncated_polynomial_algebra(const Algebra& a, std::size_t m);
/// Index of the element x = 1 * x in a truncated extension of `a`.
Element truncation_variable(const Algebra& base, const Algebra& truncated);

/// Finite sequence of all p^n elements in enumeration order.
class ElementRange {
 public:
  class iterator {
   public:
    using value_type = Element;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;

    iterator() = default;
    iterator(Element current, std::uint64_t index) : current_(std::move(current)), index_(index) {}
    const Element& operator*() const { return current_; }
    iterator& operator++() {
      increment_coordinates(current_);
      ++index_;
      return *this;
    }
    std::uint64_t index() const { return index_; }
    friend bool operator==(const iterator& a, const iterator& b) { return a.index_ == b.index_; }

   private:
    Element current_;
    std::uint64_t index_ = 0;
  };

  ElementRange(FieldDesc field, std::size_t dim, std::uint64_t first = 0, std::uint64_t last = 0);

  iterator begin() const { return iterator(coordinate_vector(field_, dim_, first_), first_); }
  iterator end() const { return iterator(Element{}, last_); }
  std::uint64_t size() const { return last_ - first_; }

 private:
  FieldDesc field_;
  std::size_t dim_;
  std::uint64_t first_;
  std::uint64_t last_;
};

/// All elements of a finite algebra; InfiniteField over Q.
ElementRange enumerate_elements(const Algebra& a);
std::uint64_t element_count(const Algebra& a);

}  // namespace ringlab
