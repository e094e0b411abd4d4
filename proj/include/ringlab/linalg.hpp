#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ringlab/field.hpp"

namespace ringlab {

/// Dense row-major matrix over a single field.
class Matrix {
 public:
  Matrix(FieldDesc field, std::size_t rows, std::size_t cols);

  static Matrix from_rows(FieldDesc field, std::size_t cols, const std::vector<Vector>& rows);
  static Matrix identity(FieldDesc field, std::size_t n);

  const FieldDesc& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Scalar> row_view(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  void set_row(std::size_t r, const Vector& v);
  void set_column(std::size_t c, const Vector& v);

  Matrix transpose() const;
  Vector apply(const Vector& v) const;
  /// Appends the rows of `other` below this matrix.
  Matrix stacked(const Matrix& other) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

  const std::vector<Scalar>& entries() const noexcept { return data_; }

 private:
  FieldDesc field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

struct RowEchelon {
  Matrix reduced;  ///< nonzero rows only
  std::size_t rank;
  std::vector<std::size_t> pivots;
};

/// Gauss-Jordan form with first-nonzero pivoting in row order.
RowEchelon rref(const Matrix& m);

/// Solves a x = b; nullopt when inconsistent. Free variables are set to 0.
std::optional<Vector> solve(const Matrix& a, const Vector& b);

bool is_invertible(const Matrix& m);

/// A subspace of F^n stored by its canonical reduced basis. Two equal
/// subspaces always have identical basis matrices.
class Subspace {
 public:
  static Subspace zero(FieldDesc field, std::size_t ambient_dim);
  static Subspace full(FieldDesc field, std::size_t ambient_dim);
  static Subspace span(FieldDesc field, std::size_t ambient_dim, const std::vector<Vector>& generators);
  static Subspace row_space(const Matrix& m);
  static Subspace column_space(const Matrix& m);

  const FieldDesc& field() const noexcept { return basis_.field(); }
  std::size_t ambient_dim() const noexcept { return basis_.cols(); }
  std::size_t dim() const noexcept { return basis_.rows(); }
  bool is_zero() const noexcept { return dim() == 0; }
  bool is_full() const noexcept { return dim() == ambient_dim(); }

  const Matrix& basis() const noexcept { return basis_; }
  Vector basis_vector(std::size_t i) const { return basis_.row(i); }
  std::vector<Vector> basis_vectors() const;
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  /// Coordinates that are not pivots; coset representatives of F^n / this
  /// subspace are the vectors supported on these coordinates.
  std::vector<std::size_t> free_coordinates() const;

  /// Remainder of v after clearing every pivot coordinate; zero iff v is in
  /// the subspace.
  Vector reduce(const Vector& v) const;
  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of v (assumed to lie in the subspace) in the basis.
  Vector coordinates(const Vector& v) const;
  /// Sum of coefficient_i * basis_i.
  Vector combine(const Vector& coefficients) const;

  /// Over a prime field: the element with the given enumeration index in
  /// basis coordinates (base-p digits, least significant = first basis row).
  Vector element_at(std::uint64_t index) const;
  std::uint64_t element_count() const;

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }
  /// Lexicographic on basis rows.
  friend std::strong_ordering operator<=>(const Subspace& a, const Subspace& b);

 private:
  Subspace(Matrix basis, std::vector<std::size_t> pivots)
      : basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Null space {v : m v = 0}.
Subspace kernel(const Matrix& m);
Subspace subspace_sum(const Subspace& u, const Subspace& v);
Subspace subspace_intersect(const Subspace& u, const Subspace& v);
bool contains(const Subspace& u, const Vector& v);

/// Coordinate vectors over F_p: index i maps to its base-p digits with the
/// least significant digit in coordinate 0.
std::uint64_t coordinate_space_size(const FieldDesc& field, std::size_t dim);
Vector coordinate_vector(const FieldDesc& field, std::size_t dim, std::uint64_t index);
std::uint64_t coordinate_index(const Vector& v);
/// Advances v to the next coordinate vector; returns false after wrapping to 0.
bool increment_coordinates(Vector& v);

Vector zero_vector(const FieldDesc& field, std::size_t n);
Vector unit_vector(const FieldDesc& field, std::size_t n, std::size_t i);
Vector add(const Vector& a, const Vector& b);
Vector subtract(const Vector& a, const Vector& b);
Vector scale(const Scalar& s, const Vector& v);
/// a += s * b
void axpy(Vector& a, const Scalar& s, const Vector& b);

}  // namespace ringlab
