#include "ringlab/linalg.hpp"

#include <algorithm>
#include <string>

namespace ringlab {

namespace {

void require_same_ambient(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim() || u.field() != v.field())
    throw Error(ErrorCode::AmbientMismatch,
                "subspaces of " + u.field().name() + "^" + std::to_string(u.ambient_dim()) +
                    " and " + v.field().name() + "^" + std::to_string(v.ambient_dim()));
}

// In-place Gauss-Jordan on a row-major buffer; returns the pivot columns.
std::vector<std::size_t> eliminate(std::vector<Scalar>& a, std::size_t rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t r = rank;
    while (r < rows && a[r * cols + c].is_zero()) ++r;
    if (r == rows) continue;
    if (r != rank)
      std::swap_ranges(a.begin() + r * cols, a.begin() + (r + 1) * cols, a.begin() + rank * cols);
    Scalar* prow = a.data() + rank * cols;
    if (!prow[c].is_one()) {
      Scalar inv = prow[c].inverse();
      for (std::size_t j = c; j < cols; ++j) prow[j] *= inv;
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank) continue;
      Scalar* row = a.data() + i * cols;
      if (row[c].is_zero()) continue;
      Scalar factor = row[c];
      for (std::size_t j = c; j < cols; ++j)
        if (!prow[j].is_zero()) row[j] -= factor * prow[j];
    }
    pivots.push_back(c);
    ++rank;
  }
  return pivots;
}

}  // namespace

Matrix::Matrix(FieldDesc field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

Matrix Matrix::from_rows(FieldDesc field, std::size_t cols, const std::vector<Vector>& rows) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
  return m;
}

Matrix Matrix::identity(FieldDesc field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

Vector Matrix::column(std::size_t c) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

void Matrix::set_row(std::size_t r, const Vector& v) {
  if (v.size() != cols_)
    throw Error(ErrorCode::DimensionMismatch,
                "row of length " + std::to_string(v.size()) + " in matrix with " +
                    std::to_string(cols_) + " columns");
  std::copy(v.begin(), v.end(), data_.begin() + r * cols_);
}

void Matrix::set_column(std::size_t c, const Vector& v) {
  if (v.size() != rows_)
    throw Error(ErrorCode::DimensionMismatch, "column length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "matrix-vector size mismatch");
  Vector out(rows_, field_.zero());
  for (std::size_t r = 0; r < rows_; ++r) {
    const Scalar* row = data_.data() + r * cols_;
    for (std::size_t c = 0; c < cols_; ++c)
      if (!row[c].is_zero() && !v[c].is_zero()) out[r] += row[c] * v[c];
  }
  return out;
}

Matrix Matrix::stacked(const Matrix& other) const {
  if (other.cols_ != cols_) throw Error(ErrorCode::DimensionMismatch, "stacking mismatched widths");
  Matrix m(field_, rows_ + other.rows_, cols_);
  std::copy(data_.begin(), data_.end(), m.data_.begin());
  std::copy(other.data_.begin(), other.data_.end(), m.data_.begin() + data_.size());
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product size mismatch");
  Matrix m(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) m(i, j) += aik * b(k, j);
    }
  return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw Error(ErrorCode::DimensionMismatch, "matrix sum size mismatch");
  Matrix m = a;
  for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] += b.data_[i];
  return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw Error(ErrorCode::DimensionMismatch, "matrix difference size mismatch");
  Matrix m = a;
  for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] -= b.data_[i];
  return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

RowEchelon rref(const Matrix& m) {
  std::vector<Scalar> work = m.entries();
  std::vector<std::size_t> pivots = eliminate(work, m.rows(), m.cols());
  Matrix reduced(m.field(), pivots.size(), m.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) reduced(r, c) = work[r * m.cols() + c];
  std::size_t rank = pivots.size();
  return RowEchelon{std::move(reduced), rank, std::move(pivots)};
}

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
  if (b.size() != a.rows()) throw Error(ErrorCode::DimensionMismatch, "right-hand side length");
  Matrix aug(a.field(), a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  RowEchelon e = rref(aug);
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
  Vector x(a.cols(), a.field().zero());
  for (std::size_t i = 0; i < e.rank; ++i) x[e.pivots[i]] = e.reduced(i, a.cols());
  return x;
}

bool is_invertible(const Matrix& m) { return m.rows() == m.cols() && rref(m).rank == m.rows(); }

Subspace Subspace::zero(FieldDesc field, std::size_t ambient_dim) {
  return Subspace(Matrix(field, 0, ambient_dim), {});
}

Subspace Subspace::full(FieldDesc field, std::size_t ambient_dim) {
  std::vector<std::size_t> pivots(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) pivots[i] = i;
  return Subspace(Matrix::identity(field, ambient_dim), std::move(pivots));
}

Subspace Subspace::span(FieldDesc field, std::size_t ambient_dim, const std::vector<Vector>& generators) {
  return row_space(Matrix::from_rows(field, ambient_dim, generators));
}

Subspace Subspace::row_space(const Matrix& m) {
  RowEchelon e = rref(m);
  return Subspace(std::move(e.reduced), std::move(e.pivots));
}

Subspace Subspace::column_space(const Matrix& m) { return row_space(m.transpose()); }

std::vector<Vector> Subspace::basis_vectors() const {
  std::vector<Vector> out;
  out.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_.row(i));
  return out;
}

std::vector<std::size_t> Subspace::free_coordinates() const {
  std::vector<std::size_t> out;
  std::size_t next = 0;
  for (std::size_t c = 0; c < ambient_dim(); ++c) {
    if (next < pivots_.size() && pivots_[next] == c) {
      ++next;
      continue;
    }
    out.push_back(c);
  }
  return out;
}

Vector Subspace::reduce(const Vector& v) const {
  if (v.size() != ambient_dim())
    throw Error(ErrorCode::AmbientMismatch, "vector of length " + std::to_string(v.size()) +
                                                " against ambient dimension " + std::to_string(ambient_dim()));
  Vector r = v;
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    Scalar c = r[pivots_[i]];
    if (c.is_zero()) continue;
    auto row = basis_.row_view(i);
    for (std::size_t j = 0; j < r.size(); ++j)
      if (!row[j].is_zero()) r[j] -= c * row[j];
  }
  return r;
}

bool Subspace::contains(const Vector& v) const { return is_zero_vector(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  require_same_ambient(*this, other);
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_vector(i))) return false;
  return true;
}

Vector Subspace::coordinates(const Vector& v) const {
  Vector c;
  c.reserve(dim());
  for (std::size_t p : pivots_) c.push_back(v[p]);
  return c;
}

Vector Subspace::combine(const Vector& coefficients) const {
  if (coefficients.size() != dim()) throw Error(ErrorCode::DimensionMismatch, "coefficient count");
  Vector out(ambient_dim(), field().zero());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (coefficients[i].is_zero()) continue;
    auto row = basis_.row_view(i);
    for (std::size_t j = 0; j < out.size(); ++j)
      if (!row[j].is_zero()) out[j] += coefficients[i] * row[j];
  }
  return out;
}

Vector Subspace::element_at(std::uint64_t index) const {
  return combine(coordinate_vector(field(), dim(), index));
}

std::uint64_t Subspace::element_count() const { return coordinate_space_size(field(), dim()); }

std::strong_ordering operator<=>(const Subspace& a, const Subspace& b) {
  const auto& ea = a.basis_.entries();
  const auto& eb = b.basis_.entries();
  if (a.ambient_dim() != b.ambient_dim()) return a.ambient_dim() <=> b.ambient_dim();
  return std::lexicographical_compare_three_way(ea.begin(), ea.end(), eb.begin(), eb.end());
}

Subspace kernel(const Matrix& m) {
  RowEchelon e = rref(m);
  std::vector<Vector> gens;
  std::size_t next = 0;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (next < e.pivots.size() && e.pivots[next] == f) {
      ++next;
      continue;
    }
    Vector v(m.cols(), m.field().zero());
    v[f] = m.field().one();
    for (std::size_t i = 0; i < e.rank; ++i) v[e.pivots[i]] = -e.reduced(i, f);
    gens.push_back(std::move(v));
  }
  return Subspace::span(m.field(), m.cols(), gens);
}

Subspace subspace_sum(const Subspace& u, const Subspace& v) {
  require_same_ambient(u, v);
  return Subspace::row_space(u.basis().stacked(v.basis()));
}

Subspace subspace_intersect(const Subspace& u, const Subspace& v) {
  require_same_ambient(u, v);
  if (u.is_zero() || v.is_zero()) return Subspace::zero(u.field(), u.ambient_dim());
  if (u.is_full()) return v;
  if (v.is_full()) return u;
  // Relations sum a_i u_i + sum b_j v_j = 0; each gives sum a_i u_i in U ∩ V.
  const std::size_t n = u.ambient_dim(), r = u.dim(), s = v.dim();
  Matrix rel(u.field(), n, r + s);
  for (std::size_t i = 0; i < r; ++i) rel.set_column(i, u.basis_vector(i));
  for (std::size_t j = 0; j < s; ++j) rel.set_column(r + j, v.basis_vector(j));
  Subspace k = kernel(rel);
  std::vector<Vector> gens;
  for (std::size_t t = 0; t < k.dim(); ++t) {
    Vector rel_vec = k.basis_vector(t);
    gens.push_back(u.combine(Vector(rel_vec.begin(), rel_vec.begin() + r)));
  }
  return Subspace::span(u.field(), n, gens);
}

bool contains(const Subspace& u, const Vector& v) { return u.contains(v); }

std::uint64_t coordinate_space_size(const FieldDesc& field, std::size_t dim) {
  if (!field.is_finite())
    throw Error(ErrorCode::InfiniteField, "cannot enumerate vectors over Q");
  std::uint64_t size = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    if (size > (std::uint64_t{1} << 62) / field.modulus())
      throw Error(ErrorCode::TooLarge, field.name() + "^" + std::to_string(dim) + " is too large to enumerate");
    size *= field.modulus();
  }
  return size;
}

Vector coordinate_vector(const FieldDesc& field, std::size_t dim, std::uint64_t index) {
  if (!field.is_finite())
    throw Error(ErrorCode::InfiniteField, "cannot enumerate vectors over Q");
  Vector v;
  v.reserve(dim);
  const std::uint64_t p = field.modulus();
  for (std::size_t i = 0; i < dim; ++i) {
    v.push_back(Scalar(Scalar::Residue{static_cast<std::uint32_t>(index % p), field.modulus()}));
    index /= p;
  }
  return v;
}

std::uint64_t coordinate_index(const Vector& v) {
  std::uint64_t index = 0;
  for (std::size_t i = v.size(); i-- > 0;) index = index * v[i].field().modulus() + v[i].residue();
  return index;
}

bool increment_coordinates(Vector& v) {
  for (auto& s : v) {
    if (s.residue() + 1 < s.field().modulus()) {
      s += s.field().one();
      return true;
    }
    s = s.field().zero();
  }
  return false;
}

Vector zero_vector(const FieldDesc& field, std::size_t n) { return Vector(n, field.zero()); }

Vector unit_vector(const FieldDesc& field, std::size_t n, std::size_t i) {
  Vector v(n, field.zero());
  v.at(i) = field.one();
  return v;
}

Vector add(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vector sum length mismatch");
  Vector out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

Vector subtract(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vector difference length mismatch");
  Vector out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

Vector scale(const Scalar& s, const Vector& v) {
  Vector out = v;
  for (auto& x : out) x *= s;
  return out;
}

void axpy(Vector& a, const Scalar& s, const Vector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "axpy length mismatch");
  if (s.is_zero()) return;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!b[i].is_zero()) a[i] += s * b[i];
}

}  // namespace ringlab
