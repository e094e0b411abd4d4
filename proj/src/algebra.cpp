#include "ringlab/algebra.hpp"

#include <set>
#include <sstream>

namespace ringlab {

namespace {

std::vector<std::string> default_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));
  return names;
}

bool belongs_to(const Scalar& s, const FieldDesc& field) {
  if (field.is_finite()) return !s.is_rational() && s.field() == field;
  return s.is_rational();
}

Vector vectorize(const Matrix& m) { return m.entries(); }

Matrix unvectorize(const FieldDesc& field, std::size_t size, const Vector& v) {
  Matrix m(field, size, size);
  for (std::size_t r = 0; r < size; ++r)
    for (std::size_t c = 0; c < size; ++c) m(r, c) = v[r * size + c];
  return m;
}

}  // namespace

Algebra::Algebra(FieldDesc field, std::size_t dim, Element unit, std::vector<Scalar> table,
                 std::vector<std::string> names)
    : field_(field),
      dim_(dim),
      unit_(std::move(unit)),
      table_(std::move(table)),
      names_(std::move(names)),
      products_(dim * dim) {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k) {
        const Scalar& c = constant(i, j, k);
        if (!c.is_zero()) products_[i * dim_ + j].push_back(Term{k, c});
      }
}

Algebra Algebra::build(FieldDesc field, std::size_t dim, Element unit, std::vector<Scalar> table,
                       std::vector<std::string> names) {
  if (dim == 0) throw Error(ErrorCode::BadShape, "an algebra needs dimension at least 1");
  if (table.size() != dim * dim * dim)
    throw Error(ErrorCode::BadShape, "structure table has " + std::to_string(table.size()) +
                                         " entries, expected " + std::to_string(dim * dim * dim));
  if (unit.size() != dim)
    throw Error(ErrorCode::BadShape, "unit has length " + std::to_string(unit.size()) +
                                         ", expected " + std::to_string(dim));
  if (names.empty()) names = default_names(dim);
  if (names.size() != dim)
    throw Error(ErrorCode::BadShape, "expected " + std::to_string(dim) + " basis names, got " +
                                         std::to_string(names.size()));
  std::set<std::string> seen;
  for (const auto& name : names)
    if (name.empty() || !seen.insert(name).second)
      throw Error(ErrorCode::BadShape, "basis names must be non-empty and distinct ('" + name + "')");
  for (const auto& s : table)
    if (!belongs_to(s, field)) throw Error(ErrorCode::MixedFields, "structure constant outside " + field.name());
  for (const auto& s : unit)
    if (!belongs_to(s, field)) throw Error(ErrorCode::MixedFields, "unit coordinate outside " + field.name());

  Algebra a(field, dim, std::move(unit), std::move(table), std::move(names));

  for (std::size_t i = 0; i < dim; ++i) {
    Element b = a.basis(i);
    if (a.multiply(a.unit_, b) != b || a.multiply(b, a.unit_) != b)
      throw Error(ErrorCode::UnitLawFails, "unit law fails for basis element " + a.names_[i]);
  }
  std::vector<Element> basis_products(dim * dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) basis_products[i * dim + j] = a.multiply(a.basis(i), a.basis(j));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k) {
        Element lhs = a.multiply(basis_products[i * dim + j], a.basis(k));
        Element rhs = a.multiply(a.basis(i), basis_products[j * dim + k]);
        if (lhs != rhs)
          throw Error(ErrorCode::NotAssociative, "(" + a.names_[i] + "*" + a.names_[j] + ")*" + a.names_[k] +
                                                     " != " + a.names_[i] + "*(" + a.names_[j] + "*" +
                                                     a.names_[k] + ")");
      }
  return a;
}

void Algebra::check_element(const Element& v) const {
  if (v.size() != dim_)
    throw Error(ErrorCode::DimensionMismatch, "element of length " + std::to_string(v.size()) +
                                                  " in algebra of dimension " + std::to_string(dim_));
}

Element Algebra::multiply(const Element& u, const Element& v) const {
  check_element(u);
  check_element(v);
  Element out = zero();
  for (std::size_t i = 0; i < dim_; ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (v[j].is_zero()) continue;
      const auto& terms = products_[i * dim_ + j];
      if (terms.empty()) continue;
      Scalar uv = u[i] * v[j];
      for (const Term& t : terms) out[t.k] += uv * t.c;
    }
  }
  return out;
}

Matrix Algebra::left_multiplication(const Element& u) const {
  check_element(u);
  Matrix m(field_, dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j)
      for (const Term& t : products_[i * dim_ + j]) m(t.k, j) += u[i] * t.c;
  }
  return m;
}

Matrix Algebra::right_multiplication(const Element& u) const {
  check_element(u);
  Matrix m(field_, dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) {
      if (u[j].is_zero()) continue;
      for (const Term& t : products_[i * dim_ + j]) m(t.k, i) += u[j] * t.c;
    }
  return m;
}

Algebra Algebra::opposite() const {
  std::vector<Scalar> table(table_.size());
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k) table[(i * dim_ + j) * dim_ + k] = constant(j, i, k);
  return Algebra(field_, dim_, unit_, std::move(table), names_);
}

std::string Algebra::format(const Element& v) const {
  check_element(v);
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < dim_; ++i) {
    if (v[i].is_zero()) continue;
    Scalar c = v[i];
    bool negative = c.is_rational() && c.rational() < 0;
    if (negative) c = -c;
    if (first)
      out << (negative ? "-" : "");
    else
      out << (negative ? " - " : " + ");
    if (!c.is_one()) out << c.to_string() << "*";
    out << names_[i];
    first = false;
  }
  return first ? "0" : out.str();
}

std::optional<std::size_t> Algebra::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < dim_; ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

Matrix MatrixAlgebra::to_matrix(const Element& v) const {
  Matrix m(algebra.field(), size, size);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero())
      for (std::size_t r = 0; r < size; ++r)
        for (std::size_t c = 0; c < size; ++c)
          if (!embedding[i](r, c).is_zero()) m(r, c) += v[i] * embedding[i](r, c);
  return m;
}

MatrixAlgebra from_matrix_basis(FieldDesc field, std::size_t size, const std::vector<Matrix>& matrices,
                                bool autoclose, std::vector<std::string> names) {
  if (size == 0) throw Error(ErrorCode::BadShape, "matrix size must be positive");
  if (!names.empty() && names.size() != matrices.size())
    throw Error(ErrorCode::BadShape, "expected " + std::to_string(matrices.size()) + " names");
  for (const auto& m : matrices) {
    if (m.rows() != size || m.cols() != size)
      throw Error(ErrorCode::BadShape, "generator is " + std::to_string(m.rows()) + "x" +
                                           std::to_string(m.cols()) + ", expected " + std::to_string(size) +
                                           "x" + std::to_string(size));
    if (m.field() != field) throw Error(ErrorCode::MixedFields, "generator over the wrong field");
  }
  const std::size_t flat = size * size;

  std::vector<Matrix> basis;
  std::vector<std::string> basis_names;
  Subspace span = Subspace::zero(field, flat);
  auto try_add = [&](const Matrix& m, std::string name) {
    Vector v = vectorize(m);
    if (span.contains(v)) return false;
    span = subspace_sum(span, Subspace::span(field, flat, {v}));
    basis.push_back(m);
    basis_names.push_back(std::move(name));
    return true;
  };
  for (std::size_t i = 0; i < matrices.size(); ++i) {
    std::string name = names.empty() ? "" : names[i];
    if (!try_add(matrices[i], name) && !autoclose)
      throw Error(ErrorCode::BadShape, "generator " + std::to_string(i) + " is linearly dependent on earlier ones");
  }
  if (basis.empty()) throw Error(ErrorCode::NoUnit, "empty span has no unit");

  if (autoclose) {
    bool grew = true;
    while (grew && basis.size() < flat) {
      grew = false;
      for (std::size_t i = 0; i < basis.size() && basis.size() < flat; ++i)
        for (std::size_t j = 0; j < basis.size() && basis.size() < flat; ++j)
          if (try_add(basis[i] * basis[j], "")) grew = true;
    }
  } else {
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = 0; j < basis.size(); ++j)
        if (!span.contains(vectorize(basis[i] * basis[j])))
          throw Error(ErrorCode::NotClosed, "product of generators " + std::to_string(i) + " and " +
                                                std::to_string(j) + " leaves the span");
  }

  const std::size_t k = basis.size();
  Matrix columns(field, flat, k);
  for (std::size_t i = 0; i < k; ++i) columns.set_column(i, vectorize(basis[i]));

  auto coords = solve(columns, vectorize(Matrix::identity(field, size)));
  if (!coords) throw Error(ErrorCode::NoUnit, "identity matrix is not in the span");

  std::vector<Scalar> table(k * k * k, field.zero());
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      auto c = solve(columns, vectorize(basis[i] * basis[j]));
      if (!c) throw Error(ErrorCode::NotClosed, "product left the span after closure");
      for (std::size_t t = 0; t < k; ++t) table[(i * k + j) * k + t] = (*c)[t];
    }

  std::set<std::string> used(basis_names.begin(), basis_names.end());
  for (std::size_t i = 0, fresh = 0; i < k; ++i) {
    if (!basis_names[i].empty()) continue;
    std::string candidate;
    do candidate = "e" + std::to_string(fresh++);
    while (used.count(candidate));
    used.insert(candidate);
    basis_names[i] = candidate;
  }

  Algebra a = Algebra::build(field, k, *coords, std::move(table), std::move(basis_names));
  return MatrixAlgebra{std::move(a), size, std::move(basis)};
}

CommutativityVerdict is_commutative(const Algebra& a) {
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (a.constant(i, j, k) != a.constant(j, i, k)) return {false, std::make_pair(i, j)};
  return {true, std::nullopt};
}

std::optional<MultiplicationEscape> find_escape(const Algebra& a, const Subspace& s, Side side) {
  if (s.ambient_dim() != a.dim() || s.field() != a.field())
    throw Error(ErrorCode::AmbientMismatch, "subspace does not live in the algebra");
  for (std::size_t g = 0; g < s.dim(); ++g) {
    Element gen = s.basis_vector(g);
    for (std::size_t m = 0; m < a.dim(); ++m) {
      Element prod = side == Side::right ? a.multiply(gen, a.basis(m)) : a.multiply(a.basis(m), gen);
      if (!s.contains(prod)) return MultiplicationEscape{g, m, gen, prod};
    }
  }
  return std::nullopt;
}

Element QuotientAlgebra::project(const Element& v) const {
  Element r = ideal.reduce(v);
  Element w;
  w.reserve(representatives.size());
  for (std::size_t c : representatives) w.push_back(r[c]);
  return w;
}

Element QuotientAlgebra::lift(const Element& w) const {
  Element v = zero_vector(ideal.field(), ideal.ambient_dim());
  for (std::size_t i = 0; i < representatives.size(); ++i) v[representatives[i]] = w[i];
  return v;
}

QuotientAlgebra quotient_algebra(const Algebra& a, const Subspace& ideal) {
  if (ideal.ambient_dim() != a.dim() || ideal.field() != a.field())
    throw Error(ErrorCode::AmbientMismatch, "ideal does not live in the algebra");
  if (ideal.is_full()) throw Error(ErrorCode::ImproperIdeal, "quotient by the whole algebra");
  for (Side side : {Side::right, Side::left})
    if (auto esc = find_escape(a, ideal, side))
      throw Error(ErrorCode::NotAnIdeal, std::string("subspace is not a ") + side_name(side) + " ideal: " +
                                             a.format(esc->generator) + " times " + a.names()[esc->multiplier] +
                                             " = " + a.format(esc->product));

  std::vector<std::size_t> reps = ideal.free_coordinates();
  const std::size_t q = reps.size();
  QuotientAlgebra partial{a, ideal, reps};  // algebra member replaced below
  std::vector<Scalar> table(q * q * q, a.field().zero());
  std::vector<std::string> names;
  for (std::size_t i = 0; i < q; ++i) {
    names.push_back(a.names()[reps[i]]);
    for (std::size_t j = 0; j < q; ++j) {
      Element w = partial.project(a.multiply(a.basis(reps[i]), a.basis(reps[j])));
      for (std::size_t k = 0; k < q; ++k) table[(i * q + j) * q + k] = w[k];
    }
  }
  Algebra qa = Algebra::build(a.field(), q, partial.project(a.unit()), std::move(table), std::move(names));
  QuotientAlgebra result{std::move(qa), ideal, std::move(reps)};

  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      Element lhs = result.project(a.multiply(a.basis(i), a.basis(j)));
      Element rhs = result.algebra.multiply(result.project(a.basis(i)), result.project(a.basis(j)));
      if (lhs != rhs)
        throw Error(ErrorCode::CertificateFailure, "projection is not multiplicative on " + a.names()[i] +
                                                       ", " + a.names()[j]);
    }
  return result;
}

Algebra truncated_polynomial_algebra(const Algebra& a, std::size_t m) {
  if (m < 2) throw Error(ErrorCode::BadShape, "truncation order must be at least 2");
  const std::size_t n = a.dim(), big = n * m;
  std::vector<Scalar> table(big * big * big, a.field().zero());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < m; ++j)
        for (std::size_t l = 0; j + l < m; ++l) {
          std::size_t row = j * n + i, col = l * n + k, shift = (j + l) * n;
          for (std::size_t t = 0; t < n; ++t)
            table[(row * big + col) * big + shift + t] = a.constant(i, k, t);
        }
  Element unit = zero_vector(a.field(), big);
  for (std::size_t t = 0; t < n; ++t) unit[t] = a.unit()[t];
  // Iterated extensions would repeat "·x", so pick a letter the base names do not use.
  std::string var = "x";
  for (std::size_t attempt = 0;; ++attempt) {
    var = attempt < 4 ? std::string(1, "xyzw"[attempt]) : "x" + std::to_string(attempt);
    bool used = false;
    for (const auto& name : a.names()) used = used || name.find("·" + var) != std::string::npos;
    if (!used) break;
  }
  std::vector<std::string> names;
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < n; ++i)
      names.push_back(j == 0 ? a.names()[i]
                             : a.names()[i] + "·" + var + (j == 1 ? std::string() : "^" + std::to_string(j)));
  return Algebra::build(a.field(), big, std::move(unit), std::move(table), std::move(names));
}

Element truncation_variable(const Algebra& base, const Algebra& truncated) {
  Element x = truncated.zero();
  for (std::size_t t = 0; t < base.dim(); ++t) x[base.dim() + t] = base.unit()[t];
  return x;
}

ElementRange::ElementRange(FieldDesc field, std::size_t dim, std::uint64_t first, std::uint64_t last)
    : field_(field), dim_(dim), first_(first), last_(last) {
  std::uint64_t total = coordinate_space_size(field, dim);
  if (last_ == 0 || last_ > total) last_ = total;
  if (first_ > last_) first_ = last_;
}

ElementRange enumerate_elements(const Algebra& a) { return ElementRange(a.field(), a.dim()); }

std::uint64_t element_count(const Algebra& a) { return coordinate_space_size(a.field(), a.dim()); }

}  // namespace ringlab
