#include <doctest.h>

#include <random>

#include "oracle/matrix_oracle.hpp"
#include "ringlab/algebra.hpp"
#include "ringlab/catalog.hpp"
#include "ringlab/central.hpp"
#include "support.hpp"

using namespace ringlab;
using testing_support::build;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::ParseError;
}

Element random_element(const Algebra& a, std::mt19937_64& rng) {
  Element v;
  for (std::size_t i = 0; i < a.dim(); ++i)
    v.push_back(a.field().is_finite() ? a.field().from_int(static_cast<long long>(rng() % a.field().modulus()))
                                      : a.field().from_int(static_cast<long long>(rng() % 9) - 4));
  return v;
}

Matrix unit_matrix(const FieldDesc& f, std::size_t k, std::size_t r, std::size_t c) {
  Matrix m(f, k, k);
  m(r, c) = f.one();
  return m;
}

}  // namespace

TEST_CASE("build validates the table") {
  const FieldDesc f2 = FieldDesc::prime(2);
  Algebra k = Algebra::build(f2, 1, {f2.one()}, {f2.one()});
  CHECK(k.dim() == 1);
  CHECK(k.multiply(k.unit(), k.unit()) == k.unit());
  CHECK(code_of([&] { Algebra::build(f2, 1, {f2.zero()}, {f2.one()}); }) == ErrorCode::UnitLawFails);
  CHECK(code_of([&] { Algebra::build(f2, 2, {f2.one()}, {f2.one()}); }) == ErrorCode::BadShape);

  // F_2[t]/(t^2)
  Algebra dual = Algebra::build(f2, 2, {f2.one(), f2.zero()},
                                {f2.one(), f2.zero(), f2.zero(), f2.one(), f2.zero(), f2.one(), f2.zero(), f2.zero()});
  CHECK(is_commutative(dual).commutative);
  CHECK(is_zero_vector(dual.multiply(dual.basis(1), dual.basis(1))));

  const FieldDesc f3 = FieldDesc::prime(3);
  std::vector<Scalar> t(27, f3.zero());
  auto set = [&](int i, int j, int k) { t[(i * 3 + j) * 3 + k] = f3.one(); };
  for (int i = 0; i < 3; ++i) {
    set(0, i, i);
    set(i, 0, i);
  }
  // x x = y and x y = x, so (x x) x = 0 but x (x x) = x.
  set(1, 1, 2);
  set(1, 2, 1);
  CHECK(code_of([&] { Algebra::build(f3, 3, {f3.one(), f3.zero(), f3.zero()}, t); }) == ErrorCode::NotAssociative);
}

TEST_CASE("the 7x7 example matches integer matrix multiplication") {
  const auto expected = oracle::paper_table();
  for (const FieldDesc& f : {FieldDesc::prime(2), FieldDesc::prime(3), FieldDesc::rationals()}) {
    PaperBundle pb = paper_algebra(f);
    const Algebra& a = pb.algebra();
    REQUIRE(a.dim() == 7);
    CHECK(a.names() == expected.names);
    for (std::size_t i = 0; i < 7; ++i)
      for (std::size_t j = 0; j < 7; ++j)
        for (std::size_t k = 0; k < 7; ++k) CHECK(a.constant(i, j, k) == f.from_int(expected.at(i, j, k)));
  }
  // Frozen from the oracle: the only non-zero products of radical basis elements.
  PaperBundle pb = paper_algebra(FieldDesc::prime(2));
  const Algebra& a = pb.algebra();
  int nonzero = 0;
  for (std::size_t i = 1; i < 7; ++i)
    for (std::size_t j = 1; j < 7; ++j)
      if (!is_zero_vector(a.multiply(a.basis(i), a.basis(j)))) ++nonzero;
  CHECK(nonzero == 5);
  CHECK(a.multiply(pb.element("Ea"), pb.element("Eb")) == pb.element("Ec"));
  CHECK(a.multiply(pb.element("Ea"), pb.element("Ed")) == pb.element("Ef"));
  CHECK(a.multiply(pb.element("Ed"), pb.element("Ea")) == pb.element("Ef"));
  CHECK(a.multiply(pb.element("Eb"), pb.element("Ee")) == pb.element("Ef"));
  CHECK(a.multiply(pb.element("Ee"), pb.element("Eb")) == pb.element("Ef"));
  CHECK(is_zero_vector(a.multiply(pb.element("Eb"), pb.element("Ea"))));
}

TEST_CASE("from_matrix_basis") {
  const FieldDesc f2 = FieldDesc::prime(2);
  auto small = from_matrix_basis(f2, 2, {Matrix::identity(f2, 2), unit_matrix(f2, 2, 0, 1)}, false);
  CHECK(small.algebra.dim() == 2);
  CHECK(is_zero_vector(small.algebra.multiply(small.algebra.basis(1), small.algebra.basis(1))));
  CHECK(code_of([&] { from_matrix_basis(f2, 2, {unit_matrix(f2, 2, 0, 1)}, true); }) == ErrorCode::NoUnit);
  CHECK(code_of([&] {
          from_matrix_basis(f2, 2, {Matrix::identity(f2, 2), unit_matrix(f2, 2, 0, 1), unit_matrix(f2, 2, 1, 0)},
                            false);
        }) == ErrorCode::NotClosed);
  auto closed = from_matrix_basis(
      f2, 2, {Matrix::identity(f2, 2), unit_matrix(f2, 2, 0, 1), unit_matrix(f2, 2, 1, 0)}, true);
  CHECK(closed.algebra.dim() == 4);
  auto paper = from_matrix_basis(f2, 7, paper_generators(f2), false);
  CHECK(paper.algebra.dim() == 7);
}

TEST_CASE("commutativity") {
  const FieldDesc f2 = FieldDesc::prime(2);
  PaperBundle pb = paper_algebra(f2);
  auto v = is_commutative(pb.algebra());
  CHECK_FALSE(v.commutative);
  REQUIRE(v.witness);
  CHECK(pb.algebra().names()[v.witness->first] == "Ea");
  CHECK(pb.algebra().names()[v.witness->second] == "Eb");
  CHECK_FALSE(is_commutative(full_matrix(2, f2)).commutative);
  CHECK(is_commutative(full_matrix(1, f2)).commutative);
}

TEST_CASE("quotients") {
  const FieldDesc f2 = FieldDesc::prime(2);
  PaperBundle pb = paper_algebra(f2);
  const Algebra& a = pb.algebra();
  auto rad = testing_support::span_of(a, {"Ea", "Eb", "Ec", "Ed", "Ee", "Ef"});
  auto q = quotient_algebra(a, rad);
  CHECK(q.algebra.dim() == 1);
  CHECK(q.algebra.unit() == Element{f2.one()});
  CHECK(q.algebra.multiply(q.algebra.unit(), q.algebra.unit()) == q.algebra.unit());
  CHECK(q.project(pb.element("Ea")) == Element{f2.zero()});
  auto same = quotient_algebra(a, Subspace::zero(f2, 7));
  CHECK(same.algebra == a);
  CHECK(code_of([&] { quotient_algebra(a, pb.I); }) == ErrorCode::NotAnIdeal);
  CHECK(code_of([&] { quotient_algebra(a, Subspace::full(f2, 7)); }) == ErrorCode::ImproperIdeal);
  auto byc = quotient_algebra(a, pb.C);
  CHECK(byc.algebra.dim() == 6);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    Element x = random_element(a, rng), y = random_element(a, rng);
    CHECK(byc.project(a.multiply(x, y)) == byc.algebra.multiply(byc.project(x), byc.project(y)));
    CHECK(byc.project(byc.lift(byc.project(x))) == byc.project(x));
  }
}

TEST_CASE("truncated polynomial extension") {
  const FieldDesc f2 = FieldDesc::prime(2);
  PaperBundle pb = paper_algebra(f2);
  Algebra r = truncated_polynomial_algebra(pb.algebra(), 2);
  CHECK(r.dim() == 14);
  Element x = truncation_variable(pb.algebra(), r);
  CHECK(is_zero_vector(r.multiply(x, x)));
  CHECK(code_of([&] { truncated_polynomial_algebra(pb.algebra(), 1); }) == ErrorCode::BadShape);
  Algebra dual = truncated_polynomial_algebra(full_matrix(1, f2), 2);
  Algebra ext = truncated_polynomial_algebra(dual, 3);
  CHECK(center(ext).is_full());
}

TEST_CASE("element enumeration") {
  const FieldDesc f2 = FieldDesc::prime(2);
  PaperBundle pb = paper_algebra(f2);
  CHECK(element_count(pb.algebra()) == 128);
  std::uint64_t n = 0;
  for (const auto& e : enumerate_elements(pb.algebra())) {
    CHECK(testing_support::index_of(e) == n);
    ++n;
  }
  CHECK(n == 128);
  CHECK(code_of([&] { enumerate_elements(paper_algebra(FieldDesc::rationals()).algebra()); }) ==
        ErrorCode::InfiniteField);
}

TEST_CASE("opposite algebra") {
  const FieldDesc f3 = FieldDesc::prime(3);
  Algebra a = paper_algebra(f3).algebra();
  Algebra op = a.opposite();
  std::mt19937_64 rng(1);
  for (int t = 0; t < 50; ++t) {
    Element x = random_element(a, rng), y = random_element(a, rng);
    CHECK(op.multiply(x, y) == a.multiply(y, x));
  }
  CHECK(op.opposite() == a);
}

TEST_CASE("format and names") {
  const FieldDesc f3 = FieldDesc::prime(3);
  PaperBundle pb = paper_algebra(f3);
  Element v = add(pb.element("Ec"), scale(f3.from_int(2), pb.element("Ef")));
  CHECK(pb.algebra().format(v) == "Ec + 2*Ef");
  CHECK(pb.algebra().format(pb.algebra().zero()) == "0");
  CHECK(pb.algebra().index_of("Ed") == std::optional<std::size_t>(4));
  CHECK_FALSE(pb.algebra().index_of("Eg"));
  CHECK(full_matrix(2, f3).names() == std::vector<std::string>{"E11", "E12", "E21", "E22"});
  CHECK(upper_triangular(2, f3).names() == std::vector<std::string>{"E11", "E12", "E22"});
}

TEST_CASE("property: matrix embedding respects multiplication") {
  std::mt19937_64 rng(42);
  std::vector<MatrixAlgebra> algebras;
  for (const FieldDesc& f : {FieldDesc::prime(2), FieldDesc::prime(5), FieldDesc::rationals()})
    algebras.push_back(paper_algebra(f).matrices);
  for (std::uint64_t seed = 0; seed < 6; ++seed)
    algebras.push_back(random_subalgebra(3, FieldDesc::prime(seed % 2 ? 3 : 2), 2, seed).algebra);
  for (const auto& m : algebras) {
    const Algebra& a = m.algebra;
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t j = 0; j < a.dim(); ++j)
        CHECK(m.to_matrix(a.multiply(a.basis(i), a.basis(j))) == m.embedding[i] * m.embedding[j]);
    for (int t = 0; t < 100; ++t) {
      Element x = random_element(a, rng), y = random_element(a, rng);
      CHECK(m.to_matrix(a.multiply(x, y)) == m.to_matrix(x) * m.to_matrix(y));
    }
    CHECK(m.to_matrix(a.unit()) == Matrix::identity(a.field(), m.size));
  }
}

TEST_CASE("property: associativity on random triples") {
  std::mt19937_64 rng(8);
  std::vector<Algebra> algebras{paper_algebra(FieldDesc::rationals()).algebra(), full_matrix(3, FieldDesc::prime(7)),
                                upper_triangular(4, FieldDesc::prime(2)),
                                truncated_polynomial_algebra(paper_algebra(FieldDesc::prime(3)).algebra(), 3)};
  for (const auto& a : algebras)
    for (int t = 0; t < 100; ++t) {
      Element x = random_element(a, rng), y = random_element(a, rng), z = random_element(a, rng);
      CHECK(a.multiply(a.multiply(x, y), z) == a.multiply(x, a.multiply(y, z)));
      CHECK(a.multiply(a.unit(), x) == x);
      CHECK(a.multiply(x, a.unit()) == x);
    }
}

TEST_CASE("property: truncated extension structure") {
  std::mt19937_64 rng(77);
  for (const FieldDesc& f : {FieldDesc::prime(2), FieldDesc::prime(3), FieldDesc::rationals()}) {
    const Algebra base = paper_algebra(f).algebra();
    for (std::size_t m : {2u, 3u, 4u}) {
      Algebra r = truncated_polynomial_algebra(base, m);
      const std::size_t n = base.dim();
      CHECK(r.dim() == n * m);
      Element x = truncation_variable(base, r);
      CHECK(is_central(r, x));
      Element power = r.unit();
      for (std::size_t k = 0; k < m; ++k) power = r.multiply(power, x);
      CHECK(is_zero_vector(power));
      Element unit = r.zero();
      for (std::size_t i = 0; i < n; ++i) unit[i] = base.unit()[i];
      CHECK(r.unit() == unit);
      // b_i x^s * b_j x^t = (b_i b_j) x^(s+t)
      for (int t = 0; t < 30; ++t) {
        const std::size_t i = rng() % n, j = rng() % n, s = rng() % m, u = rng() % m;
        Element prod = r.multiply(r.basis(s * n + i), r.basis(u * n + j));
        Element expected = r.zero();
        if (s + u < m) {
          Element bb = base.multiply(base.basis(i), base.basis(j));
          for (std::size_t k = 0; k < n; ++k) expected[(s + u) * n + k] = bb[k];
        }
        CHECK(prod == expected);
      }
    }
  }
}
