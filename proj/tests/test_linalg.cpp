#include <doctest.h>

#include <algorithm>
#include <random>

#include "ringlab/linalg.hpp"

using namespace ringlab;

namespace {

Matrix ints(const FieldDesc& f, const std::vector<std::vector<long long>>& rows) {
  std::vector<Vector> vs;
  for (const auto& r : rows) {
    Vector v;
    for (long long x : r) v.push_back(f.from_int(x));
    vs.push_back(v);
  }
  return Matrix::from_rows(f, rows.front().size(), vs);
}

Vector vec(const FieldDesc& f, const std::vector<long long>& xs) {
  Vector v;
  for (long long x : xs) v.push_back(f.from_int(x));
  return v;
}

Matrix random_matrix(const FieldDesc& f, std::size_t r, std::size_t c, std::mt19937_64& rng) {
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      m(i, j) = f.is_finite() ? f.from_int(static_cast<long long>(rng() % f.modulus()))
                              : f.from_int(static_cast<long long>(rng() % 7) - 3);
  return m;
}

Subspace random_subspace(const FieldDesc& f, std::size_t n, std::mt19937_64& rng) {
  std::vector<Vector> gens;
  const std::size_t count = rng() % (n + 1);
  for (std::size_t i = 0; i < count; ++i) gens.push_back(random_matrix(f, 1, n, rng).row(0));
  return Subspace::span(f, n, gens);
}

}  // namespace

TEST_CASE("rref examples") {
  const FieldDesc f2 = FieldDesc::prime(2), f5 = FieldDesc::prime(5), q = FieldDesc::rationals();
  auto e = rref(ints(f2, {{1, 1}, {1, 1}}));
  CHECK(e.rank == 1);
  CHECK(e.reduced == ints(f2, {{1, 1}}));
  e = rref(ints(q, {{2, 0}, {0, 3}}));
  CHECK(e.rank == 2);
  CHECK(e.reduced == Matrix::identity(q, 2));
  e = rref(ints(f5, {{1, 2}, {2, 4}}));
  CHECK(e.rank == 1);
  CHECK(e.reduced == ints(f5, {{1, 2}}));
  CHECK(e.pivots == std::vector<std::size_t>{0});
}

TEST_CASE("kernel examples") {
  const FieldDesc f2 = FieldDesc::prime(2), q = FieldDesc::rationals();
  CHECK(kernel(ints(f2, {{1, 1}})) == Subspace::span(f2, 2, {vec(f2, {1, 1})}));
  CHECK(kernel(Matrix::identity(q, 4)).is_zero());
  CHECK(kernel(Matrix::identity(FieldDesc::prime(3), 3)).is_zero());
  CHECK(kernel(Matrix(q, 2, 3)).is_full());
}

TEST_CASE("sum, intersection, membership") {
  const FieldDesc f2 = FieldDesc::prime(2);
  auto x = Subspace::span(f2, 2, {vec(f2, {1, 0})});
  auto y = Subspace::span(f2, 2, {vec(f2, {0, 1})});
  CHECK(subspace_sum(x, y).is_full());
  auto plane = Subspace::span(f2, 2, {vec(f2, {1, 0}), vec(f2, {0, 1})});
  auto diag = Subspace::span(f2, 2, {vec(f2, {1, 1})});
  CHECK(subspace_intersect(plane, diag) == diag);
  CHECK_FALSE(contains(diag, vec(f2, {1, 0})));
  CHECK(contains(diag, vec(f2, {1, 1})));
  CHECK(subspace_intersect(x, y).is_zero());
  CHECK_THROWS_AS(subspace_sum(x, Subspace::zero(f2, 3)), Error);
}

TEST_CASE("solve and invertibility") {
  const FieldDesc q = FieldDesc::rationals();
  auto m = ints(q, {{2, 1}, {1, 1}});
  auto x = solve(m, vec(q, {3, 2}));
  REQUIRE(x);
  CHECK(*x == vec(q, {1, 1}));
  CHECK(is_invertible(m));
  CHECK_FALSE(is_invertible(ints(q, {{1, 2}, {2, 4}})));
  CHECK_FALSE(solve(ints(q, {{1, 2}, {2, 4}}), vec(q, {1, 0})));
}

TEST_CASE("coordinate enumeration order") {
  const FieldDesc f2 = FieldDesc::prime(2);
  std::vector<Vector> seen;
  Vector v = zero_vector(f2, 2);
  do seen.push_back(v);
  while (increment_coordinates(v));
  REQUIRE(seen.size() == 4);
  CHECK(seen[0] == vec(f2, {0, 0}));
  CHECK(seen[1] == vec(f2, {1, 0}));
  CHECK(seen[2] == vec(f2, {0, 1}));
  CHECK(seen[3] == vec(f2, {1, 1}));
  for (std::uint64_t i = 0; i < 27; ++i)
    CHECK(coordinate_index(coordinate_vector(FieldDesc::prime(3), 3, i)) == i);
  CHECK(coordinate_space_size(FieldDesc::prime(3), 7) == 2187);
  CHECK_THROWS_AS(coordinate_space_size(FieldDesc::rationals(), 1), Error);
  CHECK_THROWS_AS(coordinate_space_size(FieldDesc::prime(2), 70), Error);
}

TEST_CASE("subspace element enumeration") {
  const FieldDesc f3 = FieldDesc::prime(3);
  auto s = Subspace::span(f3, 3, {vec(f3, {1, 1, 0}), vec(f3, {0, 0, 1})});
  CHECK(s.element_count() == 9);
  std::vector<Vector> all;
  for (std::uint64_t i = 0; i < 9; ++i) {
    Vector v = s.element_at(i);
    CHECK(s.contains(v));
    all.push_back(v);
  }
  std::sort(all.begin(), all.end());
  CHECK(std::unique(all.begin(), all.end()) == all.end());
  CHECK(s.free_coordinates() == std::vector<std::size_t>{1});
  CHECK(is_zero_vector(s.reduce(vec(f3, {2, 2, 1}))));
}

TEST_CASE("property: modular law of dimensions") {
  std::mt19937_64 rng(2024);
  for (const FieldDesc& f : {FieldDesc::prime(2), FieldDesc::prime(3), FieldDesc::prime(7), FieldDesc::rationals()})
    for (int t = 0; t < 100; ++t) {
      const std::size_t n = 1 + rng() % 6;
      auto u = random_subspace(f, n, rng), v = random_subspace(f, n, rng);
      auto s = subspace_sum(u, v), i = subspace_intersect(u, v);
      CHECK(u.dim() + v.dim() == s.dim() + i.dim());
      CHECK(s.contains(u));
      CHECK(s.contains(v));
      CHECK(u.contains(i));
      CHECK(v.contains(i));
    }
}

TEST_CASE("property: canonical bases ignore the generating set") {
  std::mt19937_64 rng(99);
  for (const FieldDesc& f : {FieldDesc::prime(2), FieldDesc::prime(5), FieldDesc::rationals()})
    for (int t = 0; t < 50; ++t) {
      const std::size_t n = 2 + rng() % 5;
      std::vector<Vector> gens;
      for (std::size_t i = 0; i < 1 + rng() % 4; ++i) gens.push_back(random_matrix(f, 1, n, rng).row(0));
      auto s = Subspace::span(f, n, gens);
      std::vector<Vector> other = gens;
      std::shuffle(other.begin(), other.end(), rng);
      for (auto& g : other) g = scale(f.from_int(f.is_finite() ? 1 + static_cast<long long>(rng() % (f.modulus() - 1)) : 3), g);
      if (other.size() > 1) other.push_back(add(other[0], other[1]));
      auto s2 = Subspace::span(f, n, other);
      CHECK(s == s2);
      CHECK(s.basis().entries() == s2.basis().entries());
    }
}

TEST_CASE("property: rank plus nullity") {
  std::mt19937_64 rng(5);
  for (const FieldDesc& f : {FieldDesc::prime(2), FieldDesc::prime(3), FieldDesc::rationals()})
    for (int t = 0; t < 100; ++t) {
      const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 6;
      Matrix m = random_matrix(f, r, c, rng);
      Subspace k = kernel(m);
      CHECK(rref(m).rank + k.dim() == c);
      for (const auto& v : k.basis_vectors()) CHECK(is_zero_vector(m.apply(v)));
    }
}
