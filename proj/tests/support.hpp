#pragma once

#include <string>
#include <vector>

#include "oracle/finite_oracle.hpp"
#include "ringlab/algebra.hpp"
#include "ringlab/catalog.hpp"

namespace testing_support {

using namespace ringlab;

inline Algebra build(const oracle::Table& t, FieldDesc field) {
  std::vector<Scalar> table;
  for (long v : t.c) table.push_back(field.from_int(v));
  Element unit;
  for (long v : t.unit) unit.push_back(field.from_int(v));
  return Algebra::build(field, t.n, unit, table, t.names);
}

inline oracle::Table table_of(const Algebra& a) {
  oracle::Table t;
  t.n = a.dim();
  for (const auto& s : a.table()) t.c.push_back(s.residue());
  for (const auto& s : a.unit()) t.unit.push_back(s.residue());
  t.names = a.names();
  return t;
}

inline std::uint32_t index_of(const Element& v) {
  std::uint32_t x = 0;
  for (std::size_t i = v.size(); i-- > 0;) x = x * v[i].field().modulus() + v[i].residue();
  return x;
}

inline Element element_of(const Algebra& a, std::uint32_t x) {
  Element v;
  const std::uint32_t p = a.field().modulus();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    v.push_back(a.field().from_int(x % p));
    x /= p;
  }
  return v;
}

// All members of a subspace, found by summing multiples of its basis rows.
inline oracle::Set members(const oracle::FiniteAlgebra& o, const Subspace& s) {
  std::vector<std::uint32_t> gens;
  for (const auto& v : s.basis_vectors()) gens.push_back(index_of(v));
  return o.span(gens);
}

inline Subspace subspace_of(const Algebra& a, const oracle::Set& s) {
  std::vector<Element> gens;
  for (auto x : s) gens.push_back(element_of(a, x));
  return Subspace::span(a.field(), a.dim(), gens);
}

inline Subspace span_of(const Algebra& a, const std::vector<std::string>& names) {
  std::vector<Element> gens;
  for (const auto& n : names) gens.push_back(a.basis(*a.index_of(n)));
  return Subspace::span(a.field(), a.dim(), gens);
}

struct Named {
  std::string name;
  Algebra algebra;
};

// Small finite algebras used across property tests; every one fits the oracle.
inline std::vector<Named> finite_test_algebras() {
  const FieldDesc f2 = FieldDesc::prime(2), f3 = FieldDesc::prime(3);
  std::vector<Named> out;
  out.push_back({"paper@F2", paper_algebra(f2).algebra()});
  out.push_back({"paper@F3", paper_algebra(f3).algebra()});
  out.push_back({"M2@F2", full_matrix(2, f2)});
  out.push_back({"M2@F3", full_matrix(2, f3)});
  out.push_back({"UT2@F2", upper_triangular(2, f2)});
  out.push_back({"UT2@F5", upper_triangular(2, FieldDesc::prime(5))});
  out.push_back({"UT3@F2", upper_triangular(3, f2)});
  out.push_back({"F2", full_matrix(1, f2)});
  out.push_back({"F2[t]/(t^2)", Algebra::build(f2, 2, {f2.one(), f2.zero()},
                                               {f2.one(), f2.zero(), f2.zero(), f2.one(), f2.zero(), f2.one(),
                                                f2.zero(), f2.zero()},
                                               {"1", "t"})});
  for (std::uint64_t seed : {1, 2, 3, 4}) {
    auto r = random_subalgebra(3, f2, 1 + seed % 2, seed, static_cast<MatrixProfile>(seed % 3));
    if (element_count(r.algebra.algebra) <= 4096)
      out.push_back({"random M3@F2 seed " + std::to_string(seed), r.algebra.algebra});
  }
  for (std::uint64_t seed : {5, 6}) {
    auto r = random_subalgebra(2, f3, 2, seed, MatrixProfile::dense);
    if (element_count(r.algebra.algebra) <= 4096)
      out.push_back({"random M2@F3 seed " + std::to_string(seed), r.algebra.algebra});
  }
  return out;
}

}  // namespace testing_support
