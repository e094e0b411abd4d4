#include <doctest.h>

#include <set>

#include "ringlab/catalog.hpp"
#include "ringlab/central.hpp"
#include "ringlab/ideals.hpp"
#include "support.hpp"

using namespace ringlab;
using testing_support::span_of;

namespace {

using Flat = std::vector<long>;

Flat flatten(const Matrix& m) {
  Flat out;
  for (const auto& s : m.entries()) out.push_back(std::stol(s.to_string()));
  return out;
}

// Every element of the subalgebra generated by `gens` and the identity, by saturation.
std::set<Flat> closure_oracle(const std::vector<Matrix>& gens, std::size_t k, long p) {
  std::set<Flat> seen;
  Flat id(k * k, 0);
  for (std::size_t i = 0; i < k; ++i) id[i * k + i] = 1;
  std::vector<Flat> base{id};
  for (const auto& g : gens) base.push_back(flatten(g));
  seen.insert(Flat(k * k, 0));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Flat> current(seen.begin(), seen.end());
    for (const auto& x : current) {
      for (const auto& y : current) {
        Flat sum(k * k);
        for (std::size_t i = 0; i < k * k; ++i) sum[i] = (x[i] + y[i]) % p;
        grew |= seen.insert(sum).second;
      }
      for (const auto& b : base) {
        Flat sum(k * k), prod(k * k, 0);
        for (std::size_t i = 0; i < k * k; ++i) sum[i] = (x[i] + b[i]) % p;
        for (std::size_t r = 0; r < k; ++r)
          for (std::size_t c = 0; c < k; ++c)
            for (std::size_t t = 0; t < k; ++t) prod[r * k + c] = (prod[r * k + c] + x[r * k + t] * b[t * k + c]) % p;
        grew |= seen.insert(sum).second;
        grew |= seen.insert(prod).second;
      }
    }
  }
  return seen;
}

std::uint64_t power(std::uint64_t p, std::size_t e) {
  std::uint64_t r = 1;
  while (e--) r *= p;
  return r;
}

}  // namespace

TEST_CASE("the 7x7 example") {
  const FieldDesc f2 = FieldDesc::prime(2);
  PaperBundle pb = paper_algebra(f2);
  const Algebra& a = pb.algebra();
  CHECK(a.dim() == 7);
  CHECK(element_count(a) == 128);
  CHECK(a.names() == std::vector<std::string>{"U", "Ea", "Eb", "Ec", "Ed", "Ee", "Ef"});
  CHECK(a.unit() == pb.element("U"));
  CHECK(pb.letters == std::vector<std::string>{"alpha", "a", "b", "c", "d", "e", "f"});
  CHECK(pb.I == span_of(a, {"Eb", "Ef"}));
  CHECK(pb.J == span_of(a, {"Ea", "Ef"}));
  CHECK(pb.C == span_of(a, {"Ec"}));
  CHECK(pb.matrices.size == 7);
  CHECK(pb.matrices.embedding == paper_generators(f2));

  SidedIdeal i = sidedness(a, pb.I), j = sidedness(a, pb.J), c = sidedness(a, pb.C);
  CHECK(i.is_right);
  CHECK_FALSE(i.is_left);
  CHECK(j.is_left);
  CHECK_FALSE(j.is_right);
  CHECK(c.two_sided());

  // The witness sends the a and b coordinates to d and e.
  Element x = add(pb.element("Ea"), pb.element("Eb"));
  CHECK(pb.witness.apply(x) == add(pb.element("Ed"), pb.element("Ee")));
  CHECK(pb.witness.apply(pb.element("Ec")) == a.zero());
  CHECK_THROWS_AS(pb.element("Eg"), Error);
}

TEST_CASE("matrix families") {
  const FieldDesc f2 = FieldDesc::prime(2), f3 = FieldDesc::prime(3);
  Algebra m2 = full_matrix(2, f2);
  CHECK(m2.names() == std::vector<std::string>{"E11", "E12", "E21", "E22"});
  CHECK(m2.format(m2.unit()) == "E11 + E22");
  CHECK(check_centrally_essential(m2).verdict == CEVerdict::not_centrally_essential);
  CHECK(radical_subspace(m2).is_zero());

  Algebra ut2 = upper_triangular(2, f3);
  CHECK(ut2.names() == std::vector<std::string>{"E11", "E12", "E22"});
  CHECK(radical_subspace(ut2) == span_of(ut2, {"E12"}));
  Algebra ut3 = upper_triangular(3, f2);
  CHECK(ut3.dim() == 6);
  CHECK(jacobson_radical(ut3).power_dims == std::vector<std::size_t>{3, 1, 0});

  Algebra k = full_matrix(1, f3);
  CHECK(k.dim() == 1);
  CHECK(center(k).is_full());
  CHECK(check_centrally_essential(k).verdict == CEVerdict::centrally_essential);
  CHECK(upper_triangular(1, f3) == k);
  CHECK_THROWS_AS(full_matrix(0, f2), Error);
}

TEST_CASE("random subalgebras") {
  const FieldDesc f2 = FieldDesc::prime(2), f3 = FieldDesc::prime(3);
  RandomSubalgebra r1 = random_subalgebra(3, f2, 2, 17);
  RandomSubalgebra r2 = random_subalgebra(3, f2, 2, 17);
  CHECK(r1.algebra.algebra == r2.algebra.algebra);
  CHECK(r1.generators == r2.generators);
  CHECK(r1.scheme == kRandomScheme);
  CHECK(r1.seed == 17);

  RandomSubalgebra scalars = random_subalgebra(3, f2, 0, 5);
  CHECK(scalars.algebra.algebra.dim() == 1);
  CHECK(scalars.algebra.embedding[0] == Matrix::identity(f2, 3));

  RandomSubalgebra su = random_subalgebra(3, f3, 2, 9, MatrixProfile::strictly_upper);
  for (const auto& g : su.generators)
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c <= r; ++c) CHECK(g(r, c).is_zero());
  CHECK(std::string(profile_name(MatrixProfile::upper_triangular)) == "upper_triangular");
}

TEST_CASE("property: random subalgebras are closed, valid and match saturation") {
  struct Case {
    std::size_t k;
    std::uint32_t p;
  };
  for (Case cs : {Case{2, 2}, Case{2, 3}, Case{3, 2}}) {
    const FieldDesc f = FieldDesc::prime(cs.p);
    for (MatrixProfile profile : {MatrixProfile::dense, MatrixProfile::upper_triangular}) {
      for (std::uint64_t seed = 0; seed < 12; ++seed) {
        CAPTURE(cs.k);
        CAPTURE(cs.p);
        CAPTURE(seed);
        RandomSubalgebra r = random_subalgebra(cs.k, f, 1 + seed % 3, seed, profile);
        const MatrixAlgebra& m = r.algebra;
        const Algebra& a = m.algebra;
        // The table survives re-validation.
        CHECK(Algebra::build(a.field(), a.dim(), a.unit(), a.table(), a.names()) == a);
        // Products of basis matrices expand with the structure constants.
        for (std::size_t i = 0; i < a.dim(); ++i)
          for (std::size_t j = 0; j < a.dim(); ++j)
            CHECK(m.embedding[i] * m.embedding[j] == m.to_matrix(a.multiply(a.basis(i), a.basis(j))));
        CHECK(m.to_matrix(a.unit()) == Matrix::identity(f, cs.k));
        CHECK(power(cs.p, a.dim()) == closure_oracle(r.generators, cs.k, cs.p).size());
      }
    }
  }
}
