#include <doctest.h>

#include "ringlab/catalog.hpp"
#include "ringlab/central.hpp"
#include "ringlab/ideals.hpp"
#include "ringlab/report.hpp"
#include "ringlab/suites.hpp"
#include "support.hpp"

using namespace ringlab;
using testing_support::span_of;

namespace {

Algebra dual_numbers(std::uint32_t p) {
  return truncated_polynomial_algebra(full_matrix(1, FieldDesc::prime(p)), 2);
}

}  // namespace

TEST_CASE("radical-quotient implication sheets") {
  const FieldDesc f2 = FieldDesc::prime(2);
  VerdictSheet s = remark11_check(paper_algebra(f2).algebra(), "paper@F2");
  CHECK(s.implication == Implication::holds);
  CHECK(s.all_agree());
  CHECK(s.row("quotient_commutative").agrees_with_paper == std::optional<bool>(true));
  CHECK(s.row("quasi_invariant_right").agrees_with_paper == std::optional<bool>(true));
  CHECK(s.row("quasi_invariant_left").agrees_with_paper == std::optional<bool>(true));
  CHECK(s.row("radical").computed == "span{Ea, Eb, Ec, Ed, Ee, Ef}");

  VerdictSheet m = remark11_check(full_matrix(2, f2), "M2@F2");
  CHECK(m.implication == Implication::vacuous);
  CHECK_FALSE(m.row("quotient_commutative").agrees_with_paper);

  VerdictSheet c = remark11_check(dual_numbers(3));
  CHECK(c.implication == Implication::holds);
  CHECK(std::string(implication_name(Implication::vacuous)) == "vacuous");
  CHECK_FALSE(s.has_row("nonexistent"));
}

TEST_CASE("minimal-ideal implication sheets") {
  const FieldDesc f2 = FieldDesc::prime(2);
  VerdictSheet s = remark13_check(paper_algebra(f2).algebra(), "paper@F2");
  CHECK(s.implication == Implication::holds);
  CHECK(s.row("minimal_right_ideals").agrees_with_paper == std::optional<bool>(true));
  CHECK(s.row("socle_in_center").evidence["socle"] == subspace_json(paper_algebra(f2).algebra(),
                                                                     span_of(paper_algebra(f2).algebra(), {"Ec", "Ef"})));
  CHECK(remark13_check(full_matrix(2, f2)).implication == Implication::vacuous);
  CHECK(remark13_check(dual_numbers(2)).implication == Implication::holds);
}

TEST_CASE("property: implication sheets never fail on the test algebras") {
  for (const auto& [name, a] : testing_support::finite_test_algebras()) {
    CAPTURE(name);
    CHECK(remark11_check(a, name).implication != Implication::fails);
    CHECK(remark13_check(a, name).implication != Implication::fails);
  }
}

TEST_CASE("truncated polynomial extension of a maximal ideal") {
  const FieldDesc f2 = FieldDesc::prime(2);
  const Algebra a = paper_algebra(f2).algebra();
  VerdictSheet s = lemma21_truncated_check(a, radical_subspace(a), 2, "paper@F2");
  CHECK(s.all_agree());
  CHECK(s.row("extension_maximal").evidence["extension_dim"] == 13);
  CHECK(s.row("extension_maximal").evidence["ambient_dim"] == 14);
  CHECK(s.row("two_sided_iff").evidence["extension"]["is_left"] == true);
  CHECK(s.row("division_ring").agrees_with_paper == std::optional<bool>(true));

  Algebra m2 = full_matrix(2, f2);
  std::vector<SidedIdeal> maxes = maximal_right_ideals(m2);
  REQUIRE(maxes.size() == 3);
  VerdictSheet t = lemma21_truncated_check(m2, maxes[0].subspace, 2);
  CHECK(t.all_agree());
  CHECK(t.row("two_sided_iff").evidence["extension"]["is_left"] == false);

  Algebra k = full_matrix(1, f2);
  VerdictSheet z = lemma21_truncated_check(k, Subspace::zero(f2, 1), 3);
  CHECK(z.all_agree());
  CHECK(z.row("extension_maximal").evidence["extension_dim"] == 2);

  CHECK_THROWS_AS(lemma21_truncated_check(a, span_of(a, {"Ec"}), 2), Error);
}

TEST_CASE("truncated polynomial extension preserves central essentiality") {
  VerdictSheet s = lemma22_truncated_check(paper_algebra(FieldDesc::prime(2)).algebra(), 2, "paper@F2");
  CHECK(s.implication == Implication::holds);
  CHECK(s.row("extension_centrally_essential").agrees_with_paper == std::optional<bool>(true));
  CHECK(s.row("degree_shift_witnesses").agrees_with_paper == std::optional<bool>(true));
  CHECK(lemma22_truncated_check(dual_numbers(2), 3).implication == Implication::holds);
  CHECK(lemma22_truncated_check(full_matrix(2, FieldDesc::prime(2)), 2).implication == Implication::vacuous);
}

TEST_CASE("the 7x7 example sheet") {
  VerdictSheet f2 = verify_paper_example(FieldDesc::prime(2));
  CHECK(f2.row("3.centrally_essential").agrees_with_paper == std::optional<bool>(true));
  CHECK(f2.row("4.paper_witness").agrees_with_paper == std::optional<bool>(false));
  CHECK(f2.row("7.closed_I").agrees_with_paper == std::optional<bool>(false));
  CHECK(f2.row("7.closed_J").agrees_with_paper == std::optional<bool>(false));
  CHECK(f2.row("7.closed_C").computed == "closed");
  CHECK(f2.row("6.complement_C_of_I").agrees_with_paper == std::optional<bool>(true));
  CHECK(f2.row("6.complement_C_of_J").agrees_with_paper == std::optional<bool>(true));
  CHECK(f2.row("7.closed_I").summary ==
        "essential in span{Eb, Ed, Ef} (extender Ed); also essential in span{Eb, Ee, Ef}: yes");
  CHECK(f2.row("7.closed_J").summary ==
        "essential in span{Ea, Ed, Ef} (extender Ed); also essential in span{Ea, Ed, Ef}: yes");

  VerdictSheet f3 = verify_paper_example(FieldDesc::prime(3));
  VerdictSheet f5 = verify_paper_example(FieldDesc::prime(5));
  CHECK(f3.row("4.paper_witness").agrees_with_paper == std::optional<bool>(true));
  CHECK(f5.row("4.paper_witness").agrees_with_paper == std::optional<bool>(false));
  REQUIRE(f2.rows.size() == f3.rows.size());
  REQUIRE(f2.rows.size() == f5.rows.size());
  for (std::size_t i = 0; i < f2.rows.size(); ++i) {
    const char group = f2.rows[i].id[0];
    if (group != '1' && group != '2' && group != '5' && group != '6') continue;
    CAPTURE(f2.rows[i].id);
    CHECK(f2.rows[i].computed == f3.rows[i].computed);
    CHECK(f2.rows[i].computed == f5.rows[i].computed);
  }

  VerdictSheet q = verify_paper_example(FieldDesc::rationals());
  REQUIRE(q.has_row("4.paper_witness"));
  CHECK(q.row("4.paper_witness").agrees_with_paper == std::optional<bool>(false));
  CHECK(q.row("3.centrally_essential").agrees_with_paper == std::optional<bool>(true));
  CHECK(q.row("7.closed_I").computed == "n/a (needs a finite field)");
  CHECK(sheet_json(q)["rows"].size() == q.rows.size());
}

TEST_CASE("sheets do not depend on the thread count") {
  const Algebra a = paper_algebra(FieldDesc::prime(3)).algebra();
  CHECK(sheet_json(verify_paper_example(FieldDesc::prime(2), 1)) ==
        sheet_json(verify_paper_example(FieldDesc::prime(2), 3)));
  CHECK(sheet_json(remark13_check(a, "", 1)) == sheet_json(remark13_check(a, "", 4)));
  CHECK(sheet_json(lemma22_truncated_check(dual_numbers(3), 2, "", 1)) ==
        sheet_json(lemma22_truncated_check(dual_numbers(3), 2, "", 2)));
}

TEST_CASE("random search for non-central minimal right ideals") {
  OQ15Config cfg;
  cfg.dims = {2, 3};
  cfg.samples = 60;
  cfg.seed = 11;
  cfg.inject_paper = true;
  OQ15Findings f = search_oq15(cfg);
  cfg.threads = 3;
  OQ15Findings g = search_oq15(cfg);
  CHECK(findings_json(f) == findings_json(g));
  CHECK(findings_text(f) == findings_text(g));
  CHECK(f.sampled == 61);
  CHECK(f.samples[0].source == "paper@F2");
  CHECK(f.samples[0].centrally_essential);
  CHECK(f.samples[0].socle_in_center);
  CHECK(f.counterexamples == 0);

  std::uint64_t ce = 0;
  for (const auto& s : f.samples) {
    if (s.skipped) continue;
    if (s.centrally_essential) ++ce;
    if (s.source != "random") continue;
    CAPTURE(s.index);
    // Each sample can be rebuilt from its recorded parameters and re-checked by brute force.
    RandomSubalgebra r =
        random_subalgebra(s.matrix_size, FieldDesc::prime(s.p), s.generator_count, s.sample_seed, s.profile);
    const Algebra& a = r.algebra.algebra;
    CHECK(a.dim() == s.dim);
    if (element_count(a) > 4096) continue;
    oracle::FiniteAlgebra o(testing_support::table_of(a), s.p);
    CHECK(o.centrally_essential() == s.centrally_essential);
    if (!s.centrally_essential) continue;
    std::vector<oracle::Set> mins = o.minimal_ideals(true);
    CHECK(mins.size() == s.minimal_count);
    bool central = true;
    const oracle::Set z = o.center();
    for (const auto& m : mins) central = central && oracle::FiniteAlgebra::subset(m, z);
    CHECK(central == s.all_minimal_central);
  }
  CHECK(ce == f.centrally_essential);
}
