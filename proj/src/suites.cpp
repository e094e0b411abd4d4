#include "ringlab/suites.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "ringlab/central.hpp"
#include "ringlab/ideals.hpp"
#include "ringlab/parallel.hpp"
#include "ringlab/report.hpp"

namespace ringlab {

const char* implication_name(Implication i) {
  switch (i) {
    case Implication::holds: return "holds";
    case Implication::vacuous: return "vacuous";
    case Implication::fails: return "fails";
    case Implication::not_applicable: return "n/a";
  }
  return "?";
}

const VerdictRow& VerdictSheet::row(const std::string& id) const {
  for (const auto& r : rows)
    if (r.id == id) return r;
  throw Error(ErrorCode::ParseError, "sheet " + name + " has no row " + id);
}

bool VerdictSheet::has_row(const std::string& id) const {
  return std::any_of(rows.begin(), rows.end(), [&](const VerdictRow& r) { return r.id == id; });
}

bool VerdictSheet::all_agree() const {
  return std::all_of(rows.begin(), rows.end(),
                     [](const VerdictRow& r) { return !r.agrees_with_paper || *r.agrees_with_paper; });
}

namespace {

const std::string kNA = "n/a";

void require_finite(const Algebra& a, const char* what) {
  if (!a.field().is_finite()) throw Error(ErrorCode::InfiniteField, std::string(what) + " needs a finite field");
}

CEReport checked_ce(const Algebra& a, unsigned threads, bool keep_witnesses = true) {
  CEOptions opt;
  opt.threads = threads;
  opt.keep_witnesses = keep_witnesses;
  CEReport r = check_centrally_essential(a, opt);
  if (auto err = validate_ce_report(a, r)) throw Error(ErrorCode::CertificateFailure, *err);
  return r;
}

std::string ce_text(const CEReport& r) {
  std::string out = verdict_name(r.verdict);
  if (r.mode == CEMode::exhaustive)
    out += " (exhaustive, " + std::to_string(r.nonzero_checked) + " non-zero elements checked)";
  return out;
}

std::string commutative_text(const Algebra& a, const CommutativityVerdict& v) {
  if (v.commutative) return "commutative";
  auto [i, j] = *v.witness;
  return "not commutative (" + a.names()[i] + "·" + a.names()[j] + " != " + a.names()[j] + "·" + a.names()[i] + ")";
}

Json commutativity_json(const Algebra& a, const CommutativityVerdict& v) {
  Json out;
  out["commutative"] = v.commutative;
  if (v.witness) {
    auto [i, j] = *v.witness;
    out["pair"] = {a.names()[i], a.names()[j]};
    out["forward"] = a.format(a.multiply(a.basis(i), a.basis(j)));
    out["backward"] = a.format(a.multiply(a.basis(j), a.basis(i)));
  }
  return out;
}

void check_essential_certificates(const Algebra& a, const Subspace& inner, const EssentialVerdict& v, Side side) {
  for (const auto& c : v.certificates) {
    Element p = side == Side::right ? a.multiply(c.element, c.multiplier) : a.multiply(c.multiplier, c.element);
    if (p != c.product || is_zero_vector(p) || !inner.contains(p))
      throw Error(ErrorCode::CertificateFailure, "essential certificate for " + a.format(c.element) + " does not hold");
  }
}

void check_complement(const Algebra& a, const Subspace& k, const Subspace& other, const ComplementVerdict& v,
                      Side side) {
  for (const auto& [u, hit] : v.maximality_witnesses) {
    Subspace y = subspace_sum(k, principal_ideal(a, u, side));
    if (is_zero_vector(hit) || !y.contains(hit) || !other.contains(hit))
      throw Error(ErrorCode::CertificateFailure, "maximality witness for " + a.format(u) + " does not hold");
  }
  if (v.extension && !subspace_intersect(*v.extension, other).is_zero())
    throw Error(ErrorCode::CertificateFailure, "reported extension meets the other ideal");
}

bool is_division_ring(const Algebra& a) {
  for (auto it = enumerate_elements(a).begin(), end = enumerate_elements(a).end(); it != end; ++it) {
    if (it.index() == 0) continue;
    if (!principal_ideal(a, *it, Side::right).is_full()) return false;
  }
  return true;
}

VerdictRow make_row(std::string id, std::string claim, std::string expected, std::string computed,
                    std::optional<bool> agrees, std::string summary = "", Json evidence = Json::object()) {
  return VerdictRow{std::move(id), std::move(claim), std::move(expected), std::move(computed),
                    agrees, std::move(summary), std::move(evidence)};
}

}  // namespace

// ---------------------------------------------------------------------------

VerdictSheet remark11_check(const Algebra& a, const std::string& subject, unsigned threads) {
  require_finite(a, "remark11_check");
  VerdictSheet s{"remark11", subject};
  RadicalCertificate rc = jacobson_radical(a);
  QuotientAlgebra q = quotient_algebra(a, rc.radical);
  s.rows.push_back(make_row("radical", "J(A) with nilpotency and semisimple-quotient certificate", kNA,
                            span_text(a, rc.radical), std::nullopt, "", radical_json(a, rc)));

  CEReport qce = checked_ce(q.algebra, threads);
  const bool premise = qce.verdict == CEVerdict::centrally_essential;
  s.rows.push_back(make_row("quotient_centrally_essential", "premise: A/J(A) is centrally essential", kNA,
                            ce_text(qce), std::nullopt, "", ce_json(q.algebra, qce, false)));

  CommutativityVerdict comm = is_commutative(q.algebra);
  s.rows.push_back(make_row("quotient_commutative", "A/J(A) is commutative",
                            premise ? "commutative" : "n/a (premise fails)", commutative_text(q.algebra, comm),
                            premise ? std::optional<bool>(comm.commutative) : std::nullopt, "",
                            commutativity_json(q.algebra, comm)));

  QuasiInvariantVerdict qr = is_quasi_invariant(a, Side::right);
  QuasiInvariantVerdict ql = is_quasi_invariant(a, Side::left);
  auto qi_row = [&](const char* id, const char* side, const QuasiInvariantVerdict& v) {
    return make_row(id, std::string("A is ") + side + " quasi-invariant",
                    premise ? "quasi-invariant" : "n/a (premise fails)",
                    v.quasi_invariant ? "quasi-invariant" : "not quasi-invariant",
                    premise ? std::optional<bool>(v.quasi_invariant) : std::nullopt,
                    std::to_string(v.maximal_count) + " maximal " + side + " ideals", quasi_invariant_json(a, v));
  };
  s.rows.push_back(qi_row("quasi_invariant_right", "right", qr));
  s.rows.push_back(qi_row("quasi_invariant_left", "left", ql));

  if (!premise)
    s.implication = Implication::vacuous;
  else
    s.implication = comm.commutative && qr.quasi_invariant && ql.quasi_invariant ? Implication::holds : Implication::fails;
  s.rows.push_back(make_row("implication",
                            "if A/J(A) is centrally essential then it is commutative and A is right and left "
                            "quasi-invariant",
                            "holds or vacuous", implication_name(s.implication),
                            s.implication != Implication::fails));
  return s;
}

VerdictSheet remark13_check(const Algebra& a, const std::string& subject, unsigned threads) {
  require_finite(a, "remark13_check");
  VerdictSheet s{"remark13", subject};
  CEReport ce = checked_ce(a, threads);
  const bool is_ce = ce.verdict == CEVerdict::centrally_essential;
  s.rows.push_back(make_row("centrally_essential", "premise: A is centrally essential", kNA, ce_text(ce),
                            std::nullopt, "", ce_json(a, ce, false)));

  RadicalCertificate rc = jacobson_radical(a);
  QuotientAlgebra q = quotient_algebra(a, rc.radical);
  CommutativityVerdict comm = is_commutative(q.algebra);
  s.rows.push_back(make_row("quotient_commutative", "premise: A/J(A) is commutative", kNA,
                            commutative_text(q.algebra, comm), std::nullopt, "",
                            commutativity_json(q.algebra, comm)));
  const bool premise = is_ce && comm.commutative;

  Subspace z = center(a);
  std::vector<SidedIdeal> mins = minimal_right_ideals(a, threads);
  bool all_central = true, all_two_sided = true;
  Json list = Json::array();
  for (const auto& m : mins) {
    const bool central = z.contains(m.subspace);
    all_central = all_central && central;
    all_two_sided = all_two_sided && m.two_sided();
    Json j = sided_json(a, m);
    j["central"] = central;
    list.push_back(std::move(j));
  }
  const bool good = all_central && all_two_sided;
  s.rows.push_back(make_row("minimal_right_ideals", "every minimal right ideal is central and two-sided",
                            premise ? "central and two-sided" : "n/a (premise fails)",
                            std::to_string(mins.size()) + " minimal right ideals; central: " +
                                (all_central ? "all" : "not all") + "; two-sided: " + (all_two_sided ? "all" : "not all"),
                            premise ? std::optional<bool>(good) : std::nullopt, "", Json{{"ideals", list}}));

  Subspace soc = Subspace::zero(a.field(), a.dim());
  for (const auto& m : mins) soc = subspace_sum(soc, m.subspace);
  const bool soc_central = z.contains(soc);
  s.rows.push_back(make_row("socle_in_center", "Soc A_A is contained in Z(A)",
                            premise ? "contained" : "n/a (premise fails)",
                            span_text(a, soc) + (soc_central ? " is central" : " is not central"),
                            premise ? std::optional<bool>(soc_central) : std::nullopt, "",
                            Json{{"socle", subspace_json(a, soc)}, {"center", subspace_json(a, z)}}));

  if (!premise)
    s.implication = Implication::vacuous;
  else
    s.implication = good && soc_central ? Implication::holds : Implication::fails;
  s.rows.push_back(make_row("implication",
                            "if A is centrally essential and A/J(A) is commutative then minimal right ideals and "
                            "the right socle are central",
                            "holds or vacuous", implication_name(s.implication),
                            s.implication != Implication::fails));
  return s;
}

VerdictSheet lemma21_truncated_check(const Algebra& a, const Subspace& m, std::size_t degree,
                                     const std::string& subject) {
  require_finite(a, "lemma21_truncated_check");
  if (degree < 2) throw Error(ErrorCode::BadShape, "truncation degree must be at least 2");
  if (m.ambient_dim() != a.dim()) throw Error(ErrorCode::AmbientMismatch, "M does not live in the algebra");
  if (find_escape(a, m, Side::right)) throw Error(ErrorCode::NotMaximal, "M is not a right ideal");
  if (m.is_full()) throw Error(ErrorCode::NotMaximal, "M is the whole algebra");
  {
    std::vector<std::size_t> free = m.free_coordinates();
    Vector digits = zero_vector(a.field(), free.size());
    while (increment_coordinates(digits)) {
      Element u = a.zero();
      for (std::size_t i = 0; i < free.size(); ++i) u[free[i]] = digits[i];
      if (!subspace_sum(m, principal_ideal(a, u, Side::right)).is_full())
        throw Error(ErrorCode::NotMaximal, "M + (" + a.format(u) + ")A is proper");
    }
  }

  VerdictSheet s{"lemma21", subject};
  const std::size_t n = a.dim();
  Algebra r = truncated_polynomial_algebra(a, degree);
  std::vector<Element> gens;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    Element v = r.zero();
    Element b = m.basis_vector(i);
    std::copy(b.begin(), b.end(), v.begin());
    gens.push_back(std::move(v));
  }
  for (std::size_t k = n; k < r.dim(); ++k) gens.push_back(r.basis(k));
  Subspace mbar = Subspace::span(r.field(), r.dim(), gens);

  const bool codim_ok = r.dim() - mbar.dim() == n - m.dim();
  const bool right = !find_escape(r, mbar, Side::right);
  bool maximal = right && !mbar.is_full();
  std::uint64_t reps = 0;
  if (maximal) {
    std::vector<std::size_t> free = mbar.free_coordinates();
    Vector digits = zero_vector(r.field(), free.size());
    while (increment_coordinates(digits)) {
      Element u = r.zero();
      for (std::size_t i = 0; i < free.size(); ++i) u[free[i]] = digits[i];
      ++reps;
      if (!subspace_sum(mbar, principal_ideal(r, u, Side::right)).is_full()) {
        maximal = false;
        break;
      }
    }
  }
  Json ev_a{{"extension_dim", mbar.dim()},
            {"ambient_dim", r.dim()},
            {"codimension", r.dim() - mbar.dim()},
            {"codimension_of_M", n - m.dim()},
            {"right_ideal", right},
            {"representatives_checked", reps}};
  s.rows.push_back(make_row("extension_maximal", "M R + x R is a maximal right ideal of R", "maximal right ideal",
                            maximal && codim_ok ? "maximal right ideal" : "not maximal",
                            maximal && codim_ok, "", ev_a));

  SidedIdeal sm = sidedness(a, m);
  SidedIdeal smbar = sidedness(r, mbar);
  Json ev_b{{"M", sided_json(a, sm)}, {"extension", sided_json(r, smbar)}};
  s.rows.push_back(make_row("two_sided_iff", "M R + x R is two-sided exactly when M is",
                            "equivalent",
                            std::string("M two-sided: ") + (sm.two_sided() ? "yes" : "no") +
                                "; extension two-sided: " + (smbar.two_sided() ? "yes" : "no"),
                            sm.two_sided() == smbar.two_sided(), "", ev_b));

  bool iso_ok = true;
  if (smbar.two_sided() && sm.two_sided()) {
    QuotientAlgebra qr = quotient_algebra(r, mbar);
    QuotientAlgebra qa = quotient_algebra(a, m);
    auto phi = [&](const Element& w) {
      Element f = qr.lift(w);
      return qa.project(Element(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(n)));
    };
    const std::size_t d = qr.algebra.dim();
    iso_ok = d == qa.algebra.dim();
    std::size_t pairs = 0;
    if (iso_ok) {
      Matrix image(a.field(), d, d);
      for (std::size_t i = 0; i < d; ++i) image.set_column(i, phi(qr.algebra.basis(i)));
      iso_ok = is_invertible(image) && phi(qr.algebra.unit()) == qa.algebra.unit();
      for (std::size_t i = 0; i < d && iso_ok; ++i)
        for (std::size_t j = 0; j < d && iso_ok; ++j) {
          ++pairs;
          Element lhs = phi(qr.algebra.multiply(qr.algebra.basis(i), qr.algebra.basis(j)));
          Element rhs = qa.algebra.multiply(phi(qr.algebra.basis(i)), phi(qr.algebra.basis(j)));
          iso_ok = lhs == rhs;
        }
    }
    const bool division = iso_ok && is_division_ring(qa.algebra);
    s.rows.push_back(make_row("constant_term_isomorphism", "f + M̄ -> f_0 + M is a ring isomorphism R/M̄ -> A/M",
                              "isomorphism", iso_ok ? "isomorphism" : "not an isomorphism", iso_ok,
                              "checked on " + std::to_string(pairs) + " basis pairs",
                              Json{{"quotient_dim", d}, {"basis_pairs", pairs}}));
    s.rows.push_back(make_row("division_ring", "A/M is a division ring", "division ring",
                              division ? "division ring" : "not a division ring", division));
    iso_ok = iso_ok && division;
  } else {
    s.rows.push_back(make_row("constant_term_isomorphism", "f + M̄ -> f_0 + M is a ring isomorphism R/M̄ -> A/M",
                              "n/a (not two-sided)", "n/a", std::nullopt));
  }
  s.implication = maximal && codim_ok && sm.two_sided() == smbar.two_sided() && iso_ok ? Implication::holds
                                                                                      : Implication::fails;
  return s;
}

VerdictSheet lemma22_truncated_check(const Algebra& a, std::size_t degree, const std::string& subject,
                                     unsigned threads) {
  require_finite(a, "lemma22_truncated_check");
  if (degree < 2) throw Error(ErrorCode::BadShape, "truncation degree must be at least 2");
  const std::size_t n = a.dim();
  if (coordinate_space_size(a.field(), n * degree) > (std::uint64_t{1} << 24))
    throw Error(ErrorCode::TooLarge, "truncated extension has more than 2^24 elements");

  VerdictSheet s{"lemma22", subject};
  CEReport base = checked_ce(a, threads);
  const bool premise = base.verdict == CEVerdict::centrally_essential;
  s.rows.push_back(make_row("base_centrally_essential", "premise: A is centrally essential", kNA, ce_text(base),
                            std::nullopt, "", ce_json(a, base, false)));

  Algebra r = truncated_polynomial_algebra(a, degree);
  CEReport ext = checked_ce(r, threads, false);
  const bool ext_ce = ext.verdict == CEVerdict::centrally_essential;
  s.rows.push_back(make_row("extension_centrally_essential", "A[x]/(x^m) is centrally essential",
                            premise ? "centrally_essential" : "n/a (premise fails)", ce_text(ext),
                            premise ? std::optional<bool>(ext_ce) : std::nullopt, "", ce_json(r, ext, false)));

  bool shift_ok = true;
  if (premise) {
    std::map<std::uint64_t, Element> multipliers;
    for (const auto& w : base.witnesses) multipliers.emplace(w.index, w.multiplier);
    Subspace zr = ext.center;
    std::uint64_t checked = 0;
    std::optional<Element> failure;
    for (const Element& f : enumerate_elements(r)) {
      if (zr.contains(f)) continue;
      std::size_t t = 0;
      while (t < degree && is_zero_vector(Element(f.begin() + static_cast<std::ptrdiff_t>(t * n),
                                                  f.begin() + static_cast<std::ptrdiff_t>((t + 1) * n))))
        ++t;
      Element at(f.begin() + static_cast<std::ptrdiff_t>(t * n), f.begin() + static_cast<std::ptrdiff_t>((t + 1) * n));
      Element z = a.unit();
      if (!base.center.contains(at)) z = multipliers.at(coordinate_index(at));
      Element shift = r.zero();
      std::copy(z.begin(), z.end(), shift.begin() + static_cast<std::ptrdiff_t>((degree - 1 - t) * n));
      Element prod = r.multiply(f, shift);
      ++checked;
      if (is_zero_vector(prod) || !zr.contains(prod) || !zr.contains(shift)) {
        failure = f;
        break;
      }
    }
    shift_ok = !failure;
    Json ev{{"noncentral_checked", checked}};
    if (failure) ev["failure"] = element_json(r, *failure);
    s.rows.push_back(make_row("degree_shift_witnesses",
                              "for f with lowest non-zero coefficient a_t, z x^(m-1-t) with z a central witness "
                              "for a_t gives a non-zero central product",
                              "valid", shift_ok ? "valid" : "fails", shift_ok,
                              "checked on " + std::to_string(checked) + " non-central elements", ev));
  }
  if (!premise)
    s.implication = Implication::vacuous;
  else
    s.implication = ext_ce && shift_ok ? Implication::holds : Implication::fails;
  s.rows.push_back(make_row("implication", "A centrally essential implies A[x]/(x^m) centrally essential",
                            "holds or vacuous", implication_name(s.implication),
                            s.implication != Implication::fails));
  return s;
}

// ---------------------------------------------------------------------------

std::vector<WitnessBranch> paper_piecewise_witness(const PaperBundle& bundle) {
  return {WitnessBranch{1, bundle.element("Ed")}, WitnessBranch{2, bundle.element("Ee")}};
}

VerdictSheet verify_paper_example(FieldDesc field, unsigned threads) {
  const bool finite = field.is_finite();
  PaperBundle pb = paper_algebra(field);
  PaperBundle pq = paper_algebra(FieldDesc::rationals());
  const Algebra& a = pb.algebra();
  VerdictSheet s{"verify-paper", "paper@" + field.name()};
  auto el = [&](const char* name) { return pb.element(name); };

  // 1. noncommutativity
  {
    CommutativityVerdict comm = is_commutative(a);
    Json ev = commutativity_json(a, comm);
    std::vector<MultiPoly> x = generic_element(pq.letters);
    std::vector<MultiPoly> ea;
    for (const auto& c : pq.element("Ea")) ea.push_back(MultiPoly::constant(c.rational().get_num()));
    std::vector<MultiPoly> xy = symbolic_multiply(pq.algebra(), x, ea);
    std::vector<MultiPoly> yx = symbolic_multiply(pq.algebra(), ea, x);
    Json commutator = Json::object();
    for (std::size_t k = 0; k < xy.size(); ++k) {
      MultiPoly d = xy[k] - yx[k];
      if (!d.is_zero()) commutator[pq.algebra().names()[k]] = d.to_string();
    }
    ev["commutator_A_Aprime"] = commutator;
    s.rows.push_back(make_row("1.noncommutative", "the algebra is not commutative (AA' != A'A for a' = a + 1)",
                              "not commutative", commutative_text(a, comm), !comm.commutative,
                              "AA' - A'A = [A, Ea] has the coordinates listed in the evidence", ev));
  }

  // 2. center, radical, maximal right ideals, quasi-invariance
  Subspace z = center(a);
  {
    Subspace expected = Subspace::span(field, 7, {el("U"), el("Ec"), el("Ed"), el("Ee"), el("Ef")});
    s.rows.push_back(make_row("2.center", "Z = the matrices with a = b = 0", span_text(a, expected),
                              span_text(a, z), z == expected, "", subspace_json(a, z)));
  }
  RadicalCertificate rc = jacobson_radical(a);
  {
    QuotientAlgebra q = quotient_algebra(a, rc.radical);
    Json ev = radical_json(a, rc);
    ev["quotient_is_field"] = q.algebra.dim() == 1;
    s.rows.push_back(make_row("2.radical", "Jacobson radical (no explicit claim)", kNA,
                              span_text(a, rc.radical) + ", nilpotency index " + std::to_string(rc.nilpotency_index) +
                                  ", quotient dimension " + std::to_string(q.algebra.dim()),
                              std::nullopt, "", ev));
  }
  if (finite) {
    std::vector<SidedIdeal> maxima = maximal_right_ideals(a);
    Json list = Json::array();
    for (const auto& m : maxima) list.push_back(sided_json(a, m));
    std::string computed = std::to_string(maxima.size()) + " maximal right ideal(s)";
    if (maxima.size() == 1 && maxima[0].subspace == rc.radical) computed += ": the radical";
    s.rows.push_back(make_row("2.maximal_right_ideals", "maximal right ideals (no explicit claim)", kNA, computed,
                              std::nullopt, "", Json{{"ideals", list}}));
    QuasiInvariantVerdict qr = is_quasi_invariant(a, Side::right);
    QuasiInvariantVerdict ql = is_quasi_invariant(a, Side::left);
    const bool both = qr.quasi_invariant && ql.quasi_invariant;
    s.rows.push_back(make_row("2.quasi_invariant",
                              "a semiperfect centrally essential ring is right quasi-invariant (and left, by symmetry)",
                              "quasi-invariant on both sides",
                              both ? "quasi-invariant on both sides"
                                   : std::string("right: ") + (qr.quasi_invariant ? "yes" : "no") +
                                         ", left: " + (ql.quasi_invariant ? "yes" : "no"),
                              both, "",
                              Json{{"right", quasi_invariant_json(a, qr)}, {"left", quasi_invariant_json(a, ql)}}));
  } else {
    s.rows.push_back(make_row("2.maximal_right_ideals", "maximal right ideals (no explicit claim)", kNA,
                              "n/a (needs a finite field)", std::nullopt));
    s.rows.push_back(make_row("2.quasi_invariant",
                              "a semiperfect centrally essential ring is right quasi-invariant (and left, by symmetry)",
                              "quasi-invariant on both sides", "n/a (needs a finite field)", std::nullopt));
  }

  // 3. central essentiality; 4. witnesses
  std::vector<WitnessBranch> branches_q = paper_piecewise_witness(pq);
  PiecewiseCertificate pc = piecewise_witness_check(pq.algebra(), branches_q, pq.letters);
  if (!pc.valid) throw Error(ErrorCode::CertificateFailure, "corrected piecewise witness does not validate");
  if (finite) {
    CEReport ce = checked_ce(a, threads);
    const bool ok = ce.verdict == CEVerdict::centrally_essential;
    s.rows.push_back(make_row("3.centrally_essential", "the algebra is centrally essential", "centrally_essential",
                              ce_text(ce), ok, "", ce_json(a, ce, false)));
  } else {
    CEOptions opt;
    opt.mode = CEMode::random;
    CEReport ce = check_centrally_essential(a, opt);
    if (auto err = validate_ce_report(a, ce)) throw Error(ErrorCode::CertificateFailure, *err);
    const bool refuted = ce.verdict == CEVerdict::not_centrally_essential;
    Json ev{{"random", ce_json(a, ce, false)}, {"symbolic", piecewise_json(pq.algebra(), pc)}};
    s.rows.push_back(make_row("3.centrally_essential", "the algebra is centrally essential", "centrally_essential",
                              refuted ? "not_centrally_essential" : "centrally_essential (symbolic certificate)",
                              !refuted, "piecewise witness proves it over every field; random falsification found nothing",
                              ev));
  }

  {
    std::vector<std::uint32_t> primes = finite ? std::vector<std::uint32_t>{field.modulus()}
                                               : std::vector<std::uint32_t>{2, 3, 5};
    WitnessCertificate wc = witness_certificate_check(pq.algebra(), pq.witness, pq.letters, primes);
    if (!wc.noncentral_vanishes)
      throw Error(ErrorCode::CertificateFailure, "linear witness leaves the center symbolically");
    std::string central;
    for (const auto& [name, f] : wc.central_part) {
      if (f.is_zero()) continue;
      if (!central.empty()) central += ", ";
      central += name + ": " + f.to_string();
    }
    std::vector<std::string> failing;
    for (const auto& v : wc.vanishing) {
      if (!v) continue;
      std::string pt;
      for (std::size_t k = 0; k < 3; ++k) pt += (k ? "," : "") + v->point[k].to_string();
      failing.push_back("F" + std::to_string(v->p) + " at (alpha,a,b) = (" + pt + ")");
    }
    std::string computed = "central part (" + central + ")";
    if (failing.empty())
      computed += "; valid";
    else {
      computed += "; fails over ";
      for (std::size_t i = 0; i < failing.size(); ++i) computed += (i ? "; " : "") + failing[i];
    }
    std::string summary = finite ? "" : "a^2 + b^2 has no non-trivial rational zero, so the witness works over Q "
                                        "but not over every field";
    s.rows.push_back(make_row("4.paper_witness",
                              "B in Z with d = a, e = b and other entries 0 gives 0 != AB in Z whenever a or b != 0",
                              "valid", computed, failing.empty(), summary, witness_certificate_json(wc)));

    Json ev{{"symbolic", piecewise_json(pq.algebra(), pc)}};
    std::string comp = "valid symbolically";
    if (finite) {
      PiecewiseRun run = run_piecewise_witness(a, paper_piecewise_witness(pb));
      if (run.failure)
        throw Error(ErrorCode::CertificateFailure, "piecewise witness fails at " + a.format(*run.failure));
      ev["noncentral_checked"] = run.checked;
      comp += " and on all " + std::to_string(run.checked) + " non-central elements";
    }
    s.rows.push_back(make_row("4.corrected_witness", "replacement witness: Ed if a != 0, otherwise Ee", kNA, comp,
                              std::nullopt, "", ev));
  }

  // 5. sidedness
  {
    SidedIdeal si = sidedness(a, pb.I), sj = sidedness(a, pb.J), sc = sidedness(a, pb.C);
    s.rows.push_back(make_row("5.sidedness_I", "I is a right ideal and not an ideal", "right ideal: yes; left ideal: no",
                              sidedness_text(a, si), si.is_right && !si.is_left, "", sided_json(a, si)));
    s.rows.push_back(make_row("5.sidedness_J", "J is a left ideal and not an ideal", "right ideal: no; left ideal: yes",
                              sidedness_text(a, sj), !sj.is_right && sj.is_left, "", sided_json(a, sj)));
    s.rows.push_back(make_row("5.sidedness_C", "C is an ideal", "right ideal: yes; left ideal: yes",
                              sidedness_text(a, sc), sc.two_sided(), "", sided_json(a, sc)));
  }

  if (!finite) {
    for (const char* id : {"6.complement_C_of_I", "6.complement_C_of_J", "6.complement_I_of_C",
                           "6.complement_J_of_C", "7.closed_I", "7.closed_J", "7.closed_C"})
      s.rows.push_back(make_row(id, "exhaustive lattice check", kNA, "n/a (needs a finite field)", std::nullopt));
    return s;
  }

  // 6. complements
  auto complement_row = [&](const char* id, const std::string& claim, const std::string& expected,
                            const Subspace& k, const Subspace& other, Side side, bool claimed) {
    ComplementVerdict v = intersection_complement_check(a, k, other, side);
    check_complement(a, k, other, v, side);
    std::string computed = v.is_complement ? "complement" : "not a complement";
    std::string summary;
    if (v.common_element) summary = "meets at " + a.format(*v.common_element);
    if (v.extender)
      summary = "(" + a.format(*v.extender) + ") extends it to " + span_text(a, *v.extension) + ", still meeting trivially";
    Json ev = complement_json(a, v);
    ev["side"] = side_name(side);
    s.rows.push_back(make_row(id, claim, expected, computed,
                              claimed ? std::optional<bool>(v.is_complement) : std::nullopt, summary, ev));
  };
  complement_row("6.complement_C_of_I", "C is a ∩-complement of I (right ideals)", "complement", pb.C, pb.I,
                 Side::right, true);
  complement_row("6.complement_C_of_J", "C is a ∩-complement of J (left ideals)", "complement", pb.C, pb.J,
                 Side::left, true);
  complement_row("6.complement_I_of_C", "reverse reading: I is a ∩-complement of C (right ideals)", kNA, pb.I, pb.C,
                 Side::right, false);
  complement_row("6.complement_J_of_C", "reverse reading: J is a ∩-complement of C (left ideals)", kNA, pb.J, pb.C,
                 Side::left, false);

  // 7. closedness
  auto closed_row = [&](const char* id, const std::string& claim, const std::string& expected,
                        const Subspace& ideal, Side side, const char* hand_extender, bool claimed) {
    ClosedVerdict v = is_closed(a, ideal, side);
    if (v.evidence) check_essential_certificates(a, ideal, *v.evidence, side);
    Json ev = closed_json(a, v);
    ev["side"] = side_name(side);
    std::string summary;
    if (!v.closed)
      summary = "essential in " + span_text(a, *v.extension) + " (extender " + a.format(*v.extender) + ")";
    if (hand_extender) {
      Subspace y = subspace_sum(ideal, principal_ideal(a, el(hand_extender), side));
      EssentialVerdict e = is_essential(a, ideal, y, side, true);
      if (e.essential) check_essential_certificates(a, ideal, e, side);
      ev["hand_extension"] = {{"extender", hand_extender},
                              {"extension", subspace_json(a, y)},
                              {"essential", essential_json(a, e)}};
      summary += std::string(summary.empty() ? "" : "; ") + "also essential in " + span_text(a, y) + ": " +
                 (e.essential ? "yes" : "no");
    }
    s.rows.push_back(make_row(id, claim, expected, v.closed ? "closed" : "not closed",
                              claimed ? std::optional<bool>(v.closed) : std::nullopt, summary, ev));
  };
  closed_row("7.closed_I", "I is a closed right ideal", "closed", pb.I, Side::right, "Ee", true);
  closed_row("7.closed_J", "J is a closed left ideal", "closed", pb.J, Side::left, "Ed", true);
  closed_row("7.closed_C", "C is closed as a right ideal (a ∩-complement is closed)", kNA, pb.C, Side::right, nullptr,
             false);
  return s;
}

// ---------------------------------------------------------------------------

namespace {

void evaluate_sample(OQ15Sample& s, const Algebra& a, std::uint64_t size_limit) {
  s.dim = a.dim();
  std::uint64_t size = 1;
  for (std::size_t i = 0; i < a.dim() && size <= size_limit; ++i) size *= s.p;
  if (size > size_limit) {
    s.skipped = true;
    return;
  }
  CEOptions opt;
  opt.keep_witnesses = false;
  CEReport ce = check_centrally_essential(a, opt);
  if (auto err = validate_ce_report(a, ce)) throw Error(ErrorCode::CertificateFailure, *err);
  s.centrally_essential = ce.verdict == CEVerdict::centrally_essential;
  if (!s.centrally_essential) return;

  Subspace j = radical_subspace(a);
  s.quotient_commutative = is_commutative(quotient_algebra(a, j).algebra).commutative;
  std::vector<SidedIdeal> mins = minimal_right_ideals(a);
  s.minimal_count = mins.size();
  s.all_minimal_two_sided = true;
  s.all_minimal_central = true;
  Subspace soc = Subspace::zero(a.field(), a.dim());
  for (const auto& m : mins) {
    soc = subspace_sum(soc, m.subspace);
    if (!ce.center.contains(m.subspace)) s.all_minimal_central = false;
    if (!m.two_sided()) {
      s.all_minimal_two_sided = false;
      if (!s.counterexample) s.counterexample = m.subspace.basis_vectors();
    }
  }
  s.socle_in_center = ce.center.contains(soc);
}

}  // namespace

OQ15Findings search_oq15(const OQ15Config& config) {
  if (config.dims.empty() || config.primes.empty())
    throw Error(ErrorCode::BadShape, "search needs at least one matrix size and one prime");
  for (auto k : config.dims)
    if (k == 0) throw Error(ErrorCode::BadShape, "matrix size must be positive");
  for (auto p : config.primes) FieldDesc::prime(p);

  static const MatrixProfile profiles[] = {MatrixProfile::dense, MatrixProfile::upper_triangular,
                                           MatrixProfile::strictly_upper};
  OQ15Findings f;
  f.config = config;
  std::mt19937_64 master(config.seed);
  if (config.inject_paper) {
    OQ15Sample s;
    s.source = "paper@F2";
    s.matrix_size = 7;
    s.p = 2;
    f.samples.push_back(s);
  }
  for (std::uint64_t i = 0; i < config.samples; ++i) {
    OQ15Sample s;
    s.source = "random";
    s.matrix_size = config.dims[master() % config.dims.size()];
    s.p = config.primes[master() % config.primes.size()];
    s.generator_count = 1 + master() % 2;
    s.profile = profiles[master() % 3];
    s.sample_seed = master();
    f.samples.push_back(s);
  }
  for (std::size_t i = 0; i < f.samples.size(); ++i) f.samples[i].index = i;

  parallel_chunks(0, f.samples.size(), config.threads, [&](unsigned, std::uint64_t first, std::uint64_t last) {
    for (std::uint64_t i = first; i < last; ++i) {
      OQ15Sample& s = f.samples[i];
      if (s.source == "paper@F2") {
        evaluate_sample(s, paper_algebra(FieldDesc::prime(2)).algebra(), config.size_limit);
        continue;
      }
      RandomSubalgebra r =
          random_subalgebra(s.matrix_size, FieldDesc::prime(s.p), s.generator_count, s.sample_seed, s.profile);
      evaluate_sample(s, r.algebra.algebra, config.size_limit);
    }
  });

  for (const auto& s : f.samples) {
    ++f.sampled;
    if (s.skipped) {
      ++f.skipped;
      continue;
    }
    if (!s.centrally_essential) continue;
    ++f.centrally_essential;
    if (s.all_minimal_central) ++f.ce_all_minimal_central;
    if (s.socle_in_center) ++f.ce_socle_in_center;
    if (s.counterexample) ++f.counterexamples;
  }
  return f;
}

}  // namespace ringlab
