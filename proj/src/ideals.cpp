#include "ringlab/ideals.hpp"

#include <algorithm>
#include <set>

#include "ringlab/parallel.hpp"

namespace ringlab {

namespace {

void require_finite(const Algebra& a, const char* what) {
  if (!a.field().is_finite()) throw Error(ErrorCode::InfiniteField, std::string(what) + " needs a finite field");
}

void require_ambient(const Algebra& a, const Subspace& s) {
  if (s.ambient_dim() != a.dim() || s.field() != a.field())
    throw Error(ErrorCode::AmbientMismatch, "subspace does not live in the algebra's coordinate space");
}

void require_ideal(const Algebra& a, const Subspace& s, Side side, const char* label) {
  require_ambient(a, s);
  if (auto esc = find_escape(a, s, side)) {
    throw Error(ErrorCode::NotAnIdeal, std::string(label) + " is not a " + side_name(side) + " ideal: " +
                                           a.format(esc->generator) + " times " + a.names()[esc->multiplier] +
                                           " leaves it");
  }
}

std::vector<Element> matrix_columns(const Matrix& m) {
  std::vector<Element> out;
  for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(m.column(j));
  return out;
}

// Vectors supported on `coords` in base-p order, skipping 0.
class SupportSweep {
 public:
  SupportSweep(const FieldDesc& field, std::size_t dim, std::vector<std::size_t> coords)
      : coords_(std::move(coords)), digits_(zero_vector(field, coords_.size())), vec_(zero_vector(field, dim)) {}

  bool next() {
    if (!increment_coordinates(digits_)) return false;
    for (std::size_t i = 0; i < coords_.size(); ++i) vec_[coords_[i]] = digits_[i];
    return true;
  }
  const Vector& current() const { return vec_; }

 private:
  std::vector<std::size_t> coords_;
  Vector digits_;
  Vector vec_;
};

// Elements of a subspace in base-p order of basis coordinates, skipping 0.
class SubspaceSweep {
 public:
  explicit SubspaceSweep(const Subspace& s) : s_(s), digits_(zero_vector(s.field(), s.dim())) {}
  bool next() {
    if (!increment_coordinates(digits_)) return false;
    vec_ = s_.combine(digits_);
    return true;
  }
  const Vector& current() const { return vec_; }

 private:
  const Subspace& s_;
  Vector digits_;
  Vector vec_;
};

}  // namespace

SidedIdeal sidedness(const Algebra& a, const Subspace& s) {
  require_ambient(a, s);
  SidedIdeal out{s, true, true, std::nullopt, std::nullopt};
  out.right_violation = find_escape(a, s, Side::right);
  out.left_violation = find_escape(a, s, Side::left);
  out.is_right = !out.right_violation.has_value();
  out.is_left = !out.left_violation.has_value();
  return out;
}

SidedIdeal ideal_closure(const Algebra& a, const std::vector<Element>& generators, Closure closure) {
  for (const auto& g : generators)
    if (g.size() != a.dim()) throw Error(ErrorCode::DimensionMismatch, "generator does not belong to the algebra");
  Subspace s = Subspace::span(a.field(), a.dim(), generators);
  const bool right = closure != Closure::left;
  const bool left = closure != Closure::right;
  for (;;) {
    std::vector<Element> grown = s.basis_vectors();
    const std::size_t before = grown.size();
    for (std::size_t r = 0; r < s.dim(); ++r) {
      Element g = s.basis_vector(r);
      for (std::size_t j = 0; j < a.dim(); ++j) {
        Element b = a.basis(j);
        if (right) {
          Element p = a.multiply(g, b);
          if (!s.contains(p)) grown.push_back(std::move(p));
        }
        if (left) {
          Element p = a.multiply(b, g);
          if (!s.contains(p)) grown.push_back(std::move(p));
        }
      }
    }
    if (grown.size() == before) break;
    s = Subspace::span(a.field(), a.dim(), grown);
  }
  return sidedness(a, s);
}

Subspace principal_ideal(const Algebra& a, const Element& u, Side side) {
  return Subspace::column_space(side == Side::right ? a.left_multiplication(u) : a.right_multiplication(u));
}

Subspace product_space(const Algebra& a, const Subspace& u, const Subspace& v) {
  std::vector<Element> products;
  for (std::size_t i = 0; i < u.dim(); ++i) {
    Element x = u.basis_vector(i);
    for (std::size_t j = 0; j < v.dim(); ++j) products.push_back(a.multiply(x, v.basis_vector(j)));
  }
  return Subspace::span(a.field(), a.dim(), products);
}

bool is_nilpotent_subspace(const Algebra& a, const Subspace& s) {
  Subspace power = s;
  while (!power.is_zero()) {
    Subspace next = product_space(a, power, s);
    if (next.dim() == power.dim()) return false;
    power = std::move(next);
  }
  return true;
}

// ---------------------------------------------------------------------------

Subspace trace_form_radical(const Algebra& a) {
  const std::size_t n = a.dim();
  std::vector<Matrix> l;
  l.reserve(n);
  for (std::size_t i = 0; i < n; ++i) l.push_back(a.left_multiplication(a.basis(i)));
  Matrix gram(a.field(), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Scalar t = a.field().zero();
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
          if (l[i](r, c).is_zero() || l[j](c, r).is_zero()) continue;
          t += l[i](r, c) * l[j](c, r);
        }
      gram(i, j) = t;
      gram(j, i) = t;
    }
  }
  return kernel(gram);
}

bool generates_nilpotent_right_ideal(const Algebra& a, const Element& x) {
  return is_nilpotent_subspace(a, principal_ideal(a, x, Side::right));
}

Subspace element_filter_radical(const Algebra& a, const Subspace& candidates) {
  require_finite(a, "element filtering");
  require_ambient(a, candidates);
  Subspace found = Subspace::zero(a.field(), a.dim());
  bool restart = true;
  while (restart) {
    restart = false;
    // Complement of `found` inside `candidates`: one member per coset.
    std::vector<Element> complement;
    Subspace covered = found;
    for (std::size_t i = 0; i < candidates.dim(); ++i) {
      Element v = candidates.basis_vector(i);
      if (covered.contains(v)) continue;
      complement.push_back(v);
      covered = subspace_sum(covered, Subspace::span(a.field(), a.dim(), {v}));
    }
    if (complement.empty()) break;
    Vector t = zero_vector(a.field(), complement.size());
    while (increment_coordinates(t)) {
      Element x = a.zero();
      for (std::size_t i = 0; i < t.size(); ++i)
        if (!t[i].is_zero()) axpy(x, t[i], complement[i]);
      if (!generates_nilpotent_right_ideal(a, x)) continue;
      std::vector<Element> gens = found.basis_vectors();
      gens.push_back(x);
      found = ideal_closure(a, gens, Closure::two_sided).subspace;
      restart = true;
      break;
    }
  }
  return found;
}

Subspace radical_subspace(const Algebra& a, RadicalMethod method) {
  const std::uint32_t p = a.field().characteristic();
  const bool trace_exact = p == 0 || p > a.dim();
  switch (method) {
    case RadicalMethod::trace_form: return trace_form_radical(a);
    case RadicalMethod::element_filter: return element_filter_radical(a, Subspace::full(a.field(), a.dim()));
    case RadicalMethod::automatic: break;
  }
  Subspace candidate = trace_form_radical(a);
  if (trace_exact || is_nilpotent_subspace(a, candidate)) return candidate;
  return element_filter_radical(a, candidate);
}

RadicalCertificate jacobson_radical(const Algebra& a, RadicalMethod method) {
  Subspace j = radical_subspace(a, method);
  std::string label;
  switch (method) {
    case RadicalMethod::trace_form: label = "trace_form"; break;
    case RadicalMethod::element_filter: label = "element_filter"; break;
    case RadicalMethod::automatic: {
      const std::uint32_t p = a.field().characteristic();
      label = (p == 0 || p > a.dim()) ? "trace_form" : "trace_form+element_filter";
      break;
    }
  }
  if (find_escape(a, j, Side::right) || find_escape(a, j, Side::left))
    throw Error(ErrorCode::RadicalUncertified, "radical candidate is not a two-sided ideal");
  RadicalCertificate cert{j, 0, {}, label, false};
  Subspace power = j;
  for (std::size_t k = 1;; ++k) {
    cert.power_dims.push_back(power.dim());
    if (power.is_zero()) {
      cert.nilpotency_index = k;
      break;
    }
    if (k > a.dim()) throw Error(ErrorCode::RadicalUncertified, "radical candidate is not nilpotent");
    power = product_space(a, power, j);
  }
  QuotientAlgebra q = quotient_algebra(a, j);
  Subspace rq = radical_subspace(q.algebra, a.field().is_finite() ? RadicalMethod::automatic : RadicalMethod::trace_form);
  if (!rq.is_zero()) throw Error(ErrorCode::RadicalUncertified, "quotient by the radical is not semisimple");
  cert.quotient_semisimple = true;
  return cert;
}

// ---------------------------------------------------------------------------

std::vector<SidedIdeal> maximal_ideals(const Algebra& a, Side side) {
  require_finite(a, "maximal ideal enumeration");
  Subspace j = radical_subspace(a);
  QuotientAlgebra q = quotient_algebra(a, j);
  const Algebra& s = q.algebra;
  std::set<Subspace> principals;
  for (auto it = enumerate_elements(s).begin(), end = enumerate_elements(s).end(); it != end; ++it) {
    Subspace p = principal_ideal(s, *it, side);
    if (!p.is_full()) principals.insert(std::move(p));
  }
  std::vector<Subspace> sorted(principals.begin(), principals.end());
  std::vector<SidedIdeal> out;
  for (const auto& p : sorted) {
    bool maximal = true;
    for (const auto& other : sorted)
      if (other.dim() > p.dim() && other.contains(p)) {
        maximal = false;
        break;
      }
    if (!maximal) continue;
    std::vector<Element> gens = j.basis_vectors();
    for (std::size_t r = 0; r < p.dim(); ++r) gens.push_back(q.lift(p.basis_vector(r)));
    out.push_back(sidedness(a, Subspace::span(a.field(), a.dim(), gens)));
  }
  std::sort(out.begin(), out.end(),
            [](const SidedIdeal& x, const SidedIdeal& y) { return x.subspace < y.subspace; });
  return out;
}

std::vector<SidedIdeal> minimal_ideals(const Algebra& a, Side side, unsigned threads) {
  require_finite(a, "minimal ideal enumeration");
  const std::uint64_t total = element_count(a);
  std::vector<std::uint8_t> dims(total, 0);
  parallel_chunks(1, total, threads, [&](unsigned, std::uint64_t first, std::uint64_t last) {
    ElementRange range(a.field(), a.dim(), first, last);
    for (auto it = range.begin(); it != range.end(); ++it)
      dims[it.index()] = static_cast<std::uint8_t>(principal_ideal(a, *it, side).dim());
  });

  std::vector<bool> visited(total, false);
  std::set<Subspace> found;
  for (auto it = enumerate_elements(a).begin(), end = enumerate_elements(a).end(); it != end; ++it) {
    if (it.index() == 0 || visited[it.index()]) continue;
    Subspace p = principal_ideal(a, *it, side);
    bool minimal = true;
    SubspaceSweep sweep(p);
    while (sweep.next()) {
      if (dims[coordinate_index(sweep.current())] != p.dim()) {
        minimal = false;
        break;
      }
    }
    if (!minimal) continue;
    SubspaceSweep mark(p);
    while (mark.next()) visited[coordinate_index(mark.current())] = true;
    found.insert(std::move(p));
  }
  std::vector<SidedIdeal> out;
  for (const auto& p : found) out.push_back(sidedness(a, p));
  return out;
}

Subspace socle(const Algebra& a, Side side, unsigned threads) {
  Subspace s = Subspace::zero(a.field(), a.dim());
  for (const auto& m : minimal_ideals(a, side, threads)) s = subspace_sum(s, m.subspace);
  return s;
}

// ---------------------------------------------------------------------------

EssentialVerdict is_essential(const Algebra& a, const Subspace& inner, const Subspace& outer, Side side,
                              bool collect_certificates) {
  require_finite(a, "essentiality check");
  require_ideal(a, inner, side, "inner module");
  require_ideal(a, outer, side, "outer module");
  if (!outer.contains(inner)) throw Error(ErrorCode::NotNested, "inner module is not contained in the outer module");

  EssentialVerdict v{true};
  SubspaceSweep sweep(outer);
  while (sweep.next()) {
    const Element& m = sweep.current();
    ++v.checked;
    Matrix mult = side == Side::right ? a.left_multiplication(m) : a.right_multiplication(m);
    Subspace cyclic = Subspace::column_space(mult);
    if (subspace_intersect(cyclic, inner).is_zero()) {
      v.essential = false;
      v.witness = m;
      v.certificates.clear();
      return v;
    }
    if (!collect_certificates) continue;
    // Multipliers sending m into `inner`: kernel of a -> reduce(m a).
    Matrix reduced(a.field(), a.dim(), a.dim());
    std::vector<Element> images = matrix_columns(mult);
    for (std::size_t j = 0; j < a.dim(); ++j) reduced.set_column(j, inner.reduce(images[j]));
    Subspace into = kernel(reduced);
    bool done = false;
    for (std::size_t r = 0; r < into.dim() && !done; ++r) {
      Element x = into.basis_vector(r);
      Element prod = mult.apply(x);
      if (is_zero_vector(prod)) continue;
      v.certificates.push_back(EssentialCertificate{m, std::move(x), std::move(prod)});
      done = true;
    }
    if (!done) throw Error(ErrorCode::CertificateFailure, "no multiplier found for " + a.format(m));
  }
  return v;
}

ClosedVerdict is_closed(const Algebra& a, const Subspace& ideal, Side side) {
  require_finite(a, "closedness check");
  require_ideal(a, ideal, side, "subspace");
  ClosedVerdict v{true};
  std::set<Subspace> seen;
  SupportSweep reps(a.field(), a.dim(), ideal.free_coordinates());
  while (reps.next()) {
    ++v.representatives_checked;
    const Element& u = reps.current();
    Subspace y = subspace_sum(ideal, principal_ideal(a, u, side));
    if (!seen.insert(y).second) continue;
    ++v.extensions_checked;
    EssentialVerdict e = is_essential(a, ideal, y, side, false);
    if (!e.essential) continue;
    v.closed = false;
    v.extender = u;
    v.extension = y;
    v.evidence = is_essential(a, ideal, y, side, true);
    return v;
  }
  return v;
}

ComplementVerdict intersection_complement_check(const Algebra& a, const Subspace& candidate, const Subspace& other,
                                                Side side) {
  require_finite(a, "complement check");
  require_ideal(a, candidate, side, "candidate");
  require_ideal(a, other, side, "other ideal");
  ComplementVerdict v{false, false};
  Subspace meet = subspace_intersect(candidate, other);
  if (!meet.is_zero()) {
    v.common_element = meet.basis_vector(0);
    return v;
  }
  v.meets_trivially = true;
  std::set<Subspace> seen;
  SupportSweep reps(a.field(), a.dim(), candidate.free_coordinates());
  while (reps.next()) {
    ++v.representatives_checked;
    const Element& u = reps.current();
    Subspace y = subspace_sum(candidate, principal_ideal(a, u, side));
    if (!seen.insert(y).second) continue;
    Subspace hit = subspace_intersect(y, other);
    if (hit.is_zero()) {
      v.extender = u;
      v.extension = y;
      v.maximality_witnesses.clear();
      return v;
    }
    v.maximality_witnesses.emplace_back(u, hit.basis_vector(0));
  }
  v.is_complement = true;
  return v;
}

QuasiInvariantVerdict is_quasi_invariant(const Algebra& a, Side side) {
  std::vector<SidedIdeal> maxima = maximal_ideals(a, side);
  QuasiInvariantVerdict v{true, maxima.size(), std::nullopt};
  for (auto& m : maxima) {
    if (m.two_sided()) continue;
    v.quasi_invariant = false;
    v.witness = std::move(m);
    break;
  }
  return v;
}

}  // namespace ringlab
