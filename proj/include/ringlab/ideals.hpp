#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ringlab/algebra.hpp"

namespace ringlab {

/// A subspace together with its sidedness verdicts. A false flag always
/// comes with the first escaping product as a witness.
struct SidedIdeal {
  Subspace subspace;
  bool is_right;
  bool is_left;
  std::optional<MultiplicationEscape> right_violation;
  std::optional<MultiplicationEscape> left_violation;

  bool two_sided() const { return is_right && is_left; }
};

enum class Closure { right, left, two_sided };

SidedIdeal sidedness(const Algebra& a, const Subspace& s);

/// Smallest subspace containing `generators` and closed under the requested
/// multiplications by basis elements.
SidedIdeal ideal_closure(const Algebra& a, const std::vector<Element>& generators, Closure closure);

/// uA for Side::right, Au for Side::left.
Subspace principal_ideal(const Algebra& a, const Element& u, Side side);

/// span{x y : x in u, y in v}.
Subspace product_space(const Algebra& a, const Subspace& u, const Subspace& v);

// ---------------------------------------------------------------------------
// Jacobson radical

enum class RadicalMethod { automatic, trace_form, element_filter };

struct RadicalCertificate {
  Subspace radical;
  std::size_t nilpotency_index;         ///< least k with radical^k = 0
  std::vector<std::size_t> power_dims;  ///< dim of radical^1, radical^2, ..., ending in 0
  std::string method;
  bool quotient_semisimple;
};

/// Kernel of the form (x, y) -> trace(L_x L_y). Always contains J(A); equals
/// it in characteristic 0 or p > dim A.
Subspace trace_form_radical(const Algebra& a);

/// x lies in J(A) iff xA is a nilpotent right ideal (equivalently 1 - xa is
/// invertible for every a).
bool generates_nilpotent_right_ideal(const Algebra& a, const Element& x);

/// Collects {x in candidates : x in J(A)} by testing elements one coset at a
/// time. `candidates` must contain J(A).
Subspace element_filter_radical(const Algebra& a, const Subspace& candidates);

/// Radical without certificate checks.
Subspace radical_subspace(const Algebra& a, RadicalMethod method = RadicalMethod::automatic);

/// Radical plus validated certificate; RadicalUncertified if any check fails.
RadicalCertificate jacobson_radical(const Algebra& a, RadicalMethod method = RadicalMethod::automatic);

bool is_nilpotent_subspace(const Algebra& a, const Subspace& s);

// ---------------------------------------------------------------------------
// Ideal lattices over finite fields

/// Maximal one-sided ideals, computed in A/J(A) from principal ideals and
/// pulled back. Sorted by canonical basis.
std::vector<SidedIdeal> maximal_ideals(const Algebra& a, Side side);
inline std::vector<SidedIdeal> maximal_right_ideals(const Algebra& a) { return maximal_ideals(a, Side::right); }

/// Minimal one-sided ideals: the minimal members of {uA : u != 0}.
std::vector<SidedIdeal> minimal_ideals(const Algebra& a, Side side, unsigned threads = 1);
inline std::vector<SidedIdeal> minimal_right_ideals(const Algebra& a, unsigned threads = 1) {
  return minimal_ideals(a, Side::right, threads);
}

Subspace socle(const Algebra& a, Side side, unsigned threads = 1);

/// m * a lands in the smaller module and is non-zero.
struct EssentialCertificate {
  Element element;
  Element multiplier;
  Element product;
};

struct EssentialVerdict {
  bool essential;
  std::uint64_t checked = 0;
  /// On a negative verdict: m whose cyclic submodule meets the inner module trivially.
  std::optional<Element> witness;
  /// On a positive verdict, when requested: one certificate per non-zero m.
  std::vector<EssentialCertificate> certificates;
};

/// Is `inner` essential in `outer` as one-sided modules? Both must be
/// one-sided ideals on `side` with inner contained in outer.
EssentialVerdict is_essential(const Algebra& a, const Subspace& inner, const Subspace& outer,
                              Side side = Side::right, bool collect_certificates = false);

struct ClosedVerdict {
  bool closed;
  std::uint64_t representatives_checked = 0;
  std::uint64_t extensions_checked = 0;
  std::optional<Element> extender;
  std::optional<Subspace> extension;
  std::optional<EssentialVerdict> evidence;
};

/// Closed iff the ideal is essential in no I + uA with u outside I.
ClosedVerdict is_closed(const Algebra& a, const Subspace& ideal, Side side = Side::right);

struct ComplementVerdict {
  bool is_complement;
  bool meets_trivially;
  std::uint64_t representatives_checked = 0;
  std::optional<Element> common_element;
  std::optional<Element> extender;
  std::optional<Subspace> extension;
  /// For each distinct extension K + uA: (u, a non-zero element of (K + uA) ∩ X).
  std::vector<std::pair<Element, Element>> maximality_witnesses;
};

/// Is `candidate` maximal among one-sided ideals meeting `other` trivially?
ComplementVerdict intersection_complement_check(const Algebra& a, const Subspace& candidate,
                                                const Subspace& other, Side side = Side::right);

struct QuasiInvariantVerdict {
  bool quasi_invariant;
  std::size_t maximal_count;
  std::optional<SidedIdeal> witness;
};

/// Every maximal one-sided ideal on `side` is two-sided.
QuasiInvariantVerdict is_quasi_invariant(const Algebra& a, Side side = Side::right);

}  // namespace ringlab
