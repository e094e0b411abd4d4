#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ringlab/algebra.hpp"

namespace ringlab {

/// Z(A) as the joint kernel of x -> x b_i - b_i x.
Subspace center(const Algebra& a);
bool is_central(const Algebra& a, const Element& u);

enum class CEVerdict { centrally_essential, not_centrally_essential, inconclusive_random };
enum class CEMode { exhaustive, random };

const char* verdict_name(CEVerdict v);

/// For a non-central element a: central x != 0 with a x = y central and non-zero.
struct CEWitness {
  std::uint64_t index;  ///< enumeration index of a (random mode: trial number)
  Element element;
  Element multiplier;
  Element product;
};

struct CEReport {
  CEVerdict verdict;
  CEMode mode;
  Subspace center;
  std::uint64_t nonzero_checked = 0;   ///< non-zero elements visited
  std::uint64_t noncentral_checked = 0;
  std::vector<CEWitness> witnesses;    ///< kept only for a positive verdict
  std::optional<Element> counterexample;
  std::optional<std::uint64_t> counterexample_index;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
};

struct CEOptions {
  CEMode mode = CEMode::exhaustive;
  std::uint64_t trials = 1000;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  bool keep_witnesses = true;
};

/// Exhaustive mode sweeps every element of a finite algebra; random mode
/// samples elements with coordinates in {-2..2} and can only refute.
CEReport check_centrally_essential(const Algebra& a, const CEOptions& options = {});

/// a Z ∩ Z for the given element.
Subspace central_image_intersection(const Algebra& a, const Subspace& z, const Element& element);

/// Re-checks every witness and the counterexample; returns a description of
/// the first failure, or nullopt if the report is sound.
std::optional<std::string> validate_ce_report(const Algebra& a, const CEReport& report);

}  // namespace ringlab
