#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ringlab/algebra.hpp"
#include "ringlab/catalog.hpp"
#include "ringlab/symbolic.hpp"

namespace ringlab {

using Json = nlohmann::ordered_json;

/// One checked claim. `expected` is the claimed verdict (or
/// "n/a" when nothing is claimed); agrees_with_paper is empty in that case.
struct VerdictRow {
  std::string id;
  std::string claim;
  std::string expected;
  std::string computed;
  std::optional<bool> agrees_with_paper;
  std::string summary;
  Json evidence = Json::object();
};

enum class Implication { holds, vacuous, fails, not_applicable };
const char* implication_name(Implication i);

struct VerdictSheet {
  std::string name;
  std::string subject;
  std::vector<VerdictRow> rows;
  Implication implication = Implication::not_applicable;

  const VerdictRow& row(const std::string& id) const;
  bool has_row(const std::string& id) const;
  /// No row disagrees (rows without a claim are ignored).
  bool all_agree() const;
};

/// A/J(A) centrally essential  =>  A/J(A) commutative and A quasi-invariant on both sides.
VerdictSheet remark11_check(const Algebra& a, const std::string& subject = "", unsigned threads = 1);

/// A centrally essential and A/J(A) commutative  =>  every minimal right ideal
/// is central and two-sided, and the right socle is central.
VerdictSheet remark13_check(const Algebra& a, const std::string& subject = "", unsigned threads = 1);

/// M R + x R for a maximal right ideal `m` of `a` (NotMaximal otherwise)
/// in R = A[x]/(x^degree): maximality, sidedness and the constant-term map.
VerdictSheet lemma21_truncated_check(const Algebra& a, const Subspace& m, std::size_t degree,
                                     const std::string& subject = "");

/// CE(A) => CE(A[x]/(x^degree)), exhaustively; TooLarge above 2^24 elements.
VerdictSheet lemma22_truncated_check(const Algebra& a, std::size_t degree, const std::string& subject = "",
                                     unsigned threads = 1);

/// Every claim about the 7x7 example over F_p (exhaustive) or Q (symbolic).
VerdictSheet verify_paper_example(FieldDesc field, unsigned threads = 1);

/// Corrected witness for the 7x7 example: Ed when a != 0, otherwise Ee.
std::vector<WitnessBranch> paper_piecewise_witness(const PaperBundle& bundle);

// ---------------------------------------------------------------------------

struct OQ15Config {
  std::vector<std::size_t> dims = {2, 3, 4};
  std::vector<std::uint32_t> primes = {2, 3};
  std::uint64_t samples = 500;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  /// Prepend the 7x7 example over F_2 as sample 0.
  bool inject_paper = false;
  std::uint64_t size_limit = std::uint64_t{1} << 20;
};

struct OQ15Sample {
  std::uint64_t index = 0;
  std::string source;  ///< "random" or "paper@F2"
  std::size_t matrix_size = 0;
  std::uint32_t p = 0;
  std::size_t generator_count = 0;
  MatrixProfile profile = MatrixProfile::dense;
  std::uint64_t sample_seed = 0;
  std::size_t dim = 0;
  bool skipped = false;
  bool centrally_essential = false;
  bool quotient_commutative = false;
  std::size_t minimal_count = 0;
  bool all_minimal_two_sided = false;
  bool all_minimal_central = false;
  bool socle_in_center = false;
  /// A minimal right ideal of a CE sample that is not two-sided.
  std::optional<std::vector<Element>> counterexample;
};

struct OQ15Findings {
  OQ15Config config;
  std::vector<OQ15Sample> samples;
  std::uint64_t sampled = 0;
  std::uint64_t skipped = 0;
  std::uint64_t centrally_essential = 0;
  std::uint64_t ce_all_minimal_central = 0;
  std::uint64_t ce_socle_in_center = 0;
  std::uint64_t counterexamples = 0;
};

/// Deterministic for a fixed config; `threads` only affects speed.
OQ15Findings search_oq15(const OQ15Config& config);

}  // namespace ringlab
