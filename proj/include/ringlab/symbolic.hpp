#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ringlab/algebra.hpp"
#include "ringlab/poly.hpp"

namespace ringlab {

/// Structure constants as integers. Over Q they must be integral
/// (NonIntegralConstants otherwise); over F_p residues are lifted to [0, p).
std::vector<mpz_class> integral_constants(const Algebra& a);

/// Generic element sum_i v_i b_i with one variable per coordinate.
std::vector<MultiPoly> generic_element(const std::vector<std::string>& variables);

/// Variables "<prefix>_<label>" for each label (labels default to basis names).
std::vector<std::string> prefixed_variables(const Algebra& a, const std::string& prefix,
                                            const std::vector<std::string>& labels = {});

/// Coordinates of (sum u_i b_i)(sum v_j b_j): sum_{i,j} c[i][j][k] u_i v_j.
std::vector<MultiPoly> generic_product(const Algebra& a, const std::string& u_prefix, const std::string& v_prefix,
                                       const std::vector<std::string>& labels = {});

/// Product of two coordinate vectors of polynomials.
std::vector<MultiPoly> symbolic_multiply(const Algebra& a, const std::vector<MultiPoly>& u,
                                         const std::vector<MultiPoly>& v);

struct VanishingPoint {
  std::uint32_t p;
  Element point;           ///< over F_p, in enumeration order the first failing element
  std::uint64_t failures;  ///< number of non-central elements where the witness fails
  std::uint64_t checked;   ///< non-central elements examined
};

/// Symbolic analysis of the linear witness x -> W x.
struct WitnessCertificate {
  std::vector<std::string> variables;
  std::vector<MultiPoly> product;                               ///< coordinates of x * W(x)
  std::vector<MultiPoly> residual;                              ///< part outside the center
  bool noncentral_vanishes;                                     ///< residual identically zero
  std::vector<std::pair<std::string, MultiPoly>> central_part;  ///< per center basis vector, named by its pivot
  /// For each prime examined: the first non-central point where x * W(x) = 0 or is not central.
  std::vector<std::optional<VanishingPoint>> vanishing;
  std::vector<std::uint32_t> primes;
};

/// `a` must have integral constants; `w` is an n x n integer matrix whose
/// columns lie in the center (WitnessNotCentral otherwise).
WitnessCertificate witness_certificate_check(const Algebra& a, const Matrix& w,
                                             const std::vector<std::string>& variables,
                                             const std::vector<std::uint32_t>& primes = {2, 3, 5});

/// Piecewise witness: branch k applies when coordinate k is the first of the
/// branch coordinates that is non-zero; it multiplies by the fixed central element.
struct WitnessBranch {
  std::size_t coordinate;
  Element multiplier;
};

struct BranchCertificate {
  std::size_t coordinate;
  std::vector<MultiPoly> product;
  bool central;                       ///< residual identically zero
  std::optional<std::string> nonzero_by;  ///< central coordinate equal to +-x_k
};

struct PiecewiseCertificate {
  std::vector<BranchCertificate> branches;
  bool covers_noncentral;  ///< every coordinate outside the branches is a central basis vector
  bool valid;
};

PiecewiseCertificate piecewise_witness_check(const Algebra& a, const std::vector<WitnessBranch>& branches,
                                             const std::vector<std::string>& variables);

struct PiecewiseRun {
  std::uint64_t checked = 0;
  std::optional<Element> failure;
};

/// Exhaustive evaluation of a piecewise witness over a finite-field algebra.
PiecewiseRun run_piecewise_witness(const Algebra& a, const std::vector<WitnessBranch>& branches);

}  // namespace ringlab
