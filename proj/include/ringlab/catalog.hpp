#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ringlab/algebra.hpp"

namespace ringlab {

/// The 7x7 algebra with coordinates (alpha, a, b, c, d, e, f), basis named
/// U, Ea, Eb, Ec, Ed, Ee, Ef, and its three distinguished one-sided ideals.
struct PaperBundle {
  MatrixAlgebra matrices;
  Subspace I;  ///< span{Eb, Ef}
  Subspace J;  ///< span{Ea, Ef}
  Subspace C;  ///< span{Ec}
  /// Linear map x -> B with d <- a, e <- b and every other entry 0.
  Matrix witness;
  /// Coordinate letters alpha, a, ..., f.
  std::vector<std::string> letters;

  const Algebra& algebra() const { return matrices.algebra; }
  /// Named coordinate vector, e.g. element("Ec").
  Element element(const std::string& name) const;
};

/// Generator matrices U, Ea, ..., Ef (0/1 entries).
std::vector<Matrix> paper_generators(FieldDesc field);
PaperBundle paper_algebra(FieldDesc field);

/// k x k matrix units E_ij named "E<i><j>" (1-indexed), row-major.
Algebra full_matrix(std::size_t k, FieldDesc field);
/// Matrix units with i <= j.
Algebra upper_triangular(std::size_t k, FieldDesc field);

enum class MatrixProfile { dense, upper_triangular, strictly_upper };
const char* profile_name(MatrixProfile p);

/// Identifier of the pseudo-random scheme used by random_subalgebra.
inline constexpr const char* kRandomScheme = "mt19937_64:entry=draw%p:row-major";

struct RandomSubalgebra {
  MatrixAlgebra algebra;
  std::vector<Matrix> generators;
  std::uint64_t seed;
  MatrixProfile profile;
  std::string scheme;
};

/// Closure of {identity} and `generator_count` random k x k matrices whose
/// entries are drawn row-major from mt19937_64(seed), reduced mod p, on the
/// positions allowed by `profile`.
RandomSubalgebra random_subalgebra(std::size_t k, FieldDesc field, std::size_t generator_count, std::uint64_t seed,
                                   MatrixProfile profile = MatrixProfile::dense);

}  // namespace ringlab
