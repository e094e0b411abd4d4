#include "ringlab/catalog.hpp"

#include <random>
#include <utility>

namespace ringlab {

namespace {

const std::vector<std::string> kPaperNames = {"U", "Ea", "Eb", "Ec", "Ed", "Ee", "Ef"};
const std::vector<std::string> kPaperLetters = {"alpha", "a", "b", "c", "d", "e", "f"};

// 1-indexed (row, column) positions of each generic letter in the 7x7 display.
const std::vector<std::vector<std::pair<int, int>>> kPaperPositions = {
    {{1, 1}, {2, 2}, {3, 3}, {4, 4}, {5, 5}, {6, 6}, {7, 7}},  // alpha
    {{1, 2}, {5, 7}},                                          // a
    {{1, 3}, {2, 4}, {6, 7}},                                  // b
    {{1, 4}},                                                  // c
    {{1, 5}, {2, 7}},                                          // d
    {{1, 6}, {3, 7}},                                          // e
    {{1, 7}},                                                  // f
};

Algebra from_units(std::size_t k, FieldDesc field, bool upper) {
  std::vector<std::pair<std::size_t, std::size_t>> units;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = upper ? i : 0; j < k; ++j) units.emplace_back(i, j);
  const std::size_t n = units.size();
  auto index = [&](std::size_t i, std::size_t j) {
    for (std::size_t t = 0; t < n; ++t)
      if (units[t] == std::make_pair(i, j)) return t;
    return n;
  };
  std::vector<Scalar> table(n * n * n, field.zero());
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (units[x].second != units[y].first) continue;
      table[(x * n + y) * n + index(units[x].first, units[y].second)] = field.one();
    }
  Element unit = zero_vector(field, n);
  for (std::size_t i = 0; i < k; ++i) unit[index(i, i)] = field.one();
  std::vector<std::string> names;
  for (const auto& [i, j] : units) names.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
  return Algebra::build(field, n, unit, table, names);
}

}  // namespace

Element PaperBundle::element(const std::string& name) const {
  auto idx = algebra().index_of(name);
  if (!idx) throw Error(ErrorCode::ParseError, "unknown basis name " + name);
  return algebra().basis(*idx);
}

std::vector<Matrix> paper_generators(FieldDesc field) {
  std::vector<Matrix> out;
  for (const auto& positions : kPaperPositions) {
    Matrix m(field, 7, 7);
    for (const auto& [r, c] : positions) m(r - 1, c - 1) = field.one();
    out.push_back(std::move(m));
  }
  return out;
}

PaperBundle paper_algebra(FieldDesc field) {
  MatrixAlgebra ma = from_matrix_basis(field, 7, paper_generators(field), false, kPaperNames);
  const Algebra& a = ma.algebra;
  auto span_of = [&](std::initializer_list<std::size_t> idx) {
    std::vector<Element> gens;
    for (auto i : idx) gens.push_back(a.basis(i));
    return Subspace::span(field, 7, gens);
  };
  Matrix w(field, 7, 7);
  w(4, 1) = field.one();  // d <- a
  w(5, 2) = field.one();  // e <- b
  return PaperBundle{std::move(ma), span_of({2, 6}), span_of({1, 6}), span_of({3}), std::move(w), kPaperLetters};
}

Algebra full_matrix(std::size_t k, FieldDesc field) {
  if (k == 0) throw Error(ErrorCode::BadShape, "matrix size must be positive");
  return from_units(k, field, false);
}

Algebra upper_triangular(std::size_t k, FieldDesc field) {
  if (k == 0) throw Error(ErrorCode::BadShape, "matrix size must be positive");
  return from_units(k, field, true);
}

const char* profile_name(MatrixProfile p) {
  switch (p) {
    case MatrixProfile::dense: return "dense";
    case MatrixProfile::upper_triangular: return "upper_triangular";
    case MatrixProfile::strictly_upper: return "strictly_upper";
  }
  return "?";
}

RandomSubalgebra random_subalgebra(std::size_t k, FieldDesc field, std::size_t generator_count, std::uint64_t seed,
                                   MatrixProfile profile) {
  if (!field.is_finite()) throw Error(ErrorCode::InfiniteField, "random subalgebras are drawn over prime fields");
  if (k == 0) throw Error(ErrorCode::BadShape, "matrix size must be positive");
  std::mt19937_64 rng(seed);
  std::vector<Matrix> gens;
  for (std::size_t g = 0; g < generator_count; ++g) {
    Matrix m(field, k, k);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < k; ++c) {
        if (profile == MatrixProfile::upper_triangular && c < r) continue;
        if (profile == MatrixProfile::strictly_upper && c <= r) continue;
        m(r, c) = field.from_int(static_cast<long long>(rng() % field.modulus()));
      }
    gens.push_back(std::move(m));
  }
  std::vector<Matrix> spanning{Matrix::identity(field, k)};
  spanning.insert(spanning.end(), gens.begin(), gens.end());
  MatrixAlgebra ma = from_matrix_basis(field, k, spanning, true);
  return RandomSubalgebra{std::move(ma), std::move(gens), seed, profile, kRandomScheme};
}

}  // namespace ringlab
