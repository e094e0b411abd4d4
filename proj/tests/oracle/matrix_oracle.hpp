#pragma once

// Structure constants recomputed from plain integer matrices, sharing no code
// with the library's matrix-basis builder.

#include <array>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using IntMatrix = std::vector<std::vector<long>>;

// Constants c[i][j][k], flattened as (i * n + j) * n + k.
struct Table {
  std::size_t n = 0;
  std::vector<long> c;
  std::vector<long> unit;
  std::vector<std::string> names;
  long at(std::size_t i, std::size_t j, std::size_t k) const { return c[(i * n + j) * n + k]; }
};

inline IntMatrix zero_matrix(std::size_t k) { return IntMatrix(k, std::vector<long>(k, 0)); }

inline IntMatrix mat_mul(const IntMatrix& x, const IntMatrix& y) {
  const std::size_t k = x.size();
  IntMatrix out = zero_matrix(k);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t s = 0; s < k; ++s)
      for (std::size_t t = 0; t < k; ++t) out[r][t] += x[r][s] * y[s][t];
  return out;
}

// 1-indexed positions of the 7x7 patterns, in the order U, Ea, ..., Ef.
inline std::vector<std::vector<std::pair<int, int>>> paper_positions() {
  std::vector<std::vector<std::pair<int, int>>> pos(7);
  for (int i = 1; i <= 7; ++i) pos[0].push_back({i, i});
  pos[1] = {{1, 2}, {5, 7}};
  pos[2] = {{1, 3}, {2, 4}, {6, 7}};
  pos[3] = {{1, 4}};
  pos[4] = {{1, 5}, {2, 7}};
  pos[5] = {{1, 6}, {3, 7}};
  pos[6] = {{1, 7}};
  return pos;
}

inline std::vector<IntMatrix> paper_matrices() {
  std::vector<IntMatrix> out;
  for (const auto& p : paper_positions()) {
    IntMatrix m = zero_matrix(7);
    for (auto [r, c] : p) m[r - 1][c - 1] = 1;
    out.push_back(m);
  }
  return out;
}

// Writes m in the pattern basis: every pattern owns a position no other
// pattern touches, so the coefficient can be read off there; the remaining
// entries are then checked.
inline std::vector<long> paper_coordinates(const IntMatrix& m) {
  const auto pos = paper_positions();
  std::vector<long> coords(7);
  IntMatrix rebuilt = zero_matrix(7);
  for (std::size_t b = 0; b < 7; ++b) {
    auto [r, c] = pos[b].front();
    coords[b] = m[r - 1][c - 1];
    for (auto [rr, cc] : pos[b]) rebuilt[rr - 1][cc - 1] += coords[b];
  }
  if (rebuilt != m) throw std::logic_error("product left the span of the patterns");
  return coords;
}

inline Table paper_table() {
  Table t;
  t.n = 7;
  t.names = {"U", "Ea", "Eb", "Ec", "Ed", "Ee", "Ef"};
  t.unit = {1, 0, 0, 0, 0, 0, 0};
  const auto mats = paper_matrices();
  t.c.assign(7 * 7 * 7, 0);
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = 0; j < 7; ++j) {
      auto coords = paper_coordinates(mat_mul(mats[i], mats[j]));
      for (std::size_t k = 0; k < 7; ++k) t.c[(i * 7 + j) * 7 + k] = coords[k];
    }
  return t;
}

// Matrix units E_rs of k x k matrices, optionally only r <= s, row-major.
inline Table matrix_unit_table(std::size_t k, bool upper) {
  std::vector<std::pair<std::size_t, std::size_t>> units;
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t s = 0; s < k; ++s)
      if (!upper || r <= s) units.push_back({r, s});
  Table t;
  t.n = units.size();
  t.c.assign(t.n * t.n * t.n, 0);
  t.unit.assign(t.n, 0);
  for (std::size_t i = 0; i < t.n; ++i) {
    t.names.push_back("E" + std::to_string(units[i].first + 1) + std::to_string(units[i].second + 1));
    if (units[i].first == units[i].second) t.unit[i] = 1;
    for (std::size_t j = 0; j < t.n; ++j) {
      if (units[i].second != units[j].first) continue;
      for (std::size_t m = 0; m < t.n; ++m)
        if (units[m].first == units[i].first && units[m].second == units[j].second) t.c[(i * t.n + j) * t.n + m] = 1;
    }
  }
  return t;
}

}  // namespace oracle
