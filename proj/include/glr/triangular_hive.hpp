#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "glr/error.hpp"

namespace glr {

// Edge-labelled triangular array of size n. Row i (counted from the base)
// holds n - i up-triangles; for up-triangle (i,j) the base edge is g[i][j],
// the left edge e[i][j] and the right edge f[i][j]. The down-triangle
// between up-triangles (i,j) and (i,j+1) has edges f[i][j], e[i][j+1] and
// g[i+1][j].
//
// Boundary: base g[0][j], left side e[i][0], right side f[i][n-1-i].
template <class T>
struct BasicTriangularHive {
  using Rows = std::vector<std::vector<T>>;

  int n = 0;
  Rows e, f, g;

  BasicTriangularHive() = default;
  explicit BasicTriangularHive(int size) : n(size) {
    if (size < 0) fail(ErrorKind::InvalidInput, "negative hive size");
    e = f = g = Rows(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) {
      const auto w = static_cast<std::size_t>(size - i);
      e[i].assign(w, T{});
      f[i].assign(w, T{});
      g[i].assign(w, T{});
    }
  }

  bool well_formed() const {
    if (n < 0) return false;
    const auto rows = static_cast<std::size_t>(n);
    if (e.size() != rows || f.size() != rows || g.size() != rows) return false;
    for (int i = 0; i < n; ++i) {
      const auto w = static_cast<std::size_t>(n - i);
      if (e[i].size() != w || f[i].size() != w || g[i].size() != w) return false;
    }
    return true;
  }

  // Sides read from the base corner upwards.
  std::vector<T> base() const { return n ? g[0] : std::vector<T>{}; }
  std::vector<T> left_side() const {
    std::vector<T> out;
    for (int i = 0; i < n; ++i) out.push_back(e[i][0]);
    return out;
  }
  std::vector<T> right_side() const {
    std::vector<T> out;
    for (int i = 0; i < n; ++i) out.push_back(f[i][n - 1 - i]);
    return out;
  }

  friend bool operator==(const BasicTriangularHive&, const BasicTriangularHive&) = default;
};

using TriangularHive = BasicTriangularHive<std::int64_t>;

// Triangle equalities and rhombus inequalities, boundary ignored.
template <class T>
bool satisfies_rhombus(const BasicTriangularHive<T>& h) {
  if (!h.well_formed()) return false;
  const int n = h.n;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; i + j < n; ++j) {
      if (h.e[i][j] + h.f[i][j] != h.g[i][j]) return false;
      if (i + j + 1 < n) {
        if (h.e[i][j + 1] + h.f[i][j] != h.g[i + 1][j]) return false;
        if (h.e[i][j] < h.e[i][j + 1]) return false;
        if (h.g[i][j] < h.g[i + 1][j]) return false;
        if (h.f[i + 1][j] < h.f[i][j]) return false;
        if (h.e[i][j + 1] < h.e[i + 1][j]) return false;
        if (h.f[i][j] < h.f[i][j + 1]) return false;
        if (h.g[i + 1][j] < h.g[i][j + 1]) return false;
      }
    }
  }
  return true;
}

}  // namespace glr
