#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "glr/count.hpp"
#include "glr/error.hpp"
#include "glr/linear_system.hpp"
#include "glr/lr.hpp"
#include "glr/partitions.hpp"
#include "glr/triangular_hive.hpp"

namespace glr {

// m LR hives glued cyclically. Array r (0-based) has base lambda(r+1), left
// side alpha(r+1) and right side alpha(r+2): the right side of array r is the
// left side of array r+1 read in the opposite direction,
//   arrays[r+1].e[j][0] == arrays[r].f[n-1-j][j].
// Drawn in the plane, every second array is mirrored so that consecutive
// arrays share that edge; the labels do not depend on the drawing.
struct SunHive {
  int n = 0;
  int m = 0;
  std::vector<TriangularHive> arrays;
};

namespace detail {

inline std::vector<Partition> checked_lambdas(const std::vector<IntSequence>& lambdas, int n, int m) {
  if (n < 1) fail(ErrorKind::InvalidInput, "n must be positive");
  if (m < 4 || m % 2 != 0)
    fail(ErrorKind::UnsupportedShape, "sun hives need an even m >= 4, got m=" + std::to_string(m));
  if (lambdas.size() != static_cast<std::size_t>(m))
    fail(ErrorKind::InvalidInput, "expected " + std::to_string(m) + " sequences, got " +
                                      std::to_string(lambdas.size()));
  std::vector<Partition> out;
  for (std::size_t r = 0; r < lambdas.size(); ++r) {
    if (lambdas[r].length() > static_cast<std::size_t>(n))
      fail(ErrorKind::InvalidInput, "lambda(" + std::to_string(r + 1) + ") = " + lambdas[r].str() +
                                        " has more than n parts");
    if (!lambdas[r].is_partition())
      fail(ErrorKind::InvalidInput, "lambda(" + std::to_string(r + 1) + ") = " + lambdas[r].str() +
                                        " is not a partition");
    out.emplace_back(lambdas[r]);
  }
  return out;
}

inline bool sizes_balance(const std::vector<Partition>& lam) {
  Part odd = 0, even = 0;
  for (std::size_t i = 0; i < lam.size(); ++i) (i % 2 == 0 ? odd : even) += lam[i].size();
  return odd == even;
}

// Enumerates alpha(1..m) with alpha(r) inside lambda(r-1) and lambda(r) and
// the sizes forced by |alpha(r)| + |alpha(r+1)| = |lambda(r)|; visit gets the
// complete cyclic chain.
template <class Visit>
void for_each_shared_chain(const std::vector<Partition>& lam, Visit&& visit) {
  const std::size_t m = lam.size();
  std::vector<Partition> chain(m);
  std::function<void(std::size_t)> extend = [&](std::size_t r) {
    if (r == m) {
      if (chain[m - 1].size() + chain[0].size() == lam[m - 1].size()) visit(chain);
      return;
    }
    const Part size = lam[r - 1].size() - chain[r - 1].size();
    for_each_partition_in(meet(lam[r - 1], lam[r]), size, [&](const Partition& a) {
      chain[r] = a;
      extend(r + 1);
    });
  };
  for (const Partition& a1 : all_partitions_in(meet(lam[m - 1], lam[0]))) {
    chain[0] = a1;
    extend(1);
  }
}

}  // namespace detail

// Shape checks throw; label checks return false.
inline bool validate_sun_hive(const SunHive& h, const std::vector<IntSequence>& lambdas) {
  if (h.m < 4 || h.m % 2 != 0 || h.arrays.size() != static_cast<std::size_t>(h.m) ||
      lambdas.size() != static_cast<std::size_t>(h.m))
    fail(ErrorKind::InvalidInput, "sun hive has the wrong number of arrays");
  for (const auto& a : h.arrays)
    if (a.n != h.n || !a.well_formed())
      fail(ErrorKind::InvalidInput, "sun hive array has the wrong size");
  const int n = h.n;
  for (int r = 0; r < h.m; ++r) {
    const auto& arr = h.arrays[static_cast<std::size_t>(r)];
    const auto& next = h.arrays[static_cast<std::size_t>((r + 1) % h.m)];
    if (!satisfies_rhombus(arr)) return false;
    const auto base = lambdas[static_cast<std::size_t>(r)].padded(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
      if (arr.g[0][j] != base[static_cast<std::size_t>(j)]) return false;
    for (int j = 0; j < n; ++j) {
      if (next.e[j][0] != arr.f[n - 1 - j][j]) return false;
      if (arr.e[j][0] < 0) return false;
    }
  }
  return true;
}

// Calls visit(hive) for every integral sun hive with the given bases.
template <class Visit>
void for_each_sun_hive(const std::vector<IntSequence>& lambdas, int n, int m, Visit&& visit) {
  const auto lam = detail::checked_lambdas(lambdas, n, m);
  if (!detail::sizes_balance(lam)) return;
  SunHive h{n, m, std::vector<TriangularHive>(static_cast<std::size_t>(m), TriangularHive(n))};
  detail::for_each_shared_chain(lam, [&](const std::vector<Partition>& chain) {
    std::function<void(std::size_t)> fill = [&](std::size_t r) {
      if (r == static_cast<std::size_t>(m)) {
        visit(static_cast<const SunHive&>(h));
        return;
      }
      for_each_lr_hive(chain[r], chain[(r + 1) % m], lam[r], n,
                       [&](const TriangularHive& t) {
                         h.arrays[r] = t;
                         fill(r + 1);
                       });
    };
    fill(0);
  });
}

// Lattice points of the sun hive polytope, counted array by array over the
// possible shared sides.
inline Count count_sun_hives(const std::vector<IntSequence>& lambdas, int n, int m) {
  const auto lam = detail::checked_lambdas(lambdas, n, m);
  if (!detail::sizes_balance(lam)) return 0;
  std::map<std::tuple<Partition, Partition, std::size_t>, Count> cache;
  auto arrays = [&](const Partition& left, const Partition& right, std::size_t r) {
    auto key = std::make_tuple(left, right, r);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    const Count c = lr_hive_count(left, right, lam[r], n);
    cache.emplace(std::move(key), c);
    return c;
  };
  Count total = 0;
  detail::for_each_shared_chain(lam, [&](const std::vector<Partition>& chain) {
    Count prod = 1;
    for (std::size_t r = 0; r < lam.size() && prod; ++r)
      prod = checked_mul(prod, arrays(chain[r], chain[(r + 1) % lam.size()], r));
    total = checked_add(total, prod);
  });
  return total;
}

// n = 1 only: every array is one triangle e + f = g, so the hive is the list
// of left labels; brute force over all of them.
inline Count count_sun_hives_raw(const std::vector<IntSequence>& lambdas, int m) {
  const auto lam = detail::checked_lambdas(lambdas, 1, m);
  std::vector<Part> g(static_cast<std::size_t>(m));
  for (int r = 0; r < m; ++r) g[r] = lam[r][0];
  Count total = 0;
  std::vector<Part> e(static_cast<std::size_t>(m), 0);
  std::function<void(int)> rec = [&](int r) {
    if (r == m) {
      for (int q = 0; q < m; ++q) {
        const Part f = g[q] - e[q];
        if (f < 0 || f != e[(q + 1) % m]) return;
      }
      total = checked_add(total, 1);
      return;
    }
    for (Part v = 0; v <= g[r]; ++v) {
      e[r] = v;
      rec(r + 1);
    }
  };
  rec(0);
  return total;
}

// Labels of the two triangles meeting across each shared edge, for the
// cross-array rhombi that are deliberately left unconstrained.
struct CrossArrayEdge {
  int array = 0;  // shared edge between arrays `array` and `array + 1`
  int position = 0;
  std::int64_t outer_difference = 0;  // g of array+1 minus g of array
};

inline std::vector<CrossArrayEdge> cross_array_report(const SunHive& h) {
  std::vector<CrossArrayEdge> out;
  const int n = h.n;
  for (int r = 0; r < h.m; ++r) {
    const auto& a = h.arrays[static_cast<std::size_t>(r)];
    const auto& b = h.arrays[static_cast<std::size_t>((r + 1) % h.m)];
    for (int j = 0; j < n; ++j)
      out.push_back({r, j, b.g[j][0] - a.g[n - 1 - j][j]});
  }
  return out;
}

// Variables: every shared side label alpha(r)_j and every interior label of
// every array. Constraints: triangle equalities, rhombus inequalities, the
// size condition |alpha(r)| + |alpha(r+1)| = |lambda(r)| and alpha(r)_j >= 0.
// Base labels are constants and end up in b.
inline LinearSystem build_linear_system(const std::vector<IntSequence>& lambdas, int n, int m) {
  const auto lam = detail::checked_lambdas(lambdas, n, m);
  LinearSystem sys;
  std::vector<std::vector<std::size_t>> alpha(static_cast<std::size_t>(m));
  for (int r = 0; r < m; ++r)
    for (int j = 0; j < n; ++j)
      alpha[r].push_back(sys.add_variable("a" + std::to_string(r + 1) + "_" + std::to_string(j + 1)));

  // Edge label: variable index or constant.
  struct Label {
    std::optional<std::size_t> var;
    Part constant = 0;
  };
  enum Kind { E, F, G };
  std::vector<std::map<std::tuple<int, int, int>, std::size_t>> interior(static_cast<std::size_t>(m));
  for (int r = 0; r < m; ++r) {
    auto add = [&](int kind, int i, int j) {
      const char* tag = kind == E ? "e" : kind == F ? "f" : "g";
      interior[r][{kind, i, j}] = sys.add_variable("h" + std::to_string(r + 1) + "_" + tag +
                                                   std::to_string(i) + "_" + std::to_string(j));
    };
    for (int i = 0; i < n; ++i)
      for (int j = 0; i + j < n; ++j) {
        if (j >= 1) add(E, i, j);
        if (i + j < n - 1) add(F, i, j);
        if (i >= 1) add(G, i, j);
      }
  }
  auto label = [&](int r, int kind, int i, int j) -> Label {
    if (kind == E && j == 0) return {alpha[r][i], 0};
    if (kind == F && i + j == n - 1) return {alpha[(r + 1) % m][j], 0};
    if (kind == G && i == 0) return {std::nullopt, lam[r][static_cast<std::size_t>(j)]};
    return {interior[r].at({kind, i, j}), 0};
  };
  // sum coef * label <= rhs, constants moved across.
  auto constrain = [&](const std::vector<std::pair<Label, int>>& terms, bool equality, const std::string& name) {
    LinearSystem::Terms t;
    Rational rhs = 0;
    for (const auto& [l, c] : terms) {
      if (l.var) t.emplace_back(*l.var, c);
      else rhs -= c * l.constant;
    }
    if (equality) sys.add_eq(t, rhs, name);
    else sys.add_le(t, rhs, name);
  };

  for (int r = 0; r < m; ++r) {
    const std::string pre = "r" + std::to_string(r + 1) + ":";
    for (int i = 0; i < n; ++i) {
      for (int j = 0; i + j < n; ++j) {
        const std::string at = std::to_string(i) + "_" + std::to_string(j);
        constrain({{label(r, E, i, j), 1}, {label(r, F, i, j), 1}, {label(r, G, i, j), -1}}, true,
                  pre + "up" + at);
        if (i + j + 1 >= n) continue;
        constrain({{label(r, E, i, j + 1), 1}, {label(r, F, i, j), 1}, {label(r, G, i + 1, j), -1}}, true,
                  pre + "down" + at);
        // x >= y written as y - x <= 0
        auto ge = [&](Label x, Label y, const std::string& nm) {
          constrain({{y, 1}, {x, -1}}, false, pre + nm + at);
        };
        ge(label(r, E, i, j), label(r, E, i, j + 1), "rh_e");
        ge(label(r, G, i, j), label(r, G, i + 1, j), "rh_g");
        ge(label(r, F, i + 1, j), label(r, F, i, j), "rh_f");
        ge(label(r, E, i, j + 1), label(r, E, i + 1, j), "rh_e2");
        ge(label(r, F, i, j), label(r, F, i, j + 1), "rh_f2");
        ge(label(r, G, i + 1, j), label(r, G, i, j + 1), "rh_g2");
      }
    }
    LinearSystem::Terms border;
    for (int j = 0; j < n; ++j) {
      border.emplace_back(alpha[r][j], 1);
      border.emplace_back(alpha[(r + 1) % m][j], 1);
    }
    sys.add_eq(border, Rational(lam[r].size()), pre + "border");
    for (int j = 0; j < n; ++j)
      sys.add_ge({{alpha[r][j], 1}}, Rational(0), pre + "nonneg" + std::to_string(j + 1));
  }
  return sys;
}

inline bool positivity(const std::vector<IntSequence>& lambdas, int n, int m,
                       LpBackend backend = LpBackend::FourierMotzkin) {
  return lp_feasible(build_linear_system(lambdas, n, m), backend);
}

}  // namespace glr
