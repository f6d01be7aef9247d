#pragma once

// Slow, independent reference implementations for the tests. Nothing here
// shares code with the library beyond the Partition type.

#include <cstdint>
#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <tuple>
#include <vector>

#include "glr/partitions.hpp"

namespace oracle {

using glr::IntSequence;
using glr::Part;
using glr::Partition;

// LR tableaux by filling every skew cell with a letter and checking the
// semistandard and reverse-lattice-word conditions at the end.
inline std::uint64_t lr(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (nu.size() != lambda.size() + mu.size()) return 0;
  for (std::size_t i = 0; i < nu.length() || i < lambda.length(); ++i)
    if (lambda[i] > nu[i]) return 0;
  const auto letters = static_cast<int>(mu.length());
  std::vector<std::pair<std::size_t, Part>> cells;  // (row, column)
  for (std::size_t r = 0; r < nu.length(); ++r)
    for (Part c = lambda[r]; c < nu[r]; ++c) cells.emplace_back(r, c);
  if (cells.empty()) return 1;
  std::map<std::pair<std::size_t, Part>, int> fill;
  std::vector<Part> used(static_cast<std::size_t>(letters) + 1, 0);
  std::uint64_t count = 0;

  auto lattice = [&] {
    // Reverse reading word: rows top to bottom, each right to left.
    std::vector<Part> seen(static_cast<std::size_t>(letters) + 2, 0);
    for (std::size_t r = 0; r < nu.length(); ++r)
      for (Part c = nu[r] - 1; c >= lambda[r]; --c) {
        const int k = fill.at({r, c});
        ++seen[static_cast<std::size_t>(k)];
        if (k > 1 && seen[static_cast<std::size_t>(k)] > seen[static_cast<std::size_t>(k - 1)]) return false;
      }
    return true;
  };

  std::function<void(std::size_t)> place = [&](std::size_t idx) {
    if (idx == cells.size()) {
      if (lattice()) ++count;
      return;
    }
    const auto [r, c] = cells[idx];
    for (int k = 1; k <= letters; ++k) {
      if (used[static_cast<std::size_t>(k)] == mu[static_cast<std::size_t>(k - 1)]) continue;
      if (c > lambda[r] && fill.count({r, c - 1}) && fill.at({r, c - 1}) > k) continue;
      if (r > 0 && c >= lambda[r - 1] && fill.at({r - 1, c}) >= k) continue;
      fill[{r, c}] = k;
      ++used[static_cast<std::size_t>(k)];
      place(idx + 1);
      --used[static_cast<std::size_t>(k)];
      fill.erase({r, c});
    }
  };
  place(0);
  return count;
}

inline std::vector<Partition> all_in_box(Part width, std::size_t rows) {
  std::vector<Partition> out;
  std::vector<Part> cur;
  std::function<void(Part)> rec = [&](Part cap) {
    out.emplace_back(cur);
    if (cur.size() == rows) return;
    for (Part v = 1; v <= cap; ++v) {
      cur.push_back(v);
      rec(v);
      cur.pop_back();
    }
  };
  rec(width);
  return out;
}

inline Part max_entry(const std::vector<IntSequence>& seqs) {
  Part w = 0;
  for (const auto& s : seqs) w = std::max(w, s[0]);
  return w;
}

struct LrCache {
  std::map<std::tuple<Partition, Partition, Partition>, std::uint64_t> memo;
  std::uint64_t operator()(const Partition& a, const Partition& b, const Partition& c) {
    auto key = std::make_tuple(a, b, c);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    return memo[key] = lr(a, b, c);
  }
};

// Sum over every cyclic alpha chain drawn from the full n x w box, no
// containment or size pruning.
inline std::uint64_t f_sun(const std::vector<IntSequence>& lambdas, int n) {
  for (const auto& s : lambdas)
    if (!s.is_partition()) return 0;
  const std::size_t m = lambdas.size();
  std::vector<Partition> lam;
  for (const auto& s : lambdas) lam.emplace_back(s);
  const auto box = all_in_box(max_entry(lambdas), static_cast<std::size_t>(n));
  LrCache c;
  std::vector<const Partition*> chain(m);
  std::uint64_t total = 0;
  std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t i, std::uint64_t prod) {
    if (i == m) {
      total += prod * c(*chain[m - 1], *chain[0], lam[m - 1]);
      return;
    }
    for (const auto& a : box) {
      chain[i] = &a;
      const std::uint64_t v = i == 0 ? 1 : c(*chain[i - 1], a, lam[i - 1]);
      if (v) rec(i + 1, prod * v);
    }
  };
  rec(0, 1);
  return total;
}

// Chains for f1 and f2 written straight from their defining sums.
inline std::uint64_t f1(const std::vector<IntSequence>& lambdas, int n) {
  const std::size_t m = lambdas.size();
  std::vector<Partition> lam;
  for (const auto& s : lambdas) lam.emplace_back(s);
  Part w = 0;
  for (const auto& s : lambdas) w += s[0];
  const auto box = all_in_box(w, static_cast<std::size_t>(n));
  LrCache c;
  const std::size_t k = m - 3;  // alpha(1..k)
  std::vector<const Partition*> a(k);
  std::uint64_t total = 0;
  std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t i, std::uint64_t prod) {
    if (i == k) {
      total += prod * c(lam[m - 2], lam[m - 1], *a[k - 1]);
      return;
    }
    for (const auto& x : box) {
      a[i] = &x;
      const std::uint64_t v = i == 0 ? c(lam[0], lam[1], x) : c(*a[i - 1], x, lam[i + 1]);
      if (v) rec(i + 1, prod * v);
    }
  };
  rec(0, 1);
  return total;
}

inline std::uint64_t f2(const std::vector<IntSequence>& lambdas, int n) {
  const std::size_t m = lambdas.size();
  std::vector<Partition> lam;
  for (const auto& s : lambdas) lam.emplace_back(s);
  if (m == 3) return lr(lam[0], lam[2], lam[1]);
  const auto box = all_in_box(max_entry(lambdas), static_cast<std::size_t>(n));
  LrCache c;
  const std::size_t k = m - 3;
  std::vector<const Partition*> a(k);
  std::uint64_t total = 0;
  std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t i, std::uint64_t prod) {
    if (i == k) {
      total += prod * c(*a[k - 1], lam[m - 1], lam[m - 2]);
      return;
    }
    for (const auto& x : box) {
      a[i] = &x;
      const std::uint64_t v = i == 0 ? c(lam[0], x, lam[1]) : c(*a[i - 1], x, lam[i + 1]);
      if (v) rec(i + 1, prod * v);
    }
  };
  rec(0, 1);
  return total;
}

inline std::uint64_t binomial(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

inline Partition random_partition(std::mt19937& rng, std::size_t rows, Part max_entry) {
  std::uniform_int_distribution<Part> d(0, max_entry);
  std::vector<Part> v(rows);
  for (auto& x : v) x = d(rng);
  std::sort(v.rbegin(), v.rend());
  return Partition(v);
}

}  // namespace oracle
