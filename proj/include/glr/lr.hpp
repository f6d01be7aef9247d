#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <functional>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "glr/count.hpp"
#include "glr/partitions.hpp"
#include "glr/triangular_hive.hpp"

namespace glr {

struct LrTriple {
  IntSequence lambda, mu, nu;
  int n = 0;
};

// Triple with every sequence a partition of at most n parts, or nothing when
// the coefficient vanishes for shape reasons.
struct NormalizedLr {
  Partition lambda, mu, nu;
};

// Twists lambda and mu by determinant powers (nu twisted by both) until all
// three are partitions.
inline std::optional<NormalizedLr> normalize(const LrTriple& t) {
  if (t.n <= 0) fail(ErrorKind::InvalidInput, "GL(n) rank must be positive");
  const auto n = static_cast<std::size_t>(t.n);
  if (t.lambda.length() > n || t.mu.length() > n || t.nu.length() > n)
    return std::nullopt;
  if (t.nu.size() != t.lambda.size() + t.mu.size()) return std::nullopt;
  auto lam = t.lambda.padded(n), mu = t.mu.padded(n), nu = t.nu.padded(n);
  const Part a = std::max<Part>(0, -lam.back());
  const Part b = std::max<Part>(0, -mu.back());
  for (std::size_t i = 0; i < n; ++i) {
    lam[i] += a;
    mu[i] += b;
    nu[i] += a + b;
  }
  if (nu.back() < 0) return std::nullopt;
  return NormalizedLr{Partition(std::move(lam)), Partition(std::move(mu)),
                      Partition(std::move(nu))};
}

// Number of LR tableaux of shape nu/lambda and content mu. Row r carries
// a[r][k] letters k; the constraints below are column strictness and the
// lattice condition on the reverse reading word.
inline Count count_lr_tableaux(const Partition& lambda, const Partition& mu,
                               const Partition& nu) {
  if (nu.size() != lambda.size() + mu.size()) return 0;
  if (!contains(lambda, nu)) return 0;
  const std::size_t rows = nu.length();
  const std::size_t letters = mu.length();
  if (letters > rows) return 0;
  if (letters == 0) return 1;

  // used[k]: letters k placed so far; before[k]: the same count at the start
  // of the current row; prev[k]: prefix sum A_{r-1}(k).
  std::vector<Part> used(letters + 1, 0), before(letters + 1, 0);
  std::vector<Part> prev(letters + 1, 0), cur(letters + 1, 0);
  Count total = 0;

  std::function<void(std::size_t)> row_step;
  std::function<void(std::size_t, std::size_t, Part)> place;

  place = [&](std::size_t r, std::size_t k, Part remaining) {
    const std::size_t top = std::min(letters, r + 1);
    if (k > top) {
      if (remaining != 0) return;
      auto saved_prev = prev;
      for (std::size_t q = top + 1; q <= letters; ++q) cur[q] = cur[top];
      prev = cur;
      row_step(r + 1);
      prev = std::move(saved_prev);
      return;
    }
    Part hi = std::min(remaining, mu[k - 1] - used[k]);
    if (k >= 2) hi = std::min(hi, before[k - 1] - used[k]);
    if (r > 0) hi = std::min(hi, lambda[r - 1] + prev[k - 1] - lambda[r] - cur[k - 1]);
    if (k == top) {
      // The last admissible letter takes whatever is left of the row.
      if (remaining > hi) return;
      cur[k] = cur[k - 1] + remaining;
      used[k] += remaining;
      place(r, k + 1, 0);
      used[k] -= remaining;
      return;
    }
    for (Part c = 0; c <= hi; ++c) {
      cur[k] = cur[k - 1] + c;
      used[k] += c;
      place(r, k + 1, remaining - c);
      used[k] -= c;
    }
  };

  row_step = [&](std::size_t r) {
    if (r == rows) {
      for (std::size_t k = 1; k <= letters; ++k)
        if (used[k] != mu[k - 1]) return;
      total = checked_add(total, 1);
      return;
    }
    auto saved_cur = cur;
    auto saved_before = before;
    before = used;
    cur.assign(letters + 1, 0);
    place(r, 1, nu[r] - lambda[r]);
    cur = std::move(saved_cur);
    before = std::move(saved_before);
  };

  row_step(0);
  return total;
}

namespace detail {

struct LrKey {
  Partition lambda, mu, nu;
  bool operator==(const LrKey&) const = default;
};

struct LrKeyHash {
  std::size_t operator()(const LrKey& k) const noexcept {
    std::hash<IntSequence> h;
    std::size_t s = h(k.lambda);
    s = s * 1000003U ^ h(k.mu);
    return s * 1000003U ^ h(k.nu);
  }
};

// One logical map shared by every thread; get-or-insert is atomic per key.
class LrMemo {
 public:
  static LrMemo& instance() {
    static LrMemo memo;
    return memo;
  }

  template <class Compute>
  Count get_or_compute(const LrKey& key, Compute&& compute) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = table_.find(key); it != table_.end()) {
        hits_.fetch_add(1, std::memory_order_relaxed);
        return it->second;
      }
    }
    const Count value = compute();
    std::unique_lock lock(mutex_);
    misses_.fetch_add(1, std::memory_order_relaxed);
    return table_.try_emplace(key, value).first->second;
  }

  void clear() {
    std::unique_lock lock(mutex_);
    table_.clear();
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return table_.size();
  }

  std::uint64_t hits() const { return hits_.load(); }
  std::uint64_t misses() const { return misses_.load(); }

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<LrKey, Count, LrKeyHash> table_;
  std::atomic<std::uint64_t> hits_{0}, misses_{0};
};

}  // namespace detail

inline void clear_lr_cache() { detail::LrMemo::instance().clear(); }
inline std::size_t lr_cache_size() { return detail::LrMemo::instance().size(); }

// c^nu_{lambda,mu} for partitions, memoized. The smaller of lambda, mu is
// used as the tableau content.
inline Count lr_coefficient(const Partition& lambda, const Partition& mu,
                            const Partition& nu) {
  if (nu.size() != lambda.size() + mu.size()) return 0;
  if (!contains(lambda, nu) || !contains(mu, nu)) return 0;
  if (lambda.empty()) return mu == nu ? 1 : 0;
  if (mu.empty()) return lambda == nu ? 1 : 0;
  const bool swap = lambda.size() < mu.size() ||
                    (lambda.size() == mu.size() && lambda < mu);
  const Partition& outer = swap ? mu : lambda;
  const Partition& content = swap ? lambda : mu;
  detail::LrKey key{outer, content, nu};
  return detail::LrMemo::instance().get_or_compute(
      key, [&] { return count_lr_tableaux(outer, content, nu); });
}

inline Count lr_coefficient(const LrTriple& t) {
  auto norm = normalize(t);
  if (!norm) return 0;
  return lr_coefficient(norm->lambda, norm->mu, norm->nu);
}

// Calls f(hive) for every integral LR hive with base nu, left side lambda and
// right side mu (read from the top corner down, so mu_1 sits at the apex).
// Interior labels are enumerated band by band from the base; within a band
// only e[i][1..w-2] are free.
template <class F>
void for_each_lr_hive(const Partition& lambda, const Partition& mu,
                      const Partition& nu, int n, F&& f) {
  if (n <= 0) fail(ErrorKind::InvalidInput, "hive size must be positive");
  const auto un = static_cast<std::size_t>(n);
  if (lambda.length() > un || mu.length() > un || nu.length() > un) return;
  if (nu.size() != lambda.size() + mu.size()) return;
  TriangularHive h(n);
  for (int j = 0; j < n; ++j) h.g[0][j] = nu[static_cast<std::size_t>(j)];

  std::function<void(int)> band;
  std::function<void(int, int)> fill;

  auto finish_band = [&](int i) {
    const int w = n - i;
    auto& e = h.e[i];
    auto& fr = h.f[i];
    const auto& g = h.g[i];
    e[w - 1] = g[w - 1] - mu[static_cast<std::size_t>(n - 1 - i)];
    for (int j = 0; j < w; ++j) fr[j] = g[j] - e[j];
    if (w >= 2) {
      if (e[w - 2] < e[w - 1] || fr[w - 2] < fr[w - 1]) return;
    } else if (e[0] != lambda[static_cast<std::size_t>(i)]) {
      return;
    }
    if (i > 0) {
      const auto& pe = h.e[i - 1];
      const auto& pf = h.f[i - 1];
      if (fr[w - 1] < pf[w - 1] || pe[w] < e[w - 1]) return;
      if (w >= 2 && (fr[0] < pf[0] || pe[1] < e[0])) return;
    }
    if (i + 1 < n)
      for (int j = 0; j + 1 < w; ++j) h.g[i + 1][j] = e[j + 1] + fr[j];
    band(i + 1);
  };

  // Chooses e[i][j] for 1 <= j <= w-2.
  fill = [&](int i, int j) {
    const int w = n - i;
    if (j >= w - 1) {
      finish_band(i);
      return;
    }
    auto& e = h.e[i];
    const auto& g = h.g[i];
    std::int64_t hi = e[j - 1];
    std::int64_t lo = g[j] - g[j - 1] + e[j - 1];
    if (i > 0) {
      hi = std::min(hi, h.e[i - 1][j + 1]);
      hi = std::min(hi, g[j] - h.f[i - 1][j]);
    }
    for (std::int64_t v = lo; v <= hi; ++v) {
      e[j] = v;
      fill(i, j + 1);
    }
  };

  band = [&](int i) {
    if (i == n) {
      f(static_cast<const TriangularHive&>(h));
      return;
    }
    h.e[i][0] = lambda[static_cast<std::size_t>(i)];
    const int w = n - i;
    if (w == 1) {
      finish_band(i);
      return;
    }
    fill(i, 1);
  };

  band(0);
}

inline Count lr_hive_count(const Partition& lambda, const Partition& mu,
                           const Partition& nu, int n) {
  Count c = 0;
  for_each_lr_hive(lambda, mu, nu, n, [&](const TriangularHive&) { c = checked_add(c, 1); });
  return c;
}

inline Count lr_hive_count(const LrTriple& t) {
  auto norm = normalize(t);
  if (!norm) return 0;
  return lr_hive_count(norm->lambda, norm->mu, norm->nu, t.n);
}

// c^{(N^n)}_{lambda,mu}: 1 exactly when mu is the complement of lambda in the
// n x N rectangle, rotated by 180 degrees.
inline Count rectangular_lr(const Partition& lambda, const Partition& mu, Part N, int n) {
  if (n <= 0) fail(ErrorKind::InvalidInput, "GL(n) rank must be positive");
  if (N < 0) fail(ErrorKind::InvalidInput, "rectangle width must be nonnegative");
  const auto un = static_cast<std::size_t>(n);
  if (lambda.length() > un || mu.length() > un) return 0;
  for (std::size_t i = 0; i < un; ++i)
    if (lambda[i] > N || mu[i] != N - lambda[un - 1 - i]) return 0;
  return 1;
}

}  // namespace glr
