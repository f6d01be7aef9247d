#pragma once

#include <algorithm>
#include <cstdint>
#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include "glr/count.hpp"
#include "glr/error.hpp"
#include "glr/generalized.hpp"
#include "glr/linear_system.hpp"
#include "glr/partitions.hpp"
#include "glr/quiver.hpp"
#include "glr/rational.hpp"
#include "glr/subset_tuple.hpp"

namespace glr {

enum class HornVariant { EqualOne, Nonzero };

inline std::string_view variant_name(HornVariant v) {
  return v == HornVariant::EqualOne ? "one" : "nonzero";
}

// m weakly decreasing sequences of n exact rationals.
class RationalTuple {
 public:
  RationalTuple() = default;
  RationalTuple(int n, std::vector<std::vector<Rational>> lambdas) : n_(n), lambdas_(std::move(lambdas)) {
    if (n < 1) fail(ErrorKind::InvalidInput, "n must be positive");
    for (std::size_t i = 0; i < lambdas_.size(); ++i) {
      auto& l = lambdas_[i];
      if (l.size() > static_cast<std::size_t>(n))
        fail(ErrorKind::InvalidInput, "lambda(" + std::to_string(i + 1) + ") has more than n entries");
      l.resize(static_cast<std::size_t>(n), Rational(0));
      for (std::size_t j = 1; j < l.size(); ++j)
        if (l[j - 1] < l[j])
          fail(ErrorKind::InvalidInput, "lambda(" + std::to_string(i + 1) + ") is not weakly decreasing");
    }
  }

  static RationalTuple from_integers(const std::vector<IntSequence>& seqs, int n) {
    std::vector<std::vector<Rational>> out;
    for (const auto& s : seqs) {
      std::vector<Rational> r;
      for (auto v : s.padded(static_cast<std::size_t>(n))) r.emplace_back(v);
      out.push_back(std::move(r));
    }
    return RationalTuple(n, std::move(out));
  }

  int n() const noexcept { return n_; }
  std::size_t m() const noexcept { return lambdas_.size(); }
  const std::vector<std::vector<Rational>>& lambdas() const noexcept { return lambdas_; }
  // lambda(i)_j with 1-based i, j.
  const Rational& at(int i, int j) const {
    return lambdas_.at(static_cast<std::size_t>(i - 1)).at(static_cast<std::size_t>(j - 1));
  }

 private:
  int n_ = 1;
  std::vector<std::vector<Rational>> lambdas_;
};

// sum_{i even} sum_{j in I_i} lambda(i)_j <= sum_{i odd} sum_{j in I_i} lambda(i)_j
struct HornInequality {
  SubsetTuple tuple;

  // Coefficients of "a . lambda <= 0", flattened as (i-1)*n + (j-1).
  std::vector<std::int64_t> coefficients() const {
    const int n = tuple.n();
    std::vector<std::int64_t> a(tuple.m() * static_cast<std::size_t>(n), 0);
    for (std::size_t idx = 0; idx < tuple.m(); ++idx) {
      const int sign = (idx % 2 == 1) ? 1 : -1;  // flag idx+1 even -> left-hand side
      for (int j : tuple[idx].elements()) a[idx * static_cast<std::size_t>(n) + static_cast<std::size_t>(j - 1)] = sign;
    }
    return a;
  }

  bool trivial_zero() const {
    return std::all_of(tuple.subsets().begin(), tuple.subsets().end(),
                       [](const Subset& s) { return s.empty(); });
  }

  // Right-hand side minus left-hand side.
  Rational slack(const RationalTuple& t) const {
    if (t.m() != tuple.m() || t.n() != tuple.n())
      fail(ErrorKind::InvalidInput, "tuple shape does not match the inequality");
    Rational s = 0;
    for (std::size_t idx = 0; idx < tuple.m(); ++idx)
      for (int j : tuple[idx].elements()) {
        const Rational& v = t.at(static_cast<int>(idx + 1), j);
        if (idx % 2 == 1) s -= v;
        else s += v;
      }
    return s;
  }

  bool holds(const RationalTuple& t) const { return slack(t) >= 0; }

  // Printed form, e.g. "lambda(2)_1 + |lambda(4)| <= lambda(1)_1 + lambda(3)_2".
  std::string str() const {
    auto side = [&](std::size_t parity) {
      std::string s;
      for (std::size_t idx = parity; idx < tuple.m(); idx += 2) {
        const Subset& I = tuple[idx];
        const std::string name = "lambda(" + std::to_string(idx + 1) + ")";
        auto add = [&](const std::string& term) { s += (s.empty() ? "" : " + ") + term; };
        if (I.empty()) continue;
        if (I.is_full() && I.size() > 1) {
          add("|" + name + "|");
        } else {
          for (int j : I.elements()) add(name + "_" + std::to_string(j));
        }
      }
      return s.empty() ? std::string("0") : s;
    };
    return side(1) + " <= " + side(0);
  }

  friend bool operator==(const HornInequality&, const HornInequality&) = default;
  friend auto operator<=>(const HornInequality& a, const HornInequality& b) { return a.tuple <=> b.tuple; }
};

// (lambda'(I_i) with n - |I_i| slots) minus sigma at the odd central vertices.
inline std::vector<IntSequence> underline_lambda(const SubsetTuple& I) {
  const int n = I.n();
  std::vector<IntSequence> out;
  for (int i = 1; i <= static_cast<int>(I.m()); ++i) {
    const Subset& s = I.flag(i);
    const auto slots = static_cast<std::size_t>(n - s.size());
    auto parts = conjugate(lambda_of_set(s)).padded(slots);
    if (i % 2 == 1) {
      const Part shift = s.size() - I.flag(i - 1).size() - I.flag(i + 1).size();
      for (auto& v : parts) v -= shift;
    }
    out.emplace_back(std::move(parts));
  }
  return out;
}

// s_i: smallest k in 0..|I_i| with n - k not in I_i.
inline int top_run(const Subset& s) {
  int k = 0;
  while (k < s.size() && s.contains(s.universe() - k)) ++k;
  return k;
}

// max(|I_{i-1}|, |I_{i+1}|) <= |I_i| <= |I_{i-1}| + |I_{i+1}| + s_i for odd i.
inline bool size_bounds_hold(const SubsetTuple& I) {
  for (int i = 1; i <= static_cast<int>(I.m()); i += 2) {
    const int a = I.flag(i - 1).size(), b = I.flag(i + 1).size(), c = I.flag(i).size();
    if (std::max(a, b) > c || c > a + b + top_run(I.flag(i))) return false;
  }
  return true;
}

struct GenerateOptions {
  // Refuse when 2^(n m) exceeds this many candidate tuples.
  std::uint64_t budget = std::uint64_t{1} << 22;
  bool parallel = false;
};

namespace detail {

struct TCandidates {
  std::vector<std::pair<SubsetTuple, Count>> tuples;  // canonical order
};

inline std::mutex& t_cache_mutex() {
  static std::mutex mu;
  return mu;
}

inline std::map<std::pair<int, int>, std::shared_ptr<const TCandidates>>& t_cache() {
  static std::map<std::pair<int, int>, std::shared_ptr<const TCandidates>> cache;
  return cache;
}

// Every tuple passing the shape filters, with f of its underline sequences.
inline std::shared_ptr<const TCandidates> t_candidates(int n, int m, const GenerateOptions& opts) {
  if (n < 1) fail(ErrorKind::InvalidInput, "n must be positive");
  if (m < 4 || m % 2 != 0)
    fail(ErrorKind::UnsupportedShape, "T(n,m) needs an even m >= 4, got m=" + std::to_string(m));
  const int bits = n * m;
  if (bits >= 63 || (std::uint64_t{1} << bits) > opts.budget)
    fail(ErrorKind::BudgetExceeded, "T(" + std::to_string(n) + "," + std::to_string(m) + ") needs 2^" +
                                        std::to_string(bits) + " candidate tuples, over the budget of " +
                                        std::to_string(opts.budget));
  {
    std::lock_guard lock(t_cache_mutex());
    if (auto it = t_cache().find({n, m}); it != t_cache().end()) return it->second;
  }

  const std::uint64_t total = std::uint64_t{1} << bits;
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  std::mutex memo_mu;
  std::map<std::vector<IntSequence>, Count> memo;

  auto examine = [&](std::uint64_t code) -> std::optional<std::pair<SubsetTuple, Count>> {
    std::vector<std::uint64_t> masks(static_cast<std::size_t>(m));
    bool all_full = true;
    for (int i = 0; i < m; ++i) {
      masks[i] = (code >> (i * n)) & full;
      all_full = all_full && masks[i] == full;
    }
    if (all_full) return std::nullopt;
    SubsetTuple I = SubsetTuple::from_masks(n, masks);
    auto lam = underline_lambda(I);
    for (const auto& l : lam)
      if (!l.is_partition()) return std::nullopt;
    {
      std::lock_guard lock(memo_mu);
      if (auto it = memo.find(lam); it != memo.end()) return std::make_pair(std::move(I), it->second);
    }
    const Count f = f_sun(lam, n);
    std::lock_guard lock(memo_mu);
    memo.emplace(lam, f);
    return std::make_pair(std::move(I), f);
  };

  auto result = std::make_shared<TCandidates>();
  if (opts.parallel) {
    const std::size_t workers = std::max(1U, std::thread::hardware_concurrency());
    std::vector<std::future<std::vector<std::pair<SubsetTuple, Count>>>> jobs;
    for (std::size_t w = 0; w < workers; ++w) {
      jobs.push_back(std::async(std::launch::async, [&, w] {
        std::vector<std::pair<SubsetTuple, Count>> part;
        for (std::uint64_t code = w; code < total; code += workers)
          if (auto c = examine(code)) part.push_back(std::move(*c));
        return part;
      }));
    }
    for (auto& j : jobs)
      for (auto& c : j.get()) result->tuples.push_back(std::move(c));
  } else {
    for (std::uint64_t code = 0; code < total; ++code)
      if (auto c = examine(code)) result->tuples.push_back(std::move(*c));
  }
  std::sort(result->tuples.begin(), result->tuples.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  std::lock_guard lock(t_cache_mutex());
  return t_cache().try_emplace({n, m}, std::move(result)).first->second;
}

}  // namespace detail

// Tuples indexing the Horn-type inequalities: some |I_i| < n, every
// underline sequence a partition, and f of them equal to 1 (EqualOne) or
// nonzero (Nonzero). Sorted by total size, then flag by flag.
inline std::vector<SubsetTuple> generate_T(int n, int m, HornVariant variant, const GenerateOptions& opts = {}) {
  auto cands = detail::t_candidates(n, m, opts);
  std::vector<SubsetTuple> out;
  for (const auto& [I, f] : cands->tuples)
    if (variant == HornVariant::EqualOne ? f == 1 : f != 0) out.push_back(I);
  return out;
}

inline bool sizes_balance(const RationalTuple& t) {
  Rational odd = 0, even = 0;
  for (std::size_t i = 0; i < t.m(); ++i)
    for (const auto& v : t.lambdas()[i]) (i % 2 == 0 ? odd : even) += v;
  return odd == even;
}

inline bool in_cone(const RationalTuple& t, HornVariant variant, const GenerateOptions& opts = {}) {
  if (!sizes_balance(t)) return false;
  for (const auto& I : generate_T(t.n(), static_cast<int>(t.m()), variant, opts))
    if (!HornInequality{I}.holds(t)) return false;
  return true;
}

struct SaturationReport {
  std::vector<Count> values;  // f(r lambda) for r = 1..r_max
  bool passed = false;
};

inline SaturationReport saturation_report(const std::vector<IntSequence>& lambdas, int n, Part r_max,
                                          const ChainOptions& opts = {}) {
  SaturationReport rep;
  rep.values = stretched_table(ChainProblem{ChainKind::FSun, n, lambdas}, r_max, opts);
  const bool first = rep.values.front() != 0;
  rep.passed = std::all_of(rep.values.begin(), rep.values.end(), [&](Count c) { return (c != 0) == first; });
  return rep;
}

struct FactorizationReport {
  SubsetTuple tuple;
  std::vector<IntSequence> star, sharp;
  Count f = 0, f_star = 0, f_sharp = 0;
  bool passed = false;
};

// lambda* keeps the entries indexed by I_i, lambda# the rest.
inline std::pair<std::vector<IntSequence>, std::vector<IntSequence>> split_by_subsets(
    const std::vector<IntSequence>& lambdas, const SubsetTuple& I) {
  std::vector<IntSequence> star, sharp;
  for (std::size_t idx = 0; idx < I.m(); ++idx) {
    const auto lam = lambdas[idx].padded(static_cast<std::size_t>(I.n()));
    std::vector<Part> s, h;
    for (int j = 1; j <= I.n(); ++j) (I[idx].contains(j) ? s : h).push_back(lam[static_cast<std::size_t>(j - 1)]);
    star.emplace_back(std::move(s));
    sharp.emplace_back(std::move(h));
  }
  return {std::move(star), std::move(sharp)};
}

inline FactorizationReport factorization_check(const std::vector<IntSequence>& lambdas, int n, const SubsetTuple& I,
                                               const ChainOptions& opts = {}) {
  if (I.n() != n || I.m() != lambdas.size())
    fail(ErrorKind::InvalidInput, "subset tuple " + I.str() + " does not match the weight");
  const auto t = RationalTuple::from_integers(lambdas, n);
  const Rational slack = HornInequality{I}.slack(t);
  if (slack != 0)
    fail(ErrorKind::Precondition, "tuple " + I.str() + " is not on a wall: slack " + to_string(slack));
  const auto T = generate_T(n, static_cast<int>(I.m()), HornVariant::EqualOne);
  if (!std::binary_search(T.begin(), T.end(), I))
    fail(ErrorKind::Precondition, "tuple " + I.str() + " is not in T(n,m)");
  FactorizationReport rep;
  rep.tuple = I;
  std::tie(rep.star, rep.sharp) = split_by_subsets(lambdas, I);
  rep.f = f_sun(lambdas, n, opts);
  rep.f_star = f_sun(rep.star, n, opts);
  rep.f_sharp = f_sun(rep.sharp, n, opts);
  rep.passed = rep.f == checked_mul(rep.f_star, rep.f_sharp);
  return rep;
}

// Tuples of T(n,m) whose inequality is an equality at lambda (the all-empty
// tuple excluded).
inline std::vector<SubsetTuple> tight_tuples(const std::vector<IntSequence>& lambdas, int n,
                                             HornVariant variant = HornVariant::EqualOne) {
  const auto t = RationalTuple::from_integers(lambdas, n);
  std::vector<SubsetTuple> out;
  for (const auto& I : generate_T(n, static_cast<int>(lambdas.size()), variant)) {
    HornInequality h{I};
    if (!h.trivial_zero() && h.slack(t) == 0) out.push_back(I);
  }
  return out;
}

// Rotations by two flags and the reflection i -> 2 - i: the symmetries of the
// sun quiver that keep every arrow direction. Each entry p maps flag index
// idx (0-based) to p[idx].
inline std::vector<std::vector<std::size_t>> sun_symmetries(std::size_t m) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t shift = 0; shift < m; shift += 2) {
    for (bool reflect : {false, true}) {
      std::vector<std::size_t> p(m);
      for (std::size_t idx = 0; idx < m; ++idx) {
        const std::size_t base = reflect ? (m - idx) % m : idx;  // flag i -> 2 - i
        p[idx] = (base + shift) % m;
      }
      out.push_back(std::move(p));
    }
  }
  return out;
}

inline SubsetTuple permute_flags(const SubsetTuple& I, const std::vector<std::size_t>& p) {
  std::vector<Subset> out(I.m());
  for (std::size_t idx = 0; idx < I.m(); ++idx) out[p[idx]] = I[idx];
  return SubsetTuple(I.n(), std::move(out));
}

template <class Seq>
std::vector<Seq> permute_sequences(const std::vector<Seq>& seqs, const std::vector<std::size_t>& p) {
  std::vector<Seq> out(seqs.size());
  for (std::size_t idx = 0; idx < seqs.size(); ++idx) out[p[idx]] = seqs[idx];
  return out;
}

inline std::set<SubsetTuple> symmetry_orbit(const SubsetTuple& I) {
  std::set<SubsetTuple> out;
  for (const auto& p : sun_symmetries(I.m())) out.insert(permute_flags(I, p));
  return out;
}

inline std::set<SubsetTuple> symmetry_closure(const std::vector<SubsetTuple>& reps) {
  std::set<SubsetTuple> out;
  for (const auto& I : reps) {
    auto o = symmetry_orbit(I);
    out.insert(o.begin(), o.end());
  }
  return out;
}

// lambda(i)_n >= 0 written as a Horn-type inequality: (I_i = {n}, rest empty)
// for odd i, (I_i = {1..n-1}, rest full) for even i.
inline bool is_nonnegativity_inequality(const SubsetTuple& I) {
  const int n = I.n();
  for (std::size_t idx = 0; idx < I.m(); ++idx) {
    bool match = true;
    for (std::size_t q = 0; q < I.m() && match; ++q) {
      const Subset& s = I[q];
      if (idx % 2 == 0) {
        match = q == idx ? (s.size() == 1 && s.contains(n)) : s.empty();
      } else {
        match = q == idx ? (s.size() == n - 1 && !s.contains(n)) : s.is_full();
      }
    }
    if (match) return true;
  }
  return false;
}

// Inequalities of T(n,m) (EqualOne) that are not implied by the others
// together with the chamber inequalities lambda(i)_j >= lambda(i)_{j+1} and
// the size equality; nonnegativity of the last parts is dropped.
inline std::vector<SubsetTuple> regular_facets(int n, int m, const GenerateOptions& opts = {}) {
  const auto T = generate_T(n, m, HornVariant::EqualOne, opts);
  std::vector<SubsetTuple> rows;
  std::vector<std::vector<Rational>> vecs;
  for (const auto& I : T) {
    HornInequality h{I};
    if (h.trivial_zero()) continue;
    rows.push_back(I);
    auto a = h.coefficients();
    vecs.emplace_back(a.begin(), a.end());
  }
  const std::size_t dim = static_cast<std::size_t>(n) * static_cast<std::size_t>(m);
  std::vector<std::vector<Rational>> chamber;
  for (int idx = 0; idx < m; ++idx)
    for (int j = 0; j + 1 < n; ++j) {
      std::vector<Rational> c(dim, 0);
      c[static_cast<std::size_t>(idx * n + j + 1)] = 1;
      c[static_cast<std::size_t>(idx * n + j)] = -1;
      chamber.push_back(std::move(c));
    }
  std::vector<Rational> eq(dim, 0);
  for (int idx = 0; idx < m; ++idx)
    for (int j = 0; j < n; ++j) eq[static_cast<std::size_t>(idx * n + j)] = (idx % 2 == 0) ? 1 : -1;

  std::vector<SubsetTuple> out;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    std::vector<std::vector<Rational>> gens(chamber);
    for (std::size_t q = 0; q < rows.size(); ++q)
      if (q != k) gens.push_back(vecs[q]);
    // Redundant exactly when the row lies in the cone spanned by the rest.
    if (cone_contains(gens, {eq}, vecs[k])) continue;
    if (is_nonnegativity_inequality(rows[k])) continue;
    out.push_back(rows[k]);
  }
  return out;
}

}  // namespace glr
