#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "glr/count.hpp"
#include "glr/lr.hpp"
#include "glr/partitions.hpp"

namespace glr {

enum class ChainKind { FSun, F1, F2 };

inline std::string_view chain_kind_name(ChainKind k) {
  switch (k) {
    case ChainKind::FSun: return "f_sun";
    case ChainKind::F1: return "f1";
    case ChainKind::F2: return "f2";
  }
  return "?";
}

struct ChainProblem {
  ChainKind kind = ChainKind::FSun;
  int n = 1;
  std::vector<IntSequence> lambdas;

  std::size_t m() const noexcept { return lambdas.size(); }
};

// Called with (alpha, beta, nu, c^nu_{alpha,beta}) for every LR factor the
// chain sum evaluates. Must be thread safe when ChainOptions::parallel is set.
using FactorObserver =
    std::function<void(const Partition&, const Partition&, const Partition&, Count)>;

using LrOracle = std::function<Count(const Partition&, const Partition&, const Partition&)>;

struct ChainOptions {
  bool parallel = false;
  // Cap on visited chain states (partial chains kept alive); 0 means no cap.
  std::uint64_t budget = 0;
  FactorObserver on_factor;
  // Replaces lr_coefficient(alpha, beta, nu) when set.
  LrOracle oracle;
};

inline void validate(const ChainProblem& p) {
  if (p.n < 1) fail(ErrorKind::InvalidInput, "n must be positive");
  const std::size_t m = p.m();
  switch (p.kind) {
    case ChainKind::FSun:
      if (m < 4 || m % 2 != 0)
        fail(ErrorKind::UnsupportedShape,
             "f_sun needs an even number m >= 4 of sequences, got m=" + std::to_string(m));
      break;
    case ChainKind::F1:
      if (m < 4)
        fail(ErrorKind::UnsupportedShape, "f1 needs m >= 4, got m=" + std::to_string(m));
      break;
    case ChainKind::F2:
      if (m < 3)
        fail(ErrorKind::UnsupportedShape, "f2 needs m >= 3, got m=" + std::to_string(m));
      break;
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (p.lambdas[i].length() > static_cast<std::size_t>(p.n))
      fail(ErrorKind::InvalidInput, "lambda(" + std::to_string(i + 1) + ") = " +
                                        p.lambdas[i].str() + " has more than n=" +
                                        std::to_string(p.n) + " parts");
  }
}

namespace detail {

// One link alpha -> beta of a chain, weighted by c^outer_{alpha,beta} with
// beta inside box and |beta| = |outer| - |alpha|.
struct ChainStep {
  Partition outer;
  Partition box;
};

using SparseVector = std::map<Partition, Count>;

class ChainEngine {
 public:
  ChainEngine(std::vector<ChainStep> steps, const ChainOptions& opts)
      : steps_(std::move(steps)), opts_(opts), rows_(steps_.size()),
        locks_(steps_.size()) {}

  Count factor(const Partition& a, const Partition& b, const Partition& nu) const {
    const Count c = opts_.oracle ? opts_.oracle(a, b, nu) : lr_coefficient(a, b, nu);
    if (opts_.on_factor) opts_.on_factor(a, b, nu, c);
    return c;
  }

  // Nonzero targets of step s from alpha, computed once per (step, alpha).
  const std::vector<std::pair<Partition, Count>>& row(std::size_t s, const Partition& alpha) {
    {
      std::shared_lock lock(locks_[s]);
      if (auto it = rows_[s].find(alpha); it != rows_[s].end()) return *it->second;
    }
    auto out = std::make_unique<std::vector<std::pair<Partition, Count>>>();
    const ChainStep& st = steps_[s];
    for_each_partition_in(st.box, st.outer.size() - alpha.size(), [&](const Partition& beta) {
      if (Count c = factor(alpha, beta, st.outer)) out->emplace_back(beta, c);
    });
    std::unique_lock lock(locks_[s]);
    return *rows_[s].try_emplace(alpha, std::move(out)).first->second;
  }

  SparseVector propagate(const SparseVector& v, std::size_t s) {
    SparseVector next;
    for (const auto& [alpha, w] : v) {
      for (const auto& [beta, c] : row(s, alpha)) {
        Count& slot = next[beta];
        slot = checked_add(slot, checked_mul(w, c));
      }
    }
    charge(next.size());
    return next;
  }

  SparseVector run(SparseVector v) {
    charge(v.size());
    for (std::size_t s = 0; s < steps_.size() && !v.empty(); ++s) v = propagate(v, s);
    return v;
  }

  void charge(std::size_t states) {
    if (!opts_.budget) return;
    const auto used = visited_.fetch_add(states) + states;
    if (used > opts_.budget)
      fail(ErrorKind::BudgetExceeded,
           "chain enumeration exceeded the budget of " + std::to_string(opts_.budget) +
               " states");
  }

 private:
  std::vector<ChainStep> steps_;
  const ChainOptions& opts_;
  std::vector<std::unordered_map<Partition, std::unique_ptr<std::vector<std::pair<Partition, Count>>>>> rows_;
  std::vector<std::shared_mutex> locks_;
  std::atomic<std::uint64_t> visited_{0};
};

inline std::vector<Partition> as_partitions(const std::vector<IntSequence>& seqs) {
  std::vector<Partition> out;
  out.reserve(seqs.size());
  for (const auto& s : seqs) out.emplace_back(s);
  return out;
}

inline bool all_partitions(const std::vector<IntSequence>& seqs) {
  return std::all_of(seqs.begin(), seqs.end(),
                     [](const IntSequence& s) { return s.is_partition(); });
}

}  // namespace detail

// Cyclic chain sum: sum over alpha(1..m) of prod_i c^{lambda(i)}_{alpha(i),alpha(i+1)}
// with alpha(m+1) = alpha(1).
inline Count f_sun(const ChainProblem& p, const ChainOptions& opts = {}) {
  ChainProblem q = p;
  q.kind = ChainKind::FSun;
  validate(q);
  if (!detail::all_partitions(q.lambdas)) return 0;
  const auto lam = detail::as_partitions(q.lambdas);
  const std::size_t m = lam.size();
  Part odd = 0, even = 0;
  for (std::size_t i = 0; i < m; ++i) (i % 2 == 0 ? odd : even) += lam[i].size();
  if (odd != even) return 0;

  // Step i (0-based) carries alpha(i+1) -> alpha(i+2) through lambda(i+1).
  std::vector<detail::ChainStep> steps;
  for (std::size_t i = 0; i + 1 < m; ++i)
    steps.push_back({lam[i], meet(lam[i], lam[i + 1])});
  detail::ChainEngine engine(std::move(steps), opts);

  const Partition box1 = meet(lam[m - 1], lam[0]);
  const std::vector<Partition> anchors = all_partitions_in(box1);

  auto close = [&](const Partition& a1) {
    detail::SparseVector v{{a1, 1}};
    v = engine.run(std::move(v));
    Count sum = 0;
    for (const auto& [am, w] : v)
      if (Count c = engine.factor(am, a1, lam[m - 1])) sum = checked_add(sum, checked_mul(w, c));
    return sum;
  };

  std::vector<Count> per_anchor(anchors.size(), 0);
  if (opts.parallel && anchors.size() > 1) {
    const std::size_t workers =
        std::min<std::size_t>(anchors.size(), std::max(1U, std::thread::hardware_concurrency()));
    std::atomic<std::size_t> next{0};
    std::vector<std::future<void>> jobs;
    for (std::size_t w = 0; w < workers; ++w) {
      jobs.push_back(std::async(std::launch::async, [&] {
        for (std::size_t k; (k = next.fetch_add(1)) < anchors.size();)
          per_anchor[k] = close(anchors[k]);
      }));
    }
    for (auto& j : jobs) j.get();
  } else {
    for (std::size_t k = 0; k < anchors.size(); ++k) per_anchor[k] = close(anchors[k]);
  }
  Count total = 0;
  for (Count c : per_anchor) total = checked_add(total, c);
  return total;
}

inline Count f_sun(const std::vector<IntSequence>& lambdas, int n, const ChainOptions& opts = {}) {
  return f_sun(ChainProblem{ChainKind::FSun, n, lambdas}, opts);
}

// sum c^{alpha(1)}_{lambda(1),lambda(2)} c^{lambda(3)}_{alpha(1),alpha(2)} ...
//     c^{lambda(m-2)}_{alpha(m-4),alpha(m-3)} c^{alpha(m-3)}_{lambda(m-1),lambda(m)}
inline Count f1(const ChainProblem& p, const ChainOptions& opts = {}) {
  ChainProblem q = p;
  q.kind = ChainKind::F1;
  validate(q);
  if (!detail::all_partitions(q.lambdas)) return 0;
  const auto lam = detail::as_partitions(q.lambdas);
  const std::size_t m = lam.size();
  const auto n = static_cast<std::size_t>(q.n);

  // alpha(k), 1 <= k <= m-3, lives in lambda(k+2) whenever that factor exists.
  Partition box1 = rectangle(lam[0][0] + lam[1][0], n);
  if (m >= 5) box1 = meet(box1, lam[2]);
  std::vector<detail::ChainStep> steps;
  for (std::size_t i = 3; i + 2 <= m; ++i) {  // factor c^{lambda(i)}_{alpha(i-2),alpha(i-1)}
    Partition box = lam[i - 1];
    if (i + 1 <= m - 2) box = meet(box, lam[i]);
    steps.push_back({lam[i - 1], box});
  }
  detail::ChainEngine engine(std::move(steps), opts);
  detail::SparseVector v;
  for_each_partition_in(box1, lam[0].size() + lam[1].size(), [&](const Partition& a1) {
    if (Count c = engine.factor(lam[0], lam[1], a1)) v[a1] = c;
  });
  v = engine.run(std::move(v));
  Count total = 0;
  for (const auto& [a, w] : v)
    if (Count c = engine.factor(lam[m - 2], lam[m - 1], a))
      total = checked_add(total, checked_mul(w, c));
  return total;
}

// sum c^{lambda(2)}_{lambda(1),alpha(1)} c^{lambda(3)}_{alpha(1),alpha(2)} ...
//     c^{lambda(m-1)}_{alpha(m-3),lambda(m)};  m = 3 gives c^{lambda(2)}_{lambda(1),lambda(3)}.
inline Count f2(const ChainProblem& p, const ChainOptions& opts = {}) {
  ChainProblem q = p;
  q.kind = ChainKind::F2;
  validate(q);
  if (!detail::all_partitions(q.lambdas)) return 0;
  const auto lam = detail::as_partitions(q.lambdas);
  const std::size_t m = lam.size();
  if (m == 3) {
    detail::ChainEngine engine({}, opts);
    return engine.factor(lam[0], lam[2], lam[1]);
  }
  // alpha(k) sits in lambda(k+1) and lambda(k+2).
  std::vector<detail::ChainStep> steps;
  for (std::size_t i = 3; i + 2 <= m; ++i)  // c^{lambda(i)}_{alpha(i-2),alpha(i-1)}
    steps.push_back({lam[i - 1], meet(lam[i - 1], lam[i])});
  detail::ChainEngine engine(std::move(steps), opts);
  detail::SparseVector v;
  for_each_partition_in(meet(lam[1], lam[2]), lam[1].size() - lam[0].size(),
                        [&](const Partition& a1) {
                          if (Count c = engine.factor(lam[0], a1, lam[1])) v[a1] = c;
                        });
  v = engine.run(std::move(v));
  Count total = 0;
  for (const auto& [a, w] : v)
    if (Count c = engine.factor(a, lam[m - 1], lam[m - 2]))
      total = checked_add(total, checked_mul(w, c));
  return total;
}

inline Count evaluate(const ChainProblem& p, const ChainOptions& opts = {}) {
  switch (p.kind) {
    case ChainKind::FSun: return f_sun(p, opts);
    case ChainKind::F1: return f1(p, opts);
    case ChainKind::F2: return f2(p, opts);
  }
  return 0;
}

// Level-1 weight given by its jumping numbers: lambda(i) = (1^{j_i}), stretched
// by N to (N^{j_i}).
struct LevelOneSpec {
  std::vector<int> jumps;
  int n = 1;

  std::size_t m() const noexcept { return jumps.size(); }

  // J_i = j_i - j_{i+1} + j_{i+2}, indices cyclic.
  std::vector<int> J() const {
    const std::size_t m = jumps.size();
    std::vector<int> out(m);
    for (std::size_t i = 0; i < m; ++i)
      out[i] = jumps[i] - jumps[(i + 1) % m] + jumps[(i + 2) % m];
    return out;
  }

  std::vector<IntSequence> lambdas(Part N) const {
    std::vector<IntSequence> out;
    for (int j : jumps) out.push_back(rectangle(N, static_cast<std::size_t>(j)));
    return out;
  }
};

inline void validate(const LevelOneSpec& spec) {
  if (spec.m() < 4 || spec.m() % 2 != 0)
    fail(ErrorKind::UnsupportedShape,
         "level-1 weights need an even number m >= 4 of flags, got m=" +
             std::to_string(spec.m()));
  for (int j : spec.jumps)
    if (j < 0 || j > spec.n)
      fail(ErrorKind::InvalidInput,
           "jumping number " + std::to_string(j) + " outside 0.." + std::to_string(spec.n));
}

// C(N + s, N) with s = min{j_i, J_i} when the weight is effective, else 0.
inline Count level1_f(const LevelOneSpec& spec, Part N) {
  validate(spec);
  if (N <= 0) fail(ErrorKind::InvalidInput, "stretch factor must be positive");
  Part odd = 0, even = 0;
  for (std::size_t i = 0; i < spec.m(); ++i) (i % 2 == 0 ? odd : even) += spec.jumps[i];
  if (odd != even) return 0;
  const auto J = spec.J();
  if (std::any_of(J.begin(), J.end(), [](int x) { return x < 0; })) return 0;
  const int s = std::min(*std::min_element(spec.jumps.begin(), spec.jumps.end()),
                         *std::min_element(J.begin(), J.end()));
  return binomial(N + s, N);
}

// [f(1*lambda), ..., f(N_max*lambda)], each entry evaluated from scratch.
inline std::vector<Count> stretched_table(const ChainProblem& p, Part N_max,
                                          const ChainOptions& opts = {}) {
  if (N_max <= 0) fail(ErrorKind::InvalidInput, "N_max must be positive");
  validate(p);
  std::vector<Count> out;
  for (Part N = 1; N <= N_max; ++N) {
    ChainProblem q = p;
    for (auto& l : q.lambdas) l = stretch(l, N);
    out.push_back(evaluate(q, opts));
  }
  return out;
}

}  // namespace glr
