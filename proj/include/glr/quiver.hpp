#pragma once

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "glr/count.hpp"
#include "glr/error.hpp"
#include "glr/generalized.hpp"
#include "glr/partitions.hpp"
#include "glr/subset_tuple.hpp"

namespace glr {

// Vertex (j, i): position j = 1..n along flag i = 1..2k; (n, i) is central.
struct Vertex {
  int j = 0;
  int i = 0;
  friend bool operator==(const Vertex&, const Vertex&) = default;
};

struct Arrow {
  std::size_t tail = 0;
  std::size_t head = 0;
};

// Central 2k-gon with alternating arrows, plus an A_n flag at each corner.
// Even flags point into the centre, odd flags point out of it.
class SunQuiver {
 public:
  SunQuiver(int n, int k) : n_(n), k_(k) {
    if (n < 1) fail(ErrorKind::InvalidInput, "flag length n must be positive");
    if (k < 2) fail(ErrorKind::UnsupportedShape, "sun quiver needs k >= 2, got k=" + std::to_string(k));
    for (int i = 1; i <= m(); ++i)
      for (int j = 1; j <= n; ++j) vertices_.push_back({j, i});
    for (int i = 1; i <= m(); ++i) {
      for (int j = 1; j < n; ++j) {
        if (i % 2 == 0)
          arrows_.push_back({index(j, i), index(j + 1, i)});
        else
          arrows_.push_back({index(j + 1, i), index(j, i)});
      }
    }
    for (int i = 2; i <= m(); i += 2) {
      arrows_.push_back({index(n, i), index(n, i - 1)});
      arrows_.push_back({index(n, i), index(n, i + 1)});
    }
  }

  int n() const noexcept { return n_; }
  int k() const noexcept { return k_; }
  int m() const noexcept { return 2 * k_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }

  // Flag numbers wrap: (n, 2k+1) is (n, 1).
  std::size_t index(int j, int i) const {
    if (j < 1 || j > n_) fail(ErrorKind::InvalidInput, "flag position " + std::to_string(j) + " outside 1.." + std::to_string(n_));
    const int w = ((i - 1) % m() + m()) % m();
    return static_cast<std::size_t>(w * n_ + (j - 1));
  }

  const Vertex& vertex(std::size_t idx) const { return vertices_.at(idx); }

  bool is_acyclic() const {
    std::vector<int> indeg(vertex_count(), 0);
    for (const auto& a : arrows_) ++indeg[a.head];
    std::vector<std::size_t> ready;
    for (std::size_t v = 0; v < indeg.size(); ++v)
      if (!indeg[v]) ready.push_back(v);
    std::size_t seen = 0;
    while (!ready.empty()) {
      const std::size_t v = ready.back();
      ready.pop_back();
      ++seen;
      for (const auto& a : arrows_)
        if (a.tail == v && --indeg[a.head] == 0) ready.push_back(a.head);
    }
    return seen == vertex_count();
  }

  friend bool operator==(const SunQuiver& a, const SunQuiver& b) {
    return a.n_ == b.n_ && a.k_ == b.k_;
  }

 private:
  int n_, k_;
  std::vector<Vertex> vertices_;
  std::vector<Arrow> arrows_;
};

inline SunQuiver build_sun_quiver(int n, int k) { return SunQuiver(n, k); }

// Dense integer function on the vertices of a sun quiver. Tag keeps
// dimension vectors and weights apart.
template <class Tag>
class VertexFunction {
 public:
  VertexFunction() = default;
  explicit VertexFunction(const SunQuiver& q)
      : n_(q.n()), m_(q.m()), values_(q.vertex_count(), 0) {}
  VertexFunction(const SunQuiver& q, std::vector<std::int64_t> values)
      : n_(q.n()), m_(q.m()), values_(std::move(values)) {
    if (values_.size() != q.vertex_count())
      fail(ErrorKind::InvalidInput, "vertex function has " + std::to_string(values_.size()) +
                                        " values, quiver has " + std::to_string(q.vertex_count()) +
                                        " vertices");
  }

  int n() const noexcept { return n_; }
  int m() const noexcept { return m_; }
  const std::vector<std::int64_t>& values() const noexcept { return values_; }
  std::vector<std::int64_t>& values() noexcept { return values_; }

  std::int64_t& operator()(int j, int i) { return values_[slot(j, i)]; }
  std::int64_t operator()(int j, int i) const { return values_[slot(j, i)]; }

  bool fits(const SunQuiver& q) const { return n_ == q.n() && m_ == q.m(); }
  bool is_zero() const {
    for (auto v : values_)
      if (v) return false;
    return true;
  }

  friend bool operator==(const VertexFunction&, const VertexFunction&) = default;

 private:
  std::size_t slot(int j, int i) const {
    if (j < 1 || j > n_) fail(ErrorKind::InvalidInput, "flag position " + std::to_string(j) + " out of range");
    const int w = ((i - 1) % m_ + m_) % m_;
    return static_cast<std::size_t>(w * n_ + (j - 1));
  }

  int n_ = 0, m_ = 0;
  std::vector<std::int64_t> values_;
};

struct DimensionTag {};
struct WeightTag {};
using DimensionVector = VertexFunction<DimensionTag>;
using Weight = VertexFunction<WeightTag>;

namespace detail {
template <class A, class B>
void require_same_quiver(const SunQuiver& q, const A& a, const B& b) {
  if (!a.fits(q) || !b.fits(q))
    fail(ErrorKind::InvalidInput, "vector is not defined on this quiver");
}
inline int sign(int i) { return i % 2 == 0 ? 1 : -1; }
}  // namespace detail

// <a,b> = sum_x a(x) b(x) - sum_arrows a(tail) b(head).
inline std::int64_t euler_form(const SunQuiver& q, const DimensionVector& a, const DimensionVector& b) {
  detail::require_same_quiver(q, a, b);
  std::int64_t s = 0;
  for (std::size_t x = 0; x < q.vertex_count(); ++x) s += a.values()[x] * b.values()[x];
  for (const auto& arr : q.arrows()) s -= a.values()[arr.tail] * b.values()[arr.head];
  return s;
}

inline DimensionVector simple_root(const SunQuiver& q, int j, int i) {
  DimensionVector e(q);
  e(j, i) = 1;
  return e;
}

// beta(j,i) = j.
inline DimensionVector standard_beta(const SunQuiver& q) {
  DimensionVector b(q);
  for (const auto& v : q.vertices()) b(v.j, v.i) = v.j;
  return b;
}

inline Weight weight_sigma1(const SunQuiver& q, const std::vector<IntSequence>& lambdas) {
  if (lambdas.size() != static_cast<std::size_t>(q.m()))
    fail(ErrorKind::InvalidInput, "sigma_1 needs " + std::to_string(q.m()) + " sequences, got " +
                                      std::to_string(lambdas.size()));
  const int n = q.n();
  Weight s(q);
  for (int i = 1; i <= q.m(); ++i) {
    const auto lam = lambdas[static_cast<std::size_t>(i - 1)].padded(static_cast<std::size_t>(n));
    for (int j = 1; j < n; ++j) s(j, i) = detail::sign(i) * (lam[j - 1] - lam[j]);
    s(n, i) = detail::sign(i) * lam[n - 1];
  }
  return s;
}

inline std::int64_t sigma_apply(const Weight& sigma, const DimensionVector& a) {
  if (sigma.n() != a.n() || sigma.m() != a.m())
    fail(ErrorKind::InvalidInput, "weight and dimension vector live on different quivers");
  std::int64_t s = 0;
  for (std::size_t x = 0; x < a.values().size(); ++x) s += sigma.values()[x] * a.values()[x];
  return s;
}

// Partitions phi(i)_j = sum_{l >= j} (-1)^i sigma(l,i), or nothing when a sign
// condition fails.
inline std::optional<std::vector<IntSequence>> weight_partitions(const SunQuiver& q, const Weight& sigma) {
  if (!sigma.fits(q)) fail(ErrorKind::InvalidInput, "weight is not defined on this quiver");
  std::vector<IntSequence> phi;
  const int n = q.n();
  for (int i = 1; i <= q.m(); ++i) {
    std::vector<Part> parts(static_cast<std::size_t>(n));
    Part acc = 0;
    for (int j = n; j >= 1; --j) {
      const Part v = detail::sign(i) * sigma(j, i);
      if (v < 0) return std::nullopt;
      acc += v;
      parts[static_cast<std::size_t>(j - 1)] = acc;
    }
    phi.emplace_back(std::move(parts));
  }
  return phi;
}

inline Count dim_si_sun(const SunQuiver& q, const Weight& sigma, const ChainOptions& opts = {}) {
  auto phi = weight_partitions(q, sigma);
  if (!phi) return 0;
  return f_sun(ChainProblem{ChainKind::FSun, q.n(), std::move(*phi)}, opts);
}

inline DimensionVector beta_from_subsets(const SubsetTuple& I, const SunQuiver& q) {
  if (I.n() != q.n() || static_cast<int>(I.m()) != q.m())
    fail(ErrorKind::InvalidInput, "subset tuple " + I.str() + " does not match the quiver");
  DimensionVector b(q);
  for (int i = 1; i <= q.m(); ++i) {
    const Subset& s = I.flag(i);
    std::int64_t c = 0;
    for (int j = 1; j <= q.n(); ++j) {
      if (s.contains(j)) ++c;
      b(j, i) = c;
    }
  }
  return b;
}

inline SubsetTuple jump_sets(const DimensionVector& b) {
  std::vector<Subset> out;
  for (int i = 1; i <= b.m(); ++i) {
    std::vector<int> elems;
    std::int64_t prev = 0;
    for (int j = 1; j <= b.n(); ++j) {
      const std::int64_t d = b(j, i) - prev;
      if (d < 0 || d > 1)
        fail(ErrorKind::InvalidInput, "flag " + std::to_string(i) + " jumps by " + std::to_string(d) +
                                          " at position " + std::to_string(j));
      if (d == 1) elems.push_back(j);
      prev = b(j, i);
    }
    out.emplace_back(b.n(), std::move(elems));
  }
  return SubsetTuple(b.n(), std::move(out));
}

// sigma_I = <beta_I, .> written out flag by flag.
inline Weight sigma_from_subsets(const SubsetTuple& I, const SunQuiver& q) {
  if (I.n() != q.n() || static_cast<int>(I.m()) != q.m())
    fail(ErrorKind::InvalidInput, "subset tuple " + I.str() + " does not match the quiver");
  const int n = q.n();
  Weight s(q);
  for (int i = 1; i <= q.m(); ++i) {
    const Subset& cur = I.flag(i);
    if (i % 2 == 0) {
      for (int l = 1; l < n; ++l) s(l, i) = cur.contains(l) ? 1 : 0;
      s(n, i) = cur.contains(n) ? 1 : 0;
    } else {
      for (int l = 1; l < n; ++l) s(l, i) = cur.contains(l + 1) ? -1 : 0;
      s(n, i) = cur.size() - I.flag(i - 1).size() - I.flag(i + 1).size();
    }
  }
  return s;
}

// Connected support and <e_x,b> + <b,e_x> <= 0 everywhere. Sufficient for b
// to be a Schur root, far from necessary (simple roots fail it).
inline bool is_fundamental_schur(const SunQuiver& q, const DimensionVector& b) {
  if (!b.fits(q)) fail(ErrorKind::InvalidInput, "dimension vector is not defined on this quiver");
  const auto& v = b.values();
  const std::size_t N = v.size();
  std::size_t start = N;
  for (std::size_t x = 0; x < N; ++x) {
    if (v[x] < 0) return false;
    if (v[x] > 0 && start == N) start = x;
  }
  if (start == N) return false;

  std::vector<char> seen(N, 0);
  std::vector<std::size_t> stack{start};
  seen[start] = 1;
  while (!stack.empty()) {
    const std::size_t x = stack.back();
    stack.pop_back();
    for (const auto& a : q.arrows()) {
      for (auto [from, to] : {std::pair{a.tail, a.head}, std::pair{a.head, a.tail}}) {
        if (from == x && v[to] > 0 && !seen[to]) {
          seen[to] = 1;
          stack.push_back(to);
        }
      }
    }
  }
  for (std::size_t x = 0; x < N; ++x)
    if (v[x] > 0 && !seen[x]) return false;

  std::vector<std::int64_t> tau(N, 0);
  for (std::size_t x = 0; x < N; ++x) tau[x] = 2 * v[x];
  for (const auto& a : q.arrows()) {
    tau[a.tail] -= v[a.head];
    tau[a.head] -= v[a.tail];
  }
  for (auto t : tau)
    if (t > 0) return false;
  return true;
}

}  // namespace glr
