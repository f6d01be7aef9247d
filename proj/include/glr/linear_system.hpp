#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "glr/error.hpp"
#include "glr/rational.hpp"

namespace glr {

// a . x <= b
struct LinearRow {
  std::vector<std::int64_t> a;
  Rational b;
  std::string label;
};

// System A x <= b over free real variables. Equalities are stored as two
// opposite rows.
class LinearSystem {
 public:
  LinearSystem() = default;
  explicit LinearSystem(std::vector<std::string> variables) : names_(std::move(variables)) {}

  std::size_t add_variable(std::string name) {
    names_.push_back(std::move(name));
    for (auto& r : rows_) r.a.push_back(0);
    return names_.size() - 1;
  }

  std::size_t variable_count() const noexcept { return names_.size(); }
  const std::vector<std::string>& variables() const noexcept { return names_; }
  const std::vector<LinearRow>& rows() const noexcept { return rows_; }

  using Terms = std::vector<std::pair<std::size_t, std::int64_t>>;

  void add_le(const Terms& terms, Rational b, std::string label) {
    std::vector<std::int64_t> a(names_.size(), 0);
    for (auto [v, c] : terms) {
      if (v >= a.size()) fail(ErrorKind::InvalidInput, "row refers to unknown variable");
      a[v] += c;
    }
    rows_.push_back({std::move(a), std::move(b), std::move(label)});
  }

  void add_ge(const Terms& terms, const Rational& b, std::string label) {
    Terms neg;
    for (auto [v, c] : terms) neg.emplace_back(v, -c);
    add_le(neg, -b, std::move(label));
  }

  void add_eq(const Terms& terms, const Rational& b, const std::string& label) {
    add_le(terms, b, label + ":le");
    add_ge(terms, b, label + ":ge");
  }

  bool unit_coefficients() const {
    for (const auto& r : rows_)
      for (auto c : r.a)
        if (c < -1 || c > 1) return false;
    return true;
  }

  bool satisfied_by(const std::vector<Rational>& x) const {
    if (x.size() != names_.size()) return false;
    for (const auto& r : rows_) {
      Rational s = 0;
      for (std::size_t v = 0; v < x.size(); ++v)
        if (r.a[v]) s += r.a[v] * x[v];
      if (s > r.b) return false;
    }
    return true;
  }

 private:
  std::vector<std::string> names_;
  std::vector<LinearRow> rows_;
};

namespace detail {

using RVec = std::vector<Rational>;

struct FmRow {
  RVec a;
  Rational b;
  std::vector<std::uint64_t> history;  // original rows combined into this one
};

inline std::size_t popcount(const std::vector<std::uint64_t>& bits) {
  std::size_t c = 0;
  for (auto w : bits) c += static_cast<std::size_t>(__builtin_popcountll(w));
  return c;
}

// Scale so that the first nonzero coefficient is +-1; zero rows untouched.
inline void normalize_row(RVec& a, Rational& b) {
  for (const auto& c : a) {
    if (c != 0) {
      const Rational s = abs(c);
      if (s != 1) {
        for (auto& x : a) x /= s;
        b /= s;
      }
      return;
    }
  }
}

inline bool is_zero(const RVec& a) {
  return std::all_of(a.begin(), a.end(), [](const Rational& c) { return c == 0; });
}

struct Reduced {
  bool infeasible = false;
  std::vector<std::pair<RVec, Rational>> inequalities;
  std::size_t eliminated = 0;
};

// Finds rows whose negation is also present (equalities), solves them by
// Gaussian elimination and substitutes into the remaining inequalities.
inline Reduced eliminate_equalities(const LinearSystem& s) {
  const std::size_t V = s.variable_count();
  std::map<std::vector<std::int64_t>, std::vector<std::size_t>> by_coeffs;
  for (std::size_t r = 0; r < s.rows().size(); ++r) by_coeffs[s.rows()[r].a].push_back(r);

  std::vector<char> used(s.rows().size(), 0);
  std::vector<std::pair<RVec, Rational>> eqs, ineqs;
  for (std::size_t r = 0; r < s.rows().size(); ++r) {
    if (used[r]) continue;
    const auto& row = s.rows()[r];
    std::vector<std::int64_t> neg(row.a);
    for (auto& c : neg) c = -c;
    bool paired = false;
    if (auto it = by_coeffs.find(neg); it != by_coeffs.end() && neg != row.a) {
      for (std::size_t q : it->second) {
        if (!used[q] && s.rows()[q].b == -row.b) {
          used[q] = 1;
          paired = true;
          break;
        }
      }
    }
    used[r] = 1;
    RVec a(row.a.begin(), row.a.end());
    (paired ? eqs : ineqs).emplace_back(std::move(a), row.b);
  }

  Reduced out;
  for (std::size_t k = 0; k < eqs.size(); ++k) {
    auto& [ea, eb] = eqs[k];
    std::size_t p = V;
    for (std::size_t v = 0; v < V; ++v)
      if (ea[v] != 0) {
        p = v;
        break;
      }
    if (p == V) {
      if (eb != 0) {
        out.infeasible = true;
        return out;
      }
      continue;
    }
    const Rational piv = ea[p];
    for (auto& x : ea) x /= piv;
    eb /= piv;
    auto substitute = [&](RVec& a, Rational& b) {
      if (a[p] == 0) return;
      const Rational f = a[p];
      for (std::size_t v = 0; v < V; ++v)
        if (ea[v] != 0) a[v] -= f * ea[v];
      b -= f * eb;
    };
    for (std::size_t q = k + 1; q < eqs.size(); ++q) substitute(eqs[q].first, eqs[q].second);
    for (auto& [a, b] : ineqs) substitute(a, b);
    ++out.eliminated;
  }
  for (auto& [a, b] : ineqs) {
    if (is_zero(a)) {
      if (b < 0) {
        out.infeasible = true;
        return out;
      }
      continue;
    }
    out.inequalities.emplace_back(std::move(a), std::move(b));
  }
  return out;
}

}  // namespace detail

struct FmStats {
  std::size_t equalities_eliminated = 0;
  std::size_t variables_eliminated = 0;
  std::size_t peak_rows = 0;
};

// Exact Fourier-Motzkin feasibility. Equalities are removed first; then each
// elimination keeps rows primitive, drops duplicates (keeping the tightest
// bound) and discards combinations failing Chernikov's history test.
inline bool fm_feasible(const LinearSystem& s, FmStats* stats = nullptr) {
  auto reduced = detail::eliminate_equalities(s);
  if (stats) stats->equalities_eliminated = reduced.eliminated;
  if (reduced.infeasible) return false;
  const std::size_t V = s.variable_count();
  const std::size_t words = (reduced.inequalities.size() + 63) / 64;

  std::vector<detail::FmRow> rows;
  for (std::size_t r = 0; r < reduced.inequalities.size(); ++r) {
    auto& [a, b] = reduced.inequalities[r];
    detail::FmRow row{std::move(a), std::move(b), std::vector<std::uint64_t>(words, 0)};
    row.history[r / 64] |= std::uint64_t{1} << (r % 64);
    detail::normalize_row(row.a, row.b);
    rows.push_back(std::move(row));
  }

  auto dedup = [](std::vector<detail::FmRow>& rs) {
    std::map<detail::RVec, std::size_t> seen;
    std::vector<detail::FmRow> out;
    for (auto& r : rs) {
      auto [it, fresh] = seen.try_emplace(r.a, out.size());
      if (fresh) {
        out.push_back(std::move(r));
      } else if (r.b < out[it->second].b) {
        out[it->second] = std::move(r);
      }
    }
    rs = std::move(out);
  };
  dedup(rows);

  std::vector<char> alive(V, 0);
  for (const auto& r : rows)
    for (std::size_t v = 0; v < V; ++v)
      if (r.a[v] != 0) alive[v] = 1;

  std::size_t steps = 0;
  std::size_t peak = rows.size();
  while (true) {
    // Cheapest variable to eliminate: fewest new rows.
    std::size_t best = V;
    long long best_cost = 0;
    for (std::size_t v = 0; v < V; ++v) {
      if (!alive[v]) continue;
      long long pos = 0, neg = 0;
      for (const auto& r : rows) {
        if (r.a[v] > 0) ++pos;
        else if (r.a[v] < 0) ++neg;
      }
      const long long cost = pos * neg - pos - neg;
      if (best == V || cost < best_cost) {
        best = v;
        best_cost = cost;
      }
    }
    if (best == V) break;

    std::vector<const detail::FmRow*> pos, neg;
    std::vector<detail::FmRow> next;
    for (auto& r : rows) {
      if (r.a[best] > 0) pos.push_back(&r);
      else if (r.a[best] < 0) neg.push_back(&r);
      else next.push_back(r);
    }
    ++steps;
    for (const auto* p : pos) {
      for (const auto* q : neg) {
        std::vector<std::uint64_t> hist(words);
        for (std::size_t w = 0; w < words; ++w) hist[w] = p->history[w] | q->history[w];
        if (detail::popcount(hist) > steps + 1) continue;
        const Rational fp = 1 / p->a[best], fq = -1 / q->a[best];
        detail::FmRow c{detail::RVec(V), fp * p->b + fq * q->b, std::move(hist)};
        for (std::size_t v = 0; v < V; ++v)
          if (p->a[v] != 0 || q->a[v] != 0) c.a[v] = fp * p->a[v] + fq * q->a[v];
        c.a[best] = 0;
        if (detail::is_zero(c.a)) {
          if (c.b < 0) {
            if (stats) {
              stats->variables_eliminated = steps;
              stats->peak_rows = std::max(peak, next.size());
            }
            return false;
          }
          continue;
        }
        detail::normalize_row(c.a, c.b);
        next.push_back(std::move(c));
      }
    }
    dedup(next);
    rows = std::move(next);
    peak = std::max(peak, rows.size());
    alive[best] = 0;
  }
  if (stats) {
    stats->variables_eliminated = steps;
    stats->peak_rows = peak;
  }
  return true;
}

struct SimplexResult {
  bool feasible = false;
  std::vector<Rational> witness;  // a point of the system when feasible
  std::size_t pivots = 0;
};

namespace detail {

// Phase I on a tableau [A | rhs] with rhs >= 0 and a starting basis in which
// every column at index >= first_artificial is artificial. Minimises the sum
// of artificials with Bland's rule; returns true when it reaches zero.
inline bool phase_one(std::vector<std::vector<Rational>>& T, std::vector<std::size_t>& basis,
                      std::size_t first_artificial, std::size_t* pivots) {
  const std::size_t R = T.size();
  if (R == 0) return true;
  const std::size_t C = T[0].size() - 1;
  std::vector<Rational> z(C + 1);
  for (std::size_t c = first_artificial; c < C; ++c) z[c] = 1;
  for (std::size_t r = 0; r < R; ++r)
    if (basis[r] >= first_artificial)
      for (std::size_t c = 0; c <= C; ++c) z[c] -= T[r][c];

  std::vector<std::size_t> nz;  // nonzero columns of the pivot row
  while (true) {
    std::size_t enter = C;
    for (std::size_t c = 0; c < C; ++c)
      if (z[c] < 0) {
        enter = c;
        break;
      }
    if (enter == C) break;
    std::size_t leave = R;
    Rational best;
    for (std::size_t r = 0; r < R; ++r) {
      if (T[r][enter] <= 0) continue;
      Rational ratio = T[r][C] / T[r][enter];
      if (leave == R || ratio < best || (ratio == best && basis[r] < basis[leave])) {
        leave = r;
        best = ratio;
      }
    }
    if (leave == R) break;  // cannot happen: the phase-I objective is bounded below
    const Rational piv = T[leave][enter];
    nz.clear();
    for (std::size_t c = 0; c <= C; ++c)
      if (T[leave][c] != 0) {
        if (piv != 1) T[leave][c] /= piv;
        nz.push_back(c);
      }
    auto eliminate = [&](std::vector<Rational>& row) {
      const Rational f = row[enter];
      for (std::size_t c : nz) row[c] -= f * T[leave][c];
    };
    for (std::size_t r = 0; r < R; ++r)
      if (r != leave && T[r][enter] != 0) eliminate(T[r]);
    if (z[enter] != 0) eliminate(z);
    basis[leave] = enter;
    if (pivots) ++*pivots;
  }
  // The objective value is -z[C].
  return z[C] == 0;
}

}  // namespace detail

// Exact simplex feasibility for A x <= b. Free variables are split as
// x = xp - xm; rows with negative right-hand side get artificials.
inline SimplexResult simplex_feasible(const LinearSystem& s) {
  const std::size_t V = s.variable_count();
  const std::size_t R = s.rows().size();
  std::size_t A = 0;
  for (const auto& row : s.rows())
    if (row.b < 0) ++A;
  const std::size_t C = 2 * V + R + A;  // xp, xm, slack, artificial

  std::vector<std::vector<Rational>> T(R, std::vector<Rational>(C + 1));
  std::vector<std::size_t> basis(R);
  std::size_t next_art = 0;
  for (std::size_t r = 0; r < R; ++r) {
    const auto& row = s.rows()[r];
    const bool flip = row.b < 0;
    const int sg = flip ? -1 : 1;
    for (std::size_t v = 0; v < V; ++v) {
      T[r][v] = sg * row.a[v];
      T[r][V + v] = -sg * row.a[v];
    }
    T[r][2 * V + r] = sg;
    T[r][C] = sg * row.b;
    if (flip) {
      T[r][2 * V + R + next_art] = 1;
      basis[r] = 2 * V + R + next_art;
      ++next_art;
    } else {
      basis[r] = 2 * V + r;
    }
  }

  SimplexResult res;
  res.feasible = detail::phase_one(T, basis, 2 * V + R, &res.pivots);
  if (res.feasible) {
    res.witness.assign(V, 0);
    for (std::size_t r = 0; r < R; ++r) {
      if (basis[r] < V) res.witness[basis[r]] += T[r][C];
      else if (basis[r] < 2 * V) res.witness[basis[r] - V] -= T[r][C];
    }
  }
  return res;
}

// Is target = sum mu_g g + sum nu_l l with mu >= 0 and nu free? All vectors
// have the same length.
inline bool cone_contains(const std::vector<std::vector<Rational>>& generators,
                          const std::vector<std::vector<Rational>>& lineality,
                          const std::vector<Rational>& target) {
  const std::size_t R = target.size();
  const std::size_t G = generators.size(), L = lineality.size();
  const std::size_t C = G + 2 * L + R;
  std::vector<std::vector<Rational>> T(R, std::vector<Rational>(C + 1));
  std::vector<std::size_t> basis(R);
  for (std::size_t r = 0; r < R; ++r) {
    const int sg = target[r] < 0 ? -1 : 1;
    for (std::size_t g = 0; g < G; ++g) T[r][g] = sg * generators[g].at(r);
    for (std::size_t l = 0; l < L; ++l) {
      T[r][G + l] = sg * lineality[l].at(r);
      T[r][G + L + l] = -sg * lineality[l].at(r);
    }
    T[r][G + 2 * L + r] = 1;
    T[r][C] = sg * target[r];
    basis[r] = G + 2 * L + r;
  }
  return detail::phase_one(T, basis, G + 2 * L, nullptr);
}

enum class LpBackend { FourierMotzkin, Simplex };

inline bool lp_feasible(const LinearSystem& s, LpBackend backend = LpBackend::FourierMotzkin) {
  return backend == LpBackend::FourierMotzkin ? fm_feasible(s) : simplex_feasible(s).feasible;
}

// CPLEX LP text. Rows with fractional right-hand sides are scaled to
// integers; every variable is declared free.
inline std::string export_lp(const LinearSystem& s, const std::string& title = "feasibility") {
  auto name = [&](std::size_t v) {
    std::string out;
    for (char ch : s.variables()[v]) out += (std::isalnum(static_cast<unsigned char>(ch)) ? ch : '_');
    return "x" + std::to_string(v) + "_" + out;
  };
  std::ostringstream os;
  os << "\\ " << title << "\n";
  os << "Minimize\n obj: 0 " << (s.variable_count() ? name(0) : std::string("dummy")) << "\n";
  os << "Subject To\n";
  for (std::size_t r = 0; r < s.rows().size(); ++r) {
    const auto& row = s.rows()[r];
    const BigInt scale = denominator(row.b);
    os << " c" << r << ":";
    bool any = false;
    for (std::size_t v = 0; v < row.a.size(); ++v) {
      if (!row.a[v]) continue;
      const BigInt c = scale * row.a[v];
      os << (c < 0 ? " - " : (any ? " + " : " "));
      const BigInt mag = c < 0 ? BigInt(-c) : c;
      if (mag != 1) os << mag.str() << " ";
      os << name(v);
      any = true;
    }
    if (!any) os << " 0 " << (s.variable_count() ? name(0) : std::string("dummy"));
    os << " <= " << numerator(row.b).str() << "\n";
  }
  os << "Bounds\n";
  for (std::size_t v = 0; v < s.variable_count(); ++v) os << " " << name(v) << " free\n";
  if (!s.variable_count()) os << " dummy free\n";
  os << "End\n";
  return os.str();
}

}  // namespace glr
