#pragma once

#include <algorithm>
#include <fstream>
#include <functional>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "glr/error.hpp"
#include "glr/generalized.hpp"
#include "glr/golden.hpp"
#include "glr/hive.hpp"
#include "glr/horn.hpp"
#include "glr/io.hpp"
#include "glr/lr.hpp"
#include "glr/quiver.hpp"

namespace glr::cli {

using json = nlohmann::json;

enum class Command { Lr, F, F1, F2, Positivity, Cone, HornGen, Stretch, Factorize, Facets26, Selftest };

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitDisagreement = 2;
inline constexpr int kExitBudget = 3;

struct CommandName {
  Command command;
  std::string_view subcommand;  // command line
  std::string_view kind;        // "kind" field of a problem file
};

inline constexpr CommandName kCommands[] = {
    {Command::Lr, "lr", "lr"},
    {Command::F, "f", "f_sun"},
    {Command::F1, "f1", "f1"},
    {Command::F2, "f2", "f2"},
    {Command::Positivity, "positivity", "positivity"},
    {Command::Cone, "cone", "cone"},
    {Command::HornGen, "horn-gen", "horn_gen"},
    {Command::Stretch, "stretch", "stretch"},
    {Command::Factorize, "factorize", "factorize"},
    {Command::Facets26, "facets26", "facets26"},
    {Command::Selftest, "selftest", "selftest"},
};

inline std::string_view subcommand_name(Command c) {
  for (const auto& e : kCommands)
    if (e.command == c) return e.subcommand;
  return "?";
}

inline std::string_view kind_name(Command c) {
  for (const auto& e : kCommands)
    if (e.command == c) return e.kind;
  return "?";
}

inline std::optional<Command> command_from_name(std::string_view s) {
  for (const auto& e : kCommands)
    if (e.subcommand == s || e.kind == s) return e.command;
  return std::nullopt;
}

// Problem-file diagnostics. Each code names one class of mistake.
class InputError : public std::runtime_error {
 public:
  InputError(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

[[noreturn]] inline void reject(const std::string& code, const std::string& message) {
  throw InputError(code, message);
}

struct ProblemFile {
  Command kind = Command::F;
  int n = 0;
  int m = 0;
  std::vector<IntSequence> lambdas;
  std::vector<std::vector<Rational>> rationals;  // cone only
  std::optional<Part> N_max;
  std::optional<Part> r_max;
  std::optional<HornVariant> variant;
  std::optional<SubsetTuple> tuple;
  ChainKind chain = ChainKind::FSun;  // stretch only
};

struct RunOptions {
  bool cross_check = false;
  std::optional<HornVariant> variant;
  std::optional<std::uint64_t> budget;
  bool parallel = false;
};

namespace detail {

inline std::string seq_name(std::size_t idx) { return "lambda(" + std::to_string(idx + 1) + ")"; }

inline const json& field(const json& doc, const char* key) {
  if (!doc.contains(key)) reject("missing_field", std::string("field \"") + key + "\" is required");
  return doc.at(key);
}

inline int positive_int(const json& doc, const char* key) {
  const json& v = field(doc, key);
  if (!v.is_number_integer()) reject("wrong_type", std::string("\"") + key + "\" must be an integer");
  const auto x = v.get<std::int64_t>();
  if (x < 1 || x > 62) reject("bad_value", std::string("\"") + key + "\" must lie in 1..62, got " + std::to_string(x));
  return static_cast<int>(x);
}

inline std::optional<Part> optional_positive(const json& doc, const char* key) {
  if (!doc.contains(key)) return std::nullopt;
  const json& v = doc.at(key);
  if (!v.is_number_integer()) reject("wrong_type", std::string("\"") + key + "\" must be an integer");
  const auto x = v.get<Part>();
  if (x < 1) reject("bad_value", std::string("\"") + key + "\" must be positive");
  return x;
}

inline std::vector<Part> integer_row(const json& row, const std::string& name) {
  if (!row.is_array()) reject("wrong_type", name + " must be an array of integers");
  std::vector<Part> parts;
  for (const auto& v : row) {
    if (!v.is_number_integer()) reject("wrong_type", name + " must contain integers only");
    parts.push_back(v.get<Part>());
  }
  return parts;
}

inline void check_decreasing(const std::vector<Part>& parts, const std::string& name) {
  for (std::size_t j = 1; j < parts.size(); ++j)
    if (parts[j - 1] < parts[j])
      reject("not_weakly_decreasing", name + " = " + IntSequence::format(parts) + " is not weakly decreasing");
}

inline IntSequence sequence(const json& row, const std::string& name, int n) {
  auto parts = integer_row(row, name);
  check_decreasing(parts, name);
  IntSequence s(std::move(parts));
  if (s.length() > static_cast<std::size_t>(n))
    reject("too_many_parts", name + " = " + s.str() + " has more than n=" + std::to_string(n) + " parts");
  return s;
}

inline std::vector<IntSequence> sequences(const json& doc, int n) {
  const json& rows = field(doc, "lambdas");
  if (!rows.is_array()) reject("wrong_type", "\"lambdas\" must be an array of arrays");
  std::vector<IntSequence> out;
  for (std::size_t i = 0; i < rows.size(); ++i) out.push_back(sequence(rows[i], seq_name(i), n));
  if (doc.contains("m")) {
    const json& m = doc.at("m");
    if (!m.is_number_integer()) reject("wrong_type", "\"m\" must be an integer");
    if (m.get<std::int64_t>() != static_cast<std::int64_t>(out.size()))
      reject("bad_shape", "\"m\" is " + m.dump() + " but " + std::to_string(out.size()) + " sequences were given");
  }
  return out;
}

inline void require_partitions(const std::vector<IntSequence>& seqs) {
  for (std::size_t i = 0; i < seqs.size(); ++i)
    if (!seqs[i].is_partition())
      reject("not_a_partition", seq_name(i) + " = " + seqs[i].str() + " has a negative entry");
}

inline void check_chain_shape(ChainKind kind, std::size_t m) {
  switch (kind) {
    case ChainKind::FSun:
      if (m < 4 || m % 2 != 0)
        reject("bad_shape", "f_sun needs an even number m >= 4 of sequences, got m=" + std::to_string(m));
      break;
    case ChainKind::F1:
      if (m < 4) reject("bad_shape", "f1 needs m >= 4 sequences, got m=" + std::to_string(m));
      break;
    case ChainKind::F2:
      if (m < 3) reject("bad_shape", "f2 needs m >= 3 sequences, got m=" + std::to_string(m));
      break;
  }
}

inline void check_sun_shape(std::size_t m) { check_chain_shape(ChainKind::FSun, m); }

inline HornVariant parse_variant(const json& v) {
  if (v == "one") return HornVariant::EqualOne;
  if (v == "nonzero") return HornVariant::Nonzero;
  reject("bad_value", "\"variant\" must be \"one\" or \"nonzero\", got " + v.dump());
}

inline Rational rational_entry(const json& v, const std::string& name) {
  if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const Error& e) {
      reject("bad_value", name + ": " + e.what());
    }
  }
  reject("wrong_type", name + " must contain integers or rational strings like \"1/2\"");
}

}  // namespace detail

// Validates a problem document for `cmd`. A "kind" field, when present, has
// to agree with the subcommand.
inline ProblemFile parse_problem(std::string_view text, Command cmd) {
  json doc;
  const bool blank = std::all_of(text.begin(), text.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
  if (blank && (cmd == Command::Facets26 || cmd == Command::Selftest)) doc = json::object();
  else {
    try {
      doc = json::parse(text);
    } catch (const json::parse_error& e) {
      reject("malformed_json", std::string("input is not valid JSON: ") + e.what());
    }
  }
  if (!doc.is_object()) reject("malformed_json", "the problem must be a JSON object");

  ProblemFile p;
  p.kind = cmd;
  if (doc.contains("kind")) {
    if (!doc.at("kind").is_string()) reject("wrong_type", "\"kind\" must be a string");
    const auto k = doc.at("kind").get<std::string>();
    const auto named = command_from_name(k);
    if (!named) reject("bad_value", "unknown kind \"" + k + "\"");
    if (*named != cmd)
      reject("kind_mismatch", "file has kind \"" + k + "\" but the subcommand is " + std::string(subcommand_name(cmd)));
  }
  if (doc.contains("variant")) p.variant = detail::parse_variant(doc.at("variant"));

  using namespace detail;
  switch (cmd) {
    case Command::Lr: {
      p.n = positive_int(doc, "n");
      if (doc.contains("lambdas")) {
        p.lambdas = sequences(doc, p.n);
        if (p.lambdas.size() != 3) reject("bad_shape", "lr needs exactly three sequences (lambda, mu, nu)");
      } else {
        p.lambdas = {sequence(field(doc, "lambda"), "lambda", p.n), sequence(field(doc, "mu"), "mu", p.n),
                     sequence(field(doc, "nu"), "nu", p.n)};
      }
      break;
    }
    case Command::F:
    case Command::F1:
    case Command::F2: {
      p.n = positive_int(doc, "n");
      p.lambdas = sequences(doc, p.n);
      p.chain = cmd == Command::F ? ChainKind::FSun : cmd == Command::F1 ? ChainKind::F1 : ChainKind::F2;
      check_chain_shape(p.chain, p.lambdas.size());
      break;
    }
    case Command::Positivity: {
      p.n = positive_int(doc, "n");
      p.lambdas = sequences(doc, p.n);
      check_sun_shape(p.lambdas.size());
      require_partitions(p.lambdas);
      break;
    }
    case Command::Cone: {
      p.n = positive_int(doc, "n");
      const json& rows = field(doc, "lambdas");
      if (!rows.is_array()) reject("wrong_type", "\"lambdas\" must be an array of arrays");
      for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto name = seq_name(i);
        if (!rows[i].is_array()) reject("wrong_type", name + " must be an array");
        std::vector<Rational> r;
        for (const auto& v : rows[i]) r.push_back(rational_entry(v, name));
        for (std::size_t j = 1; j < r.size(); ++j)
          if (r[j - 1] < r[j]) reject("not_weakly_decreasing", name + " is not weakly decreasing");
        if (r.size() > static_cast<std::size_t>(p.n))
          reject("too_many_parts", name + " has more than n=" + std::to_string(p.n) + " entries");
        p.rationals.push_back(std::move(r));
      }
      if (doc.contains("m") && doc.at("m") != json(p.rationals.size()))
        reject("bad_shape", "\"m\" does not match the number of sequences");
      check_sun_shape(p.rationals.size());
      p.m = static_cast<int>(p.rationals.size());
      break;
    }
    case Command::HornGen: {
      p.n = positive_int(doc, "n");
      p.m = positive_int(doc, "m");
      check_sun_shape(static_cast<std::size_t>(p.m));
      break;
    }
    case Command::Stretch: {
      p.n = positive_int(doc, "n");
      p.lambdas = sequences(doc, p.n);
      if (doc.contains("chain")) {
        const json& c = doc.at("chain");
        if (c == "f_sun") p.chain = ChainKind::FSun;
        else if (c == "f1") p.chain = ChainKind::F1;
        else if (c == "f2") p.chain = ChainKind::F2;
        else reject("bad_value", "\"chain\" must be f_sun, f1 or f2, got " + c.dump());
      }
      check_chain_shape(p.chain, p.lambdas.size());
      p.N_max = optional_positive(doc, "N_max");
      p.r_max = optional_positive(doc, "r_max");
      if (!p.N_max && !p.r_max) reject("missing_field", "field \"N_max\" is required");
      break;
    }
    case Command::Factorize: {
      p.n = positive_int(doc, "n");
      p.lambdas = sequences(doc, p.n);
      check_sun_shape(p.lambdas.size());
      require_partitions(p.lambdas);
      try {
        p.tuple = io::subset_tuple_from_json(field(doc, "I"), p.n);
      } catch (const Error& e) {
        reject("bad_value", std::string("\"I\": ") + e.what());
      }
      if (p.tuple->m() != p.lambdas.size()) reject("bad_shape", "\"I\" needs one subset per sequence");
      break;
    }
    case Command::Facets26:
    case Command::Selftest:
      break;
  }
  if (p.m == 0) p.m = static_cast<int>(p.lambdas.size());
  return p;
}

inline ProblemFile parse_problem_file(const std::string& path, Command cmd) {
  std::ifstream in(path, std::ios::binary);
  if (!in) reject("unreadable_file", "cannot read " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_problem(text, cmd);
}

// The input as the program understood it: trailing zeros trimmed.
inline json canonical(const ProblemFile& p) {
  json out = {{"kind", kind_name(p.kind)}};
  if (p.kind == Command::Facets26 || p.kind == Command::Selftest) return out;
  out["n"] = p.n;
  if (p.kind == Command::Lr) {
    out["lambda"] = io::to_json(p.lambdas[0]);
    out["mu"] = io::to_json(p.lambdas[1]);
    out["nu"] = io::to_json(p.lambdas[2]);
    return out;
  }
  out["m"] = p.m;
  if (p.kind == Command::HornGen) return out;
  if (p.kind == Command::Cone) {
    json rows = json::array();
    for (auto r : p.rationals) {
      while (!r.empty() && r.back() == 0) r.pop_back();
      json row = json::array();
      for (const auto& v : r) row.push_back(to_string(v));
      rows.push_back(std::move(row));
    }
    out["lambdas"] = rows;
    return out;
  }
  out["lambdas"] = io::to_json(p.lambdas);
  if (p.kind == Command::Stretch) {
    out["chain"] = chain_kind_name(p.chain);
    out["N_max"] = p.N_max ? *p.N_max : *p.r_max;
  }
  if (p.tuple) out["I"] = io::to_json(*p.tuple);
  return out;
}

struct Outcome {
  int exit_code = kExitOk;
  json report;
};

namespace detail {

inline ChainOptions chain_options(const RunOptions& o) {
  ChainOptions c;
  c.parallel = o.parallel;
  if (o.budget) c.budget = *o.budget;
  return c;
}

inline GenerateOptions generate_options(const RunOptions& o) {
  GenerateOptions g;
  if (o.budget) g.budget = *o.budget;
  g.parallel = o.parallel;
  return g;
}

// Chain sum with every LR factor taken from hive counting instead of
// tableaux.
inline ChainOptions hive_oracle(ChainOptions c, int n) {
  c.oracle = [n](const Partition& a, const Partition& b, const Partition& nu) {
    return lr_hive_count(a, b, nu, n);
  };
  return c;
}

inline bool all_equal(const std::vector<json>& xs) {
  return std::all_of(xs.begin(), xs.end(), [&](const json& x) { return x == xs.front(); });
}

struct Suite {
  std::string name;
  std::size_t cases = 0;
  std::vector<std::string> failures;
  void check(bool ok, const std::function<std::string()>& what) {
    ++cases;
    if (!ok && failures.size() < 5) failures.push_back(what());
  }
};

inline std::vector<std::vector<IntSequence>> partition_tuples(int n, std::size_t m, Part max_entry) {
  std::vector<IntSequence> parts;
  for (const auto& p : all_partitions_in(rectangle(max_entry, static_cast<std::size_t>(n)))) parts.push_back(p);
  std::vector<std::vector<IntSequence>> out;
  std::vector<std::size_t> idx(m, 0);
  while (true) {
    std::vector<IntSequence> t;
    for (auto k : idx) t.push_back(parts[k]);
    out.push_back(std::move(t));
    std::size_t pos = 0;
    while (pos < m && ++idx[pos] == parts.size()) idx[pos++] = 0;
    if (pos == m) break;
  }
  return out;
}

inline std::string tuple_str(const std::vector<IntSequence>& t) {
  std::string s;
  for (const auto& x : t) s += x.str();
  return s;
}

inline std::vector<Suite> selftest_suites() {
  std::vector<Suite> out;

  Suite lr{"lr_tableaux_vs_hives"};
  const auto box = all_partitions_in(rectangle(3, 3));
  for (const auto& a : box)
    for (const auto& b : box)
      for (const auto& c : all_partitions_in(rectangle(6, 3))) {
        if (c.size() != a.size() + b.size()) continue;
        const Count t = lr_coefficient(a, b, c), h = lr_hive_count(a, b, c, 3);
        lr.check(t == h, [&] { return "c^" + c.str() + "_" + a.str() + "," + b.str(); });
      }
  out.push_back(std::move(lr));

  Suite chains{"f_sun_oracles"};
  for (auto [n, maxe] : {std::pair{1, Part{2}}, std::pair{2, Part{1}}}) {
    const SunQuiver q(n, 2);
    for (const auto& t : partition_tuples(n, 4, maxe)) {
      const Count f = f_sun(t, n);
      const bool ok = count_sun_hives(t, n, 4) == f && dim_si_sun(q, weight_sigma1(q, t)) == f &&
                      positivity(t, n, 4) == (f != 0);
      chains.check(ok, [&] { return tuple_str(t); });
    }
  }
  out.push_back(std::move(chains));

  Suite level{"level_one_closed_form"};
  for (int code = 0; code < 81; ++code) {
    LevelOneSpec spec{{code % 3, code / 3 % 3, code / 9 % 3, code / 27}, 2};
    for (Part N = 1; N <= 2; ++N)
      level.check(level1_f(spec, N) == f_sun(spec.lambdas(N), 2), [&] { return tuple_str(spec.lambdas(N)); });
  }
  out.push_back(std::move(level));

  Suite horn{"horn_equivalence"};
  for (auto [n, m] : {std::pair{1, 4}, std::pair{2, 4}}) {
    const auto one = generate_T(n, m, HornVariant::EqualOne), nz = generate_T(n, m, HornVariant::Nonzero);
    for (const auto& I : one)
      horn.check(size_bounds_hold(I) && std::binary_search(nz.begin(), nz.end(), I), [&] { return I.str(); });
  }
  for (const auto& t : partition_tuples(2, 4, 1)) {
    const auto r = RationalTuple::from_integers(t, 2);
    const bool f = f_sun(t, 2) != 0;
    horn.check(in_cone(r, HornVariant::EqualOne) == f && in_cone(r, HornVariant::Nonzero) == f,
               [&] { return tuple_str(t); });
  }
  out.push_back(std::move(horn));

  Suite golden{"golden_data"};
  const auto& g = facets_2_6_golden();
  golden.check(g.schemas.size() == 14 && g.appendix.size() == 14, [] { return std::string("counts"); });
  const auto closure = golden_closure(g);
  const auto cmp = compare_with_golden(std::vector<SubsetTuple>(closure.begin(), closure.end()), g);
  golden.check(cmp.texts_match && cmp.appendix_match, [] { return std::string("printed forms"); });
  const auto T = generate_T(2, 6, HornVariant::EqualOne);
  for (const auto& I : closure)
    golden.check(std::binary_search(T.begin(), T.end(), I), [&] { return I.str() + " not in T(2,6)"; });
  out.push_back(std::move(golden));
  return out;
}

}  // namespace detail

inline Outcome run(const ProblemFile& p, const RunOptions& opts = {}) {
  Outcome out;
  json& r = out.report;
  r["command"] = subcommand_name(p.kind);
  r["input"] = canonical(p);
  r["status"] = "ok";
  const ChainOptions copts = detail::chain_options(opts);
  const HornVariant variant = opts.variant.value_or(p.variant.value_or(HornVariant::EqualOne));
  bool agree = true;

  switch (p.kind) {
    case Command::Lr: {
      const LrTriple t{p.lambdas[0], p.lambdas[1], p.lambdas[2], p.n};
      const Count c = lr_coefficient(t);
      r["value"] = c;
      r["method"] = "lr_tableaux";
      if (opts.cross_check) {
        const Count h = lr_hive_count(t);
        agree = c == h;
        r["cross_check"] = {{"lr_tableaux", c}, {"lr_hives", h}, {"agree", agree}};
      }
      break;
    }
    case Command::F: {
      const Count f = f_sun(p.lambdas, p.n, copts);
      r["value"] = f;
      r["method"] = "alpha_chain";
      if (opts.cross_check) {
        json cc = {{"alpha_chain", f}};
        const SunQuiver q(p.n, p.m / 2);
        const Count dim = dim_si_sun(q, weight_sigma1(q, p.lambdas), copts);
        cc["dim_si_sun"] = dim;
        agree = dim == f;
        if (std::all_of(p.lambdas.begin(), p.lambdas.end(), [](const IntSequence& s) { return s.is_partition(); })) {
          const Count hives = count_sun_hives(p.lambdas, p.n, p.m);
          const bool lp = positivity(p.lambdas, p.n, p.m);
          cc["sun_hives"] = hives;
          cc["lp_positive"] = lp;
          agree = agree && hives == f && lp == (f != 0);
          try {
            const bool cone = in_cone(RationalTuple::from_integers(p.lambdas, p.n), variant,
                                      detail::generate_options(opts));
            cc["in_cone"] = cone;
            agree = agree && cone == (f != 0);
          } catch (const Error& e) {
            if (e.kind() != ErrorKind::BudgetExceeded) throw;
            cc["in_cone"] = "skipped: " + std::string(e.what());
          }
        } else {
          cc["sun_hives"] = "skipped: not all sequences are partitions";
        }
        cc["agree"] = agree;
        r["cross_check"] = cc;
      }
      break;
    }
    case Command::F1:
    case Command::F2: {
      const ChainProblem cp{p.chain, p.n, p.lambdas};
      const Count v = evaluate(cp, copts);
      r["value"] = v;
      r["method"] = "alpha_chain";
      if (opts.cross_check) {
        const Count h = evaluate(cp, detail::hive_oracle(copts, p.n));
        agree = h == v;
        r["cross_check"] = {{"alpha_chain", v}, {"alpha_chain_hive_factors", h}, {"agree", agree}};
      }
      break;
    }
    case Command::Positivity: {
      const auto sys = build_linear_system(p.lambdas, p.n, p.m);
      const bool fm = lp_feasible(sys, LpBackend::FourierMotzkin);
      r["positive"] = fm;
      r["method"] = "fourier_motzkin";
      r["variables"] = sys.variable_count();
      r["constraints"] = sys.rows().size();
      if (opts.cross_check) {
        const auto sx = simplex_feasible(sys);
        const Count f = f_sun(p.lambdas, p.n, copts);
        json cc = {{"fourier_motzkin", fm}, {"simplex", sx.feasible}, {"alpha_chain", f}};
        agree = sx.feasible == fm && (f != 0) == fm;
        if (sx.feasible) {
          cc["witness_valid"] = sys.satisfied_by(sx.witness);
          agree = agree && sys.satisfied_by(sx.witness);
        }
        cc["agree"] = agree;
        r["cross_check"] = cc;
      }
      break;
    }
    case Command::Cone: {
      const RationalTuple t(p.n, p.rationals);
      const auto gopts = detail::generate_options(opts);
      const auto T = generate_T(p.n, p.m, variant, gopts);
      json violated = nullptr;
      bool member = sizes_balance(t);
      if (!member) violated = "size equality";
      for (const auto& I : T) {
        if (!member) break;
        HornInequality h{I};
        if (!h.holds(t)) {
          member = false;
          violated = {{"inequality", h.str()}, {"I", io::to_json(I)}, {"slack", to_string(h.slack(t))}};
        }
      }
      r["in_cone"] = member;
      r["variant"] = variant_name(variant);
      r["inequalities"] = T.size();
      r["violated"] = violated;
      if (opts.cross_check) {
        const auto other = variant == HornVariant::EqualOne ? HornVariant::Nonzero : HornVariant::EqualOne;
        const bool o = in_cone(t, other, gopts);
        agree = o == member;
        r["cross_check"] = {{std::string(variant_name(variant)), member}, {std::string(variant_name(other)), o},
                            {"agree", agree}};
      }
      break;
    }
    case Command::HornGen: {
      const auto T = generate_T(p.n, p.m, variant, detail::generate_options(opts));
      json ineqs = json::array();
      for (const auto& I : T) ineqs.push_back(HornInequality{I}.str());
      r["variant"] = variant_name(variant);
      r["count"] = T.size();
      r["tuples"] = io::to_json(T);
      r["inequalities"] = ineqs;
      if (opts.cross_check) {
        const auto one = generate_T(p.n, p.m, HornVariant::EqualOne, detail::generate_options(opts));
        const auto nz = generate_T(p.n, p.m, HornVariant::Nonzero, detail::generate_options(opts));
        const bool subset = std::includes(nz.begin(), nz.end(), one.begin(), one.end());
        const bool bounds = std::all_of(T.begin(), T.end(), size_bounds_hold);
        agree = subset && bounds;
        r["cross_check"] = {{"one_within_nonzero", subset}, {"size_bounds", bounds}, {"agree", agree}};
      }
      break;
    }
    case Command::Stretch: {
      const ChainProblem cp{p.chain, p.n, p.lambdas};
      const Part N = p.N_max ? *p.N_max : *p.r_max;
      const auto values = stretched_table(cp, N, copts);
      const bool constant = std::all_of(values.begin(), values.end(),
                                        [&](Count c) { return (c != 0) == (values.front() != 0); });
      r["values"] = values;
      r["method"] = "alpha_chain";
      r["saturation"] = {{"zero_pattern_constant", constant}};
      if (opts.cross_check) {
        const auto h = stretched_table(cp, N, detail::hive_oracle(copts, p.n));
        agree = h == values;
        r["cross_check"] = {{"alpha_chain", values}, {"alpha_chain_hive_factors", h}, {"agree", agree}};
      }
      break;
    }
    case Command::Factorize: {
      const auto rep = factorization_check(p.lambdas, p.n, *p.tuple, copts);
      r["report"] = io::to_json(rep);
      r["passed"] = rep.passed;
      agree = rep.passed;
      break;
    }
    case Command::Facets26: {
      const auto facets = regular_facets(2, 6, detail::generate_options(opts));
      const auto& g = facets_2_6_golden();
      const auto cmp = compare_with_golden(facets, g);
      json texts = json::array();
      for (const auto& I : facets) texts.push_back(HornInequality{I}.str());
      r["derived"] = cmp.derived;
      r["golden_schemas"] = g.schemas.size();
      r["golden_closure"] = cmp.golden;
      r["missing"] = io::to_json(cmp.missing);
      r["extra"] = io::to_json(cmp.extra);
      r["texts_match"] = cmp.texts_match;
      r["appendix_match"] = cmp.appendix_match;
      r["facets"] = texts;
      r["passed"] = cmp.passed();
      agree = cmp.passed();
      break;
    }
    case Command::Selftest: {
      json suites = json::array();
      for (const auto& s : detail::selftest_suites()) {
        suites.push_back({{"name", s.name}, {"cases", s.cases}, {"failures", s.failures}});
        agree = agree && s.failures.empty();
      }
      r["suites"] = suites;
      r["passed"] = agree;
      break;
    }
  }
  if (!agree) {
    r["status"] = "disagreement";
    out.exit_code = kExitDisagreement;
  }
  return out;
}

inline int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::BudgetExceeded:
    case ErrorKind::Overflow: return kExitBudget;
    default: return kExitInput;
  }
}

inline json error_report(std::string_view command, std::string_view code, std::string_view message) {
  return {{"command", command}, {"status", "error"}, {"error", {{"code", code}, {"message", message}}}};
}

// Parses and runs, turning every failure into a report plus exit code.
inline Outcome execute(Command cmd, const std::function<std::string()>& read_input, const RunOptions& opts) {
  const auto name = subcommand_name(cmd);
  try {
    return run(parse_problem(read_input(), cmd), opts);
  } catch (const InputError& e) {
    return {kExitInput, error_report(name, e.code(), e.what())};
  } catch (const Error& e) {
    return {exit_code_for(e.kind()), error_report(name, e.code(), e.what())};
  } catch (const std::exception& e) {
    return {kExitInput, error_report(name, "internal", e.what())};
  }
}

// key = value lines, nested keys joined with dots.
inline std::string render_plain(const json& j, const std::string& prefix = "") {
  std::string out;
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      out += render_plain(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key());
    return out;
  }
  if (j.is_array() && std::any_of(j.begin(), j.end(), [](const json& x) { return x.is_object(); })) {
    for (std::size_t k = 0; k < j.size(); ++k) out += render_plain(j[k], prefix + "." + std::to_string(k));
    return out;
  }
  return prefix + " = " + (j.is_string() ? j.get<std::string>() : j.dump()) + "\n";
}

inline std::string render(const json& report, bool plain) {
  return plain ? render_plain(report) : report.dump() + "\n";
}

}  // namespace glr::cli
