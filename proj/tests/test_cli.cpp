#include <gtest/gtest.h>

#include <set>

#include "glr/cli.hpp"
#include "oracles.hpp"

using namespace glr;
using namespace glr::cli;

namespace {

Outcome exec(Command c, const std::string& text, RunOptions o = {}) {
  return execute(c, [&] { return text; }, o);
}

std::string error_code_of(Command c, const std::string& text) {
  const auto out = exec(c, text);
  EXPECT_EQ(out.exit_code, kExitInput) << text;
  return out.report.at("error").at("code").get<std::string>();
}

}  // namespace

TEST(Cli, CommandNames) {
  std::set<std::string_view> subs, kinds;
  for (const auto& e : kCommands) {
    subs.insert(e.subcommand);
    kinds.insert(e.kind);
    EXPECT_EQ(command_from_name(e.subcommand), e.command);
    EXPECT_EQ(command_from_name(e.kind), e.command);
  }
  EXPECT_EQ(subs.size(), std::size(kCommands));
  EXPECT_EQ(kinds.size(), std::size(kCommands));
  EXPECT_FALSE(command_from_name("nope"));
}

TEST(Cli, ParseErrorsHaveDistinctCodes) {
  EXPECT_EQ(error_code_of(Command::F, "{"), "malformed_json");
  EXPECT_EQ(error_code_of(Command::F, "[1,2]"), "malformed_json");
  EXPECT_EQ(error_code_of(Command::F, R"({"lambdas": [[1],[1],[1],[1]]})"), "missing_field");
  EXPECT_EQ(error_code_of(Command::F, R"({"n": "2", "lambdas": [[1],[1],[1],[1]]})"), "wrong_type");
  EXPECT_EQ(error_code_of(Command::F, R"({"n": 2, "lambdas": [[1],[1.5],[1],[1]]})"), "wrong_type");
  EXPECT_EQ(error_code_of(Command::F, R"({"n": 0, "lambdas": [[1],[1],[1],[1]]})"), "bad_value");
  EXPECT_EQ(error_code_of(Command::F, R"({"n": 2, "m": 5, "lambdas": [[1],[1],[1],[1],[1]]})"), "bad_shape");
  EXPECT_EQ(error_code_of(Command::F, R"({"n": 2, "lambdas": [[1],[1],[1],[1],[1]]})"), "bad_shape");
  EXPECT_EQ(error_code_of(Command::F, R"({"n": 2, "lambdas": [[0,1],[1],[1],[1]]})"), "not_weakly_decreasing");
  EXPECT_EQ(error_code_of(Command::F, R"({"n": 1, "lambdas": [[1,1],[1],[1],[1]]})"), "too_many_parts");
  EXPECT_EQ(error_code_of(Command::Positivity, R"({"n": 2, "lambdas": [[1,-1],[1],[1],[1]]})"), "not_a_partition");
  EXPECT_EQ(error_code_of(Command::Lr, R"({"kind": "f_sun", "n": 2, "lambda": [1], "mu": [1], "nu": [2]})"),
            "kind_mismatch");
  EXPECT_EQ(error_code_of(Command::Cone, R"({"n": 2, "lambdas": [["1/0"],[1],[1],[1]]})"), "bad_value");
  EXPECT_EQ(error_code_of(Command::HornGen, R"({"n": 2, "m": 4, "variant": "all"})"), "bad_value");
  EXPECT_EQ(error_code_of(Command::Stretch, R"({"n": 1, "lambdas": [[1],[1],[1],[1]]})"), "missing_field");
  EXPECT_THROW(parse_problem_file("/nonexistent/problem.json", Command::F), InputError);
}

TEST(Cli, ErrorsAreReportedNotThrown) {
  const auto out = exec(Command::HornGen, R"({"n": 4, "m": 6})", RunOptions{.budget = 1000});
  EXPECT_EQ(out.exit_code, kExitBudget);
  EXPECT_EQ(out.report.at("status"), "error");
  EXPECT_EQ(out.report.at("error").at("code"), "budget_exceeded");
  const auto pre = exec(Command::Factorize, R"({"n": 2, "lambdas": [[2,1],[2],[1],[]], "I": [[1],[],[],[]]})");
  EXPECT_EQ(pre.exit_code, kExitInput);
  EXPECT_EQ(pre.report.at("error").at("code"), "precondition");
}

TEST(Cli, LrWithShift) {
  const auto out = exec(Command::Lr, R"({"n": 2, "lambda": [0, -1], "mu": [1, 1], "nu": [1, 0]})",
                        RunOptions{.cross_check = true});
  ASSERT_EQ(out.exit_code, kExitOk) << out.report.dump();
  // Adding one to every part of lambda and nu.
  EXPECT_EQ(out.report.at("value").get<std::uint64_t>(), oracle::lr(Partition{1}, Partition{1, 1}, Partition{2, 1}));
  EXPECT_EQ(out.report.at("input").at("lambda"), json::parse("[0,-1]"));
}

TEST(Cli, FSunWithCrossCheck) {
  const std::string text = R"({"kind": "f_sun", "n": 2, "m": 6, "lambdas": [[1,0],[1,0],[1,0],[1,0],[1,0],[1,0]]})";
  const auto out = exec(Command::F, text, RunOptions{.cross_check = true});
  ASSERT_EQ(out.exit_code, kExitOk) << out.report.dump();
  const std::vector<IntSequence> ones(6, IntSequence{1});
  EXPECT_EQ(out.report.at("value").get<std::uint64_t>(), oracle::f_sun(ones, 2));
  const auto& cc = out.report.at("cross_check");
  EXPECT_EQ(cc.at("dim_si_sun"), out.report.at("value"));
  EXPECT_EQ(cc.at("sun_hives"), out.report.at("value"));
  EXPECT_EQ(cc.at("lp_positive"), true);
  EXPECT_EQ(cc.at("in_cone"), true);
  EXPECT_EQ(cc.at("agree"), true);
  EXPECT_EQ(out.report.at("input").at("lambdas"), json::parse("[[1],[1],[1],[1],[1],[1]]"));
}

TEST(Cli, OtherCommands) {
  RunOptions cc{.cross_check = true};
  const auto f1 = exec(Command::F1, R"({"n": 2, "lambdas": [[1],[1],[1],[1]]})", cc);
  EXPECT_EQ(f1.exit_code, kExitOk);
  EXPECT_EQ(f1.report.at("value").get<std::uint64_t>(), oracle::f1({{1}, {1}, {1}, {1}}, 2));
  const auto f2 = exec(Command::F2, R"({"n": 3, "lambdas": [[1],[2,1],[1,1]]})", cc);
  EXPECT_EQ(f2.exit_code, kExitOk);
  EXPECT_EQ(f2.report.at("value").get<std::uint64_t>(), oracle::f2({{1}, {2, 1}, {1, 1}}, 3));

  const auto pos = exec(Command::Positivity, R"({"n": 2, "lambdas": [[1],[3],[1],[],[1],[]]})", cc);
  EXPECT_EQ(pos.exit_code, kExitOk);
  EXPECT_EQ(pos.report.at("positive"), false);

  const auto cone = exec(Command::Cone, R"({"n": 2, "lambdas": [["3/2","1/2"],[1,1],[1],[1]]})", cc);
  EXPECT_EQ(cone.exit_code, kExitOk);
  EXPECT_EQ(cone.report.at("in_cone"), true);
  const auto outside = exec(Command::Cone, R"({"n": 2, "lambdas": [[1],[3],[1],[0],[1],[0]]})", cc);
  EXPECT_EQ(outside.report.at("in_cone"), false);
  EXPECT_TRUE(outside.report.at("violated").is_object());

  const auto horn = exec(Command::HornGen, R"({"n": 2, "m": 4, "variant": "nonzero"})", cc);
  EXPECT_EQ(horn.exit_code, kExitOk);
  EXPECT_EQ(horn.report.at("count").get<std::size_t>(), generate_T(2, 4, HornVariant::Nonzero).size());
  const auto forced = exec(Command::HornGen, R"({"n": 2, "m": 4, "variant": "nonzero"})",
                           RunOptions{.variant = HornVariant::EqualOne});
  EXPECT_EQ(forced.report.at("variant"), "one");

  const auto st = exec(Command::Stretch, R"({"n": 1, "lambdas": [[1],[1],[1],[1]], "N_max": 3})", cc);
  EXPECT_EQ(st.exit_code, kExitOk);
  EXPECT_EQ(st.report.at("values"), json::parse("[2,3,4]"));

  const auto fac = exec(Command::Factorize, R"({"n": 2, "lambdas": [[],[],[],[]], "I": [[1],[1],[1],[]]})");
  EXPECT_EQ(fac.exit_code, kExitOk) << fac.report.dump();
  EXPECT_EQ(fac.report.at("passed"), true);
}

TEST(Cli, Facets26AndSelftest) {
  const auto facets = exec(Command::Facets26, "", RunOptions{.parallel = true});
  EXPECT_EQ(facets.exit_code, kExitOk);
  EXPECT_EQ(facets.report.at("derived"), 63);
  EXPECT_EQ(facets.report.at("golden_schemas"), 14);
  const auto self = exec(Command::Selftest, "");
  EXPECT_EQ(self.exit_code, kExitOk) << self.report.dump();
  EXPECT_EQ(self.report.at("passed"), true);
}

TEST(Cli, OutputIsDeterministic) {
  const std::string text = R"({"n": 2, "lambdas": [[2,1],[2,1],[1,1],[2],[1],[1,1]]})";
  const auto a = render(exec(Command::F, text, RunOptions{.cross_check = true}).report, false);
  const auto b = render(exec(Command::F, text, RunOptions{.cross_check = true, .parallel = true}).report, false);
  EXPECT_EQ(a, b);
  const auto p = render(exec(Command::F, text).report, true);
  EXPECT_NE(p.find("value = "), std::string::npos);
  EXPECT_NE(p.find("input.kind = f_sun"), std::string::npos) << p;
}
