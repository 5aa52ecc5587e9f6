#include <doctest.h>

#include "support.hpp"
#include "pseudoeq/commands.hpp"
#include "pseudoeq/config.hpp"

using namespace testing;

namespace {
  JobConfig fixture(char const* name) {
    return load_config(std::string(FIXTURE_DIR) + "/" + name);
  }

  std::pair<std::size_t, std::size_t> position(char const* text) {
    try {
      parse_config(text);
    } catch (ParseError const& e) {
      return {e.line(), e.column()};
    }
    return {0, 0};
  }

  std::vector<std::string> json_strings(nlohmann::ordered_json const& j) {
    return j.get<std::vector<std::string>>();
  }
}  // namespace

TEST_CASE("parse_config") {
  auto cfg = parse_config(
      "alphabet: a b c\n"
      "rel: table: a~c, ab~cb, bc~ba, abc~cba   # exph\n"
      "\n"
      "equation: x y z = z y x\n"
      "assign: x=abc y=b z=a\n"
      "words: abc, b a\n"
      "max_len: 2\n"
      "budget: 50\n"
      "workers: 3\n");
  CHECK(cfg.alphabet->size() == 3);
  CHECK(cfg.anticongruence()->kind() == Anticongruence::Kind::table);
  CHECK(cfg.require_equation() == parse_equation("x y z = z y x"));
  REQUIRE(cfg.assign.size() == 3);
  CHECK(cfg.assign[0].first == "x");
  CHECK(str(cfg.assign[0].second) == "abc");
  CHECK(strs(cfg.require_words()) == oracle::StrSet{"a", "abc", "b"});
  CHECK(cfg.max_len == 2);
  CHECK(cfg.budget == 50);
  CHECK(cfg.workers == 3);

  auto bare = parse_config("alphabet: a b");
  CHECK(bare.anticongruence()->kind() == Anticongruence::Kind::identity);
  CHECK(bare.max_len == 3);
  CHECK_THROWS_AS(bare.require_equation(), ConfigError);
  CHECK_THROWS_AS(bare.require_words(), ConfigError);
}

TEST_CASE("parse_rel") {
  auto a = sigma("abc");
  CHECK(parse_rel(a, "identity").rel->kind() == Anticongruence::Kind::identity);
  auto p = parse_rel(a, "permutation: (a b)(c)");
  CHECK(p.rel->permutation_image() == std::vector<Letter>{1, 0, 2});
  auto r = parse_rel(a, "reversal");
  CHECK_FALSE(r.rel);
  REQUIRE(r.raw.has_value());
  CHECK(r.raw->equiv(w(a, "abc"), w(a, "cba")));
  auto t = parse_rel(a, "table: a~c, ab~cb");
  CHECK(t.rel->equiv(w(a, "ab"), w(a, "cb")));
  CHECK_THROWS_AS(parse_rel(a, "permutation: (a b"), ParseError);
  CHECK_THROWS_AS(parse_rel(a, "permutation: (a d)"), ParseError);
  CHECK_THROWS_AS(parse_rel(a, "permutation: (a b)(a c)"), ParseError);
  CHECK_THROWS_AS(parse_rel(a, "table: a~cb"), ParseError);
  CHECK_THROWS_AS(parse_rel(a, "table: a"), ParseError);
  CHECK_THROWS_AS(parse_rel(a, "congruence"), ParseError);
}

TEST_CASE("config errors report line and column") {
  CHECK(position("alphabet: a b\ncolour: blue\n") == std::pair<std::size_t, std::size_t>{2, 1});
  CHECK(position("alphabet: a b\nwords: ab abd\n") == std::pair<std::size_t, std::size_t>{2, 13});
  CHECK(position("alphabet: a b\nrel: identity\nrel: identity\n")
        == std::pair<std::size_t, std::size_t>{3, 1});
  CHECK(position("alphabet: a b\nmax_len: -1\n") == std::pair<std::size_t, std::size_t>{2, 10});
  CHECK(position("alphabet: a b\nbudget: 0\n") == std::pair<std::size_t, std::size_t>{2, 9});
  CHECK(position("  alphabet a b\n") == std::pair<std::size_t, std::size_t>{1, 3});
  CHECK(position("alphabet: a b\nequation: x y = $\n").first == 2);
  CHECK(position("alphabet: a a\n").first == 1);
  CHECK_THROWS_AS(parse_config("rel: identity\n"), ParseError);
  CHECK_THROWS_AS(load_config("/nonexistent/job.cfg"), ConfigError);
}

TEST_CASE("cmd_hull") {
  auto r = cmd_hull(fixture("classical.cfg"));
  CHECK(json_strings(r.data["free_basis"]) == std::vector<std::string>{"a", "bc"});
  CHECK(r.data["rank"] == 2);
  CHECK(r.exit_code == kExitPass);

  auto e = cmd_hull(fixture("exph.cfg"));
  CHECK(e.data["pseudo_rank"] == 2);
  CHECK(e.data["classes"][0]["class"] == "[a]");
  CHECK(json_strings(e.data["classes"][0]["members"]) == std::vector<std::string>{"a", "c"});
  CHECK(e.data["classes"][1]["class"] == "[b]");
  CHECK(json_strings(e.data["classes"][1]["members"]) == std::vector<std::string>{"b"});

  auto empty = cmd_hull(fixture("empty_words.cfg"));
  CHECK(empty.data["rank"] == 0);
  CHECK(empty.data["free_basis"].empty());

  CHECK_THROWS_AS(cmd_hull(fixture("reversal.cfg")), ConfigError);
}

TEST_CASE("cmd_check") {
  auto e = cmd_check(fixture("exph.cfg"));
  CHECK(e.data["valid"] == true);
  CHECK(e.data["common_word"] == "abcba");
  CHECK(e.data["descent"]["alpha"]["x"] == "([a],[b],[a])");
  CHECK(e.data["descent"]["alpha_rank"] == 2);
  CHECK(e.exit_code == kExitPass);

  auto p2 = cmd_check(fixture("phi2.cfg"));
  CHECK(p2.data["valid"] == false);
  CHECK(json_strings(p2.data["lhs_language"]) == std::vector<std::string>{"aba", "abb"});
  CHECK(json_strings(p2.data["rhs_language"]) == std::vector<std::string>{"aab", "bab"});
  CHECK(p2.exit_code == kExitFail);

  auto c = cmd_check(fixture("classical.cfg"));
  CHECK(c.data["valid"] == true);
  CHECK(c.data["solution_rank"] == 2);

  CHECK_THROWS_AS(cmd_check(fixture("missing_assign.cfg")), ConfigError);
}

TEST_CASE("cmd_search") {
  auto s = cmd_search(fixture("swap.cfg"));
  CHECK(s.data["complete"] == true);
  CHECK(s.data["max_pseudo_rank"] == 1);
  CHECK(s.data["theorem_property"] == "pass");
  for (auto const& row : s.data["pseudo_solutions"]) {
    CHECK(row["pseudo_rank"].get<int>() <= 1);
  }
  CHECK(s.exit_code == kExitPass);

  auto c = cmd_search(fixture("commutation.cfg"));
  CHECK(c.data["max_ordinary_rank"] == 1);
  CHECK(c.data["ordinary_solutions"] == c.data["pseudo_solution_count"]);

  auto e = cmd_search(fixture("exph.cfg"));
  CHECK(e.data["max_pseudo_rank"] == 2);
  bool hit = false;
  for (auto const& row : e.data["pseudo_solutions"]) {
    hit = hit || row["assignment"] == nlohmann::ordered_json{{"x", "[abc]"}, {"y", "[b]"}, {"z", "[a]"}};
  }
  CHECK(hit);

  auto t = cmd_search(fixture("tight_budget.cfg"));
  CHECK(t.data["complete"] == false);
  CHECK(t.exit_code == kExitBudget);
}

TEST_CASE("cmd_verify_rel") {
  CHECK(cmd_verify_rel(fixture("swap_len4.cfg")).exit_code == kExitPass);
  auto r = cmd_verify_rel(fixture("reversal.cfg"));
  CHECK(r.exit_code == kExitFail);
  CHECK(r.data["counterexample"]["axiom"] == "split");
  auto id = fixture("classical.cfg");
  CHECK(cmd_verify_rel(id).data["verdict"] == "pass");
}

TEST_CASE("reports render deterministically") {
  auto cfg = fixture("exph.cfg");
  CHECK(cmd_search(cfg).render(true) == cmd_search(cfg).render(true));
  cfg.workers = 4;
  auto many   = cmd_search(cfg).render(true);
  cfg.workers = 1;
  CHECK(cmd_search(cfg).render(true) == many);
  auto text = cmd_check(cfg).render(false);
  CHECK(text.rfind("command: check\n", 0) == 0);
  auto machine = nlohmann::ordered_json::parse(cmd_check(cfg).render(true));
  CHECK(machine.begin().key() == "command");
  CHECK((--machine.end()).key() == "exit_code");
}
