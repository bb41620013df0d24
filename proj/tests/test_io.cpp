#include <doctest.h>

#include "wellfound/theory_io.hpp"

using namespace wellfound;

TEST_SUITE_BEGIN("io");

TEST_CASE("theory files parse to canonical theories") {
  ClauseTheory t = parse_theory(
      R"({"atoms": ["a", "b"],
          "clauses": [{"antecedent": [], "succedent": ["a", "b"]},
                       {"antecedent": ["a"], "succedent": ["b"]}]})");
  CHECK(t.atom_count() == 2);
  CHECK(t.atom_name(0) == "a");
  CHECK(t.clauses().size() == 2);
  CHECK(*t.atom_index("b") == 1);
  CHECK_FALSE(t.atom_index("c").has_value());
  ClauseTheory round = parse_theory(theory_to_json(t));
  CHECK(round.clauses() == t.clauses());
}

TEST_CASE("syntax errors carry line and column") {
  try {
    parse_theory("{\n  \"atoms\": [\"a\"],\n  \"clauses\": [}");
    FAIL("expected a parse error");
  } catch (const FileParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() > 0);
  }
}

TEST_CASE("semantic theory errors are reported") {
  CHECK_THROWS_AS(parse_theory(R"({"atoms": ["a"], "clauses": [{"antecedent": ["x"]}]})"),
                  FileParseError);
  CHECK_THROWS_AS(parse_theory(R"({"atoms": ["a", "a"], "clauses": []})"), FileParseError);
  CHECK_THROWS_AS(parse_theory(R"({"clauses": []})"), FileParseError);
  CHECK_THROWS_AS(parse_theory(R"({"atoms": [3], "clauses": []})"), FileParseError);
}

TEST_CASE("derivations serialize with AX/AXT/CUT tags") {
  ClauseTheory t = parse_theory(
      R"({"atoms": ["a"],
          "clauses": [{"antecedent": ["a"], "succedent": []},
                       {"antecedent": [], "succedent": ["a"]}]})");
  auto d = derive(t, Sequent{});
  REQUIRE(d.has_value());
  std::string json_text = derivation_to_json(t, Sequent{}, *d);
  CHECK(json_text.find("\"CUT\"") != std::string::npos);
  CHECK(json_text.find("\"AXT\"") != std::string::npos);
  CHECK(json_text.find("\"left\"") != std::string::npos);
  std::string model_text = valuation_to_json(t, Valuation{1, 1});
  CHECK(model_text == R"({"a":1})");
}

TEST_CASE("predicate files list members as digit strings") {
  Universe u(Alphabet(2), 2);
  Pred t = parse_predicate("\xce\xb5\n1\n11\n# comment\n\n", u);
  CHECK(t.count() == 3);
  CHECK(t.member(SeqU()));
  CHECK(t.member(SeqU({1})));
  CHECK(t.member(SeqU({1, 1})));
  Pred dash = parse_predicate("-\n0\n", u);
  CHECK(dash.member(SeqU()));
  CHECK(dash.member(SeqU({0})));
}

TEST_CASE("predicate files reject foreign digits and deep lines") {
  Universe u(Alphabet(2), 2);
  try {
    parse_predicate("0\n2\n", u);
    FAIL("expected a parse error");
  } catch (const FileParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_predicate("000\n", u), FileParseError);
  CHECK_THROWS_AS(parse_predicate("0a\n", u), FileParseError);
}

TEST_SUITE_END();
