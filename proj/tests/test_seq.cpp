#include <doctest.h>

#include "oracles.hpp"

using namespace wellfound;

TEST_SUITE_BEGIN("seq");

TEST_CASE("extend appends a single element") {
  Alphabet two(2);
  CHECK(extend(SeqU(), 1, two) == SeqU({1}));
  CHECK(extend(SeqU({0, 1}), 0, two) == SeqU({0, 1, 0}));
  CHECK_THROWS_AS(extend(SeqU({1}), 2, two), InvalidElementError);
  CHECK_THROWS_AS(extend(SeqU(), -1, two), InvalidElementError);
}

TEST_CASE("is_prefix unfolds the two inductive rules") {
  CHECK(is_prefix(SeqU(), SeqU({0, 1})));
  CHECK(is_prefix(SeqU({0, 1}), SeqU({0, 1})));
  CHECK_FALSE(is_prefix(SeqU({1}), SeqU({0, 1})));
  CHECK_FALSE(is_prefix(SeqU({0, 1}), SeqU({0})));
}

TEST_CASE("is_prefix is a partial order, exhaustively up to length 3") {
  for (int b = 1; b <= 3; ++b) {
    std::vector<SeqU> seqs = oracle::all_seqs(b, 3);
    for (const SeqU& u : seqs) {
      CHECK(is_prefix(u, u));
      for (const SeqU& v : seqs) {
        if (is_prefix(u, v) && is_prefix(v, u)) CHECK(u == v);
        for (const SeqU& w : seqs) {
          if (is_prefix(u, v) && is_prefix(v, w)) CHECK(is_prefix(u, w));
        }
      }
    }
  }
}

TEST_CASE("prefix_of_branch compares pointwise") {
  Branch alpha({1, 0, 1});
  CHECK(prefix_of_branch(SeqU(), alpha));
  CHECK(prefix_of_branch(SeqU({1, 0}), alpha));
  CHECK_FALSE(prefix_of_branch(SeqU({1, 1}), alpha));
  CHECK_THROWS_AS(prefix_of_branch(SeqU({1, 0, 1, 0}), alpha), DepthError);
}

TEST_CASE("prefix_of_branch is closed under earlier prefixes") {
  for (int b = 1; b <= 3; ++b) {
    std::vector<SeqU> seqs = oracle::all_seqs(b, 3);
    for (const Branch& alpha : oracle::all_branches(b, 3)) {
      for (const SeqU& u : seqs) {
        CHECK(prefix_of_branch(u, alpha) == oracle::prefix_pointwise(u, alpha));
        if (!prefix_of_branch(u, alpha)) continue;
        for (const SeqU& v : seqs) {
          if (is_prefix(v, u)) CHECK(prefix_of_branch(v, alpha));
        }
      }
    }
  }
}

TEST_CASE("cons_branch prepends one value") {
  CHECK(cons_branch(1, Branch({0, 0})) == Branch({1, 0, 0}));
  CHECK(cons_branch(0, Branch()) == Branch({0}));
}

TEST_CASE("a @ u stays a prefix of a @ alpha, exhaustively") {
  for (int b = 1; b <= 3; ++b) {
    for (const Branch& alpha : oracle::all_branches(b, 3)) {
      for (const SeqU& u : oracle::all_seqs(b, 3)) {
        if (u.length() > alpha.depth() || !prefix_of_branch(u, alpha)) continue;
        for (int a = 0; a < b; ++a) {
          CHECK(prefix_of_branch(cons_seq(a, u), cons_branch(a, alpha)));
        }
      }
    }
  }
}

TEST_CASE("concatenation keeps the first argument first") {
  CHECK(concat(SeqU({0}), SeqU({1, 1})) == SeqU({0, 1, 1}));
  CHECK(cons_seq(2, SeqU({0})) == SeqU({2, 0}));
  CHECK(branch_prefix(Branch({1, 0, 1}), 2) == SeqU({1, 0}));
}

TEST_SUITE_END();
