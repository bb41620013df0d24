#include <doctest.h>

#include "oracles.hpp"

using namespace wellfound;

TEST_SUITE_BEGIN("found");

namespace {

Pred pred_of(const Universe& u, std::initializer_list<SeqU> members) {
  return Pred::from_members(u, std::vector<SeqU>(members));
}

const Universe u22(Alphabet(2), 2);

}  // namespace

TEST_CASE("progressing and hereditary at a node") {
  Pred empty(u22);
  CHECK(progressing_at(empty, SeqU()));
  CHECK(progressing_at(pred_of(u22, {SeqU(), SeqU({0})}), SeqU()));
  CHECK_FALSE(progressing_at(pred_of(u22, {SeqU()}), SeqU()));
  // duality with hereditary on the complement
  for (std::uint64_t mask = 0; mask < 128; ++mask) {
    Pred t = Pred::from_mask(u22, mask);
    Pred c = complement(t);
    for (std::size_t r = 0; r < u22.node_count(); ++r) {
      SeqU s = u22.unrank(r);
      CHECK(progressing_at(t, s) == hereditary_at(c, s));
    }
  }
}

TEST_CASE("pruning iterates the deflationary step to stability") {
  CHECK(pruning(Pred::full(u22)) == Pred::full(u22));
  CHECK(pruning(pred_of(u22, {SeqU(), SeqU({0})})) == Pred(u22));
  Pred chain = pred_of(u22, {SeqU(), SeqU({1}), SeqU({1, 1})});
  CHECK(pruning(chain) == chain);
}

TEST_CASE("hereditary closure adds nodes whose children are all barred") {
  CHECK(hereditary_closure(Pred::full(u22)) == Pred::full(u22));
  CHECK(hereditary_closure(pred_of(u22, {SeqU({0}), SeqU({1})})) ==
        pred_of(u22, {SeqU(), SeqU({0}), SeqU({1})}));
  CHECK(hereditary_closure(Pred(u22)) == Pred(u22));
}

TEST_CASE("closed boundary ends the universe hard") {
  CHECK(pruning(Pred::full(u22), Boundary::Closed) == Pred(u22));
  CHECK(hereditary_closure(Pred(u22), Boundary::Closed) == Pred::full(u22));
}

TEST_CASE("pruning matches the literal iteration oracle") {
  std::mt19937_64 rng(23);
  Universe u(Alphabet(2), 3);
  for (int i = 0; i < 100; ++i) {
    Pred t = oracle::random_pred(u, rng);
    CHECK(pruning(t) == oracle::pruning_by_iteration(t));
  }
}

TEST_CASE("classification across the property wheel") {
  SUBCASE("full universe") {
    std::vector<FoundReport> reps = classify(Pred::full(u22));
    for (const FoundReport& r : reps) CHECK(r.holds);
    CHECK(reps[8].property == "infinite-branch");
    CHECK(*reps[8].witness_branch == Branch({0, 0}));
    CHECK(reps[5].property == "uniformly-barred");
    CHECK(*reps[5].witness_level == 0);
  }
  SUBCASE("the level-1 bar") {
    Pred t = pred_of(u22, {SeqU({0}), SeqU({1})});
    CHECK(is_barred(t));
    CHECK(is_inductively_barred(t));
    CHECK_FALSE(is_spread(t));
    CHECK(*uniform_bar_level(t) == 1);
    CHECK_FALSE(has_infinite_branch(t));
  }
  SUBCASE("a single surviving chain") {
    Pred t = pred_of(u22, {SeqU(), SeqU({1}), SeqU({1, 1})});
    CHECK(is_productive(t));
    CHECK(*find_infinite_branch(t) == Branch({1, 1}));
    CHECK(is_barred(t));  // the root alone already bars every branch
  }
  SUBCASE("a rootless singleton is not barred") {
    Pred t = pred_of(u22, {SeqU({1})});
    CHECK_FALSE(is_barred(t));
    CHECK(*find_avoiding_branch(t) == Branch({0, 0}));
    CHECK_FALSE(is_productive(t));
  }
  SUBCASE("failure witnesses certify their verdicts") {
    Pred t = pred_of(u22, {SeqU(), SeqU({1})});  // progressing fails at <1>
    std::vector<FoundReport> reps = classify(t);
    REQUIRE(reps[0].property == "spread");
    CHECK_FALSE(reps[0].holds);
    REQUIRE(reps[0].witness_node.has_value());
    CHECK(*reps[0].witness_node == SeqU({1}));
    CHECK_FALSE(progressing_at(t, *reps[0].witness_node));
    REQUIRE(reps[4].property == "unbounded-paths");
    CHECK_FALSE(reps[4].holds);
    CHECK(*reps[4].witness_level == 2);  // no chain reaches depth 2
    REQUIRE(reps[6].property == "staged-infinite");
    CHECK(*reps[6].witness_level == 2);
  }
}

TEST_CASE("extensional notions agree with branch enumeration") {
  std::mt19937_64 rng(29);
  for (int b = 2; b <= 3; ++b) {
    Universe u(Alphabet(b), b == 2 ? 3 : 2);
    for (int i = 0; i < 200; ++i) {
      Pred t = oracle::random_pred(u, rng);
      CHECK(has_infinite_branch(t) == oracle::has_branch(t));
      CHECK(is_barred(t) == oracle::barred(t));
      if (auto alpha = find_infinite_branch(t)) {
        for (int n = 0; n <= u.depth(); ++n) CHECK(t.member(branch_prefix(*alpha, n)));
      }
    }
  }
}

TEST_CASE("relativised variants") {
  CHECK(productive_from(Pred::full(u22), SeqU({1})));
  CHECK(inductively_barred_from(pred_of(u22, {SeqU({1, 0}), SeqU({1, 1})}), SeqU({1})));
  CHECK_FALSE(barred_from(pred_of(u22, {SeqU({1, 0})}), SeqU({0})));
  CHECK(barred_from(pred_of(u22, {SeqU({1, 0}), SeqU({1, 1})}), SeqU({1})));
  Pred t = pred_of(u22, {SeqU(), SeqU({1}), SeqU({1, 0})});
  CHECK(unbounded_from(t, SeqU({1})));
  CHECK_FALSE(unbounded_from(t, SeqU({0})));
  CHECK(uniformly_barred_from(t, SeqU({1})));
  CHECK(branch_from(t, SeqU({1})).has_value());
}

TEST_CASE("relativised fixpoint verdicts equal subtree-extensional ones") {
  std::mt19937_64 rng(31);
  Universe u(Alphabet(2), 3);
  for (int i = 0; i < 100; ++i) {
    Pred t = oracle::random_pred(u, rng);
    // the level-wise readings relativise only along chains that stay inside
    // T (resp. outside T); elsewhere the global closures diverge from the
    // subtree fixpoints
    Pred inside = down_arborify(t);
    Pred outside = down_arborify(complement(t));
    for (std::size_t r = 0; r < u.node_count(); ++r) {
      SeqU s = u.unrank(r);
      CHECK(productive_from(t, s) == branch_from(t, s).has_value());
      CHECK(inductively_barred_from(t, s) == barred_from(t, s));
      if (inside.member(r)) CHECK(productive_from(t, s) == unbounded_from(t, s));
      if (outside.member(r)) {
        CHECK(inductively_barred_from(t, s) == uniformly_barred_from(t, s));
      }
    }
  }
}

TEST_CASE("principles hold on every small instance") {
  Pred t(u22);
  for (std::uint64_t mask = 0; mask < 128; ++mask) {
    t.assign_mask(mask);
    for (const std::string& name : principle_names()) {
      PrincipleReport rep = check_principle(name, t);
      CHECK(rep.holds);
    }
  }
  CHECK_THROWS_AS(check_principle("DC-bogus", t), UnknownNameError);
}

TEST_CASE("principle hypothesis/conclusion wiring") {
  PrincipleReport dc = check_principle(Principle::DcSpread, Pred::full(u22));
  CHECK(dc.hypothesis);
  CHECK(dc.conclusion);
  CHECK(dc.witness_branch.has_value());
  PrincipleReport bi = check_principle(Principle::BiInd, pred_of(u22, {SeqU({0}), SeqU({1})}));
  CHECK(bi.hypothesis);
  CHECK(bi.conclusion);
  // KL-staged needs the tree hypothesis: a bare depth-2 node is not enough
  PrincipleReport kl = check_principle(Principle::KlStaged, pred_of(u22, {SeqU({1, 1})}));
  CHECK_FALSE(kl.hypothesis);
  CHECK(kl.holds);
}

TEST_CASE("intensional trees extensionalize as in the defining clauses") {
  CHECK(itree_to_extensional(ITree::leaf(), u22) == Pred(u22));
  ITree all_leaves = ITree::node({ITree::leaf(), ITree::leaf()});
  CHECK(itree_to_extensional(all_leaves, u22) == pred_of(u22, {SeqU()}));
  ITree right = ITree::node({ITree::leaf(), all_leaves});
  CHECK(itree_to_extensional(right, u22) == pred_of(u22, {SeqU(), SeqU({1})}));
  CHECK_THROWS_AS(itree_to_extensional(right, Universe(Alphabet(2), 1)), DepthError);
}

TEST_CASE("realisability base and step clauses") {
  CHECK(realises(ITree::leaf(), Pred(u22)));
  CHECK_FALSE(realises(ITree::leaf(), pred_of(u22, {SeqU()})));
  CHECK(realises(ITree::node({ITree::leaf(), ITree::leaf()}), pred_of(u22, {SeqU()})));
}

TEST_CASE("every intensional tree realises its extensionalization") {
  Universe u(Alphabet(2), 3);
  std::vector<ITree> trees = enumerate_itrees(Alphabet(2), 3);
  CHECK(trees.size() == 26);
  for (const ITree& t : trees) {
    Pred ext = itree_to_extensional(t, u);
    CHECK(realises(t, ext));
    // every branch eventually leaves T(t)
    CHECK_FALSE(oracle::has_branch(ext));
  }
}

TEST_SUITE_END();
