#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wellfound/pred.hpp"

namespace wellfound {

// Convention for the mu/nu fixpoints at the truncation depth d.
//
// Open (the default) treats a depth-d member as extendable beyond the
// horizon: the nu step keeps it, and the mu step admits it only through
// plain membership.  Under this convention "productive" coincides with
// "has a down-arborified path of length d" and "inductively barred" with
// "uniformly barred by level d", so the finite identities of the theorem
// suites hold exactly.  Closed ends the universe hard at depth d.
enum class Boundary { Open, Closed };

bool progressing_at(const Pred& t, const SeqU& u, Boundary b = Boundary::Open);
bool hereditary_at(const Pred& t, const SeqU& u, Boundary b = Boundary::Open);
bool is_progressing(const Pred& t, Boundary b = Boundary::Open);
bool is_hereditary(const Pred& t, Boundary b = Boundary::Open);

// nu X. \u. (u in T and exists a, u*a in X), by iteration to stability.
Pred pruning(const Pred& t, Boundary b = Boundary::Open);
// mu X. \u. (u in T or forall a, u*a in X), by iteration to stability.
Pred hereditary_closure(const Pred& t, Boundary b = Boundary::Open);

bool is_spread(const Pred& t, Boundary b = Boundary::Open);
bool is_barricaded(const Pred& t, Boundary b = Boundary::Open);
bool is_productive(const Pred& t, Boundary b = Boundary::Open);
bool is_inductively_barred(const Pred& t, Boundary b = Boundary::Open);

bool has_unbounded_paths(const Pred& t);
std::optional<int> uniform_bar_level(const Pred& t);
bool is_uniformly_barred(const Pred& t);
bool is_staged_infinite(const Pred& t);
std::optional<int> staged_bar_level(const Pred& t);
bool is_staged_barred(const Pred& t);

// Extensional concepts at depth d.  Witnesses are lexicographically least.
std::optional<Branch> find_infinite_branch(const Pred& t);
bool has_infinite_branch(const Pred& t);
bool is_barred(const Pred& t);
std::optional<Branch> find_avoiding_branch(const Pred& t);  // witness against barred

// Relativised forms: the root versions with u @ u' in place of u'.
bool productive_from(const Pred& t, const SeqU& u, Boundary b = Boundary::Open);
bool inductively_barred_from(const Pred& t, const SeqU& u, Boundary b = Boundary::Open);
bool unbounded_from(const Pred& t, const SeqU& u);
bool uniformly_barred_from(const Pred& t, const SeqU& u);
std::optional<Branch> branch_from(const Pred& t, const SeqU& u);
bool barred_from(const Pred& t, const SeqU& u);

struct FoundReport {
  std::string property;
  bool holds = false;
  std::optional<SeqU> witness_node;
  std::optional<Branch> witness_branch;
  std::optional<int> witness_level;
  std::optional<Pred> fixpoint_table;
};

// One report per foundedness property, in a fixed order:
// spread, barricaded, productive, inductively-barred, unbounded-paths,
// uniformly-barred, staged-infinite, staged-barred, infinite-branch, barred.
std::vector<FoundReport> classify(const Pred& t, Boundary b = Boundary::Open);

enum class Principle {
  DcSpread,
  DcProductive,
  BiBarricaded,
  BiInd,
  KlSpread,
  KlProductive,
  FtBarricaded,
  FtInd,
  KlUnbounded,
  KlStaged,
  FtUniform,
  FtStaged,
};

const char* principle_name(Principle p);
Principle principle_from_name(const std::string& name);  // throws UnknownNameError
std::vector<std::string> principle_names();

struct PrincipleReport {
  Principle principle{};
  bool hypothesis = false;
  bool conclusion = false;
  bool holds = false;  // hypothesis implies conclusion on this instance
  std::string note;    // which reading the scheme-level equivalence needs
  std::optional<Branch> witness_branch;
  std::optional<int> witness_level;
};

PrincipleReport check_principle(Principle p, const Pred& t, Boundary b = Boundary::Open);
PrincipleReport check_principle(const std::string& name, const Pred& t,
                                Boundary b = Boundary::Open);

// Intensional trees: type tree = Leaf | Node of (A -> tree).
class ITree {
 public:
  static ITree leaf() { return ITree(); }
  static ITree node(std::vector<ITree> children);

  bool is_leaf() const { return leaf_; }
  const std::vector<ITree>& children() const { return children_; }
  int depth() const;  // Leaf has depth 0

 private:
  ITree() = default;
  bool leaf_ = true;
  std::vector<ITree> children_;
};

// Every intensional tree over the alphabet with depth <= max_depth.
std::vector<ITree> enumerate_itrees(const Alphabet& alphabet, int max_depth);

// T(t): u in T(Leaf) is false; u in T(Node f) iff u is empty or u = a @ u'
// with u' in T(f(a)).  Throws DepthError when the tree is deeper than the
// universe.
Pred itree_to_extensional(const ITree& t, const Universe& universe);

// Leaf realises T iff the empty sequence is not in T; Node(f) realises T iff
// it is and every f(a) realises the predicate shifted under a.
bool realises(const ITree& t, const Pred& T);

}  // namespace wellfound
