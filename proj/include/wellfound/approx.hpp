#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wellfound/rel.hpp"

namespace wellfound {

// Finite approximation of a function A -> B: a sequence of (index, value)
// pairs.  Duplicates and conflicting values for the same index are allowed;
// predicates over approximations only ever see the canonical form.
class Approx {
 public:
  Approx() = default;
  explicit Approx(std::vector<std::pair<int, int>> pairs) : pairs_(std::move(pairs)) {}

  Approx star(int a, int b) const;  // v * (a,b)
  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
  int size() const { return static_cast<int>(pairs_.size()); }
  bool contains(int a, int b) const;
  bool domain_contains(int a) const;
  std::vector<int> domain() const;  // dom(v), sorted, duplicate-free
  std::string to_string() const;

  friend bool operator==(const Approx&, const Approx&) = default;

 private:
  std::vector<std::pair<int, int>> pairs_;
};

// Duplicate-free representative sorted by (index, value); v ~ v' iff the
// canonical forms coincide.
Approx canonical_form(const Approx& v);
bool equivalent(const Approx& a, const Approx& b);

// Predicate over (A x B)*, invariant under ~ by construction: membership
// canonicalizes before consulting the oracle.  Oracles must be pure.
// The pair space A x B is capped at 22 bits so engines can key their memo
// tables by a packed pair-set.
class ApproxPred {
 public:
  using Oracle = std::function<bool(const Approx&)>;

  ApproxPred(int domain_size, Alphabet codomain, Oracle oracle);
  static ApproxPred from_mask_table(int domain_size, const Alphabet& codomain,
                                    std::vector<std::uint8_t> table);

  int domain_size() const { return domain_size_; }
  const Alphabet& codomain() const { return codomain_; }
  int pair_bits() const { return domain_size_ * codomain_.size(); }

  bool member(const Approx& v) const;
  bool member_mask(std::uint32_t pairset) const;

  ApproxPred complement() const;

  std::uint32_t mask_of(const Approx& v) const;
  Approx approx_of(std::uint32_t pairset) const;

 private:
  int domain_size_;
  Alphabet codomain_;
  Oracle oracle_;
};

// The closure operators transported to the inclusion order on approximations.
bool in_down_interior(const ApproxPred& t, const Approx& v);  // every subset in T
bool in_up_closure(const ApproxPred& t, const Approx& v);     // some subset in T
ApproxPred down_interior(const ApproxPred& t);
ApproxPred up_closure(const ApproxPred& t);
ApproxPred superset_closure(const ApproxPred& t);   // some superset in T
ApproxPred superset_interior(const ApproxPred& t);  // every superset in T

// nu X. \v. (v in down-interior(T) and forall a not in dom(v) exists b,
// v*(a,b) in X).  Each unfolding consumes a fresh index, so the fixpoint is
// reached after at most |A| steps.
bool approximable_from(const ApproxPred& t, const Approx& v);
bool is_approximable(const ApproxPred& t);

// Stage-k approximant of the same nu: survival for k extension rounds.
bool bounded_approximable(const ApproxPred& t, const Approx& v, int k);
int bounded_approximable_stage(const ApproxPred& t);  // largest surviving k (capped at |A|)

// mu X. \v. (v in up-closure(T) or exists a not in dom(v) forall b,
// v*(a,b) in X), with a derivation recording the split index per node.
struct BarDerivation {
  bool via_member = false;
  int split_atom = -1;
  std::vector<BarDerivation> branches;  // one per codomain value
};
bool inductively_barred_from(const ApproxPred& t, const Approx& v);
std::optional<BarDerivation> bar_derivation_from(const ApproxPred& t, const Approx& v);
bool recheck_bar_derivation(const ApproxPred& t, const Approx& v, const BarDerivation& d);
bool is_inductively_barred(const ApproxPred& t);

// A-B-choice function: alpha with every v < alpha in T.
using ChoiceFun = std::vector<int>;
std::optional<ChoiceFun> find_choice_function(const ApproxPred& t);
bool choice_function_valid(const ApproxPred& t, const ChoiceFun& alpha);
bool is_barred_approx(const ApproxPred& t);  // forall alpha exists v < alpha, v in T

struct GdcReport {
  bool approximable = false;
  std::optional<ChoiceFun> choice;
  bool holds = false;
};
GdcReport check_gdc(const ApproxPred& t);

struct GbiReport {
  bool barred = false;
  bool inductively_barred = false;
  bool holds = false;
};
GbiReport check_gbi(const ApproxPred& t);

// Encodings between B* and (N x B)*: ord(u * b) = ord(u) * (|u|, b),
// ||T||(u) = T(ord(u)), lift(T)(v) = exists u in T with v = ord(u).
Approx ord(const SeqU& u);
Pred ordered_pred(const ApproxPred& t, const Universe& universe);
ApproxPred lift(const Pred& t);

// Alignments of a heterogeneous relation over the approximation space.
ApproxPred relation_alignment_pos(const HetRel& r);  // every pair satisfies R
ApproxPred relation_alignment_neg(const HetRel& r);  // some pair satisfies R

// Injectivity constraint: v is admitted unless it maps two distinct indices
// to the same value.
ApproxPred injective_pred(int domain_size, int codomain_size);

struct PigeonholeReport {
  int domain_size = 0;
  int codomain_size = 0;
  int max_stage = 0;
  bool approximable = false;
  bool has_choice_function = false;
  std::string narrative;
};
PigeonholeReport pigeonhole_demo(int m, int n);  // requires m > n >= 1

}  // namespace wellfound
