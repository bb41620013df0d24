#pragma once

#include <cstdint>
#include <memory>
#include <optional>

#include "wellfound/approx.hpp"

namespace wellfound {

using AtomSet = std::uint32_t;
inline constexpr int kMaxAtoms = 20;

// Two-sided clause Gamma |> Delta over an indexed atom set; both sides are
// treated as sets.
struct Sequent {
  AtomSet gamma = 0;
  AtomSet delta = 0;
  friend bool operator==(const Sequent&, const Sequent&) = default;
};

inline bool is_proper(const Sequent& s) { return (s.gamma & s.delta) == 0; }
Sequent sequent_of(std::initializer_list<int> gamma, std::initializer_list<int> delta);

// Finite set of clauses; duplicates are canonicalized away.
class ClauseTheory {
 public:
  ClauseTheory(int atom_count, std::vector<Sequent> clauses,
               std::vector<std::string> atom_names = {});

  int atom_count() const { return atom_count_; }
  AtomSet atom_mask() const { return (AtomSet{1} << atom_count_) - 1u; }
  const std::vector<Sequent>& clauses() const { return clauses_; }
  const std::string& atom_name(int a) const { return atom_names_[static_cast<std::size_t>(a)]; }
  const std::vector<std::string>& atom_names() const { return atom_names_; }
  std::optional<int> atom_index(const std::string& name) const;

 private:
  int atom_count_;
  std::vector<Sequent> clauses_;
  std::vector<std::string> atom_names_;
};

struct Valuation {
  AtomSet bits = 0;
  int atom_count = 0;
  bool value(int a) const { return (bits >> a) & 1u; }
};

enum class SplitHeuristic {
  LowestIndex,      // deterministic default
  MostFrequent,     // atom occurring most often in not-yet-subsumed clauses
  UnitPropagation,  // prefer an atom completing a one-atom-short clause
};

// Ax:   Gamma and Delta share an atom.
// AxT:  some clause Gamma' |> Delta' with Gamma' <= Gamma and Delta' <= Delta
//       (the up-closure of the theory under the inclusion order).
// Cut:  split on an atom F outside Gamma u Delta.
struct Derivation {
  enum class Rule { Ax, AxT, Cut };
  Rule rule{};
  int atom = -1;          // Ax shared atom / Cut split atom
  int clause_index = -1;  // AxT
  std::unique_ptr<Derivation> left;   // Cut: Gamma, F |> Delta
  std::unique_ptr<Derivation> right;  // Cut: Gamma |> Delta, F
};

bool derivable(const ClauseTheory& t, const Sequent& s,
               SplitHeuristic h = SplitHeuristic::LowestIndex);
std::optional<Derivation> derive(const ClauseTheory& t, const Sequent& s,
                                 SplitHeuristic h = SplitHeuristic::LowestIndex);
bool recheck_derivation(const ClauseTheory& t, const Sequent& s, const Derivation& d);

// Splitting prover with a memo table that persists across queries on the
// same theory.  Not safe to share between threads.
class EntailmentEngine {
 public:
  explicit EntailmentEngine(ClauseTheory t, SplitHeuristic h = SplitHeuristic::LowestIndex);
  const ClauseTheory& theory() const;
  bool derivable(const Sequent& s) const;

 private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
};

// Positive disprovability: the explicit nu-side witness search.  The verdict
// complements derivable() classically on proper sequents; the witness is the
// completing assignment (atoms in Gamma true, atoms in Delta false).
bool positively_disprovable(const ClauseTheory& t, const Sequent& s);
std::optional<Valuation> disproof_witness(const ClauseTheory& t, const Sequent& s);

bool satisfies(const Valuation& alpha, const ClauseTheory& t);
bool positively_falsifies(const Valuation& alpha, const ClauseTheory& t);

std::optional<Valuation> find_model(const ClauseTheory& t);

// Clauses as canonical pair sets over A x B: (a,1) for a in Gamma and (a,0)
// for a in Delta, so that v < alpha fails exactly on satisfied clauses.
Approx sequent_to_approx(const Sequent& s, int atom_count);
ApproxPred theory_pred(const ClauseTheory& t);

struct CompletenessReport {
  bool inconsistent = false;          // derivable(empty |> empty)
  bool inductively_barred = false;    // via the generic approximation engine
  std::optional<Valuation> model;
  std::optional<ChoiceFun> choice;    // choice function of the complement
  bool provability_coincides = false;
  bool model_coincides = false;
  bool witnesses_valid = false;
  bool holds = false;
};
CompletenessReport check_completeness(const ClauseTheory& t);

}  // namespace wellfound
