#include "wellfound/entail.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

namespace wellfound {

namespace {

bool subsumes(const Sequent& clause, const Sequent& s) {
  return (clause.gamma & ~s.gamma) == 0 && (clause.delta & ~s.delta) == 0;
}

std::uint64_t key_of(const Sequent& s) {
  return (static_cast<std::uint64_t>(s.gamma) << 32) | s.delta;
}

}  // namespace

Sequent sequent_of(std::initializer_list<int> gamma, std::initializer_list<int> delta) {
  Sequent s;
  for (int a : gamma) s.gamma |= AtomSet{1} << a;
  for (int a : delta) s.delta |= AtomSet{1} << a;
  return s;
}

ClauseTheory::ClauseTheory(int atom_count, std::vector<Sequent> clauses,
                           std::vector<std::string> atom_names)
    : atom_count_(atom_count), clauses_(std::move(clauses)), atom_names_(std::move(atom_names)) {
  if (atom_count < 0 || atom_count > kMaxAtoms) {
    throw SizeLimitError("atom count must be between 0 and " + std::to_string(kMaxAtoms));
  }
  for (const Sequent& c : clauses_) {
    if ((c.gamma | c.delta) & ~atom_mask()) {
      throw InvalidElementError("clause mentions an atom outside the theory's atom set");
    }
  }
  std::sort(clauses_.begin(), clauses_.end(), [](const Sequent& a, const Sequent& b) {
    return key_of(a) < key_of(b);
  });
  clauses_.erase(std::unique(clauses_.begin(), clauses_.end()), clauses_.end());
  if (atom_names_.empty()) {
    for (int a = 0; a < atom_count_; ++a) atom_names_.push_back("p" + std::to_string(a));
  }
  if (static_cast<int>(atom_names_.size()) != atom_count_) {
    throw Error("atom name table size differs from the atom count");
  }
}

std::optional<int> ClauseTheory::atom_index(const std::string& name) const {
  for (int a = 0; a < atom_count_; ++a) {
    if (atom_names_[static_cast<std::size_t>(a)] == name) return a;
  }
  return std::nullopt;
}

namespace {

int pick_split_atom(const ClauseTheory& t, const Sequent& s, SplitHeuristic h) {
  AtomSet assigned = s.gamma | s.delta;
  AtomSet free = t.atom_mask() & ~assigned;
  if (free == 0) return -1;
  if (h == SplitHeuristic::LowestIndex) return std::countr_zero(free);
  if (h == SplitHeuristic::UnitPropagation) {
    // a clause one atom short of subsuming the sequent: splitting on that
    // atom closes one premise by AxT right away
    for (const Sequent& c : t.clauses()) {
      AtomSet missing = (c.gamma & ~s.gamma) | (c.delta & ~s.delta);
      if (std::popcount(missing) == 1 && (missing & free)) {
        return std::countr_zero(missing);
      }
    }
    return std::countr_zero(free);
  }
  int best = -1, best_count = -1;
  for (int a = 0; a < t.atom_count(); ++a) {
    if (!(free & (AtomSet{1} << a))) continue;
    int count = 0;
    for (const Sequent& c : t.clauses()) {
      if (subsumes(c, s)) continue;
      if ((c.gamma | c.delta) & (AtomSet{1} << a)) ++count;
    }
    if (count > best_count) {
      best = a;
      best_count = count;
    }
  }
  return best;
}

class Prover {
 public:
  Prover(const ClauseTheory& t, SplitHeuristic h) : t_(t), h_(h) {}

  bool decide(const Sequent& s) {
    if (s.gamma & s.delta) return true;  // Ax
    auto [it, inserted] = memo_.try_emplace(key_of(s), -1);
    if (!inserted && it->second >= 0) return it->second == 1;
    bool verdict = false;
    for (const Sequent& c : t_.clauses()) {
      if (subsumes(c, s)) {
        verdict = true;  // AxT
        break;
      }
    }
    if (!verdict) {
      int f = pick_split_atom(t_, s, h_);
      if (f >= 0) {
        Sequent left{s.gamma | (AtomSet{1} << f), s.delta};
        Sequent right{s.gamma, s.delta | (AtomSet{1} << f)};
        verdict = decide(left) && decide(right);
      }
    }
    memo_[key_of(s)] = verdict ? 1 : 0;
    return verdict;
  }

  std::optional<Derivation> build(const Sequent& s) {
    if (!decide(s)) return std::nullopt;
    Derivation d;
    if (s.gamma & s.delta) {
      d.rule = Derivation::Rule::Ax;
      d.atom = std::countr_zero(s.gamma & s.delta);
      return d;
    }
    for (std::size_t i = 0; i < t_.clauses().size(); ++i) {
      if (subsumes(t_.clauses()[i], s)) {
        d.rule = Derivation::Rule::AxT;
        d.clause_index = static_cast<int>(i);
        return d;
      }
    }
    int f = pick_split_atom(t_, s, h_);
    d.rule = Derivation::Rule::Cut;
    d.atom = f;
    d.left = std::make_unique<Derivation>(*build(Sequent{s.gamma | (AtomSet{1} << f), s.delta}));
    d.right = std::make_unique<Derivation>(*build(Sequent{s.gamma, s.delta | (AtomSet{1} << f)}));
    return d;
  }

 private:
  const ClauseTheory& t_;
  SplitHeuristic h_;
  std::unordered_map<std::uint64_t, std::int8_t> memo_;
};

void require_over_atoms(const ClauseTheory& t, const Sequent& s) {
  if ((s.gamma | s.delta) & ~t.atom_mask()) {
    throw InvalidElementError("sequent mentions an atom outside the theory's atom set");
  }
}

}  // namespace

bool derivable(const ClauseTheory& t, const Sequent& s, SplitHeuristic h) {
  require_over_atoms(t, s);
  Prover p(t, h);
  return p.decide(s);
}

std::optional<Derivation> derive(const ClauseTheory& t, const Sequent& s, SplitHeuristic h) {
  require_over_atoms(t, s);
  Prover p(t, h);
  return p.build(s);
}

struct EntailmentEngine::Impl {
  ClauseTheory theory;
  Prover prover;
  Impl(ClauseTheory t, SplitHeuristic h) : theory(std::move(t)), prover(theory, h) {}
};

EntailmentEngine::EntailmentEngine(ClauseTheory t, SplitHeuristic h)
    : impl_(std::make_shared<Impl>(std::move(t), h)) {}

const ClauseTheory& EntailmentEngine::theory() const { return impl_->theory; }

bool EntailmentEngine::derivable(const Sequent& s) const {
  require_over_atoms(impl_->theory, s);
  return impl_->prover.decide(s);
}

bool recheck_derivation(const ClauseTheory& t, const Sequent& s, const Derivation& d) {
  switch (d.rule) {
    case Derivation::Rule::Ax:
      return d.atom >= 0 && (s.gamma & s.delta & (AtomSet{1} << d.atom));
    case Derivation::Rule::AxT: {
      if (d.clause_index < 0 || d.clause_index >= static_cast<int>(t.clauses().size())) return false;
      return subsumes(t.clauses()[static_cast<std::size_t>(d.clause_index)], s);
    }
    case Derivation::Rule::Cut: {
      if (d.atom < 0 || d.atom >= t.atom_count()) return false;
      AtomSet f = AtomSet{1} << d.atom;
      if ((s.gamma | s.delta) & f) return false;
      if (!d.left || !d.right) return false;
      return recheck_derivation(t, Sequent{s.gamma | f, s.delta}, *d.left) &&
             recheck_derivation(t, Sequent{s.gamma, s.delta | f}, *d.right);
    }
  }
  return false;
}

namespace {

// nu-side search: extend the sequent with fresh atoms, never entering the
// up-closure of the theory.  Tries the positive side first.
bool disprove(const ClauseTheory& t, Sequent s, Sequent& out) {
  for (const Sequent& c : t.clauses()) {
    if (subsumes(c, s)) return false;
  }
  AtomSet free = t.atom_mask() & ~(s.gamma | s.delta);
  if (free == 0) {
    out = s;
    return true;
  }
  int f = std::countr_zero(free);
  if (disprove(t, Sequent{s.gamma | (AtomSet{1} << f), s.delta}, out)) return true;
  return disprove(t, Sequent{s.gamma, s.delta | (AtomSet{1} << f)}, out);
}

}  // namespace

bool positively_disprovable(const ClauseTheory& t, const Sequent& s) {
  require_over_atoms(t, s);
  Sequent witness;
  return disprove(t, s, witness);
}

std::optional<Valuation> disproof_witness(const ClauseTheory& t, const Sequent& s) {
  require_over_atoms(t, s);
  if (!is_proper(s)) return std::nullopt;
  Sequent witness;
  if (!disprove(t, s, witness)) return std::nullopt;
  return Valuation{witness.gamma, t.atom_count()};
}

bool satisfies(const Valuation& alpha, const ClauseTheory& t) {
  for (const Sequent& c : t.clauses()) {
    bool gamma_true = (c.gamma & ~alpha.bits) == 0;
    bool delta_hit = (c.delta & alpha.bits) != 0;
    if (gamma_true && !delta_hit) return false;
  }
  return true;
}

bool positively_falsifies(const Valuation& alpha, const ClauseTheory& t) {
  for (const Sequent& c : t.clauses()) {
    if ((c.gamma & ~alpha.bits) == 0 && (c.delta & alpha.bits) == 0) return true;
  }
  return false;
}

std::optional<Valuation> find_model(const ClauseTheory& t) {
  if (auto w = disproof_witness(t, Sequent{})) {
    return w;
  }
  return std::nullopt;
}

Approx sequent_to_approx(const Sequent& s, int atom_count) {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < atom_count; ++a) {
    if (s.gamma & (AtomSet{1} << a)) pairs.emplace_back(a, 1);
    if (s.delta & (AtomSet{1} << a)) pairs.emplace_back(a, 0);
  }
  return Approx(std::move(pairs));
}

ApproxPred theory_pred(const ClauseTheory& t) {
  std::vector<Approx> clause_sets;
  for (const Sequent& c : t.clauses()) {
    clause_sets.push_back(canonical_form(sequent_to_approx(c, t.atom_count())));
  }
  return ApproxPred(t.atom_count(), Alphabet(2), [clause_sets](const Approx& v) {
    return std::find(clause_sets.begin(), clause_sets.end(), v) != clause_sets.end();
  });
}

CompletenessReport check_completeness(const ClauseTheory& t) {
  CompletenessReport rep;
  rep.inconsistent = derivable(t, Sequent{});
  ApproxPred pred = theory_pred(t);
  rep.inductively_barred = is_inductively_barred(pred);
  rep.model = find_model(t);
  rep.choice = find_choice_function(pred.complement());
  rep.provability_coincides = rep.inconsistent == rep.inductively_barred;
  rep.model_coincides = rep.model.has_value() == rep.choice.has_value();

  rep.witnesses_valid = true;
  if (rep.model && !satisfies(*rep.model, t)) rep.witnesses_valid = false;
  if (rep.choice) {
    if (!choice_function_valid(pred.complement(), *rep.choice)) rep.witnesses_valid = false;
    // a choice function of the complement is exactly a non-falsifying model
    AtomSet bits = 0;
    for (int a = 0; a < t.atom_count(); ++a) {
      if ((*rep.choice)[static_cast<std::size_t>(a)] == 1) bits |= AtomSet{1} << a;
    }
    if (positively_falsifies(Valuation{bits, t.atom_count()}, t)) rep.witnesses_valid = false;
  }
  rep.holds = rep.provability_coincides && rep.model_coincides && rep.witnesses_valid;
  return rep;
}

}  // namespace wellfound
