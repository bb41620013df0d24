#pragma once

#include <memory>

#include "wellfound/entail.hpp"

namespace wellfound {

inline constexpr int kMaxGenerators = 16;

// Canonical form of a free-Boolean-algebra element over n generators: its
// full truth table, one bit per generator valuation.  Two expressions denote
// the same algebra element iff their tables coincide.
class TruthTable {
 public:
  TruthTable(int var_count, bool value);
  static TruthTable top(int var_count) { return TruthTable(var_count, true); }
  static TruthTable bottom(int var_count) { return TruthTable(var_count, false); }
  static TruthTable generator(int var_count, int index);

  int var_count() const { return var_count_; }
  std::size_t size() const { return std::size_t{1} << var_count_; }
  bool value_at(AtomSet valuation) const;

  TruthTable operator&(const TruthTable& o) const;
  TruthTable operator|(const TruthTable& o) const;
  TruthTable operator~() const;
  bool entails(const TruthTable& o) const;  // the canonical order: b meet b' = b
  bool is_top() const;
  bool is_bottom() const;

  friend bool operator==(const TruthTable&, const TruthTable&) = default;

 private:
  int var_count_;
  std::vector<std::uint64_t> bits_;
};

// Expression tree over free generators.
class BoolExpr {
 public:
  enum class Kind { Var, Not, And, Or, Top, Bottom };

  static BoolExpr var(int index);
  static BoolExpr top();
  static BoolExpr bottom();
  static BoolExpr negate(BoolExpr e);
  static BoolExpr conj(BoolExpr l, BoolExpr r);
  static BoolExpr disj(BoolExpr l, BoolExpr r);

  Kind kind() const { return node_->kind; }
  int var_index() const { return node_->var; }
  const BoolExpr& lhs() const { return node_->lhs[0]; }
  const BoolExpr& rhs() const { return node_->lhs[1]; }
  int max_var() const;

 private:
  struct Node {
    Kind kind;
    int var = -1;
    std::vector<BoolExpr> lhs;  // 0, 1 (Not) or 2 (And/Or) children
  };
  explicit BoolExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// The quotient map: evaluate under every generator valuation.
TruthTable canon(const BoolExpr& e, int var_count);  // throws SizeLimitError past kMaxGenerators

// `a & (b | !c) | T | F` with precedence ! > & > |.  Identifiers resolve
// through `names`; unknown ones are appended.
BoolExpr parse_bool_expr(const std::string& text, std::vector<std::string>& names);

enum class Polarity { Filter, Ideal };

// Either the filter/ideal of a clause theory (F_T / I_T) or the one generated
// by an explicit finite set of elements.
class FilterSpec {
 public:
  static FilterSpec from_theory(ClauseTheory t, Polarity p = Polarity::Filter);
  static FilterSpec from_generators(int var_count, std::vector<TruthTable> generators,
                                    Polarity p = Polarity::Filter);

  Polarity polarity() const { return polarity_; }
  int var_count() const { return var_count_; }
  bool theory_origin() const { return theory_.has_value(); }
  const ClauseTheory& theory() const { return *theory_; }
  const std::vector<TruthTable>& generators() const { return generators_; }

  const EntailmentEngine& engine() const { return *engine_; }

 private:
  FilterSpec(int var_count, Polarity p) : var_count_(var_count), polarity_(p) {}
  int var_count_;
  Polarity polarity_;
  std::optional<ClauseTheory> theory_;
  std::shared_ptr<EntailmentEngine> engine_;  // memoized prover for theory filters
  std::vector<TruthTable> generators_;
};

bool in_filter(const FilterSpec& f, const TruthTable& e);
bool in_filter(const FilterSpec& f, const BoolExpr& e);
bool filter_proper(const FilterSpec& f);  // bottom outside a filter / top outside an ideal

// Maxterm form: one sequent per falsifying valuation, each mentioning every
// atom.  This is the canonical CNF used for theory-filter membership.
std::vector<Sequent> canonical_cnf(const TruthTable& e);
// (or of negated Gamma) or (or of Delta), the expression of a clause.
TruthTable sequent_expr(const Sequent& s, int var_count);

// Prime filter read off a generator valuation: the elements evaluating to 1.
bool in_prime_filter(const Valuation& model, const TruthTable& e);
bool prime_filter_axioms_hold(const Valuation& model);  // exhaustive, var_count <= 3

std::vector<TruthTable> all_tables(int var_count);  // the whole algebra, var_count <= 3

struct BpfReport {
  bool proper = false;
  bool complement_approximable = false;
  bool model_exists = false;
  bool prime_extension_exists = false;
  bool ideal_side_agrees = false;
  bool round_trip_ok = false;
  bool holds = false;
};
BpfReport check_bpf(const ClauseTheory& t);

ClauseTheory theory_from_filter(const FilterSpec& f);

}  // namespace wellfound
