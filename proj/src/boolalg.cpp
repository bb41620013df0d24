#include "wellfound/boolalg.hpp"

#include <algorithm>
#include <cctype>

namespace wellfound {

namespace {

std::size_t word_count(int var_count) {
  return ((std::size_t{1} << var_count) + 63) / 64;
}

void check_var_count(int var_count) {
  if (var_count < 0 || var_count > kMaxGenerators) {
    throw SizeLimitError("generator count must be between 0 and " +
                         std::to_string(kMaxGenerators));
  }
}

}  // namespace

TruthTable::TruthTable(int var_count, bool value) : var_count_(var_count) {
  check_var_count(var_count);
  bits_.assign(word_count(var_count), value ? ~std::uint64_t{0} : 0);
  if (value && (size() % 64) != 0) {
    bits_.back() = (std::uint64_t{1} << (size() % 64)) - 1;
  }
}

TruthTable TruthTable::generator(int var_count, int index) {
  TruthTable t(var_count, false);
  if (index < 0 || index >= var_count) throw InvalidElementError("generator index out of range");
  for (std::size_t val = 0; val < t.size(); ++val) {
    if (val & (std::size_t{1} << index)) {
      t.bits_[val / 64] |= std::uint64_t{1} << (val % 64);
    }
  }
  return t;
}

bool TruthTable::value_at(AtomSet valuation) const {
  std::size_t idx = valuation & (size() - 1);
  return (bits_[idx / 64] >> (idx % 64)) & 1u;
}

TruthTable TruthTable::operator&(const TruthTable& o) const {
  if (var_count_ != o.var_count_) throw Error("mixed generator counts");
  TruthTable out = *this;
  for (std::size_t i = 0; i < bits_.size(); ++i) out.bits_[i] &= o.bits_[i];
  return out;
}

TruthTable TruthTable::operator|(const TruthTable& o) const {
  if (var_count_ != o.var_count_) throw Error("mixed generator counts");
  TruthTable out = *this;
  for (std::size_t i = 0; i < bits_.size(); ++i) out.bits_[i] |= o.bits_[i];
  return out;
}

TruthTable TruthTable::operator~() const {
  TruthTable out = *this;
  for (std::size_t i = 0; i < bits_.size(); ++i) out.bits_[i] = ~bits_[i];
  if ((size() % 64) != 0) out.bits_.back() &= (std::uint64_t{1} << (size() % 64)) - 1;
  return out;
}

bool TruthTable::entails(const TruthTable& o) const { return (*this & o) == *this; }
bool TruthTable::is_top() const { return *this == TruthTable(var_count_, true); }
bool TruthTable::is_bottom() const { return *this == TruthTable(var_count_, false); }

BoolExpr BoolExpr::var(int index) {
  if (index < 0) throw InvalidElementError("negative generator index");
  return BoolExpr(std::make_shared<const Node>(Node{Kind::Var, index, {}}));
}
BoolExpr BoolExpr::top() { return BoolExpr(std::make_shared<const Node>(Node{Kind::Top, -1, {}})); }
BoolExpr BoolExpr::bottom() {
  return BoolExpr(std::make_shared<const Node>(Node{Kind::Bottom, -1, {}}));
}
BoolExpr BoolExpr::negate(BoolExpr e) {
  return BoolExpr(std::make_shared<const Node>(Node{Kind::Not, -1, {std::move(e)}}));
}
BoolExpr BoolExpr::conj(BoolExpr l, BoolExpr r) {
  return BoolExpr(std::make_shared<const Node>(Node{Kind::And, -1, {std::move(l), std::move(r)}}));
}
BoolExpr BoolExpr::disj(BoolExpr l, BoolExpr r) {
  return BoolExpr(std::make_shared<const Node>(Node{Kind::Or, -1, {std::move(l), std::move(r)}}));
}

int BoolExpr::max_var() const {
  switch (kind()) {
    case Kind::Var:
      return var_index();
    case Kind::Not:
      return lhs().max_var();
    case Kind::And:
    case Kind::Or:
      return std::max(lhs().max_var(), rhs().max_var());
    default:
      return -1;
  }
}

TruthTable canon(const BoolExpr& e, int var_count) {
  check_var_count(var_count);
  if (e.max_var() >= var_count) throw InvalidElementError("expression mentions an unknown generator");
  switch (e.kind()) {
    case BoolExpr::Kind::Var:
      return TruthTable::generator(var_count, e.var_index());
    case BoolExpr::Kind::Top:
      return TruthTable::top(var_count);
    case BoolExpr::Kind::Bottom:
      return TruthTable::bottom(var_count);
    case BoolExpr::Kind::Not:
      return ~canon(e.lhs(), var_count);
    case BoolExpr::Kind::And:
      return canon(e.lhs(), var_count) & canon(e.rhs(), var_count);
    case BoolExpr::Kind::Or:
      return canon(e.lhs(), var_count) | canon(e.rhs(), var_count);
  }
  throw Error("unreachable expression kind");
}

namespace {

struct ExprParser {
  const std::string& text;
  std::vector<std::string>& names;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) {
    throw FileParseError("expression parse error: " + what + " at offset " + std::to_string(pos), 1,
                         static_cast<int>(pos) + 1);
  }

  BoolExpr parse_or() {
    BoolExpr e = parse_and();
    while (eat('|')) e = BoolExpr::disj(std::move(e), parse_and());
    return e;
  }

  BoolExpr parse_and() {
    BoolExpr e = parse_not();
    while (eat('&')) e = BoolExpr::conj(std::move(e), parse_not());
    return e;
  }

  BoolExpr parse_not() {
    if (eat('!')) return BoolExpr::negate(parse_not());
    return parse_primary();
  }

  BoolExpr parse_primary() {
    skip_ws();
    if (eat('(')) {
      BoolExpr e = parse_or();
      if (!eat(')')) fail("missing ')'");
      return e;
    }
    if (pos >= text.size()) fail("unexpected end of input");
    char c = text[pos];
    if (!std::isalpha(static_cast<unsigned char>(c)) && c != '_') fail("expected an identifier");
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
      ++pos;
    }
    std::string ident = text.substr(start, pos - start);
    if (ident == "T") return BoolExpr::top();
    if (ident == "F") return BoolExpr::bottom();
    auto it = std::find(names.begin(), names.end(), ident);
    if (it == names.end()) {
      names.push_back(ident);
      return BoolExpr::var(static_cast<int>(names.size()) - 1);
    }
    return BoolExpr::var(static_cast<int>(it - names.begin()));
  }
};

}  // namespace

BoolExpr parse_bool_expr(const std::string& text, std::vector<std::string>& names) {
  ExprParser p{text, names};
  BoolExpr e = p.parse_or();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return e;
}

FilterSpec FilterSpec::from_theory(ClauseTheory t, Polarity p) {
  FilterSpec f(t.atom_count(), p);
  f.theory_ = t;
  f.engine_ = std::make_shared<EntailmentEngine>(std::move(t));
  return f;
}

FilterSpec FilterSpec::from_generators(int var_count, std::vector<TruthTable> generators,
                                       Polarity p) {
  check_var_count(var_count);
  for (const TruthTable& g : generators) {
    if (g.var_count() != var_count) throw Error("generator over a different algebra");
  }
  FilterSpec f(var_count, p);
  f.generators_ = std::move(generators);
  return f;
}

std::vector<Sequent> canonical_cnf(const TruthTable& e) {
  std::vector<Sequent> out;
  AtomSet full = (AtomSet{1} << e.var_count()) - 1u;
  for (AtomSet val = 0; val < (AtomSet{1} << e.var_count()); ++val) {
    if (!e.value_at(val)) out.push_back(Sequent{val, full & ~val});
  }
  return out;
}

TruthTable sequent_expr(const Sequent& s, int var_count) {
  TruthTable acc = TruthTable::bottom(var_count);
  for (int a = 0; a < var_count; ++a) {
    if (s.gamma & (AtomSet{1} << a)) acc = acc | ~TruthTable::generator(var_count, a);
    if (s.delta & (AtomSet{1} << a)) acc = acc | TruthTable::generator(var_count, a);
  }
  return acc;
}

namespace {

bool in_theory_filter(const EntailmentEngine& engine, const TruthTable& e) {
  for (const Sequent& s : canonical_cnf(e)) {
    if (!engine.derivable(s)) return false;
  }
  return true;
}

// Finitely generated filters in the finite free algebra are principal: the
// saturation under meet and right-entailment is the up-set of the meet of
// the generators.
TruthTable generator_meet(const FilterSpec& f) {
  TruthTable acc = TruthTable::top(f.var_count());
  for (const TruthTable& g : f.generators()) acc = acc & g;
  return acc;
}

TruthTable generator_join(const FilterSpec& f) {
  TruthTable acc = TruthTable::bottom(f.var_count());
  for (const TruthTable& g : f.generators()) acc = acc | g;
  return acc;
}

}  // namespace

bool in_filter(const FilterSpec& f, const TruthTable& e) {
  if (e.var_count() != f.var_count()) throw Error("element over a different algebra");
  if (f.theory_origin()) {
    if (f.polarity() == Polarity::Filter) return in_theory_filter(f.engine(), e);
    return in_theory_filter(f.engine(), ~e);  // e in I_T iff not-e in F_T
  }
  if (f.polarity() == Polarity::Filter) return generator_meet(f).entails(e);
  return e.entails(generator_join(f));
}

bool in_filter(const FilterSpec& f, const BoolExpr& e) { return in_filter(f, canon(e, f.var_count())); }

bool filter_proper(const FilterSpec& f) {
  if (f.polarity() == Polarity::Filter) return !in_filter(f, TruthTable::bottom(f.var_count()));
  return !in_filter(f, TruthTable::top(f.var_count()));
}

bool in_prime_filter(const Valuation& model, const TruthTable& e) {
  return e.value_at(model.bits);
}

bool prime_filter_axioms_hold(const Valuation& model) {
  if (model.atom_count > 3) throw SizeLimitError("exhaustive prime-filter check limited to 3 generators");
  std::vector<TruthTable> algebra = all_tables(model.atom_count);
  for (const TruthTable& b1 : algebra) {
    bool m1 = in_prime_filter(model, b1);
    if (in_prime_filter(model, ~b1) != !m1) return false;
    for (const TruthTable& b2 : algebra) {
      bool m2 = in_prime_filter(model, b2);
      if (in_prime_filter(model, b1 | b2) != (m1 || m2)) return false;
      if (in_prime_filter(model, b1 & b2) != (m1 && m2)) return false;
    }
  }
  return in_prime_filter(model, TruthTable::top(model.atom_count)) &&
         !in_prime_filter(model, TruthTable::bottom(model.atom_count));
}

std::vector<TruthTable> all_tables(int var_count) {
  if (var_count > 3) throw SizeLimitError("algebra enumeration limited to 3 generators");
  std::size_t rows = std::size_t{1} << var_count;
  std::vector<TruthTable> out;
  for (std::size_t code = 0; code < (std::size_t{1} << rows); ++code) {
    TruthTable t = TruthTable::bottom(var_count);
    for (std::size_t row = 0; row < rows; ++row) {
      if (code & (std::size_t{1} << row)) {
        // set a single row by meeting generators/negations; cheaper to go
        // through the minterm expression
        TruthTable minterm = TruthTable::top(var_count);
        for (int a = 0; a < var_count; ++a) {
          TruthTable g = TruthTable::generator(var_count, a);
          minterm = minterm & ((row >> a) & 1 ? g : ~g);
        }
        t = t | minterm;
      }
    }
    out.push_back(std::move(t));
  }
  return out;
}

ClauseTheory theory_from_filter(const FilterSpec& f) {
  if (f.var_count() > 3) throw SizeLimitError("theory extraction limited to 3 generators");
  std::vector<Sequent> clauses;
  AtomSet full = (AtomSet{1} << f.var_count()) - 1u;
  for (AtomSet gamma = 0; gamma <= full; ++gamma) {
    for (AtomSet delta = 0; delta <= full; ++delta) {
      if (in_filter(f, sequent_expr(Sequent{gamma, delta}, f.var_count()))) {
        clauses.push_back(Sequent{gamma, delta});
      }
    }
  }
  std::vector<std::string> names;
  if (f.theory_origin()) names = f.theory().atom_names();
  return ClauseTheory(f.var_count(), std::move(clauses), std::move(names));
}

BpfReport check_bpf(const ClauseTheory& t) {
  if (t.atom_count() > 3) throw SizeLimitError("exhaustive BPF check limited to 3 atoms");
  BpfReport rep;
  FilterSpec filter = FilterSpec::from_theory(t, Polarity::Filter);
  FilterSpec ideal = FilterSpec::from_theory(t, Polarity::Ideal);
  rep.proper = filter_proper(filter);
  rep.complement_approximable = is_approximable(theory_pred(t).complement());
  std::optional<Valuation> model = find_model(t);
  rep.model_exists = model.has_value();

  std::vector<TruthTable> algebra = all_tables(t.atom_count());
  rep.prime_extension_exists = false;
  if (model) {
    bool extends_filter = prime_filter_axioms_hold(*model);
    bool extends_ideal = true;
    for (const TruthTable& e : algebra) {
      if (in_filter(filter, e) && !in_prime_filter(*model, e)) extends_filter = false;
      if (in_filter(ideal, e) && in_prime_filter(*model, e)) extends_ideal = false;
    }
    rep.prime_extension_exists = extends_filter;
    rep.ideal_side_agrees = extends_ideal && (filter_proper(ideal) == rep.proper);
  } else {
    // co-BPF / co-BPI contrapositive: no prime extension forces fullness
    rep.prime_extension_exists = false;
    rep.ideal_side_agrees = filter_proper(ideal) == rep.proper;
  }

  // T_{F_T} derivability round trip
  rep.round_trip_ok = true;
  ClauseTheory round = theory_from_filter(filter);
  AtomSet full = t.atom_mask();
  for (AtomSet gamma = 0; gamma <= full && rep.round_trip_ok; ++gamma) {
    for (AtomSet delta = 0; delta <= full && rep.round_trip_ok; ++delta) {
      Sequent s{gamma, delta};
      if (derivable(t, s) != derivable(round, s)) rep.round_trip_ok = false;
    }
  }

  bool all_equal = rep.proper == rep.complement_approximable &&
                   rep.proper == rep.model_exists && rep.proper == rep.prime_extension_exists;
  // an improper filter is the whole algebra and trivially has no prime extension
  if (!rep.proper) {
    all_equal = !rep.complement_approximable && !rep.model_exists && !rep.prime_extension_exists;
  }
  rep.holds = all_equal && rep.ideal_side_agrees && rep.round_trip_ok;
  return rep;
}

}  // namespace wellfound
