#include "wellfound/approx.hpp"

#include <algorithm>
#include <memory>
#include <unordered_map>

namespace wellfound {

namespace {

constexpr int kMaxPairBits = 22;

}  // namespace

Approx Approx::star(int a, int b) const {
  std::vector<std::pair<int, int>> pairs = pairs_;
  pairs.emplace_back(a, b);
  return Approx(std::move(pairs));
}

bool Approx::contains(int a, int b) const {
  return std::find(pairs_.begin(), pairs_.end(), std::make_pair(a, b)) != pairs_.end();
}

bool Approx::domain_contains(int a) const {
  return std::any_of(pairs_.begin(), pairs_.end(), [a](const auto& p) { return p.first == a; });
}

std::vector<int> Approx::domain() const {
  std::vector<int> dom;
  for (const auto& p : pairs_) dom.push_back(p.first);
  std::sort(dom.begin(), dom.end());
  dom.erase(std::unique(dom.begin(), dom.end()), dom.end());
  return dom;
}

std::string Approx::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    if (i > 0) out += ' ';
    out += '(' + std::to_string(pairs_[i].first) + ',' + std::to_string(pairs_[i].second) + ')';
  }
  return out + "]";
}

Approx canonical_form(const Approx& v) {
  std::vector<std::pair<int, int>> pairs = v.pairs();
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return Approx(std::move(pairs));
}

bool equivalent(const Approx& a, const Approx& b) {
  return canonical_form(a) == canonical_form(b);
}

ApproxPred::ApproxPred(int domain_size, Alphabet codomain, Oracle oracle)
    : domain_size_(domain_size), codomain_(codomain), oracle_(std::move(oracle)) {
  if (domain_size < 0) throw Error("negative domain size");
  if (pair_bits() > kMaxPairBits) {
    throw SizeLimitError("pair space exceeds " + std::to_string(kMaxPairBits) + " bits");
  }
}

ApproxPred ApproxPred::from_mask_table(int domain_size, const Alphabet& codomain,
                                       std::vector<std::uint8_t> table) {
  auto shared = std::make_shared<std::vector<std::uint8_t>>(std::move(table));
  int width = codomain.size();
  return ApproxPred(domain_size, codomain, [shared, width](const Approx& v) {
    std::uint32_t mask = 0;
    for (const auto& [a, b] : v.pairs()) {
      mask |= std::uint32_t{1} << (a * width + b);
    }
    return (*shared)[mask] != 0;
  });
}

bool ApproxPred::member(const Approx& v) const {
  for (const auto& [a, b] : v.pairs()) {
    if (a < 0 || a >= domain_size_ || !codomain_.contains(b)) {
      throw InvalidElementError("pair (" + std::to_string(a) + "," + std::to_string(b) +
                                ") outside the approximation space");
    }
  }
  return oracle_(canonical_form(v));
}

bool ApproxPred::member_mask(std::uint32_t pairset) const { return oracle_(approx_of(pairset)); }

ApproxPred ApproxPred::complement() const {
  Oracle inner = oracle_;
  return ApproxPred(domain_size_, codomain_, [inner](const Approx& v) { return !inner(v); });
}

std::uint32_t ApproxPred::mask_of(const Approx& v) const {
  std::uint32_t mask = 0;
  for (const auto& [a, b] : v.pairs()) {
    mask |= std::uint32_t{1} << (a * codomain_.size() + b);
  }
  return mask;
}

Approx ApproxPred::approx_of(std::uint32_t pairset) const {
  std::vector<std::pair<int, int>> pairs;
  for (int bit = 0; bit < pair_bits(); ++bit) {
    if (pairset & (std::uint32_t{1} << bit)) {
      pairs.emplace_back(bit / codomain_.size(), bit % codomain_.size());
    }
  }
  return Approx(std::move(pairs));
}

namespace {

// Enumerate submasks of `mask` (including mask and 0).
template <typename Fn>
bool all_submasks(std::uint32_t mask, Fn fn) {
  std::uint32_t sub = mask;
  while (true) {
    if (!fn(sub)) return false;
    if (sub == 0) return true;
    sub = (sub - 1) & mask;
  }
}

std::uint32_t domain_mask_of(const ApproxPred& t, std::uint32_t pairset) {
  std::uint32_t dom = 0;
  int width = t.codomain().size();
  for (int a = 0; a < t.domain_size(); ++a) {
    std::uint32_t group = ((std::uint32_t{1} << width) - 1u) << (a * width);
    if (pairset & group) dom |= std::uint32_t{1} << a;
  }
  return dom;
}

}  // namespace

bool in_down_interior(const ApproxPred& t, const Approx& v) {
  std::uint32_t mask = t.mask_of(v);
  return all_submasks(mask, [&](std::uint32_t sub) { return t.member_mask(sub); });
}

bool in_up_closure(const ApproxPred& t, const Approx& v) {
  std::uint32_t mask = t.mask_of(v);
  return !all_submasks(mask, [&](std::uint32_t sub) { return !t.member_mask(sub); });
}

namespace {

constexpr int kMaxMaterializedBits = 20;

std::vector<std::uint8_t> materialize_table(const ApproxPred& t) {
  if (t.pair_bits() > kMaxMaterializedBits) {
    throw SizeLimitError("closure transformer limited to " +
                         std::to_string(kMaxMaterializedBits) + " pair bits");
  }
  std::vector<std::uint8_t> table(std::size_t{1} << t.pair_bits());
  for (std::uint32_t m = 0; m < table.size(); ++m) table[m] = t.member_mask(m) ? 1 : 0;
  return table;
}

enum class Dp { SubsetAnd, SubsetOr, SupersetAnd, SupersetOr };

// One lattice pass: combine each set with its one-bit neighbours.
ApproxPred closure_by_dp(const ApproxPred& t, Dp kind) {
  std::vector<std::uint8_t> table = materialize_table(t);
  int bits = t.pair_bits();
  std::size_t size = table.size();
  if (kind == Dp::SubsetAnd || kind == Dp::SubsetOr) {
    for (std::uint32_t m = 0; m < size; ++m) {
      for (int i = 0; i < bits; ++i) {
        if (!(m & (std::uint32_t{1} << i))) continue;
        std::uint8_t below = table[m & ~(std::uint32_t{1} << i)];
        if (kind == Dp::SubsetAnd) {
          table[m] = table[m] && below;
        } else {
          table[m] = table[m] || below;
        }
      }
    }
  } else {
    for (std::uint32_t m = static_cast<std::uint32_t>(size); m-- > 0;) {
      for (int i = 0; i < bits; ++i) {
        if (m & (std::uint32_t{1} << i)) continue;
        std::uint8_t above = table[m | (std::uint32_t{1} << i)];
        if (kind == Dp::SupersetAnd) {
          table[m] = table[m] && above;
        } else {
          table[m] = table[m] || above;
        }
      }
    }
  }
  return ApproxPred::from_mask_table(t.domain_size(), t.codomain(), std::move(table));
}

}  // namespace

ApproxPred down_interior(const ApproxPred& t) { return closure_by_dp(t, Dp::SubsetAnd); }
ApproxPred up_closure(const ApproxPred& t) { return closure_by_dp(t, Dp::SubsetOr); }
ApproxPred superset_closure(const ApproxPred& t) { return closure_by_dp(t, Dp::SupersetOr); }
ApproxPred superset_interior(const ApproxPred& t) { return closure_by_dp(t, Dp::SupersetAnd); }

namespace {

// Memoized engines over packed pair-sets.  Verdicts are tri-state:
// -1 unknown, 0 false, 1 true.  Recursion is well-founded because every
// extension consumes a fresh domain index.
class Engine {
 public:
  explicit Engine(const ApproxPred& t)
      : t_(t),
        width_(t.codomain().size()),
        down_memo_(std::size_t{1} << t.pair_bits(), -1),
        up_memo_(std::size_t{1} << t.pair_bits(), -1) {}

  bool down_interior(std::uint32_t mask) {
    std::int8_t& slot = down_memo_[mask];
    if (slot < 0) {
      bool ok = all_submasks(mask, [&](std::uint32_t sub) { return t_.member_mask(sub); });
      slot = ok ? 1 : 0;
    }
    return slot == 1;
  }

  bool up_closure(std::uint32_t mask) {
    std::int8_t& slot = up_memo_[mask];
    if (slot < 0) {
      bool hit = !all_submasks(mask, [&](std::uint32_t sub) { return !t_.member_mask(sub); });
      slot = hit ? 1 : 0;
    }
    return slot == 1;
  }

  bool approximable(std::uint32_t mask) {
    auto [it, inserted] = nu_memo_.try_emplace(mask, -1);
    if (!inserted) return it->second == 1;
    bool ok = down_interior(mask);
    std::uint32_t dom = domain_mask_of(t_, mask);
    for (int a = 0; a < t_.domain_size() && ok; ++a) {
      if (dom & (std::uint32_t{1} << a)) continue;
      bool some = false;
      for (int b = 0; b < width_ && !some; ++b) {
        some = approximable(mask | (std::uint32_t{1} << (a * width_ + b)));
      }
      ok = some;
    }
    nu_memo_[mask] = ok ? 1 : 0;
    return ok;
  }

  bool bounded(std::uint32_t mask, int k) {
    if (!down_interior(mask)) return false;
    if (k == 0) return true;
    std::uint32_t dom = domain_mask_of(t_, mask);
    for (int a = 0; a < t_.domain_size(); ++a) {
      if (dom & (std::uint32_t{1} << a)) continue;
      bool some = false;
      for (int b = 0; b < width_ && !some; ++b) {
        some = bounded(mask | (std::uint32_t{1} << (a * width_ + b)), k - 1);
      }
      if (!some) return false;
    }
    return true;
  }

  bool barred(std::uint32_t mask) {
    auto [it, inserted] = mu_memo_.try_emplace(mask, -1);
    if (!inserted) return it->second == 1;
    bool ok = up_closure(mask);
    if (!ok) {
      std::uint32_t dom = domain_mask_of(t_, mask);
      for (int a = 0; a < t_.domain_size() && !ok; ++a) {
        if (dom & (std::uint32_t{1} << a)) continue;
        bool every = true;
        for (int b = 0; b < width_ && every; ++b) {
          every = barred(mask | (std::uint32_t{1} << (a * width_ + b)));
        }
        ok = every;
      }
    }
    mu_memo_[mask] = ok ? 1 : 0;
    return ok;
  }

  std::optional<BarDerivation> derive(std::uint32_t mask) {
    if (up_closure(mask)) {
      BarDerivation d;
      d.via_member = true;
      return d;
    }
    std::uint32_t dom = domain_mask_of(t_, mask);
    for (int a = 0; a < t_.domain_size(); ++a) {
      if (dom & (std::uint32_t{1} << a)) continue;
      bool every = true;
      for (int b = 0; b < width_ && every; ++b) {
        every = barred(mask | (std::uint32_t{1} << (a * width_ + b)));
      }
      if (!every) continue;
      BarDerivation d;
      d.split_atom = a;
      for (int b = 0; b < width_; ++b) {
        auto sub = derive(mask | (std::uint32_t{1} << (a * width_ + b)));
        d.branches.push_back(std::move(*sub));
      }
      return d;
    }
    return std::nullopt;
  }

 private:
  const ApproxPred& t_;
  int width_;
  std::vector<std::int8_t> down_memo_;
  std::vector<std::int8_t> up_memo_;
  std::unordered_map<std::uint32_t, std::int8_t> nu_memo_;
  std::unordered_map<std::uint32_t, std::int8_t> mu_memo_;
};

}  // namespace

bool approximable_from(const ApproxPred& t, const Approx& v) {
  Engine e(t);
  return e.approximable(t.mask_of(v));
}

bool is_approximable(const ApproxPred& t) { return approximable_from(t, Approx()); }

bool bounded_approximable(const ApproxPred& t, const Approx& v, int k) {
  Engine e(t);
  return e.bounded(t.mask_of(v), k);
}

int bounded_approximable_stage(const ApproxPred& t) {
  Engine e(t);
  if (e.approximable(0)) return t.domain_size();
  int k = 0;
  while (k < t.domain_size() && e.bounded(0, k + 1)) ++k;
  return e.bounded(0, 0) ? k : -1;
}

bool inductively_barred_from(const ApproxPred& t, const Approx& v) {
  Engine e(t);
  return e.barred(t.mask_of(v));
}

std::optional<BarDerivation> bar_derivation_from(const ApproxPred& t, const Approx& v) {
  Engine e(t);
  std::uint32_t mask = t.mask_of(v);
  if (!e.barred(mask)) return std::nullopt;
  return e.derive(mask);
}

bool recheck_bar_derivation(const ApproxPred& t, const Approx& v, const BarDerivation& d) {
  if (d.via_member) return in_up_closure(t, v);
  if (d.split_atom < 0 || d.split_atom >= t.domain_size()) return false;
  if (canonical_form(v).domain_contains(d.split_atom)) return false;
  if (static_cast<int>(d.branches.size()) != t.codomain().size()) return false;
  for (int b = 0; b < t.codomain().size(); ++b) {
    if (!recheck_bar_derivation(t, v.star(d.split_atom, b), d.branches[static_cast<std::size_t>(b)])) {
      return false;
    }
  }
  return true;
}

bool is_inductively_barred(const ApproxPred& t) { return inductively_barred_from(t, Approx()); }

namespace {

bool choice_search(const ApproxPred& t, Engine& e, std::uint32_t mask, int next_atom,
                   ChoiceFun& alpha) {
  if (!e.down_interior(mask)) return false;
  if (next_atom == t.domain_size()) return true;
  for (int b = 0; b < t.codomain().size(); ++b) {
    alpha.push_back(b);
    std::uint32_t bit = std::uint32_t{1} << (next_atom * t.codomain().size() + b);
    if (choice_search(t, e, mask | bit, next_atom + 1, alpha)) return true;
    alpha.pop_back();
  }
  return false;
}

}  // namespace

std::optional<ChoiceFun> find_choice_function(const ApproxPred& t) {
  Engine e(t);
  ChoiceFun alpha;
  if (!choice_search(t, e, 0, 0, alpha)) return std::nullopt;
  return alpha;
}

bool choice_function_valid(const ApproxPred& t, const ChoiceFun& alpha) {
  if (static_cast<int>(alpha.size()) != t.domain_size()) return false;
  std::uint32_t graph = 0;
  for (int a = 0; a < t.domain_size(); ++a) {
    if (!t.codomain().contains(alpha[static_cast<std::size_t>(a)])) return false;
    graph |= std::uint32_t{1} << (a * t.codomain().size() + alpha[static_cast<std::size_t>(a)]);
  }
  return all_submasks(graph, [&](std::uint32_t sub) { return t.member_mask(sub); });
}

bool is_barred_approx(const ApproxPred& t) {
  Engine e(t);
  ChoiceFun alpha(static_cast<std::size_t>(t.domain_size()), 0);
  while (true) {
    std::uint32_t graph = 0;
    for (int a = 0; a < t.domain_size(); ++a) {
      graph |= std::uint32_t{1} << (a * t.codomain().size() + alpha[static_cast<std::size_t>(a)]);
    }
    if (!e.up_closure(graph)) return false;
    std::size_t i = 0;
    while (i < alpha.size() && ++alpha[i] == t.codomain().size()) alpha[i++] = 0;
    if (i == alpha.size()) break;
  }
  return true;
}

GdcReport check_gdc(const ApproxPred& t) {
  GdcReport rep;
  rep.approximable = is_approximable(t);
  rep.choice = find_choice_function(t);
  rep.holds = !rep.approximable || rep.choice.has_value();
  return rep;
}

GbiReport check_gbi(const ApproxPred& t) {
  GbiReport rep;
  rep.barred = is_barred_approx(t);
  rep.inductively_barred = is_inductively_barred(t);
  rep.holds = !rep.barred || rep.inductively_barred;
  return rep;
}

Approx ord(const SeqU& u) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<std::size_t>(u.length()));
  for (int i = 0; i < u.length(); ++i) pairs.emplace_back(i, u.at(i));
  return Approx(std::move(pairs));
}

Pred ordered_pred(const ApproxPred& t, const Universe& universe) {
  if (universe.depth() > t.domain_size()) {
    throw DepthError("universe deeper than the approximation domain");
  }
  if (!(universe.alphabet() == t.codomain())) {
    throw Error("universe alphabet differs from the approximation codomain");
  }
  Pred out(universe);
  for (std::size_t r = 0; r < universe.node_count(); ++r) {
    out.set(r, t.member(ord(universe.unrank(r))));
  }
  return out;
}

ApproxPred lift(const Pred& t) {
  const Universe& u = t.universe();
  // oracle sees the canonical (sorted, duplicate-free) pair set
  Pred table = t;
  return ApproxPred(u.depth(), u.alphabet(), [table](const Approx& v) {
    std::vector<int> values;
    for (const auto& [a, b] : v.pairs()) {
      if (a != static_cast<int>(values.size())) return false;  // gap or duplicate index
      values.push_back(b);
    }
    return table.member(SeqU(std::move(values)));
  });
}

ApproxPred relation_alignment_pos(const HetRel& r) {
  HetRel rel = r;
  return ApproxPred(r.domain_size(), r.codomain(), [rel](const Approx& v) {
    for (const auto& [a, b] : v.pairs()) {
      if (!rel.at(a, b)) return false;
    }
    return true;
  });
}

ApproxPred relation_alignment_neg(const HetRel& r) {
  HetRel rel = r;
  return ApproxPred(r.domain_size(), r.codomain(), [rel](const Approx& v) {
    for (const auto& [a, b] : v.pairs()) {
      if (rel.at(a, b)) return true;
    }
    return false;
  });
}

ApproxPred injective_pred(int domain_size, int codomain_size) {
  Alphabet codomain(codomain_size);
  return ApproxPred(domain_size, codomain, [](const Approx& v) {
    const auto& ps = v.pairs();
    for (std::size_t i = 0; i < ps.size(); ++i) {
      for (std::size_t j = i + 1; j < ps.size(); ++j) {
        if (ps[i].second == ps[j].second && ps[i].first != ps[j].first) return false;
      }
    }
    return true;
  });
}

PigeonholeReport pigeonhole_demo(int m, int n) {
  if (n < 1 || m <= n) throw Error("pigeonhole demo requires m > n >= 1");
  PigeonholeReport rep;
  rep.domain_size = m;
  rep.codomain_size = n;
  ApproxPred t = injective_pred(m, n);
  rep.approximable = is_approximable(t);
  rep.max_stage = bounded_approximable_stage(t);
  rep.has_choice_function = find_choice_function(t).has_value();
  rep.narrative =
      "The injectivity constraint admits every partial choice that assigns at most " +
      std::to_string(n) + " indices, so the greatest-fixpoint approximant survives " +
      std::to_string(rep.max_stage) + " extension rounds; with an infinite codomain it would " +
      "never fail.  A total choice function on " + std::to_string(m) +
      " indices would need an injection into " + std::to_string(n) +
      " values, so none exists and the unconstrained principle refutes itself.";
  return rep;
}

}  // namespace wellfound
