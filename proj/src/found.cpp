#include "wellfound/found.hpp"

#include <algorithm>

namespace wellfound {

namespace {

bool progressing_at_rank(const Pred& t, std::size_t r, Boundary b) {
  const Universe& u = t.universe();
  if (u.length_of(r) == u.depth()) {
    return b == Boundary::Open ? true : !t.member(r);
  }
  if (!t.member(r)) return true;
  for (int a = 0; a < u.alphabet().size(); ++a) {
    if (t.member(u.child(r, a))) return true;
  }
  return false;
}

bool hereditary_at_rank(const Pred& t, std::size_t r, Boundary b) {
  const Universe& u = t.universe();
  if (u.length_of(r) == u.depth()) {
    return b == Boundary::Open ? true : t.member(r);
  }
  bool all_children = true;
  for (int a = 0; a < u.alphabet().size() && all_children; ++a) {
    all_children = t.member(u.child(r, a));
  }
  return !all_children || t.member(r);
}

}  // namespace

bool progressing_at(const Pred& t, const SeqU& u, Boundary b) {
  return progressing_at_rank(t, t.universe().rank(u), b);
}

bool hereditary_at(const Pred& t, const SeqU& u, Boundary b) {
  return hereditary_at_rank(t, t.universe().rank(u), b);
}

bool is_progressing(const Pred& t, Boundary b) {
  for (std::size_t r = 0; r < t.universe().node_count(); ++r) {
    if (!progressing_at_rank(t, r, b)) return false;
  }
  return true;
}

bool is_hereditary(const Pred& t, Boundary b) {
  for (std::size_t r = 0; r < t.universe().node_count(); ++r) {
    if (!hereditary_at_rank(t, r, b)) return false;
  }
  return true;
}

Pred pruning(const Pred& t, Boundary b) {
  const Universe& u = t.universe();
  Pred x = t;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t r = 0; r < u.node_count(); ++r) {
      if (!x.member(r)) continue;
      bool extendable;
      if (u.length_of(r) == u.depth()) {
        extendable = (b == Boundary::Open);
      } else {
        extendable = false;
        for (int a = 0; a < u.alphabet().size() && !extendable; ++a) {
          extendable = x.member(u.child(r, a));
        }
      }
      if (!extendable) {
        x.set(r, false);
        changed = true;
      }
    }
  }
  return x;
}

Pred hereditary_closure(const Pred& t, Boundary b) {
  const Universe& u = t.universe();
  Pred x(u);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t r = 0; r < u.node_count(); ++r) {
      if (x.member(r)) continue;
      bool enter = t.member(r);
      if (!enter) {
        if (u.length_of(r) == u.depth()) {
          enter = (b == Boundary::Closed);
        } else {
          enter = true;
          for (int a = 0; a < u.alphabet().size() && enter; ++a) {
            enter = x.member(u.child(r, a));
          }
        }
      }
      if (enter) {
        x.set(r, true);
        changed = true;
      }
    }
  }
  return x;
}

bool is_spread(const Pred& t, Boundary b) { return t.member(std::size_t{0}) && is_progressing(t, b); }

bool is_barricaded(const Pred& t, Boundary b) {
  return !is_hereditary(t, b) || t.member(std::size_t{0});
}

bool is_productive(const Pred& t, Boundary b) { return pruning(t, b).member(std::size_t{0}); }

bool is_inductively_barred(const Pred& t, Boundary b) {
  return hereditary_closure(t, b).member(std::size_t{0});
}

bool has_unbounded_paths(const Pred& t) {
  const Universe& u = t.universe();
  Pred a = down_arborify(t);
  for (int n = 0; n <= u.depth(); ++n) {
    bool found = false;
    for (std::size_t r = u.level_begin(n); r < u.level_end(n) && !found; ++r) found = a.member(r);
    if (!found) return false;
  }
  return true;
}

std::optional<int> uniform_bar_level(const Pred& t) {
  const Universe& u = t.universe();
  Pred m = up_monotonise(t);
  for (int n = 0; n <= u.depth(); ++n) {
    bool all = true;
    for (std::size_t r = u.level_begin(n); r < u.level_end(n) && all; ++r) all = m.member(r);
    if (all) return n;
  }
  return std::nullopt;
}

bool is_uniformly_barred(const Pred& t) { return uniform_bar_level(t).has_value(); }

bool is_staged_infinite(const Pred& t) {
  const Universe& u = t.universe();
  for (int n = 0; n <= u.depth(); ++n) {
    bool found = false;
    for (std::size_t r = u.level_begin(n); r < u.level_end(n) && !found; ++r) found = t.member(r);
    if (!found) return false;
  }
  return true;
}

std::optional<int> staged_bar_level(const Pred& t) {
  const Universe& u = t.universe();
  for (int n = 0; n <= u.depth(); ++n) {
    bool all = true;
    for (std::size_t r = u.level_begin(n); r < u.level_end(n) && all; ++r) all = t.member(r);
    if (all) return n;
  }
  return std::nullopt;
}

bool is_staged_barred(const Pred& t) { return staged_bar_level(t).has_value(); }

namespace {

// Depth-first search for a path from `root` to depth d staying inside t.
// Fills `path` with the elements below root; returns success.
bool descend_inside(const Pred& t, std::size_t root, std::vector<int>& path) {
  const Universe& u = t.universe();
  if (!t.member(root)) return false;
  if (u.length_of(root) == u.depth()) return true;
  for (int a = 0; a < u.alphabet().size(); ++a) {
    path.push_back(a);
    if (descend_inside(t, u.child(root, a), path)) return true;
    path.pop_back();
  }
  return false;
}

}  // namespace

std::optional<Branch> find_infinite_branch(const Pred& t) {
  std::vector<int> path;
  if (!descend_inside(t, 0, path)) return std::nullopt;
  return Branch(std::move(path));
}

bool has_infinite_branch(const Pred& t) { return find_infinite_branch(t).has_value(); }

std::optional<Branch> find_avoiding_branch(const Pred& t) {
  return find_infinite_branch(complement(t));
}

bool is_barred(const Pred& t) { return !find_avoiding_branch(t).has_value(); }

bool productive_from(const Pred& t, const SeqU& u, Boundary b) {
  return pruning(t, b).member(u);
}

bool inductively_barred_from(const Pred& t, const SeqU& u, Boundary b) {
  return hereditary_closure(t, b).member(u);
}

bool unbounded_from(const Pred& t, const SeqU& u) {
  const Universe& uni = t.universe();
  Pred a = down_arborify(t);
  std::size_t root = uni.rank(u);
  for (int n = 0; n <= uni.depth() - u.length(); ++n) {
    // all descendants of u at distance n share the contiguous rank range
    // obtained by repeatedly taking first/last children
    std::size_t lo = root, hi = root;
    for (int i = 0; i < n; ++i) {
      lo = uni.child(lo, 0);
      hi = uni.child(hi, uni.alphabet().size() - 1);
    }
    bool found = false;
    for (std::size_t r = lo; r <= hi && !found; ++r) found = a.member(r);
    if (!found) return false;
  }
  return true;
}

bool uniformly_barred_from(const Pred& t, const SeqU& u) {
  const Universe& uni = t.universe();
  Pred m = up_monotonise(t);
  std::size_t root = uni.rank(u);
  for (int n = 0; n <= uni.depth() - u.length(); ++n) {
    std::size_t lo = root, hi = root;
    for (int i = 0; i < n; ++i) {
      lo = uni.child(lo, 0);
      hi = uni.child(hi, uni.alphabet().size() - 1);
    }
    bool all = true;
    for (std::size_t r = lo; r <= hi && all; ++r) all = m.member(r);
    if (all) return true;
  }
  return false;
}

std::optional<Branch> branch_from(const Pred& t, const SeqU& u) {
  std::vector<int> path;
  if (!descend_inside(t, t.universe().rank(u), path)) return std::nullopt;
  return Branch(std::move(path));
}

bool barred_from(const Pred& t, const SeqU& u) {
  return !branch_from(complement(t), u).has_value();
}

std::vector<FoundReport> classify(const Pred& t, Boundary b) {
  std::vector<FoundReport> out;
  auto add = [&out](const char* property, bool holds) -> FoundReport& {
    FoundReport rep;
    rep.property = property;
    rep.holds = holds;
    out.push_back(std::move(rep));
    return out.back();
  };
  Pred pr = pruning(t, b);
  Pred hc = hereditary_closure(t, b);

  FoundReport& spread = add("spread", is_spread(t, b));
  if (!spread.holds) {
    // a member with no member child certifies the failure
    for (std::size_t r = 0; r < t.universe().node_count() && !spread.witness_node; ++r) {
      if (!progressing_at_rank(t, r, b)) spread.witness_node = t.universe().unrank(r);
    }
  }
  add("barricaded", is_barricaded(t, b));
  add("productive", pr.member(std::size_t{0})).fixpoint_table = pr;
  add("inductively-barred", hc.member(std::size_t{0})).fixpoint_table = hc;

  FoundReport& unbounded = add("unbounded-paths", has_unbounded_paths(t));
  if (!unbounded.holds) {
    Pred a = down_arborify(t);
    for (int n = 0; n <= t.universe().depth() && !unbounded.witness_level; ++n) {
      bool found = false;
      for (std::size_t r = t.universe().level_begin(n); r < t.universe().level_end(n) && !found;
           ++r) {
        found = a.member(r);
      }
      if (!found) unbounded.witness_level = n;  // first level out of reach
    }
  }

  FoundReport& uniform = add("uniformly-barred", false);
  if (auto n = uniform_bar_level(t)) {
    uniform.holds = true;
    uniform.witness_level = *n;
  }

  FoundReport& staged_inf = add("staged-infinite", is_staged_infinite(t));
  if (!staged_inf.holds) {
    for (int n = 0; n <= t.universe().depth() && !staged_inf.witness_level; ++n) {
      bool found = false;
      for (std::size_t r = t.universe().level_begin(n); r < t.universe().level_end(n) && !found;
           ++r) {
        found = t.member(r);
      }
      if (!found) staged_inf.witness_level = n;  // first fully missing level
    }
  }

  FoundReport& staged = add("staged-barred", false);
  if (auto n = staged_bar_level(t)) {
    staged.holds = true;
    staged.witness_level = *n;
  }

  FoundReport& branch = add("infinite-branch", false);
  if (auto alpha = find_infinite_branch(t)) {
    branch.holds = true;
    branch.witness_branch = std::move(alpha);
  }

  FoundReport& barred = add("barred", is_barred(t));
  if (!barred.holds) barred.witness_branch = find_avoiding_branch(t);

  return out;
}

namespace {

struct PrincipleInfo {
  Principle id;
  const char* name;
  const char* note;
};

// Notes record which reading the scheme-level equivalence with GDC/GBI needs.
constexpr PrincipleInfo kPrinciples[] = {
    {Principle::DcSpread, "DC-spread", ""},
    {Principle::DcProductive, "DC-productive", ""},
    {Principle::BiBarricaded, "BI-barricaded", ""},
    {Principle::BiInd, "BI-ind", ""},
    {Principle::KlSpread, "KL-spread", ""},
    {Principle::KlProductive, "KL-productive", ""},
    {Principle::FtBarricaded, "FT-barricaded", ""},
    {Principle::FtInd, "FT-ind", ""},
    {Principle::KlUnbounded, "KL-unbounded", "co-intuitionistic/classical route"},
    {Principle::KlStaged, "KL-staged", "co-intuitionistic/classical route"},
    {Principle::FtUniform, "FT-uniform", "intuitionistic route"},
    {Principle::FtStaged, "FT-staged", "intuitionistic route"},
};

}  // namespace

const char* principle_name(Principle p) {
  for (const auto& info : kPrinciples) {
    if (info.id == p) return info.name;
  }
  return "?";
}

Principle principle_from_name(const std::string& name) {
  for (const auto& info : kPrinciples) {
    if (name == info.name) return info.id;
  }
  throw UnknownNameError("unknown principle: " + name);
}

std::vector<std::string> principle_names() {
  std::vector<std::string> out;
  for (const auto& info : kPrinciples) out.emplace_back(info.name);
  return out;
}

PrincipleReport check_principle(Principle p, const Pred& t, Boundary b) {
  PrincipleReport rep;
  rep.principle = p;
  for (const auto& info : kPrinciples) {
    if (info.id == p) rep.note = info.note;
  }
  switch (p) {
    case Principle::DcSpread:
    case Principle::KlSpread:
      rep.hypothesis = is_spread(t, b);
      rep.conclusion = has_infinite_branch(t);
      rep.witness_branch = find_infinite_branch(t);
      break;
    case Principle::DcProductive:
    case Principle::KlProductive:
      rep.hypothesis = is_productive(t, b);
      rep.conclusion = has_infinite_branch(t);
      rep.witness_branch = find_infinite_branch(t);
      break;
    case Principle::BiBarricaded:
    case Principle::FtBarricaded:
      rep.hypothesis = is_barred(t);
      rep.conclusion = is_barricaded(t, b);
      break;
    case Principle::BiInd:
    case Principle::FtInd:
      rep.hypothesis = is_barred(t);
      rep.conclusion = is_inductively_barred(t, b);
      break;
    case Principle::KlUnbounded:
      rep.hypothesis = has_unbounded_paths(t);
      rep.conclusion = has_infinite_branch(t);
      rep.witness_branch = find_infinite_branch(t);
      break;
    case Principle::KlStaged:
      rep.hypothesis = is_staged_infinite(t) && is_tree(t);
      rep.conclusion = has_infinite_branch(t);
      rep.witness_branch = find_infinite_branch(t);
      break;
    case Principle::FtUniform:
      rep.hypothesis = is_barred(t);
      rep.conclusion = is_uniformly_barred(t);
      rep.witness_level = uniform_bar_level(t);
      break;
    case Principle::FtStaged:
      rep.hypothesis = is_barred(t) && is_monotone(t);
      rep.conclusion = is_staged_barred(t);
      rep.witness_level = staged_bar_level(t);
      break;
  }
  rep.holds = !rep.hypothesis || rep.conclusion;
  return rep;
}

PrincipleReport check_principle(const std::string& name, const Pred& t, Boundary b) {
  return check_principle(principle_from_name(name), t, b);
}

ITree ITree::node(std::vector<ITree> children) {
  ITree t;
  t.leaf_ = false;
  t.children_ = std::move(children);
  return t;
}

int ITree::depth() const {
  if (leaf_) return 0;
  int d = 0;
  for (const ITree& c : children_) d = std::max(d, c.depth());
  return d + 1;
}

std::vector<ITree> enumerate_itrees(const Alphabet& alphabet, int max_depth) {
  if (max_depth > 5) throw SizeLimitError("intensional tree enumeration limited to depth 5");
  std::vector<ITree> current = {ITree::leaf()};
  for (int d = 1; d <= max_depth; ++d) {
    // trees of depth <= d: Leaf, plus a node with children of depth <= d-1
    std::vector<ITree> next = {ITree::leaf()};
    std::vector<std::size_t> pick(static_cast<std::size_t>(alphabet.size()), 0);
    while (true) {
      std::vector<ITree> kids;
      kids.reserve(pick.size());
      for (std::size_t i : pick) kids.push_back(current[i]);
      next.push_back(ITree::node(std::move(kids)));
      std::size_t i = 0;
      while (i < pick.size() && ++pick[i] == current.size()) pick[i++] = 0;
      if (i == pick.size()) break;
    }
    current = std::move(next);
  }
  return current;
}

namespace {

void check_arity(const ITree& t, int arity) {
  if (t.is_leaf()) return;
  if (static_cast<int>(t.children().size()) != arity) {
    throw InvalidElementError("node arity differs from the universe alphabet");
  }
  for (const ITree& c : t.children()) check_arity(c, arity);
}

void mark_extensional(const ITree& t, const Universe& u, std::size_t r, Pred& out) {
  if (t.is_leaf()) return;
  out.set(r, true);
  for (int a = 0; a < u.alphabet().size(); ++a) {
    mark_extensional(t.children()[static_cast<std::size_t>(a)], u, u.child(r, a), out);
  }
}

bool realises_at(const ITree& t, const Pred& T, std::size_t r) {
  const Universe& u = T.universe();
  if (t.is_leaf()) return !T.member(r);
  if (!T.member(r)) return false;
  for (int a = 0; a < u.alphabet().size(); ++a) {
    if (!realises_at(t.children()[static_cast<std::size_t>(a)], T, u.child(r, a))) return false;
  }
  return true;
}

}  // namespace

Pred itree_to_extensional(const ITree& t, const Universe& universe) {
  if (t.depth() > universe.depth()) {
    throw DepthError("intensional tree of depth " + std::to_string(t.depth()) +
                     " over universe of depth " + std::to_string(universe.depth()));
  }
  check_arity(t, universe.alphabet().size());
  Pred out(universe);
  mark_extensional(t, universe, 0, out);
  return out;
}

bool realises(const ITree& t, const Pred& T) {
  if (t.depth() > T.universe().depth()) {
    throw DepthError("intensional tree deeper than the predicate's universe");
  }
  check_arity(t, T.universe().alphabet().size());
  return realises_at(t, T, 0);
}

}  // namespace wellfound
