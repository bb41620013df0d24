#include "wellfound/pred.hpp"

#include <numeric>

namespace wellfound {

Universe::Universe(Alphabet alphabet, int depth) : alphabet_(alphabet), depth_(depth) {
  if (depth < 0) throw Error("universe depth must be non-negative");
  offsets_.resize(static_cast<std::size_t>(depth) + 2);
  offsets_[0] = 0;
  std::size_t level = 1;
  for (int n = 0; n <= depth; ++n) {
    offsets_[static_cast<std::size_t>(n) + 1] = offsets_[static_cast<std::size_t>(n)] + level;
    level *= static_cast<std::size_t>(alphabet_.size());
  }
}

std::size_t Universe::rank(const SeqU& u) const {
  if (u.length() > depth_) {
    throw DepthError("sequence of length " + std::to_string(u.length()) +
                     " outside universe of depth " + std::to_string(depth_));
  }
  std::size_t idx = 0;
  for (int i = 0; i < u.length(); ++i) {
    int a = u.at(i);
    if (!alphabet_.contains(a)) {
      throw InvalidElementError("element " + std::to_string(a) + " outside alphabet of size " +
                                std::to_string(alphabet_.size()));
    }
    idx = idx * static_cast<std::size_t>(alphabet_.size()) + static_cast<std::size_t>(a);
  }
  return level_begin(u.length()) + idx;
}

SeqU Universe::unrank(std::size_t r) const {
  int len = length_of(r);
  std::size_t idx = r - level_begin(len);
  std::vector<int> items(static_cast<std::size_t>(len));
  for (int i = len - 1; i >= 0; --i) {
    items[static_cast<std::size_t>(i)] = static_cast<int>(idx % static_cast<std::size_t>(alphabet_.size()));
    idx /= static_cast<std::size_t>(alphabet_.size());
  }
  return SeqU(std::move(items));
}

int Universe::length_of(std::size_t r) const {
  for (int n = 0; n <= depth_; ++n) {
    if (r < level_end(n)) return n;
  }
  throw Error("rank out of range");
}

std::size_t Universe::child(std::size_t r, int a) const {
  int len = length_of(r);
  if (len >= depth_) throw DepthError("child of a depth-" + std::to_string(depth_) + " node");
  std::size_t idx = r - level_begin(len);
  return level_begin(len + 1) + idx * static_cast<std::size_t>(alphabet_.size()) +
         static_cast<std::size_t>(a);
}

std::size_t Universe::parent(std::size_t r) const {
  int len = length_of(r);
  if (len == 0) throw Error("the empty sequence has no parent");
  std::size_t idx = r - level_begin(len);
  return level_begin(len - 1) + idx / static_cast<std::size_t>(alphabet_.size());
}

int Universe::last_element(std::size_t r) const {
  int len = length_of(r);
  if (len == 0) throw Error("the empty sequence has no last element");
  std::size_t idx = r - level_begin(len);
  return static_cast<int>(idx % static_cast<std::size_t>(alphabet_.size()));
}

Pred::Pred(Universe universe) : universe_(std::move(universe)), bits_(universe_.node_count(), 0) {}

Pred Pred::full(const Universe& universe) {
  Pred p(universe);
  std::fill(p.bits_.begin(), p.bits_.end(), static_cast<std::uint8_t>(1));
  return p;
}

Pred Pred::from_members(const Universe& universe, const std::vector<SeqU>& members) {
  Pred p(universe);
  for (const SeqU& u : members) p.set(universe.rank(u), true);
  return p;
}

Pred Pred::from_mask(const Universe& universe, std::uint64_t mask) {
  Pred p(universe);
  p.assign_mask(mask);
  return p;
}

void Pred::assign_mask(std::uint64_t mask) {
  if (universe_.node_count() > 64) throw SizeLimitError("mask form limited to 64 nodes");
  for (std::size_t r = 0; r < bits_.size(); ++r) bits_[r] = (mask >> r) & 1u;
}

std::uint64_t Pred::to_mask() const {
  if (universe_.node_count() > 64) throw SizeLimitError("mask form limited to 64 nodes");
  std::uint64_t mask = 0;
  for (std::size_t r = 0; r < bits_.size(); ++r) {
    if (bits_[r]) mask |= (std::uint64_t{1} << r);
  }
  return mask;
}

std::size_t Pred::count() const {
  return static_cast<std::size_t>(std::accumulate(bits_.begin(), bits_.end(), std::size_t{0}));
}

std::vector<SeqU> Pred::members() const {
  std::vector<SeqU> out;
  for (std::size_t r = 0; r < bits_.size(); ++r) {
    if (bits_[r]) out.push_back(universe_.unrank(r));
  }
  return out;
}

bool is_tree(const Pred& t) {
  const Universe& u = t.universe();
  for (std::size_t r = 1; r < u.node_count(); ++r) {
    if (t.member(r) && !t.member(u.parent(r))) return false;
  }
  return true;
}

bool is_monotone(const Pred& t) {
  const Universe& u = t.universe();
  for (std::size_t r = 1; r < u.node_count(); ++r) {
    if (t.member(u.parent(r)) && !t.member(r)) return false;
  }
  return true;
}

Pred down_arborify(const Pred& t) {
  const Universe& u = t.universe();
  Pred out(u);
  for (std::size_t r = 0; r < u.node_count(); ++r) {
    bool keep = t.member(r) && (r == 0 || out.member(u.parent(r)));
    out.set(r, keep);
  }
  return out;
}

Pred up_monotonise(const Pred& t) {
  const Universe& u = t.universe();
  Pred out(u);
  for (std::size_t r = 0; r < u.node_count(); ++r) {
    bool keep = t.member(r) || (r > 0 && out.member(u.parent(r)));
    out.set(r, keep);
  }
  return out;
}

Pred up_arborify(const Pred& t) {
  const Universe& u = t.universe();
  Pred out(u);
  for (std::size_t r = u.node_count(); r-- > 0;) {
    bool keep = t.member(r);
    if (!keep && u.length_of(r) < u.depth()) {
      for (int a = 0; a < u.alphabet().size() && !keep; ++a) keep = out.member(u.child(r, a));
    }
    out.set(r, keep);
  }
  return out;
}

Pred down_monotonise(const Pred& t) {
  const Universe& u = t.universe();
  Pred out(u);
  for (std::size_t r = u.node_count(); r-- > 0;) {
    bool keep = t.member(r);
    if (keep && u.length_of(r) < u.depth()) {
      for (int a = 0; a < u.alphabet().size() && keep; ++a) keep = out.member(u.child(r, a));
    }
    out.set(r, keep);
  }
  return out;
}

Pred complement(const Pred& t) {
  Pred out(t.universe());
  for (std::size_t r = 0; r < t.universe().node_count(); ++r) out.set(r, !t.member(r));
  return out;
}

bool subset_of(const Pred& s, const Pred& t) {
  if (!(s.universe() == t.universe())) throw Error("subset_of over different universes");
  for (std::size_t r = 0; r < s.universe().node_count(); ++r) {
    if (s.member(r) && !t.member(r)) return false;
  }
  return true;
}

}  // namespace wellfound
