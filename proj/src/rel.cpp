#include "wellfound/rel.hpp"

namespace wellfound {

HomRel::HomRel(Alphabet carrier)
    : carrier_(carrier),
      table_(static_cast<std::size_t>(carrier.size()) * static_cast<std::size_t>(carrier.size()), 0) {}

HomRel HomRel::from_mask(const Alphabet& carrier, std::uint64_t mask) {
  HomRel r(carrier);
  for (std::size_t i = 0; i < r.table_.size(); ++i) r.table_[i] = (mask >> i) & 1u;
  return r;
}

bool HomRel::at(int b, int b2) const {
  return table_[static_cast<std::size_t>(b) * static_cast<std::size_t>(carrier_.size()) +
                static_cast<std::size_t>(b2)] != 0;
}

void HomRel::set(int b, int b2, bool value) {
  table_[static_cast<std::size_t>(b) * static_cast<std::size_t>(carrier_.size()) +
         static_cast<std::size_t>(b2)] = value ? 1 : 0;
}

bool is_serial(const HomRel& r) {
  for (int b = 0; b < r.carrier().size(); ++b) {
    bool row = false;
    for (int b2 = 0; b2 < r.carrier().size() && !row; ++b2) row = r.at(b, b2);
    if (!row) return false;
  }
  return true;
}

bool is_left_not_full(const HomRel& r) {
  for (int b = 0; b < r.carrier().size(); ++b) {
    bool gap = false;
    for (int b2 = 0; b2 < r.carrier().size() && !gap; ++b2) gap = !r.at(b, b2);
    if (!gap) return false;
  }
  return true;
}

std::optional<int> least_element(const HomRel& r) {
  for (int b = 0; b < r.carrier().size(); ++b) {
    bool all = true;
    for (int b2 = 0; b2 < r.carrier().size() && all; ++b2) all = r.at(b, b2);
    if (all) return b;
  }
  return std::nullopt;
}

std::optional<int> maximal_element(const HomRel& r) {
  for (int b = 0; b < r.carrier().size(); ++b) {
    bool none = true;
    for (int b2 = 0; b2 < r.carrier().size() && none; ++b2) none = !r.at(b, b2);
    if (none) return b;
  }
  return std::nullopt;
}

bool has_least(const HomRel& r) { return least_element(r).has_value(); }
bool has_maximal(const HomRel& r) { return maximal_element(r).has_value(); }

namespace {

void require_carrier(const HomRel& r, const Universe& u) {
  if (!(u.alphabet() == r.carrier())) throw Error("universe alphabet differs from relation carrier");
}

// Shared top-down fill: out[v * a] = f(out[v], last(v) or b0, a).
template <typename Step>
Pred fill_top_down(const Universe& u, int b0, bool root_value, Step step) {
  Pred out(u);
  out.set(std::size_t{0}, root_value);
  std::vector<int> last(u.node_count(), b0);
  for (std::size_t r = 0; r < u.node_count(); ++r) {
    if (u.length_of(r) == u.depth()) continue;
    for (int a = 0; a < u.alphabet().size(); ++a) {
      std::size_t c = u.child(r, a);
      last[c] = a;
      out.set(c, step(out.member(r), last[r], a));
    }
  }
  return out;
}

}  // namespace

Pred chaining(const HomRel& r, int b0, const Universe& u) {
  require_carrier(r, u);
  return fill_top_down(u, b0, true,
                       [&](bool prefix_in, int prev, int a) { return prefix_in && r.at(prev, a); });
}

Pred antichaining(const HomRel& r, int b0, const Universe& u) {
  require_carrier(r, u);
  return fill_top_down(u, b0, false,
                       [&](bool prefix_in, int prev, int a) { return prefix_in || r.at(prev, a); });
}

Pred alignment(const HomRel& r, int b0, const Universe& u) {
  require_carrier(r, u);
  return fill_top_down(u, b0, true, [&](bool, int prev, int a) { return r.at(prev, a); });
}

Pred blockings(const HomRel& r, int b0, const Universe& u) {
  require_carrier(r, u);
  return fill_top_down(u, b0, false, [&](bool, int prev, int a) { return r.at(prev, a); });
}

HetRel::HetRel(int domain_size, Alphabet codomain)
    : domain_size_(domain_size),
      codomain_(codomain),
      table_(static_cast<std::size_t>(domain_size) * static_cast<std::size_t>(codomain.size()), 0) {
  if (domain_size < 0) throw Error("negative domain size");
}

HetRel HetRel::from_mask(int domain_size, const Alphabet& codomain, std::uint64_t mask) {
  HetRel r(domain_size, codomain);
  for (std::size_t i = 0; i < r.table_.size(); ++i) r.table_[i] = (mask >> i) & 1u;
  return r;
}

bool HetRel::at(int a, int b) const {
  return table_[static_cast<std::size_t>(a) * static_cast<std::size_t>(codomain_.size()) +
                static_cast<std::size_t>(b)] != 0;
}

void HetRel::set(int a, int b, bool value) {
  table_[static_cast<std::size_t>(a) * static_cast<std::size_t>(codomain_.size()) +
         static_cast<std::size_t>(b)] = value ? 1 : 0;
}

bool is_left_total(const HetRel& r) { return is_left_total_below(r, r.domain_size()); }

bool is_left_total_below(const HetRel& r, int d) {
  for (int a = 0; a < d; ++a) {
    bool row = false;
    for (int b = 0; b < r.codomain().size() && !row; ++b) row = r.at(a, b);
    if (!row) return false;
  }
  return true;
}

std::optional<int> ground_element(const HetRel& r) {
  for (int a = 0; a < r.domain_size(); ++a) {
    bool all = true;
    for (int b = 0; b < r.codomain().size() && all; ++b) all = r.at(a, b);
    if (all) return a;
  }
  return std::nullopt;
}

bool is_grounded(const HetRel& r) { return ground_element(r).has_value(); }

namespace {

void require_codomain(const HetRel& r, const Universe& u) {
  if (!(u.alphabet() == r.codomain())) throw Error("universe alphabet differs from relation codomain");
  if (u.depth() > r.domain_size()) throw DepthError("universe deeper than the relation's domain");
}

}  // namespace

Pred seq_pos_alignment(const HetRel& r, const Universe& u) {
  require_codomain(r, u);
  Pred out(u);
  for (std::size_t rank = 0; rank < u.node_count(); ++rank) {
    int len = u.length_of(rank);
    out.set(rank, len == 0 ? true : r.at(len - 1, u.last_element(rank)));
  }
  return out;
}

Pred seq_neg_alignment(const HetRel& r, const Universe& u) {
  require_codomain(r, u);
  Pred out(u);
  for (std::size_t rank = 0; rank < u.node_count(); ++rank) {
    int len = u.length_of(rank);
    out.set(rank, len == 0 ? false : r.at(len - 1, u.last_element(rank)));
  }
  return out;
}

DcSerialReport check_dc_serial(const HomRel& r, int b0, int depth) {
  DcSerialReport rep;
  rep.serial = is_serial(r);
  Universe u(r.carrier(), depth);
  Pred align = alignment(r, b0, u);
  rep.alignment_productive = is_productive(align);
  if (rep.serial) {
    // greedy seriality walk; every step satisfies the last-pair condition
    std::vector<int> values;
    int cur = b0;
    for (int n = 0; n < depth; ++n) {
      for (int b = 0; b < r.carrier().size(); ++b) {
        if (r.at(cur, b)) {
          values.push_back(b);
          cur = b;
          break;
        }
      }
    }
    rep.branch = Branch(std::move(values));
  } else {
    rep.branch = find_infinite_branch(align);
  }
  rep.holds = !rep.serial || rep.branch.has_value();
  return rep;
}

BiLeastReport check_bi_least(const HomRel& r, int b0, int depth) {
  BiLeastReport rep;
  Universe u(r.carrier(), depth);
  rep.blockings_barred = is_barred(blockings(r, b0, u));
  rep.least = least_element(r);
  rep.holds = !rep.blockings_barred || rep.least.has_value();
  return rep;
}

CcReport check_cc(const HetRel& r, int depth) {
  CcReport rep;
  if (depth > r.domain_size()) throw DepthError("depth exceeds the relation's domain");
  rep.left_total = is_left_total_below(r, depth);
  std::vector<int> alpha;
  bool ok = true;
  for (int a = 0; a < depth && ok; ++a) {
    ok = false;
    for (int b = 0; b < r.codomain().size(); ++b) {
      if (r.at(a, b)) {
        alpha.push_back(b);
        ok = true;
        break;
      }
    }
  }
  if (ok) rep.choice = std::move(alpha);
  rep.holds = !rep.left_total || rep.choice.has_value();
  return rep;
}

WbiReport check_wbi(const HetRel& r, int depth) {
  WbiReport rep;
  if (depth > r.domain_size()) throw DepthError("depth exceeds the relation's domain");
  double total = 1;
  for (int i = 0; i < depth; ++i) total *= r.codomain().size();
  if (total > 1e6) throw SizeLimitError("branch enumeration too large");
  // barred: every alpha in B^depth meets R at some position below depth
  rep.barred = true;
  std::vector<int> alpha(static_cast<std::size_t>(depth), 0);
  while (rep.barred) {
    bool meets = false;
    for (int n = 0; n < depth && !meets; ++n) meets = r.at(n, alpha[static_cast<std::size_t>(n)]);
    if (!meets && depth > 0) rep.barred = false;
    if (depth == 0) rep.barred = false;  // no position to meet at
    std::size_t i = 0;
    while (i < alpha.size() && ++alpha[i] == r.codomain().size()) alpha[i++] = 0;
    if (i == alpha.size()) break;
  }
  for (int a = 0; a < depth && !rep.ground.has_value(); ++a) {
    bool full_row = true;
    for (int b = 0; b < r.codomain().size() && full_row; ++b) full_row = r.at(a, b);
    if (full_row) rep.ground = a;
  }
  rep.holds = !rep.barred || rep.ground.has_value();
  return rep;
}

}  // namespace wellfound
