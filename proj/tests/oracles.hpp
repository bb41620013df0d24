// Brute-force oracles used to compute expected values independently of the
// library's fixpoint and rank-table implementations.  Everything here works
// by literal quantifier enumeration over sequences and branches.
#pragma once

#include <random>
#include <vector>

#include "wellfound/found.hpp"

namespace wellfound::oracle {

inline std::vector<SeqU> all_seqs(int alphabet, int max_len) {
  std::vector<SeqU> out{SeqU()};
  std::vector<SeqU> level{SeqU()};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<SeqU> next;
    for (const SeqU& u : level) {
      for (int a = 0; a < alphabet; ++a) {
        std::vector<int> items = u.items();
        items.push_back(a);
        next.emplace_back(std::move(items));
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return out;
}

inline std::vector<Branch> all_branches(int alphabet, int depth) {
  std::vector<Branch> out;
  std::vector<int> values(static_cast<std::size_t>(depth), 0);
  while (true) {
    out.emplace_back(values);
    std::size_t i = 0;
    while (i < values.size() && ++values[i] == alphabet) values[i++] = 0;
    if (i == values.size()) break;
  }
  return out;
}

// Pointwise prefix comparison, the oracle behind prefix_of_branch.
inline bool prefix_pointwise(const SeqU& u, const Branch& alpha) {
  if (u.length() > alpha.depth()) return false;
  for (int n = 0; n < u.length(); ++n) {
    if (u.at(n) != alpha.at(n)) return false;
  }
  return true;
}

inline bool has_branch(const Pred& t) {
  const Universe& u = t.universe();
  for (const Branch& alpha : all_branches(u.alphabet().size(), u.depth())) {
    bool all = true;
    for (int n = 0; n <= u.depth() && all; ++n) all = t.member(branch_prefix(alpha, n));
    if (all) return true;
  }
  return false;
}

inline bool barred(const Pred& t) {
  const Universe& u = t.universe();
  for (const Branch& alpha : all_branches(u.alphabet().size(), u.depth())) {
    bool hit = false;
    for (int n = 0; n <= u.depth() && !hit; ++n) hit = t.member(branch_prefix(alpha, n));
    if (!hit) return false;
  }
  return true;
}

// The four closures by their literal definitions.
inline Pred down_arborify(const Pred& t) {
  const Universe& uni = t.universe();
  Pred out(uni);
  for (std::size_t r = 0; r < uni.node_count(); ++r) {
    SeqU u = uni.unrank(r);
    bool all = true;
    for (std::size_t r2 = 0; r2 < uni.node_count() && all; ++r2) {
      SeqU v = uni.unrank(r2);
      if (is_prefix(v, u)) all = t.member(r2);
    }
    out.set(r, all);
  }
  return out;
}

inline Pred up_monotonise(const Pred& t) {
  const Universe& uni = t.universe();
  Pred out(uni);
  for (std::size_t r = 0; r < uni.node_count(); ++r) {
    SeqU u = uni.unrank(r);
    bool some = false;
    for (std::size_t r2 = 0; r2 < uni.node_count() && !some; ++r2) {
      some = is_prefix(uni.unrank(r2), u) && t.member(r2);
    }
    out.set(r, some);
  }
  return out;
}

inline Pred up_arborify(const Pred& t) {
  const Universe& uni = t.universe();
  Pred out(uni);
  for (std::size_t r = 0; r < uni.node_count(); ++r) {
    SeqU u = uni.unrank(r);
    bool some = false;
    for (std::size_t r2 = 0; r2 < uni.node_count() && !some; ++r2) {
      some = is_prefix(u, uni.unrank(r2)) && t.member(r2);
    }
    out.set(r, some);
  }
  return out;
}

inline Pred down_monotonise(const Pred& t) {
  const Universe& uni = t.universe();
  Pred out(uni);
  for (std::size_t r = 0; r < uni.node_count(); ++r) {
    SeqU u = uni.unrank(r);
    bool all = true;
    for (std::size_t r2 = 0; r2 < uni.node_count() && all; ++r2) {
      if (is_prefix(u, uni.unrank(r2))) all = t.member(r2);
    }
    out.set(r, all);
  }
  return out;
}

// Literal nu-iteration over sequences, independent of the rank tables.
inline Pred pruning_by_iteration(const Pred& t) {
  const Universe& uni = t.universe();
  Pred x = t;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t r = 0; r < uni.node_count(); ++r) {
      if (!x.member(r)) continue;
      SeqU u = uni.unrank(r);
      if (u.length() == uni.depth()) continue;  // open horizon
      bool child = false;
      for (int a = 0; a < uni.alphabet().size() && !child; ++a) {
        child = x.member(extend(u, a, uni.alphabet()));
      }
      if (!child) {
        x.set(r, false);
        changed = true;
      }
    }
  }
  return x;
}

inline Pred random_pred(const Universe& u, std::mt19937_64& rng) {
  Pred out(u);
  for (std::size_t r = 0; r < u.node_count(); ++r) out.set(r, rng() & 1u);
  return out;
}

}  // namespace wellfound::oracle
