#pragma once

#include <cstdint>
#include <vector>

#include "wellfound/seq.hpp"

namespace wellfound {

// Bounded sequence universe U(B, d): every sequence over B of length <= d,
// addressed by breadth-first rank.  Rank 0 is the empty sequence, then all
// length-1 sequences in lexicographic order, and so on.
class Universe {
 public:
  Universe(Alphabet alphabet, int depth);

  const Alphabet& alphabet() const { return alphabet_; }
  int depth() const { return depth_; }
  std::size_t node_count() const { return offsets_.back(); }

  // Ranks [level_begin(n), level_end(n)) hold exactly the length-n sequences.
  std::size_t level_begin(int len) const { return offsets_.at(static_cast<std::size_t>(len)); }
  std::size_t level_end(int len) const { return offsets_.at(static_cast<std::size_t>(len) + 1); }

  std::size_t rank(const SeqU& u) const;
  SeqU unrank(std::size_t r) const;
  int length_of(std::size_t r) const;
  std::size_t child(std::size_t r, int a) const;  // rank of u * a
  std::size_t parent(std::size_t r) const;        // requires r > 0
  int last_element(std::size_t r) const;          // requires r > 0

  friend bool operator==(const Universe& a, const Universe& b) {
    return a.alphabet_ == b.alphabet_ && a.depth_ == b.depth_;
  }

 private:
  Alphabet alphabet_;
  int depth_;
  std::vector<std::size_t> offsets_;  // offsets_[n] = first rank of length n
};

// Total membership table over a universe.  Closure operations below are pure;
// set()/assign_mask() exist so harnesses can refill one table in place while
// enumerating predicates.
class Pred {
 public:
  explicit Pred(Universe universe);
  static Pred full(const Universe& universe);
  static Pred from_members(const Universe& universe, const std::vector<SeqU>& members);
  static Pred from_mask(const Universe& universe, std::uint64_t mask);

  const Universe& universe() const { return universe_; }
  bool member(std::size_t r) const { return bits_[r] != 0; }
  bool member(const SeqU& u) const { return member(universe_.rank(u)); }
  void set(std::size_t r, bool value) { bits_[r] = value ? 1 : 0; }
  void assign_mask(std::uint64_t mask);
  std::uint64_t to_mask() const;
  std::size_t count() const;
  std::vector<SeqU> members() const;

  friend bool operator==(const Pred& a, const Pred& b) {
    return a.universe_ == b.universe_ && a.bits_ == b.bits_;
  }

 private:
  Universe universe_;
  std::vector<std::uint8_t> bits_;
};

// Closure under restriction / extension.
bool is_tree(const Pred& t);
bool is_monotone(const Pred& t);

// The four arborification/monotonisation operators.  Quantification over
// extensions is bounded by the universe depth.
Pred down_arborify(const Pred& t);     // largest tree inside t
Pred up_monotonise(const Pred& t);     // smallest monotone predicate containing t
Pred up_arborify(const Pred& t);       // smallest tree containing t
Pred down_monotonise(const Pred& t);   // largest monotone predicate inside t

Pred complement(const Pred& t);
bool subset_of(const Pred& s, const Pred& t);

}  // namespace wellfound
