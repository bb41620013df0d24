#pragma once

#include <string>
#include <vector>

#include "wellfound/errors.hpp"

namespace wellfound {

// Non-empty finite alphabet; elements are the integers 0..size-1.
// Arbitrary label sets are mapped to this dense range at the CLI boundary.
class Alphabet {
 public:
  explicit Alphabet(int size) : size_(size) {
    if (size < 1) throw Error("alphabet size must be at least 1");
  }
  int size() const { return size_; }
  bool contains(int a) const { return a >= 0 && a < size_; }
  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  int size_;
};

// Finite sequence of alphabet elements.
class SeqU {
 public:
  SeqU() = default;
  explicit SeqU(std::vector<int> items) : items_(std::move(items)) {}

  int length() const { return static_cast<int>(items_.size()); }
  bool empty() const { return items_.empty(); }
  int at(int n) const { return items_.at(static_cast<std::size_t>(n)); }
  const std::vector<int>& items() const { return items_; }
  std::string to_string() const;

  friend bool operator==(const SeqU&, const SeqU&) = default;

 private:
  std::vector<int> items_;
};

// Depth-d truncation of an infinite sequence: a map that is total on
// {0..depth-1}.  Only this explicit-map reading of infinite sequences is
// decidable, so it is the one the whole library works with.
class Branch {
 public:
  Branch() = default;
  explicit Branch(std::vector<int> values) : values_(std::move(values)) {}

  int depth() const { return static_cast<int>(values_.size()); }
  int at(int n) const { return values_.at(static_cast<std::size_t>(n)); }
  const std::vector<int>& values() const { return values_; }
  std::string to_string() const;

  friend bool operator==(const Branch&, const Branch&) = default;

 private:
  std::vector<int> values_;
};

// u * a.  Throws InvalidElementError if a is outside the alphabet.
SeqU extend(const SeqU& u, int a, const Alphabet& alphabet);

// u <=_s v : u is an initial segment of v.
bool is_prefix(const SeqU& u, const SeqU& v);

// u <_s alpha : pointwise agreement on the first |u| values.
// Throws DepthError when |u| exceeds the branch depth.
bool prefix_of_branch(const SeqU& u, const Branch& alpha);

// a @ alpha : prepend one value, deepening the branch by one.
Branch cons_branch(int a, const Branch& alpha);

// a @ u and u @ v (first argument comes first).
SeqU cons_seq(int a, const SeqU& u);
SeqU concat(const SeqU& u, const SeqU& v);

// The length-n truncation of a branch, and the branch read off a sequence.
SeqU branch_prefix(const Branch& alpha, int n);
Branch to_branch(const SeqU& u);

}  // namespace wellfound
