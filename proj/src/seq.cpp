#include "wellfound/seq.hpp"

#include <algorithm>

namespace wellfound {

namespace {

std::string render(const std::vector<int>& xs) {
  if (xs.empty()) return "\xce\xb5";  // epsilon
  bool digits = std::all_of(xs.begin(), xs.end(), [](int x) { return x >= 0 && x <= 9; });
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!digits && i > 0) out += '.';
    out += std::to_string(xs[i]);
  }
  return out;
}

}  // namespace

std::string SeqU::to_string() const { return render(items_); }
std::string Branch::to_string() const { return render(values_); }

SeqU extend(const SeqU& u, int a, const Alphabet& alphabet) {
  if (!alphabet.contains(a)) {
    throw InvalidElementError("element " + std::to_string(a) + " outside alphabet of size " +
                              std::to_string(alphabet.size()));
  }
  std::vector<int> items = u.items();
  items.push_back(a);
  return SeqU(std::move(items));
}

bool is_prefix(const SeqU& u, const SeqU& v) {
  if (u.length() > v.length()) return false;
  return std::equal(u.items().begin(), u.items().end(), v.items().begin());
}

bool prefix_of_branch(const SeqU& u, const Branch& alpha) {
  if (u.length() > alpha.depth()) {
    throw DepthError("sequence of length " + std::to_string(u.length()) +
                     " compared against branch of depth " + std::to_string(alpha.depth()));
  }
  for (int n = 0; n < u.length(); ++n) {
    if (alpha.at(n) != u.at(n)) return false;
  }
  return true;
}

Branch cons_branch(int a, const Branch& alpha) {
  std::vector<int> values;
  values.reserve(static_cast<std::size_t>(alpha.depth()) + 1);
  values.push_back(a);
  values.insert(values.end(), alpha.values().begin(), alpha.values().end());
  return Branch(std::move(values));
}

SeqU cons_seq(int a, const SeqU& u) {
  std::vector<int> items;
  items.reserve(static_cast<std::size_t>(u.length()) + 1);
  items.push_back(a);
  items.insert(items.end(), u.items().begin(), u.items().end());
  return SeqU(std::move(items));
}

SeqU concat(const SeqU& u, const SeqU& v) {
  std::vector<int> items = u.items();
  items.insert(items.end(), v.items().begin(), v.items().end());
  return SeqU(std::move(items));
}

SeqU branch_prefix(const Branch& alpha, int n) {
  if (n > alpha.depth()) throw DepthError("prefix longer than branch depth");
  return SeqU(std::vector<int>(alpha.values().begin(), alpha.values().begin() + n));
}

Branch to_branch(const SeqU& u) { return Branch(u.items()); }

}  // namespace wellfound
