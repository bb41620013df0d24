#pragma once

#include <cstdint>
#include <optional>

#include "wellfound/found.hpp"

namespace wellfound {

// Homogeneous relation on an alphabet B, stored as a total boolean matrix.
class HomRel {
 public:
  explicit HomRel(Alphabet carrier);
  static HomRel from_mask(const Alphabet& carrier, std::uint64_t mask);  // row-major bits

  const Alphabet& carrier() const { return carrier_; }
  bool at(int b, int b2) const;
  void set(int b, int b2, bool value);

 private:
  Alphabet carrier_;
  std::vector<std::uint8_t> table_;
};

bool is_serial(const HomRel& r);         // forall b exists b' R(b,b')
bool is_left_not_full(const HomRel& r);  // forall b exists b' not R(b,b')
std::optional<int> least_element(const HomRel& r);    // b with forall b' R(b,b')
std::optional<int> maximal_element(const HomRel& r);  // b with forall b' not R(b,b')
bool has_least(const HomRel& r);
bool has_maximal(const HomRel& r);

// Encodings of a relation as predicates on B*, truncated to the given
// universe (whose alphabet must equal the carrier).
Pred chaining(const HomRel& r, int b0, const Universe& u);      // every step in R
Pred antichaining(const HomRel& r, int b0, const Universe& u);  // some step in R
Pred alignment(const HomRel& r, int b0, const Universe& u);     // last step in R
Pred blockings(const HomRel& r, int b0, const Universe& u);     // dual, empty excluded

// Heterogeneous relation between the index prefix {0..domain_size-1} and an
// alphabet B.
class HetRel {
 public:
  HetRel(int domain_size, Alphabet codomain);
  static HetRel from_mask(int domain_size, const Alphabet& codomain, std::uint64_t mask);

  int domain_size() const { return domain_size_; }
  const Alphabet& codomain() const { return codomain_; }
  bool at(int a, int b) const;
  void set(int a, int b, bool value);

 private:
  int domain_size_;
  Alphabet codomain_;
  std::vector<std::uint8_t> table_;
};

bool is_left_total(const HetRel& r);                  // forall a exists b R(a,b)
bool is_left_total_below(const HetRel& r, int d);     // restricted to a < d
std::optional<int> ground_element(const HetRel& r);   // a with forall b R(a,b)
bool is_grounded(const HetRel& r);

// Sequential alignments as predicates on B*.  Universe depth must not
// exceed the relation's domain size.
Pred seq_pos_alignment(const HetRel& r, const Universe& u);  // u*b member iff R(|u|,b)
Pred seq_neg_alignment(const HetRel& r, const Universe& u);

// DC-serial: R serial implies the alignment from b0 has an infinite branch.
struct DcSerialReport {
  bool serial = false;
  bool alignment_productive = false;
  std::optional<Branch> branch;
  bool holds = false;
};
DcSerialReport check_dc_serial(const HomRel& r, int b0, int depth);

// BI-least: blockings of R from b0 barred implies R has a least element.
struct BiLeastReport {
  bool blockings_barred = false;
  std::optional<int> least;
  bool holds = false;
};
BiLeastReport check_bi_least(const HomRel& r, int b0, int depth);

// CC: R left-total (below d) implies a choice function on the first d indices.
struct CcReport {
  bool left_total = false;
  std::optional<std::vector<int>> choice;
  bool holds = false;
};
CcReport check_cc(const HetRel& r, int depth);

// WBI: R barred (below d) implies R grounded.
struct WbiReport {
  bool barred = false;
  std::optional<int> ground;
  bool holds = false;
};
WbiReport check_wbi(const HetRel& r, int depth);

}  // namespace wellfound
