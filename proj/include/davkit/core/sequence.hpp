#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "davkit/core/types.hpp"

namespace davkit {

// An unordered multiset of elements of G x Z^d, stored as a multiplicity map
// sorted by element. Pure lattice sequences use the trivial group.
//
// Entries always have positive multiplicities and strictly increasing
// elements, so two Sequences are equal iff they are the same multiset.
class Sequence {
 public:
  using Entry = std::pair<MixedElement, i64>;

  Sequence() : Sequence(GroupSpec{}, 1) {}
  // Empty sequence over G x Z^dim.
  Sequence(GroupSpec group, std::size_t dim);

  // Builds from arbitrary (element, multiplicity) pairs: duplicates merge,
  // zero multiplicities vanish, negative ones are rejected.
  static Sequence from_counts(GroupSpec group, std::size_t dim, std::span<const Entry> raw);
  static Sequence from_elements(std::span<const Element> elems);
  static Sequence from_elements(GroupSpec group, std::span<const MixedElement> elems);
  // Convenience for d = 1: from_values({3, 3, -2, -2, -2}).
  static Sequence from_values(std::initializer_list<i64> values);
  static Sequence from_value_counts(std::initializer_list<std::pair<i64, i64>> counts);

  const GroupSpec& group() const noexcept { return group_; }
  std::size_t dim() const noexcept { return dim_; }
  const std::vector<Entry>& entries() const noexcept { return entries_; }
  std::size_t distinct() const noexcept { return entries_.size(); }
  i64 length() const noexcept { return length_; }
  bool empty() const noexcept { return length_ == 0; }
  const MixedElement& sum() const noexcept { return sum_; }
  bool is_mixed() const noexcept { return !group_.trivial(); }

  i64 count(const MixedElement& e) const;
  bool contains(const MixedElement& e) const { return count(e) > 0; }

  void add(const MixedElement& e, i64 multiplicity = 1);

  Sequence negated() const;
  // s^k: every multiplicity scaled by k >= 1.
  Sequence power(i64 k) const;
  // Sub-multiset test.
  bool divides(const Sequence& other) const;

  // Elements expanded by multiplicity, in canonical order.
  std::vector<MixedElement> flatten() const;
  // Lattice parts of flatten(); for pure lattice sequences.
  std::vector<Element> flatten_lattice() const;

  bool operator==(const Sequence& other) const;
  // Orders by the flattened element list (lexicographically), then length.
  bool operator<(const Sequence& other) const;

 private:
  void check_element(const MixedElement& e) const;
  void recompute();

  GroupSpec group_;
  std::size_t dim_ = 1;
  std::vector<Entry> entries_;
  i64 length_ = 0;
  MixedElement sum_;
};

// Re-sorts, merges duplicates, drops zero multiplicities and recomputes the
// cached length and sum. Idempotent.
Sequence canonicalize(const Sequence& s);

// "3^2 * -2^3", "(1,1) * (0,-1)^2", "(1|-1)^2".
std::string to_string(const Sequence& s);

// Parses the format produced by to_string. Elements are separated by '*',
// '.', or whitespace; "x^k" repeats x. Mixed elements "(g1,..|x1,..)" need
// the group.
Sequence parse_sequence(const std::string& text, const GroupSpec& group = {});

}  // namespace davkit
