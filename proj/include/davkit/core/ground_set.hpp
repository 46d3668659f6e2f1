#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "davkit/core/types.hpp"

namespace davkit {

// [lo, hi] in Z.
struct Interval {
  i64 lo = 0;
  i64 hi = 0;
  bool operator==(const Interval&) const = default;
};

// [lo_1, hi_1] x ... x [lo_d, hi_d].
struct Box {
  std::vector<Interval> axes;
  bool operator==(const Box&) const = default;
};

// A finite list of points of one common dimension, kept sorted and unique.
struct ExplicitSet {
  std::vector<Element> elements;
  bool operator==(const ExplicitSet&) const = default;
};

using LatticeSet = std::variant<Interval, Box, ExplicitSet>;

// G x X with X a lattice set. Nesting is excluded by the type.
struct GroupProduct {
  GroupSpec group;
  LatticeSet base;
  bool operator==(const GroupProduct&) const = default;
};

using GroundSet = std::variant<Interval, Box, ExplicitSet, GroupProduct>;

// Validating constructors. They throw InvalidArgument on lo > hi, empty or
// mixed-dimension element lists, and duplicates.
Interval make_interval(i64 lo, i64 hi);
Box make_box(std::vector<Interval> axes);
Box make_cube(i64 lo, i64 hi, std::size_t dim);
ExplicitSet make_explicit(std::vector<Element> elements);
ExplicitSet make_explicit_values(std::vector<i64> values);
GroupProduct make_product(GroupSpec group, LatticeSet base);

void validate(const GroundSet& g);

std::size_t dim(const LatticeSet& x);
std::size_t dim(const GroundSet& g);
const GroupSpec& group_of(const GroundSet& g);
// The lattice part of g (g itself unless g is a GroupProduct).
LatticeSet lattice_part(const GroundSet& g);
GroundSet as_ground(const LatticeSet& x);

bool contains(const LatticeSet& x, const Element& e);
bool contains(const GroundSet& g, const MixedElement& e);

// Exact number of elements; throws OverflowError past 2^63.
i64 cardinality(const GroundSet& g);

// Per-axis [min, max] of the lattice part.
std::vector<Interval> bounding_box(const LatticeSet& x);

// Symmetric half-widths m_i = max(|lo_i|, |hi_i|) of the tightest enclosing
// box [-m_1, m_1] x ... x [-m_d, m_d].
std::vector<i64> enclosing_half_widths(const LatticeSet& x);

// If x is the interval or cube [-m, m]^d, returns (m, d).
std::optional<std::pair<i64, std::size_t>> as_hypercube(const LatticeSet& x);
// If x is a 1-d interval [lo, hi] (Interval, 1-axis Box, or a contiguous
// explicit range), returns it.
std::optional<Interval> as_interval(const LatticeSet& x);

inline constexpr i64 kDefaultElementCap = 1'000'000;

// All elements in canonical (lexicographic) order, without duplicates. For a
// GroupProduct the group part varies slowest. Throws CapExceeded when the
// cardinality exceeds `cap`; the message carries the exact cardinality.
std::vector<MixedElement> enumerate(const GroundSet& g, i64 cap = kDefaultElementCap);
std::vector<Element> enumerate_lattice(const LatticeSet& x, i64 cap = kDefaultElementCap);

// Ground-set text grammar:
//   [a,b]                 interval
//   [a,b]^d               power box
//   [a,b]x[c,d]x...       explicit box (factors may carry ^k)
//   {e1,e2,...}           explicit set, elements k or (k1,...,kd)
//   Cn1xCn2x... x <set>   group product; a bare group G means G x {0}
// Whitespace is ignored.
GroundSet parse_ground_set(const std::string& text);
std::string emit(const GroundSet& g);
std::string emit(const LatticeSet& x);

}  // namespace davkit
