#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "davkit/core/ground_set.hpp"
#include "davkit/core/sequence.hpp"
#include "davkit/error.hpp"

namespace davkit {

// An ordering of a sequence. perm[i] is a position in s.flatten_lattice()
// (0-based); prefix_sums[i] is the sum of the first i + 1 chosen elements.
// A partial ordering (fewer positions than the sequence length) is allowed
// as a seed.
struct Ordering {
  std::vector<std::size_t> perm;
  std::vector<Element> prefix_sums;
};

// Raised when the greedy extension finds no element of the opposite sign to
// the running sum, or meets a zero prefix early. Either the sequence is not an
// atom or the seed was not admissible.
class NotMinimalOrBadSeed : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

// Validates the positions (in range, no repeats) and computes prefix sums.
Ordering make_ordering(const Sequence& s, std::vector<std::size_t> perm);

// True iff every element at index 2..k (1-based) strictly opposes the sign
// of the sum before it. Throws unless s is 1-dimensional, has length >= 2,
// and 1 <= k <= ord.perm.size().
bool is_nyctalopic(const Sequence& s, const Ordering& ord, std::size_t k);

// Extends `seed` greedily: while positions remain, append the unused position
// of smallest index whose element opposes the current prefix sum.
Ordering nyctalopic_extend(const Sequence& s, const std::vector<std::size_t>& seed);

struct ContainmentReport {
  i64 min_prefix = 0;
  i64 max_prefix = 0;
  bool left_strict = false;   // sums required to stay > min X
  bool right_strict = false;  // sums required to stay < max X
};

// Checks that a nyctalopic ordering of an atom over the interval x keeps its
// prefix sums in [min x, max x], strictly below max x unless it starts at
// max x and strictly above min x unless it starts at min x. A violation
// throws ConsistencyError.
ContainmentReport containment_check(const Sequence& s, const Ordering& ord, const Interval& x);

// Heuristic, no optimality guarantee: at each step append the element that
// minimizes the sup-norm of the new prefix sum, ties going to the
// lexicographically smallest element. The first position can be forced.
struct GreedyReorder {
  Ordering ordering;
  std::vector<Interval> prefix_box;  // per-axis range of the prefix sums
  i64 sup_norm = 0;                  // largest sup-norm among prefix sums
};
GreedyReorder greedy_box_reorder(const Sequence& s, std::optional<std::size_t> first = std::nullopt);

// Prefix-sum predicates. Each returns true when the property holds.
bool prefix_sums_distinct(const Ordering& ord);
// For n >= 3: no prefix sum of index i != 2 (1-based) equals x_1 + x_3.
bool refine_exclusion_holds(const Sequence& s, const Ordering& ord);
// If all prefix sums lie in x then n <= |x|.
bool pigeonhole_holds(const Ordering& ord, const LatticeSet& x);
// If additionally n >= 3, x_2 != x_3 and x_1 + x_3 lies in x, then n <= |x| - 1.
bool pigeonhole_sharp_holds(const Sequence& s, const Ordering& ord, const LatticeSet& x);

}  // namespace davkit
