#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "davkit/core/sequence.hpp"

namespace davkit {

// A nonempty proper sub-multiset of some parent sequence whose sum is zero.
struct SubsumWitness {
  Sequence sub;
};

inline constexpr std::size_t kDefaultStateCap = 20'000'000;
inline constexpr i64 kDefaultBruteGuard = 10'000'000;

// True iff the sum is the identity (lattice part zero, residues zero).
// Throws InvalidArgument on the empty sequence.
bool is_zero_sum(const Sequence& s);

// Bounded-knapsack dynamic programming over reachable sub-multiset sums,
// one layer per distinct element. Returns the first witness found (elements
// are processed in canonical order, counts ascending). Throws CapExceeded once
// more than `state_cap` DP states are alive.
std::optional<SubsumWitness> find_proper_zero_subsum(const Sequence& s,
                                                     std::size_t state_cap = kDefaultStateCap);

// Reference implementation: scans every sub-multiset, no pruning. Throws
// CapExceeded when the number of sub-multisets exceeds `guard`.
std::optional<SubsumWitness> find_proper_zero_subsum_naive(const Sequence& s,
                                                           i64 guard = kDefaultBruteGuard);

// Zero-sum with no nonempty proper zero-sum sub-multiset.
bool is_minimal(const Sequence& s, std::size_t state_cap = kDefaultStateCap);

// Every atom of length <= max_len over the alphabet, sorted and unique.
// Enumerates all multisets and filters them with the naive scan. Throws
// CapExceeded when the number of candidate multisets exceeds `guard`.
std::vector<Sequence> atoms_brute(std::span<const Element> elements, i64 max_len,
                                  i64 guard = kDefaultBruteGuard);
std::vector<Sequence> atoms_brute(const GroupSpec& group, std::span<const MixedElement> elements,
                                  i64 max_len, i64 guard = kDefaultBruteGuard);

// Number of multisets of size 1..max_len over n symbols, saturating at
// INT64_MAX.
i64 multiset_count(i64 n, i64 max_len);

}  // namespace davkit
