#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "davkit/core/ground_set.hpp"
#include "davkit/core/sequence.hpp"

namespace davkit {

struct SearchStats {
  std::uint64_t nodes = 0;   // candidate extensions examined
  std::uint64_t prunes = 0;  // extensions discarded (internal zero-sum or infeasible completion)
  std::uint64_t atoms = 0;   // atoms met at any length
  double seconds = 0.0;
};

struct SearchProgress {
  std::size_t branches_done = 0;
  std::size_t branches_total = 0;
  i64 best_length = 0;
  std::uint64_t nodes = 0;
};

struct SearchOptions {
  // Depth cap; values above length_bound are clamped to it.
  std::optional<i64> cap;
  // 0 = std::thread::hardware_concurrency().
  unsigned threads = 0;
  i64 element_cap = kDefaultElementCap;
  // Per root branch; 0 = unlimited. Deterministic, unlike the time limit.
  std::uint64_t max_nodes = 0;
  double time_limit_seconds = 0.0;
  // Called after each root branch finishes, serialized across workers.
  std::function<void(const SearchProgress&)> progress;
};

struct DavenportResult {
  i64 lower = 0;
  i64 upper = 0;
  bool exact = false;
  // An atom of length `lower`; the lexicographically smallest one when exact.
  std::optional<Sequence> witness;
  i64 depth = 0;  // search depth actually used
  bool complete = false;
  SearchStats stats;
  std::vector<std::string> provenance;
};

// Proved upper bound on D(ground) used as the default search depth:
// 1-d sets give diam (0 or 1 when one-signed), d >= 2 sets the Steinitz box
// product over the enclosing symmetric box, products D(G) times the base.
i64 length_bound(const GroundSet& ground);

DavenportResult davenport(const GroundSet& ground, const SearchOptions& options = {});

// All atoms of length exactly `length`, sorted. Throws CapExceeded when a
// node or time limit stops the enumeration early.
std::vector<Sequence> atoms_of_length(const GroundSet& ground, i64 length,
                                      const SearchOptions& options = {});

// atoms_of_length at L = D(ground). Throws CapExceeded if D is not settled.
std::vector<Sequence> max_atoms(const GroundSet& ground, const SearchOptions& options = {});

}  // namespace davkit
