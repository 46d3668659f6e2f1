#include "davkit/zerosum.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>

namespace davkit {

bool is_zero_sum(const Sequence& s) {
  if (s.empty()) throw InvalidArgument("the empty sequence has no zero-sum status");
  return s.sum().is_zero();
}

namespace {

// Flattened sums: group residues first, then lattice coordinates. Each
// coordinate is encoded mixed-radix over the range it can reach, so a DP
// state key is a single integer.
class SumCodec {
 public:
  explicit SumCodec(const Sequence& s) : moduli_(s.group().factors()), stride_(s.group().rank() + s.dim()) {
    lo_.assign(stride_, 0);
    radix_.assign(stride_, 1);
    for (std::size_t i = 0; i < moduli_.size(); ++i) radix_[i] = moduli_[i];
    std::vector<i64> hi(stride_, 0);
    for (const auto& [e, k] : s.entries()) {
      for (std::size_t j = 0; j < s.dim(); ++j) {
        const i64 c = checked_mul(e.lattice[j], k);
        auto& slot = c < 0 ? lo_[moduli_.size() + j] : hi[moduli_.size() + j];
        slot = checked_add(slot, c);
      }
    }
    unsigned __int128 total = 1;
    for (std::size_t j = moduli_.size(); j < stride_; ++j) radix_[j] = checked_add(checked_sub(hi[j], lo_[j]), 1);
    for (std::size_t j = 0; j < stride_; ++j) {
      total *= static_cast<unsigned __int128>(radix_[j]);
      if (total > (static_cast<unsigned __int128>(1) << 60)) {
        throw CapExceeded("sub-multiset sum range too large to encode");
      }
    }
    range_ = static_cast<std::uint64_t>(total);
  }

  std::size_t stride() const noexcept { return stride_; }
  std::uint64_t range() const noexcept { return range_; }

  std::uint64_t encode(const i64* v) const {
    std::uint64_t key = 0;
    for (std::size_t j = 0; j < stride_; ++j) {
      key = key * static_cast<std::uint64_t>(radix_[j]) + static_cast<std::uint64_t>(v[j] - lo_[j]);
    }
    return key;
  }

  void add_into(i64* acc, const i64* x) const {
    for (std::size_t j = 0; j < moduli_.size(); ++j) acc[j] = (acc[j] + x[j]) % moduli_[j];
    for (std::size_t j = moduli_.size(); j < stride_; ++j) acc[j] = checked_add(acc[j], x[j]);
  }

 private:
  std::vector<i64> moduli_;
  std::size_t stride_;
  std::vector<i64> lo_;
  std::vector<i64> radix_;
  std::uint64_t range_ = 1;
};

std::vector<i64> flat(const MixedElement& e) {
  std::vector<i64> v = e.group_part;
  v.insert(v.end(), e.lattice.coords().begin(), e.lattice.coords().end());
  return v;
}

struct DpNode {
  std::int64_t parent;
  std::uint32_t entry;
  i64 count;
  bool taken;
  bool left;
};

// Layer-local dedup table: dense when the key range is small, hashed otherwise.
class SeenTable {
 public:
  explicit SeenTable(std::uint64_t range) {
    if (range <= (std::uint64_t{1} << 22)) dense_.assign(range * 4, -1);
  }
  // Returns the existing node id, or stores and returns `id`.
  std::int64_t find_or_insert(std::uint64_t key, int flags, std::int64_t id) {
    if (!dense_.empty()) {
      auto& slot = dense_[key * 4 + static_cast<std::uint64_t>(flags)];
      if (slot < 0) {
        slot = id;
        touched_.push_back(key * 4 + static_cast<std::uint64_t>(flags));
      }
      return slot;
    }
    return hashed_.try_emplace(key * 4 + static_cast<std::uint64_t>(flags), id).first->second;
  }
  void clear() {
    for (auto k : touched_) dense_[k] = -1;
    touched_.clear();
    hashed_.clear();
  }

 private:
  std::vector<std::int64_t> dense_;
  std::vector<std::uint64_t> touched_;
  std::unordered_map<std::uint64_t, std::int64_t> hashed_;
};

}  // namespace

std::optional<SubsumWitness> find_proper_zero_subsum(const Sequence& s, std::size_t state_cap) {
  if (s.empty()) throw InvalidArgument("find_proper_zero_subsum needs a nonempty sequence");
  const SumCodec codec(s);
  const std::size_t stride = codec.stride();
  const auto& entries = s.entries();

  std::vector<std::vector<i64>> xs;
  for (const auto& [e, k] : entries) xs.push_back(flat(e));

  std::vector<DpNode> nodes{{-1, 0, 0, false, false}};
  std::vector<i64> sums(stride, 0);
  std::vector<std::int64_t> layer{0};
  SeenTable seen(codec.range());
  std::vector<i64> acc(stride);

  for (std::size_t i = 0; i < entries.size(); ++i) {
    const i64 mult = entries[i].second;
    const bool last = i + 1 == entries.size();
    std::vector<std::int64_t> next;
    seen.clear();
    for (std::int64_t id : layer) {
      std::copy_n(sums.begin() + id * static_cast<std::int64_t>(stride), stride, acc.begin());
      const DpNode base = nodes[static_cast<std::size_t>(id)];
      for (i64 c = 0; c <= mult; ++c) {
        if (c > 0) codec.add_into(acc.data(), xs[i].data());
        const bool taken = base.taken || c > 0;
        const bool left = base.left || c < mult;
        const int flags = (taken ? 1 : 0) | (left ? 2 : 0);
        const auto new_id = static_cast<std::int64_t>(nodes.size());
        if (seen.find_or_insert(codec.encode(acc.data()), flags, new_id) != new_id) continue;
        nodes.push_back({id, static_cast<std::uint32_t>(i), c, taken, left});
        sums.insert(sums.end(), acc.begin(), acc.end());
        next.push_back(new_id);
        if (nodes.size() > state_cap) {
          throw CapExceeded("zero-sum DP exceeded " + std::to_string(state_cap) + " states");
        }
        const bool zero = std::all_of(acc.begin(), acc.end(), [](i64 v) { return v == 0; });
        if (zero && taken && (left || !last)) {
          std::vector<Sequence::Entry> raw;
          for (std::int64_t at = new_id; at > 0; at = nodes[static_cast<std::size_t>(at)].parent) {
            const auto& n = nodes[static_cast<std::size_t>(at)];
            if (n.count > 0) raw.emplace_back(entries[n.entry].first, n.count);
          }
          return SubsumWitness{Sequence::from_counts(s.group(), s.dim(), raw)};
        }
      }
    }
    layer = std::move(next);
  }
  return std::nullopt;
}

std::optional<SubsumWitness> find_proper_zero_subsum_naive(const Sequence& s, i64 guard) {
  if (s.empty()) throw InvalidArgument("find_proper_zero_subsum needs a nonempty sequence");
  const auto& entries = s.entries();
  i64 total = 1;
  for (const auto& en : entries) {
    if (__builtin_mul_overflow(total, en.second + 1, &total) || total > guard) {
      throw CapExceeded("naive sub-multiset scan exceeds guard of " + std::to_string(guard));
    }
  }
  std::vector<i64> counts(entries.size(), 0);
  while (true) {
    std::size_t k = 0;
    while (k < counts.size() && counts[k] == entries[k].second) counts[k++] = 0;
    if (k == counts.size()) return std::nullopt;
    ++counts[k];
    const bool full = std::equal(counts.begin(), counts.end(), entries.begin(),
                                 [](i64 c, const Sequence::Entry& en) { return c == en.second; });
    if (full) continue;
    std::vector<Sequence::Entry> raw;
    for (std::size_t j = 0; j < counts.size(); ++j) {
      if (counts[j] > 0) raw.emplace_back(entries[j].first, counts[j]);
    }
    Sequence sub = Sequence::from_counts(s.group(), s.dim(), raw);
    if (sub.sum().is_zero()) return SubsumWitness{std::move(sub)};
  }
}

bool is_minimal(const Sequence& s, std::size_t state_cap) {
  return is_zero_sum(s) && !find_proper_zero_subsum(s, state_cap).has_value();
}

i64 multiset_count(i64 n, i64 max_len) {
  // C(n + L, L) - 1, computed incrementally as C(n+j, j) = C(n+j-1, j-1) * (n+j) / j.
  if (n <= 0 || max_len <= 0) return 0;
  unsigned __int128 c = 1;
  for (i64 j = 1; j <= max_len; ++j) {
    c = c * static_cast<unsigned __int128>(n + j) / static_cast<unsigned __int128>(j);
    if (c > static_cast<unsigned __int128>(std::numeric_limits<i64>::max())) {
      return std::numeric_limits<i64>::max();
    }
  }
  return static_cast<i64>(c) - 1;
}

std::vector<Sequence> atoms_brute(const GroupSpec& group, std::span<const MixedElement> elements,
                                  i64 max_len, i64 guard) {
  std::vector<MixedElement> alphabet(elements.begin(), elements.end());
  std::sort(alphabet.begin(), alphabet.end());
  alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
  if (alphabet.empty() || max_len <= 0) return {};
  const i64 candidates = multiset_count(static_cast<i64>(alphabet.size()), max_len);
  if (candidates > guard) {
    throw CapExceeded("atoms_brute would enumerate " + std::to_string(candidates) +
                      " multisets, above the guard of " + std::to_string(guard));
  }
  const std::size_t dim = alphabet.front().lattice.dim();

  std::vector<Sequence> atoms;
  std::vector<i64> counts(alphabet.size(), 0);
  // Enumerate count vectors with total in [1, max_len] by a recursive walk.
  auto visit = [&](auto&& self, std::size_t idx, i64 remaining) -> void {
    if (idx == alphabet.size()) {
      std::vector<Sequence::Entry> raw;
      for (std::size_t j = 0; j < counts.size(); ++j) {
        if (counts[j] > 0) raw.emplace_back(alphabet[j], counts[j]);
      }
      if (raw.empty()) return;
      Sequence s = Sequence::from_counts(group, dim, raw);
      if (s.sum().is_zero() && !find_proper_zero_subsum_naive(s, guard)) atoms.push_back(std::move(s));
      return;
    }
    for (i64 c = 0; c <= remaining; ++c) {
      counts[idx] = c;
      self(self, idx + 1, remaining - c);
    }
    counts[idx] = 0;
  };
  visit(visit, 0, max_len);
  std::sort(atoms.begin(), atoms.end());
  return atoms;
}

std::vector<Sequence> atoms_brute(std::span<const Element> elements, i64 max_len, i64 guard) {
  std::vector<MixedElement> mixed(elements.begin(), elements.end());
  return atoms_brute(GroupSpec{}, mixed, max_len, guard);
}

}  // namespace davkit
