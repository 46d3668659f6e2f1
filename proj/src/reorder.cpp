#include "davkit/reorder.hpp"

#include <algorithm>
#include <set>

namespace davkit {

namespace {

void require_lattice(const Sequence& s) {
  if (s.is_mixed()) throw InvalidArgument("reordering works on lattice sequences only");
}

void require_line(const Sequence& s) {
  require_lattice(s);
  if (s.dim() != 1) throw InvalidArgument("nyctalopic orderings are defined in dimension 1 only");
}

int sign(i64 v) { return (v > 0) - (v < 0); }

i64 sup_norm(const Element& e) {
  i64 r = 0;
  for (i64 c : e.coords()) r = std::max(r, checked_abs(c));
  return r;
}

}  // namespace

Ordering make_ordering(const Sequence& s, std::vector<std::size_t> perm) {
  require_lattice(s);
  const auto flat = s.flatten_lattice();
  std::vector<bool> used(flat.size(), false);
  Ordering ord;
  Element sum = Element::zero(s.dim());
  for (auto p : perm) {
    if (p >= flat.size()) throw InvalidArgument("ordering position out of range");
    if (used[p]) throw InvalidArgument("ordering repeats a position");
    used[p] = true;
    sum = sum + flat[p];
    ord.prefix_sums.push_back(sum);
  }
  ord.perm = std::move(perm);
  return ord;
}

bool is_nyctalopic(const Sequence& s, const Ordering& ord, std::size_t k) {
  require_line(s);
  if (s.length() < 2) throw InvalidArgument("nyctalopic orderings need length >= 2");
  if (k < 1 || k > ord.perm.size()) throw InvalidArgument("k must lie in [1, ordered length]");
  const auto flat = s.flatten_lattice();
  for (std::size_t i = 1; i < k; ++i) {
    const i64 before = ord.prefix_sums[i - 1].value();
    const i64 x = flat[ord.perm[i]].value();
    if (sign(x) * sign(before) >= 0) return false;
  }
  return true;
}

Ordering nyctalopic_extend(const Sequence& s, const std::vector<std::size_t>& seed) {
  require_line(s);
  const auto n = static_cast<std::size_t>(s.length());
  if (n < 2) throw InvalidArgument("nyctalopic orderings need length >= 2");
  if (!s.sum().is_zero()) throw NotMinimalOrBadSeed("sequence is not zero-sum");
  if (seed.empty()) throw InvalidArgument("the seed must fix at least the first position");
  Ordering ord = make_ordering(s, seed);
  if (!is_nyctalopic(s, ord, ord.perm.size())) throw InvalidArgument("seed is not nyctalopic");

  const auto flat = s.flatten_lattice();
  std::vector<bool> used(n, false);
  for (auto p : ord.perm) used[p] = true;
  i64 sum = ord.prefix_sums.back().value();
  while (ord.perm.size() < n) {
    if (sum == 0) throw NotMinimalOrBadSeed("a proper prefix sums to zero: not minimal or bad seed");
    std::size_t pick = n;
    for (std::size_t p = 0; p < n && pick == n; ++p) {
      if (!used[p] && sign(flat[p].value()) == -sign(sum)) pick = p;
    }
    if (pick == n) throw NotMinimalOrBadSeed("no element opposes the prefix sum: not minimal or bad seed");
    used[pick] = true;
    sum = checked_add(sum, flat[pick].value());
    ord.perm.push_back(pick);
    ord.prefix_sums.push_back(Element::scalar(sum));
  }
  return ord;
}

ContainmentReport containment_check(const Sequence& s, const Ordering& ord, const Interval& x) {
  require_line(s);
  if (ord.perm.size() != static_cast<std::size_t>(s.length())) {
    throw InvalidArgument("containment needs a full ordering");
  }
  const auto flat = s.flatten_lattice();
  for (const auto& e : flat) {
    if (e.value() < x.lo || e.value() > x.hi) throw InvalidArgument("sequence leaves the interval");
  }
  const i64 first = flat[ord.perm.front()].value();
  ContainmentReport r;
  r.left_strict = first != x.lo;
  r.right_strict = first != x.hi;
  r.min_prefix = r.max_prefix = ord.prefix_sums.front().value();
  for (const auto& p : ord.prefix_sums) {
    r.min_prefix = std::min(r.min_prefix, p.value());
    r.max_prefix = std::max(r.max_prefix, p.value());
  }
  const bool left_ok = r.left_strict ? r.min_prefix > x.lo : r.min_prefix >= x.lo;
  const bool right_ok = r.right_strict ? r.max_prefix < x.hi : r.max_prefix <= x.hi;
  if (!left_ok || !right_ok) {
    throw ConsistencyError("prefix sums of a nyctalopic ordering reach [" + std::to_string(r.min_prefix) + ", " +
                           std::to_string(r.max_prefix) + "], outside the guaranteed range for [" +
                           std::to_string(x.lo) + ", " + std::to_string(x.hi) + "]");
  }
  return r;
}

GreedyReorder greedy_box_reorder(const Sequence& s, std::optional<std::size_t> first) {
  require_lattice(s);
  if (s.empty() || !s.sum().is_zero()) throw InvalidArgument("greedy reordering needs a zero-sum sequence");
  const auto flat = s.flatten_lattice();
  const std::size_t n = flat.size();
  std::vector<bool> used(n, false);
  std::vector<std::size_t> perm;
  Element sum = Element::zero(s.dim());
  if (first) {
    if (*first >= n) throw InvalidArgument("first position out of range");
    perm.push_back(*first);
    used[*first] = true;
    sum = flat[*first];
  }
  while (perm.size() < n) {
    // flat is sorted, so the first position reaching the minimal norm holds
    // the lexicographically smallest candidate element.
    std::size_t pick = n;
    i64 best = 0;
    for (std::size_t p = 0; p < n; ++p) {
      if (used[p]) continue;
      const i64 norm = sup_norm(sum + flat[p]);
      if (pick == n || norm < best) {
        pick = p;
        best = norm;
      }
    }
    used[pick] = true;
    perm.push_back(pick);
    sum = sum + flat[pick];
  }
  GreedyReorder out;
  out.ordering = make_ordering(s, std::move(perm));
  const auto& ps = out.ordering.prefix_sums;
  for (std::size_t j = 0; j < s.dim(); ++j) {
    Interval a{ps.front()[j], ps.front()[j]};
    for (const auto& p : ps) {
      a.lo = std::min(a.lo, p[j]);
      a.hi = std::max(a.hi, p[j]);
    }
    out.prefix_box.push_back(a);
  }
  for (const auto& p : ps) out.sup_norm = std::max(out.sup_norm, sup_norm(p));
  return out;
}

bool prefix_sums_distinct(const Ordering& ord) {
  std::set<Element> seen(ord.prefix_sums.begin(), ord.prefix_sums.end());
  return seen.size() == ord.prefix_sums.size();
}

bool refine_exclusion_holds(const Sequence& s, const Ordering& ord) {
  if (ord.perm.size() < 3) return true;
  const auto flat = s.flatten_lattice();
  const Element target = flat[ord.perm[0]] + flat[ord.perm[2]];
  for (std::size_t i = 0; i < ord.prefix_sums.size(); ++i) {
    if (i != 1 && ord.prefix_sums[i] == target) return false;
  }
  return true;
}

bool pigeonhole_holds(const Ordering& ord, const LatticeSet& x) {
  for (const auto& p : ord.prefix_sums) {
    if (!contains(x, p)) return true;
  }
  return static_cast<i64>(ord.prefix_sums.size()) <= cardinality(as_ground(x));
}

bool pigeonhole_sharp_holds(const Sequence& s, const Ordering& ord, const LatticeSet& x) {
  const std::size_t n = ord.prefix_sums.size();
  if (n < 3) return true;
  for (const auto& p : ord.prefix_sums) {
    if (!contains(x, p)) return true;
  }
  const auto flat = s.flatten_lattice();
  const Element& x1 = flat[ord.perm[0]];
  const Element& x2 = flat[ord.perm[1]];
  const Element& x3 = flat[ord.perm[2]];
  if (x2 == x3 || !contains(x, x1 + x3)) return true;
  return static_cast<i64>(n) <= cardinality(as_ground(x)) - 1;
}

}  // namespace davkit
