#include "davkit/constructions.hpp"

#include <algorithm>
#include <numeric>

#include "davkit/zerosum.hpp"

namespace davkit {

namespace {

Construction certify(Sequence s, i64 check_limit) {
  if (!s.sum().is_zero()) throw ConsistencyError("construction is not zero-sum: " + to_string(s));
  if (s.length() > check_limit) return {std::move(s), Certificate::kConstructionProof};
  try {
    if (auto w = find_proper_zero_subsum(s)) {
      throw ConsistencyError("construction " + to_string(s) + " has the zero-sum part " + to_string(w->sub));
    }
  } catch (const CapExceeded&) {
    return {std::move(s), Certificate::kConstructionProof};
  }
  return {std::move(s), Certificate::kMachineChecked};
}

i64 ipow(i64 b, i64 e) {
  i64 r = 1;
  for (i64 i = 0; i < e; ++i) r = checked_mul(r, b);
  return r;
}

Sequence cube_sequence(i64 m, i64 d) {
  if (m < 1 || d < 1) throw InvalidArgument("hypercube_atom needs m, d >= 1");
  if (d > 62) throw InvalidArgument("hypercube_atom dimension too large");
  const auto du = static_cast<std::size_t>(d);
  if (m == 1) {
    std::vector<Sequence::Entry> raw;
    raw.emplace_back(Element(std::vector<i64>(du, 1)), 1);
    for (std::size_t k = 2; k <= du + 1; ++k) {
      // 1-based: zeros at 1..k-2, -1 at k-1, ones at k..d.
      std::vector<i64> c(du, 1);
      for (std::size_t i = 0; i + 2 < k; ++i) c[i] = 0;
      c[k - 2] = -1;
      raw.emplace_back(Element(std::move(c)), i64{1} << (k - 2));
    }
    return Sequence::from_counts(GroupSpec{}, du, raw);
  }
  std::vector<Sequence::Entry> cur{{Element::scalar(m), m - 1}, {Element::scalar(-(m - 1)), m}};
  i64 length = 2 * m - 1;
  for (std::size_t k = 1; k < du; ++k) {
    std::vector<Sequence::Entry> next;
    for (const auto& [e, mult] : cur) {
      auto c = e.lattice.coords();
      c.push_back(m);
      next.emplace_back(Element(std::move(c)), checked_mul(mult, m - 1));
    }
    std::vector<i64> tail(k, 0);
    tail.push_back(-(m - 1));
    next.emplace_back(Element(std::move(tail)), checked_mul(m, length));
    length = checked_mul(length, 2 * m - 1);
    cur = std::move(next);
  }
  return Sequence::from_counts(GroupSpec{}, du, cur);
}

}  // namespace

const char* to_string(Certificate c) {
  return c == Certificate::kMachineChecked ? "machine_checked" : "construction_proof";
}

Construction two_element_atom(i64 x, i64 y, i64 check_limit) {
  if (x == 0 || y == 0 || (x > 0) == (y > 0)) throw InvalidArgument("two_element_atom needs x * y < 0");
  const i64 g = std::gcd(x, y);
  const std::vector<Sequence::Entry> raw{{Element::scalar(x), checked_abs(y) / g},
                                         {Element::scalar(y), checked_abs(x) / g}};
  return certify(Sequence::from_counts(GroupSpec{}, 1, raw), check_limit);
}

Construction interval_max_atom(i64 m, i64 M, i64 check_limit) {
  if (m < 1 || M < 1) throw InvalidArgument("interval_max_atom needs m, M >= 1");
  if (std::gcd(m, M) != 1) {
    throw InvalidArgument("no atom of length m + M exists over [-m, M] when gcd(m, M) > 1");
  }
  return two_element_atom(M, -m, check_limit);
}

Construction hypercube_atom(i64 m, i64 d, i64 check_limit) {
  Sequence s = cube_sequence(m, d);
  const i64 expected = ipow(2 * m - 1 + (m == 1 ? 1 : 0), d);
  if (s.length() != expected) throw ConsistencyError("hypercube atom has the wrong length");
  const auto p = profile(s);
  if (p.supports.size() != static_cast<std::size_t>(d) + 1 || p.gcd != 1) {
    throw ConsistencyError("hypercube atom profile must have d + 1 supports and coprime multiplicities");
  }
  return certify(std::move(s), check_limit);
}

MultiplicityProfile profile(const Sequence& s) {
  MultiplicityProfile p;
  for (const auto& [e, k] : s.entries()) {
    p.supports.push_back(e);
    p.mults.push_back(k);
    p.gcd = std::gcd(p.gcd, k);
  }
  return p;
}

std::vector<i64> bezout_fold(const std::vector<i64>& alpha) {
  if (alpha.empty()) throw InvalidArgument("bezout_fold needs at least one value");
  std::vector<i64> w{1};
  i64 g = alpha.front();
  for (std::size_t j = 1; j < alpha.size(); ++j) {
    const auto [ng, s, t] = extended_gcd(g, alpha[j]);
    for (auto& c : w) c = checked_mul(c, s);
    w.push_back(t);
    g = ng;
  }
  return w;
}

Construction group_box_atom(i64 n, i64 m, i64 d, i64 check_limit) {
  if (n < 1) throw InvalidArgument("group_box_atom needs n >= 1");
  const Sequence base = cube_sequence(m, d);
  const auto p = profile(base);
  std::vector<i64> w(p.mults.size(), 0);
  if (m == 1) {
    // e_1 = (1, ..., 1) has multiplicity 1, so it alone can carry weight 1.
    const Element e1(std::vector<i64>(static_cast<std::size_t>(d), 1));
    for (std::size_t j = 0; j < p.supports.size(); ++j) {
      if (p.supports[j].lattice == e1) w[j] = 1;
    }
  } else {
    w = bezout_fold(p.mults);
  }
  i64 check = 0;
  for (std::size_t j = 0; j < w.size(); ++j) check = checked_add(check, checked_mul(w[j], p.mults[j]));
  if (check != 1) throw ConsistencyError("Bezout weights do not combine to 1");

  const GroupSpec group = GroupSpec::cyclic(n);
  std::vector<Sequence::Entry> raw;
  for (std::size_t j = 0; j < w.size(); ++j) {
    std::vector<i64> residue;
    if (!group.trivial()) residue.push_back(mod_floor(w[j], n));
    raw.emplace_back(MixedElement(std::move(residue), p.supports[j].lattice), checked_mul(n, p.mults[j]));
  }
  Sequence s = Sequence::from_counts(group, static_cast<std::size_t>(d), raw);
  if (s.length() != checked_mul(n, base.length())) throw ConsistencyError("group box atom has the wrong length");
  return certify(std::move(s), check_limit);
}

PowerSubsequenceReport power_subsequence_check(i64 m, i64 d, i64 u, i64 guard) {
  if (u < 1) throw InvalidArgument("power_subsequence_check needs u >= 1");
  const Sequence base = cube_sequence(m, d);
  const Sequence s = base.power(u);
  const auto& entries = s.entries();
  i64 total = 1;
  for (const auto& en : entries) {
    if (__builtin_mul_overflow(total, en.second + 1, &total) || total > guard) {
      throw CapExceeded("power_subsequence_check would scan more than " + std::to_string(guard) +
                        " sub-multisets");
    }
  }
  PowerSubsequenceReport r;
  std::vector<i64> counts(entries.size(), 0);
  while (true) {
    std::size_t k = 0;
    while (k < counts.size() && counts[k] == entries[k].second) counts[k++] = 0;
    if (k == counts.size()) break;
    ++counts[k];
    ++r.scanned;
    std::vector<Sequence::Entry> raw;
    for (std::size_t j = 0; j < counts.size(); ++j) {
      if (counts[j] > 0) raw.emplace_back(entries[j].first, counts[j]);
    }
    Sequence sub = Sequence::from_counts(s.group(), s.dim(), raw);
    if (sub.sum().is_zero()) r.found.push_back(std::move(sub));
  }
  std::sort(r.found.begin(), r.found.end());
  std::vector<Sequence> expected;
  for (i64 j = 1; j <= u; ++j) expected.push_back(base.power(j));
  std::sort(expected.begin(), expected.end());
  r.matches = r.found == expected;
  return r;
}

}  // namespace davkit
