#include "davkit/inverse.hpp"

#include <algorithm>
#include <numeric>

namespace davkit {

namespace {

Sequence values(std::initializer_list<std::pair<i64, i64>> counts) {
  std::vector<Sequence::Entry> raw;
  for (const auto& [v, k] : counts) raw.emplace_back(Element::scalar(v), k);
  return Sequence::from_counts(GroupSpec{}, 1, raw);
}

void require_shape(const Sequence& s, i64 lo, i64 hi, i64 length) {
  if (s.is_mixed() || s.dim() != 1) throw InvalidArgument("inverse classifiers take 1-d lattice sequences");
  if (s.length() != length) {
    throw InvalidArgument("expected length " + std::to_string(length) + ", got " + std::to_string(s.length()));
  }
  for (const auto& [e, k] : s.entries()) {
    if (e.lattice.value() < lo || e.lattice.value() > hi) {
      throw InvalidArgument("element " + to_string(e) + " lies outside [" + std::to_string(lo) + "," +
                            std::to_string(hi) + "]");
    }
  }
}

InverseVerdict match(const Sequence& s, const std::vector<std::pair<Sequence, InverseCase>>& table) {
  for (const auto& [t, c] : table) {
    if (s == t) return {true, c};
  }
  return {};
}

std::vector<Sequence> sorted(std::vector<Sequence> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::string interval_text(i64 lo, i64 hi) { return "[" + std::to_string(lo) + "," + std::to_string(hi) + "]"; }

}  // namespace

const char* case_tag(InverseCase c) {
  switch (c) {
    case InverseCase::kIntervalMax: return "THM2";
    case InverseCase::kSymmetricMaxPos: return "COR3_POS";
    case InverseCase::kSymmetricMaxNeg: return "COR3_NEG";
    case InverseCase::kSubmaxOddPos: return "T2M2_I_POS";
    case InverseCase::kSubmaxOddNeg: return "T2M2_I_NEG";
    case InverseCase::kSubmaxMixedPos: return "T2M2_II_POS";
    case InverseCase::kSubmaxMixedNeg: return "T2M2_II_NEG";
    case InverseCase::kNone: break;
  }
  return "NONE";
}

InverseCase mirror(InverseCase c) {
  switch (c) {
    case InverseCase::kSymmetricMaxPos: return InverseCase::kSymmetricMaxNeg;
    case InverseCase::kSymmetricMaxNeg: return InverseCase::kSymmetricMaxPos;
    case InverseCase::kSubmaxOddPos: return InverseCase::kSubmaxOddNeg;
    case InverseCase::kSubmaxOddNeg: return InverseCase::kSubmaxOddPos;
    case InverseCase::kSubmaxMixedPos: return InverseCase::kSubmaxMixedNeg;
    case InverseCase::kSubmaxMixedNeg: return InverseCase::kSubmaxMixedPos;
    default: return c;
  }
}

std::vector<Sequence> interval_max_templates(i64 m, i64 M) {
  if (m < 1 || M < 1) throw InvalidArgument("interval needs m, M >= 1");
  if (std::gcd(m, M) != 1) return {};
  return {values({{M, m}, {-m, M}})};
}

std::vector<Sequence> symmetric_max_templates(i64 m) {
  if (m < 2) throw InvalidArgument("symmetric maximal atoms need m >= 2");
  const Sequence pos = values({{m, m - 1}, {-(m - 1), m}});
  return sorted({pos, pos.negated()});
}

std::vector<Sequence> symmetric_submax_templates(i64 m) {
  if (m < 3) throw InvalidArgument("symmetric submaximal atoms need m >= 3");
  std::vector<Sequence> out;
  if (m % 2 == 1) {
    const Sequence odd = values({{m, m - 2}, {-(m - 2), m}});
    out.push_back(odd);
    out.push_back(odd.negated());
  }
  const Sequence mixed = values({{m, m - 2}, {-(m - 1), m - 1}, {1, 1}});
  out.push_back(mixed);
  out.push_back(mixed.negated());
  return sorted(std::move(out));
}

InverseVerdict classify_interval_max(i64 m, i64 M, const Sequence& s) {
  if (m < 1 || M < 1) throw InvalidArgument("interval needs m, M >= 1");
  require_shape(s, -m, M, m + M);
  if (std::gcd(m, M) != 1) return {};
  return match(s, {{values({{M, m}, {-m, M}}), InverseCase::kIntervalMax}});
}

InverseVerdict classify_symmetric_max(i64 m, const Sequence& s) {
  if (m < 2) throw InvalidArgument("symmetric maximal atoms need m >= 2");
  require_shape(s, -m, m, 2 * m - 1);
  const Sequence pos = values({{m, m - 1}, {-(m - 1), m}});
  return match(s, {{pos, InverseCase::kSymmetricMaxPos}, {pos.negated(), InverseCase::kSymmetricMaxNeg}});
}

InverseVerdict classify_symmetric_submax(i64 m, const Sequence& s) {
  if (m < 3) throw InvalidArgument("symmetric submaximal atoms need m >= 3");
  require_shape(s, -m, m, 2 * m - 2);
  std::vector<std::pair<Sequence, InverseCase>> table;
  if (m % 2 == 1) {
    const Sequence odd = values({{m, m - 2}, {-(m - 2), m}});
    table.emplace_back(odd, InverseCase::kSubmaxOddPos);
    table.emplace_back(odd.negated(), InverseCase::kSubmaxOddNeg);
  }
  const Sequence mixed = values({{m, m - 2}, {-(m - 1), m - 1}, {1, 1}});
  table.emplace_back(mixed, InverseCase::kSubmaxMixedPos);
  table.emplace_back(mixed.negated(), InverseCase::kSubmaxMixedNeg);
  return match(s, table);
}

InverseReport verify_inverse(const std::vector<i64>& m_values, const SearchOptions& options,
                             bool throw_on_mismatch) {
  InverseReport report;
  auto run = [&](i64 lo, i64 hi, i64 length, std::vector<Sequence> expected) {
    InverseCheck c;
    c.ground = interval_text(lo, hi);
    c.length = length;
    c.expected = sorted(std::move(expected));
    c.found = atoms_of_length(make_interval(lo, hi), length, options);
    c.ok = c.found == c.expected;
    if (!c.ok) {
      report.ok = false;
      if (throw_on_mismatch) {
        std::string witness;
        for (const auto& s : c.found) {
          if (!std::binary_search(c.expected.begin(), c.expected.end(), s)) {
            witness = "unexpected atom " + to_string(s);
            break;
          }
        }
        for (const auto& s : c.expected) {
          if (witness.empty() && !std::binary_search(c.found.begin(), c.found.end(), s)) {
            witness = "missing atom " + to_string(s);
          }
        }
        throw ConsistencyError("inverse structure mismatch over " + c.ground + " at length " +
                               std::to_string(length) + ": " + witness);
      }
    }
    report.checks.push_back(std::move(c));
  };

  std::vector<i64> ms = m_values;
  std::sort(ms.begin(), ms.end());
  ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
  for (i64 m : ms) {
    if (m < 1) throw InvalidArgument("m values must be >= 1");
    if (m >= 2) run(-m, m, 2 * m - 1, symmetric_max_templates(m));
    if (m >= 3) run(-m, m, 2 * m - 2, symmetric_submax_templates(m));
  }
  for (i64 m : ms) {
    for (i64 M : ms) {
      if (std::gcd(m, M) == 1) run(-m, M, m + M, interval_max_templates(m, M));
    }
  }
  return report;
}

}  // namespace davkit
