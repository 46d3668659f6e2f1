#pragma once

#include <string>
#include <vector>

#include "davkit/core/sequence.hpp"
#include "davkit/search.hpp"

namespace davkit {

// Which explicit family a long atom over an interval belongs to.
enum class InverseCase {
  kNone,
  kIntervalMax,       // M^m (-m)^M over [-m, M], gcd(m, M) = 1
  kSymmetricMaxPos,   // m^{m-1} (-(m-1))^m over [-m, m]
  kSymmetricMaxNeg,   // its negation
  kSubmaxOddPos,      // m^{m-2} (-(m-2))^m, m odd
  kSubmaxOddNeg,
  kSubmaxMixedPos,    // m^{m-2} (-(m-1))^{m-1} 1
  kSubmaxMixedNeg,
};

// Stable tag used in reports: THM2, COR3_POS, ..., NONE.
const char* case_tag(InverseCase c);
InverseCase mirror(InverseCase c);

struct InverseVerdict {
  bool matches = false;
  InverseCase which = InverseCase::kNone;
};

// Templates the classifiers compare against.
std::vector<Sequence> interval_max_templates(i64 m, i64 M);
std::vector<Sequence> symmetric_max_templates(i64 m);
std::vector<Sequence> symmetric_submax_templates(i64 m);

// Length m + M over [-m, M]. Throws InvalidArgument on a wrong length or an
// element outside the interval.
InverseVerdict classify_interval_max(i64 m, i64 M, const Sequence& s);
// Length 2m - 1 over [-m, m], m >= 2.
InverseVerdict classify_symmetric_max(i64 m, const Sequence& s);
// Length 2m - 2 over [-m, m], m >= 3.
InverseVerdict classify_symmetric_submax(i64 m, const Sequence& s);

struct InverseCheck {
  std::string ground;  // e.g. "[-3,3]"
  i64 length = 0;
  std::vector<Sequence> expected;
  std::vector<Sequence> found;
  bool ok = false;
};

struct InverseReport {
  std::vector<InverseCheck> checks;
  bool ok = true;
};

// For each m: atoms of length 2m - 1 (m >= 2) and 2m - 2 (m >= 3) over
// [-m, m]; for each coprime m, M in the range, atoms of length m + M over
// [-m, M]. The enumerated sets must equal the templates exactly; a
// mismatch throws ConsistencyError carrying the first offending witness
// unless `throw_on_mismatch` is false.
InverseReport verify_inverse(const std::vector<i64>& m_values, const SearchOptions& options = {},
                             bool throw_on_mismatch = true);

}  // namespace davkit
