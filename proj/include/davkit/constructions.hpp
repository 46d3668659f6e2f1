#pragma once

#include <vector>

#include "davkit/core/sequence.hpp"

namespace davkit {

// How the minimality of a constructed atom is established.
enum class Certificate {
  kMachineChecked,    // verified by the zero-sum DP
  kConstructionProof  // too long to check; minimal by construction
};

const char* to_string(Certificate c);

struct Construction {
  Sequence sequence;
  Certificate certificate = Certificate::kMachineChecked;
};

// Atoms longer than this are not re-verified by the DP.
inline constexpr i64 kDefaultCheckLimit = 200;

// x^{|y|/g} * y^{|x|/g} with g = gcd(x, y). Requires x * y < 0.
Construction two_element_atom(i64 x, i64 y, i64 check_limit = kDefaultCheckLimit);

// M^m * (-m)^M. Throws InvalidArgument unless gcd(m, M) = 1.
Construction interval_max_atom(i64 m, i64 M, i64 check_limit = kDefaultCheckLimit);

// The extremal atom over [-m, m]^d of length (2m - 1 + [m = 1])^d.
//   m >= 2: s_1 = m^{m-1} (-(m-1))^m and
//           s_{k+1} = prod_i (x_i, m)^{m-1} * (0, -(m-1))^{m |s_k|}.
//   m == 1: e_1 e_2 e_3^2 ... e_{d+1}^{2^{d-1}} where e_1 = (1, ..., 1) and
//           e_k has zeros before index k-1, -1 at k-1 and ones after.
Construction hypercube_atom(i64 m, i64 d, i64 check_limit = kDefaultCheckLimit);

struct MultiplicityProfile {
  std::vector<MixedElement> supports;
  std::vector<i64> mults;
  i64 gcd = 0;
};

MultiplicityProfile profile(const Sequence& s);

// Bezout coefficients w with sum alpha_j w_j = gcd(alpha), by a left fold of
// the extended Euclidean algorithm.
std::vector<i64> bezout_fold(const std::vector<i64>& alpha);

// Atom over C_n x [-m, m]^d of length n (2m - 1 + [m = 1])^d: writing the
// hypercube atom as prod u_j^{alpha_j} with Bezout weights w_j, the sequence
// prod (w_j mod n, u_j)^{n alpha_j}. For m = 1 the weights are (1, 0, ..., 0).
Construction group_box_atom(i64 n, i64 m, i64 d, i64 check_limit = kDefaultCheckLimit);

struct PowerSubsequenceReport {
  i64 scanned = 0;               // nonempty sub-multisets examined
  std::vector<Sequence> found;   // the zero-sum ones, sorted
  bool matches = false;          // found == { s^j : 1 <= j <= u }
};

// Scans every nonempty sub-multiset of hypercube_atom(m, d)^u and collects
// the zero-sum ones. Throws CapExceeded if more than `guard` sub-multisets
// would be scanned.
PowerSubsequenceReport power_subsequence_check(i64 m, i64 d, i64 u, i64 guard = 10'000'000);

}  // namespace davkit
