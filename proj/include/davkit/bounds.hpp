#pragma once

#include <span>
#include <string>
#include <vector>

#include "davkit/core/ground_set.hpp"

namespace davkit {

// Closed-form bracket [lower, upper] on a Davenport constant together with
// the results that justify it.
struct BoundReport {
  i64 lower = 0;
  i64 upper = 0;
  bool exact = false;
  std::vector<std::string> provenance;
};

// Result identifiers used in BoundReport::provenance.
namespace provenance {
inline constexpr const char* kSignTrivial = "interval.one_signed";       // D = 0, or 1 with 0 adjoined
inline constexpr const char* kChiLower = "interval.chi_lower";           // chi(X) <= D(X)
inline constexpr const char* kDiamUpper = "interval.diam_upper";         // D(X) <= diam(X)
inline constexpr const char* kCoprimeExact = "interval.coprime_exact";   // D([-m,M]) = m+M, gcd 1
inline constexpr const char* kSymmetricExact = "interval.symmetric_exact";
inline constexpr const char* kMaxLengthInverse = "interval.max_length_inverse";  // length m+M needs gcd 1
inline constexpr const char* kSteinitzBox = "box.steinitz_upper";        // C_d <= d + 1/d - 1
inline constexpr const char* kRectangle = "square.rectangle_upper";      // (2m1+1)(4m2+1)
inline constexpr const char* kUnitSquare = "square.unit_exact";          // D([-1,1]^2) = 4
inline constexpr const char* kCubeConstruction = "hypercube.construction_lower";
inline constexpr const char* kInscribedLower = "box.inscribed_lower";     // monotonicity from a subset
inline constexpr const char* kGroupBasicLower = "group.basic_lower";     // 1 + sum(n_i - 1)
inline constexpr const char* kGroupCyclic = "group.cyclic_exact";        // D = |G|
inline constexpr const char* kGroupSmallRank = "group.rank2_or_pgroup_exact";
inline constexpr const char* kGroupLogUpper = "group.log_upper";
inline constexpr const char* kProductUpper = "product.submultiplicative_upper";
inline constexpr const char* kProductBezout = "product.bezout_lower";
inline constexpr const char* kProductEmbedding = "product.embedding_lower";
}  // namespace provenance

// max over opposite-sign pairs of (|x|+|y|)/gcd(x,y). Throws InvalidArgument
// unless both signs occur.
i64 chi(std::span<const i64> xs);
i64 diam(std::span<const i64> xs);

BoundReport interval_davenport(i64 m, i64 M);

// prod_i (floor(2 (d + 1/d - 1) m_i) + 1), evaluated exactly. Half-widths of
// 0 contribute a factor 1.
i64 box_upper(std::span<const i64> m);
i64 square_upper(i64 m1, i64 m2);
BoundReport hypercube_bounds(i64 m, i64 d);
BoundReport group_davenport(const GroupSpec& g);
// D(G x X).
BoundReport product_bounds(const GroupSpec& g, const LatticeSet& x);

// Best closed-form bracket for any ground set.
BoundReport best_bounds(const GroundSet& g);

// (2m - 1 + delta_m)^d.
i64 hypercube_lower(i64 m, i64 d);

}  // namespace davkit
