#include "davkit/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace davkit {

namespace {

BoundReport make_report(i64 lower, i64 upper, std::vector<std::string> prov) {
  if (lower > upper) throw ConsistencyError("bound report has lower > upper");
  return {lower, upper, lower == upper, std::move(prov)};
}

BoundReport exact(i64 v, std::vector<std::string> prov) { return make_report(v, v, std::move(prov)); }

i64 ipow(i64 base, i64 e) {
  i64 r = 1;
  for (i64 i = 0; i < e; ++i) r = checked_mul(r, base);
  return r;
}

void append(std::vector<std::string>& into, const std::vector<std::string>& from) {
  for (const auto& p : from) {
    if (std::find(into.begin(), into.end(), p) == into.end()) into.push_back(p);
  }
}

// chi of [-m, M]: scan pairs by decreasing x + y and stop once no pair can
// beat the best value found.
i64 interval_chi(i64 m, i64 M) {
  i64 best = 0;
  for (i64 x = m; x >= 1 && x + M > best; --x) {
    for (i64 y = M; y >= 1 && x + y > best; --y) {
      best = std::max(best, (x + y) / std::gcd(x, y));
    }
  }
  return best;
}

bool is_prime_power_of(i64 n, i64 p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

i64 smallest_prime_factor(i64 n) {
  for (i64 p = 2; p * p <= n; ++p) {
    if (n % p == 0) return p;
  }
  return n;
}

// Drops axes on which every element has coordinate 0. Returns the reduced
// set, or nullopt when no axis survives (the set is {0}).
std::optional<LatticeSet> drop_null_axes(const LatticeSet& x) {
  const auto box = bounding_box(x);
  std::vector<std::size_t> keep;
  for (std::size_t k = 0; k < box.size(); ++k) {
    if (box[k].lo != 0 || box[k].hi != 0) keep.push_back(k);
  }
  if (keep.empty()) return std::nullopt;
  if (keep.size() == box.size()) return x;
  if (auto e = std::get_if<ExplicitSet>(&x)) {
    std::vector<Element> out;
    for (const auto& p : e->elements) {
      std::vector<i64> c;
      for (auto k : keep) c.push_back(p[k]);
      out.emplace_back(std::move(c));
    }
    return make_explicit(std::move(out));
  }
  std::vector<Interval> axes;
  for (auto k : keep) axes.push_back(box[k]);
  if (axes.size() == 1) return axes.front();
  return Box{std::move(axes)};
}

BoundReport one_dim_bounds(const LatticeSet& x) {
  const auto box = bounding_box(x).front();
  const bool has_zero = contains(x, Element::scalar(0));
  if (box.lo >= 0 || box.hi <= 0) {
    return exact(has_zero ? 1 : 0, {provenance::kSignTrivial});
  }
  const i64 m = -box.lo;
  const i64 M = box.hi;
  BoundReport enclosing = interval_davenport(m, M);
  if (as_interval(x)) return enclosing;
  std::vector<i64> values;
  for (const auto& e : std::get<ExplicitSet>(x).elements) values.push_back(e.value());
  const i64 lower = chi(values);
  const i64 d = diam(values);
  std::vector<std::string> prov{provenance::kChiLower, provenance::kDiamUpper};
  i64 upper = d;
  if (enclosing.upper < upper) {
    upper = enclosing.upper;
    append(prov, enclosing.provenance);
  }
  return make_report(lower, upper, std::move(prov));
}

// Lower bound for d >= 2 sets that are not hypercubes: the best of an
// inscribed hypercube, axis intervals through the origin, and two-element
// atoms on lines through the origin.
i64 generic_lower(const LatticeSet& x) {
  const std::size_t d = dim(x);
  i64 best = contains(x, Element::zero(d)) ? 1 : 0;
  if (auto b = std::get_if<Box>(&x)) {
    i64 inscribed = std::numeric_limits<i64>::max();
    for (const auto& a : b->axes) inscribed = std::min(inscribed, std::min(-a.lo, a.hi));
    if (inscribed >= 1) best = std::max(best, hypercube_lower(inscribed, static_cast<i64>(d)));
    const bool origin_in = std::all_of(b->axes.begin(), b->axes.end(),
                                       [](const Interval& a) { return a.lo <= 0 && a.hi >= 0; });
    if (origin_in) {
      for (const auto& a : b->axes) {
        if (a.lo < 0 && a.hi > 0) best = std::max(best, interval_davenport(-a.lo, a.hi).lower);
      }
    }
    return best;
  }
  const auto& elems = std::get<ExplicitSet>(x).elements;
  if (elems.size() > 4000) return best;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = i + 1; j < elems.size(); ++j) {
      // a*x + b*y = 0 with a, b > 0 iff y is a negative multiple of x.
      const auto& u = elems[i];
      const auto& v = elems[j];
      if (u.is_zero() || v.is_zero()) continue;
      std::size_t k = 0;
      while (u[k] == 0) ++k;
      if (v[k] == 0 || (u[k] > 0) == (v[k] > 0)) continue;
      const i64 g = std::gcd(u[k], v[k]);
      const i64 a = checked_abs(v[k]) / g;
      const i64 bb = checked_abs(u[k]) / g;
      bool collinear = true;
      for (std::size_t c = 0; c < d && collinear; ++c) {
        collinear = checked_add(checked_mul(a, u[c]), checked_mul(bb, v[c])) == 0;
      }
      if (collinear) best = std::max(best, a + bb);
    }
  }
  return best;
}

}  // namespace

i64 chi(std::span<const i64> xs) {
  i64 best = 0;
  bool found = false;
  for (i64 x : xs) {
    for (i64 y : xs) {
      if (x < 0 && y > 0) {
        found = true;
        best = std::max(best, checked_add(checked_abs(x), y) / std::gcd(x, y));
      }
    }
  }
  if (!found) throw InvalidArgument("chi needs both a positive and a negative element");
  return best;
}

i64 diam(std::span<const i64> xs) {
  if (xs.empty()) throw InvalidArgument("diam of an empty set");
  auto [lo, hi] = std::minmax_element(xs.begin(), xs.end());
  return checked_sub(*hi, *lo);
}

BoundReport interval_davenport(i64 m, i64 M) {
  if (m < 1 || M < 1) throw InvalidArgument("interval_davenport needs m, M >= 1");
  if (std::gcd(m, M) == 1) return exact(checked_add(m, M), {provenance::kCoprimeExact});
  if (m == M) return exact(2 * m - 1, {provenance::kSymmetricExact});
  return make_report(interval_chi(m, M), m + M - 1, {provenance::kChiLower, provenance::kMaxLengthInverse});
}

i64 box_upper(std::span<const i64> m) {
  const auto d = static_cast<i64>(m.size());
  if (d < 1) throw InvalidArgument("box_upper needs d >= 1");
  // 2 (d + 1/d - 1) = 2 (d^2 - d + 1) / d.
  const i64 num = checked_mul(2, checked_add(checked_sub(checked_mul(d, d), d), 1));
  i64 product = 1;
  for (i64 mi : m) {
    if (mi < 0) throw InvalidArgument("box half-width must be non-negative");
    product = checked_mul(product, checked_add(checked_mul(num, mi) / d, 1));
  }
  return product;
}

i64 square_upper(i64 m1, i64 m2) {
  if (m1 < 1 || m2 < 1) throw InvalidArgument("square_upper needs m1, m2 >= 1");
  const i64 a = checked_mul(2 * m1 + 1, checked_add(checked_mul(4, m2), 1));
  const i64 b = checked_mul(2 * m2 + 1, checked_add(checked_mul(4, m1), 1));
  return std::min(a, b);
}

i64 hypercube_lower(i64 m, i64 d) {
  if (m < 1 || d < 1) throw InvalidArgument("hypercube parameters must be >= 1");
  return ipow(2 * m - 1 + (m == 1 ? 1 : 0), d);
}

BoundReport hypercube_bounds(i64 m, i64 d) {
  if (m < 1 || d < 1) throw InvalidArgument("hypercube_bounds needs m, d >= 1");
  if (d == 1) return interval_davenport(m, m);
  const std::vector<i64> half(static_cast<std::size_t>(d), m);
  if (d == 2) {
    if (m == 1) return exact(4, {provenance::kUnitSquare});
    return make_report(hypercube_lower(m, 2), std::min(square_upper(m, m), box_upper(half)),
                       {provenance::kCubeConstruction, provenance::kRectangle});
  }
  return make_report(hypercube_lower(m, d), box_upper(half),
                     {provenance::kCubeConstruction, provenance::kSteinitzBox});
}

BoundReport group_davenport(const GroupSpec& g) {
  if (g.trivial()) return exact(1, {provenance::kGroupCyclic});
  if (g.is_cyclic()) return exact(g.order(), {provenance::kGroupCyclic});
  i64 lower = 1;
  for (i64 n : g.factors()) lower = checked_add(lower, n - 1);
  const i64 p = smallest_prime_factor(g.exponent());
  const bool p_group = std::all_of(g.factors().begin(), g.factors().end(),
                                   [&](i64 n) { return is_prime_power_of(n, p); });
  if (g.rank() <= 2 || p_group) return exact(lower, {provenance::kGroupBasicLower, provenance::kGroupSmallRank});
  const double e = static_cast<double>(g.exponent());
  const double ratio = static_cast<double>(g.order()) / e;
  const auto upper = static_cast<i64>(std::floor((1.0 + std::log(ratio)) * e));
  return make_report(lower, std::max(lower, upper), {provenance::kGroupBasicLower, provenance::kGroupLogUpper});
}

BoundReport product_bounds(const GroupSpec& g, const LatticeSet& x) {
  const BoundReport gb = group_davenport(g);
  const BoundReport xb = best_bounds(as_ground(x));
  std::vector<std::string> prov{provenance::kProductUpper};
  append(prov, gb.provenance);
  append(prov, xb.provenance);
  const i64 upper = checked_mul(gb.upper, xb.upper);

  i64 lower = xb.lower;
  if (contains(x, Element::zero(dim(x)))) lower = std::max(lower, gb.lower);
  if (lower > 0) prov.push_back(provenance::kProductEmbedding);
  if (auto cube = as_hypercube(x); cube && g.is_cyclic()) {
    const i64 bezout = checked_mul(g.order(), hypercube_lower(cube->first, static_cast<i64>(cube->second)));
    if (bezout >= lower) {
      lower = bezout;
      prov.push_back(provenance::kProductBezout);
    }
  }
  return make_report(lower, upper, std::move(prov));
}

BoundReport best_bounds(const GroundSet& g) {
  if (auto p = std::get_if<GroupProduct>(&g)) return product_bounds(p->group, p->base);
  const LatticeSet x = lattice_part(g);
  auto reduced = drop_null_axes(x);
  if (!reduced) return exact(1, {provenance::kSignTrivial});
  const LatticeSet& r = *reduced;
  if (dim(r) == 1) return one_dim_bounds(r);
  if (auto cube = as_hypercube(r)) return hypercube_bounds(cube->first, static_cast<i64>(cube->second));
  const auto half = enclosing_half_widths(r);
  i64 upper = box_upper(half);
  std::vector<std::string> prov{provenance::kSteinitzBox};
  if (half.size() == 2 && square_upper(half[0], half[1]) < upper) {
    upper = square_upper(half[0], half[1]);
    prov = {provenance::kRectangle};
  }
  const i64 lower = generic_lower(r);
  if (lower > 0) prov.insert(prov.begin(), provenance::kInscribedLower);
  return make_report(lower, upper, std::move(prov));
}

}  // namespace davkit
