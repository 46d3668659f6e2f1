#include <doctest.h>

#include <numeric>

#include "davkit/bounds.hpp"
#include "davkit/constructions.hpp"
#include "davkit/search.hpp"
#include "davkit/zerosum.hpp"
#include "oracle.hpp"

using namespace davkit;

namespace {

Sequence seq(const std::string& text) { return parse_sequence(text); }

i64 ipow(i64 b, i64 e) {
  i64 r = 1;
  while (e-- > 0) r *= b;
  return r;
}

i64 cube_length(i64 m, i64 d) { return ipow(2 * m - 1 + (m == 1 ? 1 : 0), d); }

void check_inside_cube(const Sequence& s, i64 m) {
  for (const auto& [e, k] : s.entries()) {
    for (i64 c : e.lattice.coords()) {
      CHECK(c >= -m);
      CHECK(c <= m);
    }
  }
}

}  // namespace

TEST_CASE("two_element_atom") {
  const auto a = two_element_atom(-2, 3);
  CHECK(a.sequence == seq("3^2 * -2^3"));
  CHECK(a.certificate == Certificate::kMachineChecked);
  CHECK(two_element_atom(-1, 1).sequence == seq("1 * -1"));
  const auto c = two_element_atom(-4, 6);
  CHECK(c.sequence == seq("6^2 * -4^3"));
  CHECK(c.sequence.length() == 5);
  CHECK(oracle::is_atom(c.sequence));
  CHECK_THROWS_AS(two_element_atom(2, 3), InvalidArgument);
  CHECK_THROWS_AS(two_element_atom(0, 3), InvalidArgument);
  for (i64 x = -7; x <= -1; ++x) {
    for (i64 y = 1; y <= 7; ++y) {
      const auto t = two_element_atom(x, y);
      CHECK(t.sequence.length() == (y - x) / std::gcd(x, y));
      CHECK(oracle::is_atom(t.sequence));
    }
  }
}

TEST_CASE("interval_max_atom") {
  CHECK(interval_max_atom(2, 3).sequence == seq("3^2 * -2^3"));
  CHECK(interval_max_atom(1, 1).sequence == seq("1 * -1"));
  CHECK_THROWS_AS(interval_max_atom(2, 4), InvalidArgument);
  for (i64 m = 1; m <= 8; ++m) {
    for (i64 M = 1; M <= 8; ++M) {
      if (std::gcd(m, M) != 1) continue;
      const auto a = interval_max_atom(m, M);
      CHECK(a.sequence.length() == m + M);
      CHECK(oracle::is_atom(a.sequence));
    }
  }
}

TEST_CASE("hypercube_atom examples") {
  const auto a = hypercube_atom(2, 2);
  CHECK(a.sequence == seq("(2,2) * (-1,2)^2 * (0,-1)^6"));
  CHECK(a.sequence.length() == 9);
  CHECK(a.certificate == Certificate::kMachineChecked);
  CHECK(hypercube_atom(1, 2).sequence == seq("(1,1) * (-1,1) * (0,-1)^2"));
  CHECK(hypercube_atom(3, 1).sequence == seq("3^2 * -2^3"));
  CHECK_THROWS_AS(hypercube_atom(0, 2), InvalidArgument);
}

TEST_CASE("hypercube_atom: length, minimality, containment, profile") {
  for (i64 m = 1; m <= 4; ++m) {
    for (i64 d = 1; d <= (m == 1 ? 6 : 3); ++d) {
      CAPTURE(m);
      CAPTURE(d);
      const auto a = hypercube_atom(m, d);
      CHECK(a.sequence.length() == cube_length(m, d));
      CHECK(a.sequence.length() == hypercube_lower(m, d));
      CHECK(a.sequence.sum().is_zero());
      check_inside_cube(a.sequence, m);
      const auto p = profile(a.sequence);
      CHECK(p.supports.size() == static_cast<std::size_t>(d + 1));
      CHECK(p.gcd == 1);
      if (a.sequence.length() <= kDefaultCheckLimit) {
        CHECK(a.certificate == Certificate::kMachineChecked);
        CHECK(oracle::is_atom(a.sequence));
      } else {
        CHECK(a.certificate == Certificate::kConstructionProof);
      }
    }
  }
}

TEST_CASE("profile") {
  const auto p = profile(seq("3^2 * -2^3"));
  CHECK(p.mults == std::vector<i64>{3, 2});
  CHECK(p.gcd == 1);
  const auto q = profile(hypercube_atom(2, 2).sequence);
  CHECK(q.supports.size() == 3);
  auto mults = q.mults;
  std::sort(mults.begin(), mults.end());
  CHECK(mults == std::vector<i64>{1, 2, 6});
  CHECK(q.gcd == 1);
  CHECK(profile(seq("1 * -1")).mults == std::vector<i64>{1, 1});
}

TEST_CASE("bezout_fold") {
  for (const auto& alpha : std::vector<std::vector<i64>>{{3, 2}, {1, 2, 6}, {6, 10, 15}, {4, 9}, {12, 20, 30, 7}}) {
    const auto w = bezout_fold(alpha);
    REQUIRE(w.size() == alpha.size());
    i64 total = 0;
    for (std::size_t i = 0; i < w.size(); ++i) total += w[i] * alpha[i];
    i64 g = 0;
    for (i64 a : alpha) g = std::gcd(g, a);
    CHECK(total == g);
  }
  CHECK_THROWS_AS(bezout_fold({}), InvalidArgument);
}

TEST_CASE("group_box_atom examples") {
  const GroupSpec c2 = GroupSpec::cyclic(2);
  const auto a = group_box_atom(2, 1, 1);
  CHECK(a.sequence == parse_sequence("(1|1)^2 * (0|-1)^2", c2));
  CHECK(a.certificate == Certificate::kMachineChecked);
  const auto b = group_box_atom(2, 2, 1);
  CHECK(b.sequence.length() == 6);
  CHECK(oracle::is_atom(b.sequence));
  const auto c = group_box_atom(3, 2, 2);
  CHECK(c.sequence.length() == 27);
  CHECK(c.certificate == Certificate::kMachineChecked);
  CHECK(oracle::is_atom(c.sequence));
  CHECK(group_box_atom(1, 2, 1).sequence == hypercube_atom(2, 1).sequence);
}

TEST_CASE("group_box_atom: length n (2m - 1 + delta)^d, minimal, inside G x box") {
  for (i64 n = 1; n <= 4; ++n) {
    for (i64 m = 1; m <= 3; ++m) {
      for (i64 d = 1; d <= 2; ++d) {
        CAPTURE(n);
        CAPTURE(m);
        CAPTURE(d);
        const auto a = group_box_atom(n, m, d);
        CHECK(a.sequence.length() == n * cube_length(m, d));
        CHECK(a.sequence.sum().is_zero());
        check_inside_cube(a.sequence, m);
        if (a.certificate == Certificate::kMachineChecked) CHECK(oracle::is_atom(a.sequence));
      }
    }
  }
}

TEST_CASE("power_subsequence_check") {
  const auto r = power_subsequence_check(2, 1, 2);
  CHECK(r.matches);
  CHECK(r.found == std::vector<Sequence>{seq("2^2 * -1^4"), seq("2 * -1^2")});
  CHECK(r.scanned == 3 * 5 - 1);
  CHECK(power_subsequence_check(2, 2, 1).found.size() == 1);
  const std::vector<std::array<i64, 3>> cases{{2, 1, 1}, {2, 1, 2}, {2, 1, 3}, {3, 1, 1}, {3, 1, 2}, {2, 2, 1}, {2, 2, 2}};
  for (const auto& [m, d, u] : cases) {
    CAPTURE(m);
    CAPTURE(d);
    CAPTURE(u);
    const auto p = power_subsequence_check(m, d, u);
    CHECK(p.matches);
    CHECK(p.found.size() == static_cast<std::size_t>(u));
  }
  CHECK_THROWS_AS(power_subsequence_check(3, 3, 3, 1000), CapExceeded);
}

TEST_CASE("constructions meet the closed-form lower bounds and search agrees where feasible") {
  CHECK(davenport(make_cube(-1, 1, 2)).lower == hypercube_atom(1, 2).sequence.length());
  for (const auto& [n, m] : std::vector<std::pair<i64, i64>>{{2, 1}, {2, 2}, {3, 1}}) {
    const auto r = davenport(make_product(GroupSpec::cyclic(n), make_interval(-m, m)));
    REQUIRE(r.exact);
    CHECK(r.lower == group_box_atom(n, m, 1).sequence.length());
  }
}

TEST_CASE("atoms found by search beyond the construction length") {
  // Bounded searches over [-2,2]^2 and [-1,1]^3 met these atoms; both are
  // longer than the hypercube constructions (9 and 8).
  const Sequence square = seq("(-2,-2)^5 * (-1,2)^2 * (2,1)^6");
  CHECK(square.length() == 13);
  CHECK(oracle::is_atom(square));
  check_inside_cube(square, 2);
  const Sequence cube = seq("(-1,-1,-1)^3 * (-1,0,1)^2 * (1,-1,1) * (1,1,0)^4");
  CHECK(cube.length() == 10);
  CHECK(oracle::is_atom(cube));
  check_inside_cube(cube, 1);
  CHECK(best_bounds(make_cube(-2, 2, 2)).upper >= 13);
  CHECK(best_bounds(make_cube(-1, 1, 3)).upper >= 10);
}
