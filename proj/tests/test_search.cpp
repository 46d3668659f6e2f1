#include <doctest.h>

#include <map>

#include "davkit/bounds.hpp"
#include "davkit/search.hpp"
#include "davkit/zerosum.hpp"
#include "oracle.hpp"

using namespace davkit;

namespace {

Sequence seq(const std::string& text) { return parse_sequence(text); }

GroundSet values(const std::vector<i64>& xs) { return make_explicit_values(xs); }

std::vector<oracle::Atom1> as_atoms1(const std::vector<Sequence>& v) {
  std::vector<oracle::Atom1> out;
  for (const auto& s : v) out.push_back(oracle::as_atom1(s));
  std::sort(out.begin(), out.end());
  return out;
}

void check_result(const DavenportResult& r) {
  CHECK(r.lower >= 0);
  CHECK(r.lower <= r.upper);
  CHECK(r.exact == (r.lower == r.upper));
  CHECK(!r.provenance.empty());
  CHECK(r.witness.has_value() == (r.lower >= 1));
  if (r.witness) {
    CHECK(r.witness->length() == r.lower);
    CHECK(is_minimal(*r.witness));
    CHECK(oracle::is_atom(*r.witness));
  }
}

}  // namespace

TEST_CASE("length_bound") {
  CHECK(length_bound(make_interval(-2, 4)) == 6);
  CHECK(length_bound(make_cube(-1, 1, 2)) == 16);
  CHECK(length_bound(make_product(GroupSpec::cyclic(2), make_interval(-1, 1))) == 4);
  CHECK(length_bound(values({1, 2})) == 0);
  CHECK(length_bound(values({0, 1, 2})) == 1);
  CHECK(length_bound(make_interval(0, 0)) == 1);
}

TEST_CASE("davenport on spec examples") {
  const auto a = davenport(make_interval(-2, 3));
  check_result(a);
  CHECK(a.exact);
  CHECK(a.lower == 5);
  CHECK(*a.witness == seq("3^2 * -2^3"));

  const auto b = davenport(make_interval(-2, 4));
  check_result(b);
  CHECK(b.exact);
  CHECK(b.lower == 5);

  const auto c = davenport(make_cube(-1, 1, 2));
  check_result(c);
  CHECK(c.exact);
  CHECK(c.lower == 4);
  CHECK(c.complete);
  CHECK(c.provenance == std::vector<std::string>{"search.exhaustive"});
}

TEST_CASE("davenport of sets without atoms and with only zero") {
  const auto none = davenport(values({1, 2, 5}));
  CHECK(none.exact);
  CHECK(none.lower == 0);
  CHECK_FALSE(none.witness);
  const auto zero = davenport(values({0, 3}));
  CHECK(zero.exact);
  CHECK(zero.lower == 1);
  CHECK(*zero.witness == seq("0"));
}

TEST_CASE("atoms_of_length examples") {
  CHECK(atoms_of_length(make_interval(-2, 2), 3) == std::vector<Sequence>{seq("-2 * 1^2"), seq("-1^2 * 2")});
  CHECK(atoms_of_length(make_interval(-1, 1), 2) == std::vector<Sequence>{seq("1 * -1")});
  const auto four = atoms_of_length(make_interval(-3, 3), 4);
  std::vector<Sequence> expected{seq("3 * -1^3"), seq("-3 * 1^3"), seq("3 * -2^2 * 1"), seq("-3 * 2^2 * -1")};
  std::sort(expected.begin(), expected.end());
  CHECK(four == expected);
  CHECK(atoms_of_length(make_interval(-2, 3), 6).empty());
  CHECK_THROWS_AS(atoms_of_length(make_interval(-2, 3), 0), InvalidArgument);
}

TEST_CASE("max_atoms examples") {
  CHECK(max_atoms(make_interval(-1, 1)) == std::vector<Sequence>{seq("1 * -1")});
  std::vector<Sequence> sym{seq("3^2 * -2^3"), seq("-3^2 * 2^3")};
  std::sort(sym.begin(), sym.end());
  CHECK(max_atoms(make_interval(-3, 3)) == sym);
  // [-2,3]: compare with the brute-force oracle.
  CHECK(as_atoms1(max_atoms(make_interval(-2, 3))) == oracle::max_atoms_1d({-2, -1, 0, 1, 2, 3}));
  CHECK(max_atoms(values({1, 4})).empty());
}

TEST_CASE("search equals the oracle on explicit subsets of [-3,3] without 0, |X| <= 4") {
  const auto family = oracle::subsets(oracle::nonzero_range(3), 4);
  CHECK(family.size() == 56);
  std::map<std::vector<i64>, i64> value;
  for (const auto& xs : family) {
    CAPTURE(emit(values(xs)));
    const auto r = davenport(values(xs));
    check_result(r);
    REQUIRE(r.exact);
    CHECK(r.lower == oracle::davenport_1d(xs));
    CHECK(as_atoms1(max_atoms(values(xs))) == oracle::max_atoms_1d(xs));
    value[xs] = r.lower;

    const bool mixed = xs.front() < 0 && xs.back() > 0;
    if (mixed) {
      CHECK(chi(xs) == oracle::chi_pairs(xs));
      CHECK(chi(xs) <= r.lower);
      CHECK(r.lower <= diam(xs));
    } else {
      CHECK(r.lower == 0);
      auto with_zero = xs;
      with_zero.push_back(0);
      std::sort(with_zero.begin(), with_zero.end());
      CHECK(davenport(values(with_zero)).lower == 1);
    }
  }
  // Mirror symmetry and monotonicity over the family.
  for (const auto& [xs, v] : value) {
    std::vector<i64> neg;
    for (i64 x : xs) neg.push_back(-x);
    std::sort(neg.begin(), neg.end());
    CHECK(value.at(neg) == v);
    for (const auto& [ys, w] : value) {
      if (std::includes(ys.begin(), ys.end(), xs.begin(), xs.end())) CHECK(v <= w);
    }
  }
}

TEST_CASE("interval collapse: D([-m,m]) = D([-(m-1),m])") {
  for (i64 m = 2; m <= 5; ++m) {
    CAPTURE(m);
    const auto sym = davenport(make_interval(-m, m));
    const auto cut = davenport(make_interval(-(m - 1), m));
    REQUIRE(sym.exact);
    REQUIRE(cut.exact);
    CHECK(sym.lower == cut.lower);
    CHECK(sym.lower == 2 * m - 1);
  }
}

TEST_CASE("cyclic groups: search over C_n x {0} gives n") {
  for (i64 n = 2; n <= 8; ++n) {
    CAPTURE(n);
    const GroupSpec g = GroupSpec::cyclic(n);
    const auto r = davenport(make_product(g, make_explicit_values({0})));
    check_result(r);
    CHECK(r.exact);
    CHECK(r.lower == n);
    CHECK(group_davenport(g).exact);
    CHECK(group_davenport(g).lower == n);
  }
  CHECK(davenport(parse_ground_set("C2xC2")).lower == 3);
  CHECK(davenport(parse_ground_set("C2xC4")).lower == 5);
  CHECK(davenport(parse_ground_set("C3xC3")).lower == 5);
}

TEST_CASE("result and witness do not depend on the thread count") {
  for (const std::string text : {"[-3,4]", "[-1,1]^2", "C3x[-1,1]", "{-5,-2,3,4}"}) {
    CAPTURE(text);
    const GroundSet g = parse_ground_set(text);
    SearchOptions one;
    one.threads = 1;
    SearchOptions many;
    many.threads = 4;
    const auto a = davenport(g, one);
    const auto b = davenport(g, many);
    CHECK(a.lower == b.lower);
    CHECK(a.upper == b.upper);
    CHECK(a.witness == b.witness);
    CHECK(a.stats.nodes == b.stats.nodes);
    CHECK(atoms_of_length(g, a.lower, one) == atoms_of_length(g, a.lower, many));
  }
}

TEST_CASE("a depth cap gives a partial result") {
  SearchOptions o;
  o.cap = 3;
  const auto r = davenport(make_interval(-2, 3), o);
  check_result(r);
  CHECK_FALSE(r.complete);
  CHECK_FALSE(r.exact);
  CHECK(r.lower == 3);
  CHECK(r.upper == 5);
  CHECK(r.provenance.front() == "search.partial");
  o.cap = 100;
  const auto full = davenport(make_interval(-2, 3), o);
  CHECK(full.depth == 5);
  CHECK(full.exact);
  o.cap = -1;
  CHECK_THROWS_AS(davenport(make_interval(-2, 3), o), InvalidArgument);
}

TEST_CASE("budgets stop open cases with a valid bracket") {
  SearchOptions o;
  o.max_nodes = 20'000;
  const auto square = davenport(make_cube(-2, 2, 2), o);
  check_result(square);
  CHECK_FALSE(square.complete);
  CHECK(square.upper == 45);
  const auto cube = davenport(make_cube(-1, 1, 3), o);
  check_result(cube);
  CHECK_FALSE(cube.complete);
  CHECK(cube.upper == 125);
  SearchOptions t;
  t.time_limit_seconds = 0.2;
  const auto timed = davenport(make_cube(-2, 2, 2), t);
  check_result(timed);
  CHECK_FALSE(timed.complete);
  CHECK_THROWS_AS(atoms_of_length(make_cube(-2, 2, 2), 12, o), CapExceeded);
  CHECK_THROWS_AS(max_atoms(make_cube(-2, 2, 2), o), CapExceeded);
}

TEST_CASE("mixed ground sets") {
  const auto r = davenport(parse_ground_set("C2x[-1,1]"));
  check_result(r);
  CHECK(r.exact);
  CHECK(r.lower == 4);
  const auto s = davenport(parse_ground_set("C2x[-2,2]"));
  check_result(s);
  CHECK(s.lower == 6);
  for (const auto& a : atoms_of_length(parse_ground_set("C2x[-1,1]"), 4)) {
    CHECK(oracle::is_atom(a));
    CHECK(a.length() == 4);
  }
}
