#include <doctest.h>

#include <numeric>
#include <random>

#include "davkit/core/ground_set.hpp"
#include "davkit/zerosum.hpp"
#include "oracle.hpp"

using namespace davkit;

namespace {

Sequence seq(const std::string& text) { return parse_sequence(text); }

}  // namespace

TEST_CASE("is_zero_sum") {
  CHECK(is_zero_sum(seq("2 * -1^2")));
  CHECK(is_zero_sum(seq("(1,1) * (-1,1) * (0,-1)^2")));
  CHECK_FALSE(is_zero_sum(seq("3 * -1")));
  CHECK_THROWS_AS(is_zero_sum(Sequence{}), InvalidArgument);
}

TEST_CASE("find_proper_zero_subsum examples") {
  CHECK_FALSE(find_proper_zero_subsum(seq("3^2 * -2^3")));
  const auto pair = find_proper_zero_subsum(seq("2^2 * -2 * 1 * -1"));
  REQUIRE(pair);
  CHECK(pair->sub.sum().is_zero());
  const auto w = find_proper_zero_subsum(seq("4^2 * -2^4"));
  REQUIRE(w);
  CHECK(w->sub == seq("4 * -2^2"));
}

TEST_CASE("witnesses are nonempty proper zero-sum parts") {
  for (const std::string text : {"2^2 * -2 * 1 * -1", "4^2 * -2^4", "1^4 * -2^2", "0 * 3 * -3", "(1,0)^2 * (-1,0)^2"}) {
    CAPTURE(text);
    const Sequence s = seq(text);
    const auto w = find_proper_zero_subsum(s);
    REQUIRE(w);
    CHECK(w->sub.length() >= 1);
    CHECK(w->sub.length() < s.length());
    CHECK(w->sub.divides(s));
    CHECK(w->sub.sum().is_zero());
  }
}

TEST_CASE("is_minimal examples") {
  CHECK(is_minimal(seq("(1,-1) * (1,1) * (-1,0)^2")));
  CHECK(is_minimal(seq("0")));
  CHECK_FALSE(is_minimal(seq("0 * 3 * -3")));
  CHECK_FALSE(is_minimal(seq("1^4 * -2^2")));
  CHECK(find_proper_zero_subsum(seq("1^4 * -2^2"))->sub == seq("1^2 * -2"));
  CHECK_FALSE(is_minimal(seq("3 * -1")));
}

TEST_CASE("mixed elements fold the group into the check") {
  const GroupSpec c2 = GroupSpec::cyclic(2);
  CHECK(is_minimal(parse_sequence("(1|1)^2 * (0|-1)^2", c2)));
  CHECK(is_minimal(parse_sequence("(0|1) * (0|-1)", c2)));
  CHECK_FALSE(is_minimal(parse_sequence("(0|1)^2 * (0|-1)^2", c2)));
  CHECK(is_minimal(parse_sequence("(1|0)^2", c2)));
  CHECK_FALSE(is_minimal(parse_sequence("(1|0)^4", c2)));
}

TEST_CASE("atoms_brute examples") {
  const auto unit = enumerate_lattice(make_interval(-1, 1));
  CHECK(atoms_brute(unit, 3) == std::vector<Sequence>{seq("-1 * 1"), seq("0")});
  const std::vector<Element> pair{Element::scalar(-2), Element::scalar(3)};
  CHECK(atoms_brute(pair, 5) == std::vector<Sequence>{seq("3^2 * -2^3")});
  const std::vector<Element> one{Element::scalar(1)};
  CHECK(atoms_brute(one, 6).empty());
}

TEST_CASE("DP, naive scan and oracle agree on random multisets") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<i64> value(-4, 4);
  std::uniform_int_distribution<int> size(1, 12);
  int with_zero_part = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<Element> raw;
    const int n = size(rng);
    for (int i = 0; i < n; ++i) raw.push_back(Element::scalar(value(rng)));
    const Sequence s = Sequence::from_elements(raw);
    CAPTURE(to_string(s));
    const auto dp = find_proper_zero_subsum(s);
    const auto naive = find_proper_zero_subsum_naive(s);
    auto [counts, mods] = oracle::from_sequence(s);
    const bool expected = oracle::has_proper_zero_part(counts, mods);
    CHECK(dp.has_value() == expected);
    CHECK(naive.has_value() == expected);
    if (dp) {
      CHECK(dp->sub.sum().is_zero());
      CHECK(dp->sub.divides(s));
      CHECK(dp->sub.length() < s.length());
      ++with_zero_part;
    }
    CHECK(is_minimal(s) == oracle::is_atom(s));
  }
  // The sample must exercise both outcomes.
  CHECK(with_zero_part > 100);
  CHECK(with_zero_part < 1000);
}

TEST_CASE("negation, length-1 and length-2 laws on every atom up to length 6 over [-4,4]") {
  const auto alphabet = enumerate_lattice(make_interval(-4, 4));
  const auto atoms = atoms_brute(alphabet, 6);
  CHECK(atoms.size() > 20);
  for (const auto& a : atoms) {
    CAPTURE(to_string(a));
    CHECK(is_minimal(a));
    CHECK(is_minimal(a.negated()));
    CHECK(oracle::is_atom(a));
    const bool has_zero = a.contains(Element::scalar(0));
    CHECK(has_zero == (a.length() == 1));
    bool has_pair = false;
    for (const auto& [e, k] : a.entries()) {
      if (!e.lattice.is_zero() && a.contains(-e.lattice)) has_pair = true;
    }
    CHECK(has_pair == (a.length() == 2));
  }
}

TEST_CASE("two-element law for |x|, |y| <= 6") {
  for (i64 x = -6; x <= -1; ++x) {
    for (i64 y = 1; y <= 6; ++y) {
      CAPTURE(x);
      CAPTURE(y);
      const i64 g = std::gcd(x, y);
      const Sequence atom = Sequence::from_value_counts({{x, y / g}, {y, -x / g}});
      const std::vector<Element> pair{Element::scalar(x), Element::scalar(y)};
      const i64 max_len = 3 * atom.length();
      CHECK(atoms_brute(pair, max_len) == std::vector<Sequence>{atom});
      // Every zero-sum sequence over {x, y} is a power of the atom.
      for (i64 a = 1; a <= max_len; ++a) {
        for (i64 b = 1; a + b <= max_len; ++b) {
          const Sequence s = Sequence::from_value_counts({{x, a}, {y, b}});
          if (!s.sum().is_zero()) continue;
          CHECK(a % (y / g) == 0);
          CHECK(s == atom.power(a / (y / g)));
        }
      }
    }
  }
}

TEST_CASE("multiset_count") {
  CHECK(multiset_count(3, 2) == 3 + 6);
  CHECK(multiset_count(1, 5) == 5);
  CHECK(multiset_count(1000, 1000) == std::numeric_limits<i64>::max());
}

TEST_CASE("guards") {
  CHECK_THROWS_AS(find_proper_zero_subsum_naive(seq("1^30 * -1^30 * 2^30 * -2^30 * 3^30"), 1000), CapExceeded);
  CHECK_THROWS_AS(find_proper_zero_subsum(seq("1^3000 * -7^1000 * 1000^999 * -999^1000 * 5^3000"), 1000), CapExceeded);
}
