#include <doctest.h>

#include <numeric>

#include "davkit/inverse.hpp"
#include "davkit/zerosum.hpp"
#include "oracle.hpp"

using namespace davkit;

namespace {

Sequence seq(const std::string& text) { return parse_sequence(text); }

// Every multiset of the given length over [-m, M], as library sequences.
std::vector<Sequence> all_sequences(i64 m, i64 M, i64 length) {
  std::vector<Sequence> out;
  std::vector<i64> take(static_cast<std::size_t>(m + M + 1), 0);
  auto rec = [&](auto&& self, std::size_t j, i64 left) -> void {
    if (j == take.size()) {
      if (left != 0) return;
      std::vector<Sequence::Entry> raw;
      for (std::size_t i = 0; i < take.size(); ++i) {
        if (take[i] > 0) raw.emplace_back(Element::scalar(-m + static_cast<i64>(i)), take[i]);
      }
      out.push_back(Sequence::from_counts(GroupSpec{}, 1, raw));
      return;
    }
    for (i64 k = 0; k <= left; ++k) {
      take[j] = k;
      self(self, j + 1, left - k);
    }
    take[j] = 0;
  };
  rec(rec, 0, length);
  return out;
}

}  // namespace

TEST_CASE("case tags") {
  CHECK(std::string(case_tag(InverseCase::kIntervalMax)) == "THM2");
  CHECK(std::string(case_tag(InverseCase::kNone)) == "NONE");
  CHECK(mirror(InverseCase::kSubmaxOddPos) == InverseCase::kSubmaxOddNeg);
  CHECK(mirror(InverseCase::kIntervalMax) == InverseCase::kIntervalMax);
}

TEST_CASE("classify_interval_max examples") {
  const auto a = classify_interval_max(2, 3, seq("3^2 * -2^3"));
  CHECK(a.matches);
  CHECK(std::string(case_tag(a.which)) == "THM2");
  const Sequence b = seq("3 * 2 * -1 * -2^2");
  const auto vb = classify_interval_max(2, 3, b);
  CHECK_FALSE(vb.matches);
  CHECK(vb.which == InverseCase::kNone);
  CHECK_FALSE(is_minimal(b));
  for (const auto& s : all_sequences(2, 4, 6)) CHECK_FALSE(classify_interval_max(2, 4, s).matches);
  CHECK_THROWS_AS(classify_interval_max(2, 3, seq("3 * -3")), InvalidArgument);
  CHECK_THROWS_AS(classify_interval_max(2, 3, seq("1 * -1")), InvalidArgument);
}

TEST_CASE("classify_symmetric_max examples") {
  CHECK(std::string(case_tag(classify_symmetric_max(3, seq("3^2 * -2^3")).which)) == "COR3_POS");
  CHECK(std::string(case_tag(classify_symmetric_max(3, seq("-3^2 * 2^3")).which)) == "COR3_NEG");
  const Sequence n = seq("3 * 2 * -2 * -1 * -2");
  CHECK_FALSE(classify_symmetric_max(3, n).matches);
  CHECK_FALSE(is_minimal(n));
}

TEST_CASE("classify_symmetric_submax examples") {
  CHECK(std::string(case_tag(classify_symmetric_submax(3, seq("3 * -1^3")).which)) == "T2M2_I_POS");
  CHECK(std::string(case_tag(classify_symmetric_submax(4, seq("4^2 * -3^3 * 1")).which)) == "T2M2_II_POS");
  // The odd-m family is empty for m = 4.
  CHECK_FALSE(classify_symmetric_submax(4, seq("4^2 * -2^4")).matches);
  CHECK(symmetric_submax_templates(3).size() == 4);
  CHECK(symmetric_submax_templates(4).size() == 2);
  CHECK(symmetric_submax_templates(5).size() == 4);
}

TEST_CASE("soundness both ways and mirror coherence, exhaustive over all sequences") {
  auto check_family = [](i64 m, i64 M, i64 length, auto classify) {
    i64 atoms = 0;
    for (const auto& s : all_sequences(m, M, length)) {
      CAPTURE(to_string(s));
      const InverseVerdict v = classify(s);
      const bool atom = oracle::is_atom(s);
      CHECK(v.matches == (v.which != InverseCase::kNone));
      CHECK(v.matches == atom);
      CHECK(v.matches == is_minimal(s));
      atoms += atom;
      if (m == M) {
        const InverseVerdict w = classify(s.negated());
        CHECK(w.which == mirror(v.which));
      }
    }
    return atoms;
  };
  for (i64 m = 2; m <= 5; ++m) {
    CAPTURE(m);
    CHECK(check_family(m, m, 2 * m - 1, [m](const Sequence& s) { return classify_symmetric_max(m, s); }) == 2);
  }
  for (i64 m = 3; m <= 5; ++m) {
    CAPTURE(m);
    const i64 expected = m % 2 == 1 ? 4 : 2;
    CHECK(check_family(m, m, 2 * m - 2, [m](const Sequence& s) { return classify_symmetric_submax(m, s); }) ==
          expected);
  }
  for (i64 m = 1; m <= 4; ++m) {
    for (i64 M = 1; M <= 4; ++M) {
      CAPTURE(m);
      CAPTURE(M);
      const i64 expected = std::gcd(m, M) == 1 ? 1 : 0;
      CHECK(check_family(m, M, m + M, [m, M](const Sequence& s) { return classify_interval_max(m, M, s); }) ==
            expected);
    }
  }
}

TEST_CASE("verify_inverse") {
  const auto r = verify_inverse({3, 4});
  CHECK(r.ok);
  // m = 3: lengths 5 and 4; m = 4: lengths 7 and 6; coprime pairs (3,4), (4,3).
  REQUIRE(r.checks.size() == 6);
  CHECK(r.checks[0].ground == "[-3,3]");
  CHECK(r.checks[0].found.size() == 2);
  CHECK(r.checks[1].found.size() == 4);
  CHECK(r.checks[2].found.size() == 2);
  CHECK(r.checks[3].found.size() == 2);
  CHECK(r.checks[4].ground == "[-3,4]");
  CHECK(r.checks[4].found == std::vector<Sequence>{seq("4^3 * -3^4")});
  for (const auto& c : r.checks) CHECK(c.found == c.expected);
  CHECK_THROWS_AS(verify_inverse({0}), InvalidArgument);
}
