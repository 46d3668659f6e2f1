// Acceptance suite: one PASS/FAIL line per criterion, each timed against its
// budget. Expected values come from closed formulas written out here and from
// the brute-force oracle, never from the library under test.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>

#include "davkit/bounds.hpp"
#include "davkit/constructions.hpp"
#include "davkit/reorder.hpp"
#include "davkit/search.hpp"
#include "davkit/zerosum.hpp"
#include "oracle.hpp"

using namespace davkit;

namespace {

// Collects failures for one criterion.
struct Verdict {
  std::ostringstream why;
  int failures = 0;
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (failures < 5) why << (failures ? "; " : "") << what;
    ++failures;
  }
};

i64 delta(i64 m) { return m == 1 ? 1 : 0; }

i64 ipow(i64 b, i64 e) {
  i64 r = 1;
  while (e-- > 0) r *= b;
  return r;
}

Sequence values(std::initializer_list<std::pair<i64, i64>> counts) { return Sequence::from_value_counts(counts); }

std::vector<Sequence> sorted(std::vector<Sequence> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<oracle::Atom1> as_atoms1(const std::vector<Sequence>& v) {
  std::vector<oracle::Atom1> out;
  for (const auto& s : v) out.push_back(oracle::as_atom1(s));
  std::sort(out.begin(), out.end());
  return out;
}

void criterion1(Verdict& v) {
  for (i64 total = 2; total <= 12; ++total) {
    for (i64 m = 1; m < total; ++m) {
      const i64 M = total - m;
      const std::string where = "[-" + std::to_string(m) + "," + std::to_string(M) + "]";
      const auto r = davenport(make_interval(-m, M));
      v.expect(r.exact && r.complete, where + " not exact");
      v.expect(r.witness && oracle::is_atom(*r.witness) && r.witness->length() == r.lower,
               where + " witness is not an atom of length D");
      if (std::gcd(m, M) == 1) v.expect(r.lower == m + M, where + " != m + M");
      if (m == M) v.expect(r.lower == (m == 1 ? 2 : 2 * m - 1), where + " != 2m - 1");
    }
  }
}

void criterion2(Verdict& v) {
  const auto r = davenport(make_cube(-1, 1, 2));
  v.expect(r.exact && r.lower == 4, "D([-1,1]^2) = " + std::to_string(r.lower));
  v.expect(r.witness && r.witness->length() == 4 && oracle::is_atom(*r.witness), "bad witness");
}

void criterion3(Verdict& v) {
  for (i64 m = 2; m <= 5; ++m) {
    const Sequence pos = values({{m, m - 1}, {-(m - 1), m}});
    const auto found = atoms_of_length(make_interval(-m, m), 2 * m - 1);
    v.expect(found == sorted({pos, pos.negated()}), "length 2m-1 atoms differ at m = " + std::to_string(m));
  }
  for (i64 m = 3; m <= 5; ++m) {
    std::vector<Sequence> expected;
    const Sequence mixed = values({{m, m - 2}, {-(m - 1), m - 1}, {1, 1}});
    expected.push_back(mixed);
    expected.push_back(mixed.negated());
    if (m % 2 == 1) {
      const Sequence odd = values({{m, m - 2}, {-(m - 2), m}});
      expected.push_back(odd);
      expected.push_back(odd.negated());
    }
    const auto found = atoms_of_length(make_interval(-m, m), 2 * m - 2);
    v.expect(found.size() == (m % 2 == 1 ? 4u : 2u), "wrong count at m = " + std::to_string(m));
    v.expect(found == sorted(expected), "length 2m-2 atoms differ at m = " + std::to_string(m));
  }
}

void criterion4(Verdict& v) {
  std::vector<std::pair<i64, i64>> cubes;
  for (i64 d = 1; d <= 6; ++d) cubes.emplace_back(1, d);
  for (i64 d = 1; d <= 3; ++d) cubes.emplace_back(2, d);
  for (i64 d = 1; d <= 2; ++d) cubes.emplace_back(3, d);
  for (const auto& [m, d] : cubes) {
    const auto c = hypercube_atom(m, d);
    const std::string where = "hypercube(" + std::to_string(m) + "," + std::to_string(d) + ")";
    v.expect(c.certificate == Certificate::kMachineChecked, where + " not machine checked");
    v.expect(c.sequence.length() == ipow(2 * m - 1 + delta(m), d), where + " wrong length");
    v.expect(oracle::is_atom(c.sequence), where + " not an atom");
  }
  const std::vector<std::array<i64, 3>> boxes{{2, 1, 1}, {2, 2, 1}, {3, 1, 1}, {3, 2, 1}, {2, 2, 2}};
  for (const auto& [n, m, d] : boxes) {
    const auto c = group_box_atom(n, m, d);
    const std::string where =
        "group_box(" + std::to_string(n) + "," + std::to_string(m) + "," + std::to_string(d) + ")";
    v.expect(c.certificate == Certificate::kMachineChecked, where + " not machine checked");
    v.expect(c.sequence.length() == n * ipow(2 * m - 1 + delta(m), d), where + " wrong length");
    v.expect(oracle::is_atom(c.sequence), where + " not an atom");
  }
}

void criterion5(Verdict& v) {
  for (const auto& [n, m] : std::vector<std::pair<i64, i64>>{{2, 1}, {2, 2}, {3, 1}, {3, 2}}) {
    const auto r = davenport(make_product(GroupSpec::cyclic(n), make_interval(-m, m)));
    const std::string where = "C" + std::to_string(n) + "x[-" + std::to_string(m) + "," + std::to_string(m) + "]";
    v.expect(r.exact && r.complete, where + " not exact");
    v.expect(r.lower == n * (2 * m - 1 + delta(m)), where + " = " + std::to_string(r.lower));
    v.expect(r.witness && oracle::is_atom(*r.witness), where + " witness not an atom");
  }
}

// Both families of explicit sets: the literal one and the wider one with
// elements up to 5 in absolute value (385 sets).
std::vector<std::vector<i64>> oracle_family() {
  auto family = oracle::subsets(oracle::nonzero_range(3), 4);
  for (auto& xs : oracle::subsets(oracle::nonzero_range(5), 4)) {
    if (std::abs(xs.front()) > 3 || std::abs(xs.back()) > 3) family.push_back(std::move(xs));
  }
  return family;
}

void criterion6(Verdict& v) {
  const auto family = oracle_family();
  v.expect(family.size() == 385, "family has " + std::to_string(family.size()) + " sets");
  for (const auto& xs : family) {
    const GroundSet g = make_explicit_values(xs);
    const auto r = davenport(g);
    v.expect(r.exact, emit(g) + " not exact");
    v.expect(r.lower == oracle::davenport_1d(xs), emit(g) + " value differs from the oracle");
    v.expect(as_atoms1(max_atoms(g)) == oracle::max_atoms_1d(xs), emit(g) + " max atoms differ from the oracle");
  }
}

void criterion7(Verdict& v) {
  for (i64 total = 2; total <= 10; ++total) {
    for (i64 m = 1; m < total; ++m) {
      const i64 M = total - m;
      const Interval x = make_interval(-m, M);
      const i64 top = davenport(x).lower;
      for (i64 len = 2; len <= top; ++len) {
        for (const auto& s : atoms_of_length(x, len)) {
          const auto flat = s.flatten_lattice();
          for (std::size_t i = 0; i < flat.size(); ++i) {
            if (i > 0 && flat[i] == flat[i - 1]) continue;
            const std::string where = to_string(s) + " seed " + std::to_string(i);
            try {
              const Ordering o = nyctalopic_extend(s, {i});
              v.expect(is_nyctalopic(s, o, o.perm.size()), where + " not nyctalopic");
              v.expect(prefix_sums_distinct(o), where + " repeated prefix sum");
              containment_check(s, o, x);
              v.expect(refine_exclusion_holds(s, o), where + " refine exclusion");
            } catch (const Error& e) {
              v.expect(false, where + ": " + e.what());
            }
          }
        }
      }
    }
  }
}

void criterion8(Verdict& v) {
  for (const auto& xs : oracle_family()) {
    const GroundSet g = make_explicit_values(xs);
    const i64 d = davenport(g).lower;
    if (xs.front() < 0 && xs.back() > 0) {
      v.expect(oracle::chi_pairs(xs) <= d && d <= xs.back() - xs.front(), emit(g) + " outside [chi, diam]");
    } else {
      v.expect(d == 0, emit(g) + " one-signed but D != 0");
      auto with_zero = xs;
      with_zero.push_back(0);
      std::sort(with_zero.begin(), with_zero.end());
      v.expect(davenport(make_explicit_values(with_zero)).lower == 1, emit(g) + " with 0 adjoined but D != 1");
    }
  }
}

void criterion9(Verdict& v) {
  for (const auto& [m, d] : std::vector<std::pair<i64, i64>>{{2, 2}, {3, 2}, {2, 3}}) {
    const std::string where = "[-" + std::to_string(m) + "," + std::to_string(m) + "]^" + std::to_string(d);
    const Box box = make_cube(-m, m, static_cast<std::size_t>(d));
    const BoundReport b = best_bounds(box);
    v.expect(b.lower <= b.upper, where + " bounds inverted");
    v.expect(b.lower == ipow(2 * m - 1, d), where + " lower bound is not (2m-1)^d");
    SearchOptions budget;
    budget.time_limit_seconds = 5;
    const auto r = davenport(box, budget);
    v.expect(r.lower <= r.upper && r.upper <= b.upper, where + " search bracket inverted");
    v.expect(!r.witness || oracle::is_atom(*r.witness), where + " search witness not an atom");
    const auto c = hypercube_atom(m, d);
    v.expect(c.sequence.length() == b.lower, where + " construction length");
    v.expect(oracle::is_atom(c.sequence), where + " construction not an atom");
  }
  const std::vector<std::array<i64, 3>> powers{{2, 1, 1}, {2, 1, 2}, {2, 1, 3}, {3, 1, 1},
                                               {3, 1, 2}, {2, 2, 1}, {2, 2, 2}};
  for (const auto& [m, d, u] : powers) {
    const auto p = power_subsequence_check(m, d, u);
    v.expect(p.matches, "power structure fails at (" + std::to_string(m) + "," + std::to_string(d) + "," +
                            std::to_string(u) + ")");
  }
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* what;
    double limit_seconds;
    std::function<void(Verdict&)> body;
  };
  const std::vector<Criterion> criteria{
      {1, "interval exactness, m + M <= 12", 30, criterion1},
      {2, "unit square D([-1,1]^2) = 4", 10, criterion2},
      {3, "inverse enumeration, m = 2..5", 60, criterion3},
      {4, "construction certification", 120, criterion4},
      {5, "D(C_n x [-m,m]) = n(2m - 1 + delta_m)", 300, criterion5},
      {6, "search equals the brute-force oracle on explicit sets", 60, criterion6},
      {7, "reordering properties, m + M <= 10", 60, criterion7},
      // Shares its budget with criterion 6.
      {8, "chi <= D <= diam, one-signed sets", 60, criterion8},
      {9, "open hypercubes: brackets, constructions, power structure", 60, criterion9},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Verdict v;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(v);
    } catch (const std::exception& e) {
      v.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_seconds) v.expect(false, "over the time budget");
    const bool ok = v.failures == 0;
    failed += ok ? 0 : 1;
    std::printf("%s criterion %d: %s (%.2f s, budget %.0f s)%s%s\n", ok ? "PASS" : "FAIL", c.id, c.what, secs,
                c.limit_seconds, ok ? "" : " -- ", v.why.str().c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
