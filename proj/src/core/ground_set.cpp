#include "davkit/core/ground_set.hpp"

#include <algorithm>
#include <sstream>

#include "cursor.hpp"

namespace davkit {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Interval make_interval(i64 lo, i64 hi) {
  if (lo > hi) {
    throw InvalidArgument("interval [" + std::to_string(lo) + "," + std::to_string(hi) + "] has lo > hi");
  }
  return {lo, hi};
}

Box make_box(std::vector<Interval> axes) {
  if (axes.empty()) throw InvalidArgument("box needs at least one axis");
  for (const auto& a : axes) make_interval(a.lo, a.hi);
  return Box{std::move(axes)};
}

Box make_cube(i64 lo, i64 hi, std::size_t dim) {
  return make_box(std::vector<Interval>(dim, make_interval(lo, hi)));
}

ExplicitSet make_explicit(std::vector<Element> elements) {
  if (elements.empty()) throw InvalidArgument("explicit set must be nonempty");
  const std::size_t d = elements.front().dim();
  for (const auto& e : elements) {
    if (e.dim() != d) throw InvalidArgument("explicit set mixes dimensions");
  }
  std::sort(elements.begin(), elements.end());
  auto dup = std::adjacent_find(elements.begin(), elements.end());
  if (dup != elements.end()) throw InvalidArgument("explicit set lists " + to_string(*dup) + " twice");
  return ExplicitSet{std::move(elements)};
}

ExplicitSet make_explicit_values(std::vector<i64> values) {
  std::vector<Element> elems;
  elems.reserve(values.size());
  for (i64 v : values) elems.push_back(Element::scalar(v));
  return make_explicit(std::move(elems));
}

GroupProduct make_product(GroupSpec group, LatticeSet base) {
  validate(as_ground(base));
  return GroupProduct{std::move(group), std::move(base)};
}

void validate(const GroundSet& g) {
  std::visit(overloaded{
                 [](const Interval& i) { make_interval(i.lo, i.hi); },
                 [](const Box& b) { make_box(b.axes); },
                 [](const ExplicitSet& e) {
                   auto copy = make_explicit(e.elements);
                   if (!(copy == e)) throw InvalidArgument("explicit set is not in canonical order");
                 },
                 [](const GroupProduct& p) {
                   GroupSpec check(p.group.factors());
                   validate(as_ground(p.base));
                 },
             },
             g);
}

std::size_t dim(const LatticeSet& x) {
  return std::visit(overloaded{
                        [](const Interval&) -> std::size_t { return 1; },
                        [](const Box& b) -> std::size_t { return b.axes.size(); },
                        [](const ExplicitSet& e) -> std::size_t { return e.elements.front().dim(); },
                    },
                    x);
}

std::size_t dim(const GroundSet& g) { return dim(lattice_part(g)); }

const GroupSpec& group_of(const GroundSet& g) {
  static const GroupSpec trivial{};
  if (auto p = std::get_if<GroupProduct>(&g)) return p->group;
  return trivial;
}

LatticeSet lattice_part(const GroundSet& g) {
  return std::visit(overloaded{
                        [](const Interval& i) -> LatticeSet { return i; },
                        [](const Box& b) -> LatticeSet { return b; },
                        [](const ExplicitSet& e) -> LatticeSet { return e; },
                        [](const GroupProduct& p) -> LatticeSet { return p.base; },
                    },
                    g);
}

GroundSet as_ground(const LatticeSet& x) {
  return std::visit([](const auto& v) -> GroundSet { return v; }, x);
}

bool contains(const LatticeSet& x, const Element& e) {
  if (e.dim() != dim(x)) return false;
  return std::visit(overloaded{
                        [&](const Interval& i) { return i.lo <= e[0] && e[0] <= i.hi; },
                        [&](const Box& b) {
                          for (std::size_t k = 0; k < b.axes.size(); ++k) {
                            if (e[k] < b.axes[k].lo || e[k] > b.axes[k].hi) return false;
                          }
                          return true;
                        },
                        [&](const ExplicitSet& s) {
                          return std::binary_search(s.elements.begin(), s.elements.end(), e);
                        },
                    },
                    x);
}

bool contains(const GroundSet& g, const MixedElement& e) {
  const GroupSpec& group = group_of(g);
  if (e.group_part.size() != group.rank()) return false;
  for (std::size_t i = 0; i < group.rank(); ++i) {
    if (e.group_part[i] < 0 || e.group_part[i] >= group.factors()[i]) return false;
  }
  return contains(lattice_part(g), e.lattice);
}

namespace {

i64 lattice_cardinality(const LatticeSet& x) {
  return std::visit(overloaded{
                        [](const Interval& i) { return checked_add(checked_sub(i.hi, i.lo), 1); },
                        [](const Box& b) {
                          i64 n = 1;
                          for (const auto& a : b.axes) n = checked_mul(n, checked_add(checked_sub(a.hi, a.lo), 1));
                          return n;
                        },
                        [](const ExplicitSet& s) { return static_cast<i64>(s.elements.size()); },
                    },
                    x);
}

void check_cap(i64 n, i64 cap) {
  if (n > cap) {
    throw CapExceeded("ground set has " + std::to_string(n) + " elements, above the enumeration cap of " +
                      std::to_string(cap));
  }
}

}  // namespace

i64 cardinality(const GroundSet& g) {
  return checked_mul(group_of(g).order(), lattice_cardinality(lattice_part(g)));
}

std::vector<Interval> bounding_box(const LatticeSet& x) {
  return std::visit(overloaded{
                        [](const Interval& i) { return std::vector<Interval>{i}; },
                        [](const Box& b) { return b.axes; },
                        [](const ExplicitSet& s) {
                          const std::size_t d = s.elements.front().dim();
                          std::vector<Interval> out(d, Interval{s.elements.front()[0], s.elements.front()[0]});
                          for (std::size_t k = 0; k < d; ++k) out[k] = {s.elements.front()[k], s.elements.front()[k]};
                          for (const auto& e : s.elements) {
                            for (std::size_t k = 0; k < d; ++k) {
                              out[k].lo = std::min(out[k].lo, e[k]);
                              out[k].hi = std::max(out[k].hi, e[k]);
                            }
                          }
                          return out;
                        },
                    },
                    x);
}

std::vector<i64> enclosing_half_widths(const LatticeSet& x) {
  std::vector<i64> m;
  for (const auto& a : bounding_box(x)) m.push_back(std::max(checked_abs(a.lo), checked_abs(a.hi)));
  return m;
}

std::optional<std::pair<i64, std::size_t>> as_hypercube(const LatticeSet& x) {
  if (std::holds_alternative<ExplicitSet>(x)) {
    auto box = bounding_box(x);
    if (lattice_cardinality(x) != lattice_cardinality(Box{box})) return std::nullopt;
    return as_hypercube(box.size() == 1 ? LatticeSet{box.front()} : LatticeSet{Box{box}});
  }
  auto axes = bounding_box(x);
  const i64 m = axes.front().hi;
  if (m < 1) return std::nullopt;
  for (const auto& a : axes) {
    if (a.lo != -m || a.hi != m) return std::nullopt;
  }
  return std::make_pair(m, axes.size());
}

std::optional<Interval> as_interval(const LatticeSet& x) {
  if (dim(x) != 1) return std::nullopt;
  auto box = bounding_box(x);
  if (lattice_cardinality(x) != box.front().hi - box.front().lo + 1) return std::nullopt;
  return box.front();
}

std::vector<Element> enumerate_lattice(const LatticeSet& x, i64 cap) {
  check_cap(lattice_cardinality(x), cap);
  if (auto s = std::get_if<ExplicitSet>(&x)) return s->elements;
  const auto axes = bounding_box(x);
  std::vector<Element> out;
  out.reserve(static_cast<std::size_t>(lattice_cardinality(x)));
  std::vector<i64> cur(axes.size());
  for (std::size_t k = 0; k < axes.size(); ++k) cur[k] = axes[k].lo;
  while (true) {
    out.emplace_back(cur);
    std::size_t k = axes.size();
    while (k > 0) {
      --k;
      if (cur[k] < axes[k].hi) {
        ++cur[k];
        break;
      }
      cur[k] = axes[k].lo;
      if (k == 0) return out;
    }
  }
}

std::vector<MixedElement> enumerate(const GroundSet& g, i64 cap) {
  const i64 total = cardinality(g);
  check_cap(total, cap);
  const GroupSpec& group = group_of(g);
  const auto lattice = enumerate_lattice(lattice_part(g), cap);
  std::vector<MixedElement> out;
  out.reserve(static_cast<std::size_t>(total));
  std::vector<i64> residues(group.rank(), 0);
  while (true) {
    for (const auto& x : lattice) out.emplace_back(residues, x);
    std::size_t k = group.rank();
    bool done = true;
    while (k > 0) {
      --k;
      if (residues[k] + 1 < group.factors()[k]) {
        ++residues[k];
        done = false;
        break;
      }
      residues[k] = 0;
    }
    if (done) return out;
  }
}

// ---------------------------------------------------------------------------
// Text grammar

namespace {

Interval parse_interval(detail::Cursor& cur) {
  const std::size_t at = cur.position();
  cur.expect('[');
  const i64 lo = cur.integer();
  cur.expect(',');
  const i64 hi = cur.integer();
  cur.expect(']');
  if (lo > hi) throw ParseError("interval has lo > hi", at);
  return {lo, hi};
}

Element parse_point(detail::Cursor& cur) {
  if (!cur.accept('(')) return Element::scalar(cur.integer());
  std::vector<i64> coords{cur.integer()};
  while (cur.accept(',')) coords.push_back(cur.integer());
  cur.expect(')');
  return Element(std::move(coords));
}

LatticeSet parse_lattice(detail::Cursor& cur) {
  if (cur.peek() == '{') {
    const std::size_t at = cur.position();
    cur.expect('{');
    std::vector<Element> elems{parse_point(cur)};
    while (cur.accept(',')) elems.push_back(parse_point(cur));
    cur.expect('}');
    try {
      return make_explicit(std::move(elems));
    } catch (const InvalidArgument& e) {
      throw ParseError(e.what(), at);
    }
  }
  if (cur.peek() != '[') cur.fail("expected '[' or '{'");
  std::vector<Interval> axes;
  bool powered = false;
  do {
    Interval i = parse_interval(cur);
    i64 k = 1;
    if (cur.accept('^')) {
      k = cur.integer();
      if (k < 1) cur.fail("box exponent must be >= 1");
      if (k > 64) cur.fail("box exponent above 64 is not supported");
      powered = true;
    }
    axes.insert(axes.end(), static_cast<std::size_t>(k), i);
  } while (cur.accept('x'));
  if (axes.size() == 1 && !powered) return axes.front();
  return Box{std::move(axes)};
}

}  // namespace

GroundSet parse_ground_set(const std::string& text) {
  detail::Cursor cur(text);
  std::vector<i64> factors;
  bool explicit_trivial = false;
  bool group_seen = false;
  while (cur.peek() == 'C') {
    group_seen = true;
    cur.expect('C');
    const std::size_t at = cur.position();
    const i64 n = cur.integer();
    if (n == 1 && factors.empty()) {
      explicit_trivial = true;
    } else if (n < 2) {
      throw ParseError("group factor must be >= 2", at);
    } else {
      if (explicit_trivial) throw ParseError("C1 cannot be combined with other factors", at);
      if (!factors.empty() && n % factors.back() != 0) {
        throw ParseError("group factors must divide each other (" + std::to_string(factors.back()) +
                             " does not divide " + std::to_string(n) + ")",
                         at);
      }
      factors.push_back(n);
    }
    if (!cur.accept('x')) break;
  }
  if (group_seen && cur.at_end()) {
    return GroupProduct{GroupSpec(factors), make_explicit_values({0})};
  }
  LatticeSet base = parse_lattice(cur);
  if (!cur.at_end()) cur.fail("unexpected trailing input");
  if (!group_seen) return as_ground(base);
  return GroupProduct{GroupSpec(factors), std::move(base)};
}

std::string emit(const LatticeSet& x) {
  auto interval = [](const Interval& i) { return "[" + std::to_string(i.lo) + "," + std::to_string(i.hi) + "]"; };
  return std::visit(overloaded{
                        [&](const Interval& i) { return interval(i); },
                        [&](const Box& b) {
                          const bool uniform = std::all_of(b.axes.begin(), b.axes.end(),
                                                           [&](const Interval& a) { return a == b.axes.front(); });
                          if (uniform) return interval(b.axes.front()) + "^" + std::to_string(b.axes.size());
                          std::string out;
                          for (std::size_t k = 0; k < b.axes.size(); ++k) out += (k ? "x" : "") + interval(b.axes[k]);
                          return out;
                        },
                        [&](const ExplicitSet& s) {
                          std::string out = "{";
                          for (std::size_t k = 0; k < s.elements.size(); ++k) {
                            out += (k ? "," : "") + to_string(s.elements[k]);
                          }
                          return out + "}";
                        },
                    },
                    x);
}

std::string emit(const GroundSet& g) {
  if (auto p = std::get_if<GroupProduct>(&g)) return to_string(p->group) + " x " + emit(p->base);
  return emit(lattice_part(g));
}

}  // namespace davkit
