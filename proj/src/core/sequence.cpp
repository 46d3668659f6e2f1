#include "davkit/core/sequence.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "cursor.hpp"

namespace davkit {

namespace {

MixedElement zero_of(const GroupSpec& group, std::size_t dim) {
  return {std::vector<i64>(group.rank(), 0), Element::zero(dim)};
}

}  // namespace

Sequence::Sequence(GroupSpec group, std::size_t dim)
    : group_(std::move(group)), dim_(dim), sum_(zero_of(group_, dim)) {
  if (dim == 0) throw InvalidArgument("sequence dimension must be >= 1");
}

void Sequence::check_element(const MixedElement& e) const {
  if (e.lattice.dim() != dim_) {
    throw InvalidArgument("element " + to_string(e) + " has dimension " +
                          std::to_string(e.lattice.dim()) + ", expected " + std::to_string(dim_));
  }
  validate_residues(group_, e.group_part);
}

Sequence Sequence::from_counts(GroupSpec group, std::size_t dim, std::span<const Entry> raw) {
  Sequence s(std::move(group), dim);
  std::map<MixedElement, i64> merged;
  for (const auto& [e, k] : raw) {
    if (k < 0) throw InvalidArgument("negative multiplicity for " + to_string(e));
    s.check_element(e);
    merged[e] = checked_add(merged[e], k);
  }
  for (auto& [e, k] : merged) {
    if (k > 0) s.entries_.emplace_back(e, k);
  }
  s.recompute();
  return s;
}

Sequence Sequence::from_elements(std::span<const Element> elems) {
  if (elems.empty()) throw InvalidArgument("cannot infer dimension of an empty element list");
  std::vector<Entry> raw;
  raw.reserve(elems.size());
  for (const auto& e : elems) raw.emplace_back(MixedElement(e), 1);
  return from_counts({}, elems.front().dim(), raw);
}

Sequence Sequence::from_elements(GroupSpec group, std::span<const MixedElement> elems) {
  if (elems.empty()) throw InvalidArgument("cannot infer dimension of an empty element list");
  std::vector<Entry> raw;
  raw.reserve(elems.size());
  for (const auto& e : elems) raw.emplace_back(e, 1);
  const std::size_t dim = elems.front().lattice.dim();
  return from_counts(std::move(group), dim, raw);
}

Sequence Sequence::from_values(std::initializer_list<i64> values) {
  std::vector<Entry> raw;
  for (i64 v : values) raw.emplace_back(MixedElement(Element::scalar(v)), 1);
  return from_counts({}, 1, raw);
}

Sequence Sequence::from_value_counts(std::initializer_list<std::pair<i64, i64>> counts) {
  std::vector<Entry> raw;
  for (auto [v, k] : counts) raw.emplace_back(MixedElement(Element::scalar(v)), k);
  return from_counts({}, 1, raw);
}

i64 Sequence::count(const MixedElement& e) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), e,
                             [](const Entry& a, const MixedElement& b) { return a.first < b; });
  return (it != entries_.end() && it->first == e) ? it->second : 0;
}

void Sequence::add(const MixedElement& e, i64 multiplicity) {
  if (multiplicity < 0) throw InvalidArgument("negative multiplicity");
  if (multiplicity == 0) return;
  check_element(e);
  auto it = std::lower_bound(entries_.begin(), entries_.end(), e,
                             [](const Entry& a, const MixedElement& b) { return a.first < b; });
  if (it != entries_.end() && it->first == e) {
    it->second = checked_add(it->second, multiplicity);
  } else {
    entries_.insert(it, Entry{e, multiplicity});
  }
  length_ = checked_add(length_, multiplicity);
  MixedElement scaled{e.group_part, e.lattice * multiplicity};
  for (std::size_t i = 0; i < group_.rank(); ++i) {
    scaled.group_part[i] = mod_floor(checked_mul(e.group_part[i], multiplicity), group_.factors()[i]);
  }
  sum_ = davkit::add(group_, sum_, scaled);
}

void Sequence::recompute() {
  length_ = 0;
  sum_ = zero_of(group_, dim_);
  auto entries = std::move(entries_);
  entries_.clear();
  for (const auto& [e, k] : entries) add(e, k);
}

Sequence Sequence::negated() const {
  std::vector<Entry> raw;
  raw.reserve(entries_.size());
  for (const auto& [e, k] : entries_) raw.emplace_back(davkit::negate(group_, e), k);
  return from_counts(group_, dim_, raw);
}

Sequence Sequence::power(i64 k) const {
  if (k < 1) throw InvalidArgument("sequence power must be >= 1");
  std::vector<Entry> raw;
  for (const auto& [e, a] : entries_) raw.emplace_back(e, checked_mul(a, k));
  return from_counts(group_, dim_, raw);
}

bool Sequence::divides(const Sequence& other) const {
  if (other.dim_ != dim_ || !(other.group_ == group_)) return false;
  return std::all_of(entries_.begin(), entries_.end(),
                     [&](const Entry& en) { return other.count(en.first) >= en.second; });
}

std::vector<MixedElement> Sequence::flatten() const {
  std::vector<MixedElement> out;
  out.reserve(static_cast<std::size_t>(length_));
  for (const auto& [e, k] : entries_) out.insert(out.end(), static_cast<std::size_t>(k), e);
  return out;
}

std::vector<Element> Sequence::flatten_lattice() const {
  std::vector<Element> out;
  out.reserve(static_cast<std::size_t>(length_));
  for (const auto& [e, k] : entries_) out.insert(out.end(), static_cast<std::size_t>(k), e.lattice);
  return out;
}

bool Sequence::operator==(const Sequence& other) const {
  return dim_ == other.dim_ && group_ == other.group_ && entries_ == other.entries_;
}

bool Sequence::operator<(const Sequence& other) const {
  auto a = flatten();
  auto b = other.flatten();
  return a < b;
}

Sequence canonicalize(const Sequence& s) {
  return Sequence::from_counts(s.group(), s.dim(), s.entries());
}

std::string to_string(const Sequence& s) {
  if (s.empty()) return "1";  // the empty product
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, k] : s.entries()) {
    if (!first) os << " * ";
    first = false;
    os << to_string(e);
    if (k != 1) os << '^' << k;
  }
  return os.str();
}

namespace {

MixedElement parse_symbol(detail::Cursor& cur, const GroupSpec& group) {
  if (!cur.accept('(')) {
    return MixedElement(Element::scalar(cur.integer()));
  }
  std::vector<i64> first;
  first.push_back(cur.integer());
  while (cur.accept(',')) first.push_back(cur.integer());
  if (cur.accept('|')) {
    std::vector<i64> lattice;
    lattice.push_back(cur.integer());
    while (cur.accept(',')) lattice.push_back(cur.integer());
    cur.expect(')');
    for (std::size_t i = 0; i < first.size() && i < group.rank(); ++i) {
      first[i] = mod_floor(first[i], group.factors()[i]);
    }
    if (first.size() != group.rank()) {
      cur.fail("mixed element has " + std::to_string(first.size()) + " residues but the group has rank " +
               std::to_string(group.rank()));
    }
    return MixedElement(std::move(first), Element(std::move(lattice)));
  }
  cur.expect(')');
  return MixedElement(Element(std::move(first)));
}

}  // namespace

Sequence parse_sequence(const std::string& text, const GroupSpec& group) {
  detail::Cursor cur(text);
  std::vector<Sequence::Entry> raw;
  std::size_t dim = 0;
  while (!cur.at_end()) {
    if (cur.accept('*') || cur.accept("\xC2\xB7")) continue;
    const std::size_t at = cur.position();
    MixedElement e = parse_symbol(cur, group);
    if (e.group_part.empty() && !group.trivial()) {
      throw ParseError("element without group part in a sequence over " + to_string(group), at);
    }
    i64 k = 1;
    if (cur.accept('^')) {
      k = cur.integer();
      if (k < 0) cur.fail("multiplicity must be non-negative");
    }
    if (dim == 0) dim = e.lattice.dim();
    if (e.lattice.dim() != dim) throw ParseError("element dimension mismatch", at);
    raw.emplace_back(std::move(e), k);
  }
  if (raw.empty()) throw ParseError("empty sequence", 0);
  return Sequence::from_counts(group, dim, raw);
}

}  // namespace davkit
