#include "davkit/core/types.hpp"

#include <algorithm>
#include <sstream>

namespace davkit {

Element::Element(std::vector<i64> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw InvalidArgument("element must have dimension >= 1");
}

bool Element::is_zero() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(), [](i64 c) { return c == 0; });
}

Element Element::operator-() const {
  std::vector<i64> out(coords_.size());
  for (std::size_t i = 0; i < coords_.size(); ++i) out[i] = checked_neg(coords_[i]);
  return Element(std::move(out));
}

Element Element::operator+(const Element& other) const {
  if (other.dim() != dim()) throw InvalidArgument("dimension mismatch in element addition");
  std::vector<i64> out(coords_.size());
  for (std::size_t i = 0; i < coords_.size(); ++i) out[i] = checked_add(coords_[i], other.coords_[i]);
  return Element(std::move(out));
}

Element Element::operator*(i64 k) const {
  std::vector<i64> out(coords_.size());
  for (std::size_t i = 0; i < coords_.size(); ++i) out[i] = checked_mul(coords_[i], k);
  return Element(std::move(out));
}

GroupSpec::GroupSpec(std::vector<i64> factors) : factors_(std::move(factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i] < 2) {
      throw InvalidArgument("group factor " + std::to_string(factors_[i]) + " must be >= 2");
    }
    if (i > 0 && factors_[i] % factors_[i - 1] != 0) {
      throw InvalidArgument("group factors must divide each other: " +
                            std::to_string(factors_[i - 1]) + " does not divide " +
                            std::to_string(factors_[i]));
    }
  }
}

GroupSpec GroupSpec::cyclic(i64 n) {
  if (n < 1) throw InvalidArgument("cyclic group order must be >= 1");
  return n == 1 ? GroupSpec{} : GroupSpec{{n}};
}

i64 GroupSpec::order() const {
  i64 o = 1;
  for (i64 n : factors_) o = checked_mul(o, n);
  return o;
}

bool MixedElement::is_zero() const noexcept {
  return lattice.is_zero() &&
         std::all_of(group_part.begin(), group_part.end(), [](i64 c) { return c == 0; });
}

void validate_residues(const GroupSpec& group, const std::vector<i64>& g) {
  if (g.size() != group.rank()) {
    throw InvalidArgument("group part has " + std::to_string(g.size()) +
                          " residues, group rank is " + std::to_string(group.rank()));
  }
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i] < 0 || g[i] >= group.factors()[i]) {
      throw InvalidArgument("residue " + std::to_string(g[i]) + " out of range for C" +
                            std::to_string(group.factors()[i]));
    }
  }
}

MixedElement add(const GroupSpec& group, const MixedElement& a, const MixedElement& b) {
  std::vector<i64> g(group.rank());
  for (std::size_t i = 0; i < g.size(); ++i) {
    g[i] = (a.group_part[i] + b.group_part[i]) % group.factors()[i];
  }
  return {std::move(g), a.lattice + b.lattice};
}

MixedElement negate(const GroupSpec& group, const MixedElement& a) {
  std::vector<i64> g(group.rank());
  for (std::size_t i = 0; i < g.size(); ++i) {
    g[i] = mod_floor(-a.group_part[i], group.factors()[i]);
  }
  return {std::move(g), -a.lattice};
}

std::string to_string(const Element& e) {
  if (e.dim() == 1) return std::to_string(e.value());
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < e.dim(); ++i) os << (i ? "," : "") << e[i];
  os << ')';
  return os.str();
}

std::string to_string(const MixedElement& e) {
  if (e.group_part.empty()) return to_string(e.lattice);
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < e.group_part.size(); ++i) os << (i ? "," : "") << e.group_part[i];
  os << '|';
  for (std::size_t i = 0; i < e.lattice.dim(); ++i) os << (i ? "," : "") << e.lattice[i];
  os << ')';
  return os.str();
}

std::string to_string(const GroupSpec& g) {
  if (g.trivial()) return "C1";
  std::string out;
  for (std::size_t i = 0; i < g.rank(); ++i) {
    if (i) out += 'x';
    out += 'C' + std::to_string(g.factors()[i]);
  }
  return out;
}

}  // namespace davkit
