#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "davkit/core/arith.hpp"

namespace davkit {

// A point of Z^d.
class Element {
 public:
  Element() = default;
  explicit Element(std::vector<i64> coords);
  Element(std::initializer_list<i64> coords) : Element(std::vector<i64>(coords)) {}
  static Element scalar(i64 v) { return Element{std::vector<i64>{v}}; }
  static Element zero(std::size_t dim) { return Element{std::vector<i64>(dim, 0)}; }

  std::size_t dim() const noexcept { return coords_.size(); }
  const std::vector<i64>& coords() const noexcept { return coords_; }
  i64 operator[](std::size_t i) const { return coords_[i]; }
  // Only meaningful when dim() == 1.
  i64 value() const { return coords_.at(0); }

  bool is_zero() const noexcept;
  Element operator-() const;
  Element operator+(const Element& other) const;
  Element operator*(i64 k) const;

  // Lexicographic; callers guarantee matching dimensions.
  auto operator<=>(const Element&) const = default;
  bool operator==(const Element&) const = default;

 private:
  std::vector<i64> coords_;
};

// Finite abelian group C_{n_1} + ... + C_{n_r} in invariant-factor form.
class GroupSpec {
 public:
  GroupSpec() = default;
  // Throws InvalidArgument unless 1 < n_1 | n_2 | ... | n_r.
  explicit GroupSpec(std::vector<i64> factors);
  static GroupSpec cyclic(i64 n);

  const std::vector<i64>& factors() const noexcept { return factors_; }
  std::size_t rank() const noexcept { return factors_.size(); }
  bool trivial() const noexcept { return factors_.empty(); }
  bool is_cyclic() const noexcept { return factors_.size() <= 1; }
  i64 order() const;
  i64 exponent() const noexcept { return factors_.empty() ? 1 : factors_.back(); }

  bool operator==(const GroupSpec&) const = default;

 private:
  std::vector<i64> factors_;
};

// An element (g, x) of G x Z^d. For pure lattice data the group part is
// empty.
struct MixedElement {
  std::vector<i64> group_part;
  Element lattice;

  MixedElement() = default;
  MixedElement(Element x) : lattice(std::move(x)) {}  // NOLINT(google-explicit-constructor)
  MixedElement(std::vector<i64> g, Element x) : group_part(std::move(g)), lattice(std::move(x)) {}

  bool is_zero() const noexcept;

  auto operator<=>(const MixedElement&) const = default;
  bool operator==(const MixedElement&) const = default;
};

// Checks that `g` has one residue per factor, each in [0, n_i).
void validate_residues(const GroupSpec& group, const std::vector<i64>& g);

MixedElement add(const GroupSpec& group, const MixedElement& a, const MixedElement& b);
MixedElement negate(const GroupSpec& group, const MixedElement& a);

std::string to_string(const Element& e);
std::string to_string(const MixedElement& e);
std::string to_string(const GroupSpec& g);

}  // namespace davkit
