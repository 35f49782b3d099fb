#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qtorus/torus.hpp"

namespace qtorus {

class ContractViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Integer 2x2 matrix of determinant one.
class GroupElement {
 public:
  GroupElement() : g_{1, 0, 0, 1} {}
  /// Throws ContractViolation unless g11*g22 - g12*g21 == 1.
  GroupElement(int g11, int g12, int g21, int g22);

  static GroupElement identity() { return {}; }

  int g11() const { return g_[0]; }
  int g12() const { return g_[1]; }
  int g21() const { return g_[2]; }
  int g22() const { return g_[3]; }

  /// The matrix acting on the column (n, m).
  Exponent apply(Exponent e) const { return {g11() * e.n + g12() * e.m, g21() * e.n + g22() * e.m}; }
  GroupElement inverse() const { return {g22(), -g12(), -g21(), g11()}; }
  GroupElement pow(int k) const;
  int trace() const { return g11() + g22(); }
  int max_abs_entry() const;
  bool is_identity() const { return *this == identity(); }

  friend GroupElement operator*(const GroupElement& a, const GroupElement& b);
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;

  std::string to_string() const;

 private:
  std::array<int, 4> g_;
};

/// Least k >= 1 with g^k = identity, or nullopt when g has infinite order.
std::optional<int> element_order(const GroupElement& g);

enum class SubgroupLabel { Z2, Z3, Z4, Z6 };

struct FiniteSubgroup {
  SubgroupLabel label;
  GroupElement generator;
  std::vector<GroupElement> elements;  // generator^0 ... generator^{order-1}

  int order() const { return static_cast<int>(elements.size()); }
  std::string name() const;
  /// Index k with elements[k] == g; throws if g is not in the subgroup.
  int power_of(const GroupElement& g) const;
};

/// Z2: -I, Z3: [[0,1],[-1,-1]], Z4: [[0,-1],[1,0]], Z6: -[[0,1],[-1,-1]].
FiniteSubgroup finite_subgroup(SubgroupLabel label);
/// Accepts z2|z3|z4|z6 in either case; throws std::invalid_argument otherwise.
SubgroupLabel parse_subgroup_label(const std::string& text);
std::vector<SubgroupLabel> all_subgroup_labels();

}  // namespace qtorus
