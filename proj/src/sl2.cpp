#include "qtorus/sl2.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

namespace qtorus {

GroupElement::GroupElement(int g11, int g12, int g21, int g22) : g_{g11, g12, g21, g22} {
  if (g11 * g22 - g12 * g21 != 1)
    throw ContractViolation("matrix is not in SL2(Z): " + to_string());
}

GroupElement operator*(const GroupElement& a, const GroupElement& b) {
  return {a.g11() * b.g11() + a.g12() * b.g21(), a.g11() * b.g12() + a.g12() * b.g22(),
          a.g21() * b.g11() + a.g22() * b.g21(), a.g21() * b.g12() + a.g22() * b.g22()};
}

GroupElement GroupElement::pow(int k) const {
  const GroupElement base = k < 0 ? inverse() : *this;
  GroupElement r;
  for (int i = 0; i < std::abs(k); ++i) r = r * base;
  return r;
}

int GroupElement::max_abs_entry() const {
  int r = 0;
  for (int x : g_) r = std::max(r, std::abs(x));
  return r;
}

std::string GroupElement::to_string() const {
  return "[[" + std::to_string(g_[0]) + "," + std::to_string(g_[1]) + "],[" +
         std::to_string(g_[2]) + "," + std::to_string(g_[3]) + "]]";
}

std::optional<int> element_order(const GroupElement& g) {
  // Finite order in SL2(Z) forces |trace| < 2, or g = +-I.
  const int tr = g.trace();
  if (std::abs(tr) >= 2 && !g.is_identity() && g != GroupElement(-1, 0, 0, -1)) return std::nullopt;
  GroupElement p = g;
  for (int k = 1; k <= 12; ++k) {
    if (p.is_identity()) return k;
    p = p * g;
  }
  return std::nullopt;
}

std::string FiniteSubgroup::name() const {
  switch (label) {
    case SubgroupLabel::Z2: return "Z2";
    case SubgroupLabel::Z3: return "Z3";
    case SubgroupLabel::Z4: return "Z4";
    case SubgroupLabel::Z6: return "Z6";
  }
  return "?";
}

int FiniteSubgroup::power_of(const GroupElement& g) const {
  for (std::size_t k = 0; k < elements.size(); ++k)
    if (elements[k] == g) return static_cast<int>(k);
  throw ContractViolation("element " + g.to_string() + " is not in " + name());
}

FiniteSubgroup finite_subgroup(SubgroupLabel label) {
  GroupElement gen;
  int expected = 0;
  switch (label) {
    case SubgroupLabel::Z2: gen = GroupElement(-1, 0, 0, -1); expected = 2; break;
    case SubgroupLabel::Z3: gen = GroupElement(0, 1, -1, -1); expected = 3; break;
    case SubgroupLabel::Z4: gen = GroupElement(0, -1, 1, 0); expected = 4; break;
    case SubgroupLabel::Z6: gen = GroupElement(0, -1, 1, 1); expected = 6; break;
  }
  auto order = element_order(gen);
  if (!order || *order != expected) throw std::logic_error("catalog generator has wrong order");
  FiniteSubgroup sg{label, gen, {}};
  for (int k = 0; k < expected; ++k) sg.elements.push_back(gen.pow(k));
  return sg;
}

SubgroupLabel parse_subgroup_label(const std::string& text) {
  std::string t = text;
  std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::tolower(c); });
  if (t == "z2") return SubgroupLabel::Z2;
  if (t == "z3") return SubgroupLabel::Z3;
  if (t == "z4") return SubgroupLabel::Z4;
  if (t == "z6") return SubgroupLabel::Z6;
  throw std::invalid_argument("unknown subgroup label '" + text + "' (expected z2|z3|z4|z6)");
}

std::vector<SubgroupLabel> all_subgroup_labels() {
  return {SubgroupLabel::Z2, SubgroupLabel::Z3, SubgroupLabel::Z4, SubgroupLabel::Z6};
}

}  // namespace qtorus
