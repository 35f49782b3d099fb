#pragma once

#include <array>

#include "qtorus/sl2.hpp"

namespace qtorus::reference {

/// Orbifold Hochschild dimensions HH^0, HH^1, HH^2 (HH^k = 0 for k > 2).
constexpr std::array<int, 3> hochschild(SubgroupLabel g) {
  switch (g) {
    case SubgroupLabel::Z2:
      return {1, 0, 5};
    case SubgroupLabel::Z3:
      return {1, 0, 7};
    case SubgroupLabel::Z4:
      return {1, 0, 8};
    case SubgroupLabel::Z6:
      return {1, 0, 9};
  }
  return {0, 0, 0};
}

/// Poisson cohomology dimensions in degrees 0..3, for every basis structure.
constexpr std::array<int, 4> poisson(SubgroupLabel g) {
  const auto h = hochschild(g);
  return {h[0], h[1], h[2], 0};
}

/// Untwisted sector: HH^0, HH^1, HH^2.
constexpr std::array<int, 3> untwisted{1, 2, 1};

/// Dual labels of the untwisted degree-1 representatives (slot 1, slot 2).
constexpr std::array<std::array<int, 2>, 2> untwisted_degree1_dual{{{-1, 0}, {0, -1}}};

/// Degree-2 dimension of an order-4 sector of Z4 and its representative supports.
constexpr int z4_order4_sector_dim = 2;
constexpr std::array<std::array<int, 2>, 2> z4_order4_supports{{{0, 0}, {1, 0}}};

}  // namespace qtorus::reference
