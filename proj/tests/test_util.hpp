#pragma once

#include <random>

#include "qtorus/torus.hpp"

namespace qtorus::fixtures {

inline Scalar random_scalar(std::mt19937& rng) {
  std::uniform_int_distribution<int> c(-3, 3), k(-2, 2);
  int v = c(rng);
  if (v == 0) v = 1;
  return Scalar(v) * Scalar::mu_power(k(rng));
}

inline TorusElement random_element(std::mt19937& rng, int radius = 2, int terms = 3) {
  std::uniform_int_distribution<int> e(-radius, radius);
  TorusElement x;
  for (int i = 0; i < terms; ++i) x.add_term({e(rng), e(rng)}, random_scalar(rng));
  return x;
}

}  // namespace qtorus::fixtures
