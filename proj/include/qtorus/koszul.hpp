#pragma once

#include <utility>
#include <string>
#include <vector>

#include "qtorus/sl2.hpp"
#include "qtorus/tensor.hpp"

namespace qtorus {

/// Element of the free bimodule A^e (x) Lambda^d <e1, e2> in the Koszul
/// resolution. parts holds one A (x) A tensor per exterior basis vector:
/// degree 0: {1}, degree 1: {e1, e2}, degree 2: {e1 ^ e2}. A key (p, q) in a
/// part means U^p . e . U^q.
struct KoszulChain {
  int degree = 0;
  std::vector<Tensor> parts;

  static KoszulChain zero(int degree);
  /// U^p . e . U^q for the given exterior slot.
  static KoszulChain generator(int degree, int slot, Exponent p = {}, Exponent q = {});

  bool is_zero() const;
  KoszulChain& operator+=(const KoszulChain& o);
  KoszulChain& operator-=(const KoszulChain& o);
  KoszulChain& operator*=(const Scalar& c);
  friend KoszulChain operator+(KoszulChain a, const KoszulChain& b) { return a += b; }
  friend KoszulChain operator-(KoszulChain a, const KoszulChain& b) { return a -= b; }
  friend KoszulChain operator*(const Scalar& c, KoszulChain a) { return a *= c; }
  friend bool operator==(const KoszulChain&, const KoszulChain&) = default;

  KoszulChain left_mul(const PhasedMonomial& x) const;
  KoszulChain right_mul(const PhasedMonomial& y) const;
  /// Parts joined by " | ".
  std::string to_string() const;
};

/// b1(1 (x) e_j) = 1 (x) U_j - U_j (x) 1,
/// b2(1 (x) e1^e2) = (U2 (x) 1 - lambda (x) U2) e1 - (lambda U1 (x) 1 - 1 (x) U1) e2,
/// extended bimodule-linearly. Throws std::out_of_range unless degree is 1 or 2.
KoszulChain resolution_differential(const KoszulChain& chain);
/// epsilon(a (x) b) = ab on a degree-0 chain.
TorusElement augmentation(const KoszulChain& chain);

/// Koszul cochain in sector gamma: degree 0 and 2 carry one component,
/// degree 1 carries (phi1, phi2) indexed by e1, e2.
struct TwistedCochain {
  GroupElement sector;
  int degree = 0;
  std::vector<TorusElement> components;

  TwistedCochain() = default;
  /// Throws ContractViolation if the component count does not match the degree.
  TwistedCochain(GroupElement sector, int degree, std::vector<TorusElement> components);

  friend bool operator==(const TwistedCochain&, const TwistedCochain&) = default;
};

/// phi~(U^p . e . U^q) = gamma(U^p) phi U^q, summed over the chain.
TorusElement evaluate(const TwistedCochain& cochain, const KoszulChain& chain);

/// ((gamma.U1) phi - phi U1, (gamma.U2) phi - phi U2)
std::pair<TorusElement, TorusElement> alpha1(const GroupElement& gamma, const TorusElement& phi);
/// (gamma.U2) phi1 - lambda phi1 U2 - lambda (gamma.U1) phi2 + phi2 U1
TorusElement alpha2(const GroupElement& gamma, const TorusElement& phi1, const TorusElement& phi2);

/// Lattice shifts by which alpha1/alpha2 move a monomial index:
/// {gamma e1, gamma e2, e1, e2}.
std::vector<Exponent> support_shifts(const GroupElement& gamma);
int max_support_shift(const GroupElement& gamma);

}  // namespace qtorus
