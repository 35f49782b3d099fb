#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qtorus/bar.hpp"
#include "qtorus/cohomology.hpp"
#include "qtorus/transport.hpp"

namespace qtorus {

/// (x, y) -> delta1(x) delta2(y) - delta2(x) delta1(y), the antisymmetrized cup
/// of the two canonical derivations (2 pi i dropped).
BarCochain pi0_cochain();

/// Invariant cohomology class of the orbifold: a combination of sector
/// representatives together with a G-invariant bar realization.
struct InvariantClass {
  std::string label;  // "k=<power>:<n>,<m>" from the leading representative monomial
  int power = 0;
  int degree = 0;
  std::vector<Scalar> coefficients;  // in the sector representative basis
  TwistedCochain representative;     // sum of coefficients[i] * representatives[i]
  BarCochain bar = BarCochain::zero(0);
};

/// Basis of the invariant classes of the given degree: for each sector, the
/// reduced echelon basis of the image of its Reynolds projector.
std::vector<InvariantClass> invariant_classes(const FiniteSubgroup& sg, const OrbifoldTable& table, int degree,
                                              LiftContext& ctx);

/// A degree-2 class Pi with [Pi, Pi] a coboundary.
struct PoissonStructure {
  InvariantClass cls;
};

/// Pi0 with its Koszul canonical form; cls.coefficients holds the coordinate
/// of that form on the untwisted degree-2 representative.
PoissonStructure pi0();

/// Every basis degree-2 class of the table as a Poisson structure.
std::vector<PoissonStructure> basis_structures(const FiniteSubgroup& sg, const OrbifoldTable& table, LiftContext& ctx);

struct WitnessOptions {
  int radius = 1;               // tuples are drawn from this box
  std::size_t max_tuples = 24;  // evenly spaced tuples checked per witness
};

/// Explicit coboundary witness w with d(w) = target, checked on sampled tuples.
struct BracketWitness {
  std::string description;
  int degree = 0;  // degree of the target
  bool found = false;
  bool verified = false;
  std::string digest;  // of w on the sampled tuples
  std::optional<BarCochain> witness;
};

BracketWitness certify_coboundary(LiftContext& ctx, std::string description, const BarCochain& target,
                                  const WitnessOptions& options = {});

/// Witness for [Pi, Pi]. Throws std::logic_error if none is found or it fails
/// verification, since every degree-3 cocycle is a coboundary.
BracketWitness poisson_check(LiftContext& ctx, const PoissonStructure& pi, const WitnessOptions& options = {});

/// d_Pi(U) = [Pi, U] on bar cochains. Throws std::out_of_range when U has
/// degree 3.
BarCochain poisson_differential(const PoissonStructure& pi, const BarCochain& u);

struct PoissonTable {
  std::string structure;
  std::array<int, 4> dims{};  // degrees 0..3
  std::vector<BracketWitness> witnesses;
  bool all_verified = false;  // every d_Pi image and d_Pi^2 on degree 0 has a verified witness
};

/// Poisson cohomology of every basis structure. d_Pi is shown to vanish on
/// cohomology class by class (witnesses for [Pi, U] for every invariant class
/// U of degree 0..2 and for d_Pi^2 on degree 0); the dimensions then equal
/// the Hochschild totals, with degree 3 zero. Without a complete set of
/// verified witnesses the dims are left at -1.
std::vector<PoissonTable> poisson_cohomology_tables(const FiniteSubgroup& sg, const OrbifoldTable& table,
                                                    LiftContext& ctx, const WitnessOptions& options = {});

}  // namespace qtorus
