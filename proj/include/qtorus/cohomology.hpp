#pragma once

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qtorus/koszul.hpp"
#include "qtorus/linalg.hpp"
#include "qtorus/sl2.hpp"

namespace qtorus {

/// Deterministic monomial order: |n|+|m| first, then larger n, then larger m.
/// Small monomials come first.
bool monomial_less(const Exponent& a, const Exponent& b);

/// Box {(n, m) : |n| <= N, |m| <= N}.
class Window {
 public:
  /// Throws ContractViolation unless radius >= 1.
  explicit Window(int radius);
  int radius() const { return radius_; }
  bool contains(const Exponent& e) const { return e.sup_norm() <= radius_; }
  /// Box monomials in increasing monomial order.
  std::vector<Exponent> monomials() const;
  Window grown(int by) const { return Window(radius_ + by); }

 private:
  int radius_;
};

/// Ordered monomial basis with index lookup.
class MonomialBasis {
 public:
  MonomialBasis() = default;
  explicit MonomialBasis(std::vector<Exponent> monomials);
  int size() const { return static_cast<int>(list_.size()); }
  const Exponent& at(int i) const { return list_.at(static_cast<std::size_t>(i)); }
  std::optional<int> index(const Exponent& e) const;
  const std::vector<Exponent>& list() const { return list_; }

 private:
  std::vector<Exponent> list_;
  std::map<Exponent, int> index_;
};

/// Matrix of gamma.alpha1 (degree 1) or gamma.alpha2 (degree 2) with columns
/// the window basis (degree 2: slot 0 block then slot 1 block) and rows the
/// basis of the window grown by the sector's maximal shift (degree 1: slot
/// blocks). Both bases are in monomial order.
SparseMatrix assemble_map_matrix(const GroupElement& gamma, int degree, const Window& window);

/// Called with every matrix the engine eliminates, together with its exact
/// rank. Used by the floating-point cross-check.
using MatrixObserver =
    std::function<void(const std::string& tag, const std::vector<SparseVec>& rows, int cols, int exact_rank)>;
void set_matrix_observer(MatrixObserver observer);

/// Truncated HH^degree of one sector with normal forms.
///
/// Coordinates are (slot, monomial) pairs. Degree 0 and 1 use the kernel of
/// the next map on the radius-N box (exact, since the maps only shift
/// supports); degree 1 and 2 divide by the images of all monomials of radius
/// N + K, K the sector's maximal shift. Columns are ordered outside-box first,
/// then box coordinates from large to small, so representatives sit on small
/// monomials.
class SectorCohomology {
 public:
  using Coord = std::pair<int, Exponent>;  // (slot, monomial), slot 0-based

  SectorCohomology(const GroupElement& gamma, int degree, int radius);

  const GroupElement& sector() const { return gamma_; }
  int degree() const { return degree_; }
  int radius() const { return radius_; }
  int dim() const { return static_cast<int>(reps_.size()); }
  /// Normal-form cocycles spanning the quotient.
  const std::vector<TwistedCochain>& representatives() const { return reps_; }
  /// Coordinates of the class of c in the representative basis. Throws
  /// std::out_of_range when c is not a cocycle resolvable in this window.
  std::vector<Scalar> coordinates(const TwistedCochain& c) const;
  bool is_coboundary(const TwistedCochain& c) const;
  /// Kernel dimension and coboundary rank inside the box, before quotienting.
  int cocycle_dim() const { return cocycle_dim_; }
  int coboundary_dim() const { return coboundary_dim_; }

 private:
  SparseVec vectorize(const TwistedCochain& c) const;

  GroupElement gamma_;
  int degree_;
  int radius_;
  std::vector<Coord> columns_;
  std::map<Coord, int> column_index_;
  EchelonForm boundaries_;
  EchelonForm reps_echelon_;
  std::vector<TwistedCochain> reps_;
  int cocycle_dim_ = 0;
  int coboundary_dim_ = 0;
};

/// Cochain preimages inside a window: psi with alpha2(gamma, psi) = phi, and
/// phi0 with alpha1(gamma, phi0) = (phi1, phi2). nullopt if none exists with
/// support in the box of the given radius.
std::optional<TwistedCochain> solve_alpha2(const GroupElement& gamma, const TorusElement& phi, int radius);
std::optional<TwistedCochain> solve_alpha1(const GroupElement& gamma, const TorusElement& phi1,
                                           const TorusElement& phi2, int radius);

struct WindowDim {
  int radius;
  int dim;
};

struct CohomologyReport {
  SubgroupLabel group = SubgroupLabel::Z2;
  int power = 0;  // sector gamma = generator^power
  GroupElement sector;
  int degree = 0;
  std::vector<WindowDim> window_dims;
  bool stable = false;
  int raw_dim = 0;
  /// Normal-form cocycle representatives at the largest window.
  std::vector<TwistedCochain> representatives;
  std::optional<int> invariant_dimension;
};


/// Dimensions at radii min_radius..window.radius(); stable when the last three
/// agree. Representatives come from the largest radius.
CohomologyReport hh_dim(const GroupElement& gamma, int degree, const Window& window, int min_radius = 1);

/// Leading monomial of a normal-form representative: (slot, exponent). For
/// degree 1 the slot is 1 or 2 and the exponent is the largest support
/// monomial; for degrees 0 and 2 the slot is 0.
std::pair<int, Exponent> representative_label(const TwistedCochain& rep);

/// Invariant dimension of a sector under the transported action, with the
/// certificate data used to decide it.
struct InvariantCertificate {
  int raw_dim = 0;
  int invariant_dim = 0;
  std::vector<std::vector<std::vector<Scalar>>> action_matrices;  // one per group element, in power order
  std::vector<std::vector<Scalar>> projector;
  bool projector_idempotent = false;
  bool group_relations_hold = false;
  bool seeds_agree = true;
  bool seeds_checked = false;
};

/// Action matrices of every element of sg on the representatives of the
/// sector, Reynolds projector and its rank. When check_second_seed is set
/// the action is recomputed with an independent lift and compared.
/// Throws std::logic_error if the two lifts disagree.
InvariantCertificate invariant_dim(const FiniteSubgroup& sg, const SectorCohomology& cohomology,
                                   bool check_second_seed = false);

struct SectorSummary {
  int power = 0;
  GroupElement sector;
  std::vector<CohomologyReport> reports;  // one per requested degree
  std::map<int, InvariantCertificate> certificates;  // by degree
};

struct OrbifoldTable {
  SubgroupLabel group = SubgroupLabel::Z2;
  std::vector<SectorSummary> sectors;
  std::array<int, 3> totals{};      // invariant dimensions summed over sectors
  std::array<int, 3> raw_totals{};  // before taking invariants
  bool conclusive = true;           // every sector stabilized
};

struct TableOptions {
  int max_window = 6;
  std::vector<int> degrees{0, 1, 2};
  bool check_second_seed = false;
};

/// Sector-by-sector invariant dimensions summed over the group. Degrees not
/// requested contribute 0; degrees above 2 vanish by resolution length.
OrbifoldTable orbifold_table(const FiniteSubgroup& sg, const TableOptions& options);

}  // namespace qtorus
