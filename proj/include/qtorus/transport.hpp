#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "qtorus/bar.hpp"
#include "qtorus/cohomology.hpp"
#include "qtorus/koszul.hpp"

namespace qtorus {

/// Comparison maps between the Koszul and bar resolutions, built by solving
/// the commuting-square equations.
///
///   h: Koszul -> bar   h0 = id, h1(e_j) = -[U_j], h2(e12) = -([U2|U1] - lambda [U1|U2])
///   k: bar -> Koszul   k0 = id, b1 k1[a] = a (x) 1 - 1 (x) a,
///                      b2 k2[a|b] = a k1[b] - k1[ab] + k1[a] b
///   H: bar homotopy    d2 H1 = id - h1 k1, d3 H2 + H1 d2 = id - h2 k2
///
/// k1 is not unique; the seed permutes the order of equally sized unknowns
/// and so selects a different basic solution. Results are cached and the
/// context is safe to share between threads.
class LiftContext {
 public:
  explicit LiftContext(unsigned seed = 0);
  unsigned seed() const { return seed_; }

  /// k1 on the generator [U^a].
  KoszulChain k1(const Exponent& a);
  /// k2 on the generator [U^a | U^b].
  KoszulChain k2(const Exponent& a, const Exponent& b);
  /// k_n on a bar chain of arity n + 2, bimodule-linearly (n = 0, 1, 2).
  KoszulChain k_chain(const Tensor& chain);

  /// H1[a], arity 4, and H2[a|b], arity 5.
  Tensor H1(const Exponent& a);
  Tensor H2(const Exponent& a, const Exponent& b);
  /// H_n extended bimodule-linearly to a bar chain of arity n + 2 (n = 1, 2).
  Tensor H_chain(const Tensor& chain);

  std::size_t cached_lifts() const;

 private:
  KoszulChain solve_k1(const Exponent& a) const;
  KoszulChain solve_k2(const Exponent& a, const Exponent& b);

  unsigned seed_;
  mutable std::mutex mutex_;
  std::map<Exponent, KoszulChain> k1_;
  std::map<std::pair<Exponent, Exponent>, KoszulChain> k2_;
  std::map<Exponent, Tensor> H1_;
  std::map<std::pair<Exponent, Exponent>, Tensor> H2_;
};

/// h_n on a Koszul chain of degree n; result has arity n + 2.
Tensor h_chain(const KoszulChain& chain);

/// Koszul cochain -> bar cochain: f = phi~ o k_d.
BarCochain pull_to_bar(LiftContext& ctx, const TwistedCochain& phi);
/// Bar cochain -> Koszul cochain: phi = F_f o h_d.
TwistedCochain push_to_koszul(const BarCochain& f);

/// Push phi to the bar complex, act by delta, pull back. The result lies in
/// sector delta gamma delta^{-1} and is not reduced.
TwistedCochain transport_action(LiftContext& ctx, const GroupElement& delta, const TwistedCochain& phi);

/// Evidence that the lifted maps are chain maps on a window.
struct ChainMapWitness {
  int window = 0;
  unsigned seed = 0;
  std::size_t lifts_cached = 0;
  bool h_squares = false;   // d h_n = h_{n-1} b_n
  bool k_squares = false;   // b_n k_n = k_{n-1} d_n
  bool homotopy = false;    // k1 h1 - id = b2 S1 and k2 h2 - id = S1 b2
  bool bar_homotopy = false;  // d2 H1 = id - h1 k1 and d3 H2 + H1 d2 = id - h2 k2
  std::vector<KoszulChain> S1;  // S1(e1), S1(e2)
  bool ok() const { return h_squares && k_squares && homotopy && bar_homotopy; }
};

/// Verifies every square on generators with arguments in the window box.
/// Throws std::logic_error if a lift cannot be found.
ChainMapWitness lift_comparison_maps(LiftContext& ctx, int window);

/// Decomposition D = kappa T + C(s_a, s_b) of
/// D = k2[U1 U2^{-1} | U2^{-1}] - lambda k2[U2^{-1} | U1 U2^{-1}]
/// with T the Koszul generator U2^{-2} e12 U2^{-1} and C the change of D under
/// a change of k1 by b2-boundaries:
/// C(s_a, s_b) = a s_b - lambda s_b a + s_a b - lambda b s_a.
struct K2IdentityCertificate {
  KoszulChain difference;          // D
  Scalar kappa;                    // coefficient of T
  KoszulChain correction;          // C(s_a, s_b)
  bool decomposition_exact = false;  // D == kappa T + correction
  bool target_not_in_correction_image = false;
  bool ok() const { return decomposition_exact && !kappa.is_zero() && target_not_in_correction_image; }
};
K2IdentityCertificate check_k2_identity(LiftContext& ctx);

/// Explicit 'w' with d(w) = c for a cocycle c of degree 1..3 in any sector,
/// or nullopt when c is not a coboundary. Degree 3 uses w = c o H2; degrees 1
/// and 2 solve the Koszul equation for c o h and correct by c o H1.
std::optional<BarCochain> coboundary_witness(LiftContext& ctx, const BarCochain& c, int solve_radius = 4);

/// Checks d(w) == c on monomial tuples with entries in the radius box: all of
/// them, or max_tuples evenly spaced ones in lexicographic order.
bool verify_coboundary(const BarCochain& w, const BarCochain& c, int radius, std::size_t max_tuples = 4096);

/// Checks that c vanishes on the same tuples verify_coboundary visits.
bool vanishes_on_box(const BarCochain& c, int radius, std::size_t max_tuples = 4096);

/// Stable digest of a bar cochain's values on the tuples of the radius box
/// visited by verify_coboundary with the same max_tuples.
std::string cochain_digest(const BarCochain& c, int radius, std::size_t max_tuples = static_cast<std::size_t>(-1));

}  // namespace qtorus
