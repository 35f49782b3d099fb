#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "qtorus/sl2.hpp"
#include "qtorus/tensor.hpp"

namespace qtorus {

/// Hochschild cochain of degree 0..3 with values in the sector bimodule
/// gamma A. Defined on monomial tuples by a function (memoized, thread safe)
/// and extended multilinearly.
class BarCochain {
 public:
  using Args = std::vector<Exponent>;
  using MonomialFn = std::function<TorusElement(const Args&)>;

  /// Throws ContractViolation unless 0 <= degree <= 3.
  BarCochain(int degree, GroupElement sector, MonomialFn fn);
  static BarCochain zero(int degree, GroupElement sector = {});
  /// Degree-0 cochain with value a.
  static BarCochain constant(TorusElement a, GroupElement sector = {});
  /// Stored table, zero outside it.
  static BarCochain from_table(int degree, GroupElement sector, std::map<Args, TorusElement> table);

  int degree() const { return degree_; }
  const GroupElement& sector() const { return sector_; }

  /// Value on a monomial tuple (size must equal degree).
  TorusElement operator()(const Args& args) const;
  /// Multilinear extension to arbitrary arguments.
  TorusElement evaluate(const std::vector<TorusElement>& args) const;
  /// F(u (x) x1 ... xn (x) v) = gamma(u) c(x1..xn) v on a bar chain of arity n + 2.
  TorusElement evaluate_chain(const Tensor& chain) const;

  BarCochain operator+(const BarCochain& o) const;
  BarCochain operator-(const BarCochain& o) const;
  BarCochain operator-() const;
  friend BarCochain operator*(const Scalar& c, const BarCochain& f);

 private:
  struct State {
    MonomialFn fn;
    std::mutex mutex;
    std::map<Args, TorusElement> memo;
  };
  int degree_;
  GroupElement sector_;
  std::shared_ptr<State> state_;
};

/// Bar differential d(x0 (x) ... (x) x_{n+1}) = sum (-1)^i (... x_i x_{i+1} ...)
/// on a bar chain tensor of arity n + 2 >= 3.
Tensor bar_boundary(const Tensor& chain);
/// 1 (x) x0 (x) ... : the left contracting homotopy.
Tensor bar_contract(const Tensor& chain);
/// 1 (x) a1 (x) ... (x) an (x) 1.
Tensor bar_generator(const std::vector<Exponent>& args);

/// Twisted coboundary: for f in sector gamma,
/// (df)(a1..a_{n+1}) = gamma(a1) f(a2..) + sum (-1)^i f(.. a_i a_{i+1} ..) + (-1)^{n+1} f(a1..an) a_{n+1}.
/// Throws std::out_of_range on degree 3.
BarCochain bar_differential(const BarCochain& f);

/// (f u g)(a1..a_{m+n}) = eta(f(a1..am)) g(a_{m+1}..), g in sector eta. The
/// product lies in sector gamma eta. Throws std::out_of_range if m + n > 3.
BarCochain cup_product(const BarCochain& f, const BarCochain& g);

/// f o g = sum_i (-1)^{(i-1)(n-1)} f o_i g, where o_i inserts g at slot i and
/// twists the preceding arguments by g's sector.
BarCochain circle_product(const BarCochain& f, const BarCochain& g);
/// [f, g] = f o g - (-1)^{(m-1)(n-1)} g o f. With this convention
/// d(f) = -[f, m] for the multiplication cochain m. Throws std::out_of_range if
/// the result degree exceeds 3 or m + n == 0.
BarCochain gerstenhaber_bracket(const BarCochain& f, const BarCochain& g);

/// (delta . f)(a1..an) = delta(f(delta^{-1} a1, ..., delta^{-1} an)), sector
/// delta gamma delta^{-1}.
BarCochain act_on_cochain(const GroupElement& delta, const BarCochain& f);

/// |G|^{-1} sum_delta delta . f. On a finite group fixing f's sector this is
/// a G-invariant cochain; brackets of invariant cocycles are cocycles.
BarCochain group_average(const std::vector<GroupElement>& elements, const BarCochain& f);

/// Untwisted multiplication 2-cochain (a, b) -> ab.
BarCochain multiplication_cochain();
/// Untwisted derivation delta_axis as a 1-cochain.
BarCochain derivation_cochain(int axis);

}  // namespace qtorus
