#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "qtorus/scalar.hpp"

namespace qtorus {

class GroupElement;

/// Lattice index (n, m) of the normally ordered word U1^n U2^m.
struct Exponent {
  int n = 0;
  int m = 0;
  friend auto operator<=>(const Exponent&, const Exponent&) = default;
  Exponent operator+(const Exponent& o) const { return {n + o.n, m + o.m}; }
  Exponent operator-(const Exponent& o) const { return {n - o.n, m - o.m}; }
  Exponent operator-() const { return {-n, -m}; }
  int sup_norm() const;
  int l1_norm() const;
};

/// mu^phase * U1^n U2^m. Products of these never leave the form, which keeps
/// the monomial-level arithmetic in integers.
struct PhasedMonomial {
  Exponent exp;
  int phase = 0;
  friend bool operator==(const PhasedMonomial&, const PhasedMonomial&) = default;
};

/// (U1^a U2^b)(U1^c U2^d) = lambda^{bc} U1^{a+c} U2^{b+d}.
PhasedMonomial operator*(const PhasedMonomial& x, const PhasedMonomial& y);
PhasedMonomial inverse(const PhasedMonomial& x);
PhasedMonomial power(const PhasedMonomial& x, int k);

/// Finitely supported element of the quantum torus (or of a twisted bimodule,
/// which has the same underlying set). No stored coefficient is zero.
class TorusElement {
 public:
  using Terms = std::map<Exponent, Scalar>;

  TorusElement() = default;
  TorusElement(const Scalar& c);  // NOLINT(google-explicit-constructor)
  static TorusElement monomial(Exponent e, Scalar c = Scalar(1));
  static TorusElement monomial(const PhasedMonomial& pm);
  static TorusElement U1() { return monomial(Exponent{1, 0}); }
  static TorusElement U2() { return monomial(Exponent{0, 1}); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Scalar coeff(Exponent e) const;
  int support_radius() const;

  void add_term(Exponent e, const Scalar& c);
  TorusElement& operator+=(const TorusElement& o);
  TorusElement& operator-=(const TorusElement& o);
  TorusElement& operator*=(const Scalar& c);
  TorusElement operator-() const;
  friend TorusElement operator+(TorusElement a, const TorusElement& b) { return a += b; }
  friend TorusElement operator-(TorusElement a, const TorusElement& b) { return a -= b; }
  friend TorusElement operator*(TorusElement a, const Scalar& c) { return a *= c; }
  friend TorusElement operator*(const Scalar& c, TorusElement a) { return a *= c; }
  friend bool operator==(const TorusElement&, const TorusElement&) = default;

  /// "c * U1^n U2^m + ..."
  std::string to_string() const;

 private:
  Terms terms_;
};

/// Product in the quantum torus, U2 U1 = lambda U1 U2.
TorusElement multiply(const TorusElement& a, const TorusElement& b);
TorusElement multiply(const PhasedMonomial& a, const TorusElement& b);
TorusElement multiply(const TorusElement& a, const PhasedMonomial& b);

/// rho_g on a monomial: rho_g(U1)^n rho_g(U2)^m from the generator images
/// mu^{g11 g21} U1^{g11} U2^{g21} and mu^{g12 g22} U1^{g12} U2^{g22}.
PhasedMonomial act(const GroupElement& g, Exponent e);
TorusElement act(const GroupElement& g, const TorusElement& x);

/// Canonical derivations with the constant 2 pi i dropped:
/// delta_1(U1^n U2^m) = n U1^n U2^m, delta_2(U1^n U2^m) = m U1^n U2^m.
TorusElement derivation_delta(int axis, const TorusElement& x);

}  // namespace qtorus
