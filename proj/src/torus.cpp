#include "qtorus/torus.hpp"

#include <cstdlib>
#include <sstream>

#include "qtorus/sl2.hpp"

namespace qtorus {

int Exponent::sup_norm() const { return std::max(std::abs(n), std::abs(m)); }
int Exponent::l1_norm() const { return std::abs(n) + std::abs(m); }

PhasedMonomial operator*(const PhasedMonomial& x, const PhasedMonomial& y) {
  return {x.exp + y.exp, x.phase + y.phase + 2 * x.exp.m * y.exp.n};
}

PhasedMonomial inverse(const PhasedMonomial& x) {
  return {-x.exp, -x.phase + 2 * x.exp.n * x.exp.m};
}

PhasedMonomial power(const PhasedMonomial& x, int k) {
  const PhasedMonomial base = k < 0 ? inverse(x) : x;
  PhasedMonomial r{{0, 0}, 0};
  for (int i = 0; i < std::abs(k); ++i) r = r * base;
  return r;
}

// ---------------------------------------------------------------------------

TorusElement::TorusElement(const Scalar& c) {
  if (!c.is_zero()) terms_.emplace(Exponent{0, 0}, c);
}

TorusElement TorusElement::monomial(Exponent e, Scalar c) {
  TorusElement r;
  if (!c.is_zero()) r.terms_.emplace(e, std::move(c));
  return r;
}

TorusElement TorusElement::monomial(const PhasedMonomial& pm) {
  return monomial(pm.exp, Scalar::mu_power(pm.phase));
}

Scalar TorusElement::coeff(Exponent e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar() : it->second;
}

int TorusElement::support_radius() const {
  int r = 0;
  for (const auto& [e, c] : terms_) r = std::max(r, e.sup_norm());
  return r;
}

void TorusElement::add_term(Exponent e, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

TorusElement& TorusElement::operator+=(const TorusElement& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

TorusElement& TorusElement::operator-=(const TorusElement& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

TorusElement& TorusElement::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

TorusElement TorusElement::operator-() const {
  TorusElement r = *this;
  for (auto& [e, v] : r.terms_) v = -v;
  return r;
}

std::string TorusElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << c.to_string() << " * U1^" << e.n << " U2^" << e.m;
  }
  return out.str();
}

// ---------------------------------------------------------------------------

TorusElement multiply(const TorusElement& a, const TorusElement& b) {
  TorusElement r;
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) {
      PhasedMonomial p = PhasedMonomial{ea, 0} * PhasedMonomial{eb, 0};
      r.add_term(p.exp, ca * cb * Scalar::mu_power(p.phase));
    }
  return r;
}

TorusElement multiply(const PhasedMonomial& a, const TorusElement& b) {
  TorusElement r;
  for (const auto& [eb, cb] : b.terms()) {
    PhasedMonomial p = a * PhasedMonomial{eb, 0};
    r.add_term(p.exp, cb * Scalar::mu_power(p.phase));
  }
  return r;
}

TorusElement multiply(const TorusElement& a, const PhasedMonomial& b) {
  TorusElement r;
  for (const auto& [ea, ca] : a.terms()) {
    PhasedMonomial p = PhasedMonomial{ea, 0} * b;
    r.add_term(p.exp, ca * Scalar::mu_power(p.phase));
  }
  return r;
}

PhasedMonomial act(const GroupElement& g, Exponent e) {
  const PhasedMonomial img1{{g.g11(), g.g21()}, g.g11() * g.g21()};
  const PhasedMonomial img2{{g.g12(), g.g22()}, g.g12() * g.g22()};
  return power(img1, e.n) * power(img2, e.m);
}

TorusElement act(const GroupElement& g, const TorusElement& x) {
  TorusElement r;
  for (const auto& [e, c] : x.terms()) {
    PhasedMonomial p = act(g, e);
    r.add_term(p.exp, c * Scalar::mu_power(p.phase));
  }
  return r;
}

TorusElement derivation_delta(int axis, const TorusElement& x) {
  if (axis != 1 && axis != 2) throw std::invalid_argument("derivation axis must be 1 or 2");
  TorusElement r;
  for (const auto& [e, c] : x.terms()) r.add_term(e, c * Scalar(axis == 1 ? e.n : e.m));
  return r;
}

}  // namespace qtorus
