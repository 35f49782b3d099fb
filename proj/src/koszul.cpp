#include "qtorus/koszul.hpp"

#include <algorithm>
#include <stdexcept>

namespace qtorus {

namespace {

int parts_for_degree(int degree) {
  switch (degree) {
    case 0: return 1;
    case 1: return 2;
    case 2: return 1;
    default: throw std::out_of_range("Koszul degree must be 0, 1 or 2");
  }
}

const PhasedMonomial kU1{{1, 0}, 0};
const PhasedMonomial kU2{{0, 1}, 0};

}  // namespace

KoszulChain KoszulChain::zero(int degree) {
  KoszulChain c;
  c.degree = degree;
  c.parts.assign(static_cast<std::size_t>(parts_for_degree(degree)), Tensor(2));
  return c;
}

KoszulChain KoszulChain::generator(int degree, int slot, Exponent p, Exponent q) {
  KoszulChain c = zero(degree);
  c.parts.at(static_cast<std::size_t>(slot)).add_term({p, q}, Scalar(1));
  return c;
}

bool KoszulChain::is_zero() const {
  for (const auto& t : parts)
    if (!t.is_zero()) return false;
  return true;
}

KoszulChain& KoszulChain::operator+=(const KoszulChain& o) {
  if (o.degree != degree) throw std::invalid_argument("Koszul degree mismatch");
  for (std::size_t i = 0; i < parts.size(); ++i) parts[i] += o.parts[i];
  return *this;
}

KoszulChain& KoszulChain::operator-=(const KoszulChain& o) {
  if (o.degree != degree) throw std::invalid_argument("Koszul degree mismatch");
  for (std::size_t i = 0; i < parts.size(); ++i) parts[i] -= o.parts[i];
  return *this;
}

KoszulChain& KoszulChain::operator*=(const Scalar& c) {
  for (auto& t : parts) t *= c;
  return *this;
}

std::string KoszulChain::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " | " : "") + parts[i].to_string();
  return out;
}

KoszulChain KoszulChain::left_mul(const PhasedMonomial& x) const {
  KoszulChain r = *this;
  for (auto& t : r.parts) t = t.left_mul(x);
  return r;
}

KoszulChain KoszulChain::right_mul(const PhasedMonomial& y) const {
  KoszulChain r = *this;
  for (auto& t : r.parts) t = t.right_mul(y);
  return r;
}

KoszulChain resolution_differential(const KoszulChain& chain) {
  if (chain.degree == 1) {
    KoszulChain out = KoszulChain::zero(0);
    const PhasedMonomial gens[2] = {kU1, kU2};
    for (int j = 0; j < 2; ++j) {
      // b1(U^p e_j U^q) = U^p (x) U_j U^q - U^p U_j (x) U^q
      const Tensor& t = chain.parts[static_cast<std::size_t>(j)];
      for (const auto& [k, c] : t.terms()) {
        PhasedMonomial right = gens[j] * PhasedMonomial{k[1], 0};
        PhasedMonomial left = PhasedMonomial{k[0], 0} * gens[j];
        out.parts[0].add_term({k[0], right.exp}, c * Scalar::mu_power(right.phase));
        out.parts[0].add_term({left.exp, k[1]}, -(c * Scalar::mu_power(left.phase)));
      }
    }
    return out;
  }
  if (chain.degree == 2) {
    // b2(U^p e12 U^q) = U^p U2 e1 U^q - lambda U^p e1 U2 U^q - lambda U^p U1 e2 U^q + U^p e2 U1 U^q
    KoszulChain out = KoszulChain::zero(1);
    const Scalar lambda = Scalar::lambda_power(1);
    for (const auto& [k, c] : chain.parts[0].terms()) {
      const PhasedMonomial p{k[0], 0};
      const PhasedMonomial q{k[1], 0};
      auto put = [&](int slot, const PhasedMonomial& l, const PhasedMonomial& r, const Scalar& f) {
        out.parts[static_cast<std::size_t>(slot)].add_term({l.exp, r.exp}, f * c * Scalar::mu_power(l.phase + r.phase));
      };
      put(0, p * kU2, q, Scalar(1));
      put(0, p, kU2 * q, -lambda);
      put(1, p * kU1, q, -lambda);
      put(1, p, kU1 * q, Scalar(1));
    }
    return out;
  }
  throw std::out_of_range("resolution_differential: degree must be 1 or 2");
}

TorusElement augmentation(const KoszulChain& chain) {
  if (chain.degree != 0) throw std::out_of_range("augmentation is defined on degree 0");
  TorusElement r;
  for (const auto& [k, c] : chain.parts[0].terms()) {
    PhasedMonomial p = PhasedMonomial{k[0], 0} * PhasedMonomial{k[1], 0};
    r.add_term(p.exp, c * Scalar::mu_power(p.phase));
  }
  return r;
}

TwistedCochain::TwistedCochain(GroupElement sector_, int degree_, std::vector<TorusElement> components_)
    : sector(sector_), degree(degree_), components(std::move(components_)) {
  int expected = 0;
  try {
    expected = parts_for_degree(degree);
  } catch (const std::out_of_range&) {
    throw ContractViolation("twisted cochain degree must be 0, 1 or 2");
  }
  if (static_cast<int>(components.size()) != expected)
    throw ContractViolation("twisted cochain component count does not match its degree");
}

TorusElement evaluate(const TwistedCochain& cochain, const KoszulChain& chain) {
  if (chain.degree != cochain.degree) throw std::invalid_argument("evaluate: degree mismatch");
  TorusElement r;
  for (std::size_t j = 0; j < chain.parts.size(); ++j) {
    const TorusElement& phi = cochain.components[j];
    for (const auto& [k, c] : chain.parts[j].terms()) {
      TorusElement term = multiply(multiply(act(cochain.sector, k[0]), phi), PhasedMonomial{k[1], 0});
      r += c * term;
    }
  }
  return r;
}

std::pair<TorusElement, TorusElement> alpha1(const GroupElement& gamma, const TorusElement& phi) {
  const PhasedMonomial g1 = act(gamma, Exponent{1, 0});
  const PhasedMonomial g2 = act(gamma, Exponent{0, 1});
  return {multiply(g1, phi) - multiply(phi, kU1), multiply(g2, phi) - multiply(phi, kU2)};
}

TorusElement alpha2(const GroupElement& gamma, const TorusElement& phi1, const TorusElement& phi2) {
  const PhasedMonomial g1 = act(gamma, Exponent{1, 0});
  const PhasedMonomial g2 = act(gamma, Exponent{0, 1});
  const Scalar lambda = Scalar::lambda_power(1);
  TorusElement r = multiply(g2, phi1);
  r -= lambda * multiply(phi1, kU2);
  r -= lambda * multiply(g1, phi2);
  r += multiply(phi2, kU1);
  return r;
}

std::vector<Exponent> support_shifts(const GroupElement& gamma) {
  return {gamma.apply({1, 0}), gamma.apply({0, 1}), {1, 0}, {0, 1}};
}

int max_support_shift(const GroupElement& gamma) {
  int k = 0;
  for (const auto& s : support_shifts(gamma)) k = std::max(k, s.sup_norm());
  return k;
}

}  // namespace qtorus
