#include "qtorus/tensor.hpp"

#include <sstream>
#include <algorithm>
#include <stdexcept>

namespace qtorus {

Tensor Tensor::pure(Key key, Scalar c) {
  Tensor t(static_cast<int>(key.size()));
  t.add_term(key, c);
  return t;
}

int Tensor::support_radius() const {
  int r = 0;
  for (const auto& [k, c] : terms_)
    for (const auto& e : k) r = std::max(r, e.sup_norm());
  return r;
}

void Tensor::add_term(const Key& key, const Scalar& c) {
  if (static_cast<int>(key.size()) != arity_) throw std::invalid_argument("tensor arity mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Tensor& Tensor::operator+=(const Tensor& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

Tensor& Tensor::operator-=(const Tensor& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

Tensor& Tensor::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

Tensor Tensor::left_mul(const PhasedMonomial& x) const {
  Tensor r(arity_);
  for (const auto& [k, c] : terms_) {
    Key nk = k;
    PhasedMonomial p = x * PhasedMonomial{k.front(), 0};
    nk.front() = p.exp;
    r.add_term(nk, c * Scalar::mu_power(p.phase));
  }
  return r;
}

Tensor Tensor::right_mul(const PhasedMonomial& y) const {
  Tensor r(arity_);
  for (const auto& [k, c] : terms_) {
    Key nk = k;
    PhasedMonomial p = PhasedMonomial{k.back(), 0} * y;
    nk.back() = p.exp;
    r.add_term(nk, c * Scalar::mu_power(p.phase));
  }
  return r;
}

Tensor Tensor::left_mul(const TorusElement& x) const {
  Tensor r(arity_);
  for (const auto& [e, c] : x.terms()) r += c * left_mul(PhasedMonomial{e, 0});
  return r;
}

Tensor Tensor::right_mul(const TorusElement& y) const {
  Tensor r(arity_);
  for (const auto& [e, c] : y.terms()) r += c * right_mul(PhasedMonomial{e, 0});
  return r;
}

std::string Tensor::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << c.to_string() << " *";
    for (std::size_t i = 0; i < k.size(); ++i)
      out << (i ? " (x) " : " ") << "U^(" << k[i].n << "," << k[i].m << ")";
  }
  return out.str();
}

}  // namespace qtorus
