#include "qtorus/scalar.hpp"

#include <algorithm>
#include <sstream>

namespace qtorus {

namespace {

const mpz_class& zero_coeff() {
  static const mpz_class z(0);
  return z;
}

// Pseudo-remainder of a by b: lc(b)^(deg a - deg b + 1) * a mod b.
Poly pseudo_remainder(Poly a, const Poly& b) {
  const int db = b.degree();
  const mpz_class& lb = b.leading();
  while (!a.is_zero() && a.degree() >= db) {
    const int shift = a.degree() - db;
    mpz_class la = a.leading();
    a = a.scaled(lb) - b.scaled(la).shifted(shift);
  }
  return a;
}

}  // namespace

Poly::Poly(long c) {
  if (c != 0) c_.emplace_back(c);
}

Poly::Poly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(const mpz_class& c, int degree) {
  Poly p;
  if (c == 0) return p;
  p.c_.assign(static_cast<std::size_t>(degree) + 1, mpz_class(0));
  p.c_.back() = c;
  return p;
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int Poly::valuation() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return static_cast<int>(i);
  return 0;
}

bool Poly::is_monomial() const { return term_count() == 1; }

std::size_t Poly::term_count() const {
  return static_cast<std::size_t>(
      std::count_if(c_.begin(), c_.end(), [](const mpz_class& x) { return x != 0; }));
}

const mpz_class& Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return zero_coeff();
  return c_[static_cast<std::size_t>(i)];
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), mpz_class(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), mpz_class(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, mpz_class(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j] == 0) continue;
      r.c_[i + j] += a.c_[i] * b.c_[j];
    }
  }
  r.trim();
  return r;
}

Poly Poly::scaled(const mpz_class& k) const {
  if (k == 0) return Poly();
  Poly r = *this;
  for (auto& x : r.c_) x *= k;
  return r;
}

Poly Poly::shifted(int k) const {
  if (is_zero() || k == 0) return *this;
  Poly r;
  if (k > 0) {
    r.c_.assign(static_cast<std::size_t>(k), mpz_class(0));
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
  }
  if (valuation() < -k) throw std::domain_error("Poly::shifted: inexact division by mu power");
  r.c_.assign(c_.begin() + (-k), c_.end());
  return r;
}

mpz_class Poly::content() const {
  mpz_class g(0);
  for (const auto& x : c_) {
    if (x == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Poly Poly::primitive_part() const {
  if (is_zero()) return *this;
  mpz_class g = content();
  if (leading() < 0) g = -g;
  if (g == 1) return *this;
  Poly r = *this;
  for (auto& x : r.c_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return r;
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) return Poly();
  if (a.is_zero()) return b.leading() < 0 ? -b : b;
  if (b.is_zero()) return a.leading() < 0 ? -a : a;
  if (a.is_monomial() || b.is_monomial()) {
    const Poly& m = a.is_monomial() ? a : b;
    const Poly& o = a.is_monomial() ? b : a;
    mpz_class c = o.content();
    mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), m.leading().get_mpz_t());
    return Poly::monomial(c, std::min(m.valuation(), o.valuation()));
  }

  mpz_class cont;
  {
    mpz_class ca = a.content(), cb = b.content();
    mpz_gcd(cont.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  }
  const int va = a.valuation(), vb = b.valuation();
  const int v = std::min(va, vb);

  Poly x = a.shifted(-va).primitive_part();
  Poly y = b.shifted(-vb).primitive_part();
  if (x.is_constant() || y.is_constant()) return Poly::monomial(cont, v);
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    Poly r = pseudo_remainder(x, y);
    x = std::move(y);
    y = r.is_zero() ? r : r.primitive_part();
    if (!y.is_zero() && y.is_constant()) return Poly::monomial(cont, v);
  }
  return x.primitive_part().scaled(cont).shifted(v);
}

Poly Poly::divexact(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DivisionByZero("Poly::divexact by zero");
  if (a.is_zero()) return a;
  if (b.is_constant()) {
    Poly r = a;
    for (auto& x : r.c_) {
      if (!mpz_divisible_p(x.get_mpz_t(), b.c_[0].get_mpz_t()))
        throw std::domain_error("Poly::divexact: not divisible");
      mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), b.c_[0].get_mpz_t());
    }
    return r;
  }
  const int db = b.degree();
  if (a.degree() < db) throw std::domain_error("Poly::divexact: not divisible");
  std::vector<mpz_class> rem = a.c_;
  std::vector<mpz_class> q(static_cast<std::size_t>(a.degree() - db) + 1, mpz_class(0));
  const mpz_class& lb = b.leading();
  for (int i = a.degree(); i >= db; --i) {
    mpz_class& top = rem[static_cast<std::size_t>(i)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t()))
      throw std::domain_error("Poly::divexact: not divisible");
    mpz_class t;
    mpz_divexact(t.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    q[static_cast<std::size_t>(i - db)] = t;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= t * b.c_[static_cast<std::size_t>(j)];
  }
  for (const auto& x : rem)
    if (x != 0) throw std::domain_error("Poly::divexact: not divisible");
  return Poly(std::move(q));
}

std::complex<double> Poly::eval(std::complex<double> mu) const {
  std::complex<double> acc(0.0, 0.0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * mu + it->get_d();
  return acc;
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const mpz_class& c = c_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << "*";
    out << "mu";
    if (i > 1) out << "^" << i;
  }
  return out.str();
}

// ---------------------------------------------------------------------------

Scalar::Scalar(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero("Scalar with zero denominator");
  canonicalize();
}

Scalar Scalar::mu_power(int k) {
  Scalar s;
  if (k >= 0) {
    s.num_ = Poly::monomial(1, k);
    s.den_ = Poly(1);
  } else {
    s.num_ = Poly(1);
    s.den_ = Poly::monomial(1, -k);
  }
  return s;
}

Scalar Scalar::rational(long p, long q) { return Scalar(Poly(p), Poly(q)); }

bool Scalar::is_one() const {
  return num_.is_constant() && den_.is_constant() && num_ == den_;
}

void Scalar::canonicalize() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  if (den_.is_constant() && den_.coeff(0) == 1) return;
  if (num_.is_constant() && num_.coeff(0) == 1 && den_.is_monomial() && den_.leading() > 0) return;
  Poly g = Poly::gcd(num_, den_);
  if (!(g.is_constant() && g.coeff(0) == 1)) {
    num_ = Poly::divexact(num_, g);
    den_ = Poly::divexact(den_, g);
  }
  if (den_.leading() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.num_ = -r.num_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  canonicalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = Scalar();
  if (den_.is_one() && o.den_.is_one()) {
    num_ = num_ * o.num_;
    return *this;
  }
  // Cross-cancel so the product stays canonical without a full gcd of the product.
  Poly g1 = Poly::gcd(num_, o.den_);
  Poly g2 = Poly::gcd(o.num_, den_);
  Poly n = Poly::divexact(num_, g1) * Poly::divexact(o.num_, g2);
  Poly d = Poly::divexact(den_, g2) * Poly::divexact(o.den_, g1);
  num_ = std::move(n);
  den_ = std::move(d);
  if (den_.leading() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero scalar");
  Scalar r;
  r.num_ = den_;
  r.den_ = num_;
  if (r.den_.leading() < 0) {
    r.num_ = -r.num_;
    r.den_ = -r.den_;
  }
  return r;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

std::complex<double> Scalar::eval(std::complex<double> mu) const {
  return num_.eval(mu) / den_.eval(mu);
}

std::string Scalar::to_string() const {
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace qtorus
