#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace qtorus {

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Dense polynomial in the formal variable mu with arbitrary-precision
/// integer coefficients, stored low degree first. The zero polynomial has no
/// coefficients.
class Poly {
 public:
  Poly() = default;
  Poly(long c);  // NOLINT(google-explicit-constructor)
  explicit Poly(std::vector<mpz_class> coeffs);

  static Poly monomial(const mpz_class& c, int degree);

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  /// Lowest exponent with a nonzero coefficient; 0 for the zero polynomial.
  int valuation() const;
  bool is_monomial() const;
  std::size_t term_count() const;
  const mpz_class& coeff(int i) const;
  const mpz_class& leading() const { return c_.back(); }
  const std::vector<mpz_class>& coeffs() const { return c_; }

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  Poly scaled(const mpz_class& k) const;
  /// Multiplies by mu^k for k >= 0, divides exactly by mu^{-k} otherwise.
  Poly shifted(int k) const;

  mpz_class content() const;
  Poly primitive_part() const;

  /// gcd in Z[mu], normalized to a positive leading coefficient.
  static Poly gcd(const Poly& a, const Poly& b);
  /// Exact quotient a / b in Z[mu]; throws std::domain_error if b does not divide a.
  static Poly divexact(const Poly& a, const Poly& b);

  std::complex<double> eval(std::complex<double> mu) const;
  std::string to_string() const;

 private:
  void trim();
  std::vector<mpz_class> c_;
};

/// Element of Q(mu): numerator/denominator in Z[mu], kept canonical
/// (coprime in Z[mu], denominator with positive leading coefficient).
/// lambda = mu^2, and mu is transcendental, so lambda^n != 1 for n != 0.
class Scalar {
 public:
  Scalar() : num_(), den_(1) {}
  Scalar(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  Scalar(Poly num, Poly den);

  static Scalar mu_power(int k);
  static Scalar lambda_power(int k) { return mu_power(2 * k); }
  static Scalar rational(long p, long q);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  /// Polynomial degree budget used as a pivot cost.
  int weight() const { return num_.degree() + den_.degree(); }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  Scalar inverse() const;

  std::complex<double> eval(std::complex<double> mu) const;
  /// "(<num>)/(<den>)", both polynomials in descending powers of mu.
  std::string to_string() const;

 private:
  void canonicalize();
  Poly num_;
  Poly den_;
};

}  // namespace qtorus
