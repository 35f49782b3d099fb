#pragma once

#include <map>
#include <string>
#include <vector>

#include "qtorus/torus.hpp"

namespace qtorus {

/// Element of A^{(x) k}, a sum of pure tensors of monomials. The outer two
/// factors of a bar or Koszul chain carry the bimodule structure.
class Tensor {
 public:
  using Key = std::vector<Exponent>;
  using Terms = std::map<Key, Scalar>;

  explicit Tensor(int arity) : arity_(arity) {}
  static Tensor pure(Key key, Scalar c = Scalar(1));

  int arity() const { return arity_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  int support_radius() const;

  void add_term(const Key& key, const Scalar& c);
  Tensor& operator+=(const Tensor& o);
  Tensor& operator-=(const Tensor& o);
  Tensor& operator*=(const Scalar& c);
  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend Tensor operator*(const Scalar& c, Tensor a) { return a *= c; }
  friend bool operator==(const Tensor&, const Tensor&) = default;

  /// x . t : multiplies the first factor on the left.
  Tensor left_mul(const PhasedMonomial& x) const;
  /// t . y : multiplies the last factor on the right.
  Tensor right_mul(const PhasedMonomial& y) const;
  Tensor left_mul(const TorusElement& x) const;
  Tensor right_mul(const TorusElement& y) const;

  std::string to_string() const;

 private:
  int arity_;
  Terms terms_;
};

}  // namespace qtorus
