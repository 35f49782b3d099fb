#include "qtorus/bar.hpp"

#include <stdexcept>

namespace qtorus {

namespace {

void require_degree(int degree) {
  if (degree < 0 || degree > 3) throw ContractViolation("bar cochain degree must be between 0 and 3");
}

TorusElement mono(const PhasedMonomial& p) { return TorusElement::monomial(p); }
Scalar sign(int k) { return Scalar(k % 2 == 0 ? 1 : -1); }

void expand(const BarCochain& f, const std::vector<TorusElement>& args, std::size_t pos, BarCochain::Args& cur,
            const Scalar& coeff, TorusElement& out) {
  if (pos == args.size()) {
    out += coeff * f(cur);
    return;
  }
  for (const auto& [e, c] : args[pos].terms()) {
    cur.push_back(e);
    expand(f, args, pos + 1, cur, coeff * c, out);
    cur.pop_back();
  }
}

}  // namespace

BarCochain::BarCochain(int degree, GroupElement sector, MonomialFn fn)
    : degree_(degree), sector_(sector), state_(std::make_shared<State>()) {
  require_degree(degree);
  state_->fn = std::move(fn);
}

BarCochain BarCochain::zero(int degree, GroupElement sector) {
  return BarCochain(degree, sector, [](const Args&) { return TorusElement(); });
}

BarCochain BarCochain::constant(TorusElement a, GroupElement sector) {
  return BarCochain(0, sector, [a = std::move(a)](const Args&) { return a; });
}

BarCochain BarCochain::from_table(int degree, GroupElement sector, std::map<Args, TorusElement> table) {
  for (const auto& [k, v] : table)
    if (static_cast<int>(k.size()) != degree) throw ContractViolation("table key arity does not match degree");
  return BarCochain(degree, sector, [t = std::move(table)](const Args& a) {
    auto it = t.find(a);
    return it == t.end() ? TorusElement() : it->second;
  });
}

TorusElement BarCochain::operator()(const Args& args) const {
  if (static_cast<int>(args.size()) != degree_) throw std::invalid_argument("bar cochain arity mismatch");
  {
    std::lock_guard<std::mutex> lock(state_->mutex);
    auto it = state_->memo.find(args);
    if (it != state_->memo.end()) return it->second;
  }
  TorusElement v = state_->fn(args);
  std::lock_guard<std::mutex> lock(state_->mutex);
  state_->memo.emplace(args, v);
  return v;
}

TorusElement BarCochain::evaluate(const std::vector<TorusElement>& args) const {
  if (static_cast<int>(args.size()) != degree_) throw std::invalid_argument("bar cochain arity mismatch");
  TorusElement out;
  Args cur;
  cur.reserve(args.size());
  expand(*this, args, 0, cur, Scalar(1), out);
  return out;
}

TorusElement BarCochain::evaluate_chain(const Tensor& chain) const {
  if (chain.arity() != degree_ + 2) throw std::invalid_argument("bar chain arity does not match cochain degree");
  TorusElement out;
  for (const auto& [k, c] : chain.terms()) {
    Args inner(k.begin() + 1, k.end() - 1);
    TorusElement v = multiply(act(sector_, k.front()), (*this)(inner));
    out += c * multiply(v, PhasedMonomial{k.back(), 0});
  }
  return out;
}

BarCochain BarCochain::operator+(const BarCochain& o) const {
  if (o.degree_ != degree_ || o.sector_ != sector_) throw std::invalid_argument("adding cochains of different type");
  return BarCochain(degree_, sector_, [a = *this, b = o](const Args& x) { return a(x) + b(x); });
}

BarCochain BarCochain::operator-(const BarCochain& o) const {
  if (o.degree_ != degree_ || o.sector_ != sector_) throw std::invalid_argument("subtracting cochains of different type");
  return BarCochain(degree_, sector_, [a = *this, b = o](const Args& x) { return a(x) - b(x); });
}

BarCochain BarCochain::operator-() const {
  return BarCochain(degree_, sector_, [a = *this](const Args& x) { return -a(x); });
}

BarCochain operator*(const Scalar& c, const BarCochain& f) {
  return BarCochain(f.degree(), f.sector(), [c, f](const BarCochain::Args& x) { return c * f(x); });
}

Tensor bar_boundary(const Tensor& chain) {
  const int k = chain.arity();
  if (k < 3) throw std::invalid_argument("bar boundary needs arity at least 3");
  Tensor out(k - 1);
  for (const auto& [key, c] : chain.terms()) {
    for (int i = 0; i + 1 < k; ++i) {
      PhasedMonomial p = PhasedMonomial{key[static_cast<std::size_t>(i)], 0} * PhasedMonomial{key[static_cast<std::size_t>(i) + 1], 0};
      Tensor::Key nk;
      nk.reserve(static_cast<std::size_t>(k - 1));
      for (int j = 0; j < i; ++j) nk.push_back(key[static_cast<std::size_t>(j)]);
      nk.push_back(p.exp);
      for (int j = i + 2; j < k; ++j) nk.push_back(key[static_cast<std::size_t>(j)]);
      out.add_term(nk, sign(i) * c * Scalar::mu_power(p.phase));
    }
  }
  return out;
}

Tensor bar_contract(const Tensor& chain) {
  Tensor out(chain.arity() + 1);
  for (const auto& [key, c] : chain.terms()) {
    Tensor::Key nk;
    nk.reserve(key.size() + 1);
    nk.push_back({0, 0});
    nk.insert(nk.end(), key.begin(), key.end());
    out.add_term(nk, c);
  }
  return out;
}

Tensor bar_generator(const std::vector<Exponent>& args) {
  Tensor::Key k;
  k.push_back({0, 0});
  k.insert(k.end(), args.begin(), args.end());
  k.push_back({0, 0});
  return Tensor::pure(k);
}

BarCochain bar_differential(const BarCochain& f) {
  if (f.degree() >= 3) throw std::out_of_range("bar_differential: degree 3 cochains are not supported");
  const int n = f.degree();
  const GroupElement g = f.sector();
  return BarCochain(n + 1, g, [f, n, g](const BarCochain::Args& a) {
    BarCochain::Args rest(a.begin() + 1, a.end());
    TorusElement out = multiply(act(g, a.front()), f(rest));
    for (int i = 1; i <= n; ++i) {
      PhasedMonomial p = PhasedMonomial{a[static_cast<std::size_t>(i - 1)], 0} * PhasedMonomial{a[static_cast<std::size_t>(i)], 0};
      BarCochain::Args merged;
      for (int j = 0; j < i - 1; ++j) merged.push_back(a[static_cast<std::size_t>(j)]);
      merged.push_back(p.exp);
      for (int j = i + 1; j <= n; ++j) merged.push_back(a[static_cast<std::size_t>(j)]);
      out += sign(i) * Scalar::mu_power(p.phase) * f(merged);
    }
    BarCochain::Args head(a.begin(), a.end() - 1);
    out += sign(n + 1) * multiply(f(head), PhasedMonomial{a.back(), 0});
    return out;
  });
}

BarCochain cup_product(const BarCochain& f, const BarCochain& g) {
  const int m = f.degree(), n = g.degree();
  if (m + n > 3) throw std::out_of_range("cup_product: degree exceeds 3");
  const GroupElement eta = g.sector();
  return BarCochain(m + n, f.sector() * eta, [f, g, m, eta](const BarCochain::Args& a) {
    BarCochain::Args left(a.begin(), a.begin() + m), right(a.begin() + m, a.end());
    return multiply(act(eta, f(left)), g(right));
  });
}

BarCochain circle_product(const BarCochain& f, const BarCochain& g) {
  const int m = f.degree(), n = g.degree();
  const int deg = m + n - 1;
  if (deg < 0) throw std::out_of_range("circle_product: degree would be negative");
  if (deg > 3) throw std::out_of_range("circle_product: degree exceeds 3");
  const GroupElement eta = g.sector();
  const GroupElement sector = f.sector() * eta;
  if (m == 0) return BarCochain::zero(deg, sector);
  return BarCochain(deg, sector, [f, g, m, n, eta](const BarCochain::Args& a) {
    TorusElement out;
    for (int i = 1; i <= m; ++i) {
      std::vector<TorusElement> args;
      for (int j = 0; j < i - 1; ++j) args.push_back(mono(act(eta, a[static_cast<std::size_t>(j)])));
      BarCochain::Args inner(a.begin() + (i - 1), a.begin() + (i - 1 + n));
      args.push_back(g(inner));
      for (int j = i - 1 + n; j < m + n - 1; ++j) args.push_back(TorusElement::monomial(a[static_cast<std::size_t>(j)]));
      out += sign((i - 1) * (n - 1)) * f.evaluate(args);
    }
    return out;
  });
}

BarCochain gerstenhaber_bracket(const BarCochain& f, const BarCochain& g) {
  const int m = f.degree(), n = g.degree();
  if (m + n == 0) throw std::out_of_range("gerstenhaber_bracket: two 0-cochains");
  if (m + n - 1 > 3) throw std::out_of_range("gerstenhaber_bracket: degree exceeds 3");
  BarCochain fg = circle_product(f, g);
  BarCochain gf = circle_product(g, f);
  if (fg.sector() != gf.sector()) throw ContractViolation("bracket of cochains in non-commuting sectors");
  return fg - sign((m - 1) * (n - 1)) * gf;
}

BarCochain act_on_cochain(const GroupElement& delta, const BarCochain& f) {
  const GroupElement inv = delta.inverse();
  return BarCochain(f.degree(), delta * f.sector() * inv, [delta, inv, f](const BarCochain::Args& a) {
    std::vector<TorusElement> args;
    args.reserve(a.size());
    for (const auto& e : a) args.push_back(mono(act(inv, e)));
    return act(delta, f.evaluate(args));
  });
}

BarCochain group_average(const std::vector<GroupElement>& elements, const BarCochain& f) {
  if (elements.empty()) throw std::invalid_argument("group_average: empty group");
  std::vector<BarCochain> images;
  for (const auto& d : elements) {
    images.push_back(act_on_cochain(d, f));
    if (images.back().sector() != f.sector()) throw ContractViolation("group_average: group does not fix the sector");
  }
  const Scalar inv = Scalar::rational(1, static_cast<long>(elements.size()));
  return BarCochain(f.degree(), f.sector(), [images, inv](const BarCochain::Args& a) {
    TorusElement out;
    for (const auto& g : images) out += g(a);
    return inv * out;
  });
}

BarCochain multiplication_cochain() {
  return BarCochain(2, GroupElement(), [](const BarCochain::Args& a) {
    return mono(PhasedMonomial{a[0], 0} * PhasedMonomial{a[1], 0});
  });
}

BarCochain derivation_cochain(int axis) {
  if (axis != 1 && axis != 2) throw std::invalid_argument("derivation axis must be 1 or 2");
  return BarCochain(1, GroupElement(), [axis](const BarCochain::Args& a) {
    return derivation_delta(axis, TorusElement::monomial(a[0]));
  });
}

}  // namespace qtorus
