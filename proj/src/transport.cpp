#include "qtorus/transport.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <sstream>
#include <stdexcept>

#include "qtorus/linalg.hpp"

namespace qtorus {

namespace {

const PhasedMonomial kU1{{1, 0}, 0};
const PhasedMonomial kU2{{0, 1}, 0};
constexpr int kMaxEscalation = 4;

std::vector<Exponent> box(int r) {
  std::vector<Exponent> out;
  for (int n = -r; n <= r; ++n)
    for (int m = -r; m <= r; ++m) out.push_back({n, m});
  return out;
}

// Coefficients x with sum x_i images[i] == target, basic solution with the
// earliest images preferred as pivots.
std::optional<std::vector<Scalar>> solve_combination(const std::vector<KoszulChain>& images,
                                                     const KoszulChain& target) {
  std::map<std::pair<std::size_t, Tensor::Key>, int> rows;
  auto row_of = [&](std::size_t part, const Tensor::Key& k) {
    auto [it, inserted] = rows.try_emplace({part, k}, static_cast<int>(rows.size()));
    return it->second;
  };
  std::vector<MatrixEntry> entries;
  for (std::size_t col = 0; col < images.size(); ++col)
    for (std::size_t part = 0; part < images[col].parts.size(); ++part)
      for (const auto& [k, c] : images[col].parts[part].terms())
        entries.push_back({row_of(part, k), static_cast<int>(col), c});
  std::vector<std::pair<int, Scalar>> rhs;
  for (std::size_t part = 0; part < target.parts.size(); ++part)
    for (const auto& [k, c] : target.parts[part].terms()) rhs.emplace_back(row_of(part, k), c);
  SparseMatrix m(static_cast<int>(rows.size()), static_cast<int>(images.size()));
  for (const auto& e : entries) m.add(e.row, e.col, e.value);
  auto x = solve_linear(m, make_sparse(std::move(rhs)));
  if (!x) return std::nullopt;
  return to_dense(*x, static_cast<int>(images.size()));
}

KoszulChain combine(const std::vector<KoszulChain>& gens, const std::vector<Scalar>& coeffs, int degree) {
  KoszulChain out = KoszulChain::zero(degree);
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (!coeffs[i].is_zero()) out += coeffs[i] * gens[i];
  return out;
}

int l1_size(const Exponent& p, const Exponent& q) { return p.l1_norm() + q.l1_norm(); }

// Bimodule extension of a generator-level map over a tensor of arity k + 2.
template <class Result, class OnGenerator>
Result extend_bimodule(const Tensor& chain, Result zero, OnGenerator on_generator) {
  Result out = zero;
  for (const auto& [key, c] : chain.terms()) {
    std::vector<Exponent> inner(key.begin() + 1, key.end() - 1);
    Result g = on_generator(inner);
    out += c * g.left_mul(PhasedMonomial{key.front(), 0}).right_mul(PhasedMonomial{key.back(), 0});
  }
  return out;
}

}  // namespace

LiftContext::LiftContext(unsigned seed) : seed_(seed) {}

std::size_t LiftContext::cached_lifts() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return k1_.size() + k2_.size();
}

KoszulChain LiftContext::solve_k1(const Exponent& a) const {
  KoszulChain target = KoszulChain::zero(0);
  target.parts[0].add_term({a, {0, 0}}, Scalar(1));
  target.parts[0].add_term({{0, 0}, a}, Scalar(-1));
  const Exponent e[2] = {{1, 0}, {0, 1}};
  for (int extra = 1; extra <= kMaxEscalation; ++extra) {
    const int r = a.sup_norm() + extra;
    struct Unknown {
      int slot;
      Exponent p, q;
    };
    std::vector<Unknown> unknowns;
    for (int j = 0; j < 2; ++j)
      for (const auto& p : box(r)) {
        Exponent q = a - e[j] - p;
        if (q.sup_norm() <= r) unknowns.push_back({j, p, q});
      }
    if (seed_ != 0) std::shuffle(unknowns.begin(), unknowns.end(), std::mt19937(seed_));
    std::stable_sort(unknowns.begin(), unknowns.end(), [](const Unknown& x, const Unknown& y) {
      return l1_size(x.p, x.q) < l1_size(y.p, y.q);
    });
    std::vector<KoszulChain> gens, images;
    for (const auto& u : unknowns) {
      gens.push_back(KoszulChain::generator(1, u.slot, u.p, u.q));
      images.push_back(resolution_differential(gens.back()));
    }
    if (auto x = solve_combination(images, target)) return combine(gens, *x, 1);
  }
  throw std::logic_error("k1 lift not found after window escalation");
}

KoszulChain LiftContext::k1(const Exponent& a) {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = k1_.find(a);
    if (it != k1_.end()) return it->second;
  }
  KoszulChain v = solve_k1(a);
  std::lock_guard<std::mutex> lock(mutex_);
  return k1_.emplace(a, std::move(v)).first->second;
}

KoszulChain LiftContext::solve_k2(const Exponent& a, const Exponent& b) {
  const PhasedMonomial ab = PhasedMonomial{a, 0} * PhasedMonomial{b, 0};
  KoszulChain target = k1(b).left_mul(PhasedMonomial{a, 0});
  target -= Scalar::mu_power(ab.phase) * k1(ab.exp);
  target += k1(a).right_mul(PhasedMonomial{b, 0});
  const Exponent w = a + b - Exponent{1, 1};
  for (int extra = 1; extra <= kMaxEscalation; ++extra) {
    const int r = std::max(a.sup_norm(), b.sup_norm()) + extra;
    std::vector<std::pair<Exponent, Exponent>> unknowns;
    for (const auto& p : box(r)) {
      Exponent q = w - p;
      if (q.sup_norm() <= r) unknowns.emplace_back(p, q);
    }
    std::stable_sort(unknowns.begin(), unknowns.end(),
                     [](const auto& x, const auto& y) { return l1_size(x.first, x.second) < l1_size(y.first, y.second); });
    std::vector<KoszulChain> gens, images;
    for (const auto& [p, q] : unknowns) {
      gens.push_back(KoszulChain::generator(2, 0, p, q));
      images.push_back(resolution_differential(gens.back()));
    }
    if (auto x = solve_combination(images, target)) return combine(gens, *x, 2);
  }
  throw std::logic_error("k2 lift not found after window escalation");
}

KoszulChain LiftContext::k2(const Exponent& a, const Exponent& b) {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = k2_.find({a, b});
    if (it != k2_.end()) return it->second;
  }
  KoszulChain v = solve_k2(a, b);
  std::lock_guard<std::mutex> lock(mutex_);
  return k2_.emplace(std::make_pair(a, b), std::move(v)).first->second;
}

KoszulChain LiftContext::k_chain(const Tensor& chain) {
  switch (chain.arity()) {
    case 2: {
      KoszulChain out = KoszulChain::zero(0);
      out.parts[0] = chain;
      return out;
    }
    case 3:
      return extend_bimodule(chain, KoszulChain::zero(1), [this](const std::vector<Exponent>& x) { return k1(x[0]); });
    case 4:
      return extend_bimodule(chain, KoszulChain::zero(2),
                             [this](const std::vector<Exponent>& x) { return k2(x[0], x[1]); });
    default:
      throw std::out_of_range("k_chain: arity must be 2, 3 or 4");
  }
}

Tensor LiftContext::H1(const Exponent& a) {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = H1_.find(a);
    if (it != H1_.end()) return it->second;
  }
  Tensor y = bar_generator({a}) - h_chain(k1(a));
  Tensor v = bar_contract(y);
  std::lock_guard<std::mutex> lock(mutex_);
  return H1_.emplace(a, std::move(v)).first->second;
}

Tensor LiftContext::H2(const Exponent& a, const Exponent& b) {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = H2_.find({a, b});
    if (it != H2_.end()) return it->second;
  }
  const Tensor gen = bar_generator({a, b});
  Tensor y = gen - h_chain(k2(a, b)) - H_chain(bar_boundary(gen));
  Tensor v = bar_contract(y);
  std::lock_guard<std::mutex> lock(mutex_);
  return H2_.emplace(std::make_pair(a, b), std::move(v)).first->second;
}

Tensor LiftContext::H_chain(const Tensor& chain) {
  switch (chain.arity()) {
    case 3:
      return extend_bimodule(chain, Tensor(4), [this](const std::vector<Exponent>& x) { return H1(x[0]); });
    case 4:
      return extend_bimodule(chain, Tensor(5), [this](const std::vector<Exponent>& x) { return H2(x[0], x[1]); });
    default:
      throw std::out_of_range("H_chain: arity must be 3 or 4");
  }
}

Tensor h_chain(const KoszulChain& chain) {
  const Scalar lambda = Scalar::lambda_power(1);
  switch (chain.degree) {
    case 0:
      return chain.parts[0];
    case 1: {
      Tensor out(3);
      const Exponent u[2] = {kU1.exp, kU2.exp};
      for (int j = 0; j < 2; ++j)
        for (const auto& [k, c] : chain.parts[static_cast<std::size_t>(j)].terms())
          out.add_term({k[0], u[j], k[1]}, -c);
      return out;
    }
    case 2: {
      Tensor out(4);
      for (const auto& [k, c] : chain.parts[0].terms()) {
        out.add_term({k[0], kU2.exp, kU1.exp, k[1]}, -c);
        out.add_term({k[0], kU1.exp, kU2.exp, k[1]}, lambda * c);
      }
      return out;
    }
    default:
      throw std::out_of_range("h_chain: degree must be 0, 1 or 2");
  }
}

BarCochain pull_to_bar(LiftContext& ctx, const TwistedCochain& phi) {
  LiftContext* c = &ctx;
  switch (phi.degree) {
    case 0:
      return BarCochain::constant(phi.components[0], phi.sector);
    case 1:
      return BarCochain(1, phi.sector, [c, phi](const BarCochain::Args& a) { return evaluate(phi, c->k1(a[0])); });
    case 2:
      return BarCochain(2, phi.sector,
                        [c, phi](const BarCochain::Args& a) { return evaluate(phi, c->k2(a[0], a[1])); });
    default:
      throw std::out_of_range("pull_to_bar: degree must be 0, 1 or 2");
  }
}

TwistedCochain push_to_koszul(const BarCochain& f) {
  switch (f.degree()) {
    case 0:
      return TwistedCochain(f.sector(), 0, {f({})});
    case 1:
      return TwistedCochain(f.sector(), 1,
                            {f.evaluate_chain(h_chain(KoszulChain::generator(1, 0))),
                             f.evaluate_chain(h_chain(KoszulChain::generator(1, 1)))});
    case 2:
      return TwistedCochain(f.sector(), 2, {f.evaluate_chain(h_chain(KoszulChain::generator(2, 0)))});
    default:
      throw std::out_of_range("push_to_koszul: degree must be 0, 1 or 2");
  }
}

TwistedCochain transport_action(LiftContext& ctx, const GroupElement& delta, const TwistedCochain& phi) {
  return push_to_koszul(act_on_cochain(delta, pull_to_bar(ctx, phi)));
}

ChainMapWitness lift_comparison_maps(LiftContext& ctx, int window) {
  ChainMapWitness w;
  w.window = window;
  w.seed = ctx.seed();
  const std::vector<Exponent> args = box(window);
  const std::vector<Exponent> shifts = box(1);

  w.h_squares = true;
  for (const auto& p : shifts)
    for (const auto& q : shifts) {
      for (int j = 0; j < 2; ++j) {
        KoszulChain g = KoszulChain::generator(1, j, p, q);
        w.h_squares &= bar_boundary(h_chain(g)) == h_chain(resolution_differential(g));
      }
      KoszulChain g2 = KoszulChain::generator(2, 0, p, q);
      w.h_squares &= bar_boundary(h_chain(g2)) == h_chain(resolution_differential(g2));
    }

  w.k_squares = true;
  w.bar_homotopy = true;
  for (const auto& a : args) {
    const Tensor g = bar_generator({a});
    w.k_squares &= resolution_differential(ctx.k1(a)) == ctx.k_chain(bar_boundary(g));
    w.bar_homotopy &= bar_boundary(ctx.H1(a)) == g - h_chain(ctx.k1(a));
  }
  for (const auto& a : args)
    for (const auto& b : args) {
      const Tensor g = bar_generator({a, b});
      const Tensor dg = bar_boundary(g);
      w.k_squares &= resolution_differential(ctx.k2(a, b)) == ctx.k_chain(dg);
      w.bar_homotopy &= bar_boundary(ctx.H2(a, b)) + ctx.H_chain(dg) == g - h_chain(ctx.k2(a, b));
    }

  // k h - id on the Koszul side: degree 1 equals b2 S1, degree 2 equals S1 b2.
  w.homotopy = true;
  for (int j = 0; j < 2; ++j) {
    KoszulChain e = KoszulChain::generator(1, j);
    KoszulChain diff = ctx.k_chain(h_chain(e)) - e;
    std::vector<KoszulChain> gens, images;
    for (const auto& p : box(2))
      for (const auto& q : box(2))
        if (p + q + Exponent{1, 1} == (j == 0 ? Exponent{1, 0} : Exponent{0, 1})) {
          gens.push_back(KoszulChain::generator(2, 0, p, q));
          images.push_back(resolution_differential(gens.back()));
        }
    auto x = solve_combination(images, diff);
    if (!x) {
      w.homotopy = false;
      w.S1.push_back(KoszulChain::zero(2));
      continue;
    }
    w.S1.push_back(combine(gens, *x, 2));
  }
  if (w.homotopy) {
    KoszulChain e12 = KoszulChain::generator(2, 0);
    KoszulChain lhs = ctx.k_chain(h_chain(e12)) - e12;
    KoszulChain b = resolution_differential(e12);
    KoszulChain rhs = KoszulChain::zero(2);
    for (int j = 0; j < 2; ++j)
      for (const auto& [k, c] : b.parts[static_cast<std::size_t>(j)].terms())
        rhs += c * w.S1[static_cast<std::size_t>(j)].left_mul(PhasedMonomial{k[0], 0}).right_mul(PhasedMonomial{k[1], 0});
    w.homotopy = lhs == rhs;
  }
  w.lifts_cached = ctx.cached_lifts();
  return w;
}

K2IdentityCertificate check_k2_identity(LiftContext& ctx) {
  const Scalar lambda = Scalar::lambda_power(1);
  const Exponent a{1, -1}, b{0, -1};
  const PhasedMonomial pa{a, 0}, pb{b, 0};
  K2IdentityCertificate cert;
  cert.difference = ctx.k2(a, b) - lambda * ctx.k2(b, a);
  const KoszulChain target = KoszulChain::generator(2, 0, {0, -2}, {0, -1});

  std::vector<KoszulChain> images{target};
  const int r = 3;
  for (const auto& p : box(r)) {
    Exponent qa = a - Exponent{1, 1} - p;
    if (qa.sup_norm() <= r) {
      KoszulChain s = KoszulChain::generator(2, 0, p, qa);
      images.push_back(s.right_mul(pb) - lambda * s.left_mul(pb));
    }
    Exponent qb = b - Exponent{1, 1} - p;
    if (qb.sup_norm() <= r) {
      KoszulChain s = KoszulChain::generator(2, 0, p, qb);
      images.push_back(s.left_mul(pa) - lambda * s.right_mul(pa));
    }
  }
  auto x = solve_combination(images, cert.difference);
  if (x) {
    cert.kappa = (*x)[0];
    cert.correction = KoszulChain::zero(2);
    for (std::size_t i = 1; i < images.size(); ++i)
      if (!(*x)[i].is_zero()) cert.correction += (*x)[i] * images[i];
    cert.decomposition_exact = cert.difference == cert.kappa * target + cert.correction;
  } else {
    cert.correction = KoszulChain::zero(2);
  }
  std::vector<KoszulChain> c_only(images.begin() + 1, images.end());
  cert.target_not_in_correction_image = !solve_combination(c_only, target).has_value();
  return cert;
}

std::optional<BarCochain> coboundary_witness(LiftContext& ctx, const BarCochain& c, int solve_radius) {
  LiftContext* lc = &ctx;
  const GroupElement g = c.sector();
  switch (c.degree()) {
    case 3:
      return BarCochain(2, g, [lc, c](const BarCochain::Args& a) { return c.evaluate_chain(lc->H2(a[0], a[1])); });
    case 2: {
      TwistedCochain phi = push_to_koszul(c);
      auto psi = solve_alpha2(g, phi.components[0], solve_radius);
      if (!psi) return std::nullopt;
      BarCochain corr(1, g, [lc, c](const BarCochain::Args& a) { return c.evaluate_chain(lc->H1(a[0])); });
      return pull_to_bar(ctx, *psi) + corr;
    }
    case 1: {
      TwistedCochain phi = push_to_koszul(c);
      auto psi = solve_alpha1(g, -phi.components[0], -phi.components[1], solve_radius);
      if (!psi) return std::nullopt;
      return BarCochain::constant(psi->components[0], g);
    }
    default:
      throw std::invalid_argument("coboundary_witness: degree must be 1, 2 or 3");
  }
}

namespace {

// Visits monomial tuples of the radius box in lexicographic order; when the
// box has more than max_tuples tuples, an evenly spaced subset is visited.
template <class Visit>
void for_each_tuple(int degree, int radius, std::size_t max_tuples, Visit visit) {
  const std::vector<Exponent> b = box(radius);
  std::size_t total = 1;
  for (int i = 0; i < degree; ++i) total *= b.size();
  const std::size_t count = std::min(total, max_tuples);
  for (std::size_t t = 0; t < count; ++t) {
    std::size_t code = count == total ? t : t * total / count;
    BarCochain::Args args(static_cast<std::size_t>(degree));
    for (int i = degree - 1; i >= 0; --i) {
      args[static_cast<std::size_t>(i)] = b[code % b.size()];
      code /= b.size();
    }
    if (!visit(args)) return;
  }
}

}  // namespace

bool verify_coboundary(const BarCochain& w, const BarCochain& c, int radius, std::size_t max_tuples) {
  if (w.degree() + 1 != c.degree() || w.sector() != c.sector()) return false;
  BarCochain dw = bar_differential(w);
  bool ok = true;
  for_each_tuple(c.degree(), radius, max_tuples, [&](const BarCochain::Args& a) {
    ok = dw(a) == c(a);
    return ok;
  });
  return ok;
}

bool vanishes_on_box(const BarCochain& c, int radius, std::size_t max_tuples) {
  bool ok = true;
  for_each_tuple(c.degree(), radius, max_tuples, [&](const BarCochain::Args& a) {
    ok = c(a).is_zero();
    return ok;
  });
  return ok;
}

std::string cochain_digest(const BarCochain& c, int radius, std::size_t max_tuples) {
  std::uint64_t h = 1469598103934665603ull;
  auto feed = [&h](const std::string& s) {
    for (unsigned char ch : s) {
      h ^= ch;
      h *= 1099511628211ull;
    }
  };
  for_each_tuple(c.degree(), radius, max_tuples, [&](const BarCochain::Args& a) {
    feed(c(a).to_string());
    feed(";");
    return true;
  });
  std::ostringstream out;
  out << std::hex;
  out.width(16);
  out.fill('0');
  out << h;
  return out.str();
}

}  // namespace qtorus
