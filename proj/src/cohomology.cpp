#include "qtorus/cohomology.hpp"

#include <algorithm>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "qtorus/transport.hpp"

namespace qtorus {

bool monomial_less(const Exponent& a, const Exponent& b) {
  return std::make_tuple(a.l1_norm(), -a.n, -a.m) < std::make_tuple(b.l1_norm(), -b.n, -b.m);
}

Window::Window(int radius) : radius_(radius) {
  if (radius < 1) throw ContractViolation("window radius must be at least 1");
}

std::vector<Exponent> Window::monomials() const {
  std::vector<Exponent> out;
  for (int n = -radius_; n <= radius_; ++n)
    for (int m = -radius_; m <= radius_; ++m) out.push_back({n, m});
  std::sort(out.begin(), out.end(), monomial_less);
  return out;
}

MonomialBasis::MonomialBasis(std::vector<Exponent> monomials) : list_(std::move(monomials)) {
  for (std::size_t i = 0; i < list_.size(); ++i) index_.emplace(list_[i], static_cast<int>(i));
}

std::optional<int> MonomialBasis::index(const Exponent& e) const {
  auto it = index_.find(e);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

namespace {

std::mutex g_observer_mutex;
MatrixObserver g_observer;

void observe(const std::string& tag, const std::vector<SparseVec>& rows, int cols, int rank) {
  std::lock_guard<std::mutex> lock(g_observer_mutex);
  if (g_observer) g_observer(tag, rows, cols, rank);
}

using Coord = SectorCohomology::Coord;

bool coord_less(const Coord& a, const Coord& b) {
  if (a.second != b.second) return monomial_less(a.second, b.second);
  return a.first < b.first;
}

int slots_for(int degree) { return degree == 1 ? 2 : 1; }

// Cochain images as lists of (slot, monomial, coefficient).
std::vector<std::tuple<int, Exponent, Scalar>> flatten(const std::vector<TorusElement>& parts) {
  std::vector<std::tuple<int, Exponent, Scalar>> out;
  for (std::size_t s = 0; s < parts.size(); ++s)
    for (const auto& [e, c] : parts[s].terms()) out.emplace_back(static_cast<int>(s), e, c);
  return out;
}

// Image of the unit cochain at (slot, w) under the next Koszul map.
std::vector<TorusElement> next_map(const GroupElement& g, int degree, int slot, const Exponent& w) {
  TorusElement u = TorusElement::monomial(w);
  if (degree == 0) {
    auto [a, b] = alpha1(g, u);
    return {a, b};
  }
  if (degree == 1) return {slot == 0 ? alpha2(g, u, TorusElement()) : alpha2(g, TorusElement(), u)};
  return {};
}

std::string tag_for(const GroupElement& g, int degree, int radius, const char* kind) {
  return "sector=" + g.to_string() + " degree=" + std::to_string(degree) + " radius=" + std::to_string(radius) +
         " " + kind;
}

TwistedCochain to_cochain(const GroupElement& g, int degree, const SparseVec& v, const std::vector<Coord>& columns) {
  std::vector<TorusElement> parts(static_cast<std::size_t>(slots_for(degree)));
  for (const auto& [i, c] : v) {
    const Coord& co = columns[static_cast<std::size_t>(i)];
    parts[static_cast<std::size_t>(co.first)].add_term(co.second, c);
  }
  return TwistedCochain(g, degree, std::move(parts));
}

}  // namespace

void set_matrix_observer(MatrixObserver observer) {
  std::lock_guard<std::mutex> lock(g_observer_mutex);
  g_observer = std::move(observer);
}

SparseMatrix assemble_map_matrix(const GroupElement& gamma, int degree, const Window& window) {
  if (degree != 1 && degree != 2) throw std::out_of_range("assemble_map_matrix: degree must be 1 or 2");
  const int k = max_support_shift(gamma);
  const MonomialBasis in(window.monomials());
  const MonomialBasis out(window.grown(k).monomials());
  if (degree == 1) {
    SparseMatrix m(2 * out.size(), in.size());
    for (int c = 0; c < in.size(); ++c) {
      auto [a, b] = alpha1(gamma, TorusElement::monomial(in.at(c)));
      for (const auto& [e, v] : a.terms()) m.add(*out.index(e), c, v);
      for (const auto& [e, v] : b.terms()) m.add(out.size() + *out.index(e), c, v);
    }
    return m;
  }
  SparseMatrix m(out.size(), 2 * in.size());
  for (int s = 0; s < 2; ++s)
    for (int c = 0; c < in.size(); ++c) {
      TorusElement u = TorusElement::monomial(in.at(c));
      TorusElement img = s == 0 ? alpha2(gamma, u, TorusElement()) : alpha2(gamma, TorusElement(), u);
      for (const auto& [e, v] : img.terms()) m.add(*out.index(e), s * in.size() + c, v);
    }
  return m;
}

SectorCohomology::SectorCohomology(const GroupElement& gamma, int degree, int radius)
    : gamma_(gamma), degree_(degree), radius_(radius) {
  if (degree < 0 || degree > 2) throw std::out_of_range("sector cohomology degree must be 0, 1 or 2");
  const Window window(radius);
  const int k = max_support_shift(gamma);
  const int slots = slots_for(degree);

  std::vector<Coord> box;
  for (const auto& w : window.monomials())
    for (int s = 0; s < slots; ++s) box.emplace_back(s, w);
  std::sort(box.begin(), box.end(), [](const Coord& a, const Coord& b) { return coord_less(b, a); });

  // Coboundary generators: images of the previous map on the grown box.
  std::vector<std::vector<std::tuple<int, Exponent, Scalar>>> gens;
  if (degree >= 1) {
    for (const auto& w : window.grown(k).monomials())
      for (int s = 0; s < slots_for(degree - 1); ++s) gens.push_back(flatten(next_map(gamma, degree - 1, s, w)));
  }
  std::map<Coord, bool> in_box;
  for (const auto& c : box) in_box[c] = true;
  std::vector<Coord> outside;
  for (const auto& g : gens)
    for (const auto& [s, e, v] : g) {
      Coord c{s, e};
      if (!in_box.count(c)) {
        in_box[c] = false;
        outside.push_back(c);
      }
    }
  std::sort(outside.begin(), outside.end(), [](const Coord& a, const Coord& b) { return coord_less(b, a); });
  outside.erase(std::unique(outside.begin(), outside.end()), outside.end());
  columns_ = outside;
  columns_.insert(columns_.end(), box.begin(), box.end());
  for (std::size_t i = 0; i < columns_.size(); ++i) column_index_.emplace(columns_[i], static_cast<int>(i));
  const int n_out = static_cast<int>(outside.size());
  const int n_cols = static_cast<int>(columns_.size());

  std::vector<SparseVec> gen_rows;
  gen_rows.reserve(gens.size());
  for (const auto& g : gens) {
    std::vector<std::pair<int, Scalar>> row;
    for (const auto& [s, e, v] : g) row.emplace_back(column_index_.at({s, e}), v);
    gen_rows.push_back(make_sparse(std::move(row)));
  }
  boundaries_ = echelonize(gen_rows, n_cols);
  if (degree >= 1) observe(tag_for(gamma, degree, radius, "image"), gen_rows, n_cols, boundaries_.rank());
  coboundary_dim_ = static_cast<int>(
      std::count_if(boundaries_.pivots.begin(), boundaries_.pivots.end(), [n_out](int p) { return p >= n_out; }));

  if (degree == 2) {
    cocycle_dim_ = static_cast<int>(box.size());
    for (int c = n_out; c < n_cols; ++c)
      if (!boundaries_.is_pivot(c)) {
        reps_echelon_.pivots.push_back(c);
        reps_echelon_.rows.push_back({{c, Scalar(1)}});
      }
    reps_echelon_.cols = n_cols;
  } else {
    // Cocycles: kernel of the next map on the box, with all output rows kept.
    std::map<Coord, int> out_rows;
    std::vector<MatrixEntry> entries;
    for (std::size_t j = 0; j < box.size(); ++j) {
      const auto& [s, w] = box[j];
      for (const auto& [os, oe, v] : flatten(next_map(gamma, degree, s, w))) {
        auto [it, inserted] = out_rows.try_emplace({os, oe}, static_cast<int>(out_rows.size()));
        entries.push_back({it->second, static_cast<int>(j), v});
      }
    }
    SparseMatrix m(static_cast<int>(out_rows.size()), static_cast<int>(box.size()));
    for (const auto& e : entries) m.add(e.row, e.col, e.value);
    RankKernel rk = rank_and_kernel(m);
    observe(tag_for(gamma, degree, radius, "kernel"), m.row_vectors(), m.cols(), rk.rank);
    cocycle_dim_ = static_cast<int>(rk.kernel_basis.size());

    std::vector<SparseVec> reduced;
    for (const auto& kv : rk.kernel_basis) {
      SparseVec g;
      for (const auto& [i, c] : kv) g.emplace_back(n_out + i, c);
      // Truncation exactness: the kernel vector must be a cocycle of the full map.
      TwistedCochain cc = to_cochain(gamma, degree, g, columns_);
      const bool closed = degree == 0 ? alpha1(gamma, cc.components[0]).first.is_zero() &&
                                            alpha1(gamma, cc.components[0]).second.is_zero()
                                      : alpha2(gamma, cc.components[0], cc.components[1]).is_zero();
      if (!closed) throw std::logic_error("truncated kernel vector is not a cocycle");
      reduced.push_back(boundaries_.reduce(g));
    }
    reps_echelon_ = echelonize(reduced, n_cols);
    reps_echelon_.make_reduced();
    if (reps_echelon_.rank() != cocycle_dim_ - coboundary_dim_)
      throw std::logic_error("cocycle quotient rank disagrees with the dimension count");
  }

  // Present representatives in increasing order of their leading coordinate.
  std::vector<std::size_t> order(reps_echelon_.rows.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [this](std::size_t a, std::size_t b) {
    return coord_less(columns_[static_cast<std::size_t>(reps_echelon_.pivots[a])],
                      columns_[static_cast<std::size_t>(reps_echelon_.pivots[b])]);
  });
  EchelonForm sorted;
  sorted.cols = n_cols;
  for (std::size_t i : order) {
    sorted.rows.push_back(reps_echelon_.rows[i]);
    sorted.pivots.push_back(reps_echelon_.pivots[i]);
  }
  reps_echelon_ = std::move(sorted);  // row order now differs from pivot order; coordinates() handles both
  for (const auto& row : reps_echelon_.rows) reps_.push_back(to_cochain(gamma, degree, row, columns_));
}

SparseVec SectorCohomology::vectorize(const TwistedCochain& c) const {
  if (c.degree != degree_) throw std::invalid_argument("cochain degree does not match the sector cohomology");
  std::vector<std::pair<int, Scalar>> v;
  for (std::size_t s = 0; s < c.components.size(); ++s)
    for (const auto& [e, x] : c.components[s].terms()) {
      auto it = column_index_.find({static_cast<int>(s), e});
      if (it == column_index_.end()) throw std::out_of_range("cochain support leaves the window");
      v.emplace_back(it->second, x);
    }
  return make_sparse(std::move(v));
}

std::vector<Scalar> SectorCohomology::coordinates(const TwistedCochain& c) const {
  SparseVec v = boundaries_.reduce(vectorize(c));
  std::vector<Scalar> x(reps_echelon_.rows.size());
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = sparse_at(v, reps_echelon_.pivots[i]);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) v = axpy(v, -x[i], reps_echelon_.rows[i]);
  if (!v.empty()) throw std::out_of_range("cochain is not a cocycle resolvable in this window");
  return x;
}

bool SectorCohomology::is_coboundary(const TwistedCochain& c) const {
  return boundaries_.reduce(vectorize(c)).empty();
}

std::optional<TwistedCochain> solve_alpha2(const GroupElement& gamma, const TorusElement& phi, int radius) {
  const Window window(radius);
  std::vector<Coord> unknowns;
  for (const auto& w : window.monomials())
    for (int s = 0; s < 2; ++s) unknowns.emplace_back(s, w);
  std::map<Exponent, int> rows;
  std::vector<MatrixEntry> entries;
  for (std::size_t j = 0; j < unknowns.size(); ++j) {
    TorusElement u = TorusElement::monomial(unknowns[j].second);
    TorusElement img = unknowns[j].first == 0 ? alpha2(gamma, u, TorusElement()) : alpha2(gamma, TorusElement(), u);
    for (const auto& [e, v] : img.terms()) {
      auto [it, inserted] = rows.try_emplace(e, static_cast<int>(rows.size()));
      entries.push_back({it->second, static_cast<int>(j), v});
    }
  }
  std::vector<std::pair<int, Scalar>> rhs;
  for (const auto& [e, v] : phi.terms()) {
    auto [it, inserted] = rows.try_emplace(e, static_cast<int>(rows.size()));
    rhs.emplace_back(it->second, v);
  }
  SparseMatrix m(static_cast<int>(rows.size()), static_cast<int>(unknowns.size()));
  for (const auto& e : entries) m.add(e.row, e.col, e.value);
  auto x = solve_linear(m, make_sparse(std::move(rhs)));
  if (!x) return std::nullopt;
  return to_cochain(gamma, 1, *x, unknowns);
}

std::optional<TwistedCochain> solve_alpha1(const GroupElement& gamma, const TorusElement& phi1,
                                           const TorusElement& phi2, int radius) {
  const Window window(radius);
  std::vector<Coord> unknowns;
  for (const auto& w : window.monomials()) unknowns.emplace_back(0, w);
  std::map<Coord, int> rows;
  std::vector<MatrixEntry> entries;
  for (std::size_t j = 0; j < unknowns.size(); ++j) {
    auto [a, b] = alpha1(gamma, TorusElement::monomial(unknowns[j].second));
    for (const auto& [s, e, v] : flatten({a, b})) {
      auto [it, inserted] = rows.try_emplace({s, e}, static_cast<int>(rows.size()));
      entries.push_back({it->second, static_cast<int>(j), v});
    }
  }
  std::vector<std::pair<int, Scalar>> rhs;
  for (const auto& [s, e, v] : flatten({phi1, phi2})) {
    auto [it, inserted] = rows.try_emplace({s, e}, static_cast<int>(rows.size()));
    rhs.emplace_back(it->second, v);
  }
  SparseMatrix m(static_cast<int>(rows.size()), static_cast<int>(unknowns.size()));
  for (const auto& e : entries) m.add(e.row, e.col, e.value);
  auto x = solve_linear(m, make_sparse(std::move(rhs)));
  if (!x) return std::nullopt;
  return to_cochain(gamma, 0, *x, unknowns);
}

namespace {

struct SectorRun {
  CohomologyReport report;
  std::optional<SectorCohomology> last;
};

SectorRun run_sector(const GroupElement& gamma, int degree, const Window& window, int min_radius) {
  SectorRun run;
  run.report.sector = gamma;
  run.report.degree = degree;
  for (int r = std::max(1, min_radius); r <= window.radius(); ++r) {
    run.last.emplace(gamma, degree, r);
    run.report.window_dims.push_back({r, run.last->dim()});
  }
  if (!run.last) throw ContractViolation("hh_dim: min_radius exceeds the window");
  const auto& d = run.report.window_dims;
  run.report.stable = d.size() >= 3 && d[d.size() - 1].dim == d[d.size() - 2].dim &&
                      d[d.size() - 2].dim == d[d.size() - 3].dim;
  run.report.raw_dim = d.back().dim;
  run.report.representatives = run.last->representatives();
  return run;
}

using Dense = std::vector<std::vector<Scalar>>;

Dense identity(std::size_t n) {
  Dense m(n, std::vector<Scalar>(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = Scalar(1);
  return m;
}

Dense mat_mul(const Dense& a, const Dense& b) {
  const std::size_t n = a.size();
  Dense c(n, std::vector<Scalar>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (!b[k][j].is_zero()) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

std::vector<Dense> action_matrices(const FiniteSubgroup& sg, const SectorCohomology& coh, unsigned seed) {
  LiftContext ctx(seed);
  const std::size_t n = static_cast<std::size_t>(coh.dim());
  std::vector<Dense> out;
  for (const auto& delta : sg.elements) {
    Dense m(n, std::vector<Scalar>(n));
    for (std::size_t c = 0; c < n; ++c) {
      std::vector<Scalar> col = coh.coordinates(transport_action(ctx, delta, coh.representatives()[c]));
      for (std::size_t r = 0; r < n; ++r) m[r][c] = col[r];
    }
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace

CohomologyReport hh_dim(const GroupElement& gamma, int degree, const Window& window, int min_radius) {
  return run_sector(gamma, degree, window, min_radius).report;
}

std::pair<int, Exponent> representative_label(const TwistedCochain& rep) {
  std::optional<std::pair<int, Exponent>> best;
  for (std::size_t s = 0; s < rep.components.size(); ++s)
    for (const auto& [e, c] : rep.components[s].terms()) {
      std::pair<int, Exponent> cand{rep.degree == 1 ? static_cast<int>(s) + 1 : 0, e};
      if (!best || monomial_less(best->second, e) || (best->second == e && best->first < cand.first)) best = cand;
    }
  if (!best) throw std::invalid_argument("representative_label: zero cochain");
  return *best;
}

InvariantCertificate invariant_dim(const FiniteSubgroup& sg, const SectorCohomology& coh, bool check_second_seed) {
  InvariantCertificate cert;
  const std::size_t n = static_cast<std::size_t>(coh.dim());
  cert.raw_dim = coh.dim();
  cert.action_matrices = action_matrices(sg, coh, 0);
  if (check_second_seed) {
    cert.seeds_checked = true;
    cert.seeds_agree = action_matrices(sg, coh, 1009) == cert.action_matrices;
    if (!cert.seeds_agree) throw std::logic_error("transported action depends on the choice of lift");
  }
  const Scalar inv_order = Scalar::rational(1, sg.order());
  Dense p(n, std::vector<Scalar>(n));
  for (const auto& m : cert.action_matrices)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) p[i][j] += inv_order * m[i][j];
  cert.projector = p;
  cert.projector_idempotent = mat_mul(p, p) == p;

  bool relations = cert.action_matrices.front() == identity(n);
  const Dense& g = cert.action_matrices.size() > 1 ? cert.action_matrices[1] : cert.action_matrices[0];
  Dense power = identity(n);
  for (std::size_t k = 0; k < cert.action_matrices.size(); ++k) {
    relations = relations && power == cert.action_matrices[k];
    power = mat_mul(power, g);
  }
  relations = relations && power == identity(n);
  cert.group_relations_hold = relations;

  std::vector<SparseVec> rows;
  for (const auto& row : p) {
    SparseVec v;
    for (std::size_t j = 0; j < n; ++j)
      if (!row[j].is_zero()) v.emplace_back(static_cast<int>(j), row[j]);
    rows.push_back(std::move(v));
  }
  cert.invariant_dim = echelonize(rows, static_cast<int>(n)).rank();
  return cert;
}

OrbifoldTable orbifold_table(const FiniteSubgroup& sg, const TableOptions& options) {
  OrbifoldTable table;
  table.group = sg.label;
  const Window window(options.max_window);
  struct Task {
    int power;
    int degree;
  };
  std::vector<Task> tasks;
  for (int k = 0; k < sg.order(); ++k)
    for (int d : options.degrees)
      if (d >= 0 && d <= 2) tasks.push_back({k, d});

  std::vector<SectorRun> runs(tasks.size());
  std::vector<std::optional<InvariantCertificate>> certs(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  const long n_tasks = static_cast<long>(tasks.size());
#pragma omp parallel for schedule(dynamic)
  for (long t = 0; t < n_tasks; ++t) {
    try {
      const Task& task = tasks[static_cast<std::size_t>(t)];
      const GroupElement& gamma = sg.elements[static_cast<std::size_t>(task.power)];
      SectorRun run = run_sector(gamma, task.degree, window, 1);
      run.report.group = sg.label;
      run.report.power = task.power;
      if (run.last->dim() > 0) {
        certs[static_cast<std::size_t>(t)] = invariant_dim(sg, *run.last, options.check_second_seed);
        run.report.invariant_dimension = certs[static_cast<std::size_t>(t)]->invariant_dim;
      } else {
        run.report.invariant_dimension = 0;
      }
      runs[static_cast<std::size_t>(t)] = std::move(run);
    } catch (...) {
      errors[static_cast<std::size_t>(t)] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  for (int k = 0; k < sg.order(); ++k) {
    SectorSummary s;
    s.power = k;
    s.sector = sg.elements[static_cast<std::size_t>(k)];
    table.sectors.push_back(std::move(s));
  }
  for (std::size_t t = 0; t < tasks.size(); ++t) {
    SectorSummary& s = table.sectors[static_cast<std::size_t>(tasks[t].power)];
    const CohomologyReport& r = runs[t].report;
    s.reports.push_back(r);
    if (certs[t]) s.certificates.emplace(r.degree, *certs[t]);
    table.totals[static_cast<std::size_t>(r.degree)] += r.invariant_dimension.value_or(0);
    table.raw_totals[static_cast<std::size_t>(r.degree)] += r.raw_dim;
    table.conclusive = table.conclusive && r.stable;
  }
  return table;
}

}  // namespace qtorus
