#include "qtorus/poisson.hpp"

#include <exception>
#include <map>
#include <stdexcept>

namespace qtorus {

namespace {

std::string class_label(int power, const TwistedCochain& rep) {
  auto [slot, e] = representative_label(rep);
  std::string s = "k=" + std::to_string(power) + ":";
  if (rep.degree == 1) s += "slot" + std::to_string(slot) + ":";
  return s + std::to_string(e.n) + "," + std::to_string(e.m);
}

TwistedCochain combination(const CohomologyReport& report, const std::vector<Scalar>& x) {
  std::vector<TorusElement> parts(report.representatives.front().components.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t s = 0; s < parts.size(); ++s) parts[s] += x[i] * report.representatives[i].components[s];
  return TwistedCochain(report.sector, report.degree, std::move(parts));
}

}  // namespace

BarCochain pi0_cochain() {
  BarCochain d1 = derivation_cochain(1), d2 = derivation_cochain(2);
  return cup_product(d1, d2) - cup_product(d2, d1);
}

std::vector<InvariantClass> invariant_classes(const FiniteSubgroup& sg, const OrbifoldTable& table, int degree,
                                              LiftContext& ctx) {
  std::vector<InvariantClass> out;
  for (const auto& sector : table.sectors) {
    auto cert = sector.certificates.find(degree);
    if (cert == sector.certificates.end()) continue;
    const CohomologyReport* report = nullptr;
    for (const auto& r : sector.reports)
      if (r.degree == degree) report = &r;
    const auto& p = cert->second.projector;
    const int n = static_cast<int>(p.size());
    std::vector<SparseVec> columns;
    for (int c = 0; c < n; ++c) {
      SparseVec v;
      for (int r = 0; r < n; ++r)
        if (!p[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)].is_zero())
          v.emplace_back(r, p[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
      columns.push_back(std::move(v));
    }
    EchelonForm image = echelonize(columns, n);
    image.make_reduced();
    for (const auto& row : image.rows) {
      InvariantClass cls;
      cls.power = sector.power;
      cls.degree = degree;
      cls.coefficients = to_dense(row, n);
      cls.representative = combination(*report, cls.coefficients);
      cls.label = class_label(sector.power, cls.representative);
      cls.bar = group_average(sg.elements, pull_to_bar(ctx, cls.representative));
      out.push_back(std::move(cls));
    }
  }
  return out;
}

PoissonStructure pi0() {
  PoissonStructure pi;
  pi.cls.label = "pi0";
  pi.cls.degree = 2;
  pi.cls.bar = pi0_cochain();
  pi.cls.representative = push_to_koszul(pi.cls.bar);
  pi.cls.coefficients = SectorCohomology(GroupElement(), 2, 3).coordinates(pi.cls.representative);
  return pi;
}

std::vector<PoissonStructure> basis_structures(const FiniteSubgroup& sg, const OrbifoldTable& table,
                                               LiftContext& ctx) {
  std::vector<PoissonStructure> out;
  for (auto& cls : invariant_classes(sg, table, 2, ctx)) out.push_back({std::move(cls)});
  return out;
}

BracketWitness certify_coboundary(LiftContext& ctx, std::string description, const BarCochain& target,
                                  const WitnessOptions& options) {
  BracketWitness w;
  w.description = std::move(description);
  w.degree = target.degree();
  w.witness = coboundary_witness(ctx, target);
  w.found = w.witness.has_value();
  if (w.found) {
    w.verified = verify_coboundary(*w.witness, target, options.radius, options.max_tuples);
    w.digest = cochain_digest(*w.witness, options.radius, options.max_tuples);
  }
  return w;
}

BracketWitness poisson_check(LiftContext& ctx, const PoissonStructure& pi, const WitnessOptions& options) {
  BracketWitness w = certify_coboundary(ctx, "[" + pi.cls.label + "," + pi.cls.label + "]",
                                        gerstenhaber_bracket(pi.cls.bar, pi.cls.bar), options);
  if (!w.found || !w.verified) throw std::logic_error("no coboundary witness for [Pi, Pi]");
  return w;
}

BarCochain poisson_differential(const PoissonStructure& pi, const BarCochain& u) {
  if (u.degree() >= 3) throw std::out_of_range("poisson_differential: degree 3 classes have no image");
  return gerstenhaber_bracket(pi.cls.bar, u);
}

std::vector<PoissonTable> poisson_cohomology_tables(const FiniteSubgroup& sg, const OrbifoldTable& table,
                                                    LiftContext& ctx, const WitnessOptions& options) {
  std::vector<PoissonStructure> basis = basis_structures(sg, table, ctx);
  std::vector<std::vector<InvariantClass>> classes;
  for (int d = 0; d <= 1; ++d) classes.push_back(invariant_classes(sg, table, d, ctx));

  struct Task {
    std::size_t structure;
    std::string description;
    BarCochain target;
    std::optional<std::size_t> partner;  // symmetric degree-2 pair shared with another structure
  };
  std::vector<Task> tasks;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const PoissonStructure& pi = basis[i];
    for (int d = 0; d <= 1; ++d)
      for (const auto& u : classes[static_cast<std::size_t>(d)]) {
        BarCochain du = poisson_differential(pi, u.bar);
        tasks.push_back({i, "d(" + u.label + ")", du, std::nullopt});
        if (d == 0) tasks.push_back({i, "d(d(" + u.label + "))", poisson_differential(pi, du), std::nullopt});
      }
    // [f, g] = f o g + g o f for degree-2 cochains, so each unordered pair is computed once.
    for (std::size_t j = i; j < basis.size(); ++j)
      tasks.push_back({i, "d(" + basis[j].cls.label + ")", gerstenhaber_bracket(pi.cls.bar, basis[j].cls.bar),
                       j == i ? std::nullopt : std::optional<std::size_t>(j)});
  }

  std::vector<BracketWitness> results(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  const long n_tasks = static_cast<long>(tasks.size());
#pragma omp parallel for schedule(dynamic)
  for (long t = 0; t < n_tasks; ++t) {
    try {
      const Task& task = tasks[static_cast<std::size_t>(t)];
      results[static_cast<std::size_t>(t)] = certify_coboundary(ctx, task.description, task.target, options);
    } catch (...) {
      errors[static_cast<std::size_t>(t)] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  std::vector<PoissonTable> out(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) out[i].structure = basis[i].cls.label;
  for (std::size_t t = 0; t < tasks.size(); ++t) {
    BracketWitness w = results[t];
    w.witness.reset();
    out[tasks[t].structure].witnesses.push_back(w);
    if (tasks[t].partner) {
      w.description = "d(" + basis[tasks[t].structure].cls.label + ")";
      out[*tasks[t].partner].witnesses.push_back(w);
    }
  }
  for (auto& pt : out) {
    pt.all_verified = true;
    for (const auto& w : pt.witnesses) pt.all_verified = pt.all_verified && w.found && w.verified;
    if (pt.all_verified)
      pt.dims = {table.totals[0], table.totals[1], table.totals[2], 0};
    else
      pt.dims = {-1, -1, -1, -1};
  }
  return out;
}

}  // namespace qtorus
