#include "qtorus/report.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>

#include "qtorus/reference_values.hpp"
#include "qtorus/transport.hpp"

namespace qtorus {

namespace {

std::string scalar_text(const Scalar& s) {
  if (s.den().is_one()) return s.num().to_string();
  return "(" + s.num().to_string() + ")/(" + s.den().to_string() + ")";
}

std::string element_text(const TorusElement& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : x.terms()) {
    if (!out.empty()) out += " + ";
    out += "[" + scalar_text(c) + "]U^(" + std::to_string(e.n) + "," + std::to_string(e.m) + ")";
  }
  return out;
}

std::string fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  std::ostringstream out;
  out << std::hex;
  out.width(16);
  out.fill('0');
  out << h;
  return out.str();
}

Json matrix_json(const std::vector<std::vector<Scalar>>& m) {
  Json out = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(scalar_text(x));
    out.push_back(r);
  }
  return out;
}

Json representative_json(const TwistedCochain& rep) {
  auto [slot, e] = representative_label(rep);
  Json r;
  r["slot"] = slot;
  r["support"] = {e.n, e.m};
  r["dual_support"] = {-e.n, -e.m};
  Json parts = Json::array();
  for (const auto& c : rep.components) parts.push_back(element_text(c));
  r["cochain"] = parts;
  return r;
}

Json sector_json(const SectorSummary& s, const CohomologyReport& r) {
  Json j;
  j["power"] = s.power;
  j["degree"] = r.degree;
  Json dims = Json::array();
  for (const auto& w : r.window_dims) dims.push_back({w.radius, w.dim});
  j["window_dims"] = dims;
  j["stable"] = r.stable;
  j["raw_dim"] = r.raw_dim;
  j["invariant_dim"] = r.invariant_dimension.value_or(0);
  Json reps = Json::array();
  for (const auto& rep : r.representatives) reps.push_back(representative_json(rep));
  j["representatives"] = reps;
  auto cert = s.certificates.find(r.degree);
  if (cert != s.certificates.end()) {
    const InvariantCertificate& c = cert->second;
    Json cj;
    cj["projector_idempotent"] = c.projector_idempotent;
    cj["group_relations_hold"] = c.group_relations_hold;
    cj["seeds_checked"] = c.seeds_checked;
    cj["seeds_agree"] = c.seeds_agree;
    cj["projector"] = matrix_json(c.projector);
    Json ms = Json::array();
    for (const auto& m : c.action_matrices) ms.push_back(matrix_json(m));
    cj["action_matrices"] = ms;
    j["certificate"] = cj;
  }
  return j;
}

Json witness_json(const BracketWitness& w) {
  Json j;
  j["description"] = w.description;
  j["degree"] = w.degree;
  j["found"] = w.found;
  j["verified"] = w.verified;
  j["digest"] = w.digest;
  return j;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

std::string key(int degree) { return "hh" + std::to_string(degree); }

}  // namespace

OutputFormat parse_format(const std::string& name) {
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "text") return OutputFormat::Text;
  throw std::invalid_argument("unknown format '" + name + "' (expected json|csv|text)");
}

void validate(const RunConfig& config) {
  if (config.max_window < 3) throw ContractViolation("--window must be at least 3");
  if (config.degrees.empty()) throw ContractViolation("no degrees requested");
  for (int d : config.degrees)
    if (d < 0 || d > 2) throw ContractViolation("degrees must be 0, 1 or 2");
}

RunResult run_pipeline(const RunConfig& config) {
  validate(config);
  const FiniteSubgroup sg = finite_subgroup(config.group);

  std::vector<int> degrees = config.degrees;
  std::sort(degrees.begin(), degrees.end());
  degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
  if (config.poisson) degrees = {0, 1, 2};

  NumericCheck numeric;
  if (config.theta) {
    const Theta theta = *config.theta;
    set_matrix_observer([&numeric, theta](const std::string&, const std::vector<SparseVec>& rows, int cols, int rank) {
      ++numeric.matrices;
      if (numeric_rank(rows, cols, theta) != rank) ++numeric.mismatches;
    });
  }
  TableOptions options;
  options.max_window = config.max_window;
  options.degrees = degrees;
  options.check_second_seed = config.verify_invariance;
  OrbifoldTable table;
  try {
    table = orbifold_table(sg, options);
  } catch (...) {
    set_matrix_observer(nullptr);
    throw;
  }
  set_matrix_observer(nullptr);

  RunResult result;
  Json& j = result.report;
  j["group"] = sg.name();
  const GroupElement& g = sg.generator;
  j["generator"] = {{g.g11(), g.g12()}, {g.g21(), g.g22()}};
  j["theta_mode"] = config.theta ? config.theta->name() : "exact";
  Json sectors = Json::array();
  for (const auto& s : table.sectors)
    for (const auto& r : s.reports) sectors.push_back(sector_json(s, r));
  j["sectors"] = sectors;

  const auto expected = reference::hochschild(config.group);
  Json totals, exp, comp;
  bool match = table.conclusive;
  for (int d = 0; d <= 2; ++d) {
    const bool computed = std::find(degrees.begin(), degrees.end(), d) != degrees.end();
    totals[key(d)] = computed ? Json(table.totals[static_cast<std::size_t>(d)]) : Json(nullptr);
    if (!computed) continue;
    exp[key(d)] = expected[static_cast<std::size_t>(d)];
    comp[key(d)] = table.totals[static_cast<std::size_t>(d)];
    match = match && table.totals[static_cast<std::size_t>(d)] == expected[static_cast<std::size_t>(d)];
  }
  j["totals"] = totals;
  Json cmp;
  cmp["expected"] = exp;
  cmp["computed"] = comp;
  cmp["match"] = match;
  j["paper_comparison"] = cmp;

  LiftContext ctx(0);
  Json digests = Json::array();
  std::optional<BracketWitness> pi0_witness;
  Json poisson = Json::object();
  if (config.poisson) {
    PoissonStructure p0 = pi0();
    pi0_witness = poisson_check(ctx, p0);
    Json pj;
    pj["coefficient"] = scalar_text(p0.cls.coefficients.at(0));
    pj["witness"] = witness_json(*pi0_witness);
    poisson["pi0"] = pj;
    const auto expected_p = reference::poisson(config.group);
    Json structures = Json::array();
    bool pmatch = true;
    for (const auto& t : poisson_cohomology_tables(sg, table, ctx)) {
      Json sj;
      sj["label"] = t.structure;
      sj["dims"] = t.dims;
      sj["expected"] = expected_p;
      sj["all_verified"] = t.all_verified;
      sj["match"] = t.all_verified && t.dims == expected_p;
      pmatch = pmatch && sj["match"].get<bool>();
      Json ws = Json::array();
      for (const auto& w : t.witnesses) ws.push_back(witness_json(w));
      sj["witnesses"] = ws;
      structures.push_back(sj);
    }
    poisson["structures"] = structures;
    poisson["match"] = pmatch;
    match = match && pmatch;
  }
  j["poisson"] = poisson;

  if (config.witnesses) {
    ChainMapWitness cm = lift_comparison_maps(ctx, 1);
    std::string cm_text = std::to_string(cm.h_squares) + std::to_string(cm.k_squares) + std::to_string(cm.homotopy) +
                          std::to_string(cm.bar_homotopy);
    for (const auto& s : cm.S1) cm_text += s.to_string();
    digests.push_back({{"name", "chain_maps"}, {"digest", fnv1a(cm_text)}, {"verified", cm.ok()}});
    K2IdentityCertificate k2 = check_k2_identity(ctx);
    Json k2j;
    k2j["name"] = "k2_identity";
    k2j["digest"] = fnv1a(scalar_text(k2.kappa) + k2.correction.to_string());
    k2j["verified"] = k2.ok();
    k2j["kappa"] = scalar_text(k2.kappa);
    digests.push_back(k2j);
    if (!pi0_witness) pi0_witness = poisson_check(ctx, pi0());
    digests.push_back({{"name", "pi0_bracket"}, {"digest", pi0_witness->digest}, {"verified", pi0_witness->verified}});
    match = match && cm.ok() && k2.ok() && pi0_witness->verified;
  }
  j["witness_digests"] = digests;

  Json raw;
  for (int d : degrees) raw[key(d)] = table.raw_totals[static_cast<std::size_t>(d)];
  j["raw_totals"] = raw;
  j["conclusive"] = table.conclusive;
  if (config.theta) {
    j["numeric_check"] = {{"theta", config.theta->name()},
                          {"matrices", numeric.matrices},
                          {"mismatches", numeric.mismatches}};
    match = match && numeric.mismatches == 0;
  }
  result.match = match;
  return result;
}

void validate_report(const Json& report) {
  for (const char* field : {"group", "generator", "theta_mode", "sectors", "totals", "paper_comparison", "poisson",
                            "witness_digests"})
    if (!report.contains(field)) throw std::invalid_argument(std::string("report lacks field '") + field + "'");
  if (!report["sectors"].is_array() || report["sectors"].empty())
    throw std::invalid_argument("report has an empty sector list");
}

std::string render(const Json& report, OutputFormat format) {
  validate_report(report);
  std::ostringstream out;
  if (format == OutputFormat::Json) {
    out << report.dump(2) << "\n";
    return out.str();
  }
  const std::string group = report["group"].get<std::string>();
  if (format == OutputFormat::Csv) {
    out << "record,group,label,power,degree,window_dims,stable,raw_dim,invariant_dim,representatives,expected,computed,"
           "match\n";
    for (const auto& s : report["sectors"]) {
      std::string dims, reps;
      for (const auto& w : s["window_dims"])
        dims += (dims.empty() ? "" : ";") + std::to_string(w[0].get<int>()) + ":" + std::to_string(w[1].get<int>());
      for (const auto& r : s["representatives"])
        reps += (reps.empty() ? "" : ";") + std::to_string(r["slot"].get<int>()) + ":" +
                std::to_string(r["support"][0].get<int>()) + ":" + std::to_string(r["support"][1].get<int>());
      out << "sector," << group << ",," << s["power"].get<int>() << "," << s["degree"].get<int>() << "," << dims
          << "," << (s["stable"].get<bool>() ? "true" : "false") << "," << s["raw_dim"].get<int>() << ","
          << s["invariant_dim"].get<int>() << "," << reps << ",,,\n";
    }
    const Json& cmp = report["paper_comparison"];
    for (const auto& [k, v] : cmp["expected"].items()) {
      const bool m = cmp["computed"][k] == v;
      out << "total," << group << "," << k << ",," << k.substr(2) << ",,,,,," << v.get<int>() << ","
          << cmp["computed"][k].get<int>() << "," << (m ? "true" : "false") << "\n";
    }
    if (report["poisson"].contains("structures"))
      for (const auto& s : report["poisson"]["structures"])
        for (int d = 0; d < 4; ++d) {
          const int e = s["expected"][static_cast<std::size_t>(d)].get<int>();
          const int c = s["dims"][static_cast<std::size_t>(d)].get<int>();
          out << "poisson," << group << "," << csv_field(s["label"].get<std::string>()) << ",," << d << ",,,,,," << e << ","
              << c << "," << (e == c ? "true" : "false") << "\n";
        }
    return out.str();
  }
  out << "group " << group << "  generator " << report["generator"].dump() << "  theta " << report["theta_mode"].get<std::string>()
      << "\n";
  for (const auto& s : report["sectors"]) {
    out << "  sector k=" << s["power"].get<int>() << " degree " << s["degree"].get<int>() << ": raw "
        << s["raw_dim"].get<int>() << ", invariant " << s["invariant_dim"].get<int>()
        << (s["stable"].get<bool>() ? ", stable" : ", NOT stable") << ", dims";
    for (const auto& w : s["window_dims"]) out << " " << w[1].get<int>();
    for (const auto& r : s["representatives"])
      out << "  [" << r["slot"].get<int>() << ":" << r["support"][0].get<int>() << "," << r["support"][1].get<int>()
          << "]";
    out << "\n";
  }
  const Json& cmp = report["paper_comparison"];
  for (const auto& [k, v] : cmp["expected"].items())
    out << "  " << k << ": computed " << cmp["computed"][k].get<int>() << ", expected " << v.get<int>() << "\n";
  if (report["poisson"].contains("structures"))
    for (const auto& s : report["poisson"]["structures"])
      out << "  poisson " << s["label"].get<std::string>() << ": dims " << s["dims"].dump() << ", witnesses "
          << s["witnesses"].size() << (s["match"].get<bool>() ? ", match" : ", MISMATCH") << "\n";
  for (const auto& w : report["witness_digests"])
    out << "  witness " << w["name"].get<std::string>() << " " << w["digest"].get<std::string>()
        << (w["verified"].get<bool>() ? " verified" : " FAILED") << "\n";
  out << "  match: " << (cmp["match"].get<bool>() ? "yes" : "no") << "\n";
  return out.str();
}

int run_command(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hochschild and Poisson cohomology of quantum-torus orbifolds"};
  std::string group, theta, format = "json", path;
  std::vector<int> degrees;
  int window = 6;
  bool verify = false, poisson = false, witnesses = false;
  app.add_option("--group", group, "z2|z3|z4|z6")->required();
  app.add_option("--degree", degrees, "degrees 0..2, repeatable or comma separated (default all)")->delimiter(',');
  app.add_option("--window", window, "largest window radius, at least 3");
  app.add_option("--numeric-theta", theta, "sqrt2m1|golden: also rank every matrix in floating point");
  app.add_option("--format", format, "json|csv|text");
  app.add_option("--out", path, "output file (default standard output)");
  app.add_flag("--verify-invariance", verify, "recompute the group action with a second lift and compare");
  app.add_flag("--poisson", poisson, "Poisson structures and Poisson cohomology tables");
  app.add_flag("--witnesses", witnesses, "chain-map, k2 identity and bracket witness digests");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return 64;
  }

  RunConfig config;
  try {
    config.group = parse_subgroup_label(group);
    if (!degrees.empty()) config.degrees = degrees;
    config.max_window = window;
    if (!theta.empty()) config.theta = Theta::parse(theta);
    config.format = parse_format(format);
    config.out = path;
    config.verify_invariance = verify;
    config.poisson = poisson;
    config.witnesses = witnesses;
    validate(config);
  } catch (const std::exception& e) {
    err << "usage error: " << e.what() << "\n";
    return 64;
  }

  try {
    RunResult result = run_pipeline(config);
    const std::string text = render(result.report, config.format);
    if (config.out.empty()) {
      out << text;
    } else {
      std::ofstream file(config.out, std::ios::binary);
      if (!file) {
        err << "error: cannot write " << config.out << "\n";
        return 1;
      }
      file << text;
      if (!file) {
        err << "error: cannot write " << config.out << "\n";
        return 1;
      }
    }
    return result.match ? 0 : 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace qtorus
