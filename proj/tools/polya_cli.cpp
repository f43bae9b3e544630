// polya: compose, report, simulate and verify generalised Pólya urns.
#include "polya/algebra.hpp"
#include "polya/analysis.hpp"
#include "polya/error.hpp"
#include "polya/intensity.hpp"
#include "polya/json_io.hpp"
#include "polya/laws.hpp"
#include "polya/simulator.hpp"
#include "polya/spectra.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using namespace polya;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInputError = 2;

struct Options {
  std::uint64_t seed = 0;
  double tol = kDefaultSpectrumTol;
  std::uint64_t steps = 1000;
  std::uint32_t replicas = 1;
  std::uint32_t trials = 100;
  std::uint32_t cap = static_cast<std::uint32_t>(kLawSearchCap);
  std::uint64_t stride = 0;
  std::string out;
  bool pretty = false;
  std::string op;
  std::string suite;
  std::vector<std::string> inputs;
};

std::uint64_t default_seed() {
  const char* env = std::getenv("POLYA_SEED");
  if (env == nullptr || *env == '\0') return 0;
  try {
    std::size_t used = 0;
    const std::uint64_t seed = std::stoull(env, &used);
    if (used == std::string(env).size()) return seed;
  } catch (const std::exception&) {
  }
  throw Error(ErrorKind::Parse, "POLYA_SEED must be an unsigned 64-bit integer");
}

void emit(const Json& doc, const Options& opt) {
  const std::string text = doc.dump(opt.pretty ? 2 : -1) + "\n";
  if (opt.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(opt.out);
  if (!file) throw Error(ErrorKind::InvalidArgument, "cannot write " + opt.out);
  file << text;
}

std::string fmt(double x) {
  std::ostringstream s;
  s << std::setprecision(6) << x;
  return s.str();
}

std::string complex_text(std::complex<double> z) {
  if (z.imag() == 0.0) return fmt(z.real());
  return fmt(z.real()) + (z.imag() < 0 ? " - " : " + ") + fmt(std::abs(z.imag())) + "i";
}

int cmd_compose(const Options& opt) {
  std::vector<UrnDocument> docs;
  for (const auto& path : opt.inputs) docs.push_back(read_urn_file(path));
  UrnDocument result{docs.front().urn, std::nullopt};
  for (std::size_t k = 1; k < docs.size(); ++k)
    result.urn = opt.op == "union" ? disjoint_union(result.urn, docs[k].urn)
                                   : product(result.urn, docs[k].urn);
  if (opt.op == "product" && docs.size() == 2) result.factors.emplace(docs[0].urn, docs[1].urn);
  emit(document_to_json(result), opt);
  return kExitOk;
}

Json report_json(const UrnDocument& doc, double tol) {
  const PolyaUrn& urn = doc.urn;
  const RationalMatrix a = intensity_matrix(urn);
  Json out;
  out["urn_hash"] = urn_hash(urn);
  Json colours = Json::array();
  for (std::size_t i = 0; i < urn.colour_count(); ++i) colours.push_back(urn.label(i));
  out["colours"] = colours;
  out["intensity"] = matrix_to_json(a);
  out["spectrum"] = spectrum_to_json(spectrum(a, tol));
  out["classes"] = partition_to_json(dominance_partition(a));
  out["assumptions"] = assumptions_to_json(check_assumptions(urn, tol));
  if (doc.factors) {
    try {
      out["limit"] = limit_to_json(limit_prediction(doc.factors->first, doc.factors->second, tol));
    } catch (const Error& e) {
      out["limit"] = Json{{"error", e.what()}};
    }
  }
  return out;
}

void print_report(const Json& r, std::ostream& os) {
  const auto& colours = r["colours"];
  os << "urn " << r["urn_hash"].get<std::string>() << ", " << colours.size() << " colours\n\n";
  os << "intensity (column = drawn colour)\n";
  std::size_t width = 4;
  for (const auto& row : r["intensity"])
    for (const auto& x : row) width = std::max(width, x.get<std::string>().size() + 2);
  for (const auto& c : colours) width = std::max(width, c.get<std::string>().size() + 2);
  os << std::setw(static_cast<int>(width)) << "";
  for (const auto& c : colours) os << std::setw(static_cast<int>(width)) << c.get<std::string>();
  os << "\n";
  for (std::size_t i = 0; i < colours.size(); ++i) {
    os << std::setw(static_cast<int>(width)) << colours[i].get<std::string>();
    for (const auto& x : r["intensity"][i]) os << std::setw(static_cast<int>(width)) << x.get<std::string>();
    os << "\n";
  }
  os << "\nspectrum\n";
  for (const auto& e : r["spectrum"])
    os << "  " << complex_text({e["re"].get<double>(), e["im"].get<double>()}) << "  x"
       << e["mult"].get<std::size_t>() << "\n";
  os << "\ndominance classes\n";
  const auto& classes = r["classes"]["classes"];
  for (std::size_t s = 0; s < classes.size(); ++s) {
    os << "  C" << s << " = {";
    for (std::size_t k = 0; k < classes[s].size(); ++k)
      os << (k ? ", " : "") << colours[classes[s][k].get<std::size_t>()].get<std::string>();
    os << "}\n";
  }
  const auto& dom = r["classes"]["dominating_class"];
  os << "  dominating class: " << (dom.is_null() ? "none" : "C" + std::to_string(dom.get<std::size_t>()))
     << "\n\nassumptions\n";
  for (int k = 1; k <= 6; ++k) {
    const auto& a = r["assumptions"]["A" + std::to_string(k)];
    os << "  A" << k << "  " << (a["holds"].get<bool>() ? "holds " : "fails ") << " "
       << a["detail"].get<std::string>() << "\n";
  }
  if (r.contains("limit")) {
    os << "\npredicted limit of X(n)/n\n";
    if (r["limit"].contains("error")) {
      os << "  " << r["limit"]["error"].get<std::string>() << "\n";
    } else {
      for (std::size_t i = 0; i < r["limit"]["limit"].size(); ++i)
        os << "  " << colours[i].get<std::string>() << "  " << fmt(r["limit"]["limit"][i].get<double>())
           << "\n";
    }
  }
}

int cmd_report(const Options& opt) {
  const UrnDocument doc = read_urn_file(opt.inputs.front());
  const Json r = report_json(doc, opt.tol);
  if (!opt.pretty) {
    emit(r, opt);
    return kExitOk;
  }
  if (opt.out.empty()) {
    print_report(r, std::cout);
  } else {
    std::ofstream file(opt.out);
    if (!file) throw Error(ErrorKind::InvalidArgument, "cannot write " + opt.out);
    print_report(r, file);
  }
  return kExitOk;
}

int cmd_simulate(const Options& opt) {
  const UrnDocument doc = read_urn_file(opt.inputs.front());
  const PolyaUrn& urn = doc.urn;
  if (opt.replicas == 0) throw Error(ErrorKind::InvalidArgument, "--replicas must be at least 1");
  const std::uint64_t stride = opt.stride > 0 ? opt.stride : std::max<std::uint64_t>(1, opt.steps / 1000);
  const fs::path dir = opt.out.empty() ? fs::path("simulation") : fs::path(opt.out);
  fs::create_directories(dir);

  const Simulator sim(urn);
  const auto traces = sim.run_replicas(opt.steps, opt.seed, opt.replicas, RunOptions{stride, false});
  const std::string hash = urn_hash(urn);
  const std::size_t q = urn.colour_count();

  const int digits = static_cast<int>(std::to_string(traces.size() - 1).size());
  for (std::size_t r = 0; r < traces.size(); ++r) {
    std::ostringstream name;
    name << "replica_" << std::setw(digits) << std::setfill('0') << r << ".jsonl";
    std::ofstream file(dir / name.str());
    file << trace_to_jsonl(traces[r], hash);
  }

  std::ofstream csv(dir / "composition.csv");
  csv << "replica,step";
  for (std::size_t i = 0; i < q; ++i) csv << ",\"" << urn.label(i) << "\"";
  csv << "\n" << std::setprecision(17);
  for (std::size_t r = 0; r < traces.size(); ++r) {
    for (const auto& s : traces[r].states) {
      if (s.step == 0) continue;
      csv << r << "," << s.step;
      for (auto c : s.counts) csv << "," << static_cast<double>(c) / static_cast<double>(s.step);
      csv << "\n";
    }
  }

  Json summary;
  summary["urn_hash"] = hash;
  summary["rng"] = std::string(StreamRng::kName);
  summary["seed"] = opt.seed;
  summary["steps"] = opt.steps;
  summary["replicas"] = opt.replicas;
  summary["stride"] = stride;
  std::size_t extinct = 0;
  std::vector<std::uint64_t> final_steps;
  for (const auto& t : traces) {
    extinct += t.final_state().extinct ? 1 : 0;
    final_steps.push_back(t.final_state().step);
  }
  summary["extinct_replicas"] = extinct;
  summary["final_steps"] = final_steps;

  std::vector<double> mean(q, 0.0);
  bool zero_steps = false;
  for (const auto& t : traces) {
    try {
      const auto c = normalized_composition(t);
      for (std::size_t i = 0; i < q; ++i) mean[i] += c[i] / static_cast<double>(traces.size());
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::ZeroSteps) throw;
      zero_steps = true;
    }
  }
  summary["status"] = zero_steps ? "ZeroSteps" : "ok";
  summary["mean_composition"] = zero_steps ? Json(nullptr) : Json(mean);
  if (doc.factors) {
    try {
      const LimitPrediction p = limit_prediction(doc.factors->first, doc.factors->second, opt.tol);
      summary["predicted_limit"] = p.limit;
      if (!zero_steps && p.limit.size() == q) {
        std::vector<double> rel(q);
        double worst = 0.0;
        for (std::size_t i = 0; i < q; ++i) {
          rel[i] = p.limit[i] != 0.0 ? std::abs(mean[i] - p.limit[i]) / std::abs(p.limit[i])
                                     : std::abs(mean[i]);
          worst = std::max(worst, rel[i]);
        }
        summary["relative_error"] = rel;
        summary["max_relative_error"] = worst;
      }
    } catch (const Error& e) {
      summary["predicted_limit"] = nullptr;
      summary["prediction_error"] = e.what();
    }
  }
  write_json_file(dir / "summary.json", summary);
  std::cout << summary.dump(opt.pretty ? 2 : -1) << "\n";
  return kExitOk;
}

void merge(LawReport& into, const LawReport& from, const std::string& prefix = {}) {
  for (auto law : from.laws) {
    law.name = prefix + law.name;
    into.laws.push_back(std::move(law));
  }
}

int cmd_verify(const Options& opt, bool corrupt) {
  if (opt.trials == 0) throw Error(ErrorKind::InvalidArgument, "--trials must be at least 1");
  const std::size_t trials = opt.trials;
  LawReport report;
  if (opt.suite == "semiring") {
    const UrnOperations ops = corrupt ? corrupted_product_operations() : UrnOperations{};
    report = check_semiring_laws({}, trials, opt.seed, ops, opt.cap);
  } else if (opt.suite == "phi") {
    report = check_phi_trials({}, trials, opt.seed, opt.cap);
  } else if (opt.suite == "sigma") {
    report = check_sigma_trials(4, trials, opt.seed, opt.tol);
  } else if (opt.suite == "matrix-laws") {
    report = check_matrix_semiring_laws({}, trials, opt.seed, {}, opt.cap);
    merge(report, check_power_identity({2, 3}, 4, trials, opt.seed));
  } else if (opt.suite == "graph") {
    report = check_walk_products(standard_graph_corpus(), opt.cap);
    merge(report,
          check_walk_products({{"K1+K2", SimpleGraph(3, {{1, 2}})}, {"K2", SimpleGraph::complete(2)}},
                              opt.cap),
          "isolated_");
  } else if (opt.suite == "assumptions") {
    report = check_product_structure({}, trials, trials, opt.seed, 20000, opt.tol);
    merge(report, check_B_entrywise({}, trials, opt.seed));
  }
  Json out;
  out["suite"] = opt.suite;
  out["seed"] = opt.seed;
  out["trials"] = opt.trials;
  out["cap"] = opt.cap;
  out["tol"] = opt.tol;
  out["pass"] = report.pass();
  out["laws"] = law_report_to_json(report);
  emit(out, opt);
  return report.pass() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Compose, analyse, simulate and verify generalised Pólya urns"};
  app.require_subcommand(1);
  Options opt;
  bool corrupt = false;

  try {
    opt.seed = default_seed();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  auto positive = CLI::PositiveNumber;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", opt.out, "Output path");
    sub->add_flag("--pretty", opt.pretty, "Human-readable output");
  };

  auto* compose = app.add_subcommand("compose", "Disjoint union or product of urn files");
  compose->add_option("op", opt.op, "union or product")->required()->check(CLI::IsMember({"union", "product"}));
  compose->add_option("files", opt.inputs, "Urn files")->required()->check(CLI::ExistingFile);
  add_common(compose);

  auto* report = app.add_subcommand("report", "Intensity, spectrum, classes and assumptions");
  report->add_option("file", opt.inputs, "Urn file")->required()->expected(1)->check(CLI::ExistingFile);
  report->add_option("--tol", opt.tol, "Eigenvalue clustering tolerance")->check(positive);
  add_common(report);

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo replicas of an urn");
  simulate->add_option("file", opt.inputs, "Urn file")->required()->expected(1)->check(CLI::ExistingFile);
  simulate->add_option("--steps", opt.steps, "Draws per replica");
  simulate->add_option("--seed", opt.seed, "Root seed (default $POLYA_SEED or 0)");
  simulate->add_option("--replicas", opt.replicas, "Number of replicas");
  simulate->add_option("--stride", opt.stride, "Snapshot stride (default steps/1000)");
  simulate->add_option("--tol", opt.tol, "Tolerance for the limit prediction")->check(positive);
  add_common(simulate);

  auto* verify = app.add_subcommand("verify", "Randomised law and morphism checks");
  verify->add_option("suite", opt.suite, "semiring, phi, sigma, matrix-laws, graph or assumptions")
      ->required()
      ->check(CLI::IsMember({"semiring", "phi", "sigma", "matrix-laws", "graph", "assumptions"}));
  verify->add_option("--trials", opt.trials, "Random trials");
  verify->add_option("--seed", opt.seed, "Root seed (default $POLYA_SEED or 0)");
  verify->add_option("--tol", opt.tol, "Spectrum matching tolerance")->check(positive);
  verify->add_option("--cap", opt.cap, "Isomorphism and permutation search cap");
  verify->add_flag("--corrupt-product", corrupt, "Test fixture: use a product with a wrong mixture weight")
      ->group("");
  add_common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*compose) return cmd_compose(opt);
    if (*report) return cmd_report(opt);
    if (*simulate) return cmd_simulate(opt);
    if (*verify) return cmd_verify(opt, corrupt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
