// SPDX-License-Identifier: MIT
// Command-line front end: contextuality check, reduction sweep, measurement
// planning, exact eigensolve and built-in demos.

#include <csvqe/contextuality.hpp>
#include <csvqe/eigensolver.hpp>
#include <csvqe/errors.hpp>
#include <csvqe/fixtures.hpp>
#include <csvqe/hamiltonian_io.hpp>
#include <csvqe/measurement.hpp>
#include <csvqe/stabilizer_reduction.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using csvqe::PauliSum;
using csvqe::PauliWord;
using nlohmann::json;

enum ExitCode { kOk = 0, kUsage = 1, kInput = 2, kGuard = 3 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string input;
  std::optional<std::size_t> keep;
  std::string method = "lcu";
  bool legacy = false;
  double epsilon = 1e-3;
  std::uint64_t shots = 0;
  std::uint64_t seed = 7;
  std::size_t restarts = 16;
  std::string output;
  bool csv = false;
  std::string demo;
};

void emit(const Config& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
  } else {
    csvqe::write_text_file(cfg.output, text);
  }
}

void emit_json(const Config& cfg, const json& doc) {
  emit(cfg, doc.dump(2) + "\n");
}

csvqe::HamiltonianFile load_file(const Config& cfg) {
  if (cfg.input.empty()) throw UsageError("--input is required");
  return csvqe::load_hamiltonian(cfg.input);
}

PauliSum load(const Config& cfg) { return load_file(cfg).hamiltonian; }

std::vector<PauliWord> parse_word_list(const std::string& text) {
  std::vector<PauliWord> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(PauliWord::parse(item));
  }
  return out;
}

// Optional metadata keys pin clique representatives and the partitioning
// target, both of which otherwise follow the default ordering rules.
void apply_metadata(const csvqe::Metadata& meta, csvqe::ReductionOptions& o) {
  if (auto it = meta.find("representatives"); it != meta.end()) {
    o.generators.preferred_reps = parse_word_list(it->second);
  }
  if (auto it = meta.find("unitary_target"); it != meta.end()) {
    o.target = PauliWord::parse(it->second);
  }
}

csvqe::ReductionOptions reduction_options(const Config& cfg) {
  csvqe::ReductionOptions o;
  o.method = cfg.method == "seqrot" ? csvqe::Method::SeqRot : csvqe::Method::Lcu;
  o.legacy_full_rotation = cfg.legacy;
  o.optimizer.restarts = cfg.restarts;
  o.optimizer.seed = cfg.seed;
  o.eigen.seed = cfg.seed;
  return o;
}

json words_json(const std::vector<PauliWord>& words) {
  json out = json::array();
  for (const auto& w : words) out.push_back(w.str());
  return out;
}

int cmd_check_contextual(const Config& cfg) {
  const PauliSum h = load(cfg);
  const std::vector<PauliWord> words = h.words();
  const bool contextual = csvqe::is_contextual(words);
  const auto zt = csvqe::partition_commuting(words);
  json sizes = json::array();
  if (!contextual) {
    for (const auto& c : csvqe::decompose_cliques(zt.T)) sizes.push_back(c.size());
  }
  emit_json(cfg, {{"contextual", contextual},
                  {"terms", h.size()},
                  {"z_size", zt.Z.size()},
                  {"clique_sizes", sizes}});
  return kOk;
}

json stage_json(const csvqe::PipelineResult& p) {
  json pipeline = json::array();
  pipeline.push_back({{"stage", "split"},
                      {"noncontextual_terms", p.split.noncontextual.size()},
                      {"contextual_terms", p.split.contextual.size()}});
  pipeline.push_back({{"stage", "structure"},
                      {"Z", words_json(p.structure.Z)},
                      {"reps", words_json(p.structure.reps)},
                      {"G", words_json(p.structure.G)}});
  pipeline.push_back({{"stage", "noncontextual_solve"},
                      {"energy", p.solution.energy},
                      {"q", p.solution.state.q},
                      {"r", p.solution.state.r}});
  json labels = json::array();
  for (std::size_t i = 0; i < p.w_all.size(); ++i) labels.push_back(p.w_all.label(i));
  pipeline.push_back({{"stage", "selection"},
                      {"w_all", labels},
                      {"brute_force", p.selection.brute_force}});
  return pipeline;
}

int cmd_reduce(const Config& cfg) {
  const csvqe::HamiltonianFile file = load_file(cfg);
  const PauliSum& h = file.hamiltonian;
  const std::size_t n = h.n_qubits();
  if (cfg.keep && *cfg.keep > n) {
    throw UsageError("--keep must lie in [0, " + std::to_string(n) + "]");
  }
  csvqe::ReductionOptions opts = reduction_options(cfg);
  apply_metadata(file.metadata, opts);
  const csvqe::PipelineResult p = csvqe::run_pipeline(h, opts);
  const std::size_t fixable = p.w_all.size();
  if (cfg.keep && n - *cfg.keep > fixable) {
    throw UsageError("only " + std::to_string(fixable) +
                     " stabilizers are available; keep at least " +
                     std::to_string(n - fixable) + " qubits");
  }
  csvqe::PipelineReport report;
  report.pipeline = stage_json(p);
  // Rows run from the fully projected level up to the full problem.
  for (std::size_t m = fixable + 1; m-- > 0;) {
    const auto& level = p.selection.levels[m];
    if (cfg.keep && level.qubits != *cfg.keep) continue;
    report.rows.push_back({level.qubits, level.hamiltonian.size(), level.energy,
                           level.energy - p.full_energy});
  }
  if (cfg.csv) {
    emit(cfg, csvqe::report_to_csv(report));
    return kOk;
  }
  json doc = csvqe::report_to_json(report);
  if (cfg.keep) {
    const auto& level = p.selection.levels[n - *cfg.keep];
    json fixed = json::array();
    for (std::size_t i : level.fixed) fixed.push_back(p.w_all.label(i));
    doc["fixed"] = fixed;
    doc["reduced_hamiltonian"] = csvqe::hamiltonian_to_json(level.hamiltonian);
  }
  emit_json(cfg, doc);
  return kOk;
}

int cmd_measure_plan(const Config& cfg) {
  const PauliSum h = load(cfg);
  const csvqe::MeasurementPlan plan = csvqe::build_measurement_plan(h, cfg.epsilon);
  const csvqe::MeasurementReport report = csvqe::measurement_report(h);
  const csvqe::ShotEstimate est = csvqe::estimate_shots(plan);
  json doc = csvqe::report_to_json(report);
  json cliques = json::array();
  for (const auto& c : plan.cliques) {
    cliques.push_back({{"words", words_json(c.words)},
                       {"gamma", c.gamma},
                       {"measured_word", c.measured_word().str()}});
  }
  doc["cliques"] = cliques;
  doc["shots"] = {{"epsilon", cfg.epsilon},
                  {"grouped", est.grouped},
                  {"ungrouped", est.ungrouped},
                  {"ratio", est.ratio},
                  {"bound", est.bound}};
  if (cfg.shots > 0) {
    csvqe::EigenOptions eo;
    eo.seed = cfg.seed;
    const csvqe::GroundState gs = csvqe::ground_state(h, eo);
    const auto sim = csvqe::simulate_shots(gs.vector, plan, cfg.shots, cfg.seed);
    doc["simulation"] = {{"state", "ground"},
                         {"exact_energy", gs.energy},
                         {"estimate", sim.energy},
                         {"standard_error", sim.standard_error},
                         {"seed", cfg.seed},
                         {"shots", cfg.shots}};
  }
  if (cfg.csv) {
    std::ostringstream out;
    out << "clique,size,gamma,single_qubit,cnot\n";
    for (std::size_t j = 0; j < plan.cliques.size(); ++j) {
      const auto g = report.gate_estimates[j];
      out << j << ',' << plan.cliques[j].size() << ',' << plan.cliques[j].gamma
          << ',' << g.single_qubit << ',' << g.cnot << '\n';
    }
    emit(cfg, out.str());
    return kOk;
  }
  emit_json(cfg, doc);
  return kOk;
}

int cmd_eigensolve(const Config& cfg) {
  const PauliSum h = load(cfg);
  csvqe::EigenOptions eo;
  eo.seed = cfg.seed;
  const csvqe::GroundState gs = csvqe::ground_state(h, eo);
  emit_json(cfg, {{"qubits", h.n_qubits()},
                  {"terms", h.size()},
                  {"energy", gs.energy},
                  {"iterations", gs.iterations}});
  return kOk;
}

class Checker {
 public:
  explicit Checker(std::ostream& out) : out_(out) {}

  void check(const std::string& name, bool ok, const std::string& detail) {
    out_ << (ok ? "PASS " : "FAIL ") << name << ": " << detail << '\n';
    failures_ += ok ? 0 : 1;
  }
  void near(const std::string& name, double got, double want, double tol) {
    std::ostringstream d;
    d.precision(8);
    d << got << " (expected " << want << ")";
    check(name, std::abs(got - want) <= tol, d.str());
  }
  void info(const std::string& text) { out_ << "     " << text << '\n'; }
  int failures() const { return failures_; }

 private:
  std::ostream& out_;
  int failures_ = 0;
};

int demo_toy(const Config& cfg) {
  std::ostringstream out;
  Checker c(out);
  const PauliSum h = csvqe::fixtures::toy_hamiltonian();
  out << "Toy Hamiltonian (" << h.size() << " terms):\n  " << h.str(3) << "\n";

  csvqe::ReductionOptions opts = reduction_options(cfg);
  opts.target = PauliWord::parse("YXYI");
  opts.generators.preferred_reps = {PauliWord::parse("XYXI"),
                                    PauliWord::parse("XZXI"),
                                    PauliWord::parse("YXYI")};
  const auto split = csvqe::extract_noncontextual(h);
  c.check("split", split.noncontextual == csvqe::fixtures::toy_noncontextual(),
          "noncontextual part " + split.noncontextual.str(3));
  c.check("contextual", csvqe::is_contextual(h.words()) &&
                            !csvqe::is_contextual(split.accepted),
          "full set contextual, noncontextual part not");

  const auto s = csvqe::analyze_noncontextual(split.accepted, opts.generators);
  c.check("Z", s.Z.size() == 1 && s.Z[0].str() == "IIIZ",
          "Z = " + words_json(s.Z).dump());
  c.check("cliques", s.cliques.size() == 3,
          std::to_string(s.cliques.size()) + " cliques");
  std::vector<std::string> g;
  for (const auto& w : s.G) g.push_back(w.str());
  std::sort(g.begin(), g.end());
  c.check("generators", g == std::vector<std::string>{"IIIZ", "IXYI", "YIYI"},
          "G = " + words_json(s.G).dump());

  const auto sol = csvqe::solve_noncontextual(split.noncontextual, s, opts.optimizer);
  c.near("noncontextual energy", sol.energy, -2.475, 1e-3);
  const std::map<std::string, double> r_expected = {
      {"YXYI", 0.25318483}, {"XYXI", -0.65828059}, {"XZXI", -0.70891756}};
  for (std::size_t j = 0; j < s.reps.size(); ++j) {
    c.near("r[" + s.reps[j].str() + "]", sol.state.r[j],
           r_expected.at(s.reps[j].str()), 1e-4);
  }

  const csvqe::StabilizerSet w_all = csvqe::build_w_all(s, sol.state, opts.target);
  const auto seq = csvqe::build_seqrot(*w_all.A);
  c.near("SeqRot angle 1", seq.steps.at(0).angle, 1.2036225088338255, 1e-6);
  c.near("SeqRot angle 2", seq.steps.at(1).angle, -0.7879622757719398, 1e-6);
  const auto lcu = csvqe::build_lcu(*w_all.A);
  c.near("LCU identity", lcu.identity, 0.79157591, 1e-6);
  for (const auto& [w, a] : lcu.terms) {
    const double want = w.str() == "ZZZI" ? 0.41580383 : -0.44778874;
    c.near("LCU " + w.str(), a.imag(), want, 1e-6);
  }

  const auto p = csvqe::run_pipeline(h, opts);
  const std::vector<double> energies = {-2.475, -2.6495, -2.754, -2.819, -2.819};
  const std::vector<std::vector<std::size_t>> order = {
      {0, 1, 2, 3}, {0, 1, 2}, {1, 2}, {1}, {}};
  for (std::size_t m = 0; m <= 4; ++m) {
    const auto& level = p.selection.levels[4 - m];
    json labels = json::array();
    for (std::size_t i : level.fixed) labels.push_back(w_all.label(i));
    c.near(std::to_string(m) + "-qubit energy", level.energy, energies[m], 1e-3);
    c.check(std::to_string(m) + "-qubit stabilizers", level.fixed == order[m],
            labels.dump() + ", " + std::to_string(level.hamiltonian.size()) +
                " terms");
  }
  out << "1-qubit operator: " << p.selection.levels[3].hamiltonian.str(4) << "\n";
  c.near("1-qubit ground energy", p.selection.levels[3].energy, -2.6495, 1e-3);
  emit(cfg, out.str());
  return c.failures() == 0 ? kOk : kGuard;
}

int demo_peres_mermin(const Config& cfg) {
  const auto pm = csvqe::peres_mermin_demo();
  json lines = json::array();
  for (int s : pm.line_signs) lines.push_back(s);
  emit_json(cfg, {{"quantum_value", pm.quantum_value},
                  {"classical_bound", pm.classical_bound},
                  {"line_signs", lines},
                  {"contextual",
                   csvqe::is_contextual(csvqe::fixtures::peres_mermin_set().words())}});
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Contextual-subspace Hamiltonian reduction"};
  app.require_subcommand(1);
  Config cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--input", cfg.input, "Hamiltonian JSON file");
    sub->add_option("--output", cfg.output, "write output here instead of stdout");
    sub->add_flag("--csv", cfg.csv, "tabular output");
    sub->add_option("--seed", cfg.seed, "seed for every randomized step");
  };
  auto* check = app.add_subcommand("check-contextual", "test a word set for contextuality");
  add_common(check);
  auto* reduce = app.add_subcommand("reduce", "contextual-subspace reduction sweep");
  add_common(reduce);
  reduce->add_option("--keep", cfg.keep, "qubits to keep; omit for a full sweep");
  reduce->add_option("--method", cfg.method, "seqrot or lcu")
      ->check(CLI::IsMember({"seqrot", "lcu"}));
  reduce->add_flag("--legacy-full-rotation", cfg.legacy,
                   "always apply the partitioning rotation");
  reduce->add_option("--restarts", cfg.restarts, "optimizer restarts")
      ->check(CLI::PositiveNumber);
  auto* measure = app.add_subcommand("measure-plan", "anticommuting clique measurement plan");
  add_common(measure);
  measure->add_option("--epsilon", cfg.epsilon, "target precision")
      ->check(CLI::PositiveNumber);
  measure->add_option("--shots", cfg.shots, "simulate this many shots per clique");
  auto* eig = app.add_subcommand("eigensolve", "exact ground energy");
  add_common(eig);
  auto* demo = app.add_subcommand("demo", "built-in walkthroughs");
  demo->add_option("name", cfg.demo, "toy or peres-mermin")
      ->required()
      ->check(CLI::IsMember({"toy", "peres-mermin"}));
  demo->add_option("--output", cfg.output, "write output here instead of stdout");
  demo->add_option("--seed", cfg.seed, "optimizer seed");
  demo->add_option("--method", cfg.method, "seqrot or lcu")
      ->check(CLI::IsMember({"seqrot", "lcu"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*check) return cmd_check_contextual(cfg);
    if (*reduce) return cmd_reduce(cfg);
    if (*measure) return cmd_measure_plan(cfg);
    if (*eig) return cmd_eigensolve(cfg);
    if (cfg.demo == "toy") return demo_toy(cfg);
    return demo_peres_mermin(cfg);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const csvqe::InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInput;
  } catch (const csvqe::IoError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInput;
  } catch (const csvqe::GuardError& e) {
    std::cerr << "guard: " << e.what() << '\n';
    return kGuard;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kGuard;
  }
}
