#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "shallow/errors.hpp"
#include "shallow/generators.hpp"
#include "shallow/graph6.hpp"
#include "shallow/harness.hpp"
#include "shallow/report.hpp"

namespace {

enum Exit { kOk = 0, kViolation = 1, kInputError = 2, kCapExceeded = 3 };

struct Globals {
  bool json = false;
  std::optional<int> max_vertices;
  int threads = 1;
  bool force = false;
};

struct ComputeArgs {
  std::string param = "all";
  std::string radius = "1";
  int t = 1;
  std::string input = "-";
};

struct VerifyArgs {
  std::string suite = "all";
  int rmax = 2;
  int tmax = 3;
  int d = 3;
  int s = 0;
  std::string input = "-";
  bool collect = false;
  bool summary = false;
  bool timings = false;
  bool witnesses = false;
  bool inject_fault = false;
  bool compare_disjoint = false;
};

struct GenArgs {
  std::string family;
  std::optional<int> n;
  std::optional<int> t;
  std::optional<double> p;
  std::uint64_t seed = 0;
};

shallow::SearchLimits limits_from(const Globals& g) {
  auto limits = shallow::SearchLimits::from_environment();
  if (g.max_vertices) limits.max_vertices = *g.max_vertices;
  limits.force = g.force;
  return limits;
}

// Opens `path`, with "-" meaning standard input.
std::istream& open_input(const std::string& path, std::ifstream& file) {
  if (path == "-") return std::cin;
  file.open(path);
  if (!file) throw shallow::InputError("cannot open input '" + path + "'");
  return file;
}

int outcome_code(const shallow::RunOutcome& o) {
  if (o.violations > 0) return kViolation;
  if (o.skipped_parameters > 0) return kCapExceeded;
  return kOk;
}

int run_compute(const Globals& g, const ComputeArgs& a, bool witnesses) {
  const shallow::Depth r = shallow::Depth::parse(a.radius);
  if (a.t < 1) throw shallow::InputError("--t must be at least 1");
  std::optional<shallow::Parameter> param;
  if (a.param != "all") {
    param = shallow::parse_parameter(a.param);
    if (!param) throw shallow::InputError("unknown parameter '" + a.param + "'");
  }
  shallow::RunConfig config;
  config.options.limits = limits_from(g);
  config.threads = g.threads;
  config.json = g.json;
  config.include_witnesses = witnesses;
  config.collect = true;
  shallow::GraphJob job = [&](shallow::GraphAnalysis& analysis) {
    return std::vector<shallow::GraphReport>{param ? shallow::compute_one(analysis, *param, r, a.t)
                                                   : shallow::compute_all(analysis, r, a.t)};
  };
  std::ifstream file;
  auto outcome = shallow::run_graphs(open_input(a.input, file), job, config, std::cout, std::cerr);
  return outcome_code(outcome);
}

std::vector<shallow::Suite> corpus_suites(const std::string& name) {
  using shallow::Suite;
  if (name == "all") return {Suite::unbounded, Suite::radius, Suite::chain};
  if (name == "unbounded" || name == "thm31") return {Suite::unbounded};
  if (name == "radius" || name == "thm32") return {Suite::radius};
  if (name == "chain") return {Suite::chain};
  return {};
}

int run_high_girth(const Globals& g, const VerifyArgs& a) {
  auto rep = shallow::high_girth_counterexample(a.d, std::max(1, a.rmax), a.s, limits_from(g));
  std::cout << (g.json ? shallow::high_girth_json(rep) : shallow::high_girth_plain(rep)) << '\n';
  if (!rep.holds) {
    std::cerr << "violation: high-girth suite failed for " << rep.graph_name << '\n';
    return kViolation;
  }
  return kOk;
}

int run_verify(const Globals& g, const VerifyArgs& a) {
  const bool high_girth = a.suite == "high-girth" || a.suite == "lemma41" || a.suite == "all";
  auto suites = corpus_suites(a.suite);
  if (suites.empty() && !high_girth) throw shallow::InputError("unknown suite '" + a.suite + "'");
  if (a.rmax < 0 || a.tmax < 1) throw shallow::InputError("--rmax must be >= 0 and --tmax >= 1");

  int code = kOk;
  if (!suites.empty()) {
    shallow::RunConfig config;
    config.options.limits = limits_from(g);
    config.options.inject_fault = a.inject_fault;
    config.options.compare_disjoint_well = a.compare_disjoint;
    config.threads = g.threads;
    config.json = g.json;
    config.collect = a.collect;
    config.timings = a.timings;
    config.include_witnesses = a.witnesses;
    shallow::Summary summary;
    const auto start = std::chrono::steady_clock::now();
    std::ifstream file;
    auto outcome = shallow::run_graphs(open_input(a.input, file), shallow::suite_job(suites, a.rmax, a.tmax), config,
                                       std::cout, std::cerr, &summary);
    summary.set_runtime_ms(
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count());
    if (a.summary) std::cerr << summary.table();
    if (outcome.stopped_early) std::cerr << "stopped after the first violation (use --collect to continue)\n";
    code = outcome_code(outcome);
  }
  if (high_girth && (code == kOk || a.collect)) {
    int hg = run_high_girth(g, a);
    if (code == kOk || hg == kViolation) code = hg;
  }
  return code;
}

int run_gen(const Globals& g, const GenArgs& a) {
  shallow::Graph graph = shallow::generate(a.family, {a.n, a.t, a.p, a.seed});
  (void)g;
  std::cout << shallow::encode_graph6(graph) << '\n';
  return kOk;
}

int run_encode(const std::string& input) {
  std::ifstream file;
  shallow::read_graph6_stream(open_input(input, file), [](int, std::string_view, shallow::Graph graph) {
    std::cout << shallow::encode_graph6(shallow::canonical_form(graph)) << '\n';
  });
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact bounded-radius graph parameters: brambles, linkedness, shallow minors, coloring numbers"};
  app.require_subcommand(1);
  Globals globals;
  app.add_flag("--json", globals.json, "Emit JSON lines instead of plain key=value lines");
  app.add_option("--max-vertices", globals.max_vertices, "Vertex cap (default 16, env SHALLOW_MAX_VERTICES)")
      ->check(CLI::Range(1, 64));
  app.add_option("--threads", globals.threads, "Worker threads (output order never depends on it)")
      ->check(CLI::Range(1, 256));
  app.add_flag("--force", globals.force, "Run exhaustive searches above the 10-vertex refusal threshold");

  const std::vector<std::string> params{"scol", "bn", "bnt", "tn", "link", "well", "welld", "omega", "nabla",
                                        "grid", "tw", "all"};
  ComputeArgs compute;
  ComputeArgs witness;
  for (auto [name, args, help] : {std::tuple{"compute", &compute, "Compute parameters of each input graph"},
                                  std::tuple{"witness", &witness, "Like compute, always emitting witnesses"}}) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--param", args->param, "Parameter to compute")->check(CLI::IsMember(params));
    sub->add_option("--radius", args->radius, "Radius: a natural number or inf");
    sub->add_option("--t", args->t, "Intersection parameter for bnt");
    sub->add_option("--input", args->input, "graph6 file, or - for standard input");
  }

  VerifyArgs verify;
  auto* ver = app.add_subcommand("verify", "Check the parameter inequalities on each input graph");
  ver->add_option("--suite", verify.suite, "unbounded | radius | chain | high-girth | all")
      ->check(CLI::IsMember({"unbounded", "radius", "chain", "high-girth", "all", "thm31", "thm32", "lemma41"}));
  ver->add_option("--rmax", verify.rmax, "Largest radius checked (radius >= 1 for chain and high-girth)");
  ver->add_option("--tmax", verify.tmax, "Largest t checked");
  ver->add_option("--d", verify.d, "High-girth suite: minimum degree");
  ver->add_option("--s", verify.s, "High-girth suite: bramble radius");
  ver->add_option("--input", verify.input, "graph6 file, or - for standard input");
  ver->add_flag("--collect", verify.collect, "Keep going after a violation");
  ver->add_flag("--summary", verify.summary, "Print a per-item summary table to standard error");
  ver->add_flag("--timings", verify.timings, "Include per-parameter timings (not deterministic)");
  ver->add_flag("--witnesses", verify.witnesses, "Embed witnesses in every record");
  ver->add_flag("--inject-fault", verify.inject_fault, "Self-test: corrupt bramble certificates before checking");
  ver->add_flag("--compare-disjoint", verify.compare_disjoint, "Also compute well-linkedness with disjoint A, B");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a graph of a named family as graph6");
  gen_cmd->add_option("--family", gen.family, "complete, path, cycle, grid, petersen, heawood, mcgee, "
                                              "tutte_coxeter, tutte_12_cage, gnp")
      ->required();
  gen_cmd->add_option("--n", gen.n, "Vertex count");
  gen_cmd->add_option("--t", gen.t, "Grid side");
  gen_cmd->add_option("--p", gen.p, "Edge probability for gnp")->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("--seed", gen.seed, "Random seed");

  std::string encode_input = "-";
  auto* enc = app.add_subcommand("encode", "Canonicalize graph6 input (at most 9 vertices)");
  enc->add_option("--input", encode_input, "graph6 file, or - for standard input");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    const std::string verb = app.get_subcommands().front()->get_name();
    if (verb == "compute") return run_compute(globals, compute, false);
    if (verb == "witness") return run_compute(globals, witness, true);
    if (verb == "verify") return run_verify(globals, verify);
    if (verb == "gen") return run_gen(globals, gen);
    return run_encode(encode_input);
  } catch (const shallow::CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const shallow::InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const shallow::InvalidArgument& e) {
    std::cerr << "invalid argument: " << e.what() << '\n';
    return kInputError;
  } catch (const shallow::ProofViolation& e) {
    std::cerr << "violation: " << e.what() << '\n';
    return kViolation;
  }
}
