#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <json.hpp>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "oracles.hpp"
#include "shallow/bramble.hpp"
#include "shallow/coloring.hpp"
#include "shallow/constructions.hpp"
#include "shallow/errors.hpp"
#include "shallow/generators.hpp"
#include "shallow/graph6.hpp"
#include "shallow/harness.hpp"
#include "shallow/linkedness.hpp"
#include "shallow/minors.hpp"
#include "shallow/witness_io.hpp"

using namespace shallow;
using Json = nlohmann::ordered_json;
using oracle::Mask;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void report(int id, const char* title, const std::function<Outcome()>& body) {
  auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!out.pass) ++failures;
  std::printf("%s %d %s: %s (%.1fs)\n", out.pass ? "PASS" : "FAIL", id, title, out.detail.c_str(), secs);
  std::fflush(stdout);
}

std::string corpus_text(const std::string& name) {
  std::string text;
  for (const auto& line : testing_corpus::lines(name)) text += line + "\n";
  return text;
}

RunOutcome run(const std::string& input, const GraphJob& job, RunConfig config, std::string* out_text = nullptr,
               std::string* diag_text = nullptr) {
  std::istringstream in(input);
  std::ostringstream out, diag;
  RunOutcome o = run_graphs(in, job, config, out, diag);
  if (out_text) *out_text = out.str();
  if (diag_text) *diag_text = diag.str();
  return o;
}

int oracle_depth(Depth d) { return d.is_infinite() ? -1 : static_cast<int>(d.value()); }

std::string first_line(const std::string& text) { return text.substr(0, text.find('\n')); }

Outcome exhaustive_radius_suite() {
  const auto graphs = testing_corpus::load("connected_le6.g6");
  int six = 0;
  for (const Graph& g : graphs) six += g.vertex_count() == 6;
  std::string diag;
  RunConfig config;
  config.collect = true;
  RunOutcome o = run(corpus_text("connected_le6.g6"), suite_job({Suite::radius}, 2, 3), config, nullptr, &diag);
  std::string problems;
  if (o.violations != 0 || o.skipped_parameters != 0) problems = first_line(diag);

  // Cross-check the harness values against brute force.
  int compared = 0;
  for (const Graph& g : graphs) {
    GraphAnalysis a(g);
    const int n = g.vertex_count();
    for (int r = 0; r <= 2; ++r) {
      auto value = [&](Parameter p, int t = 0) { return *a.get(p, Depth(r), t).value; };
      auto expect = [&](const char* what, Rational got, int want) {
        ++compared;
        if (got != Rational(want) && problems.empty())
          problems = encode_graph6(g) + " " + what + "_" + std::to_string(r) + " = " + got.to_string() +
                     ", oracle " + std::to_string(want);
      };
      expect("scol", value(Parameter::scol), oracle::scol(g, r));
      expect("omega", value(Parameter::omega), oracle::shallow_clique(g, r));
      expect("link", value(Parameter::link), oracle::linkedness(g, r));
      if (n <= 5) expect("well", value(Parameter::well), oracle::well_linkedness(g, r));
      if (n <= 4) {
        expect("bn", value(Parameter::bn), oracle::bramble_number(g, r));
        expect("tn", value(Parameter::tn), oracle::bramble_number(g, r, 1, true));
        for (int t = 2; t <= 3; ++t) expect("bnt", value(Parameter::bnt, t), oracle::bramble_number(g, r, t));
      }
    }
  }
  std::string detail = std::to_string(o.graphs) + " graphs (" + std::to_string(six) + " on 6 vertices), " +
                       std::to_string(o.records) + " records, " + std::to_string(o.violations) + " violations, " +
                       std::to_string(compared) + " values matched brute force";
  if (!problems.empty()) detail += "; " + problems;
  return {problems.empty() && o.graphs == static_cast<int>(graphs.size()), detail};
}

Outcome duality() {
  int checked = 0;
  std::string problem;
  for (const Graph& g : testing_corpus::load("all_le6.g6")) {
    GraphAnalysis a(g);
    Rational bn = *a.get(Parameter::bn, Depth::infinity()).value;
    Rational scol = *a.get(Parameter::scol, Depth::infinity()).value;
    int tw = oracle::treewidth(g);
    int tw_dp = treewidth_exact(g);
    ++checked;
    if ((bn != Rational(tw + 1) || scol != Rational(tw + 1) || tw_dp != tw) && problem.empty())
      problem = encode_graph6(g) + ": bn=" + bn.to_string() + " scol=" + scol.to_string() +
                " tw+1=" + std::to_string(tw + 1) + " dp=" + std::to_string(tw_dp);
  }
  return {problem.empty(), std::to_string(checked) + " graphs, bn_inf = scol_inf = tw+1" +
                               (problem.empty() ? "" : "; " + problem)};
}

Outcome depth_zero() {
  int checked = 0;
  std::string problem;
  for (const Graph& g : testing_corpus::load("all_le6.g6")) {
    GraphAnalysis a(g);
    auto at0 = [&](Parameter p) { return *a.get(p, Depth(0)).value; };
    const Rational omega(oracle::clique_number(g));
    const Rational one(1);
    ++checked;
    bool ok = at0(Parameter::bn) == omega && at0(Parameter::omega) == omega && at0(Parameter::scol) == one &&
              at0(Parameter::link) == one && at0(Parameter::well) == one;
    if (!ok && problem.empty()) problem = encode_graph6(g);
  }
  return {problem.empty(), std::to_string(checked) + " graphs" + (problem.empty() ? "" : "; first failure " + problem)};
}

std::vector<Mask> masks(const std::vector<VertexSet>& sets) {
  std::vector<Mask> out;
  for (VertexSet s : sets) out.push_back(s.bits());
  return out;
}

bool hits_all(Mask x, const std::vector<Mask>& family) {
  for (Mask e : family)
    if ((e & x) == 0) return false;
  return true;
}

Outcome constructions() {
  std::mt19937_64 rng(20261018);
  int brambles = 0, orders = 0, models = 0, lifts = 0, tight = 0;
  std::string problem;
  auto fail = [&](const Graph& g, int r, const std::string& what) {
    if (problem.empty()) problem = encode_graph6(g) + " r=" + std::to_string(r) + ": " + what;
  };
  for (const Graph& g : testing_corpus::load("connected_le6.g6")) {
    const int n = g.vertex_count();
    for (int r = 0; r <= 2; ++r) {
      BrambleNumber bn = bramble_number(g, Depth(r));
      const auto family = masks(bn.witness.elements);
      ++brambles;

      std::vector<int> sequence(n);
      for (int i = 0; i < n; ++i) sequence[i] = i;
      for (int sample = 0; sample < 20; ++sample) {
        std::shuffle(sequence.begin(), sequence.end(), rng);
        LinearOrder order(sequence);
        std::vector<int> position(n);
        for (int i = 0; i < n; ++i) position[sequence[i]] = i;
        try {
          OrderedHittingSet h = hitting_set_from_order(g, bn.witness, order, Depth(r));
          Mask reach = oracle::sreach(g, 4 * r + 1, position, h.pivot);
          if (!hits_all(h.hitting_set.bits(), family)) fail(g, r, "ordered set misses an element");
          if ((h.hitting_set.bits() & ~reach) != 0) fail(g, r, "ordered set leaves SReach[4r+1]");
        } catch (const ProofViolation& e) {
          fail(g, r, e.what());
        }
        ++orders;
      }

      try {
        CliqueModelTrace trace = clique_model_from_bramble(g, bn.witness, Depth(r));
        const auto sets = masks(trace.model.branch_sets);
        const int k = static_cast<int>(sets.size());
        Mask all = 0;
        bool disjoint = true;
        for (Mask m : sets) {
          disjoint = disjoint && (all & m) == 0;
          all |= m;
        }
        const int omega = oracle::shallow_clique(g, 5 * r + 1);
        if (!disjoint || !oracle::branch_sets_ok(g, sets, 5 * r + 1) || oracle::contracted_edges(g, sets) != k * (k - 1) / 2)
          fail(g, r, "clique model invalid");
        if (!hits_all(all, family)) fail(g, r, "clique model misses an element");
        if (oracle::popcount(all) > (5 * r + 1) * omega * omega) fail(g, r, "clique model too large");
        tight += trace.within_tight_bound;
        ++models;
      } catch (const ProofViolation& e) {
        fail(g, r, e.what());
      }

      for (int t = 1; t <= 3; ++t) {
        try {
          Bramble lifted = lift_to_t_bramble(g, bn.witness, bn.certificate, Depth(r), t);
          const auto lf = masks(lifted.elements);
          if (!oracle::is_bramble(g, lf, 3 * r + 1) || !oracle::t_intersecting(lf, t))
            fail(g, r, "lift is not a t-bramble for t=" + std::to_string(t));
          if (oracle::min_hitting_set(g, lf) < (bn.value + t - 1) / t) fail(g, r, "lift order too small");
        } catch (const ProofViolation& e) {
          fail(g, r, e.what());
        }
        ++lifts;
      }
    }
  }
  std::string detail = std::to_string(brambles) + " brambles, " + std::to_string(orders) + " sampled orders, " +
                       std::to_string(models) + " clique models (" + std::to_string(tight) +
                       " within the tight size bound), " + std::to_string(lifts) + " lifts";
  if (!problem.empty()) detail += "; " + problem;
  return {problem.empty(), detail};
}

Outcome high_girth() {
  SearchLimits limits;
  auto start = std::chrono::steady_clock::now();
  HighGirthReport p = high_girth_counterexample(3, 1, 0, limits);
  HighGirthReport c = high_girth_counterexample(3, 1, 1, limits);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  bool ok = p.graph_name == "petersen" && p.girth == 5 && p.scol_1 == 4 && p.bn_s == 2 &&
            p.bn_verdict == "brute-forced" && p.holds;
  ok = ok && c.graph_name == "tutte_12_cage" && c.girth == 12 && c.degeneracy == 3 && c.bn_s == 2 &&
       c.bn_verdict == "structural, not brute-forced" && !c.derivation.empty() && c.holds;
  ok = ok && secs < 60;
  char buf[200];
  std::snprintf(buf, sizeof buf, "petersen girth %d scol_1 %d bn_0 %d (%s); tutte_12_cage girth %d degeneracy %d bn_1 %d (%s)",
                p.girth, p.scol_1.value_or(-1), p.bn_s, p.bn_verdict.c_str(), c.girth, c.degeneracy, c.bn_s,
                c.bn_verdict.c_str());
  return {ok, buf};
}

Outcome chain_suite() {
  std::string out, diag;
  RunConfig config;
  config.collect = true;
  RunOutcome o = run(corpus_text("connected_le6.g6"), suite_job({Suite::chain}, 1, 1), config, &out, &diag);
  int clamped = 0, records = 0;
  std::istringstream lines(out);
  for (std::string line; std::getline(lines, line); ++records)
    clamped += !Json::parse(line)["clamps"].empty();
  bool ok = o.violations == 0 && o.skipped_parameters == 0 && clamped == records && records == o.graphs;
  std::string detail = std::to_string(records) + " records, " + std::to_string(o.violations) + " violations, " +
                       std::to_string(clamped) + " with clamps recorded";
  if (!ok && !diag.empty()) detail += "; " + first_line(diag);
  return {ok, detail};
}

// Mutation testing. A mutant the verifier accepts must be a true claim by
// brute force; anything else is a false accept.

Mask mask_of(const Json& list) {
  Mask m = 0;
  for (const Json& v : list) m |= Mask{1} << v.get<int>();
  return m;
}

std::vector<Mask> masks_of(const Json& lists) {
  std::vector<Mask> out;
  for (const Json& l : lists) out.push_back(mask_of(l));
  return out;
}

int depth_of(const Json& d) { return d.is_string() ? -1 : d.get<int>(); }

bool pairwise_disjoint(const std::vector<Mask>& sets) {
  Mask seen = 0;
  for (Mask m : sets) {
    if (seen & m) return false;
    seen |= m;
  }
  return true;
}

bool claim_holds(const Graph& g, const std::string& document) {
  const Json j = Json::parse(document);
  const std::string kind = j["kind"];
  const int r = depth_of(j["depth"]);
  if (kind == "bramble") {
    auto family = masks_of(j["elements"]);
    if (family.empty() || !oracle::is_bramble(g, family, r) || !oracle::t_intersecting(family, j["t"].get<int>()))
      return false;
    if (j["tangle"].get<bool>() && !oracle::tangle_triples(g, family)) return false;
    return oracle::min_hitting_set(g, family) == j["order"].get<int>();
  }
  if (kind == "minor_model") {
    auto sets = masks_of(j["branch_sets"]);
    if (static_cast<int>(sets.size()) != j["pattern"]["n"].get<int>()) return false;
    if (!pairwise_disjoint(sets) || !oracle::branch_sets_ok(g, sets, r)) return false;
    for (const Json& e : j["pattern"]["edges"])
      if (!oracle::touches(g, sets.at(e[0].get<int>()), sets.at(e[1].get<int>()))) return false;
    return true;
  }
  if (kind == "scol_order") {
    std::vector<int> sequence = j["order"];
    Mask seen = 0;
    for (int v : sequence) seen |= Mask{1} << v;
    if (static_cast<int>(sequence.size()) != g.vertex_count() || oracle::popcount(seen) != g.vertex_count()) return false;
    return oracle::scol_given(g, r, sequence) == j["value"].get<int>();
  }
  if (kind == "linked") return oracle::k_linked(g, mask_of(j["set"]), j["k"].get<int>(), r);
  if (kind == "well_linked") {
    Mask s = mask_of(j["set"]);
    return s != 0 && oracle::well_linked(g, s, r, j["disjoint"].get<bool>());
  }
  if (kind == "density") {
    auto sets = masks_of(j["branch_sets"]);
    if (sets.empty() || !pairwise_disjoint(sets) || !oracle::branch_sets_ok(g, sets, r)) return false;
    const int e = oracle::contracted_edges(g, sets);
    return e == j["edges"].get<int>() && Rational(e, static_cast<long long>(sets.size())).to_string() ==
                                             j["density"].get<std::string>();
  }
  return false;
}

struct Sample {
  Graph graph;
  std::string document;
};

bool int_list(const Json& j) {
  if (!j.is_array() || j.empty()) return false;
  for (const Json& v : j)
    if (!v.is_number_integer()) return false;
  return true;
}

// Arrays of vertices and arrays of entries, as JSON pointers.
void collect_targets(const Json& j, const Json::json_pointer& at, std::vector<Json::json_pointer>& vertex_lists,
                     std::vector<Json::json_pointer>& collections) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) collect_targets(it.value(), at / it.key(), vertex_lists, collections);
  } else if (j.is_array()) {
    if (int_list(j)) {
      vertex_lists.push_back(at);
    } else if (!j.empty()) {
      collections.push_back(at);
      for (std::size_t i = 0; i < j.size(); ++i) collect_targets(j[i], at / i, vertex_lists, collections);
    }
  }
}

std::optional<std::string> mutate(const Sample& s, std::mt19937_64& rng) {
  Json j = Json::parse(s.document);
  std::vector<Json::json_pointer> lists, collections;
  collect_targets(j, Json::json_pointer(), lists, collections);
  if (lists.empty()) return std::nullopt;
  auto pick = [&](std::size_t size) { return std::uniform_int_distribution<std::size_t>(0, size - 1)(rng); };
  switch (pick(3)) {
    case 0: {  // drop a vertex
      Json& list = j[lists[pick(lists.size())]];
      list.erase(pick(list.size()));
      break;
    }
    case 1: {  // drop an entry
      if (collections.empty()) return std::nullopt;
      Json& c = j[collections[pick(collections.size())]];
      c.erase(pick(c.size()));
      break;
    }
    default: {  // swap a vertex for another one
      const int n = s.graph.vertex_count();
      if (n < 2) return std::nullopt;
      Json& list = j[lists[pick(lists.size())]];
      Json& slot = list[pick(list.size())];
      int old = slot.get<int>();
      int fresh = static_cast<int>(pick(static_cast<std::size_t>(n - 1)));
      slot = fresh >= old ? fresh + 1 : fresh;
      break;
    }
  }
  return j.dump();
}

std::map<std::string, std::vector<Sample>> witness_pool() {
  std::map<std::string, std::vector<Sample>> pool;
  for (const Graph& g : testing_corpus::load("connected_le6.g6")) {
    if (g.vertex_count() < 3) continue;
    for (Depth r : {Depth(0), Depth(1), Depth(2), Depth::infinity()}) {
      auto add = [&](const std::string& kind, std::string doc) { pool[kind].push_back({g, std::move(doc)}); };
      auto bn = bramble_number(g, r);
      add("bramble", serialize_bramble(bn.witness, bn.certificate));
      auto bt = t_bramble_number(g, r, 2);
      add("bramble", serialize_bramble(bt.witness, bt.certificate, 2));
      auto tn = tangle_number(g, r);
      add("bramble", serialize_bramble(tn.witness, tn.certificate, 1, true));
      auto om = shallow_clique_number(g, r);
      add("minor_model", serialize_minor_model(complete_graph(om.size), om.model));
      auto grid = shallow_grid_number(g, r);
      add("minor_model", serialize_minor_model(grid_graph(grid.side), grid.model));
      auto sc = scol_exact(g, r);
      add("scol_order", serialize_scol_order(sc.witness_order, r, sc.value));
      add("linked", serialize_linked(linkedness(g, r).witness));
      add("well_linked", serialize_well_linked(well_linkedness(g, r).witness));
      add("well_linked", serialize_well_linked(well_linkedness(g, r, PairMode::disjoint).witness));
      if (g.vertex_count() <= 5) add("density", serialize_density(shallow_density(g, r), r));
    }
  }
  return pool;
}

Outcome mutation() {
  std::mt19937_64 rng(7);
  const auto pool = witness_pool();
  bool ok = pool.size() == 6;
  std::string detail;
  for (const auto& [kind, samples] : pool) {
    int rejected = 0, true_claims = 0, false_accepts = 0, originals_bad = 0;
    for (const Sample& s : samples) originals_bad += !verify_witness(s.graph, s.document).valid;
    for (int trial = 0; trial < 1000;) {
      const Sample& s = samples[std::uniform_int_distribution<std::size_t>(0, samples.size() - 1)(rng)];
      auto mutant = mutate(s, rng);
      if (!mutant || *mutant == s.document) continue;
      ++trial;
      if (!verify_witness(s.graph, *mutant).valid) {
        ++rejected;
        continue;
      }
      bool holds = false;
      try {
        holds = claim_holds(s.graph, *mutant);
      } catch (const std::exception&) {
      }
      holds ? ++true_claims : ++false_accepts;
    }
    ok = ok && false_accepts == 0 && originals_bad == 0;
    detail += (detail.empty() ? "" : "; ") + kind + " " + std::to_string(rejected) + " rejected, " +
              std::to_string(true_claims) + " accepted true, " + std::to_string(false_accepts) + " false accepts";
  }
  return {ok, "1000 trials per kind: " + detail};
}

Outcome determinism() {
  const std::string input = corpus_text("connected_le6.g6");
  auto job = suite_job({Suite::unbounded, Suite::radius, Suite::chain}, 2, 3);
  RunConfig config;
  config.collect = true;
  config.include_witnesses = true;
  std::string one, four;
  run(input, job, config, &one);
  config.threads = 4;
  run(input, job, config, &four);
  return {!one.empty() && one == four, std::to_string(one.size()) + " bytes, threads 1 and 4 " +
                                           (one == four ? "identical" : "differ")};
}

}  // namespace

int main() {
  report(1, "exhaustive radius suite", exhaustive_radius_suite);
  report(2, "duality cross-check", duality);
  report(3, "depth-0 collapse", depth_zero);
  report(4, "constructive witnesses", constructions);
  report(5, "high-girth counterexample", high_girth);
  report(6, "summary chain at r=1", chain_suite);
  report(7, "witness mutation", mutation);
  report(8, "determinism", determinism);
  return failures == 0 ? 0 : 1;
}
