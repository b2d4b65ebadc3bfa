#pragma once

#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "shallow/depth.hpp"
#include "shallow/graph.hpp"
#include "shallow/limits.hpp"
#include "shallow/rational.hpp"

namespace shallow {

enum class Parameter { scol, bn, bnt, tn, link, well, well_disjoint, omega, nabla, grid, treewidth };

/// "scol", "bn", "bnt", "tn", "link", "well", "welld", "omega", "nabla", "grid", "tw".
std::string_view parameter_name(Parameter p);
std::optional<Parameter> parse_parameter(std::string_view name);
/// Report key for a requested radius: "bn_1", "bnt_4_2", "well_inf", "tw".
std::string parameter_key(Parameter p, Depth r, int t = 0);

struct HarnessOptions {
  SearchLimits limits = SearchLimits::from_environment();
  /// Re-check every witness from its serialized form.
  bool verify_witnesses = true;
  /// Also compute well-linkedness with disjoint A, B and report any difference.
  bool compare_disjoint_well = false;
  /// Self-test: corrupt every bramble witness before re-verification.
  bool inject_fault = false;
};

struct ParameterEntry {
  std::string key;
  Parameter parameter = Parameter::bn;
  Depth requested;
  Depth effective;
  int t = 0;
  std::optional<Rational> value;
  /// Serialized witness document; empty when the parameter has none.
  std::string witness;
  bool witness_checked = false;
  std::string witness_failure;
  /// Why `value` is absent (cap exceeded).
  std::string skipped;
  double millis = 0;
};

struct InequalityResult {
  std::string id;
  Rational lhs;
  /// nullopt for an infinite bound.
  std::optional<Rational> rhs;
  bool holds = true;
  /// rhs - lhs; nullopt when rhs is infinite.
  std::optional<Rational> slack;
  std::string note;
  /// Reported but never counted as a violation.
  bool informational = false;
  /// Keys of the parameters the two sides are built from.
  std::vector<std::string> operands;
};

struct Clamp {
  std::string parameter;
  Depth requested;
  Depth effective;
};

struct GraphReport {
  std::string graph6;
  int n = 0;
  int m = 0;
  std::string suite;
  std::optional<Depth> r;
  std::optional<int> t;
  std::vector<ParameterEntry> parameters;
  std::vector<InequalityResult> inequalities;
  std::vector<Clamp> clamps;
  std::vector<std::string> notes;

  int violation_count() const;
  /// Entries whose witness failed re-verification.
  std::vector<const ParameterEntry*> witness_failures() const;
};

/// Per-graph cache of parameter values, keyed by effective radius. Not thread-safe.
class GraphAnalysis {
 public:
  GraphAnalysis(Graph g, HarnessOptions options = {});
  ~GraphAnalysis();
  GraphAnalysis(GraphAnalysis&&) noexcept;
  GraphAnalysis& operator=(GraphAnalysis&&) noexcept;

  const Graph& graph() const;
  const std::string& graph6() const;
  const HarnessOptions& options() const;

  /// Computes (or recalls) a parameter. Cap overruns are recorded in `skipped`.
  const ParameterEntry& get(Parameter p, Depth r, int t = 0);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Every parameter at radius r (bnt at t), no inequalities.
GraphReport compute_all(GraphAnalysis& analysis, Depth r, int t);
/// A single parameter.
GraphReport compute_one(GraphAnalysis& analysis, Parameter p, Depth r, int t);

/// Unbounded-radius relations: scol = bn = tw + 1, omega <= bn, linkedness,
/// well-linkedness and tangle bounds.
GraphReport verify_unbounded(GraphAnalysis& analysis);
/// Bounded-radius relations at radius r and bramble intersection parameter t.
GraphReport verify_radius_bounds(GraphAnalysis& analysis, Depth r, int t);
/// omega_r <= well_5r <= 16 link_15r^2 <= 50 tn_46r^2 <= 50 bn_46r^2 <= 10^7 r^2 omega_250r^4.
GraphReport verify_summary_chain(GraphAnalysis& analysis, int r);

struct HighGirthReport {
  int d = 0;
  int r = 0;
  int s = 0;
  std::string graph_name;
  std::string graph6;
  int n = 0;
  int m = 0;
  int minimum_degree = 0;
  int girth = 0;
  int girth_required = 0;
  int degeneracy = 0;
  /// degeneracy + 1, a lower bound for scol_r.
  int scol_1_lower = 0;
  std::optional<int> scol_1;
  std::optional<int> scol_r;
  int bn_s = 0;
  /// "brute-forced" or "structural, not brute-forced".
  std::string bn_verdict;
  std::vector<std::string> derivation;
  bool holds = false;
};

/// A graph of minimum degree >= d and girth >= 8s+4: from the embedded cubic
/// catalog when d <= 3, else a random regular graph. Reports its girth, the
/// coloring lower bound, and bn_s = 2. Throws InvalidArgument if no graph qualifies.
HighGirthReport high_girth_counterexample(int d, int r, int s, const SearchLimits& limits, std::uint64_t seed = 1);

enum class Suite { unbounded, radius, chain };

/// Produces the records for one graph.
using GraphJob = std::function<std::vector<GraphReport>(GraphAnalysis&)>;

GraphJob suite_job(std::vector<Suite> suites, int rmax, int tmax);

struct RunConfig {
  HarnessOptions options;
  int threads = 1;
  /// Keep going after a violation.
  bool collect = false;
  bool json = true;
  bool include_witnesses = false;
  bool timings = false;
};

struct RunOutcome {
  int graphs = 0;
  int records = 0;
  int violations = 0;
  /// Records skipped entirely because a parameter was over a cap.
  int skipped_parameters = 0;
  bool stopped_early = false;
};

class Summary;

/// Reads graph6 lines, runs `job` on each graph (concurrently when threads >
/// 1) and writes records to `out` in input order. Violations are described on
/// `diag`; unless `collect` is set the run stops after the first graph with one.
/// Throws InputError on unparsable input before any record is written.
RunOutcome run_graphs(std::istream& in, const GraphJob& job, const RunConfig& config, std::ostream& out,
                      std::ostream& diag, Summary* summary = nullptr);

}  // namespace shallow
