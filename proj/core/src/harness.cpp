#include "shallow/harness.hpp"

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <istream>
#include <map>
#include <mutex>
#include <ostream>
#include <thread>
#include <tuple>

#include "json_codec.hpp"
#include "shallow/bramble.hpp"
#include "shallow/coloring.hpp"
#include "shallow/errors.hpp"
#include "shallow/generators.hpp"
#include "shallow/graph6.hpp"
#include "shallow/linkedness.hpp"
#include "shallow/minors.hpp"
#include "shallow/report.hpp"
#include "shallow/witness_io.hpp"

namespace shallow {

namespace {

constexpr std::pair<Parameter, std::string_view> kNames[] = {
    {Parameter::scol, "scol"}, {Parameter::bn, "bn"},       {Parameter::bnt, "bnt"},
    {Parameter::tn, "tn"},     {Parameter::link, "link"},   {Parameter::well, "well"},
    {Parameter::well_disjoint, "welld"}, {Parameter::omega, "omega"}, {Parameter::nabla, "nabla"},
    {Parameter::grid, "grid"}, {Parameter::treewidth, "tw"},
};

bool is_bramble_parameter(Parameter p) { return p == Parameter::bn || p == Parameter::bnt || p == Parameter::tn; }

}  // namespace

std::string_view parameter_name(Parameter p) {
  for (auto [q, name] : kNames)
    if (q == p) return name;
  return "?";
}

std::optional<Parameter> parse_parameter(std::string_view name) {
  for (auto [p, n] : kNames)
    if (n == name) return p;
  return std::nullopt;
}

std::string parameter_key(Parameter p, Depth r, int t) {
  std::string key(parameter_name(p));
  if (p == Parameter::treewidth) return key;
  key += "_" + r.to_string();
  if (p == Parameter::bnt) key += "_" + std::to_string(t);
  return key;
}

int GraphReport::violation_count() const {
  int count = 0;
  for (const auto& item : inequalities) count += (!item.holds && !item.informational) ? 1 : 0;
  return count + static_cast<int>(witness_failures().size());
}

std::vector<const ParameterEntry*> GraphReport::witness_failures() const {
  std::vector<const ParameterEntry*> out;
  for (const auto& e : parameters)
    if (!e.witness_failure.empty()) out.push_back(&e);
  return out;
}

struct GraphAnalysis::Impl {
  Graph graph;
  std::string graph6;
  HarnessOptions options;
  std::map<std::tuple<Parameter, Depth, int>, ParameterEntry> computed;
  std::map<std::string, ParameterEntry> by_key;

  ParameterEntry compute(Parameter p, Depth r, int t);
};

ParameterEntry GraphAnalysis::Impl::compute(Parameter p, Depth r, int t) {
  ParameterEntry e;
  e.parameter = p;
  e.effective = r;
  e.t = t;
  const auto& limits = options.limits;
  const auto start = std::chrono::steady_clock::now();
  try {
    switch (p) {
      case Parameter::scol: {
        auto res = scol_exact(graph, r, limits);
        e.value = res.value;
        e.witness = serialize_scol_order(res.witness_order, r, res.value);
        break;
      }
      case Parameter::bn:
      case Parameter::bnt:
      case Parameter::tn: {
        BrambleNumber res = p == Parameter::bn    ? bramble_number(graph, r, limits)
                            : p == Parameter::bnt ? t_bramble_number(graph, r, t, limits)
                                                  : tangle_number(graph, r, limits);
        e.value = res.value;
        e.witness = serialize_bramble(res.witness, res.certificate, p == Parameter::bnt ? t : 1, p == Parameter::tn);
        break;
      }
      case Parameter::link: {
        auto res = linkedness(graph, r, limits);
        e.value = res.value;
        e.witness = serialize_linked(res.witness);
        break;
      }
      case Parameter::well:
      case Parameter::well_disjoint: {
        auto mode = p == Parameter::well ? PairMode::overlapping : PairMode::disjoint;
        auto res = well_linkedness(graph, r, mode, limits);
        e.value = res.value;
        if (res.value > 0) e.witness = serialize_well_linked(res.witness);
        break;
      }
      case Parameter::omega: {
        auto res = shallow_clique_number(graph, r, limits);
        e.value = res.size;
        e.witness = serialize_minor_model(complete_graph(res.size), res.model);
        break;
      }
      case Parameter::nabla: {
        auto res = shallow_density(graph, r, limits);
        e.value = res.density;
        if (!res.branch_sets.empty()) e.witness = serialize_density(res, r);
        break;
      }
      case Parameter::grid: {
        auto res = shallow_grid_number(graph, r, limits);
        e.value = res.side;
        e.witness = serialize_minor_model(grid_graph(res.side), res.model);
        break;
      }
      case Parameter::treewidth:
        e.value = treewidth_exact(graph, limits);
        break;
    }
  } catch (const CapExceeded& ex) {
    e.skipped = ex.what();
  }
  e.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  if (options.inject_fault && is_bramble_parameter(p) && !e.witness.empty()) {
    auto doc = detail::Json::parse(e.witness);
    doc["order"] = doc["order"].get<int>() + 1;
    e.witness = doc.dump();
  }
  if (options.verify_witnesses && !e.witness.empty()) {
    WitnessCheck check = verify_witness(graph, e.witness);
    e.witness_checked = true;
    if (!check.valid) e.witness_failure = check.reason;
  }
  return e;
}

GraphAnalysis::GraphAnalysis(Graph g, HarnessOptions options) : impl_(std::make_unique<Impl>()) {
  impl_->graph6 = encode_graph6(g);
  impl_->graph = std::move(g);
  impl_->options = std::move(options);
}
GraphAnalysis::~GraphAnalysis() = default;
GraphAnalysis::GraphAnalysis(GraphAnalysis&&) noexcept = default;
GraphAnalysis& GraphAnalysis::operator=(GraphAnalysis&&) noexcept = default;

const Graph& GraphAnalysis::graph() const { return impl_->graph; }
const std::string& GraphAnalysis::graph6() const { return impl_->graph6; }
const HarnessOptions& GraphAnalysis::options() const { return impl_->options; }

const ParameterEntry& GraphAnalysis::get(Parameter p, Depth r, int t) {
  if (p != Parameter::bnt) t = 0;
  if (p == Parameter::treewidth) r = Depth::infinity();
  if (p == Parameter::bnt && t < 1) throw InvalidArgument("bnt needs t >= 1");
  std::string key = parameter_key(p, r, t);
  auto found = impl_->by_key.find(key);
  if (found != impl_->by_key.end()) return found->second;
  const Depth effective = r.clamped_for(static_cast<std::uint32_t>(impl_->graph.vertex_count()));
  auto slot = impl_->computed.find({p, effective, t});
  if (slot == impl_->computed.end()) {
    slot = impl_->computed.emplace(std::make_tuple(p, effective, t), impl_->compute(p, effective, t)).first;
  }
  ParameterEntry entry = slot->second;
  entry.key = key;
  entry.requested = r;
  return impl_->by_key.emplace(key, std::move(entry)).first->second;
}

namespace {

// One side of an inequality: a value built from parameter entries.
struct Term {
  std::optional<Rational> value;
  bool infinite = false;
  std::vector<std::string> operands;
  std::string missing;
};

Term scaled(Rational k, Term x) {
  if (x.value) x.value = k * *x.value;
  return x;
}

Term squared(Term x) {
  if (x.value) x.value = *x.value * *x.value;
  return x;
}

Term plus(Term x, Rational k) {
  if (x.value) x.value = *x.value + k;
  return x;
}

Term floor_sqrt(Term x) {
  if (x.value) {
    std::int64_t v = x.value->numerator() / x.value->denominator();
    std::int64_t s = 0;
    while ((s + 1) * (s + 1) <= v) ++s;
    x.value = Rational(s);
  }
  return x;
}

Term infinite_term() {
  Term x;
  x.infinite = true;
  return x;
}

class Builder {
 public:
  Builder(GraphAnalysis& analysis, std::string suite) : a_(analysis) {
    rep_.graph6 = analysis.graph6();
    rep_.n = analysis.graph().vertex_count();
    rep_.m = analysis.graph().edge_count();
    rep_.suite = std::move(suite);
  }

  GraphReport& report() { return rep_; }

  Term use(Parameter p, Depth r, int t = 0) {
    const ParameterEntry& e = a_.get(p, r, t);
    bool seen = false;
    for (const auto& existing : rep_.parameters) seen = seen || existing.key == e.key;
    if (!seen) {
      rep_.parameters.push_back(e);
      if (e.requested != e.effective) rep_.clamps.push_back({e.key, e.requested, e.effective});
    }
    Term x;
    x.value = e.value;
    x.operands = {e.key};
    if (!e.value) x.missing = e.key + " skipped: " + e.skipped;
    return x;
  }

  void relate(std::string id, const Term& lhs, const Term& rhs, bool informational = false, std::string note = {}) {
    if (!lhs.missing.empty() || !rhs.missing.empty()) {
      rep_.notes.push_back(id + " not evaluated: " + (lhs.missing.empty() ? rhs.missing : lhs.missing));
      return;
    }
    InequalityResult item;
    item.id = std::move(id);
    item.lhs = *lhs.value;
    item.informational = informational;
    item.note = std::move(note);
    item.operands = lhs.operands;
    item.operands.insert(item.operands.end(), rhs.operands.begin(), rhs.operands.end());
    if (!rhs.infinite) {
      item.rhs = *rhs.value;
      item.holds = item.lhs <= *item.rhs;
      item.slack = *item.rhs - item.lhs;
    }
    rep_.inequalities.push_back(std::move(item));
  }

 private:
  GraphAnalysis& a_;
  GraphReport rep_;
};

}  // namespace

GraphReport compute_all(GraphAnalysis& analysis, Depth r, int t) {
  Builder b(analysis, "compute");
  for (Parameter p : {Parameter::scol, Parameter::bn, Parameter::bnt, Parameter::tn, Parameter::link, Parameter::well,
                      Parameter::omega, Parameter::nabla, Parameter::grid}) {
    b.use(p, r, t);
  }
  b.report().r = r;
  b.report().t = t;
  return std::move(b.report());
}

GraphReport compute_one(GraphAnalysis& analysis, Parameter p, Depth r, int t) {
  Builder b(analysis, "compute");
  b.use(p, r, t);
  if (p != Parameter::treewidth) b.report().r = r;
  if (p == Parameter::bnt) b.report().t = t;
  return std::move(b.report());
}

GraphReport verify_unbounded(GraphAnalysis& analysis) {
  const Depth inf = Depth::infinity();
  Builder b(analysis, "unbounded");
  b.report().r = inf;
  Term scol = b.use(Parameter::scol, inf);
  Term bn = b.use(Parameter::bn, inf);
  Term tw1 = plus(b.use(Parameter::treewidth, inf), 1);
  Term omega = b.use(Parameter::omega, inf);
  Term link = b.use(Parameter::link, inf);
  Term well = b.use(Parameter::well, inf);
  Term tn = b.use(Parameter::tn, inf);
  b.relate("scol_inf<=bn_inf", scol, bn);
  b.relate("bn_inf<=scol_inf", bn, scol);
  b.relate("bn_inf<=tw+1", bn, tw1);
  b.relate("tw+1<=bn_inf", tw1, bn);
  b.relate("omega_inf<=bn_inf", omega, bn);
  b.relate("link_inf<=bn_inf", link, bn, false, "unsubscripted bramble number read as bn_inf");
  b.relate("bn_inf<=2*link_inf", bn, scaled(2, link));
  b.relate("bn_inf<=well_inf", bn, well);
  b.relate("well_inf<=4*bn_inf", well, scaled(4, bn));
  b.relate("tn_inf<=bn_inf", tn, bn);
  b.relate("bn_inf<=3/2*tn_inf", bn, scaled(Rational(3, 2), tn));
  return std::move(b.report());
}

GraphReport verify_radius_bounds(GraphAnalysis& analysis, Depth r, int t) {
  if (t < 1) throw InvalidArgument("t must be at least 1");
  Builder b(analysis, "radius");
  b.report().r = r;
  b.report().t = t;
  Term bn = b.use(Parameter::bn, r);
  Term omega = b.use(Parameter::omega, r);
  b.relate("omega_r<=bn_r", omega, bn);
  b.relate("bn_r<=scol_{4r+1}", bn, b.use(Parameter::scol, r.affine(4, 1)));
  Term omega5 = b.use(Parameter::omega, r.affine(5, 1));
  b.relate("bn_r<=(5r+1)*omega_{5r+1}^2", bn,
           r.is_finite() ? scaled(Rational(5 * static_cast<std::int64_t>(r.value()) + 1), squared(omega5))
                         : infinite_term());
  Term link = b.use(Parameter::link, r);
  b.relate("link_r<=bn_r", link, bn);
  b.relate("bn_r<=2*link_{3r+1}", bn, scaled(2, b.use(Parameter::link, r.affine(3, 1))));
  b.relate("bn_r<=well_{4r+1}", bn, b.use(Parameter::well, r.affine(4, 1)));
  Term well = b.use(Parameter::well, r);
  b.relate("well_r<=4*(1+link_{3r})^2", well, scaled(4, squared(plus(b.use(Parameter::link, r.affine(3, 0)), 1))));
  Term bnt = b.use(Parameter::bnt, r, t);
  b.relate("bnt_{r,t}<=bn_r", bnt, bn);
  b.relate("bn_r<=t*bnt_{3r+1,t}", bn, scaled(t, b.use(Parameter::bnt, r.affine(3, 1), t)));
  Term tn = b.use(Parameter::tn, r);
  b.relate("bnt_{r,3}<=tn_r", b.use(Parameter::bnt, r, 3), tn);
  b.relate("tn_r<=bn_r", tn, bn);
  Term grid = b.use(Parameter::grid, r);
  b.relate("isqrt(omega_r)<=grid_r", floor_sqrt(omega), grid);
  b.relate("omega_r<=grid_r^2", omega, squared(grid), true, "literal square form, reported only");
  if (analysis.options().compare_disjoint_well) {
    Term welld = b.use(Parameter::well_disjoint, r);
    b.relate("well_r<=welld_r", well, welld);
    b.relate("welld_r<=well_r", welld, well, true, "disjoint pairs may admit larger sets");
  }
  return std::move(b.report());
}

GraphReport verify_summary_chain(GraphAnalysis& analysis, int r) {
  if (r < 1) throw InvalidArgument("the summary chain needs r >= 1");
  Builder b(analysis, "chain");
  b.report().r = Depth(static_cast<std::uint32_t>(r));
  auto at = [&](int mul) { return Depth(static_cast<std::uint32_t>(mul * r)); };
  Term t0 = b.use(Parameter::omega, at(1));
  Term t1 = b.use(Parameter::well, at(5));
  Term t2 = scaled(16, squared(b.use(Parameter::link, at(15))));
  Term t3 = scaled(50, squared(b.use(Parameter::tn, at(46))));
  Term t4 = scaled(50, squared(b.use(Parameter::bn, at(46))));
  Term t5 = scaled(Rational(10000000LL * r * r), squared(squared(b.use(Parameter::omega, at(250)))));
  b.relate("omega_r<=well_5r", t0, t1);
  b.relate("well_5r<=16*link_15r^2", t1, t2);
  b.relate("16*link_15r^2<=50*tn_46r^2", t2, t3);
  b.relate("50*tn_46r^2<=50*bn_46r^2", t3, t4);
  b.relate("50*bn_46r^2<=10^7*r^2*omega_250r^4", t4, t5);
  return std::move(b.report());
}

GraphJob suite_job(std::vector<Suite> suites, int rmax, int tmax) {
  if (rmax < 0 || tmax < 1) throw InvalidArgument("rmax must be >= 0 and tmax >= 1");
  return [suites = std::move(suites), rmax, tmax](GraphAnalysis& a) {
    std::vector<GraphReport> out;
    for (Suite s : suites) {
      switch (s) {
        case Suite::unbounded:
          out.push_back(verify_unbounded(a));
          break;
        case Suite::radius:
          for (int r = 0; r <= rmax; ++r)
            for (int t = 1; t <= tmax; ++t) out.push_back(verify_radius_bounds(a, Depth(r), t));
          break;
        case Suite::chain:
          for (int r = 1; r <= std::max(1, rmax); ++r) out.push_back(verify_summary_chain(a, r));
          break;
      }
    }
    return out;
  };
}

namespace {

struct GraphResult {
  std::vector<GraphReport> reports;
  std::string error;
};

}  // namespace

RunOutcome run_graphs(std::istream& in, const GraphJob& job, const RunConfig& config, std::ostream& out,
                      std::ostream& diag, Summary* summary) {
  std::vector<Graph> graphs;
  read_graph6_stream(in, [&](int, std::string_view, Graph g) { graphs.push_back(std::move(g)); });

  const std::size_t total = graphs.size();
  std::vector<std::optional<GraphResult>> results(total);
  std::mutex mutex;
  std::condition_variable ready;
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};

  auto worker = [&] {
    for (std::size_t i; !stop && (i = next++) < total;) {
      GraphResult res;
      try {
        GraphAnalysis analysis(graphs[i], config.options);
        res.reports = job(analysis);
      } catch (const std::exception& e) {
        res.error = e.what();
      }
      std::lock_guard lock(mutex);
      results[i] = std::move(res);
      ready.notify_all();
    }
  };
  const int thread_count = std::max(1, config.threads);
  std::vector<std::thread> pool;
  for (int i = 0; i < thread_count; ++i) pool.emplace_back(worker);

  RunOutcome outcome;
  const ReportStyle base{config.include_witnesses, config.timings};
  for (std::size_t i = 0; i < total; ++i) {
    GraphResult res;
    {
      std::unique_lock lock(mutex);
      ready.wait(lock, [&] { return results[i].has_value(); });
      res = std::move(*results[i]);
    }
    ++outcome.graphs;
    bool violated = false;
    if (!res.error.empty()) {
      diag << "error: graph " << (i + 1) << " (" << encode_graph6(graphs[i]) << "): " << res.error << '\n';
      ++outcome.violations;
      violated = true;
    }
    for (const GraphReport& rep : res.reports) {
      ++outcome.records;
      const int v = rep.violation_count();
      for (const auto& p : rep.parameters) outcome.skipped_parameters += p.skipped.empty() ? 0 : 1;
      ReportStyle style = base;
      if (v > 0) {
        style.include_witnesses = true;
        outcome.violations += v;
        violated = true;
        diag << "violation: graph " << (i + 1) << " (" << rep.graph6 << ") suite " << rep.suite << '\n'
             << describe_violations(rep);
      }
      for (const auto& note : rep.notes) diag << "notice: " << rep.graph6 << ": " << note << '\n';
      out << (config.json ? report_json(rep, style) : report_plain(rep, style)) << '\n';
      if (summary) summary->add(rep);
    }
    if (violated && !config.collect) {
      outcome.stopped_early = i + 1 < total;
      stop = true;
      break;
    }
  }
  stop = true;
  for (auto& t : pool) t.join();
  out.flush();
  return outcome;
}

}  // namespace shallow
