#include "shallow/report.hpp"

#include <cstdio>
#include <sstream>

#include "json_codec.hpp"

namespace shallow {
namespace {

using detail::Json;

Json rational_json(const Rational& q) {
  if (q.is_integer()) return q.numerator();
  return q.to_string();
}

std::string rational_text(const std::optional<Rational>& q) { return q ? q->to_string() : "inf"; }

}  // namespace

std::string report_json(const GraphReport& rep, const ReportStyle& style) {
  Json j;
  j["graph6"] = rep.graph6;
  j["n"] = rep.n;
  j["m"] = rep.m;
  j["suite"] = rep.suite;
  if (rep.r) j["r"] = detail::depth_json(*rep.r);
  if (rep.t) j["t"] = *rep.t;
  Json params = Json::object();
  for (const auto& e : rep.parameters) {
    if (e.value) params[e.key] = rational_json(*e.value);
    else params[e.key] = {{"skipped", e.skipped}};
  }
  j["parameters"] = std::move(params);
  Json items = Json::array();
  for (const auto& item : rep.inequalities) {
    Json x;
    x["id"] = item.id;
    x["lhs"] = rational_json(item.lhs);
    x["rhs"] = item.rhs ? rational_json(*item.rhs) : Json("inf");
    x["holds"] = item.holds;
    x["slack"] = item.slack ? rational_json(*item.slack) : Json("inf");
    if (item.informational) x["informational"] = true;
    if (!item.note.empty()) x["note"] = item.note;
    items.push_back(std::move(x));
  }
  j["inequalities"] = std::move(items);
  Json clamps = Json::array();
  for (const auto& c : rep.clamps) {
    clamps.push_back({{"parameter", c.parameter},
                      {"requested", detail::depth_json(c.requested)},
                      {"effective", detail::depth_json(c.effective)}});
  }
  j["clamps"] = std::move(clamps);
  int checked = 0;
  Json failed = Json::array();
  for (const auto& e : rep.parameters) {
    checked += e.witness_checked ? 1 : 0;
    if (!e.witness_failure.empty()) failed.push_back({{"parameter", e.key}, {"reason", e.witness_failure}});
  }
  j["witness_checks"] = {{"verified", checked - static_cast<int>(failed.size())}, {"failed", std::move(failed)}};
  if (!rep.notes.empty()) j["notes"] = rep.notes;
  if (style.include_witnesses) {
    Json w = Json::object();
    for (const auto& e : rep.parameters)
      if (!e.witness.empty()) w[e.key] = Json::parse(e.witness);
    j["witnesses"] = std::move(w);
  }
  if (style.timings) {
    Json t = Json::object();
    for (const auto& e : rep.parameters) t[e.key] = e.millis;
    j["timings_ms"] = std::move(t);
  }
  return j.dump();
}

std::string report_plain(const GraphReport& rep, const ReportStyle& style) {
  std::ostringstream out;
  out << rep.graph6 << " suite=" << rep.suite;
  if (rep.r) out << " r=" << rep.r->to_string();
  if (rep.t) out << " t=" << *rep.t;
  for (const auto& e : rep.parameters) out << ' ' << e.key << '=' << (e.value ? e.value->to_string() : "skipped");
  if (!rep.inequalities.empty()) {
    out << " items=" << rep.inequalities.size() << " violations=" << rep.violation_count();
  }
  if (style.timings) {
    for (const auto& e : rep.parameters) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.3f", e.millis);
      out << " ms_" << e.key << '=' << buf;
    }
  }
  if (style.include_witnesses) {
    for (const auto& e : rep.parameters)
      if (!e.witness.empty()) out << "\nwitness " << e.key << ' ' << e.witness;
  }
  return out.str();
}

std::string high_girth_json(const HighGirthReport& rep) {
  Json j;
  j["suite"] = "high_girth";
  j["d"] = rep.d;
  j["r"] = rep.r;
  j["s"] = rep.s;
  j["graph"] = rep.graph_name;
  j["graph6"] = rep.graph6;
  j["n"] = rep.n;
  j["m"] = rep.m;
  j["minimum_degree"] = rep.minimum_degree;
  j["girth"] = rep.girth;
  j["girth_required"] = rep.girth_required;
  j["degeneracy"] = rep.degeneracy;
  j["scol_1_lower"] = rep.scol_1_lower;
  j["scol_1"] = rep.scol_1 ? Json(*rep.scol_1) : Json(nullptr);
  j["scol_r"] = rep.scol_r ? Json(*rep.scol_r) : Json(nullptr);
  j["bn_s"] = rep.bn_s;
  j["bn_verdict"] = rep.bn_verdict;
  j["derivation"] = rep.derivation;
  j["holds"] = rep.holds;
  return j.dump();
}

std::string high_girth_plain(const HighGirthReport& rep) {
  std::ostringstream out;
  out << rep.graph_name << " n=" << rep.n << " d=" << rep.d << " s=" << rep.s << " girth=" << rep.girth
      << " girth_required=" << rep.girth_required << " degeneracy=" << rep.degeneracy
      << " scol_1>=" << rep.scol_1_lower;
  if (rep.scol_1) out << " scol_1=" << *rep.scol_1 << " scol_" << rep.r << '=' << *rep.scol_r;
  out << " bn_" << rep.s << '=' << rep.bn_s << " verdict=\"" << rep.bn_verdict << "\""
      << " holds=" << (rep.holds ? "true" : "false");
  return out.str();
}

std::string describe_violations(const GraphReport& rep) {
  std::ostringstream out;
  auto witness_of = [&](const std::string& key) -> const ParameterEntry* {
    for (const auto& e : rep.parameters)
      if (e.key == key) return &e;
    return nullptr;
  };
  for (const auto& item : rep.inequalities) {
    if (item.holds || item.informational) continue;
    out << "  item " << item.id << ": lhs=" << item.lhs.to_string() << " rhs=" << rational_text(item.rhs) << '\n';
    for (const auto& key : item.operands) {
      const ParameterEntry* e = witness_of(key);
      if (e && !e->witness.empty()) out << "    witness " << key << ' ' << e->witness << '\n';
    }
  }
  for (const ParameterEntry* e : rep.witness_failures()) {
    out << "  witness " << e->key << " failed re-verification: " << e->witness_failure << '\n'
        << "    witness " << e->key << ' ' << e->witness << '\n';
  }
  return out.str();
}

void Summary::add(const GraphReport& rep) {
  ++records_;
  violations_ += rep.violation_count();
  witness_failures_ += static_cast<int>(rep.witness_failures().size());
  for (const auto& item : rep.inequalities) {
    Item& agg = items_[rep.suite + " " + item.id];
    ++agg.evaluated;
    agg.informational = item.informational;
    if (!item.holds) ++agg.violations;
    if (item.slack && (!agg.min_slack || *item.slack < *agg.min_slack)) agg.min_slack = item.slack;
  }
}

std::string Summary::table() const {
  std::ostringstream out;
  char line[256];
  std::snprintf(line, sizeof line, "%-52s %8s %10s %10s\n", "item", "checked", "min_slack", "violations");
  out << line;
  for (const auto& [id, agg] : items_) {
    std::string viol = std::to_string(agg.violations) + (agg.informational ? " (info)" : "");
    std::snprintf(line, sizeof line, "%-52s %8d %10s %10s\n", id.c_str(), agg.evaluated,
                  rational_text(agg.min_slack).c_str(), viol.c_str());
    out << line;
  }
  std::snprintf(line, sizeof line, "records %d, violations %d, witness failures %d, runtime %.1f ms\n", records_,
                violations_, witness_failures_, runtime_ms_);
  out << line;
  return out.str();
}

}  // namespace shallow
