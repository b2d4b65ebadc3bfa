#include "shallow/witness_io.hpp"

#include <stdexcept>

#include "json_codec.hpp"
#include "shallow/errors.hpp"
#include "shallow/metric.hpp"

namespace shallow {
namespace detail {

Json depth_json(Depth d) {
  if (d.is_infinite()) return "inf";
  return d.value();
}

Json set_json(VertexSet s) { return s.to_vector(); }

namespace {

Json sets_json(const std::vector<VertexSet>& sets) {
  Json out = Json::array();
  for (VertexSet s : sets) out.push_back(set_json(s));
  return out;
}

}  // namespace

Json bramble_json(const Bramble& bramble, const OrderCertificate& certificate, int t, bool tangle) {
  Json j;
  j["kind"] = "bramble";
  j["depth"] = depth_json(bramble.depth);
  j["t"] = t;
  j["tangle"] = tangle;
  j["order"] = certificate.order;
  j["elements"] = sets_json(bramble.elements);
  j["hitting_set"] = set_json(certificate.hitting_set);
  if (certificate.misses) {
    Json misses = Json::array();
    for (const auto& [x, index] : *certificate.misses) misses.push_back(Json::array({set_json(x), index}));
    j["misses"] = std::move(misses);
  } else {
    j["misses"] = nullptr;
  }
  return j;
}

Json minor_model_json(const Graph& pattern, const MinorModel& model) {
  Json j;
  j["kind"] = "minor_model";
  j["depth"] = depth_json(model.depth);
  Json edges = Json::array();
  for (auto [u, v] : pattern.edges()) edges.push_back(Json::array({u, v}));
  j["pattern"] = {{"n", pattern.vertex_count()}, {"edges", std::move(edges)}};
  j["branch_sets"] = sets_json(model.branch_sets);
  return j;
}

Json scol_order_json(const LinearOrder& order, Depth r, int value) {
  Json j;
  j["kind"] = "scol_order";
  j["depth"] = depth_json(r);
  j["value"] = value;
  j["order"] = order.sequence();
  return j;
}

Json linked_json(const LinkedWitness& w) {
  Json j;
  j["kind"] = "linked";
  j["depth"] = depth_json(w.depth);
  j["k"] = w.k;
  j["vacuous"] = w.vacuous;
  j["set"] = set_json(w.set);
  Json balls = Json::array();
  for (const auto& [x, b] : w.balls) balls.push_back(Json::array({set_json(x), set_json(b)}));
  j["balls"] = std::move(balls);
  return j;
}

Json well_linked_json(const WellLinkedWitness& w) {
  Json j;
  j["kind"] = "well_linked";
  j["depth"] = depth_json(w.depth);
  j["disjoint"] = w.disjoint;
  j["set"] = set_json(w.set);
  return j;
}

Json density_json(const DensityMinor& minor, Depth r) {
  Json j;
  j["kind"] = "density";
  j["depth"] = depth_json(r);
  j["density"] = minor.density.to_string();
  j["edges"] = minor.edges;
  j["branch_sets"] = sets_json(minor.branch_sets);
  return j;
}

}  // namespace detail

std::string serialize_bramble(const Bramble& bramble, const OrderCertificate& certificate, int t, bool tangle) {
  return detail::bramble_json(bramble, certificate, t, tangle).dump();
}
std::string serialize_minor_model(const Graph& pattern, const MinorModel& model) {
  return detail::minor_model_json(pattern, model).dump();
}
std::string serialize_scol_order(const LinearOrder& order, Depth r, int value) {
  return detail::scol_order_json(order, r, value).dump();
}
std::string serialize_linked(const LinkedWitness& witness) { return detail::linked_json(witness).dump(); }
std::string serialize_well_linked(const WellLinkedWitness& witness) {
  return detail::well_linked_json(witness).dump();
}
std::string serialize_density(const DensityMinor& minor, Depth r) { return detail::density_json(minor, r).dump(); }

namespace {

using detail::Json;

struct Reject {
  std::string reason;
};

const Json& field(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw Reject{std::string("missing field '") + key + "'"};
  return *it;
}

int integer(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw Reject{std::string(what) + " is not an integer"};
  return j.get<int>();
}

bool boolean(const Json& j, const char* what) {
  if (!j.is_boolean()) throw Reject{std::string(what) + " is not a boolean"};
  return j.get<bool>();
}

Depth depth_of(const Json& j) {
  if (j.is_string() && j.get<std::string>() == "inf") return Depth::infinity();
  if (j.is_number_unsigned()) return Depth(j.get<std::uint32_t>());
  throw Reject{"depth must be a natural number or \"inf\""};
}

VertexSet set_of(const Graph& g, const Json& j, const char* what) {
  if (!j.is_array()) throw Reject{std::string(what) + " is not a list"};
  VertexSet s;
  int last = -1;
  for (const Json& item : j) {
    int v = integer(item, what);
    if (v < 0 || v >= g.vertex_count()) throw Reject{std::string(what) + " has a vertex out of range"};
    if (v <= last) throw Reject{std::string(what) + " is not strictly increasing"};
    s.insert(v);
    last = v;
  }
  return s;
}

std::vector<VertexSet> sets_of(const Graph& g, const Json& j, const char* what, bool canonical) {
  if (!j.is_array()) throw Reject{std::string(what) + " is not a list"};
  std::vector<VertexSet> out;
  for (const Json& item : j) {
    VertexSet s = set_of(g, item, what);
    if (s.empty()) throw Reject{std::string(what) + " contains an empty set"};
    if (canonical && !out.empty() && !canonical_less(out.back(), s)) {
      throw Reject{std::string(what) + " is not in canonical order"};
    }
    out.push_back(s);
  }
  return out;
}

void expect(bool condition, const char* reason) {
  if (!condition) throw Reject{reason};
}

void check_bramble(const Graph& g, const Json& j) {
  Bramble bramble{sets_of(g, field(j, "elements"), "elements", true), depth_of(field(j, "depth"))};
  const int t = integer(field(j, "t"), "t");
  const bool tangle = boolean(field(j, "tangle"), "tangle");
  expect(t >= 1, "t must be at least 1");
  OrderCertificate cert;
  cert.order = integer(field(j, "order"), "order");
  cert.hitting_set = set_of(g, field(j, "hitting_set"), "hitting_set");
  const Json& misses = field(j, "misses");
  if (!misses.is_null()) {
    expect(misses.is_array(), "misses is not a list");
    std::vector<std::pair<VertexSet, int>> list;
    for (const Json& entry : misses) {
      expect(entry.is_array() && entry.size() == 2, "misses entry is not a pair");
      list.emplace_back(set_of(g, entry[0], "misses set"), integer(entry[1], "misses index"));
    }
    cert.misses = std::move(list);
  }
  expect(validate_bramble(g, bramble, bramble.depth), "not a valid bramble at the stated depth");
  if (t > 1) expect(is_t_bramble(g, bramble, bramble.depth, t), "not a t-bramble");
  if (tangle) expect(is_tangle(g, bramble, bramble.depth), "not a tangle");
  expect(verify_order_certificate(g, bramble, cert), "order certificate does not verify");
}

void check_minor_model(const Graph& g, const Json& j) {
  const Json& pattern = field(j, "pattern");
  const int n = integer(field(pattern, "n"), "pattern n");
  expect(n >= 0 && n <= g.vertex_count(), "pattern larger than the host");
  const Json& edges = field(pattern, "edges");
  expect(edges.is_array(), "pattern edges is not a list");
  std::vector<Edge> list;
  for (const Json& e : edges) {
    expect(e.is_array() && e.size() == 2, "pattern edge is not a pair");
    Edge edge{integer(e[0], "pattern edge"), integer(e[1], "pattern edge")};
    expect(edge.first < edge.second, "pattern edge not ordered");
    expect(list.empty() || list.back() < edge, "pattern edges not sorted");
    list.push_back(edge);
  }
  Graph h(n, list);
  MinorModel model{sets_of(g, field(j, "branch_sets"), "branch_sets", false), depth_of(field(j, "depth"))};
  expect(static_cast<int>(model.branch_sets.size()) == n, "one branch set per pattern vertex required");
  expect(validate_model(g, h, model, model.depth), "minor model does not validate");
}

void check_scol_order(const Graph& g, const Json& j) {
  const Json& order = field(j, "order");
  expect(order.is_array(), "order is not a list");
  std::vector<int> sequence;
  for (const Json& v : order) sequence.push_back(integer(v, "order"));
  expect(static_cast<int>(sequence.size()) == g.vertex_count(), "order length differs from the vertex count");
  LinearOrder pi(std::move(sequence));
  expect(scol_given_order(g, depth_of(field(j, "depth")), pi) == integer(field(j, "value"), "value"),
         "order does not attain the stated value");
}

void check_linked(const Graph& g, const Json& j) {
  LinkedWitness w;
  w.depth = depth_of(field(j, "depth"));
  w.k = integer(field(j, "k"), "k");
  w.vacuous = boolean(field(j, "vacuous"), "vacuous");
  w.set = set_of(g, field(j, "set"), "set");
  const Json& balls = field(j, "balls");
  expect(balls.is_array(), "balls is not a list");
  for (const Json& entry : balls) {
    expect(entry.is_array() && entry.size() == 2, "balls entry is not a pair");
    w.balls.emplace_back(set_of(g, entry[0], "deletion set"), set_of(g, entry[1], "ball"));
  }
  expect(verify_linked(g, w), "linked witness does not verify");
}

void check_well_linked(const Graph& g, const Json& j) {
  WellLinkedWitness w{set_of(g, field(j, "set"), "set"), depth_of(field(j, "depth")),
                      boolean(field(j, "disjoint"), "disjoint")};
  expect(verify_well_linked(g, w), "set is not well-linked at the stated depth");
}

void check_density(const Graph& g, const Json& j) {
  const Depth r = depth_of(field(j, "depth"));
  auto sets = sets_of(g, field(j, "branch_sets"), "branch_sets", false);
  expect(!sets.empty(), "no branch sets");
  VertexSet used;
  for (VertexSet s : sets) {
    expect(!s.intersects(used), "branch sets overlap");
    expect(is_connected_subset(g, s) && radius_of_subset(g, s) <= r, "branch set too wide");
    used |= s;
  }
  const Json& density = field(j, "density");
  expect(density.is_string(), "density is not a string");
  const int edges = contracted_edge_count(g, sets);
  expect(integer(field(j, "edges"), "edges") == edges, "edge count differs");
  expect(Rational::parse(density.get<std::string>()) == Rational(edges, static_cast<std::int64_t>(sets.size())),
         "density differs from edges / branch sets");
}

}  // namespace

WitnessCheck verify_witness(const Graph& g, std::string_view document) {
  WitnessCheck out;
  try {
    if (!g.has_masks()) throw Reject{"graph too large for witness checks"};
    Json j = Json::parse(document);
    expect(j.is_object(), "document is not an object");
    const Json& kind = field(j, "kind");
    expect(kind.is_string(), "kind is not a string");
    out.kind = kind.get<std::string>();
    if (out.kind == "bramble") check_bramble(g, j);
    else if (out.kind == "minor_model") check_minor_model(g, j);
    else if (out.kind == "scol_order") check_scol_order(g, j);
    else if (out.kind == "linked") check_linked(g, j);
    else if (out.kind == "well_linked") check_well_linked(g, j);
    else if (out.kind == "density") check_density(g, j);
    else throw Reject{"unknown witness kind '" + out.kind + "'"};
    out.valid = true;
  } catch (const Reject& e) {
    out.reason = e.reason;
  } catch (const Json::exception& e) {
    out.reason = std::string("malformed document: ") + e.what();
  } catch (const InvalidArgument& e) {
    out.reason = e.what();
  } catch (const InputError& e) {
    out.reason = e.what();
  }
  return out;
}

}  // namespace shallow
