#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "corpus.hpp"
#include "oracles.hpp"
#include "shallow/bramble.hpp"
#include "shallow/coloring.hpp"
#include "shallow/constructions.hpp"
#include "shallow/errors.hpp"
#include "shallow/generators.hpp"
#include "shallow/metric.hpp"
#include "shallow/minors.hpp"

using namespace shallow;

namespace {

int as_int(Depth r) { return r.is_infinite() ? -1 : static_cast<int>(r.value()); }

std::vector<oracle::Mask> masks(const Bramble& b) {
  std::vector<oracle::Mask> out;
  for (VertexSet e : b.elements) out.push_back(e.bits());
  return out;
}

Bramble windows_c6() { return Bramble::from_elements({{0, 1, 2}, {2, 3, 4}, {4, 5, 0}}, Depth(1)); }

}  // namespace

TEST_CASE("bramble validity") {
  Graph c6 = cycle_graph(6);
  CHECK(validate_bramble(c6, windows_c6(), Depth(1)));
  CHECK_FALSE(validate_bramble(c6, windows_c6(), Depth(0)));
  CHECK_FALSE(validate_bramble(c6, Bramble::from_elements({{0}, {3}}, Depth(0)), Depth(0)));
  CHECK_FALSE(validate_bramble(c6, Bramble::from_elements({{0, 2}}, Depth(5)), Depth(5)));
  CHECK_THROWS_AS(validate_bramble(c6, Bramble{{VertexSet()}, Depth(0)}, Depth(0)), InvalidArgument);
  Bramble dup = Bramble::from_elements({{1}, {0}, {1}}, Depth(0));
  CHECK(dup.elements.size() == 2);
  CHECK(dup.elements.front() == VertexSet{0});
}

TEST_CASE("orders and certificates") {
  Graph c6 = cycle_graph(6);
  OrderCertificate cert = bramble_order(c6, windows_c6());
  CHECK(cert.order == 2);
  CHECK(verify_order_certificate(c6, windows_c6(), cert));
  REQUIRE(cert.misses.has_value());
  CHECK(cert.misses->size() == 6);
  OrderCertificate lie = cert;
  lie.order = 3;
  CHECK_FALSE(verify_order_certificate(c6, windows_c6(), lie));
  OrderCertificate wrong_index = cert;
  (*wrong_index.misses)[0].second = 0;
  (*wrong_index.misses)[0].first = VertexSet{0};
  CHECK_FALSE(verify_order_certificate(c6, windows_c6(), wrong_index));
  CHECK(minimum_hitting_set(std::vector<VertexSet>{{0, 1}, {1, 2}, {2, 3}}) == VertexSet{1, 2});
  CHECK(minimum_hitting_set(std::vector<VertexSet>{}).empty());
}

TEST_CASE("minimum hitting sets match subset enumeration") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> pick(1, 255);
  Graph g8(8);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<VertexSet> family;
    std::vector<oracle::Mask> fam;
    for (int i = 0; i < 1 + trial % 9; ++i) {
      oracle::Mask m = static_cast<oracle::Mask>(pick(rng));
      family.emplace_back(m);
      fam.push_back(m);
    }
    VertexSet h = minimum_hitting_set(family);
    CHECK(h.size() == oracle::min_hitting_set(g8, fam));
    for (VertexSet e : family) CHECK(e.intersects(h));
  }
}

TEST_CASE("bramble numbers match family enumeration on graphs with at most four vertices") {
  for (const Graph& g : testing_corpus::load("all_le6.g6")) {
    if (g.vertex_count() > 4) continue;
    for (Depth r : {Depth(0), Depth(1), Depth::infinity()}) {
      const int rr = as_int(r);
      BrambleNumber bn = bramble_number(g, r);
      CHECK(bn.value == oracle::bramble_number(g, rr));
      CHECK(oracle::is_bramble(g, masks(bn.witness), rr));
      CHECK(oracle::min_hitting_set(g, masks(bn.witness)) == bn.value);
      CHECK(verify_order_certificate(g, bn.witness, bn.certificate));
      for (int t : {2, 3}) {
        BrambleNumber bt = t_bramble_number(g, r, t);
        CHECK(bt.value == oracle::bramble_number(g, rr, t));
        CHECK(oracle::t_intersecting(masks(bt.witness), t));
      }
      BrambleNumber tn = tangle_number(g, r);
      CHECK(tn.value == oracle::bramble_number(g, rr, 1, true));
      CHECK(oracle::tangle_triples(g, masks(tn.witness)));
    }
  }
}

TEST_CASE("named bramble numbers") {
  CHECK(bramble_number(complete_graph(4), Depth(1)).value == 4);
  CHECK(bramble_number(path_graph(4), Depth(1)).value == 2);
  CHECK(bramble_number(cycle_graph(6), Depth(1)).value == 3);
  CHECK(bramble_number(cycle_graph(6), Depth::infinity()).value == 3);
  CHECK(bramble_number(cycle_graph(6), Depth(0)).value == 2);
  CHECK(bramble_number(Graph(1), Depth(0)).value == 1);
  CHECK(bramble_number(Graph(0), Depth(0)).value == 0);
  CHECK(bramble_number(petersen_graph(), Depth(0)).value == 2);
  CHECK(tangle_number(complete_graph(4), Depth(0)).value <= 4);
}

TEST_CASE("every witness element is referenced by the certificate") {
  for (const Graph& g : testing_corpus::load("connected_le6.g6")) {
    BrambleNumber bn = bramble_number(g, Depth(1));
    REQUIRE(bn.certificate.misses.has_value());
    std::vector<char> used(bn.witness.elements.size(), 0);
    for (const auto& [x, index] : *bn.certificate.misses) used[index] = 1;
    CHECK(std::find(used.begin(), used.end(), 0) == used.end());
  }
}

TEST_CASE("bramble number relations on the connected corpus") {
  for (const Graph& g : testing_corpus::load("connected_le6.g6")) {
    CHECK(bramble_number(g, Depth(0)).value == oracle::clique_number(g));
    CHECK(bramble_number(g, Depth::infinity()).value == oracle::treewidth(g) + 1);
    int prev = 0;
    for (Depth r : {Depth(0), Depth(1), Depth(2), Depth::infinity()}) {
      int bn = bramble_number(g, r).value;
      CHECK(prev <= bn);
      prev = bn;
      int b2 = t_bramble_number(g, r, 2).value;
      int b3 = t_bramble_number(g, r, 3).value;
      int tn = tangle_number(g, r).value;
      CHECK(b3 <= b2);
      CHECK(b2 <= bn);
      CHECK(b3 <= tn);
      CHECK(tn <= bn);
    }
  }
}

TEST_CASE("t-brambles and tangles") {
  Graph c6 = cycle_graph(6);
  CHECK_FALSE(is_t_bramble(c6, windows_c6(), Depth(1), 3));
  CHECK(is_t_bramble(c6, windows_c6(), Depth(1), 2));
  CHECK_FALSE(is_tangle(c6, windows_c6(), Depth(1)));
  CHECK(is_tangle(c6, Bramble::from_elements({{0, 1, 2}, {1, 2, 3}, {2, 3, 4}}, Depth(1)), Depth(1)));
  Bramble spread = Bramble::from_elements({{1}, {2, 3}, {0, 4, 5}}, Depth(1));
  CHECK_FALSE(is_tangle(c6, spread, Depth(1)));
  CHECK_THROWS_AS(is_tangle(c6, Bramble::from_elements({{0}, {3}}, Depth(0)), Depth(0)), InvalidArgument);
  CHECK(find_bramble_of_order(c6, Depth(1), 3, {}).has_value());
  CHECK_FALSE(find_bramble_of_order(c6, Depth(1), 4, {}).has_value());
}

TEST_CASE("hitting set from an order") {
  Graph c6 = cycle_graph(6);
  auto res = hitting_set_from_order(c6, windows_c6(), LinearOrder::identity(6), Depth(1));
  for (VertexSet e : windows_c6().elements) CHECK(e.intersects(res.hitting_set));
  CHECK(res.hitting_set.is_subset_of(res.pivot_reach));
  CHECK(res.pivot == 2);
}

TEST_CASE("constructions on every maximum bramble of the small corpus") {
  std::mt19937 rng(5);
  for (const Graph& g : testing_corpus::load("connected_le5.g6")) {
    for (Depth r : {Depth(0), Depth(1)}) {
      BrambleNumber bn = bramble_number(g, r);
      const int rr = as_int(r);
      for (int trial = 0; trial < 5; ++trial) {
        std::vector<int> seq(g.vertex_count());
        std::iota(seq.begin(), seq.end(), 0);
        std::shuffle(seq.begin(), seq.end(), rng);
        auto res = hitting_set_from_order(g, bn.witness, LinearOrder(seq), r);
        std::vector<int> position(seq.size());
        for (std::size_t i = 0; i < seq.size(); ++i) position[seq[i]] = static_cast<int>(i);
        CHECK((res.hitting_set.bits() & ~oracle::sreach(g, 4 * rr + 1, position, res.pivot)) == 0);
        for (VertexSet e : bn.witness.elements) CHECK(e.intersects(res.hitting_set));
      }
      auto trace = clique_model_from_bramble(g, bn.witness, r);
      const int omega = oracle::shallow_clique(g, 5 * rr + 1);
      CHECK(trace.clique_bound == omega);
      CHECK(static_cast<int>(trace.model.branch_sets.size()) <= omega);
      CHECK(trace.vertices.size() <= (5 * rr + 1) * omega * omega);
      CHECK(trace.within_loose_bound);
      std::vector<oracle::Mask> sets;
      for (VertexSet b : trace.model.branch_sets) sets.push_back(b.bits());
      CHECK(oracle::branch_sets_ok(g, sets, 5 * rr + 1));
      const int s = static_cast<int>(sets.size());
      CHECK(oracle::contracted_edges(g, sets) == s * (s - 1) / 2);
      for (VertexSet e : bn.witness.elements) CHECK(e.intersects(trace.vertices));
      for (int t : {1, 2, 3}) {
        Bramble lifted = lift_to_t_bramble(g, bn.witness, bn.certificate, r, t);
        auto m = masks(lifted);
        CHECK(oracle::is_bramble(g, m, 3 * rr + 1));
        CHECK(oracle::t_intersecting(m, t));
        CHECK(oracle::min_hitting_set(g, m) >= (bn.value + t - 1) / t);
      }
    }
  }
}

TEST_CASE("constructions reject invalid input") {
  Graph c6 = cycle_graph(6);
  Bramble bad = Bramble::from_elements({{0}, {3}}, Depth(0));
  CHECK_THROWS_AS(hitting_set_from_order(c6, bad, LinearOrder::identity(6), Depth(0)), InvalidArgument);
  CHECK_THROWS_AS(clique_model_from_bramble(c6, bad, Depth(0)), InvalidArgument);
  OrderCertificate cert = bramble_order(c6, windows_c6());
  cert.order = 1;
  CHECK_THROWS_AS(lift_to_t_bramble(c6, windows_c6(), cert, Depth(1), 2), InvalidArgument);
}
