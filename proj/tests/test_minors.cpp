#include <doctest.h>

#include "corpus.hpp"
#include "oracles.hpp"
#include "shallow/errors.hpp"
#include "shallow/generators.hpp"
#include "shallow/minors.hpp"

using namespace shallow;

namespace {

int as_int(Depth r) { return r.is_infinite() ? -1 : static_cast<int>(r.value()); }

}  // namespace

TEST_CASE("model validation") {
  Graph c6 = cycle_graph(6);
  Graph k3 = complete_graph(3);
  MinorModel pairs{{{0, 1}, {2, 3}, {4, 5}}, Depth(1)};
  CHECK(validate_model(c6, k3, pairs, Depth(1)));
  CHECK_FALSE(validate_model(c6, k3, pairs, Depth(0)));
  MinorModel gap{{{0}, {2}, {4}}, Depth(0)};
  CHECK_FALSE(validate_model(c6, k3, gap, Depth(0)));
  MinorModel overlap{{{0, 1}, {1, 2}, {3, 4, 5}}, Depth(1)};
  CHECK_FALSE(validate_model(c6, k3, overlap, Depth(2)));
  MinorModel split{{{0, 3}, {1}, {2}}, Depth::infinity()};
  CHECK_FALSE(validate_model(c6, k3, split, Depth::infinity()));
  MinorModel short_model{{{0}, {1}}, Depth(0)};
  CHECK_THROWS_AS(validate_model(c6, k3, short_model, Depth(0)), InvalidArgument);
}

TEST_CASE("shallow clique numbers") {
  CHECK(shallow_clique_number(complete_graph(4), Depth(1)).size == 4);
  CHECK(shallow_clique_number(path_graph(4), Depth(1)).size == 2);
  CHECK(shallow_clique_number(cycle_graph(6), Depth(0)).size == 2);
  CHECK(shallow_clique_number(cycle_graph(6), Depth(1)).size == 3);
  CHECK(shallow_clique_number(petersen_graph(), Depth(1)).size == 5);
  CHECK(shallow_clique_number(Graph(1), Depth(3)).size == 1);
}

TEST_CASE("clique, density and grid numbers match the labelling oracle") {
  for (const Graph& g : testing_corpus::load("all_le6.g6")) {
    for (Depth r : {Depth(0), Depth(1), Depth::infinity()}) {
      CliqueMinor w = shallow_clique_number(g, r);
      CHECK(w.size == oracle::shallow_clique(g, as_int(r)));
      CHECK(validate_model(g, complete_graph(w.size), w.model, r));
      GridMinor grid = shallow_grid_number(g, r);
      CHECK(validate_model(g, grid_graph(grid.side), grid.model, r));
      if (g.vertex_count() >= 4) CHECK((grid.side >= 2) == oracle::has_minor(g, grid_graph(2), as_int(r)));
      if (g.vertex_count() <= 5) {
        DensityMinor d = shallow_density(g, r);
        auto [num, den] = oracle::shallow_density(g, as_int(r));
        CHECK(d.density == Rational(num, den));
        CHECK(contracted_edge_count(g, d.branch_sets) == d.edges);
      }
    }
  }
}

TEST_CASE("cross relations between the minor parameters") {
  for (const Graph& g : testing_corpus::load("connected_le6.g6")) {
    for (Depth r : {Depth(0), Depth(1), Depth(2)}) {
      int omega = shallow_clique_number(g, r).size;
      Rational nabla = shallow_density(g, r).density;
      int grid = shallow_grid_number(g, r).side;
      CHECK(Rational(omega) <= Rational(2) * nabla + Rational(1));
      int root = 0;
      while ((root + 1) * (root + 1) <= omega) ++root;
      CHECK(root <= grid);
      CHECK(omega <= shallow_clique_number(g, Depth(r.value() + 1)).size);
    }
  }
}

TEST_CASE("finding explicit patterns") {
  auto model = find_shallow_minor(grid_graph(3), complete_graph(4), Depth(1));
  REQUIRE(model.has_value());
  CHECK(validate_model(grid_graph(3), complete_graph(4), *model, Depth(1)));
  CHECK_FALSE(find_shallow_minor(grid_graph(3), complete_graph(5), Depth::infinity()).has_value());
  CHECK(shallow_grid_number(grid_graph(3), Depth(0)).side == 3);
  CHECK(shallow_grid_number(Graph(1), Depth(0)).side == 1);
}
