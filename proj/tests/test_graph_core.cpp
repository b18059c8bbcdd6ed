#include <doctest.h>

#include <sstream>

#include "hyperb/generators.hpp"
#include "hyperb/geodesics.hpp"
#include "hyperb/horizon.hpp"
#include "hyperb/hyperbolicity.hpp"
#include "oracles.hpp"

using namespace hyperb;

TEST_CASE("gromov product on a path equals the nearer distance") {
  const Graph g = path_graph(6);
  CHECK(gromov_product(g, 0, 5, 3) == HalfInt::from_int(3));
  CHECK(gromov_product(g, 2, 2, 4) == HalfInt::from_int(0));
}

TEST_CASE("gromov product on a random graph matches a BFS reimplementation") {
  const Graph g = random_connected(20, 8, 7);
  const auto d = oracle::apsp(oracle::adjacency(g));
  CHECK(gromov_product(g, 2, 11, 17).twice() == oracle::twice_gromov(d, 2, 11, 17));
  for (int x = 0; x < 20; x += 3)
    for (int y = 0; y < 20; y += 2)
      for (int z = 1; z < 20; z += 5) {
        CHECK(gromov_product(g, x, y, z).twice() == oracle::twice_gromov(d, x, y, z));
      }
}

TEST_CASE("four-point delta") {
  SUBCASE("trees") {
    CHECK(delta_four_point(regular_tree(3, 4)) == HalfInt());
    CHECK(delta_four_point(tripod(5)) == HalfInt());
    CHECK(delta_four_point(path_graph(9)) == HalfInt());
  }
  SUBCASE("complete graph K5") {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int u = 0; u < 5; ++u)
      for (int v = u + 1; v < 5; ++v) edges.emplace_back(u, v);
    CHECK(delta_four_point(Graph(5, edges, 0)) == HalfInt());
  }
  SUBCASE("cycles and grids against the exhaustive scan") {
    for (const char* spec : {"cycle:8", "cycle:7", "grid:4:3", "random:12:5:3"}) {
      const Graph g = generate(spec);
      const auto d = oracle::apsp(oracle::adjacency(g));
      CHECK_MESSAGE(delta_four_point(g).twice() == oracle::twice_four_point(d), spec);
    }
  }
}

TEST_CASE("Rips delta") {
  CHECK(delta_rips(regular_tree(3, 4), 1).delta == HalfInt());
  CHECK(delta_rips(path_graph(7), 64).delta == HalfInt());
  for (const char* spec : {"cycle:6", "cycle:5", "cycle:3", "grid:3:3", "random:9:3:11", "random:8:1:83"}) {
    const Graph g = generate(spec);
    CHECK_MESSAGE(delta_rips(g, 100000).delta.twice() == oracle::twice_rips_delta(oracle::adjacency(g)), spec);
  }
  // A triangle is thin only up to its edge midpoints.
  CHECK(delta_rips(cycle_graph(3), 8).delta == HalfInt::from_twice(1));
  const Graph grid = grid_graph(5, 5);
  CHECK(delta_rips(grid, 4).delta <= delta_rips(grid, 100000).delta);
}

TEST_CASE("geodesic enumeration") {
  SUBCASE("trees have unique geodesics") {
    const Graph g = regular_tree(3, 3);
    for (Vertex v = 0; v < g.vertex_count(); v += 3) {
      const auto geos = enumerate_geodesics(g, 5, v, 10);
      REQUIRE(geos.size() == 1);
      CHECK(is_geodesic(g, geos[0]));
    }
  }
  SUBCASE("antipodal pair on C4") {
    const Graph g = cycle_graph(4);
    const auto a = g.sphere(0, 2);
    REQUIRE(a.size() == 1);
    CHECK(enumerate_geodesics(g, 0, a[0], 10).size() == 2);
  }
  SUBCASE("grid corners against lattice path counting") {
    const Graph g = grid_graph(3, 3);
    const auto far = g.sphere(g.base(), 2);
    // Corners are the vertices of degree 2.
    std::vector<Vertex> corners;
    for (Vertex v : far)
      if (g.degree(v) == 2) corners.push_back(v);
    REQUIRE(corners.size() == 4);
    Vertex opposite = -1;
    for (Vertex v : corners)
      if (g.dist(corners[0], v) == 4) opposite = v;
    const auto geos = enumerate_geodesics(g, corners[0], opposite, 100);
    CHECK(geos.size() == oracle::lattice_paths(3, 3));
    CHECK(count_geodesics(g, corners[0], opposite) == oracle::lattice_paths(3, 3));
    for (const auto& s : geos) CHECK(is_geodesic(g, s));
  }
  SUBCASE("cap is respected") {
    const Graph g = grid_graph(6, 6);
    const Vertex u = 0;
    Vertex far = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      if (g.dist(u, v) > g.dist(u, far)) far = v;
    CHECK(enumerate_geodesics(g, u, far, 7).size() == 7);
  }
}

TEST_CASE("generators") {
  CHECK(regular_tree(4, 3).vertex_count() == 53);
  const Graph c = cycle_graph(8);
  CHECK(c.vertex_count() == 8);
  for (Vertex v = 0; v < 8; ++v) CHECK(c.degree(v) == 2);
  const int orders[] = {2, 2, 2};
  CHECK(static_cast<std::uint64_t>(free_product_cyclic(orders, 5).vertex_count()) ==
        oracle::involution_words(3, 5));
  // F2: 1 + 4 * (3^R - 1) / 2 elements of length <= R.
  CHECK(free_group(2, 6).vertex_count() == 1 + 2 * (729 - 1));
  CHECK(grid_graph(9, 9).vertex_count() == 81);
}

TEST_CASE("graph distances agree with plain BFS") {
  for (const char* spec : {"random:40:12:1", "grid:7:5", "freegroup:2:4"}) {
    const Graph g = generate(spec);
    const auto adj = oracle::adjacency(g);
    for (Vertex s = 0; s < g.vertex_count(); s += 7) {
      const auto ref = oracle::bfs(adj, s);
      const auto row = g.row(s);
      for (std::size_t v = 0; v < ref.size(); ++v) CHECK((*row)[v] == ref[v]);
    }
  }
}

TEST_CASE("graph text format round trip and parse errors") {
  const Graph g = random_connected(15, 4, 3);
  const Graph h = Graph::parse(g.serialize());
  CHECK(h.vertex_count() == g.vertex_count());
  CHECK(h.edge_count() == g.edge_count());
  CHECK(h.base() == g.base());
  for (Vertex u = 0; u < g.vertex_count(); ++u)
    for (Vertex v = 0; v < g.vertex_count(); ++v) CHECK(h.dist(u, v) == g.dist(u, v));
  CHECK_THROWS_AS(Graph::parse("3 1 0\n0 5\n"), GraphError);
  CHECK_THROWS_AS(Graph::parse("3 1 0\n0 1\n"), GraphError);  // disconnected
  CHECK_THROWS_AS(generate("nosuch:3"), GraphError);
}

TEST_CASE("insize inequality on random graphs") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const Graph g = random_connected(14, 4, seed);
    const auto est = delta_rips(g, 1000);
    const auto rep = check_insize(g, est.delta, 1000);
    CHECK(rep.checks > 0);
    CHECK(rep.failures == 0);
    CHECK(rep.min_gap >= HalfInt());
  }
}

TEST_CASE("horizon rays and sausage check") {
  const Graph g = free_group(2, 6);
  const auto horizon = horizon_vertices(g, 6);
  CHECK(horizon.size() == 4 * 243);
  const auto hp = horizon_point(g, horizon[17]);
  CHECK(hp.ray.length() == 6);
  CHECK(hp.at(0) == g.base());
  CHECK(is_geodesic(g, hp.ray));
  const auto same = sausage_check(g, hp.ray, hp.ray);
  CHECK(same.constant == 0);
  CHECK(same.shift == 0);
}
