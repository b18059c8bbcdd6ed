#include <doctest.h>

#include <algorithm>
#include <random>

#include "hyperb/barycenter.hpp"
#include "hyperb/generators.hpp"
#include "oracles.hpp"

using namespace hyperb;

namespace {

BoundaryMeasure atoms(Distance radius, std::vector<std::pair<Vertex, double>> w) {
  BoundaryMeasure m;
  m.radius = radius;
  for (auto [v, x] : w) m.weights.add(v, x);
  return m;
}

BoundaryMeasure random_uniform(const CocycleContext& ctx, int k, std::mt19937_64& rng) {
  auto h = ctx.horizon();
  std::shuffle(h.begin(), h.end(), rng);
  BoundaryMeasure m;
  m.radius = ctx.horizon_radius();
  for (int i = 0; i < k; ++i) m.weights.add(h[static_cast<std::size_t>(i)], 1.0 / k);
  return m;
}

// Automorphism of a regular tree ball that swaps the first two branches at
// the base and is order preserving everywhere else.
std::vector<Vertex> swap_branches(const Graph& g) {
  const auto& d = g.base_row();
  auto children = [&](Vertex v) {
    std::vector<Vertex> c;
    for (Vertex w : g.neighbors(v))
      if (d[w] == d[v] + 1) c.push_back(w);
    return c;
  };
  std::vector<Vertex> phi(static_cast<std::size_t>(g.vertex_count()), -1);
  phi[g.base()] = g.base();
  std::vector<Vertex> stack{g.base()};
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    auto from = children(v);
    auto to = children(phi[v]);
    if (v == g.base()) std::swap(to[0], to[1]);
    for (std::size_t i = 0; i < from.size(); ++i) {
      phi[from[i]] = to[i];
      stack.push_back(from[i]);
    }
  }
  return phi;
}

}  // namespace

TEST_CASE("symmetric tripod barycenter") {
  const Graph g = tripod(6);
  const auto ctx = CocycleContext::build(g);
  const auto& h = ctx.horizon();
  REQUIRE(h.size() == 3);
  const auto lambda = atoms(6, {{h[0], 1.0 / 3}, {h[1], 1.0 / 3}, {h[2], 1.0 / 3}});
  const auto res = quasi_barycenter(ctx, lambda, g.base(), 0.0);
  CHECK(std::find(res.set.begin(), res.set.end(), g.base()) != res.set.end());
  CHECK(res.set == std::vector<Vertex>{g.base()});
  const auto profile = barycenter_profile(ctx, lambda, g.base());
  for (Vertex y = 0; y < g.vertex_count(); ++y) {
    if (y != g.base() && g.dist(g.base(), y) <= 3) CHECK(profile[y] > 0.0);
  }
}

TEST_CASE("heavy atoms are rejected") {
  const Graph g = tripod(5);
  const auto ctx = CocycleContext::build(g);
  const auto& h = ctx.horizon();
  const auto heavy = atoms(5, {{h[0], 0.6}, {h[1], 0.4}});
  CHECK_THROWS_AS(quasi_barycenter(ctx, heavy, g.base(), 1.0), AtomTooHeavy);
  const auto half = atoms(5, {{h[0], 0.5}, {h[1], 0.5}});
  CHECK_THROWS_AS(quasi_barycenter(ctx, half, g.base(), 1.0), AtomTooHeavy);
  try {
    quasi_barycenter(ctx, heavy, g.base(), 1.0);
  } catch (const AtomTooHeavy& e) {
    CHECK(e.atom() == h[0]);
    CHECK(e.weight() == doctest::Approx(0.6));
  }
  const auto light = atoms(5, {{h[0], 0.49}, {h[1], 0.26}, {h[2], 0.25}});
  CHECK_NOTHROW(quasi_barycenter(ctx, light, g.base(), 1.0));
}

TEST_CASE("sublevel set matches an exhaustive scan on F2") {
  const Graph g = free_group(2, 8);
  const auto ctx = CocycleContext::build(g);
  std::mt19937_64 rng(5);
  const auto lambda = random_uniform(ctx, 3, rng);
  const double r = 2.0;
  const auto res = quasi_barycenter(ctx, lambda, g.base(), r);

  // Direct evaluation of B(base, y) from per-vertex BFS rows of the cells.
  const auto adj = oracle::adjacency(g);
  const auto dx = oracle::bfs(adj, g.base());
  std::vector<double> total(static_cast<std::size_t>(g.vertex_count()), 0.0);
  for (const auto& [gamma, w] : lambda.weights) {
    std::vector<int> best(total.size(), -1 << 30);
    for (Vertex z : *ctx.cell(gamma)) {
      const auto dz = oracle::bfs(adj, z);
      for (std::size_t y = 0; y < total.size(); ++y) best[y] = std::max(best[y], dz[y] - dx[z]);
    }
    for (std::size_t y = 0; y < total.size(); ++y) total[y] += w * best[y];
  }
  total[g.base()] = 0.0;
  const double inf = *std::min_element(total.begin(), total.end());
  std::vector<Vertex> expect;
  for (std::size_t y = 0; y < total.size(); ++y)
    if (total[y] <= inf + r + 1e-9) expect.push_back(static_cast<Vertex>(y));
  CHECK(res.infimum == doctest::Approx(inf));
  CHECK(res.set == expect);
}

TEST_CASE("stability of barycenter sets") {
  SUBCASE("same basepoint") {
    const Graph g = tripod(5);
    const auto ctx = CocycleContext::build(g);
    const auto& h = ctx.horizon();
    const auto lambda = atoms(5, {{h[0], 0.4}, {h[1], 0.3}, {h[2], 0.3}});
    CHECK(barycenter_stability_check(ctx, lambda, 3, 3, 1.0).holds());
  }
  SUBCASE("tripod centre and a depth-two point") {
    const Graph g = tripod(6);
    const auto ctx = CocycleContext::build(g);
    const auto& h = ctx.horizon();
    const auto lambda = atoms(6, {{h[0], 1.0 / 3}, {h[1], 1.0 / 3}, {h[2], 1.0 / 3}});
    const Vertex xp = g.sphere(g.base(), 2)[0];
    const auto rep = barycenter_stability_check(ctx, lambda, g.base(), xp, 0.0);
    CHECK(rep.holds());
    CHECK(!rep.inner.empty());
  }
  SUBCASE("random pairs on F2") {
    const Graph g = free_group(2, 6);
    const auto ctx = CocycleContext::build(g);
    std::mt19937_64 rng(8);
    const auto lambda = random_uniform(ctx, 3, rng);
    const auto pool = g.ball(g.base(), 3);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (int i = 0; i < 10; ++i) {
      CHECK(barycenter_stability_check(ctx, lambda, pool[pick(rng)], pool[pick(rng)], 1.0).holds());
    }
  }
}

TEST_CASE("classification of boundary measures") {
  const Graph g = tripod(6);
  const auto ctx = CocycleContext::build(g);
  const auto& h = ctx.horizon();
  const auto one = classify_measure(ctx, atoms(6, {{h[1], 1.0}}));
  CHECK(one.kind == MeasureKind::Elementary1);
  CHECK(one.set == std::vector<Vertex>{h[1]});
  const auto two = classify_measure(ctx, atoms(6, {{h[0], 0.5}, {h[2], 0.5}}));
  CHECK(two.kind == MeasureKind::Elementary2);
  CHECK(two.set == std::vector<Vertex>{h[0], h[2]});
  const auto bulky =
      classify_measure(ctx, atoms(6, {{h[0], 1.0 / 3}, {h[1], 1.0 / 3}, {h[2], 1.0 / 3}}));
  CHECK(bulky.kind == MeasureKind::Bulky);
  CHECK(std::find(bulky.set.begin(), bulky.set.end(), g.base()) != bulky.set.end());
  CHECK(to_string(MeasureKind::Bulky) == "Bulky");

  // Three atoms with one dominant: rebalanced before classification.
  const auto skew = classify_measure(ctx, atoms(6, {{h[0], 0.8}, {h[1], 0.1}, {h[2], 0.1}}));
  CHECK(skew.kind == MeasureKind::Bulky);
}

TEST_CASE("classification ignores relabelling of equal-weight atoms") {
  const Graph g = free_group(2, 5);
  const auto ctx = CocycleContext::build(g);
  const auto& h = ctx.horizon();
  const auto a = classify_measure(ctx, atoms(5, {{h[1], 0.25}, {h[50], 0.25}, {h[90], 0.5}}));
  const auto b = classify_measure(ctx, atoms(5, {{h[50], 0.25}, {h[1], 0.25}, {h[90], 0.5}}));
  CHECK(a.kind == b.kind);
  CHECK(a.set == b.set);
}

TEST_CASE("atom rebalancing") {
  const auto m = rebalance_atoms(atoms(4, {{1, 0.7}, {2, 0.2}, {3, 0.1}}));
  CHECK(m.weights.mass() == doctest::Approx(1.0));
  CHECK(m.max_atom() < 0.5);
  for (const auto& [v, w] : m.weights) CHECK(w > 0.0);
}

TEST_CASE("barycenter sets are equivariant under tree automorphisms") {
  const Graph g = regular_tree(3, 6);
  const auto ctx = CocycleContext::build(g);
  const auto phi = swap_branches(g);
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 3; ++trial) {
    const auto lambda = random_uniform(ctx, 3, rng);
    BoundaryMeasure pushed;
    pushed.radius = lambda.radius;
    for (const auto& [v, w] : lambda.weights) pushed.weights.add(phi[v], w);
    const Vertex x = g.ball(g.base(), 2)[static_cast<std::size_t>(trial * 3)];
    const auto c = quasi_barycenter(ctx, lambda, x, 1.5, false);
    const auto pc = quasi_barycenter(ctx, pushed, phi[x], 1.5, false);
    std::vector<Vertex> image;
    for (Vertex v : c.set) image.push_back(phi[v]);
    std::sort(image.begin(), image.end());
    CHECK(pc.set == image);
  }
}

TEST_CASE("escape: sphere minima grow beyond the burn-in") {
  const Graph g = free_group(2, 7);
  const auto ctx = CocycleContext::build(g);
  std::mt19937_64 rng(2);
  const auto lambda = random_uniform(ctx, 4, rng);
  const auto minima = sphere_minima(ctx, lambda, g.base());
  CHECK(minima.size() == 8);
  const std::size_t burn = escape_burn_in(minima);
  CHECK(burn < minima.size());
  for (std::size_t k = burn + 1; k < minima.size(); ++k) CHECK(minima[k] >= minima[k - 1]);
}
