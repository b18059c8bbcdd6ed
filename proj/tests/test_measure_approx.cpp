#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "hyperb/boundary_metrics.hpp"
#include "hyperb/generators.hpp"
#include "hyperb/horizon.hpp"
#include "hyperb/measure_approx.hpp"

using namespace hyperb;

TEST_CASE("partition of unity matches the window rule") {
  const Graph g = regular_tree(3, 5);
  const double a = 0.6;
  const Distance n = 3;
  const auto p = build_partition(g, g.base(), n, a);
  const auto t = inner_metric(g, g.base(), a);
  const double eps = std::exp(-a * n);
  CHECK(p.epsilon == doctest::Approx(eps));
  const auto sphere = g.sphere(g.base(), n);
  CHECK(p.sphere == sphere);
  for (Vertex z = 0; z < g.vertex_count(); ++z) {
    const std::size_t zi = t.require_index(z);
    double to_sphere = 1e300;
    for (Vertex s : sphere) to_sphere = std::min(to_sphere, t.rho(zi, t.require_index(s)));
    std::vector<double> f;
    double sum = 0;
    for (Vertex s : sphere) {
      f.push_back(std::max(0.0, 1.0 - (t.rho(zi, t.require_index(s)) - to_sphere) / eps));
      sum += f.back();
    }
    double total = 0;
    for (std::size_t i = 0; i < sphere.size(); ++i) {
      CHECK(p.value(sphere[i], z) == doctest::Approx(f[i] / sum).epsilon(1e-12));
      total += p.value(sphere[i], z);
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  }
  // A sphere point sees itself with full window weight.
  for (Vertex s : sphere)
    for (Vertex u : sphere) CHECK(p.value(s, s) >= p.value(u, s));
}

TEST_CASE("single-vertex sphere gives the constant function") {
  const Graph g(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}, 0);
  const auto p = build_partition(g, 0, 2, 0.5);
  REQUIRE(p.sphere.size() == 1);
  for (Vertex z = 0; z < 5; ++z) CHECK(p.value(p.sphere[0], z) == 1.0);
  CHECK_THROWS_AS(build_partition(g, 0, 9, 0.5), GraphError);
}

TEST_CASE("projection is linear, positive and mass preserving") {
  const Graph g = regular_tree(3, 6);
  const auto p = build_partition(g, g.base(), 3, 0.5);
  const Vertex s = p.sphere[2];
  const auto ps = project_pi_n(p, FiniteMeasure::dirac(s));
  CHECK(ps.mass() == doctest::Approx(1.0));
  for (const auto& [u, w] : ps) CHECK(w == doctest::Approx(p.value(u, s)));

  std::mt19937_64 rng(4);
  std::uniform_int_distribution<Vertex> pick(0, g.vertex_count() - 1);
  FiniteMeasure a, b;
  for (int i = 0; i < 10; ++i) {
    a.add(pick(rng), 0.05);
    b.add(pick(rng), 0.05);
  }
  auto sum = a;
  sum += b;
  const auto pa = project_pi_n(p, a), pb = project_pi_n(p, b), psum = project_pi_n(p, sum);
  CHECK(psum.mass() == doctest::Approx(1.0));
  for (Vertex u : p.sphere) CHECK(psum[u] == doctest::Approx(pa[u] + pb[u]));

  SignedMeasure signed_m;
  for (const auto& [v, w] : a) signed_m.add(v, w);
  for (const auto& [v, w] : b) signed_m.add(v, -2 * w);
  const auto proj = project_pi_n(p, signed_m);
  CHECK(total_variation(proj, SignedMeasure{}) <= total_variation(signed_m, SignedMeasure{}) + 1e-12);
}

TEST_CASE("uniform horizon measure projects to the uniform sphere measure") {
  const Graph g = regular_tree(3, 7);
  const auto horizon = horizon_vertices(g, 7);
  FiniteMeasure theta;
  for (Vertex h : horizon) theta.add(h, 1.0 / horizon.size());
  for (Distance n = 1; n <= 5; ++n) {
    const auto p = build_partition(g, g.base(), n, 0.5, std::nullopt, horizon);
    const auto pi = project_pi_n(p, theta);
    CHECK(pi.support_size() == p.sphere.size());
    for (Vertex s : p.sphere) CHECK(pi[s] == doctest::Approx(1.0 / p.sphere.size()));
  }
}

TEST_CASE("support containments for every horizon atom") {
  const Graph g = regular_tree(3, 7);
  for (double a : {0.5, 1.0}) {
    for (Distance n = 2; n <= 5; ++n) {
      const auto p = build_partition(g, g.base(), n, a, std::nullopt, horizon_vertices(g, 7));
      for (Vertex gamma : horizon_vertices(g, 7)) {
        const auto rep = check_support(p, gamma);
        CHECK(rep.supp);
        CHECK(rep.supp3);
        CHECK(rep.rho_to_sphere <= std::exp(-a * n) * (1 + 1e-12));
      }
    }
  }
}

TEST_CASE("weak-star convergence series") {
  const Graph g = regular_tree(3, 8);
  const double a = 0.5;
  const auto horizon = horizon_vertices(g, 8);
  const Vertex g0 = horizon[40];
  BoundaryMeasure theta;
  theta.radius = 8;
  theta.weights.add(g0, 1.0);
  SUBCASE("constant test function") {
    const std::vector<double> f(static_cast<std::size_t>(g.vertex_count()), 3.5);
    for (const auto& row : weakstar_convergence_check(g, g.base(), a, theta, f, 0.0, {1, 3, 5}))
      CHECK(row.difference == doctest::Approx(0.0).epsilon(1e-12));
  }
  SUBCASE("distance to the atom") {
    const auto t = inner_metric(g, g.base(), a);
    std::vector<double> f(static_cast<std::size_t>(g.vertex_count()));
    const auto row0 = t.rho_row(t.require_index(g0));
    for (std::size_t j = 0; j < t.size(); ++j) f[static_cast<std::size_t>(t.point(j))] = (*row0)[j];
    for (const auto& row : weakstar_convergence_check(g, g.base(), a, theta, f, 1.0, {1, 2, 4, 6})) {
      CHECK(row.holds);
      CHECK(row.difference <= 2 * std::exp(-a * row.n) + 1e-12);
    }
  }
}

TEST_CASE("atom extraction") {
  const Graph g = regular_tree(3, 8);
  const auto horizon = horizon_vertices(g, 8);
  BoundaryMeasure dirac;
  dirac.radius = 8;
  dirac.weights.add(horizon[5], 1.0);
  const auto one = extract_atoms(g, g.base(), 1.0, dirac, 6);
  CHECK(one.W == doctest::Approx(1.0));
  CHECK(one.atomic_support == std::vector<Vertex>{horizon[5]});
  CHECK(one.W_series.size() == 6);

  BoundaryMeasure pair;
  pair.radius = 8;
  pair.weights.add(horizon[0], 0.5);
  pair.weights.add(horizon.back(), 0.5);
  const auto two = extract_atoms(g, g.base(), 1.0, pair, 6);
  CHECK(two.W == doctest::Approx(0.5));
  CHECK(two.atomic_support == std::vector<Vertex>{horizon[0], horizon.back()});
  CHECK(two.unresolved.empty());

  // Neighbouring leaves cannot be told apart at this depth.
  BoundaryMeasure close;
  close.radius = 8;
  close.weights.add(horizon[0], 0.5);
  close.weights.add(horizon[1], 0.5);
  CHECK(!extract_atoms(g, g.base(), 1.0, close, 4).unresolved.empty());
}

TEST_CASE("Hahn decomposition") {
  SignedMeasure m;
  m.add(1, 0.5);
  m.add(2, 1.5);
  auto [pos, neg] = hahn_split(m);
  CHECK(neg.empty());
  CHECK(pos[1] == 0.5);
  SignedMeasure d;
  d.add(3, 1.0);
  d.add(4, -1.0);
  std::tie(pos, neg) = hahn_split(d);
  CHECK(pos == FiniteMeasure::dirac(3));
  CHECK(neg == FiniteMeasure::dirac(4));

  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> w(-1, 1);
  SignedMeasure r;
  for (Vertex v = 0; v < 50; ++v) r.add(v, w(rng));
  std::tie(pos, neg) = hahn_split(r);
  for (const auto& [v, x] : pos) CHECK(neg[v] == 0.0);
  for (Vertex v = 0; v < 50; ++v) CHECK(pos[v] - neg[v] == r[v]);
}

TEST_CASE("partition CSV") {
  const Graph g(3, {{0, 1}, {1, 2}}, 0);
  const auto p = build_partition(g, 0, 1, 1.0);
  std::ostringstream out;
  write_partition_csv(p, out);
  CHECK(out.str().rfind("s,z,phi\n", 0) == 0);
}
