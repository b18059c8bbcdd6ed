// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failing criteria (0 when everything passes). Pass criterion
// numbers as arguments to run a subset.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "hyperb/amenability.hpp"
#include "hyperb/barycenter.hpp"
#include "hyperb/boundary_metrics.hpp"
#include "hyperb/cocycles.hpp"
#include "hyperb/generators.hpp"
#include "hyperb/growth.hpp"
#include "hyperb/horizon.hpp"
#include "hyperb/hyperbolicity.hpp"
#include "hyperb/hyperbolization.hpp"
#include "hyperb/measure_approx.hpp"
#include "hyperb/regular_tree.hpp"

using namespace hyperb;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

BoundaryMeasure uniform_atoms(const std::vector<Vertex>& pts, Distance radius) {
  BoundaryMeasure m;
  m.radius = radius;
  for (Vertex v : pts) m.weights.add(v, 1.0 / static_cast<double>(pts.size()));
  return m;
}

std::vector<Vertex> sample_horizon(const CocycleContext& ctx, int k, std::mt19937_64& rng) {
  auto h = ctx.horizon();
  std::shuffle(h.begin(), h.end(), rng);
  h.resize(static_cast<std::size_t>(k));
  return h;
}

// 1. Insize inequality 0 <= d(x,[y,z]) - (y|z)_x <= 4 delta_rips.
Outcome insize() {
  constexpr std::size_t cap = 256;
  std::vector<std::string> specs{"tree:3:4",  "freegroup:2:3", "freeprod:2,2,2:4", "cycle:10",
                                 "cycle:7",   "grid:6:6",      "path:12",          "tripod:5",
                                 "star:8"};
  std::mt19937_64 rng(1);
  for (int i = 0; i < 100; ++i) {
    const int n = 8 + static_cast<int>(rng() % 33);  // 8..40
    const int extra = static_cast<int>(rng() % static_cast<std::uint64_t>(n / 2 + 1));
    specs.push_back("random:" + std::to_string(n) + ":" + std::to_string(extra) + ":" +
                    std::to_string(i + 1));
  }
  std::uint64_t checks = 0, failures = 0;
  int graphs = 0;
  for (const auto& spec : specs) {
    const Graph g = generate(spec);
    const auto est = delta_rips(g, cap);
    const auto rep = check_insize(g, est.delta, cap);
    checks += rep.checks;
    failures += rep.failures;
    ++graphs;
  }
  return {failures == 0, std::to_string(graphs) + " graphs, " + std::to_string(checks) +
                             " (triple, geodesic) checks, " + std::to_string(failures) + " failures"};
}

// 2. Half sandwich between the visual quasi-metric and the inner metric.
Outcome sandwich() {
  std::uint64_t pairs = 0, failures = 0;
  for (const char* spec : {"grid:6:6", "tree:3:6", "freegroup:2:8", "cycle:10"}) {
    const Graph g = generate(spec);
    const double a = default_visual_exponent(estimate_delta(g, DeltaEstimator::FourPoint));
    const auto t = inner_metric(g, g.base(), a);
    const auto rep = check_half_sandwich(t, 1e-12);
    pairs += rep.pairs;
    failures += rep.failures;
  }
  return {failures == 0, std::to_string(pairs) + " pairs, " + std::to_string(failures) + " failures"};
}

// 3. Quasi-cocycle inequalities and the 3 C2 bound on F2, R = 10.
Outcome quasicocycle() {
  const Graph g = free_group(2, 10);
  const auto ctx = CocycleContext::build(g);
  std::mt19937_64 rng(3);
  const auto lambda = uniform_atoms(sample_horizon(ctx, 3, rng), ctx.horizon_radius());
  const auto pool = g.ball(g.base(), 4);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::vector<std::array<Vertex, 3>> triples(10000);
  for (auto& t : triples) t = {pool[pick(rng)], pool[pick(rng)], pool[pick(rng)]};
  const auto rep = check_quasicocycle(ctx, lambda, triples);
  std::uint64_t checks = 0, failures = 0;
  for (const auto& p : rep.parts) {
    checks += p.checks;
    failures += p.failures;
  }
  return {rep.pass(), "10000 triples, " + std::to_string(checks) + " inequalities, " +
                          std::to_string(failures) + " failures, C2=" + fmt(ctx.C2()) +
                          ", max cell oscillation " + std::to_string(rep.max_oscillation)};
}

struct DecayRun {
  std::string name;
  std::vector<DecayRow> rows;
};

std::vector<DecayRun>& decay_runs() {
  static std::vector<DecayRun> runs;
  return runs;
}

// Lambda decay runs shared by criteria 4 and 5.
const std::vector<DecayRun>& lambda_runs() {
  auto& cache = decay_runs();
  if (!cache.empty()) return cache;
  std::vector<DecayRun> runs;
  for (const char* spec : {"tree:3:12", "freegroup:2:12"}) {
    const Graph g = generate(spec);
    const Distance R = g.base_eccentricity();
    const Vertex gamma = g.sphere(g.base(), R)[static_cast<std::size_t>(R * 7)];
    const auto hp = horizon_point(g, gamma);
    // x and x' two apart on the ray of gamma, deep enough that B(x, 16)
    // still reaches 16 steps away from the horizon endpoint.
    runs.push_back({spec,
                    lambda_decay_experiment(g, hp.at(5), hp.at(7), gamma, {2, 4, 8, 16})});
  }
  cache = std::move(runs);
  return cache;
}

// 4. Sandwich lemma on random instances and every lambda-decay run; Cesaro
// decay for polynomial growth.
Outcome sandwich_lemma() {
  std::mt19937_64 rng(4);
  std::uint64_t checks = 0, failures = 0;
  for (int i = 0; i < 200; ++i) {
    const int tau = 1 + static_cast<int>(rng() % 3);
    const auto inst = random_sandwich_instance(rng, 24, tau, 80);
    for (std::size_t n = static_cast<std::size_t>(tau) + 1; n + static_cast<std::size_t>(tau) <= inst.length(); ++n) {
      ++checks;
      if (!rational_le(cesaro_tv(inst, n), sandwich_bound(inst, n))) ++failures;
    }
  }
  for (const auto& run : lambda_runs()) {
    for (const auto& row : run.rows) {
      ++checks;
      if (!row.holds) ++failures;
    }
  }
  int poly_runs = 0, poly_fail = 0;
  const Graph line = regular_tree(2, 120);
  const Graph grid = grid_graph(141, 141);
  std::vector<std::pair<const Graph*, std::pair<Vertex, Vertex>>> cases{
      {&line, {line.base(), line.sphere(line.base(), 1)[0]}},
      {&line, {line.base(), line.sphere(line.base(), 3)[1]}},
      {&grid, {grid.base(), grid.sphere(grid.base(), 1)[0]}},
      {&grid, {grid.base(), grid.sphere(grid.base(), 2)[3]}}};
  for (const auto& [g, xy] : cases) {
    const auto inst = ball_sandwich(*g, xy.first, xy.second, 68);
    const Rational a = cesaro_tv(inst, 4), b = cesaro_tv(inst, 64);
    ++poly_runs;
    if (!(b < a)) ++poly_fail;
    ++checks;
    if (!rational_le(b, sandwich_bound(inst, 64))) ++failures;
  }
  return {failures == 0 && poly_fail == 0,
          std::to_string(checks) + " bound checks, " + std::to_string(failures) + " failures; " +
              std::to_string(poly_runs - poly_fail) + "/" + std::to_string(poly_runs) +
              " polynomial-growth runs decay from n=4 to n=64"};
}

// 5. Lambda decay: TV at n = 16 at most half the TV at n = 2.
Outcome lambda_decay() {
  bool pass = true;
  std::ostringstream d;
  for (const auto& run : lambda_runs()) {
    const double first = run.rows.front().tv.convert_to<double>();
    const double last = run.rows.back().tv.convert_to<double>();
    const bool ok = run.rows.back().tv * 2 <= run.rows.front().tv;
    pass = pass && ok;
    if (d.tellp() > 0) d << "; ";
    d << run.name << ": " << fmt(first) << " -> " << fmt(last) << (ok ? "" : " (not halved)");
  }
  return {pass, d.str()};
}

// 6. Pre-Patterson Lipschitz bound and geodesic Cesaro decay at delta = 1.2.
Outcome pre_patterson_check() {
  const Graph g = regular_tree(4, 10);
  const double delta = 1.2;
  constexpr Distance truncation = 6;
  const double rate = critical_exponent(g, interior_radius(g));
  std::uint64_t pairs = 0, failures = 0;
  double worst = 0;
  for (Vertex x : g.ball(g.base(), 10 - truncation - 1)) {
    const auto nu = pre_patterson(g, x, delta, truncation, rate);
    for (Vertex xp : g.neighbors(x)) {
      if (g.base_row()[xp] + truncation > 10) continue;
      const auto nup = pre_patterson(g, xp, delta, truncation, rate);
      const double tv = total_variation(nu.measure, nup.measure);
      worst = std::max(worst, tv);
      ++pairs;
      if (tv > 3 * delta * g.dist(x, xp)) ++failures;
    }
  }
  const RegularTreeSpace T(4);
  const double c4 = T.cesaro_tv(delta, 1, 4), c32 = T.cesaro_tv(delta, 1, 32);
  return {failures == 0 && c32 < 0.5 * c4,
          std::to_string(pairs) + " adjacent pairs, max TV " + fmt(worst) + " vs bound " +
              fmt(3 * delta) + ", " + std::to_string(failures) + " failures; Cesaro TV n=4 " +
              fmt(c4) + ", n=32 " + fmt(c32)};
}

// 7. Projection supports and atom extraction on tree(3,10).
Outcome projection() {
  const Graph g = regular_tree(3, 10);
  const double a = 1.0;
  const auto horizon = horizon_vertices(g, 10);
  std::uint64_t checks = 0, failures = 0;
  for (Distance n = 2; n <= 6; ++n) {
    const auto p = build_partition(g, g.base(), n, a, std::nullopt, horizon);
    for (Vertex gamma : horizon) {
      const auto rep = check_support(p, gamma);
      ++checks;
      if (!rep.supp || !rep.supp3) ++failures;
    }
  }
  BoundaryMeasure one, two, mixed;
  one.radius = two.radius = mixed.radius = 10;
  one.weights.add(horizon[100], 1.0);
  two.weights.add(horizon.front(), 0.5);
  two.weights.add(horizon.back(), 0.5);
  for (Vertex h : horizon) mixed.weights.add(h, 0.4 / static_cast<double>(horizon.size()));
  mixed.weights.add(horizon[777], 0.6);
  const double w1 = extract_atoms(g, g.base(), a, one, 8).W;
  const double w2 = extract_atoms(g, g.base(), a, two, 8).W;
  const double w3 = extract_atoms(g, g.base(), a, mixed, 8).W;
  const bool atoms_ok =
      std::abs(w1 - 1.0) <= 0.02 && std::abs(w2 - 0.5) <= 0.02 && std::abs(w3 - 0.6) <= 0.02;
  return {failures == 0 && atoms_ok,
          std::to_string(checks) + " containment checks, " + std::to_string(failures) +
              " failures; W = " + fmt(w1) + ", " + fmt(w2) + ", " + fmt(w3) +
              " (truth 1, 0.5, 0.6)"};
}

// 8. Barycenters: tripod centre, stability, and the heavy-atom precondition.
Outcome barycenter() {
  const Graph tri = tripod(8);
  const auto tctx = CocycleContext::build(tri);
  const auto res = quasi_barycenter(tctx, uniform_atoms(tctx.horizon(), 8), tri.base(), 0.0);
  const bool centre = std::find(res.set.begin(), res.set.end(), tri.base()) != res.set.end();

  const Graph g = free_group(2, 8);
  const auto ctx = CocycleContext::build(g);
  std::mt19937_64 rng(8);
  const auto lambda = uniform_atoms(sample_horizon(ctx, 3, rng), 8);
  const auto pool = g.ball(g.base(), 4);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  int held = 0;
  for (int i = 0; i < 50; ++i) {
    if (barycenter_stability_check(ctx, lambda, pool[pick(rng)], pool[pick(rng)], 1.0).holds()) ++held;
  }

  int exact = 0, total = 0;
  const auto h = sample_horizon(ctx, 3, rng);
  for (double w : {0.2, 0.4, 0.49, 0.4999999, 0.5, 0.5000001, 0.6, 0.9}) {
    BoundaryMeasure m;
    m.radius = 8;
    m.weights.add(h[0], w);
    m.weights.add(h[1], (1 - w) / 2);
    m.weights.add(h[2], (1 - w) / 2);
    bool threw = false;
    try {
      quasi_barycenter(ctx, m, g.base(), 1.0, false);
    } catch (const AtomTooHeavy&) {
      threw = true;
    }
    ++total;
    if (threw == (w >= 0.5)) ++exact;
  }
  return {centre && held == 50 && exact == total,
          std::string("tripod centre ") + (centre ? "found" : "missing") + "; stability " +
              std::to_string(held) + "/50; AtomTooHeavy exact on " + std::to_string(exact) + "/" +
              std::to_string(total) + " weights"};
}

// 9. Hyperbolization: comparison tests, vertical identity, isometric action.
Outcome hyperbolization() {
  std::uint64_t pass_e = 0, pass_t = 0;
  double worst = -1e300;
  {
    const HSpace<EuclideanBase> X{EuclideanBase(1)};
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> h(-3, 3);
    for (int i = 0; i < 10000; ++i) {
      std::array<HSpace<EuclideanBase>::Point, 3> t;
      for (auto& p : t) p = {h(rng), X.base().random_point(rng, 5)};
      const auto rep = cat_minus1_check(X, t, 16, rng(), 1e-9);
      pass_e += rep.pass();
      worst = std::max(worst, rep.max_violation);
    }
  }
  const auto tree = MetricTreeBase::random(50, 1);
  {
    const HSpace<MetricTreeBase> X{tree};
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> h(-3, 3);
    for (int i = 0; i < 1000; ++i) {
      std::array<HSpace<MetricTreeBase>::Point, 3> t;
      for (auto& p : t) p = {h(rng), tree.random_point(rng)};
      const auto rep = cat_minus1_check(X, t, 16, rng(), 1e-9);
      pass_t += rep.pass();
      worst = std::max(worst, rep.max_violation);
    }
  }
  bool vertical = true;
  {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> h(-50, 50);
    const HSpace<MetricTreeBase> X{tree};
    for (int i = 0; i < 1000; ++i) {
      const auto y = tree.random_point(rng);
      const double t1 = h(rng), t2 = h(rng);
      vertical = vertical && X.distance({t1, y}, {t2, y}) == std::abs(t1 - t2);
    }
  }
  const HSpace<EuclideanBase> E2{EuclideanBase(2)};
  const double c = std::cos(1.1), s = std::sin(1.1);
  const auto iso = isometry_action_check(
      E2, [&](const EuclideanBase::Point& p) -> EuclideanBase::Point {
        return {c * p[0] - s * p[1] + 0.5, s * p[0] + c * p[1] - 1.5};
      },
      1000, 9);
  const bool ok = pass_e == 10000 && pass_t == 1000 && vertical && iso.pass(1e-9);
  return {ok, "Euclidean(1) " + std::to_string(pass_e) + "/10000, tree " + std::to_string(pass_t) +
                  "/1000, max violation " + fmt(worst) + "; vertical identity " +
                  (vertical ? "exact" : "broken") + "; isometry deviation " +
                  fmt(iso.max_deviation) + "; omega products " + fmt(iso.omega_products[0]) + " < " +
                  fmt(iso.omega_products[1]) + " < " + fmt(iso.omega_products[2])};
}

// 10. Growth rates.
Outcome growth() {
  const double tree = critical_exponent(regular_tree(4, 12), 12);
  const double line = growth_profile(regular_tree(2, 200), 200).growth_rate;
  const double grid = growth_profile(grid_graph(201, 201), 100).growth_rate;
  const bool ok = std::abs(tree - std::log(3.0)) <= 0.05 && line <= 0.02 && grid <= 0.02;
  return {ok, "tree(4,12) " + fmt(tree) + " vs log 3 = " + fmt(std::log(3.0)) + "; Z-line " +
                  fmt(line) + "; grid(201,201) " + fmt(grid)};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"insize inequality", insize},
      {"half sandwich of the inner metric", sandwich},
      {"quasi-cocycle inequalities", quasicocycle},
      {"sandwich lemma", sandwich_lemma},
      {"lambda decay", lambda_decay},
      {"pre-Patterson Lipschitz and Cesaro decay", pre_patterson_check},
      {"projection supports and atoms", projection},
      {"quasi-barycenters", barycenter},
      {"hyperbolization", hyperbolization},
      {"growth rates", growth}};
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (!only.empty() && !only.count(id)) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << id << "] " << criteria[i].first << ": "
              << o.detail << " (" << fmt(secs) << " s)" << std::endl;
  }
  return failed;
}
