#include "hyperb/barycenter.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hyperb/parallel.hpp"

namespace hyperb {

namespace {

constexpr double kSetTolerance = 1e-9;

void require_probability(const BoundaryMeasure& lambda) {
  if (lambda.weights.empty()) throw GraphError("boundary measure is empty");
  if (!lambda.is_probability()) throw GraphError("boundary measure must have total mass 1");
}

void require_light_atoms(const BoundaryMeasure& lambda) {
  for (const auto& [v, w] : lambda.weights) {
    if (w >= 0.5) throw AtomTooHeavy(v, w);
  }
}

std::vector<Vertex> sublevel(const std::vector<double>& profile, double r, double& infimum) {
  infimum = *std::min_element(profile.begin(), profile.end());
  std::vector<Vertex> out;
  const double threshold = infimum + r + kSetTolerance;
  for (std::size_t y = 0; y < profile.size(); ++y) {
    if (profile[y] <= threshold) out.push_back(static_cast<Vertex>(y));
  }
  return out;
}

}  // namespace

AtomTooHeavy::AtomTooHeavy(Vertex atom, double weight)
    : GraphError("atom " + std::to_string(atom) + " has weight " + std::to_string(weight) +
                 " >= 1/2"),
      atom_(atom),
      weight_(weight) {}

std::size_t global_scan_limit() { return 512; }

BarycenterResult quasi_barycenter(const CocycleContext& ctx, const BoundaryMeasure& lambda,
                                  Vertex x, double r, bool with_global) {
  require_probability(lambda);
  require_light_atoms(lambda);
  if (!(r >= 0)) throw GraphError("quasi_barycenter: r must be nonnegative");
  const Graph& g = ctx.graph();
  g.check_vertex(x);
  BarycenterResult res;
  res.basepoint = x;
  res.r = r;
  res.set = sublevel(barycenter_profile(ctx, lambda, x), r, res.infimum);
  if (!with_global) return res;

  if (static_cast<std::size_t>(g.vertex_count()) <= global_scan_limit()) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) res.global_basepoints.push_back(v);
  } else {
    res.global_basepoints = g.ball(x, 1);
  }
  std::vector<std::vector<Vertex>> sets(res.global_basepoints.size());
  parallel_for(0, sets.size(), [&](std::size_t i) {
    const Vertex b = res.global_basepoints[i];
    if (b == x) {
      sets[i] = res.set;
      return;
    }
    double inf = 0;
    sets[i] = sublevel(barycenter_profile(ctx, lambda, b), r, inf);
  });
  std::vector<char> mark(static_cast<std::size_t>(g.vertex_count()), 0);
  for (const auto& s : sets) {
    for (Vertex v : s) mark[v] = 1;
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (mark[v]) res.global_set.push_back(v);
  }
  return res;
}

StabilityReport barycenter_stability_check(const CocycleContext& ctx,
                                           const BoundaryMeasure& lambda, Vertex x,
                                           Vertex x_prime, double r) {
  StabilityReport rep;
  rep.inner = quasi_barycenter(ctx, lambda, x, r, false).set;
  rep.outer = quasi_barycenter(ctx, lambda, x_prime, r + 6 * ctx.C2(), false).set;
  std::set_difference(rep.inner.begin(), rep.inner.end(), rep.outer.begin(), rep.outer.end(),
                      std::back_inserter(rep.missing));
  return rep;
}

std::string to_string(MeasureKind k) {
  switch (k) {
    case MeasureKind::Elementary1:
      return "Elementary1";
    case MeasureKind::Elementary2:
      return "Elementary2";
    case MeasureKind::Bulky:
      return "Bulky";
  }
  return "Bulky";
}

BoundaryMeasure rebalance_atoms(const BoundaryMeasure& lambda, double cap) {
  const std::size_t k = lambda.weights.support_size();
  if (cap * static_cast<double>(k) < lambda.weights.mass()) {
    throw GraphError("rebalance_atoms: support too small for the cap");
  }
  std::vector<Vertex> ids;
  std::vector<double> w;
  for (const auto& [v, x] : lambda.weights) {
    ids.push_back(v);
    w.push_back(x);
  }
  for (int iter = 0; iter < 1000; ++iter) {
    double excess = 0;
    std::size_t free_count = 0;
    for (double& x : w) {
      if (x > cap) {
        excess += x - cap;
        x = cap;
      } else if (x < cap) {
        ++free_count;
      }
    }
    if (excess <= 0 || free_count == 0) break;
    const double share = excess / static_cast<double>(free_count);
    for (double& x : w) {
      if (x < cap) x += share;
    }
  }
  BoundaryMeasure out;
  out.radius = lambda.radius;
  for (std::size_t i = 0; i < ids.size(); ++i) out.weights.add(ids[i], w[i]);
  return out;
}

Classification classify_measure(const CocycleContext& ctx, const BoundaryMeasure& lambda) {
  require_probability(lambda);
  for (const auto& [v, w] : lambda.weights) ctx.cell(v);  // validates horizon membership
  Classification c;
  if (lambda.weights.support_size() <= 2) {
    for (const auto& [v, w] : lambda.weights) {
      if (w >= 0.5 - kSetTolerance) c.set.push_back(v);
    }
    c.kind = c.set.size() == 1 ? MeasureKind::Elementary1 : MeasureKind::Elementary2;
    return c;
  }
  const BoundaryMeasure light = rebalance_atoms(lambda);
  c.kind = MeasureKind::Bulky;
  c.set = quasi_barycenter(ctx, light, ctx.graph().base(), 8 * ctx.C2(), false).set;
  return c;
}

std::vector<double> sphere_minima(const CocycleContext& ctx, const BoundaryMeasure& lambda,
                                  Vertex x) {
  const auto profile = barycenter_profile(ctx, lambda, x);
  const auto& d = ctx.graph().base_row();
  std::vector<double> minima(static_cast<std::size_t>(ctx.horizon_radius()) + 1,
                             std::numeric_limits<double>::infinity());
  for (std::size_t y = 0; y < profile.size(); ++y) {
    const auto k = static_cast<std::size_t>(d[y]);
    if (k < minima.size()) minima[k] = std::min(minima[k], profile[y]);
  }
  return minima;
}

std::size_t escape_burn_in(const std::vector<double>& minima) {
  std::size_t start = minima.size();
  while (start > 1 && minima[start - 1] + kSetTolerance >= minima[start - 2]) --start;
  return start == 0 ? 0 : start - 1;
}

}  // namespace hyperb
