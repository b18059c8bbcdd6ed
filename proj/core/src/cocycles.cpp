#include "hyperb/cocycles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hyperb/parallel.hpp"

namespace hyperb {

namespace {

void record(InequalityReport& r, double violation, double slack) {
  if (r.checks == 0 || violation > r.worst) r.worst = violation;
  ++r.checks;
  if (violation > slack) ++r.failures;
}

void merge(InequalityReport& into, const InequalityReport& part) {
  if (part.checks == 0) return;
  if (into.checks == 0 || part.worst > into.worst) into.worst = part.worst;
  into.checks += part.checks;
  into.failures += part.failures;
}

}  // namespace

CocycleContext::CocycleContext(const Graph& g, double delta, double a, Distance horizon_radius,
                               Distance tail_radius)
    : graph_(&g),
      delta_(delta),
      a_(a),
      horizon_radius_(horizon_radius),
      tail_radius_(tail_radius) {
  if (!(delta >= 0) || !std::isfinite(delta)) throw GraphError("delta must be finite and >= 0");
  if (horizon_radius < 1 || horizon_radius > g.base_eccentricity()) {
    throw GraphError("horizon radius must lie in [1, eccentricity of the base]");
  }
  // The cell of gamma always contains gamma itself; a tail radius beyond the
  // horizon has no finite meaning here and is reported as an empty cell.
  if (tail_radius < 1 || tail_radius > horizon_radius) {
    throw GraphError("empty horizon cell: tail radius must lie in [1, horizon radius]");
  }
  horizon_ = horizon_vertices(g, horizon_radius);
  base_table_ = std::make_unique<QuasiMetricTable>(g, g.base(), a, std::vector<Vertex>{});
}

CocycleContext CocycleContext::build(const Graph& g, const CocycleOptions& options) {
  const double delta =
      options.delta ? *options.delta : estimate_delta(g, options.estimator, options.geodesic_cap);
  const double a = options.a ? *options.a : default_visual_exponent(delta);
  const Distance radius = options.horizon_radius ? *options.horizon_radius : default_horizon_radius(g);
  const Distance tail = options.tail_radius ? *options.tail_radius : radius;
  return CocycleContext(g, delta, a, radius, tail);
}

double CocycleContext::C2() const { return 2.0 * std::log(2.0) / a_; }

bool CocycleContext::on_horizon(Vertex v) const {
  return std::binary_search(horizon_.begin(), horizon_.end(), v);
}

HorizonPoint CocycleContext::horizon_point(Vertex endpoint) const {
  if (!on_horizon(endpoint)) {
    throw GraphError("vertex " + std::to_string(endpoint) + " is not on the horizon sphere");
  }
  return hyperb::horizon_point(*graph_, endpoint);
}

std::shared_ptr<const std::vector<Vertex>> CocycleContext::cell(Vertex gamma) const {
  if (!on_horizon(gamma)) {
    throw GraphError("vertex " + std::to_string(gamma) + " is not on the horizon sphere");
  }
  {
    std::lock_guard lock(*mutex_);
    auto it = cells_.find(gamma);
    if (it != cells_.end()) return it->second;
  }
  const auto row = base_table_->rho_row(base_table_->require_index(gamma));
  const double radius = 2.0 * std::exp(-a_ * static_cast<double>(tail_radius_));
  const double tol = radius * 1e-12;
  auto out = std::make_shared<std::vector<Vertex>>();
  for (std::size_t j = 0; j < row->size(); ++j) {
    if ((*row)[j] <= radius + tol) out->push_back(base_table_->point(j));
  }
  std::sort(out->begin(), out->end());
  std::lock_guard lock(*mutex_);
  return cells_.try_emplace(gamma, std::move(out)).first->second;
}

Distance distance_cocycle(const Graph& g, Vertex z, Vertex x, Vertex y) {
  g.check_vertex(x);
  g.check_vertex(y);
  g.check_vertex(z);
  return g.dist(y, z) - g.dist(x, z);
}

BusemannRange busemann_range(const CocycleContext& ctx, Vertex gamma, Vertex x, Vertex y) {
  const Graph& g = ctx.graph();
  g.check_vertex(x);
  g.check_vertex(y);
  const auto cell = ctx.cell(gamma);
  if (cell->empty()) throw GraphError("empty horizon cell");
  if (x == y) return {0, 0};
  const auto rx = g.row(x);
  const auto ry = g.row(y);
  BusemannRange r{std::numeric_limits<Distance>::min(), std::numeric_limits<Distance>::max()};
  for (Vertex z : *cell) {
    const Distance b = (*ry)[z] - (*rx)[z];
    r.max = std::max(r.max, b);
    r.min = std::min(r.min, b);
  }
  return r;
}

double busemann_quasi(const CocycleContext& ctx, Vertex gamma, Vertex x, Vertex y) {
  return busemann_range(ctx, gamma, x, y).max;
}

std::vector<double> busemann_profile(const CocycleContext& ctx, Vertex gamma, Vertex x) {
  const Graph& g = ctx.graph();
  g.check_vertex(x);
  const auto cell = ctx.cell(gamma);
  const auto rx = g.row(x);
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<Distance> best(n, std::numeric_limits<Distance>::min());
  for (Vertex z : *cell) {
    const auto rz = g.row(z);
    const Distance off = (*rx)[z];
    for (std::size_t y = 0; y < n; ++y) best[y] = std::max(best[y], (*rz)[y] - off);
  }
  std::vector<double> out(n);
  for (std::size_t y = 0; y < n; ++y) out[y] = best[y];
  out[static_cast<std::size_t>(x)] = 0.0;
  return out;
}

double barycenter_functional(const CocycleContext& ctx, const BoundaryMeasure& lambda, Vertex x,
                             Vertex y) {
  double total = 0.0;
  for (const auto& [gamma, w] : lambda.weights) total += w * busemann_quasi(ctx, gamma, x, y);
  return total;
}

std::vector<double> barycenter_profile(const CocycleContext& ctx, const BoundaryMeasure& lambda,
                                       Vertex x) {
  std::vector<double> total(static_cast<std::size_t>(ctx.graph().vertex_count()), 0.0);
  for (const auto& [gamma, w] : lambda.weights) {
    const auto p = busemann_profile(ctx, gamma, x);
    for (std::size_t y = 0; y < total.size(); ++y) total[y] += w * p[y];
  }
  return total;
}

BInfinityReport b_infinity_check(const CocycleContext& ctx,
                                 const std::vector<FiniteMeasure>& interior,
                                 const BoundaryMeasure& lambda, Vertex x, Vertex y) {
  if (interior.empty()) throw GraphError("b_infinity_check: empty measure sequence");
  const Graph& g = ctx.graph();
  const auto rx = g.row(x);
  const auto ry = g.row(y);
  BInfinityReport r;
  r.boundary_value = barycenter_functional(ctx, lambda, x, y);
  r.limsup = -std::numeric_limits<double>::infinity();
  for (std::size_t n = interior.size() / 2; n < interior.size(); ++n) {
    double integral = 0.0;
    for (const auto& [z, w] : interior[n]) {
      g.check_vertex(z);
      integral += w * static_cast<double>((*ry)[z] - (*rx)[z]);
    }
    r.limsup = std::max(r.limsup, integral);
  }
  r.deviation = std::abs(r.boundary_value - r.limsup);
  r.pass = r.deviation <= ctx.C2() + 1e-9;
  return r;
}

InequalityReport check_cocycle_estimates(const QuasiMetricTable& table, double slack) {
  const Graph& g = table.graph();
  const Vertex x = table.basepoint();
  const double c2 = 2.0 * std::log(2.0) / table.a();
  const double scale = 2.0 / table.a();
  const auto rx = g.row(x);
  const std::size_t p = table.size();
  std::vector<InequalityReport> parts(p);
  parallel_for(0, p, [&](std::size_t i) {
    const Vertex y = table.point(i);
    const auto ry = g.row(y);
    const double dxy = (*rx)[y];
    for (std::size_t j = 0; j < p; ++j) {
      if (j == i) continue;
      const Vertex z = table.point(j);
      const double beta = static_cast<double>((*ry)[z] - (*rx)[z]);
      const double lower = dxy + scale * std::log(table.rho(i, j));
      record(parts[i], std::max(lower - beta, beta - lower - c2), slack);
    }
  });
  InequalityReport total;
  for (const auto& part : parts) merge(total, part);
  return total;
}

QuasiCocycleReport check_quasicocycle(const CocycleContext& ctx, const BoundaryMeasure& lambda,
                                      const std::vector<std::array<Vertex, 3>>& triples,
                                      double slack) {
  const Graph& g = ctx.graph();
  const double c2 = ctx.C2();
  std::vector<QuasiCocycleReport> parts(triples.size());
  parallel_for(0, triples.size(), [&](std::size_t t) {
    const auto& tri = triples[t];
    auto& rep = parts[t];
    // b[p][q] for the ordered pairs of the triple, and the weighted sums.
    double B[3][3] = {};
    for (const auto& [gamma, w] : lambda.weights) {
      double b[3][3] = {};
      for (int p = 0; p < 3; ++p) {
        for (int q = 0; q < 3; ++q) {
          if (p == q) continue;
          const auto range = busemann_range(ctx, gamma, tri[p], tri[q]);
          rep.max_oscillation = std::max(rep.max_oscillation, range.oscillation());
          b[p][q] = range.max;
          B[p][q] += w * b[p][q];
          record(rep.parts[0], std::abs(b[p][q]) - g.dist(tri[p], tri[q]), slack);
        }
      }
      for (int p = 0; p < 3; ++p) {
        for (int q = p + 1; q < 3; ++q) {
          const double s = b[p][q] + b[q][p];
          record(rep.parts[1], std::max(-s, s - c2), slack);
        }
      }
      const double fwd = b[0][1] + b[1][2] + b[2][0];
      const double bwd = b[0][2] + b[2][1] + b[1][0];
      record(rep.parts[2], std::max(-fwd, fwd - 2 * c2), slack);
      record(rep.parts[2], std::max(-bwd, bwd - 2 * c2), slack);
    }
    // (x, x', y) ranging over the orderings of the triple.
    for (int x = 0; x < 3; ++x) {
      for (int xp = 0; xp < 3; ++xp) {
        if (xp == x) continue;
        const int y = 3 - x - xp;
        record(rep.parts[3], std::abs(B[x][y] - B[xp][y] - B[x][xp]) - 3 * c2, slack);
      }
    }
  });
  QuasiCocycleReport total;
  for (const auto& part : parts) {
    for (std::size_t k = 0; k < total.parts.size(); ++k) merge(total.parts[k], part.parts[k]);
    total.max_oscillation = std::max(total.max_oscillation, part.max_oscillation);
  }
  return total;
}

}  // namespace hyperb
