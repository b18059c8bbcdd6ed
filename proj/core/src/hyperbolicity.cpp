#include "hyperb/hyperbolicity.hpp"

#include <algorithm>
#include <limits>
#include <vector>

#include "hyperb/parallel.hpp"

namespace hyperb {

HalfInt delta_four_point(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<std::int64_t> best(n, 0);
  parallel_for(0, n, [&](std::size_t wi) {
    const auto w = static_cast<Vertex>(wi);
    // twice the Gromov products at w
    std::vector<std::int64_t> dw(n);
    for (std::size_t v = 0; v < n; ++v) dw[v] = g.dist(w, static_cast<Vertex>(v));
    std::vector<std::int64_t> prod(n * n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        prod[x * n + y] = dw[x] + dw[y] - g.dist(static_cast<Vertex>(x), static_cast<Vertex>(y));
      }
    }
    std::int64_t local = 0;
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = x; y < n; ++y) {
        const std::int64_t xy = prod[x * n + y];
        for (std::size_t z = 0; z < n; ++z) {
          const std::int64_t v = std::min(prod[x * n + z], prod[y * n + z]) - xy;
          local = std::max(local, v);
        }
      }
    }
    best[wi] = local;
  });
  return HalfInt::from_twice(*std::max_element(best.begin(), best.end()));
}

namespace {

// Geodesics per unordered vertex pair and, for each pair P, the largest
// distance from each vertex and from each edge midpoint to any enumerated
// geodesic of P. Midpoint distances are stored doubled.
struct PairTables {
  std::size_t n = 0;
  std::size_t edges = 0;
  std::vector<std::size_t> arc_offset;                  // first arc id of each vertex
  std::vector<std::size_t> arc_edge;                    // arc id -> undirected edge id
  std::vector<std::vector<GeodesicSegment>> geodesics;  // index p*n+q, p<=q
  std::vector<std::uint16_t> far;                       // (p*n+q)*n + v
  std::vector<std::uint16_t> mid;                       // (p*n+q)*edges + e
  bool exact = true;

  std::size_t index(Vertex p, Vertex q) const {
    if (p > q) std::swap(p, q);
    return static_cast<std::size_t>(p) * n + static_cast<std::size_t>(q);
  }
  std::uint16_t farthest(Vertex p, Vertex q, Vertex v) const {
    return far[index(p, q) * n + static_cast<std::size_t>(v)];
  }
  std::uint16_t farthest_mid(Vertex p, Vertex q, std::size_t e) const {
    return mid[index(p, q) * edges + e];
  }
  std::size_t edge_id(const Graph& g, Vertex u, Vertex w) const {
    const auto nb = g.neighbors(u);
    const auto k = static_cast<std::size_t>(std::find(nb.begin(), nb.end(), w) - nb.begin());
    return arc_edge[arc_offset[static_cast<std::size_t>(u)] + k];
  }
};

PairTables build_pair_tables(const Graph& g, std::size_t cap) {
  PairTables t;
  t.n = static_cast<std::size_t>(g.vertex_count());
  if (t.n > 512) throw GraphError("delta_rips: graph too large for exhaustive triangles");
  t.arc_offset.resize(t.n + 1, 0);
  for (std::size_t v = 0; v < t.n; ++v) t.arc_offset[v + 1] = t.arc_offset[v] + g.degree(static_cast<Vertex>(v));
  t.arc_edge.resize(t.arc_offset[t.n]);
  for (std::size_t v = 0; v < t.n; ++v) {
    const auto nb = g.neighbors(static_cast<Vertex>(v));
    for (std::size_t k = 0; k < nb.size(); ++k) {
      const auto w = static_cast<std::size_t>(nb[k]);
      if (v < w) t.arc_edge[t.arc_offset[v] + k] = t.edges++;
    }
  }
  for (std::size_t v = 0; v < t.n; ++v) {
    const auto nb = g.neighbors(static_cast<Vertex>(v));
    for (std::size_t k = 0; k < nb.size(); ++k) {
      const auto w = static_cast<std::size_t>(nb[k]);
      if (v > w) t.arc_edge[t.arc_offset[v] + k] = t.edge_id(g, nb[k], static_cast<Vertex>(v));
    }
  }
  if (t.n * t.n * t.edges > (std::size_t{1} << 28))
    throw GraphError("delta_rips: graph too large for exhaustive triangles");
  t.geodesics.resize(t.n * t.n);
  t.far.assign(t.n * t.n * t.n, 0);
  t.mid.assign(t.n * t.n * t.edges, 0);
  std::vector<char> capped(t.n, 0);
  parallel_for(0, t.n, [&](std::size_t pi) {
    const auto p = static_cast<Vertex>(pi);
    for (auto q = p; q < static_cast<Vertex>(t.n); ++q) {
      const std::size_t idx = t.index(p, q);
      auto geos = enumerate_geodesics(g, p, q, cap);
      if (geos.size() == cap && count_geodesics(g, p, q) > cap) capped[pi] = 1;
      auto* row = t.far.data() + idx * t.n;
      auto* mrow = t.mid.data() + idx * t.edges;
      std::vector<char> on_seg(t.edges);
      for (const auto& seg : geos) {
        auto d = distances_to_set(g, seg.vertices);
        for (std::size_t v = 0; v < t.n; ++v) {
          row[v] = std::max<std::uint16_t>(row[v], static_cast<std::uint16_t>(d[v]));
        }
        std::fill(on_seg.begin(), on_seg.end(), 0);
        for (std::size_t i = 0; i + 1 < seg.vertices.size(); ++i)
          on_seg[t.edge_id(g, seg.vertices[i], seg.vertices[i + 1])] = 1;
        for (std::size_t u = 0; u < t.n; ++u) {
          const auto nb = g.neighbors(static_cast<Vertex>(u));
          for (std::size_t k = 0; k < nb.size(); ++k) {
            const std::size_t e = t.arc_edge[t.arc_offset[u] + k];
            if (u > static_cast<std::size_t>(nb[k]) || on_seg[e]) continue;
            const auto twice = 1 + 2 * std::min(d[u], d[static_cast<std::size_t>(nb[k])]);
            mrow[e] = std::max<std::uint16_t>(mrow[e], static_cast<std::uint16_t>(twice));
          }
        }
      }
      t.geodesics[idx] = std::move(geos);
    }
  });
  t.exact = std::none_of(capped.begin(), capped.end(), [](char c) { return c != 0; });
  return t;
}

}  // namespace

RipsEstimate delta_rips(const Graph& g, std::size_t geodesic_cap) {
  if (geodesic_cap == 0) throw GraphError("delta_rips: geodesic_cap must be at least 1");
  if (g.is_tree()) return {HalfInt{}, true};
  const PairTables t = build_pair_tables(g, geodesic_cap);
  const auto n = static_cast<Vertex>(t.n);
  std::vector<std::int64_t> best(t.n, 0);  // doubled
  // For a triangle with sides A,B,C the max over choices of B and C of
  // min(d(v,B), d(v,C)) separates into min(max_B d(v,B), max_C d(v,C)).
  // Along an edge every such distance is piecewise linear with breaks at the
  // ends and the midpoint, so vertices and midpoints are the only candidates.
  parallel_for(0, t.n, [&](std::size_t xi) {
    const auto x = static_cast<Vertex>(xi);
    std::int64_t local = 0;
    for (Vertex y = x; y < n; ++y) {
      for (Vertex z = y; z < n; ++z) {
        const Vertex corners[3][3] = {{x, y, z}, {y, z, x}, {z, x, y}};
        for (const auto& c : corners) {
          // side [c0,c1] against [c1,c2] and [c2,c0]
          for (const auto& seg : t.geodesics[t.index(c[0], c[1])]) {
            for (Vertex v : seg.vertices) {
              const std::int64_t m = std::min(t.farthest(c[1], c[2], v), t.farthest(c[2], c[0], v));
              local = std::max(local, 2 * m);
            }
            for (std::size_t i = 0; i + 1 < seg.vertices.size(); ++i) {
              const std::size_t e = t.edge_id(g, seg.vertices[i], seg.vertices[i + 1]);
              const std::int64_t m = std::min(t.farthest_mid(c[1], c[2], e), t.farthest_mid(c[2], c[0], e));
              local = std::max(local, m);
            }
          }
        }
      }
    }
    best[xi] = local;
  });
  return {HalfInt::from_twice(*std::max_element(best.begin(), best.end())), t.exact};
}

DeltaEstimator parse_estimator(const std::string& name) {
  if (name == "4pt" || name == "four-point" || name == "fourpoint") return DeltaEstimator::FourPoint;
  if (name == "rips") return DeltaEstimator::Rips;
  throw GraphError("unknown delta estimator '" + name + "'");
}

std::string to_string(DeltaEstimator e) {
  return e == DeltaEstimator::FourPoint ? "4pt" : "rips";
}

double estimate_delta(const Graph& g, DeltaEstimator estimator, std::size_t geodesic_cap) {
  if (g.is_tree()) return 0.0;
  if (estimator == DeltaEstimator::FourPoint) return delta_four_point(g).value();
  return delta_rips(g, geodesic_cap).delta.value();
}

InsizeReport check_insize(const Graph& g, HalfInt delta_rips_value, std::size_t geodesic_cap) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  struct Partial {
    std::uint64_t checks = 0, failures = 0;
    std::int64_t max_gap = std::numeric_limits<std::int64_t>::min();
    std::int64_t min_gap = std::numeric_limits<std::int64_t>::max();
  };
  std::vector<Partial> parts(n);
  const std::int64_t bound = 4 * delta_rips_value.twice();  // twice 4*delta
  parallel_for(0, n, [&](std::size_t yi) {
    const auto y = static_cast<Vertex>(yi);
    Partial& p = parts[yi];
    for (auto z = y; z < static_cast<Vertex>(n); ++z) {
      for (const auto& seg : enumerate_geodesics(g, y, z, geodesic_cap)) {
        const auto d = distances_to_set(g, seg.vertices);
        for (Vertex x = 0; x < static_cast<Vertex>(n); ++x) {
          const std::int64_t gap = 2 * static_cast<std::int64_t>(d[x]) -
                                   gromov_product(g, x, y, z).twice();
          ++p.checks;
          if (gap < 0 || gap > bound) ++p.failures;
          p.max_gap = std::max(p.max_gap, gap);
          p.min_gap = std::min(p.min_gap, gap);
        }
      }
    }
  });
  InsizeReport r;
  std::int64_t mx = std::numeric_limits<std::int64_t>::min();
  std::int64_t mn = std::numeric_limits<std::int64_t>::max();
  for (const auto& p : parts) {
    r.checks += p.checks;
    r.failures += p.failures;
    mx = std::max(mx, p.max_gap);
    mn = std::min(mn, p.min_gap);
  }
  r.max_gap = HalfInt::from_twice(mx);
  r.min_gap = HalfInt::from_twice(mn);
  return r;
}

SausageReport sausage_check(const Graph& g, const GeodesicSegment& ray1,
                            const GeodesicSegment& ray2) {
  if (ray1.vertices.empty() || ray2.vertices.empty()) throw GraphError("sausage_check: empty ray");
  const Distance start_gap = g.dist(ray1.front(), ray2.front());
  SausageReport best{0, std::numeric_limits<Distance>::max()};
  for (int shift = -start_gap; shift <= start_gap; ++shift) {
    Distance worst = 0;
    bool any = false;
    for (Distance t = start_gap; t <= ray1.length(); ++t) {
      const int s = t + shift;
      if (s < 0 || s > ray2.length()) continue;
      any = true;
      worst = std::max(worst, g.dist(ray1.vertices[t], ray2.vertices[s]));
    }
    if (!any) continue;
    if (worst < best.constant || (worst == best.constant && std::abs(shift) < std::abs(best.shift))) {
      best = {shift, worst};
    }
  }
  if (best.constant == std::numeric_limits<Distance>::max()) best.constant = 0;
  return best;
}

}  // namespace hyperb
