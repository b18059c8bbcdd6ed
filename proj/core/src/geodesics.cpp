#include "hyperb/geodesics.hpp"

#include <algorithm>
#include <limits>

namespace hyperb {

bool is_geodesic(const Graph& g, const GeodesicSegment& seg) {
  if (seg.vertices.empty()) return false;
  for (Vertex v : seg.vertices) {
    if (v < 0 || v >= g.vertex_count()) return false;
  }
  for (std::size_t i = 1; i < seg.vertices.size(); ++i) {
    if (!g.has_edge(seg.vertices[i - 1], seg.vertices[i])) return false;
  }
  return g.dist(seg.front(), seg.back()) == seg.length();
}

HalfInt gromov_product(const Graph& g, Vertex x, Vertex y, Vertex z) {
  return HalfInt::from_twice(static_cast<std::int64_t>(g.dist(x, y)) + g.dist(x, z) -
                             g.dist(y, z));
}

std::vector<GeodesicSegment> enumerate_geodesics(const Graph& g, Vertex u, Vertex v,
                                                 std::size_t cap) {
  g.check_vertex(u);
  g.check_vertex(v);
  std::vector<GeodesicSegment> out;
  if (cap == 0) return out;
  const auto to_v = g.row(v);
  // Iterative DFS; `choice[i]` indexes the neighbour taken at depth i.
  std::vector<Vertex> path{u};
  std::vector<std::size_t> choice{0};
  while (!path.empty() && out.size() < cap) {
    const Vertex w = path.back();
    if (w == v) {
      out.push_back({path});
      path.pop_back();
      choice.pop_back();
      continue;
    }
    auto nb = g.neighbors(w);
    std::size_t& i = choice.back();
    while (i < nb.size() && (*to_v)[nb[i]] != (*to_v)[w] - 1) ++i;
    if (i == nb.size()) {
      path.pop_back();
      choice.pop_back();
      continue;
    }
    path.push_back(nb[i]);
    ++i;
    choice.push_back(0);
  }
  return out;
}

std::uint64_t count_geodesics(const Graph& g, Vertex u, Vertex v) {
  const auto from_u = g.row(u);
  const auto to_v = g.row(v);
  const Distance len = (*from_u)[v];
  std::vector<std::vector<Vertex>> layers(static_cast<std::size_t>(len) + 1);
  for (Vertex w = 0; w < g.vertex_count(); ++w) {
    if ((*from_u)[w] + (*to_v)[w] == len) layers[(*from_u)[w]].push_back(w);
  }
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::uint64_t> count(static_cast<std::size_t>(g.vertex_count()), 0);
  count[u] = 1;
  for (Distance d = 1; d <= len; ++d) {
    for (Vertex w : layers[d]) {
      std::uint64_t c = 0;
      for (Vertex p : g.neighbors(w)) {
        if ((*from_u)[p] == d - 1) c = (kMax - c < count[p]) ? kMax : c + count[p];
      }
      count[w] = c;
    }
  }
  return count[v];
}

Distance distance_to_segment(const Graph& g, Vertex x, const GeodesicSegment& seg) {
  Distance best = std::numeric_limits<Distance>::max();
  for (Vertex v : seg.vertices) best = std::min(best, g.dist(x, v));
  return best;
}

std::vector<Distance> distances_to_set(const Graph& g, const std::vector<Vertex>& sources) {
  std::vector<Distance> d(static_cast<std::size_t>(g.vertex_count()), kUnreachable);
  std::vector<Vertex> queue;
  for (Vertex s : sources) {
    g.check_vertex(s);
    if (d[s] != 0) {
      d[s] = 0;
      queue.push_back(s);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    for (Vertex w : g.neighbors(u)) {
      if (d[w] == kUnreachable) {
        d[w] = d[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return d;
}

}  // namespace hyperb
