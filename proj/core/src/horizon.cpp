#include "hyperb/horizon.hpp"

#include <algorithm>

namespace hyperb {

HorizonPoint horizon_point(const Graph& g, Vertex endpoint) {
  g.check_vertex(endpoint);
  const auto& d = g.base_row();
  std::vector<Vertex> path{endpoint};
  Vertex cur = endpoint;
  while (d[cur] > 0) {
    for (Vertex w : g.neighbors(cur)) {
      if (d[w] == d[cur] - 1) {
        cur = w;
        break;
      }
    }
    path.push_back(cur);
  }
  std::reverse(path.begin(), path.end());
  HorizonPoint h;
  h.radius = d[endpoint];
  h.ray.vertices = std::move(path);
  return h;
}

std::vector<Vertex> horizon_vertices(const Graph& g, Distance radius) {
  std::vector<Vertex> out;
  const auto& d = g.base_row();
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (d[v] == radius) out.push_back(v);
  }
  return out;
}

}  // namespace hyperb
