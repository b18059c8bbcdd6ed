#ifndef HYPERB_HORIZON_HPP
#define HYPERB_HORIZON_HPP

#include <vector>

#include "hyperb/geodesics.hpp"
#include "hyperb/graph.hpp"

namespace hyperb {

/// Finite stand-in for a boundary point: a geodesic from the base to a vertex
/// of the sphere S(base, R). Identified by its endpoint vertex.
struct HorizonPoint {
  GeodesicSegment ray;
  Distance radius = 0;

  Vertex endpoint() const { return ray.back(); }
  /// Ray vertex at distance t from the base, 0 <= t <= radius.
  Vertex at(Distance t) const { return ray.vertices.at(static_cast<std::size_t>(t)); }
};

/// Horizon point ending at `endpoint`. The ray follows BFS parents, taking the
/// smallest-id neighbour one step closer to the base at each step (on trees
/// this is the unique geodesic).
HorizonPoint horizon_point(const Graph& g, Vertex endpoint);

/// Vertices of S(base, radius), increasing id.
std::vector<Vertex> horizon_vertices(const Graph& g, Distance radius);

/// The default horizon radius: the eccentricity of the base vertex.
inline Distance default_horizon_radius(const Graph& g) { return g.base_eccentricity(); }

}  // namespace hyperb

#endif  // HYPERB_HORIZON_HPP
