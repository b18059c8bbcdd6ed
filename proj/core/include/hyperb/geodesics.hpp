#ifndef HYPERB_GEODESICS_HPP
#define HYPERB_GEODESICS_HPP

#include <cstdint>
#include <vector>

#include "hyperb/graph.hpp"

namespace hyperb {

/// An explicit shortest path, endpoints included.
struct GeodesicSegment {
  std::vector<Vertex> vertices;

  Distance length() const { return static_cast<Distance>(vertices.size()) - 1; }
  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }
  bool operator==(const GeodesicSegment&) const = default;
};

/// Adjacent consecutive vertices and length equal to the endpoint distance.
bool is_geodesic(const Graph& g, const GeodesicSegment& seg);

/// Gromov product (y|z)_x = (d(x,y) + d(x,z) - d(y,z)) / 2.
HalfInt gromov_product(const Graph& g, Vertex x, Vertex y, Vertex z);

/// Up to `cap` distinct u-v geodesics in lexicographic order of their vertex
/// sequences. A vertex w lies on some u-v geodesic iff
/// d(u,w) + d(w,v) = d(u,v); the enumeration walks that interval.
std::vector<GeodesicSegment> enumerate_geodesics(const Graph& g, Vertex u, Vertex v,
                                                 std::size_t cap);

/// Number of u-v geodesics, saturating at UINT64_MAX.
std::uint64_t count_geodesics(const Graph& g, Vertex u, Vertex v);

/// d(x, seg) = min over vertices of the segment.
Distance distance_to_segment(const Graph& g, Vertex x, const GeodesicSegment& seg);

/// Distances from every vertex to the vertex set `sources` (multi-source BFS).
std::vector<Distance> distances_to_set(const Graph& g, const std::vector<Vertex>& sources);

}  // namespace hyperb

#endif  // HYPERB_GEODESICS_HPP
