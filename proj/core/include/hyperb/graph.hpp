#ifndef HYPERB_GRAPH_HPP
#define HYPERB_GRAPH_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hyperb {

using Vertex = std::int32_t;
using Distance = std::int32_t;

inline constexpr Distance kUnreachable = -1;

/// Raised for malformed inputs: bad vertex ids, disconnected graphs,
/// unparsable files, violated preconditions.
class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A half-integer stored as twice its value. Gromov products on graphs are
/// always multiples of 1/2, so arithmetic on them stays exact.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  static constexpr HalfInt from_twice(std::int64_t twice) {
    HalfInt h;
    h.twice_ = twice;
    return h;
  }
  static constexpr HalfInt from_int(std::int64_t v) { return from_twice(2 * v); }

  constexpr std::int64_t twice() const { return twice_; }
  constexpr double value() const { return static_cast<double>(twice_) / 2.0; }

  constexpr auto operator<=>(const HalfInt&) const = default;
  constexpr HalfInt operator+(HalfInt o) const { return from_twice(twice_ + o.twice_); }
  constexpr HalfInt operator-(HalfInt o) const { return from_twice(twice_ - o.twice_); }

  std::string to_string() const;

 private:
  std::int64_t twice_ = 0;
};

/// Finite connected unweighted graph with a distinguished base vertex.
///
/// Distances come from BFS. Graphs with at most `dense_limit()` vertices keep
/// the full distance table (16-bit entries); larger graphs compute BFS rows on
/// demand and keep a small LRU cache of recent rows. Either way the object is
/// logically immutable and safe to share across threads.
class Graph {
 public:
  Graph(Vertex vertex_count, std::vector<std::pair<Vertex, Vertex>> edges,
        Vertex base);

  Graph(const Graph&) = delete;
  Graph& operator=(const Graph&) = delete;
  Graph(Graph&&) noexcept;
  Graph& operator=(Graph&&) noexcept;
  ~Graph();

  Vertex vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edge_count_; }
  Vertex base() const { return base_; }
  std::size_t degree_bound() const { return degree_bound_; }
  std::span<const Vertex> neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }
  bool has_edge(Vertex u, Vertex v) const;
  bool is_tree() const { return edge_count_ + 1 == static_cast<std::size_t>(vertex_count_); }
  bool is_dense() const { return !dense_.empty(); }

  void check_vertex(Vertex v) const;

  Distance dist(Vertex u, Vertex v) const;
  /// Full BFS row from `source`. Shared ownership so callers may hold on to it
  /// while the cache evicts.
  std::shared_ptr<const std::vector<Distance>> row(Vertex source) const;
  /// Distances from the base vertex (always cached).
  const std::vector<Distance>& base_row() const { return *base_row_; }

  /// Largest distance from the base vertex.
  Distance base_eccentricity() const { return base_eccentricity_; }
  /// Vertices at exactly `r` from `center`, increasing id order.
  std::vector<Vertex> sphere(Vertex center, Distance r) const;
  /// Vertices within `r` of `center`, increasing id order.
  std::vector<Vertex> ball(Vertex center, Distance r) const;
  /// |B(center, r)| via truncated BFS (no full row needed).
  std::size_t ball_size(Vertex center, Distance r) const;

  /// The graph text format: `n m base`, then `u v` per edge, `#` comments.
  static Graph parse(const std::string& text);
  static Graph load(const std::string& path);
  std::string serialize() const;

  static constexpr Vertex dense_limit() { return 4096; }

 private:
  std::vector<Distance> bfs(Vertex source) const;

  Vertex vertex_count_ = 0;
  std::size_t edge_count_ = 0;
  Vertex base_ = 0;
  std::size_t degree_bound_ = 0;
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> adjacency_;
  std::vector<std::uint16_t> dense_;
  std::shared_ptr<const std::vector<Distance>> base_row_;
  Distance base_eccentricity_ = 0;

  struct RowCache;
  std::unique_ptr<RowCache> cache_;
};

/// Owned copy of the distance row from `source`.
std::vector<Distance> bfs_distances(const Graph& g, Vertex source);

}  // namespace hyperb

#endif  // HYPERB_GRAPH_HPP
