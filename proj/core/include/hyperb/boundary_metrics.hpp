#ifndef HYPERB_BOUNDARY_METRICS_HPP
#define HYPERB_BOUNDARY_METRICS_HPP

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <ostream>
#include <unordered_map>
#include <vector>

#include "hyperb/graph.hpp"

namespace hyperb {

/// a = 1 / (15 * max(delta, 1/2)).
double default_visual_exponent(double delta);

/// Visual quasi-metric varrho_x(y,z) = exp(-(y|z)_x) (0 on the diagonal) and
/// the inner metric rho_x: the shortest-chain metric for edge weights
/// varrho_x^a on the complete graph over `points()`.
///
/// Chains only pass through the table's own points, so rho is an upper bound
/// of the infimum over the whole space. Horizon points enter through their
/// endpoint vertices. On trees varrho_x is an ultrametric, the direct edge is
/// always a shortest chain, and rows are filled without a shortest-path run.
/// Rows are computed on demand (dense Dijkstra, O(p^2) each) and cached.
class QuasiMetricTable {
 public:
  QuasiMetricTable(const Graph& g, Vertex basepoint, double a, std::vector<Vertex> points);

  const Graph& graph() const { return *graph_; }
  Vertex basepoint() const { return basepoint_; }
  double a() const { return a_; }
  std::size_t size() const { return points_.size(); }
  const std::vector<Vertex>& points() const { return points_; }
  Vertex point(std::size_t i) const { return points_[i]; }
  std::optional<std::size_t> index_of(Vertex v) const;
  std::size_t require_index(Vertex v) const;

  HalfInt product(std::size_t i, std::size_t j) const;
  double varrho(std::size_t i, std::size_t j) const;
  /// varrho^a, the chain edge weight.
  double varrho_a(std::size_t i, std::size_t j) const;
  double rho(std::size_t i, std::size_t j) const;
  std::shared_ptr<const std::vector<double>> rho_row(std::size_t i) const;
  /// rho from point i to the set of points `targets` (min over the set).
  double rho_to_set(std::size_t i, const std::vector<std::size_t>& targets) const;

  bool ultrametric() const { return ultrametric_; }

 private:
  std::shared_ptr<const std::vector<double>> compute_row(std::size_t i) const;
  std::shared_ptr<const std::vector<Distance>> distances_from(std::size_t i) const;

  const Graph* graph_;
  Vertex basepoint_;
  double a_;
  std::vector<Vertex> points_;
  std::unordered_map<Vertex, std::size_t> index_;
  std::vector<Distance> from_base_;  // d(basepoint, point_i)
  std::vector<double> weight_lut_;   // exp(-a * twice / 2)
  bool ultrametric_ = false;

  std::unique_ptr<std::mutex> mutex_ = std::make_unique<std::mutex>();
  mutable std::vector<std::shared_ptr<const std::vector<double>>> rows_;
};

/// Table over all vertices with the visual quasi-metric at x.
QuasiMetricTable visual_quasimetric(const Graph& g, Vertex x, double a);
/// Table over the given points (all vertices when empty).
QuasiMetricTable inner_metric(const Graph& g, Vertex x, double a,
                              std::vector<Vertex> points = {});

/// Points p of the table with rho(center, p) <= r, increasing vertex id.
std::vector<Vertex> metric_ball(const QuasiMetricTable& t, Vertex center, double r);

struct SandwichReport {
  std::uint64_t pairs = 0;
  std::uint64_t failures = 0;
  double worst_lower = 0;  // max of varrho^a/2 - rho
  double worst_upper = 0;  // max of rho - varrho^a
};
/// (1/2) varrho^a <= rho <= varrho^a on all pairs, with additive slack.
SandwichReport check_half_sandwich(const QuasiMetricTable& t, double slack = 1e-12);

/// Largest violation of rho(i,k) <= rho(i,j) + rho(j,k) (O(p^3)).
double max_triangle_violation(const QuasiMetricTable& t);

/// CSV rows `p,q,varrho,rho` for p < q.
void write_table_csv(const QuasiMetricTable& t, std::ostream& out);

/// Text rendering with 17 significant digits.
std::string format_double(double v);

}  // namespace hyperb

#endif  // HYPERB_BOUNDARY_METRICS_HPP
