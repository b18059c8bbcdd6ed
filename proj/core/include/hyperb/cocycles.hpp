#ifndef HYPERB_COCYCLES_HPP
#define HYPERB_COCYCLES_HPP

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "hyperb/boundary_metrics.hpp"
#include "hyperb/graph.hpp"
#include "hyperb/horizon.hpp"
#include "hyperb/hyperbolicity.hpp"
#include "hyperb/measures.hpp"

namespace hyperb {

struct CocycleOptions {
  DeltaEstimator estimator = DeltaEstimator::FourPoint;
  /// Skips estimation when set.
  std::optional<double> delta;
  /// Defaults to 1 / (15 max(delta, 1/2)).
  std::optional<double> a;
  /// Defaults to the base eccentricity.
  std::optional<Distance> horizon_radius;
  /// Depth R' of the horizon cells; defaults to the horizon radius.
  std::optional<Distance> tail_radius;
  std::size_t geodesic_cap = 64;
};

/// Graph, horizon and constants shared by the cocycle, barycenter and
/// projection code. C2 = 2 log 2 / a (= 30 log 2 * delta when a = 1/(15 delta)).
///
/// The horizon cell of gamma is the set of vertices z with
/// rho_base(gamma, z) <= 2 exp(-a R'); it plays the role of a neighbourhood
/// of gamma in the compactification, and limsups over z -> gamma become
/// maxima over the cell.
class CocycleContext {
 public:
  CocycleContext(const Graph& g, double delta, double a, Distance horizon_radius,
                 Distance tail_radius);
  static CocycleContext build(const Graph& g, const CocycleOptions& options = {});

  const Graph& graph() const { return *graph_; }
  double delta() const { return delta_; }
  double a() const { return a_; }
  double C2() const;
  Distance horizon_radius() const { return horizon_radius_; }
  Distance tail_radius() const { return tail_radius_; }
  const std::vector<Vertex>& horizon() const { return horizon_; }
  bool on_horizon(Vertex v) const;
  HorizonPoint horizon_point(Vertex endpoint) const;
  /// rho_base over all vertices.
  const QuasiMetricTable& base_table() const { return *base_table_; }
  /// Vertices of the horizon cell of gamma, increasing id; cached.
  std::shared_ptr<const std::vector<Vertex>> cell(Vertex gamma) const;

 private:
  const Graph* graph_;
  double delta_;
  double a_;
  Distance horizon_radius_;
  Distance tail_radius_;
  std::vector<Vertex> horizon_;
  std::unique_ptr<QuasiMetricTable> base_table_;
  std::unique_ptr<std::mutex> mutex_ = std::make_unique<std::mutex>();
  mutable std::map<Vertex, std::shared_ptr<const std::vector<Vertex>>> cells_;
};

/// beta_z(x,y) = d(y,z) - d(x,z).
Distance distance_cocycle(const Graph& g, Vertex z, Vertex x, Vertex y);

/// Max and min of beta_z(x,y) over the horizon cell of gamma.
struct BusemannRange {
  Distance max = 0;
  Distance min = 0;
  Distance oscillation() const { return max - min; }
};
BusemannRange busemann_range(const CocycleContext& ctx, Vertex gamma, Vertex x, Vertex y);

/// Horizon surrogate of limsup_{z -> gamma} beta_z(x,y).
double busemann_quasi(const CocycleContext& ctx, Vertex gamma, Vertex x, Vertex y);

/// busemann_quasi(gamma, x, y) for every vertex y, indexed by y.
std::vector<double> busemann_profile(const CocycleContext& ctx, Vertex gamma, Vertex x);

/// B_lambda(x,y) = sum over atoms of weight * busemann_quasi.
double barycenter_functional(const CocycleContext& ctx, const BoundaryMeasure& lambda,
                             Vertex x, Vertex y);
std::vector<double> barycenter_profile(const CocycleContext& ctx,
                                       const BoundaryMeasure& lambda, Vertex x);

struct BInfinityReport {
  double boundary_value = 0;  // B_lambda(x,y)
  double limsup = 0;          // max over the trailing half of the sequence
  double deviation = 0;
  bool pass = false;
};
/// Compares B_lambda(x,y) with the limsup of integrals of beta_z(x,y) against
/// interior measures; pass iff the gap is at most C2 (+1e-9).
BInfinityReport b_infinity_check(const CocycleContext& ctx,
                                 const std::vector<FiniteMeasure>& interior,
                                 const BoundaryMeasure& lambda, Vertex x, Vertex y);

struct InequalityReport {
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  double worst = 0;  // largest violation (<= 0 means all satisfied)
};

/// d(x,y) + (2/a) log rho_x(y,z) <= beta_z(x,y) <= same + C2 over all point
/// pairs y != z of a table with basepoint x.
InequalityReport check_cocycle_estimates(const QuasiMetricTable& table, double slack = 1e-9);

/// Quasi-cocycle properties of the boundary cocycles on sampled triples:
/// (i) |b(x,y)| <= d(x,y); (ii) 0 <= b(x,y)+b(y,x) <= C2;
/// (iii) 0 <= b(x,y)+b(y,z)+b(z,x) <= 2 C2; and for B_lambda,
/// |B(x,y) - B(x',y) - B(x,x')| <= 3 C2.
struct QuasiCocycleReport {
  std::array<InequalityReport, 4> parts;  // (i), (ii), (iii), Bxx
  Distance max_oscillation = 0;
  bool pass() const {
    for (const auto& p : parts) {
      if (p.failures != 0) return false;
    }
    return true;
  }
};
QuasiCocycleReport check_quasicocycle(const CocycleContext& ctx, const BoundaryMeasure& lambda,
                                      const std::vector<std::array<Vertex, 3>>& triples,
                                      double slack = 1e-9);

}  // namespace hyperb

#endif  // HYPERB_COCYCLES_HPP
