#ifndef HYPERB_BARYCENTER_HPP
#define HYPERB_BARYCENTER_HPP

#include <string>
#include <vector>

#include "hyperb/cocycles.hpp"

namespace hyperb {

/// Raised when a measure has an atom of weight >= 1/2, so B_lambda(x, .) need
/// not be proper and the sublevel sets may be unbounded.
class AtomTooHeavy : public GraphError {
 public:
  AtomTooHeavy(Vertex atom, double weight);
  Vertex atom() const { return atom_; }
  double weight() const { return weight_; }

 private:
  Vertex atom_;
  double weight_;
};

struct BarycenterResult {
  Vertex basepoint = 0;
  double r = 0;
  double infimum = 0;
  std::vector<Vertex> set;
  /// Union of C(lambda, x', r) over the basepoints x' that were scanned (all
  /// vertices for graphs with at most global_scan_limit() vertices, otherwise
  /// the closed unit ball around the basepoint).
  std::vector<Vertex> global_set;
  std::vector<Vertex> global_basepoints;
};

std::size_t global_scan_limit();

/// C(lambda, x, r) = { y : B_lambda(x,y) <= r + inf_z B_lambda(x,z) } by an
/// exhaustive scan over all vertices. Values within 1e-9 of the threshold are
/// included.
BarycenterResult quasi_barycenter(const CocycleContext& ctx, const BoundaryMeasure& lambda,
                                  Vertex x, double r, bool with_global = true);

struct StabilityReport {
  std::vector<Vertex> inner;    // C(lambda, x, r)
  std::vector<Vertex> outer;    // C(lambda, x', r + 6 C2)
  std::vector<Vertex> missing;  // inner \ outer
  bool holds() const { return missing.empty(); }
};
StabilityReport barycenter_stability_check(const CocycleContext& ctx,
                                           const BoundaryMeasure& lambda, Vertex x,
                                           Vertex x_prime, double r);

enum class MeasureKind { Elementary1, Elementary2, Bulky };
std::string to_string(MeasureKind k);

struct Classification {
  MeasureKind kind = MeasureKind::Bulky;
  /// Horizon endpoints for the elementary kinds, the vertex set otherwise.
  std::vector<Vertex> set;
};

/// Atoms of weight >= 1/2 decide the elementary cases when the support has at
/// most two points. With three or more atoms every weight is capped at
/// 1/2 - 1e-6, the excess spread uniformly over the uncapped atoms (repeated
/// until nothing exceeds the cap), and the result is C(lambda', base, 8 C2).
Classification classify_measure(const CocycleContext& ctx, const BoundaryMeasure& lambda);

/// The capping step used by classify_measure.
BoundaryMeasure rebalance_atoms(const BoundaryMeasure& lambda, double cap = 0.5 - 1e-6);

/// min over S(base, k) of B_lambda(x, .) for k = 0..horizon radius.
std::vector<double> sphere_minima(const CocycleContext& ctx, const BoundaryMeasure& lambda,
                                  Vertex x);

/// First k from which sphere_minima is nondecreasing (tolerance 1e-9).
std::size_t escape_burn_in(const std::vector<double>& minima);

}  // namespace hyperb

#endif  // HYPERB_BARYCENTER_HPP
