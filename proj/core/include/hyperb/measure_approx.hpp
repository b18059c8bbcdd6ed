#ifndef HYPERB_MEASURE_APPROX_HPP
#define HYPERB_MEASURE_APPROX_HPP

#include <memory>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "hyperb/boundary_metrics.hpp"
#include "hyperb/graph.hpp"
#include "hyperb/measures.hpp"

namespace hyperb {

/// phi_s = f_s / sum f_s over s in S = S(x, n) with
///   f_s(z) = max(0, 1 - (rho_x(z, s) - rho_x(z, S)) / epsilon).
/// rho_x is evaluated in a table whose points are the domain, the sphere and
/// the horizon of the base.
struct PartitionOfUnity {
  Vertex basepoint = 0;
  Distance n = 0;
  double a = 0;
  double epsilon = 0;
  std::vector<Vertex> sphere;  // S(x, n), increasing id
  std::shared_ptr<const QuasiMetricTable> table;
  /// phi[i] lists (sphere index, value > 0) for table point i.
  std::vector<std::vector<std::pair<std::uint32_t, double>>> phi;

  const std::vector<std::pair<std::uint32_t, double>>& at(Vertex z) const;
  double value(Vertex s, Vertex z) const;
};

/// epsilon defaults to exp(-a n). An empty domain means every vertex.
PartitionOfUnity build_partition(const Graph& g, Vertex x, Distance n, double a,
                                 std::optional<double> epsilon = std::nullopt,
                                 std::vector<Vertex> domain = {});

/// (pi theta)(s) = sum_z phi_s(z) theta(z).
FiniteMeasure project_pi_n(const PartitionOfUnity& p, const FiniteMeasure& theta);
SignedMeasure project_pi_n(const PartitionOfUnity& p, const SignedMeasure& theta);

/// supp pi_n delta_gamma inside B_x(gamma, 2 exp(-a n)), and some s in S with
/// supp pi_n delta_gamma inside B_x(s, 3 exp(-a n)).
struct SupportReport {
  bool supp = false;
  bool supp3 = false;
  Vertex witness = -1;           // an s realising the second containment
  double rho_to_sphere = 0;      // rho_x(gamma, S), compared with exp(-a n)
};
SupportReport check_support(const PartitionOfUnity& p, Vertex gamma);

struct WeakStarRow {
  Distance n = 0;
  double difference = 0;  // |int f d(pi_n theta) - int f d theta|
  double bound = 0;       // lip * 3 exp(-a n)
  bool holds = false;
};
/// f is indexed by vertex; lip is its Lipschitz constant for rho_x.
std::vector<WeakStarRow> weakstar_convergence_check(const Graph& g, Vertex x, double a,
                                                    const BoundaryMeasure& theta,
                                                    const std::vector<double>& f, double lip,
                                                    const std::vector<Distance>& n_list);

struct AtomReport {
  double W = 0;                            // value at n_max
  std::vector<double> W_series;            // W_n for n = 1..n_max
  std::vector<Vertex> argmax;              // sphere points attaining W at n_max
  std::vector<Vertex> atomic_support;      // atoms of theta within 3 exp(-a n_max) of argmax
  std::vector<std::pair<Vertex, Vertex>> unresolved;  // atom pairs closer than 6 exp(-a n_max)
};
/// W_n = max over s in S(x, n) of (pi_n theta)[B_x(s, 3 exp(-a n))].
AtomReport extract_atoms(const Graph& g, Vertex x, double a, const BoundaryMeasure& theta,
                         Distance n_max);

/// Positive and negative parts (disjoint supports, m = plus - minus).
std::pair<FiniteMeasure, FiniteMeasure> hahn_split(const SignedMeasure& m);

/// `s,z,phi` rows.
void write_partition_csv(const PartitionOfUnity& p, std::ostream& out);

}  // namespace hyperb

#endif  // HYPERB_MEASURE_APPROX_HPP
