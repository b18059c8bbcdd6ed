#ifndef HYPERB_AMENABILITY_HPP
#define HYPERB_AMENABILITY_HPP

#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <vector>

#include "hyperb/graph.hpp"
#include "hyperb/measures.hpp"

namespace hyperb {

using VertexSet = std::vector<Vertex>;  // sorted, duplicate free

/// Two increasing sequences Z_1, Z_2, ... and Z'_1, Z'_2, ... (stored from
/// index 0) with Z_k in Z'_{k+tau} and Z'_k in Z_{k+tau} wherever both sides
/// are defined. The base measure is counting measure unless `weights` is set.
struct SandwichInstance {
  std::vector<VertexSet> Z;
  std::vector<VertexSet> Zp;
  int tau = 0;
  std::map<Vertex, Rational> weights;

  /// Throws on empty, non-increasing, or non-sandwiched data.
  void validate() const;
  Rational mass(const VertexSet& s) const;
  std::size_t length() const { return std::min(Z.size(), Zp.size()); }
};

/// 2 tau/n + (4(n-tau)/n) [1 - (m Z_1 / m Z_{n+tau})^(2 tau/(n-tau))].
/// Requires n > tau and n + tau <= length (0 when tau = 0).
double sandwich_bound(const SandwichInstance& inst, std::size_t n);

/// (1/n) sum_{k=1..n} m_{Z_k}, with m_Z the normalized restriction of the
/// base measure to Z. The sets must be increasing.
ExactMeasure cesaro_average(const std::vector<VertexSet>& sets, std::size_t n,
                            const std::map<Vertex, Rational>& weights = {});

/// Exact || lambda_n - lambda'_n || for the two Cesaro averages.
Rational cesaro_tv(const SandwichInstance& inst, std::size_t n);

/// Exact comparison of a rational with a double.
bool rational_le(const Rational& value, double bound);

/// Random tau-sandwiched pair over the universe {0, ..., universe-1}.
SandwichInstance random_sandwich_instance(std::mt19937_64& rng, std::size_t length, int tau,
                                          std::size_t universe);

/// Z_k = B(x, k) and Z'_k = B(x', k) for k = 1..kmax with tau = d(x, x').
SandwichInstance ball_sandwich(const Graph& g, Vertex x, Vertex x_prime, Distance kmax);

/// Points beyond the horizon along the ray of gamma get ids starting at
/// vertex_count(): ray parameter t > R maps to vertex_count() + (t - R - 1).
Vertex virtual_ray_vertex(const Graph& g, Distance horizon_radius, Distance t);
bool is_virtual(const Graph& g, Vertex v);

/// Z(x, gamma, n, k) for k = 1..kmax: the closed r-neighbourhoods of
///   Y(x, gamma, n, k) = { xi(n) : xi a geodesic toward gamma, d(x, xi(0)) <= k }.
/// Geodesics toward gamma start at p and run through vertices at decreasing
/// distance to the horizon endpoint of gamma; at the endpoint they continue
/// along the (virtual) extension of the ray of gamma. That continuation is
/// exact on trees, where starts beyond the horizon on the ray are added too.
/// On other graphs n may not exceed d(p, endpoint) for any start p.
/// Throws when the truncated ball around x is too shallow for kmax.
std::vector<VertexSet> lambda_sets(const Graph& g, Vertex x, Vertex gamma, Distance n,
                                   Distance kmax, Distance r = 0);

/// lambda_n(x, gamma) = (1/n) sum_{k=1..n} m_{Z(x, gamma, n, k)} (counting measure).
ExactMeasure build_lambda_n(const Graph& g, Vertex x, Vertex gamma, Distance n, Distance r = 0);

struct DecayRow {
  Distance n = 0;
  Rational tv;
  double bound = 2.0;  // the sandwich bound when n > tau, else the trivial bound 2
  bool holds = true;
};
/// || lambda_n(x, gamma) - lambda_n(x', gamma) || for each n, paired with the
/// sandwich bound for tau = d(x, x') computed from the sets up to n + tau.
std::vector<DecayRow> lambda_decay_experiment(const Graph& g, Vertex x, Vertex x_prime,
                                              Vertex gamma, const std::vector<Distance>& n_list,
                                              Distance r = 0);
/// `n,tv,bound` lines; tv is the exact rational p/q.
void write_decay_csv(const std::vector<DecayRow>& rows, std::ostream& out);

struct PrePatterson {
  FiniteMeasure measure;
  double normalizer = 0;
  double growth_rate = 0;
  /// Estimated relative mass outside the truncation ball, from the sphere
  /// at the truncation radius and the growth rate.
  double tail_bound = 0;
};
/// nu_x(y) proportional to exp(-delta d(x, y)) over y in B(x, truncation)
/// (counting measure). growth_rate defaults to the fitted sphere growth
/// around the base. Throws when delta <= growth rate.
PrePatterson pre_patterson(const Graph& g, Vertex x, double delta, Distance truncation,
                           std::optional<double> growth_rate = std::nullopt);

/// Vertices of the geodesic from x to `target` (smallest-id choices).
std::vector<Vertex> geodesic_toward(const Graph& g, Vertex x, Vertex target);

/// (step/n) sum_{j < n/step} nu_{xi(j step)} along the geodesic xi from x to
/// `target`. Throws when the geodesic is shorter than the last sample.
FiniteMeasure cesaro_geodesic(const Graph& g, Vertex x, Vertex target, Distance n, double delta,
                              Distance truncation, Distance step = 1,
                              std::optional<double> growth_rate = std::nullopt);

}  // namespace hyperb

#endif  // HYPERB_AMENABILITY_HPP
