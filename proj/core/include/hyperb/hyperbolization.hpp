#ifndef HYPERB_HYPERBOLIZATION_HPP
#define HYPERB_HYPERBOLIZATION_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace hyperb {

/// Distance in the hyperbolic plane with metric dt^2 + exp(-2t) dl^2, i.e. the
/// upper half-plane with y = exp(t):
///   2 asinh( sqrt( sinh^2((t1-t2)/2) + (l1-l2)^2 exp(-(t1+t2)) / 4 ) ).
/// Returns |t1 - t2| exactly when l1 == l2. Large arguments go through a
/// log-domain form so |t| up to ~1e300 does not overflow.
double h2_distance(double t1, double l1, double t2, double l2);

class EuclideanBase {
 public:
  using Point = std::vector<double>;
  explicit EuclideanBase(std::size_t dim);
  std::size_t dim() const { return dim_; }
  double distance(const Point& a, const Point& b) const;
  /// Point at distance s from a on the segment [a, b].
  Point along(const Point& a, const Point& b, double s) const;
  Point random_point(std::mt19937_64& rng, double box) const;

 private:
  void check(const Point& p) const;
  std::size_t dim_;
};

/// A finite tree with positive edge lengths, viewed as a metric space.
/// A point is (v, up): the point at distance `up` above vertex v on the edge
/// toward its parent (0 <= up <= length(v); the root has length 0).
class MetricTreeBase {
 public:
  struct Point {
    int v = 0;
    double up = 0;
    bool operator==(const Point&) const = default;
  };

  /// parent[0] must be -1 (the root); parent[i] < i is not required.
  MetricTreeBase(std::vector<int> parent, std::vector<double> length);
  static MetricTreeBase random(int n, std::uint64_t seed, double min_len = 0.1,
                               double max_len = 2.0);

  int vertex_count() const { return static_cast<int>(parent_.size()); }
  int parent(int v) const { return parent_[v]; }
  double length(int v) const { return length_[v]; }
  double height(int v) const { return depth_[v]; }  // weighted depth
  double depth(const Point& p) const { return depth_[p.v] - p.up; }
  int lca(int u, int v) const;

  double distance(const Point& a, const Point& b) const;
  Point along(const Point& a, const Point& b, double s) const;
  Point random_point(std::mt19937_64& rng) const;
  /// The point `s` higher than p (clamped at the root).
  Point above(Point p, double s) const;

  /// True iff phi is a vertex bijection preserving parents and lengths.
  bool is_automorphism(const std::vector<int>& phi) const;
  Point apply(const std::vector<int>& phi, const Point& p) const { return {phi[p.v], p.up}; }

 private:
  std::vector<int> parent_;
  std::vector<double> length_;
  std::vector<double> depth_;
  std::vector<int> level_;
};

/// H(Y) = R x Y with d((t1,y1),(t2,y2)) = h2_distance(t1, 0, t2, d_Y(y1, y2)).
template <class Base>
class HSpace {
 public:
  struct Point {
    double t = 0;
    typename Base::Point y;
  };

  explicit HSpace(Base base) : base_(std::move(base)) {}
  const Base& base() const { return base_; }
  double distance(const Point& p, const Point& q) const {
    return h2_distance(p.t, 0.0, q.t, base_.distance(p.y, q.y));
  }

 private:
  Base base_;
};

/// Point on the H^2 geodesic from (t1, 0) to (t2, L) whose l-coordinate is
/// f L (0 <= f <= 1); returns its height. For L == 0 the height is
/// interpolated linearly.
double strip_height(double t1, double t2, double L, double f);

/// Euclidean comparison triangle of three side lengths in the plane:
/// z0 = (0,0), z1 = (d01, 0), z2 in the upper half. Throws when the lengths
/// violate the triangle inequality by more than 1e-12.
std::array<std::array<double, 2>, 3> comparison_triangle(double d01, double d02, double d12);

struct CatReport {
  std::uint64_t samples = 0;
  std::uint64_t failures = 0;
  double max_violation = 0;  // max of d_X(p, q) - d_comparison(p', q')
  bool degenerate = false;   // base triangle collinear
  bool pass() const { return failures == 0; }
};

template <class Base>
CatReport cat_minus1_check(const HSpace<Base>& X,
                           const std::array<typename HSpace<Base>::Point, 3>& tri,
                           std::size_t samples, std::uint64_t seed, double tol = 1e-9);

struct IsometryReport {
  std::uint64_t samples = 0;
  double max_deviation = 0;
  std::array<double, 3> omega_products{};  // at t = 5, 10, 20
  bool products_increasing = false;
  bool pass(double tol = 1e-9) const { return max_deviation <= tol && products_increasing; }
};

/// g acts by (t, y) -> (t, g y). Throws when g fails a base-distance spot check.
template <class Base>
IsometryReport isometry_action_check(
    const HSpace<Base>& X,
    const std::function<typename Base::Point(const typename Base::Point&)>& g,
    std::size_t samples, std::uint64_t seed);

/// d((t, l1), (t, l2)) along heights: the gap between two vertical rays at
/// height t, which tends to 0 as t grows.
double vertical_ray_gap(double l1, double l2, double t);

/// Pre-Patterson measures on a net of H^2 = H(R): net points (i h, j s e^{i h})
/// within distance `radius` of the vertical segments used, weights
/// exp(-delta d(x, .)) normalized. Returns || lambda_n(x) - lambda_n(x') ||
/// for the step-sum Cesaro averages along the upward vertical rays from
/// x = (0, 0) and x' = (t_prime, l_prime).
struct HNetOptions {
  double h = 0.5;
  double s = 0.5;
  double radius = 8.0;
  double step = 1.0 / 16.0;
};
double h2_cesaro_tv(double delta, double t_prime, double l_prime, double n,
                    const HNetOptions& opt = {});

}  // namespace hyperb

#include "hyperb/detail/hyperbolization_impl.hpp"

#endif  // HYPERB_HYPERBOLIZATION_HPP
