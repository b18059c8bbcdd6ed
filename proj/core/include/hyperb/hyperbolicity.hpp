#ifndef HYPERB_HYPERBOLICITY_HPP
#define HYPERB_HYPERBOLICITY_HPP

#include <cstdint>
#include <string>

#include "hyperb/geodesics.hpp"
#include "hyperb/graph.hpp"

namespace hyperb {

/// Exact four-point constant: max over ordered quadruples (w,x,y,z) of
/// min((x|z)_w, (y|z)_w) - (x|y)_w, clipped at 0. O(n^4).
HalfInt delta_four_point(const Graph& g);

struct RipsEstimate {
  HalfInt delta;
  /// True when no vertex pair had more geodesics than the cap, i.e. every
  /// geodesic triangle on vertices was examined.
  bool exact = true;
};

/// Thin-triangle constant over vertex triangles whose sides are enumerated
/// geodesics (at most `geodesic_cap` per pair, deterministic order). Sides are
/// metric segments, so points inside edges count and the value is a
/// half-integer. A lower bound for the true constant when capped. Trees
/// short-circuit to 0.
RipsEstimate delta_rips(const Graph& g, std::size_t geodesic_cap);

enum class DeltaEstimator { FourPoint, Rips };

DeltaEstimator parse_estimator(const std::string& name);
std::string to_string(DeltaEstimator e);

/// The chosen estimator's value as a real number.
double estimate_delta(const Graph& g, DeltaEstimator estimator,
                      std::size_t geodesic_cap = 64);

/// Result of checking d(x,[y,z]) - 4*delta <= (y|z)_x <= d(x,[y,z]) over all
/// vertex triples and every enumerated geodesic [y,z].
struct InsizeReport {
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  HalfInt max_gap;  // max of d(x,[y,z]) - (y|z)_x
  HalfInt min_gap;
};
InsizeReport check_insize(const Graph& g, HalfInt delta_rips, std::size_t geodesic_cap);

/// Fellow-travelling of two geodesics with a common far endpoint: the shift T
/// (|T| <= d(start1,start2)) minimising the max of d(r1(t), r2(t+T)) over
/// t >= d(start1,start2), and that max.
struct SausageReport {
  int shift = 0;
  Distance constant = 0;
};
SausageReport sausage_check(const Graph& g, const GeodesicSegment& ray1,
                            const GeodesicSegment& ray2);

}  // namespace hyperb

#endif  // HYPERB_HYPERBOLICITY_HPP
