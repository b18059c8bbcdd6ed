#ifndef HYPERB_GROWTH_HPP
#define HYPERB_GROWTH_HPP

#include <array>
#include <cstdint>
#include <ostream>
#include <vector>

#include "hyperb/graph.hpp"

namespace hyperb {

/// Packing scales used by growth_profile.
inline constexpr std::array<Distance, 3> kPackingScales{1, 2, 3};

struct GrowthProfile {
  Distance rmax = 0;
  std::vector<std::uint64_t> ball_sizes;    // |B(base, r)|, r = 0..rmax
  std::vector<std::uint64_t> sphere_sizes;  // |S(base, r)|
  /// packing_numbers[r][k]: greedy maximal packing of disjoint
  /// kPackingScales[k]-balls with centres in B(base, r).
  std::vector<std::array<std::uint64_t, kPackingScales.size()>> packing_numbers;
  double growth_rate = 0;
  double critical_exponent_estimate = 0;
};

/// Distance from the base to the nearest vertex whose degree is below the
/// maximum degree (the truncation boundary), capped at the base eccentricity.
Distance interior_radius(const Graph& g);

/// Ball, sphere and packing statistics around the base. growth_rate is the
/// least-squares slope of log|S(base, r)| against r over the last half of the
/// radii (clamped at 0). Throws when rmax exceeds interior_radius(g), since
/// truncated spheres undercount.
GrowthProfile growth_profile(const Graph& g, Distance rmax);

/// The exponential growth rate of spheres, read as the abscissa of
/// convergence of sum_r |S(base, r)| exp(-delta r). Identical to
/// growth_profile(g, rmax).growth_rate.
double critical_exponent(const Graph& g, Distance rmax);

struct TemperedRow {
  Distance r = 0;
  std::uint64_t ball_min = 0;
  std::uint64_t ball_max = 0;
};
struct TemperedReport {
  std::vector<TemperedRow> rows;
  std::size_t sources = 0;  // vertices scanned
  std::uint64_t cap = 0;
  bool pass = false;
};
/// min and max of |B(x, r)| for r in [r1, r2] over the scanned vertices x:
/// those with d(base, x) + r2 <= interior_radius(g), or every vertex when
/// interior_only is false. PASS iff every min >= 1 and every max <= cap.
TemperedReport tempered_check(const Graph& g, Distance r1, Distance r2, std::uint64_t cap,
                              bool interior_only = true);

/// CSV with header `r,ball_min,ball_max,sphere,packing_rho1,packing_rho2,packing_rho3`
/// (ball_min = ball_max = |B(base, r)| for the base profile).
void write_growth_csv(const GrowthProfile& p, std::ostream& out);

}  // namespace hyperb

#endif  // HYPERB_GROWTH_HPP
