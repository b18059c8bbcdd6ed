#ifndef HYPERB_REGULAR_TREE_HPP
#define HYPERB_REGULAR_TREE_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace hyperb {

/// The infinite q-regular tree, handled analytically for measures whose
/// density is a combination of exp(-delta d(c, .)) with all centres c on one
/// bi-infinite geodesic L (positions in Z along L).
///
/// A vertex y is described by its projection p onto L and its height
/// h = d(y, L); there is one vertex with h = 0 over each p and
/// (q-2)(q-1)^(h-1) with h >= 1. Summing over heights gives the factors
///   K = (1-u) / (1-(q-1)u)  and  N = (1+u) / (1-(q-1)u),  u = exp(-delta),
/// where N is the total mass of exp(-delta d(c, .)).
class RegularTreeSpace {
 public:
  explicit RegularTreeSpace(int q);

  int q() const { return q_; }
  /// log(q - 1): the exponential growth rate of spheres.
  double critical_exponent() const;

  /// sum over all y of exp(-delta d(c, y)). Throws unless delta exceeds the
  /// critical exponent.
  double normalizer(double delta) const;
  /// nu_c({c}) = 1 / normalizer.
  double center_mass(double delta) const;

  using Combination = std::vector<std::pair<std::int64_t, double>>;  // (position, weight)
  /// || sum a_i nu_{c_i} - sum b_j nu_{c_j} || (sum of absolute differences).
  double tv_on_line(double delta, const Combination& a, const Combination& b) const;

  /// || nu_0 - nu_s || for two points at distance |s|.
  double pre_patterson_tv(double delta, std::int64_t s) const;

  /// Left Riemann sums of the geodesic Cesaro averages
  ///   (step/n) sum_{j < n/step} nu_{xi(j step)}
  /// for the ray xi from position 0 and the ray xi' from position `offset`,
  /// both toward the same end of L (so xi'(t) = xi(t + offset)), and the
  /// total variation between them. step must be a positive integer.
  double cesaro_tv(double delta, std::int64_t offset, std::int64_t n, std::int64_t step = 1) const;

 private:
  int q_;
};

}  // namespace hyperb

#endif  // HYPERB_REGULAR_TREE_HPP
