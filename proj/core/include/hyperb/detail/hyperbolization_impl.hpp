#ifndef HYPERB_DETAIL_HYPERBOLIZATION_IMPL_HPP
#define HYPERB_DETAIL_HYPERBOLIZATION_IMPL_HPP

// Template definitions for hyperbolization.hpp; include that header instead.

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hyperb {
namespace detail {

inline EuclideanBase::Point sample_base(const EuclideanBase& b, std::mt19937_64& rng) {
  return b.random_point(rng, 5.0);
}
inline MetricTreeBase::Point sample_base(const MetricTreeBase& b, std::mt19937_64& rng) {
  return b.random_point(rng);
}

}  // namespace detail

template <class Base>
CatReport cat_minus1_check(const HSpace<Base>& X,
                           const std::array<typename HSpace<Base>::Point, 3>& tri,
                           std::size_t samples, std::uint64_t seed, double tol) {
  using Point = typename HSpace<Base>::Point;
  const Base& Y = X.base();
  double d[3][3];
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) d[i][j] = Y.distance(tri[i].y, tri[j].y);
  }
  const auto z = comparison_triangle(d[0][1], d[0][2], d[1][2]);
  CatReport rep;
  const double scale = std::max({d[0][1], d[0][2], d[1][2], 1.0});
  const double slack = std::min({d[0][1] + d[0][2] - d[1][2], d[0][1] + d[1][2] - d[0][2],
                                 d[0][2] + d[1][2] - d[0][1]});
  rep.degenerate = slack <= 1e-9 * scale;

  struct Side {
    Point p;
    std::array<double, 2> c;
  };
  auto side_point = [&](int i, int j, double f) {
    const double L = d[i][j];
    Side s;
    s.p.t = strip_height(tri[i].t, tri[j].t, L, f);
    s.p.y = Y.along(tri[i].y, tri[j].y, f * L);
    for (int k = 0; k < 2; ++k) s.c[k] = z[i][k] + f * (z[j][k] - z[i][k]);
    return s;
  };
  static constexpr int kSides[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, 2);
  std::uniform_real_distribution<double> frac(0.0, 1.0);
  for (std::size_t n = 0; n < samples; ++n) {
    const auto& A = kSides[pick(rng)];
    const auto& B = kSides[pick(rng)];
    const Side p = side_point(A[0], A[1], frac(rng));
    const Side q = side_point(B[0], B[1], frac(rng));
    const double dX = X.distance(p.p, q.p);
    const double gap = std::hypot(p.c[0] - q.c[0], p.c[1] - q.c[1]);
    const double dC = h2_distance(p.p.t, 0.0, q.p.t, gap);
    const double v = dX - dC;
    ++rep.samples;
    if (rep.samples == 1 || v > rep.max_violation) rep.max_violation = v;
    if (v > tol) ++rep.failures;
  }
  return rep;
}

template <class Base>
IsometryReport isometry_action_check(
    const HSpace<Base>& X,
    const std::function<typename Base::Point(const typename Base::Point&)>& g,
    std::size_t samples, std::uint64_t seed) {
  using Point = typename HSpace<Base>::Point;
  const Base& Y = X.base();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> height(-3.0, 3.0);
  for (int k = 0; k < 100; ++k) {
    const auto a = detail::sample_base(Y, rng);
    const auto b = detail::sample_base(Y, rng);
    if (std::abs(Y.distance(g(a), g(b)) - Y.distance(a, b)) > 1e-9) {
      throw std::invalid_argument("the supplied map is not an isometry of the base");
    }
  }
  IsometryReport rep;
  for (std::size_t n = 0; n < samples; ++n) {
    const Point p{height(rng), detail::sample_base(Y, rng)};
    const Point q{height(rng), detail::sample_base(Y, rng)};
    const Point gp{p.t, g(p.y)};
    const Point gq{q.t, g(q.y)};
    rep.max_deviation = std::max(rep.max_deviation, std::abs(X.distance(gp, gq) - X.distance(p, q)));
    ++rep.samples;
  }
  // Upward vertical rays from y1 and g(y1): their Gromov product at o grows
  // without bound, so g fixes the common endpoint of upward rays.
  const Point o{0.0, detail::sample_base(Y, rng)};
  const auto y1 = detail::sample_base(Y, rng);
  const auto y2 = g(y1);
  const double ts[3] = {5.0, 10.0, 20.0};
  for (int k = 0; k < 3; ++k) {
    const Point a{ts[k], y1};
    const Point b{ts[k], y2};
    rep.omega_products[k] = 0.5 * (X.distance(o, a) + X.distance(o, b) - X.distance(a, b));
  }
  rep.products_increasing =
      rep.omega_products[0] < rep.omega_products[1] && rep.omega_products[1] < rep.omega_products[2];
  return rep;
}

}  // namespace hyperb

#endif  // HYPERB_DETAIL_HYPERBOLIZATION_IMPL_HPP
