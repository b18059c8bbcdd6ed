#include "hyperb/hyperbolization.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "hyperb/parallel.hpp"

namespace hyperb {

namespace {

constexpr double kLn2 = 0.69314718055994530942;

void require_finite(std::initializer_list<double> xs) {
  for (double x : xs) {
    if (!std::isfinite(x)) throw std::invalid_argument("non-finite coordinate");
  }
}

double log_sum_exp(std::initializer_list<double> xs) {
  double m = -std::numeric_limits<double>::infinity();
  for (double x : xs) m = std::max(m, x);
  if (std::isinf(m)) return m;
  double s = 0;
  for (double x : xs) s += std::exp(x - m);
  return m + std::log(s);
}

}  // namespace

double h2_distance(double t1, double l1, double t2, double l2) {
  require_finite({t1, l1, t2, l2});
  const double dl = l1 - l2;
  if (dl == 0.0) return std::abs(t1 - t2);
  const double half = std::abs(t1 - t2) / 2;
  // log sinh^2(half); sinh(half) = e^half / 2 to double precision past 20.
  const double logA = half == 0.0   ? -std::numeric_limits<double>::infinity()
                      : half > 20.0 ? 2 * (half - kLn2)
                                    : 2 * std::log(std::sinh(half));
  const double logB = 2 * std::log(std::abs(dl)) - 2 * kLn2 - (t1 + t2);
  const double logS = log_sum_exp({logA, logB});
  if (logS < 600) return 2 * std::asinh(std::sqrt(std::exp(logS)));
  // asinh(u) = log(2u) up to a relative error of order u^-2.
  return 2 * kLn2 + logS;
}

EuclideanBase::EuclideanBase(std::size_t dim) : dim_(dim) {
  if (dim == 0) throw std::invalid_argument("Euclidean base needs dimension >= 1");
}

void EuclideanBase::check(const Point& p) const {
  if (p.size() != dim_) throw std::invalid_argument("point has the wrong dimension");
}

double EuclideanBase::distance(const Point& a, const Point& b) const {
  check(a);
  check(b);
  double s = 0;
  for (std::size_t i = 0; i < dim_; ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

EuclideanBase::Point EuclideanBase::along(const Point& a, const Point& b, double s) const {
  const double d = distance(a, b);
  if (d == 0.0) return a;
  const double f = std::clamp(s / d, 0.0, 1.0);
  Point out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) out[i] = a[i] + f * (b[i] - a[i]);
  return out;
}

EuclideanBase::Point EuclideanBase::random_point(std::mt19937_64& rng, double box) const {
  std::uniform_real_distribution<double> u(-box, box);
  Point p(dim_);
  for (auto& c : p) c = u(rng);
  return p;
}

MetricTreeBase::MetricTreeBase(std::vector<int> parent, std::vector<double> length)
    : parent_(std::move(parent)), length_(std::move(length)) {
  const int n = vertex_count();
  if (n == 0 || length_.size() != parent_.size()) {
    throw std::invalid_argument("metric tree: parent and length arrays must match and be nonempty");
  }
  if (parent_[0] != -1) throw std::invalid_argument("metric tree: vertex 0 must be the root");
  std::vector<std::vector<int>> children(static_cast<std::size_t>(n));
  for (int v = 1; v < n; ++v) {
    if (parent_[v] < 0 || parent_[v] >= n) throw std::invalid_argument("metric tree: bad parent");
    if (!(length_[v] > 0) || !std::isfinite(length_[v])) {
      throw std::invalid_argument("metric tree: edge lengths must be positive");
    }
    children[static_cast<std::size_t>(parent_[v])].push_back(v);
  }
  length_[0] = 0;
  depth_.assign(static_cast<std::size_t>(n), 0.0);
  level_.assign(static_cast<std::size_t>(n), -1);
  std::vector<int> stack{0};
  level_[0] = 0;
  int seen = 0;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    ++seen;
    for (int c : children[static_cast<std::size_t>(v)]) {
      depth_[c] = depth_[v] + length_[c];
      level_[c] = level_[v] + 1;
      stack.push_back(c);
    }
  }
  if (seen != n) throw std::invalid_argument("metric tree: parent array contains a cycle");
}

MetricTreeBase MetricTreeBase::random(int n, std::uint64_t seed, double min_len, double max_len) {
  if (n < 1) throw std::invalid_argument("metric tree: need at least one vertex");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> len(min_len, max_len);
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  std::vector<double> length(static_cast<std::size_t>(n), 0.0);
  for (int v = 1; v < n; ++v) {
    parent[v] = std::uniform_int_distribution<int>(0, v - 1)(rng);
    length[v] = len(rng);
  }
  return MetricTreeBase(std::move(parent), std::move(length));
}

int MetricTreeBase::lca(int u, int v) const {
  while (level_[u] > level_[v]) u = parent_[u];
  while (level_[v] > level_[u]) v = parent_[v];
  while (u != v) {
    u = parent_[u];
    v = parent_[v];
  }
  return u;
}

double MetricTreeBase::distance(const Point& a, const Point& b) const {
  if (a.v == b.v) return std::abs(a.up - b.up);
  const int w = lca(a.v, b.v);
  if (w == a.v || w == b.v) return std::abs(depth(a) - depth(b));
  return depth(a) + depth(b) - 2 * depth_[w];
}

MetricTreeBase::Point MetricTreeBase::above(Point p, double s) const {
  p.up += s;
  while (parent_[p.v] >= 0 && p.up > length_[p.v]) {
    p.up -= length_[p.v];
    p.v = parent_[p.v];
  }
  if (parent_[p.v] < 0) p.up = 0;
  return p;
}

MetricTreeBase::Point MetricTreeBase::along(const Point& a, const Point& b, double s) const {
  const double d = distance(a, b);
  s = std::clamp(s, 0.0, d);
  if (a.v == b.v) return {a.v, a.up + (b.up > a.up ? s : -s)};
  const int w = lca(a.v, b.v);
  if (w == b.v) return above(a, s);
  if (w == a.v) return above(b, d - s);
  const double up_leg = depth(a) - depth_[w];
  return s <= up_leg ? above(a, s) : above(b, d - s);
}

MetricTreeBase::Point MetricTreeBase::random_point(std::mt19937_64& rng) const {
  const int v = std::uniform_int_distribution<int>(0, vertex_count() - 1)(rng);
  const double up = std::uniform_real_distribution<double>(0.0, 1.0)(rng) * length_[v];
  return {v, up};
}

bool MetricTreeBase::is_automorphism(const std::vector<int>& phi) const {
  const int n = vertex_count();
  if (static_cast<int>(phi.size()) != n) return false;
  std::vector<char> hit(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) {
    if (phi[v] < 0 || phi[v] >= n || hit[phi[v]]) return false;
    hit[phi[v]] = 1;
  }
  for (int v = 0; v < n; ++v) {
    const int pv = parent_[v];
    const int target = pv < 0 ? -1 : phi[pv];
    if (parent_[phi[v]] != target) return false;
    if (length_[phi[v]] != length_[v]) return false;
  }
  return true;
}

double strip_height(double t1, double t2, double L, double f) {
  if (L == 0.0) return t1 + f * (t2 - t1);
  // y^2 = (1-f) y1^2 + f y2^2 + f(1-f) L^2 on the semicircle through
  // (0, y1) and (L, y2), evaluated in log form.
  const double ninf = -std::numeric_limits<double>::infinity();
  const double a = f < 1 ? std::log1p(-f) + 2 * t1 : ninf;
  const double b = f > 0 ? std::log(f) + 2 * t2 : ninf;
  const double c = f > 0 && f < 1 ? std::log(f) + std::log1p(-f) + 2 * std::log(L) : ninf;
  return 0.5 * log_sum_exp({a, b, c});
}

std::array<std::array<double, 2>, 3> comparison_triangle(double d01, double d02, double d12) {
  const double scale = std::max({d01, d02, d12, 1.0});
  const double tol = 1e-12 * scale;
  if (d01 > d02 + d12 + tol || d02 > d01 + d12 + tol || d12 > d01 + d02 + tol) {
    throw std::invalid_argument("comparison triangle: side lengths violate the triangle inequality");
  }
  std::array<std::array<double, 2>, 3> z{};
  if (d01 <= 0) {
    z[2] = {d02, 0.0};
    return z;
  }
  z[1] = {d01, 0.0};
  const double x = (d01 * d01 + d02 * d02 - d12 * d12) / (2 * d01);
  z[2] = {x, std::sqrt(std::max(0.0, d02 * d02 - x * x))};
  return z;
}

double vertical_ray_gap(double l1, double l2, double t) { return h2_distance(t, l1, t, l2); }

double h2_cesaro_tv(double delta, double t_prime, double l_prime, double n,
                    const HNetOptions& opt) {
  if (!(delta > 1.0)) throw std::invalid_argument("delta must exceed the critical exponent 1 of H^2");
  if (!(opt.h > 0 && opt.s > 0 && opt.radius > 0 && opt.step > 0) || !(n >= opt.step)) {
    throw std::invalid_argument("h2_cesaro_tv: bad net or step parameters");
  }
  const auto samples = static_cast<std::size_t>(std::floor(n / opt.step + 1e-9));
  const double tmin = std::min(0.0, t_prime) - opt.radius;
  const double tmax = std::max(n, t_prime + n) + opt.radius;
  const double lmin = std::min(0.0, l_prime);
  const double lmax = std::max(0.0, l_prime);
  const double width = std::sinh(opt.radius);
  std::vector<std::pair<double, double>> net;
  for (auto i = static_cast<long>(std::floor(tmin / opt.h)); i * opt.h <= tmax; ++i) {
    const double t = static_cast<double>(i) * opt.h;
    const double unit = opt.s * std::exp(t);
    const auto jlo = static_cast<long>(std::floor((lmin - width * std::exp(t)) / unit));
    const auto jhi = static_cast<long>(std::ceil((lmax + width * std::exp(t)) / unit));
    if (jhi - jlo > 2'000'000) throw std::invalid_argument("h2_cesaro_tv: net too large");
    for (long j = jlo; j <= jhi; ++j) net.emplace_back(t, static_cast<double>(j) * unit);
  }
  auto average = [&](double t0, double l0) {
    std::vector<double> acc(net.size(), 0.0);
    std::vector<double> w(net.size());
    for (std::size_t k = 0; k < samples; ++k) {
      const double tc = t0 + static_cast<double>(k) * opt.step;
      parallel_for(0, net.size(), [&](std::size_t i) {
        w[i] = std::exp(-delta * h2_distance(tc, l0, net[i].first, net[i].second));
      });
      const double total = std::accumulate(w.begin(), w.end(), 0.0);
      for (std::size_t i = 0; i < net.size(); ++i) acc[i] += w[i] / total / static_cast<double>(samples);
    }
    return acc;
  };
  const auto a = average(0.0, 0.0);
  const auto b = average(t_prime, l_prime);
  double tv = 0;
  for (std::size_t i = 0; i < net.size(); ++i) tv += std::abs(a[i] - b[i]);
  return tv;
}

}  // namespace hyperb
