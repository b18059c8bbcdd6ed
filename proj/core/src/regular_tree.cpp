#include "hyperb/regular_tree.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hyperb/graph.hpp"

namespace hyperb {

RegularTreeSpace::RegularTreeSpace(int q) : q_(q) {
  if (q < 2) throw GraphError("regular tree degree must be at least 2");
}

double RegularTreeSpace::critical_exponent() const { return std::log(static_cast<double>(q_ - 1)); }

double RegularTreeSpace::normalizer(double delta) const {
  if (!(delta > critical_exponent())) {
    throw GraphError("delta must exceed the critical exponent log(q-1)");
  }
  const double u = std::exp(-delta);
  return (1 + u) / (1 - (q_ - 1) * u);
}

double RegularTreeSpace::center_mass(double delta) const { return 1.0 / normalizer(delta); }

double RegularTreeSpace::tv_on_line(double delta, const Combination& a, const Combination& b) const {
  const double N = normalizer(delta);
  const double u = std::exp(-delta);
  const double K = (1 - u) / (1 - (q_ - 1) * u);
  if (a.empty() && b.empty()) return 0.0;
  std::int64_t lo = INT64_MAX, hi = INT64_MIN;
  for (const auto* c : {&a, &b}) {
    for (const auto& [pos, w] : *c) {
      lo = std::min(lo, pos);
      hi = std::max(hi, pos);
    }
  }
  auto diff = [&](std::int64_t p) {
    double s = 0;
    for (const auto& [pos, w] : a) s += w * std::pow(u, static_cast<double>(std::llabs(pos - p)));
    for (const auto& [pos, w] : b) s -= w * std::pow(u, static_cast<double>(std::llabs(pos - p)));
    return s;
  };
  double total = 0;
  for (std::int64_t p = lo; p <= hi; ++p) total += std::abs(diff(p));
  // Outside [lo, hi] the difference is a geometric sequence in |p|.
  total += (std::abs(diff(lo)) + std::abs(diff(hi))) * u / (1 - u);
  return K * total / N;
}

double RegularTreeSpace::pre_patterson_tv(double delta, std::int64_t s) const {
  return tv_on_line(delta, {{0, 1.0}}, {{s, 1.0}});
}

double RegularTreeSpace::cesaro_tv(double delta, std::int64_t offset, std::int64_t n,
                                   std::int64_t step) const {
  if (step < 1 || n < step) throw GraphError("cesaro_tv: need 1 <= step <= n");
  const std::int64_t m = n / step;
  const double w = 1.0 / static_cast<double>(m);
  Combination a, b;
  for (std::int64_t j = 0; j < m; ++j) {
    a.emplace_back(j * step, w);
    b.emplace_back(j * step + offset, w);
  }
  return tv_on_line(delta, a, b);
}

}  // namespace hyperb
