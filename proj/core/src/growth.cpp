#include "hyperb/growth.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hyperb/geodesics.hpp"
#include "hyperb/parallel.hpp"

namespace hyperb {

Distance interior_radius(const Graph& g) {
  const std::size_t max_degree = g.degree_bound();
  const auto& d = g.base_row();
  Distance best = g.base_eccentricity();
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) < max_degree) best = std::min(best, d[v]);
  }
  return best;
}

namespace {

double fitted_slope(const std::vector<std::uint64_t>& spheres) {
  const std::size_t rmax = spheres.size() - 1;
  const std::size_t first = rmax - rmax / 2;
  if (rmax == 0 || first >= rmax) return 0.0;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  double count = 0;
  for (std::size_t r = first; r <= rmax; ++r) {
    const double x = static_cast<double>(r);
    const double y = std::log(static_cast<double>(spheres[r]));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    count += 1;
  }
  const double slope = (count * sxy - sx * sy) / (count * sxx - sx * sx);
  return std::max(0.0, slope);
}

}  // namespace

GrowthProfile growth_profile(const Graph& g, Distance rmax) {
  if (rmax < 0) throw GraphError("growth_profile: rmax must be nonnegative");
  const Distance limit = interior_radius(g);
  if (rmax > limit) {
    throw GraphError("growth_profile: rmax " + std::to_string(rmax) +
                     " reaches the truncation boundary (interior radius " +
                     std::to_string(limit) + ")");
  }
  GrowthProfile p;
  p.rmax = rmax;
  const auto& d = g.base_row();
  const auto R = static_cast<std::size_t>(rmax);
  p.sphere_sizes.assign(R + 1, 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (d[v] <= rmax) ++p.sphere_sizes[static_cast<std::size_t>(d[v])];
  }
  p.ball_sizes.resize(R + 1);
  std::partial_sum(p.sphere_sizes.begin(), p.sphere_sizes.end(), p.ball_sizes.begin());

  // Greedy in (distance, id) order: the packing for B(base, r) is a prefix of
  // the one for B(base, r + 1), so one pass per scale gives every radius.
  std::vector<Vertex> order = g.ball(g.base(), rmax);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return d[a] < d[b]; });
  p.packing_numbers.assign(R + 1, {});
  for (std::size_t k = 0; k < kPackingScales.size(); ++k) {
    const Distance rho = kPackingScales[k];
    std::vector<char> blocked(static_cast<std::size_t>(g.vertex_count()), 0);
    std::vector<std::uint64_t> accepted_at(R + 1, 0);
    for (Vertex c : order) {
      if (blocked[c]) continue;
      ++accepted_at[static_cast<std::size_t>(d[c])];
      for (Vertex w : g.ball(c, 2 * rho)) blocked[w] = 1;
    }
    std::uint64_t running = 0;
    for (std::size_t r = 0; r <= R; ++r) {
      running += accepted_at[r];
      p.packing_numbers[r][k] = running;
    }
  }
  p.growth_rate = fitted_slope(p.sphere_sizes);
  p.critical_exponent_estimate = p.growth_rate;
  return p;
}

double critical_exponent(const Graph& g, Distance rmax) {
  if (rmax < 0 || rmax > interior_radius(g)) {
    throw GraphError("critical_exponent: rmax outside the interior region");
  }
  const auto& d = g.base_row();
  std::vector<std::uint64_t> spheres(static_cast<std::size_t>(rmax) + 1, 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (d[v] <= rmax) ++spheres[static_cast<std::size_t>(d[v])];
  }
  return fitted_slope(spheres);
}

TemperedReport tempered_check(const Graph& g, Distance r1, Distance r2, std::uint64_t cap,
                              bool interior_only) {
  if (r1 < 0 || r2 < r1) throw GraphError("tempered_check: need 0 <= r1 <= r2");
  TemperedReport rep;
  rep.cap = cap;
  std::vector<Vertex> sources;
  const Distance limit = interior_radius(g);
  const auto& d = g.base_row();
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!interior_only || d[v] + r2 <= limit) sources.push_back(v);
  }
  rep.sources = sources.size();
  const auto span = static_cast<std::size_t>(r2 - r1) + 1;
  std::vector<std::vector<std::uint64_t>> sizes(sources.size());
  parallel_for(0, sources.size(), [&](std::size_t i) {
    auto& s = sizes[i];
    s.resize(span);
    for (std::size_t k = 0; k < span; ++k) {
      s[k] = g.ball_size(sources[i], r1 + static_cast<Distance>(k));
    }
  });
  rep.pass = !sources.empty();
  for (std::size_t k = 0; k < span; ++k) {
    TemperedRow row;
    row.r = r1 + static_cast<Distance>(k);
    if (!sources.empty()) {
      row.ball_min = row.ball_max = sizes[0][k];
      for (const auto& s : sizes) {
        row.ball_min = std::min(row.ball_min, s[k]);
        row.ball_max = std::max(row.ball_max, s[k]);
      }
    }
    if (row.ball_min < 1 || row.ball_max > cap) rep.pass = false;
    rep.rows.push_back(row);
  }
  return rep;
}

void write_growth_csv(const GrowthProfile& p, std::ostream& out) {
  out << "r,ball_min,ball_max,sphere,packing_rho1,packing_rho2,packing_rho3\n";
  for (std::size_t r = 0; r < p.ball_sizes.size(); ++r) {
    out << r << ',' << p.ball_sizes[r] << ',' << p.ball_sizes[r] << ',' << p.sphere_sizes[r];
    for (auto n : p.packing_numbers[r]) out << ',' << n;
    out << '\n';
  }
}

}  // namespace hyperb
