#include "hyperb/boundary_metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace hyperb {

double default_visual_exponent(double delta) {
  return 1.0 / (15.0 * std::max(delta, 0.5));
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

QuasiMetricTable::QuasiMetricTable(const Graph& g, Vertex basepoint, double a,
                                   std::vector<Vertex> points)
    : graph_(&g), basepoint_(basepoint), a_(a), points_(std::move(points)) {
  g.check_vertex(basepoint);
  if (!(a > 0) || !std::isfinite(a)) throw GraphError("visual exponent a must be positive");
  if (points_.empty()) {
    points_.resize(static_cast<std::size_t>(g.vertex_count()));
    for (Vertex v = 0; v < g.vertex_count(); ++v) points_[v] = v;
  }
  index_.reserve(points_.size());
  for (std::size_t i = 0; i < points_.size(); ++i) {
    g.check_vertex(points_[i]);
    if (!index_.emplace(points_[i], i).second) {
      throw GraphError("duplicate point " + std::to_string(points_[i]) + " in table");
    }
  }
  const auto base_row = g.row(basepoint);
  from_base_.resize(points_.size());
  for (std::size_t i = 0; i < points_.size(); ++i) from_base_[i] = (*base_row)[points_[i]];
  const Distance max_d = *std::max_element(base_row->begin(), base_row->end());
  weight_lut_.resize(static_cast<std::size_t>(4 * max_d + 2));
  for (std::size_t t = 0; t < weight_lut_.size(); ++t) {
    weight_lut_[t] = std::exp(-a_ * static_cast<double>(t) / 2.0);
  }
  ultrametric_ = g.is_tree();
  rows_.resize(points_.size());
}

std::optional<std::size_t> QuasiMetricTable::index_of(Vertex v) const {
  auto it = index_.find(v);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t QuasiMetricTable::require_index(Vertex v) const {
  auto i = index_of(v);
  if (!i) throw GraphError("vertex " + std::to_string(v) + " is not a point of the table");
  return *i;
}

HalfInt QuasiMetricTable::product(std::size_t i, std::size_t j) const {
  return HalfInt::from_twice(static_cast<std::int64_t>(from_base_[i]) + from_base_[j] -
                             graph_->dist(points_[i], points_[j]));
}

double QuasiMetricTable::varrho(std::size_t i, std::size_t j) const {
  if (i == j) return 0.0;
  return std::exp(-product(i, j).value());
}

double QuasiMetricTable::varrho_a(std::size_t i, std::size_t j) const {
  if (i == j) return 0.0;
  return weight_lut_[static_cast<std::size_t>(product(i, j).twice())];
}

std::shared_ptr<const std::vector<Distance>> QuasiMetricTable::distances_from(std::size_t i) const {
  return graph_->row(points_[i]);
}

std::shared_ptr<const std::vector<double>> QuasiMetricTable::compute_row(std::size_t src) const {
  const std::size_t p = points_.size();
  auto out = std::make_shared<std::vector<double>>(p, 0.0);
  auto& dist = *out;
  if (ultrametric_) {
    const auto d = distances_from(src);
    for (std::size_t j = 0; j < p; ++j) {
      if (j == src) continue;
      const auto twice = static_cast<std::size_t>(from_base_[src] + from_base_[j] - (*d)[points_[j]]);
      dist[j] = weight_lut_[twice];
    }
    return out;
  }
  std::fill(dist.begin(), dist.end(), std::numeric_limits<double>::infinity());
  std::vector<char> done(p, 0);
  dist[src] = 0.0;
  for (std::size_t step = 0; step < p; ++step) {
    std::size_t u = p;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < p; ++j) {
      if (!done[j] && dist[j] < best) {
        best = dist[j];
        u = j;
      }
    }
    if (u == p) break;
    done[u] = 1;
    const auto du = distances_from(u);
    const std::int64_t bu = from_base_[u];
    for (std::size_t j = 0; j < p; ++j) {
      if (done[j]) continue;
      const auto twice = static_cast<std::size_t>(bu + from_base_[j] - (*du)[points_[j]]);
      const double cand = best + weight_lut_[twice];
      if (cand < dist[j]) dist[j] = cand;
    }
  }
  return out;
}

std::shared_ptr<const std::vector<double>> QuasiMetricTable::rho_row(std::size_t i) const {
  if (i >= points_.size()) throw GraphError("table index out of range");
  {
    std::lock_guard lock(*mutex_);
    if (rows_[i]) return rows_[i];
  }
  auto row = compute_row(i);
  std::lock_guard lock(*mutex_);
  if (!rows_[i]) rows_[i] = row;
  return rows_[i];
}

double QuasiMetricTable::rho(std::size_t i, std::size_t j) const {
  if (i == j) return 0.0;
  if (ultrametric_) return varrho_a(i, j);
  return (*rho_row(i))[j];
}

double QuasiMetricTable::rho_to_set(std::size_t i, const std::vector<std::size_t>& targets) const {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t j : targets) best = std::min(best, rho(i, j));
  return best;
}

QuasiMetricTable visual_quasimetric(const Graph& g, Vertex x, double a) {
  return QuasiMetricTable(g, x, a, {});
}

QuasiMetricTable inner_metric(const Graph& g, Vertex x, double a, std::vector<Vertex> points) {
  return QuasiMetricTable(g, x, a, std::move(points));
}

std::vector<Vertex> metric_ball(const QuasiMetricTable& t, Vertex center, double r) {
  if (r < 0) throw GraphError("metric_ball: radius must be nonnegative");
  const std::size_t c = t.require_index(center);
  std::vector<Vertex> out;
  for (std::size_t j = 0; j < t.size(); ++j) {
    if (t.rho(c, j) <= r) out.push_back(t.point(j));
  }
  std::sort(out.begin(), out.end());
  return out;
}

SandwichReport check_half_sandwich(const QuasiMetricTable& t, double slack) {
  SandwichReport r;
  r.worst_lower = -std::numeric_limits<double>::infinity();
  r.worst_upper = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      const double va = t.varrho_a(i, j);
      const double rho = t.rho(i, j);
      ++r.pairs;
      const double lower = 0.5 * va - rho;
      const double upper = rho - va;
      if (lower > slack || upper > slack) ++r.failures;
      r.worst_lower = std::max(r.worst_lower, lower);
      r.worst_upper = std::max(r.worst_upper, upper);
    }
  }
  return r;
}

double max_triangle_violation(const QuasiMetricTable& t) {
  double worst = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = 0; j < t.size(); ++j) {
      const double ij = t.rho(i, j);
      for (std::size_t k = 0; k < t.size(); ++k) {
        worst = std::max(worst, t.rho(i, k) - ij - t.rho(j, k));
      }
    }
  }
  return worst;
}

void write_table_csv(const QuasiMetricTable& t, std::ostream& out) {
  out << "p,q,varrho,rho\n";
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      out << t.point(i) << ',' << t.point(j) << ',' << format_double(t.varrho(i, j)) << ','
          << format_double(t.rho(i, j)) << '\n';
    }
  }
}

}  // namespace hyperb
