#include "hyperb/measure_approx.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hyperb/horizon.hpp"
#include "hyperb/parallel.hpp"

namespace hyperb {

namespace {

constexpr double kSlack = 1e-12;

template <class M>
M project(const PartitionOfUnity& p, const M& theta) {
  M out;
  for (const auto& [z, w] : theta) {
    for (const auto& [si, phi] : p.at(z)) out.add(p.sphere[si], w * phi);
  }
  return out;
}

}  // namespace

const std::vector<std::pair<std::uint32_t, double>>& PartitionOfUnity::at(Vertex z) const {
  auto i = table->index_of(z);
  if (!i) throw GraphError("point " + std::to_string(z) + " is outside the partition domain");
  return phi[*i];
}

double PartitionOfUnity::value(Vertex s, Vertex z) const {
  auto it = std::lower_bound(sphere.begin(), sphere.end(), s);
  if (it == sphere.end() || *it != s) throw GraphError("vertex is not on the sphere");
  const auto si = static_cast<std::uint32_t>(it - sphere.begin());
  for (const auto& [k, v] : at(z)) {
    if (k == si) return v;
  }
  return 0.0;
}

PartitionOfUnity build_partition(const Graph& g, Vertex x, Distance n, double a,
                                 std::optional<double> epsilon, std::vector<Vertex> domain) {
  g.check_vertex(x);
  PartitionOfUnity p;
  p.basepoint = x;
  p.n = n;
  p.a = a;
  p.epsilon = epsilon ? *epsilon : std::exp(-a * static_cast<double>(n));
  if (!(p.epsilon > 0)) throw GraphError("build_partition: epsilon must be positive");
  p.sphere = g.sphere(x, n);
  if (p.sphere.empty()) throw GraphError("build_partition: empty sphere S(x, n)");

  std::vector<Vertex> points;
  if (!domain.empty()) {
    points = std::move(domain);
    const auto horizon = horizon_vertices(g, default_horizon_radius(g));
    points.insert(points.end(), p.sphere.begin(), p.sphere.end());
    points.insert(points.end(), horizon.begin(), horizon.end());
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
  }
  auto table = std::make_shared<QuasiMetricTable>(g, x, a, std::move(points));
  std::vector<std::size_t> sidx(p.sphere.size());
  for (std::size_t k = 0; k < p.sphere.size(); ++k) sidx[k] = table->require_index(p.sphere[k]);

  // Rows from the sphere points give rho(z, s) for every z at once.
  std::vector<std::shared_ptr<const std::vector<double>>> rows(p.sphere.size());
  if (!table->ultrametric()) {
    parallel_for(0, rows.size(), [&](std::size_t k) { rows[k] = table->rho_row(sidx[k]); });
  }
  p.phi.resize(table->size());
  parallel_for(0, table->size(), [&](std::size_t i) {
    std::vector<double> d(p.sphere.size());
    double dmin = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < d.size(); ++k) {
      d[k] = rows[k] ? (*rows[k])[i] : table->rho(sidx[k], i);
      dmin = std::min(dmin, d[k]);
    }
    double total = 0;
    auto& out = p.phi[i];
    for (std::size_t k = 0; k < d.size(); ++k) {
      const double f = 1.0 - (d[k] - dmin) / p.epsilon;
      if (f > 0) {
        out.emplace_back(static_cast<std::uint32_t>(k), f);
        total += f;
      }
    }
    for (auto& [k, v] : out) v /= total;
  });
  p.table = std::move(table);
  return p;
}

FiniteMeasure project_pi_n(const PartitionOfUnity& p, const FiniteMeasure& theta) {
  return project(p, theta);
}

SignedMeasure project_pi_n(const PartitionOfUnity& p, const SignedMeasure& theta) {
  return project(p, theta);
}

SupportReport check_support(const PartitionOfUnity& p, Vertex gamma) {
  const auto& t = *p.table;
  const std::size_t gi = t.require_index(gamma);
  const double e = std::exp(-p.a * static_cast<double>(p.n));
  SupportReport r;
  std::vector<std::size_t> supp;
  for (const auto& [k, v] : p.at(gamma)) supp.push_back(t.require_index(p.sphere[k]));
  r.rho_to_sphere = std::numeric_limits<double>::infinity();
  for (Vertex s : p.sphere) r.rho_to_sphere = std::min(r.rho_to_sphere, t.rho(gi, t.require_index(s)));
  r.supp = std::all_of(supp.begin(), supp.end(),
                       [&](std::size_t si) { return t.rho(gi, si) <= 2 * e + kSlack; });
  for (Vertex s : p.sphere) {
    const std::size_t c = t.require_index(s);
    const bool inside = std::all_of(supp.begin(), supp.end(),
                                    [&](std::size_t si) { return t.rho(c, si) <= 3 * e + kSlack; });
    if (inside) {
      r.supp3 = true;
      r.witness = s;
      break;
    }
  }
  return r;
}

std::vector<WeakStarRow> weakstar_convergence_check(const Graph& g, Vertex x, double a,
                                                    const BoundaryMeasure& theta,
                                                    const std::vector<double>& f, double lip,
                                                    const std::vector<Distance>& n_list) {
  if (f.size() != static_cast<std::size_t>(g.vertex_count())) {
    throw GraphError("weakstar_convergence_check: f must have one value per vertex");
  }
  double exact = 0;
  std::vector<Vertex> domain;
  for (const auto& [z, w] : theta.weights) {
    exact += w * f[z];
    domain.push_back(z);
  }
  std::vector<WeakStarRow> rows;
  for (Distance n : n_list) {
    const auto p = build_partition(g, x, n, a, std::nullopt, domain);
    double approx = 0;
    for (const auto& [s, w] : project_pi_n(p, theta.weights)) approx += w * f[s];
    WeakStarRow row;
    row.n = n;
    row.difference = std::abs(approx - exact);
    row.bound = lip * 3.0 * std::exp(-a * static_cast<double>(n));
    row.holds = row.difference <= row.bound + 1e-9;
    rows.push_back(row);
  }
  return rows;
}

AtomReport extract_atoms(const Graph& g, Vertex x, double a, const BoundaryMeasure& theta,
                         Distance n_max) {
  if (!theta.is_probability()) throw GraphError("extract_atoms: theta must be a probability");
  if (n_max < 1 || n_max > g.base_eccentricity()) {
    throw GraphError("extract_atoms: n_max must lie within the horizon");
  }
  std::vector<Vertex> atoms;
  for (const auto& [z, w] : theta.weights) atoms.push_back(z);
  AtomReport rep;
  for (Distance n = 1; n <= n_max; ++n) {
    const auto p = build_partition(g, x, n, a, std::nullopt, atoms);
    const auto& t = *p.table;
    const double radius = 3.0 * std::exp(-a * static_cast<double>(n));
    const auto pi = project_pi_n(p, theta.weights);
    std::vector<double> cell(p.sphere.size(), 0.0);
    std::vector<std::size_t> sidx(p.sphere.size());
    for (std::size_t k = 0; k < sidx.size(); ++k) sidx[k] = t.require_index(p.sphere[k]);
    parallel_for(0, p.sphere.size(), [&](std::size_t k) {
      for (const auto& [s, w] : pi) {
        if (t.rho(sidx[k], t.require_index(s)) <= radius + kSlack) cell[k] += w;
      }
    });
    const double W = *std::max_element(cell.begin(), cell.end());
    rep.W_series.push_back(W);
    if (n != n_max) continue;
    rep.W = W;
    for (std::size_t k = 0; k < cell.size(); ++k) {
      if (cell[k] >= W - kSlack) rep.argmax.push_back(p.sphere[k]);
    }
    for (Vertex z : atoms) {
      const std::size_t zi = t.require_index(z);
      for (Vertex s : rep.argmax) {
        if (t.rho(zi, t.require_index(s)) <= radius + kSlack) {
          rep.atomic_support.push_back(z);
          break;
        }
      }
    }
    const double resolution = 2.0 * radius;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      const std::size_t ai = t.require_index(atoms[i]);
      for (std::size_t j = i + 1; j < atoms.size(); ++j) {
        if (t.rho(ai, t.require_index(atoms[j])) < resolution) {
          rep.unresolved.emplace_back(atoms[i], atoms[j]);
        }
      }
    }
  }
  return rep;
}

std::pair<FiniteMeasure, FiniteMeasure> hahn_split(const SignedMeasure& m) {
  FiniteMeasure plus, minus;
  for (const auto& [v, w] : m) {
    if (w > 0) {
      plus.add(v, w);
    } else {
      minus.add(v, -w);
    }
  }
  return {plus, minus};
}

void write_partition_csv(const PartitionOfUnity& p, std::ostream& out) {
  out << "s,z,phi\n";
  for (std::size_t i = 0; i < p.phi.size(); ++i) {
    for (const auto& [k, v] : p.phi[i]) {
      out << p.sphere[k] << ',' << p.table->point(i) << ',' << format_double(v) << '\n';
    }
  }
}

}  // namespace hyperb
