#include "hyperb/amenability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "hyperb/boundary_metrics.hpp"
#include "hyperb/geodesics.hpp"
#include "hyperb/growth.hpp"
#include "hyperb/parallel.hpp"

namespace hyperb {

namespace {

bool is_sorted_set(const VertexSet& s) {
  return std::adjacent_find(s.begin(), s.end(), [](Vertex a, Vertex b) { return a >= b; }) ==
         s.end();
}

bool subset(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

void check_sequence(const std::vector<VertexSet>& seq, const char* name) {
  if (seq.empty()) throw GraphError(std::string("sandwich: sequence ") + name + " is empty");
  for (std::size_t k = 0; k < seq.size(); ++k) {
    if (seq[k].empty()) throw GraphError(std::string("sandwich: empty set in ") + name);
    if (!is_sorted_set(seq[k])) throw GraphError(std::string("sandwich: unsorted set in ") + name);
    if (k > 0 && !subset(seq[k - 1], seq[k])) {
      throw GraphError(std::string("sandwich: sequence ") + name + " is not increasing");
    }
  }
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

void SandwichInstance::validate() const {
  if (tau < 0) throw GraphError("sandwich: tau must be nonnegative");
  check_sequence(Z, "Z");
  check_sequence(Zp, "Z'");
  for (const auto& [v, w] : weights) {
    if (w <= 0) throw GraphError("sandwich: base measure weights must be positive");
  }
  const std::size_t L = length();
  const auto t = static_cast<std::size_t>(tau);
  for (std::size_t k = 0; k + t < L; ++k) {
    if (!subset(Z[k], Zp[k + t]) || !subset(Zp[k], Z[k + t])) {
      throw GraphError("sandwich: containment fails at k = " + std::to_string(k + 1));
    }
  }
}

Rational SandwichInstance::mass(const VertexSet& s) const {
  if (weights.empty()) return Rational(static_cast<long long>(s.size()));
  Rational total = 0;
  for (Vertex v : s) {
    auto it = weights.find(v);
    if (it == weights.end()) throw GraphError("sandwich: point without base weight");
    total += it->second;
  }
  return total;
}

double sandwich_bound(const SandwichInstance& inst, std::size_t n) {
  const auto t = static_cast<std::size_t>(inst.tau);
  if (n == 0 || n <= t) throw GraphError("sandwich_bound: need n > tau");
  if (n + t > inst.Z.size()) throw GraphError("sandwich_bound: Z_{n+tau} is not defined");
  if (t == 0) return 0.0;
  const Rational ratio = inst.mass(inst.Z[0]) / inst.mass(inst.Z[n + t - 1]);
  const double nd = static_cast<double>(n);
  const double td = static_cast<double>(t);
  const double power = std::pow(ratio.convert_to<double>(), 2.0 * td / (nd - td));
  return 2.0 * td / nd + 4.0 * (nd - td) / nd * (1.0 - power);
}

ExactMeasure cesaro_average(const std::vector<VertexSet>& sets, std::size_t n,
                            const std::map<Vertex, Rational>& weights) {
  if (n == 0 || n > sets.size()) throw GraphError("cesaro_average: index out of range");
  auto weight_of = [&](Vertex v) -> Rational {
    if (weights.empty()) return Rational(1);
    auto it = weights.find(v);
    if (it == weights.end()) throw GraphError("cesaro_average: point without base weight");
    return it->second;
  };
  // suffix[k] = sum_{j >= k} 1 / m(Z_j); a point first entering at k gets
  // w(v) suffix[k] / n because the sets are nested.
  std::vector<Rational> suffix(n + 1, Rational(0));
  for (std::size_t k = n; k-- > 0;) {
    if (k + 1 < n && !subset(sets[k], sets[k + 1])) {
      throw GraphError("cesaro_average: sets must be increasing");
    }
    Rational m = 0;
    if (weights.empty()) {
      m = Rational(static_cast<long long>(sets[k].size()));
    } else {
      for (Vertex v : sets[k]) m += weight_of(v);
    }
    if (m <= 0) throw GraphError("cesaro_average: set of zero mass");
    suffix[k] = suffix[k + 1] + 1 / m;
  }
  ExactMeasure out;
  const Rational inv_n(1, static_cast<long long>(n));
  const VertexSet empty;
  for (std::size_t k = 0; k < n; ++k) {
    const VertexSet& prev = k == 0 ? empty : sets[k - 1];
    VertexSet fresh;
    std::set_difference(sets[k].begin(), sets[k].end(), prev.begin(), prev.end(),
                        std::back_inserter(fresh));
    const Rational share = suffix[k] * inv_n;
    for (Vertex v : fresh) out.add(v, weight_of(v) * share);
  }
  return out;
}

Rational cesaro_tv(const SandwichInstance& inst, std::size_t n) {
  return total_variation(cesaro_average(inst.Z, n, inst.weights),
                         cesaro_average(inst.Zp, n, inst.weights));
}

bool rational_le(const Rational& value, double bound) {
  if (std::isnan(bound)) return false;
  if (std::isinf(bound)) return bound > 0;
  return value <= Rational(bound);
}

SandwichInstance random_sandwich_instance(std::mt19937_64& rng, std::size_t length, int tau,
                                          std::size_t universe) {
  if (length == 0 || universe == 0 || tau < 0) {
    throw GraphError("random_sandwich_instance: bad parameters");
  }
  std::vector<Vertex> perm(universe);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  const auto t = static_cast<std::size_t>(tau);
  const std::size_t total = length + t;
  std::uniform_int_distribution<std::size_t> grow(0, 3);
  std::vector<VertexSet> Z(total);
  std::size_t size = 1 + grow(rng) % 2;
  for (std::size_t k = 0; k < total; ++k) {
    if (k > 0) size += grow(rng);
    size = std::min(size, universe);
    Z[k].assign(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(size));
    std::sort(Z[k].begin(), Z[k].end());
  }
  std::bernoulli_distribution coin(0.5);
  std::vector<VertexSet> Zp(length);
  for (std::size_t k = 0; k < length; ++k) {
    VertexSet base = k > 0 ? Zp[k - 1] : VertexSet{};
    if (k >= t) base = set_union(base, Z[k - t]);
    const VertexSet& upper = Z[k + t];
    VertexSet extra;
    for (Vertex v : upper) {
      if (!std::binary_search(base.begin(), base.end(), v) && coin(rng)) extra.push_back(v);
    }
    Zp[k] = set_union(base, extra);
    if (Zp[k].empty()) Zp[k].push_back(upper.front());
  }
  Z.resize(length);
  SandwichInstance inst{std::move(Z), std::move(Zp), tau, {}};
  inst.validate();
  return inst;
}

SandwichInstance ball_sandwich(const Graph& g, Vertex x, Vertex x_prime, Distance kmax) {
  if (kmax < 1) throw GraphError("ball_sandwich: kmax must be at least 1");
  SandwichInstance inst;
  inst.tau = g.dist(x, x_prime);
  for (Distance k = 1; k <= kmax; ++k) {
    inst.Z.push_back(g.ball(x, k));
    inst.Zp.push_back(g.ball(x_prime, k));
  }
  return inst;
}

Vertex virtual_ray_vertex(const Graph& g, Distance horizon_radius, Distance t) {
  if (t <= horizon_radius) throw GraphError("virtual ray points lie beyond the horizon");
  const std::int64_t id = static_cast<std::int64_t>(g.vertex_count()) + (t - horizon_radius - 1);
  if (id > std::numeric_limits<Vertex>::max()) throw GraphError("virtual ray id overflow");
  return static_cast<Vertex>(id);
}

bool is_virtual(const Graph& g, Vertex v) { return v >= g.vertex_count(); }

std::vector<VertexSet> lambda_sets(const Graph& g, Vertex x, Vertex gamma, Distance n,
                                   Distance kmax, Distance r) {
  g.check_vertex(x);
  g.check_vertex(gamma);
  if (n < 1 || kmax < 1) throw GraphError("lambda_sets: n and k must be positive");
  if (r < 0) throw GraphError("lambda_sets: r must be nonnegative");
  const Distance R = g.base_row()[gamma];
  const auto hrow = g.row(gamma);
  const auto xrow = g.row(x);
  const Distance dxh = (*hrow)[x];
  const bool tree = g.is_tree();

  if (tree) {
    // The infinite tree has, for every k, a start p in B(x, k) with
    // d(p, gamma) = d(x, gamma) + k. Without it Y would be cut short.
    const Distance need = std::min(kmax, n);
    bool found = false;
    for (Vertex p = 0; p < g.vertex_count() && !found; ++p) {
      found = (*xrow)[p] <= need && (*hrow)[p] == dxh + need;
    }
    if (!found) throw GraphError("horizon too shallow: truncated ball around x for k = " +
                                 std::to_string(need));
  }

  std::vector<std::pair<Distance, Vertex>> entries;  // (first k, point)
  std::vector<Vertex> frontier, next;
  for (Vertex p = 0; p < g.vertex_count(); ++p) {
    const Distance dp = (*xrow)[p];
    if (dp > kmax) continue;
    const Distance k_first = std::max<Distance>(1, dp);
    const Distance to_h = (*hrow)[p];
    if (to_h < n) {
      if (!tree) {
        throw GraphError("horizon too shallow for n = " + std::to_string(n) +
                         " (a start lies within n of the horizon endpoint)");
      }
      entries.emplace_back(k_first, virtual_ray_vertex(g, R, R + n - to_h));
      continue;
    }
    frontier.assign(1, p);
    for (Distance step = 0; step < n; ++step) {
      next.clear();
      for (Vertex v : frontier) {
        const Distance dv = (*hrow)[v];
        for (Vertex w : g.neighbors(v)) {
          if ((*hrow)[w] == dv - 1) next.push_back(w);
        }
      }
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      frontier.swap(next);
    }
    for (Vertex v : frontier) entries.emplace_back(k_first, v);
  }
  if (tree) {
    for (Distance t = R + 1; dxh + (t - R) <= kmax; ++t) {
      entries.emplace_back(std::max<Distance>(1, dxh + (t - R)), virtual_ray_vertex(g, R, t + n));
    }
  }
  std::sort(entries.begin(), entries.end());

  std::vector<VertexSet> sets(static_cast<std::size_t>(kmax));
  VertexSet current;
  std::size_t idx = 0;
  for (Distance k = 1; k <= kmax; ++k) {
    VertexSet fresh;
    while (idx < entries.size() && entries[idx].first <= k) fresh.push_back(entries[idx++].second);
    std::sort(fresh.begin(), fresh.end());
    fresh.erase(std::unique(fresh.begin(), fresh.end()), fresh.end());
    current = set_union(current, fresh);
    sets[static_cast<std::size_t>(k - 1)] = current;
  }
  if (r == 0) return sets;
  for (auto& s : sets) {
    if (!s.empty() && is_virtual(g, s.back())) {
      throw GraphError("horizon too shallow: r > 0 needs every point of Y inside the graph");
    }
    const auto d = distances_to_set(g, s);
    VertexSet grown;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (d[v] <= r) grown.push_back(v);
    }
    s = std::move(grown);
  }
  return sets;
}

ExactMeasure build_lambda_n(const Graph& g, Vertex x, Vertex gamma, Distance n, Distance r) {
  return cesaro_average(lambda_sets(g, x, gamma, n, n, r), static_cast<std::size_t>(n));
}

std::vector<DecayRow> lambda_decay_experiment(const Graph& g, Vertex x, Vertex x_prime,
                                              Vertex gamma, const std::vector<Distance>& n_list,
                                              Distance r) {
  const Distance tau = g.dist(x, x_prime);
  std::vector<DecayRow> rows(n_list.size());
  parallel_for(0, n_list.size(), [&](std::size_t i) {
    const Distance n = n_list[i];
    SandwichInstance inst;
    inst.tau = tau;
    inst.Z = lambda_sets(g, x, gamma, n, n + tau, r);
    inst.Zp = lambda_sets(g, x_prime, gamma, n, n + tau, r);
    inst.validate();
    DecayRow& row = rows[i];
    row.n = n;
    row.tv = cesaro_tv(inst, static_cast<std::size_t>(n));
    row.bound = n > tau ? sandwich_bound(inst, static_cast<std::size_t>(n)) : 2.0;
    row.holds = rational_le(row.tv, row.bound);
  });
  return rows;
}

void write_decay_csv(const std::vector<DecayRow>& rows, std::ostream& out) {
  out << "n,tv,bound\n";
  for (const auto& r : rows) {
    out << r.n << ',' << to_string(r.tv) << ',' << format_double(r.bound) << '\n';
  }
}

PrePatterson pre_patterson(const Graph& g, Vertex x, double delta, Distance truncation,
                           std::optional<double> growth_rate) {
  g.check_vertex(x);
  if (truncation < 0) throw GraphError("pre_patterson: truncation must be nonnegative");
  PrePatterson out;
  out.growth_rate = growth_rate ? *growth_rate : critical_exponent(g, interior_radius(g));
  if (!(delta > out.growth_rate)) {
    throw GraphError("pre_patterson: delta must exceed the growth rate " +
                     format_double(out.growth_rate) + " (divergent normalizer)");
  }
  const auto row = g.row(x);
  std::vector<double> lut(static_cast<std::size_t>(truncation) + 1);
  for (std::size_t d = 0; d < lut.size(); ++d) lut[d] = std::exp(-delta * static_cast<double>(d));
  double total = 0;
  std::uint64_t outer_sphere = 0;
  for (Vertex y = 0; y < g.vertex_count(); ++y) {
    const Distance d = (*row)[y];
    if (d > truncation) continue;
    total += lut[static_cast<std::size_t>(d)];
    if (d == truncation) ++outer_sphere;
  }
  out.normalizer = total;
  for (Vertex y = 0; y < g.vertex_count(); ++y) {
    const Distance d = (*row)[y];
    if (d <= truncation) out.measure.add(y, lut[static_cast<std::size_t>(d)] / total);
  }
  const double ratio = std::exp(out.growth_rate - delta);
  out.tail_bound = static_cast<double>(outer_sphere) * lut.back() * ratio / (1 - ratio) / total;
  return out;
}

std::vector<Vertex> geodesic_toward(const Graph& g, Vertex x, Vertex target) {
  g.check_vertex(x);
  const auto row = g.row(target);
  std::vector<Vertex> path{x};
  Vertex cur = x;
  while ((*row)[cur] > 0) {
    for (Vertex w : g.neighbors(cur)) {
      if ((*row)[w] == (*row)[cur] - 1) {
        cur = w;
        break;
      }
    }
    path.push_back(cur);
  }
  return path;
}

FiniteMeasure cesaro_geodesic(const Graph& g, Vertex x, Vertex target, Distance n, double delta,
                              Distance truncation, Distance step,
                              std::optional<double> growth_rate) {
  if (step < 1 || n < step) throw GraphError("cesaro_geodesic: need 1 <= step <= n");
  const auto ray = geodesic_toward(g, x, target);
  const Distance samples = n / step;
  if (static_cast<std::size_t>((samples - 1) * step) >= ray.size()) {
    throw GraphError("cesaro_geodesic: ray construction failure (geodesic to the target is "
                     "shorter than n)");
  }
  const double gr = growth_rate ? *growth_rate : critical_exponent(g, interior_radius(g));
  std::map<Vertex, double> acc;
  for (Distance j = 0; j < samples; ++j) {
    const auto nu = pre_patterson(g, ray[static_cast<std::size_t>(j * step)], delta, truncation, gr);
    for (const auto& [v, w] : nu.measure) acc[v] += w / static_cast<double>(samples);
  }
  FiniteMeasure out;
  for (const auto& [v, w] : acc) out.add(v, w);
  return out;
}

}  // namespace hyperb
