#include "hyperb/graph.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <list>
#include <mutex>
#include <sstream>
#include <unordered_map>

#include "hyperb/parallel.hpp"

namespace hyperb {

std::string HalfInt::to_string() const {
  if (twice_ % 2 == 0) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

struct Graph::RowCache {
  static constexpr std::size_t kCapacity = 96;
  std::mutex mutex;
  std::list<Vertex> order;  // most recent first
  std::unordered_map<Vertex, std::pair<std::shared_ptr<const std::vector<Distance>>,
                                       std::list<Vertex>::iterator>>
      rows;
};

Graph::Graph(Vertex vertex_count, std::vector<std::pair<Vertex, Vertex>> edges,
             Vertex base)
    : vertex_count_(vertex_count), base_(base), cache_(std::make_unique<RowCache>()) {
  if (vertex_count <= 0) throw GraphError("graph must have at least one vertex");
  check_vertex(base);
  for (auto& [u, v] : edges) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edge_count_ = edges.size();

  std::vector<std::size_t> deg(static_cast<std::size_t>(vertex_count), 0);
  for (const auto& [u, v] : edges) {
    ++deg[u];
    ++deg[v];
  }
  offsets_.assign(deg.size() + 1, 0);
  for (std::size_t i = 0; i < deg.size(); ++i) offsets_[i + 1] = offsets_[i] + deg[i];
  adjacency_.resize(offsets_.back());
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const auto& [u, v] : edges) {
    adjacency_[fill[u]++] = v;
    adjacency_[fill[v]++] = u;
  }
  for (Vertex v = 0; v < vertex_count; ++v) {
    std::sort(adjacency_.begin() + offsets_[v], adjacency_.begin() + offsets_[v + 1]);
  }
  degree_bound_ = deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());

  auto base_dist = bfs(base_);
  for (Vertex v = 0; v < vertex_count; ++v) {
    if (base_dist[v] == kUnreachable) {
      throw GraphError("graph is not connected (vertex " + std::to_string(v) +
                       " unreachable from base)");
    }
  }
  base_eccentricity_ = *std::max_element(base_dist.begin(), base_dist.end());
  base_row_ = std::make_shared<const std::vector<Distance>>(std::move(base_dist));

  if (vertex_count <= dense_limit()) {
    const auto n = static_cast<std::size_t>(vertex_count);
    dense_.assign(n * n, 0);
    parallel_for(0, n, [&](std::size_t s) {
      auto d = bfs(static_cast<Vertex>(s));
      for (std::size_t t = 0; t < n; ++t) dense_[s * n + t] = static_cast<std::uint16_t>(d[t]);
    });
  }
}

Graph::Graph(Graph&&) noexcept = default;
Graph& Graph::operator=(Graph&&) noexcept = default;
Graph::~Graph() = default;

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= vertex_count_) {
    throw GraphError("invalid vertex id " + std::to_string(v));
  }
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  check_vertex(v);
  return {adjacency_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  auto nb = neighbors(u);
  check_vertex(v);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Distance> Graph::bfs(Vertex source) const {
  std::vector<Distance> d(static_cast<std::size_t>(vertex_count_), kUnreachable);
  std::vector<Vertex> queue;
  queue.reserve(static_cast<std::size_t>(vertex_count_));
  d[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    for (std::size_t i = offsets_[u]; i < offsets_[u + 1]; ++i) {
      const Vertex w = adjacency_[i];
      if (d[w] == kUnreachable) {
        d[w] = d[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return d;
}

std::shared_ptr<const std::vector<Distance>> Graph::row(Vertex source) const {
  check_vertex(source);
  if (source == base_) return base_row_;
  if (is_dense()) {
    const auto n = static_cast<std::size_t>(vertex_count_);
    auto out = std::make_shared<std::vector<Distance>>(n);
    const auto* src = dense_.data() + static_cast<std::size_t>(source) * n;
    std::copy(src, src + n, out->begin());
    return out;
  }
  {
    std::lock_guard lock(cache_->mutex);
    auto it = cache_->rows.find(source);
    if (it != cache_->rows.end()) {
      cache_->order.splice(cache_->order.begin(), cache_->order, it->second.second);
      return it->second.first;
    }
  }
  auto computed = std::make_shared<const std::vector<Distance>>(bfs(source));
  std::lock_guard lock(cache_->mutex);
  auto it = cache_->rows.find(source);
  if (it != cache_->rows.end()) return it->second.first;
  cache_->order.push_front(source);
  cache_->rows.emplace(source, std::make_pair(computed, cache_->order.begin()));
  if (cache_->rows.size() > RowCache::kCapacity) {
    cache_->rows.erase(cache_->order.back());
    cache_->order.pop_back();
  }
  return computed;
}

Distance Graph::dist(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  if (is_dense()) {
    return dense_[static_cast<std::size_t>(u) * static_cast<std::size_t>(vertex_count_) +
                  static_cast<std::size_t>(v)];
  }
  if (u == base_) return (*base_row_)[v];
  if (v == base_) return (*base_row_)[u];
  return (*row(u))[v];
}

std::vector<Vertex> Graph::sphere(Vertex center, Distance r) const {
  auto d = row(center);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < vertex_count_; ++v) {
    if ((*d)[v] == r) out.push_back(v);
  }
  return out;
}

std::vector<Vertex> Graph::ball(Vertex center, Distance r) const {
  check_vertex(center);
  std::vector<Vertex> out;
  if (r < 0) return out;
  std::unordered_map<Vertex, Distance> seen{{center, 0}};
  std::vector<Vertex> queue{center};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    const Distance du = seen[u];
    if (du == r) continue;
    for (Vertex w : neighbors(u)) {
      if (seen.emplace(w, du + 1).second) queue.push_back(w);
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

std::size_t Graph::ball_size(Vertex center, Distance r) const {
  return ball(center, r).size();
}

std::vector<Distance> bfs_distances(const Graph& g, Vertex source) {
  g.check_vertex(source);
  return *g.row(source);
}

Graph Graph::parse(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::vector<long long>> rows;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<long long> nums;
    long long x;
    while (ls >> x) nums.push_back(x);
    if (!ls.eof()) throw GraphError("graph file: non-numeric token in line '" + line + "'");
    if (!nums.empty()) rows.push_back(std::move(nums));
  }
  if (rows.empty() || rows[0].size() != 3) {
    throw GraphError("graph file: header must be 'n m base'");
  }
  const long long n = rows[0][0], m = rows[0][1], base = rows[0][2];
  if (n <= 0 || n > std::numeric_limits<Vertex>::max() || m < 0) {
    throw GraphError("graph file: bad header counts");
  }
  if (static_cast<long long>(rows.size()) - 1 != m) {
    throw GraphError("graph file: expected " + std::to_string(m) + " edges, found " +
                     std::to_string(rows.size() - 1));
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].size() != 2) throw GraphError("graph file: edge lines must be 'u v'");
    for (long long e : rows[i]) {
      if (e < 0 || e >= n) throw GraphError("graph file: vertex id out of range");
    }
    edges.emplace_back(static_cast<Vertex>(rows[i][0]), static_cast<Vertex>(rows[i][1]));
  }
  if (base < 0 || base >= n) throw GraphError("graph file: base out of range");
  return Graph(static_cast<Vertex>(n), std::move(edges), static_cast<Vertex>(base));
}

Graph Graph::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open graph file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

std::string Graph::serialize() const {
  std::ostringstream out;
  out << vertex_count_ << ' ' << edge_count_ << ' ' << base_ << '\n';
  for (Vertex u = 0; u < vertex_count_; ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out << u << ' ' << v << '\n';
    }
  }
  return out.str();
}

}  // namespace hyperb
