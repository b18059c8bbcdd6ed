#include "hyperb/generators.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <unordered_map>

namespace hyperb {
namespace {

struct Letter {
  int factor;
  int step;  // +1 or -1
};

int syllable_length(int exponent, int order) {
  if (order == 0) return std::abs(exponent);
  return std::min(exponent, order - exponent);
}

using Syllables = std::vector<std::pair<int, int>>;

std::string encode(const Syllables& w) {
  std::string key;
  key.reserve(w.size() * 3);
  for (const auto& [f, e] : w) {
    key.push_back(static_cast<char>(f));
    key.push_back(static_cast<char>(e & 0xff));
    key.push_back(static_cast<char>((e >> 8) & 0xff));
  }
  return key;
}

Syllables multiply(Syllables w, Letter g, std::span<const int> orders) {
  const int k = orders[g.factor];
  if (!w.empty() && w.back().first == g.factor) {
    int e = w.back().second + g.step;
    if (k != 0) e = ((e % k) + k) % k;
    if (e == 0) {
      w.pop_back();
    } else {
      w.back().second = e;
    }
  } else {
    int e = g.step;
    if (k != 0) e = ((e % k) + k) % k;
    w.emplace_back(g.factor, e);
  }
  return w;
}

int word_length(const Syllables& w, std::span<const int> orders) {
  int len = 0;
  for (const auto& [f, e] : w) len += syllable_length(e, orders[f]);
  return len;
}

int parse_int(const std::string& s, const std::string& spec) {
  try {
    std::size_t pos = 0;
    const int v = std::stoi(s, &pos);
    if (pos != s.size()) throw GraphError("");
    return v;
  } catch (const std::exception&) {
    throw GraphError("bad integer '" + s + "' in generator spec '" + spec + "'");
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

void require_positive(int v, const char* what) {
  if (v <= 0) throw GraphError(std::string(what) + " must be positive");
}

}  // namespace

Graph relabel_bfs(Vertex n, const std::vector<std::pair<Vertex, Vertex>>& edges,
                  Vertex base) {
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw GraphError("edge endpoint out of range");
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<Vertex> label(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> queue{base};
  label[base] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (Vertex w : adj[queue[head]]) {
      if (label[w] < 0) {
        label[w] = static_cast<Vertex>(queue.size());
        queue.push_back(w);
      }
    }
  }
  if (static_cast<Vertex>(queue.size()) != n) throw GraphError("graph is not connected");
  std::vector<std::pair<Vertex, Vertex>> relabeled;
  relabeled.reserve(edges.size());
  for (const auto& [u, v] : edges) relabeled.emplace_back(label[u], label[v]);
  return Graph(n, std::move(relabeled), 0);
}

Graph regular_tree(int q, int radius) {
  if (q < 2) throw GraphError("regular_tree: q must be at least 2");
  if (radius < 0) throw GraphError("regular_tree: radius must be nonnegative");
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<Vertex> frontier{0};
  Vertex next = 1;
  for (int r = 0; r < radius; ++r) {
    std::vector<Vertex> children;
    for (Vertex v : frontier) {
      const int count = (v == 0) ? q : q - 1;
      for (int c = 0; c < count; ++c) {
        edges.emplace_back(v, next);
        children.push_back(next++);
      }
    }
    frontier = std::move(children);
  }
  return Graph(next, std::move(edges), 0);
}

Graph free_product_cyclic(std::span<const int> orders, int radius) {
  if (orders.empty()) throw GraphError("free_product_cyclic: need at least one factor");
  for (int k : orders) {
    if (k == 1 || k < 0) {
      throw GraphError("free_product_cyclic: unsupported factor order " + std::to_string(k));
    }
  }
  if (radius < 0) throw GraphError("free_product_cyclic: radius must be nonnegative");
  std::vector<Letter> letters;
  for (int f = 0; f < static_cast<int>(orders.size()); ++f) {
    letters.push_back({f, +1});
    if (orders[f] != 2) letters.push_back({f, -1});
  }

  std::unordered_map<std::string, Vertex> ids;
  std::vector<Syllables> words{Syllables{}};
  ids.emplace(encode(words[0]), 0);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t head = 0; head < words.size(); ++head) {
    for (const Letter& g : letters) {
      Syllables w = multiply(words[head], g, orders);
      if (word_length(w, orders) > radius) continue;
      auto key = encode(w);
      auto [it, inserted] = ids.emplace(std::move(key), static_cast<Vertex>(words.size()));
      if (inserted) words.push_back(std::move(w));
      const auto u = static_cast<Vertex>(head);
      if (u < it->second) edges.emplace_back(u, it->second);
    }
  }
  return Graph(static_cast<Vertex>(words.size()), std::move(edges), 0);
}

Graph free_group(int rank, int radius) {
  require_positive(rank, "free_group rank");
  std::vector<int> orders(static_cast<std::size_t>(rank), 0);
  return free_product_cyclic(orders, radius);
}

Graph cycle_graph(int n) {
  if (n < 3) throw GraphError("cycle: n must be at least 3");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return relabel_bfs(n, edges, 0);
}

Graph path_graph(int n) {
  require_positive(n, "path length");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, std::move(edges), 0);
}

Graph grid_graph(int w, int h) {
  require_positive(w, "grid width");
  require_positive(h, "grid height");
  auto id = [w](int x, int y) { return static_cast<Vertex>(y * w + x); };
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (x + 1 < w) edges.emplace_back(id(x, y), id(x + 1, y));
      if (y + 1 < h) edges.emplace_back(id(x, y), id(x, y + 1));
    }
  }
  return relabel_bfs(w * h, edges, id((w - 1) / 2, (h - 1) / 2));
}

Graph tripod(int arm) {
  require_positive(arm, "tripod arm");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int a = 0; a < 3; ++a) {
    Vertex prev = 0;
    for (int i = 1; i <= arm; ++i) {
      const Vertex v = 1 + a * arm + (i - 1);
      edges.emplace_back(prev, v);
      prev = v;
    }
  }
  return relabel_bfs(1 + 3 * arm, edges, 0);
}

Graph star_graph(int k) {
  require_positive(k, "star size");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 1; i <= k; ++i) edges.emplace_back(0, i);
  return Graph(k + 1, std::move(edges), 0);
}

Graph random_connected(int n, int extra_edges, std::uint64_t seed) {
  require_positive(n, "random graph size");
  if (extra_edges < 0) throw GraphError("random graph: extra edges must be nonnegative");
  std::mt19937_64 rng(seed);
  std::set<std::pair<Vertex, Vertex>> edges;
  for (Vertex v = 1; v < n; ++v) {
    std::uniform_int_distribution<Vertex> pick(0, v - 1);
    edges.emplace(pick(rng), v);
  }
  const long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
  const long long target = std::min<long long>(max_edges, static_cast<long long>(edges.size()) + extra_edges);
  std::uniform_int_distribution<Vertex> any(0, n - 1);
  while (static_cast<long long>(edges.size()) < target) {
    Vertex u = any(rng), v = any(rng);
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    edges.emplace(u, v);
  }
  return relabel_bfs(n, {edges.begin(), edges.end()}, 0);
}

Graph generate(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  if (kind == "file") {
    if (colon == std::string::npos) throw GraphError("file spec needs a path");
    return Graph::load(spec.substr(colon + 1));
  }
  auto parts = split(colon == std::string::npos ? "" : spec.substr(colon + 1), ':');
  auto want = [&](std::size_t n) {
    if (parts.size() != n) {
      throw GraphError("generator '" + kind + "' expects " + std::to_string(n) +
                       " parameters in '" + spec + "'");
    }
  };
  auto arg = [&](std::size_t i) { return parse_int(parts[i], spec); };
  if (kind == "tree") {
    want(2);
    return regular_tree(arg(0), arg(1));
  }
  if (kind == "freegroup") {
    want(2);
    return free_group(arg(0), arg(1));
  }
  if (kind == "freeprod") {
    want(2);
    std::vector<int> orders;
    for (const auto& o : split(parts[0], ',')) orders.push_back(parse_int(o, spec));
    return free_product_cyclic(orders, arg(1));
  }
  if (kind == "cycle") {
    want(1);
    return cycle_graph(arg(0));
  }
  if (kind == "path") {
    want(1);
    return path_graph(arg(0));
  }
  if (kind == "grid") {
    want(2);
    return grid_graph(arg(0), arg(1));
  }
  if (kind == "tripod") {
    want(1);
    return tripod(arg(0));
  }
  if (kind == "star") {
    want(1);
    return star_graph(arg(0));
  }
  if (kind == "random") {
    want(3);
    return random_connected(arg(0), arg(1), static_cast<std::uint64_t>(arg(2)));
  }
  throw GraphError("unknown generator '" + kind + "'");
}

}  // namespace hyperb
