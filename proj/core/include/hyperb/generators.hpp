#ifndef HYPERB_GENERATORS_HPP
#define HYPERB_GENERATORS_HPP

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hyperb/graph.hpp"

namespace hyperb {

// All generators number vertices in BFS order from the base (base = 0),
// visiting neighbours in the order the construction lists them.

/// Ball of radius R in the q-regular tree. q = 2 gives the integer line.
Graph regular_tree(int q, int radius);

/// Ball of radius R in the Cayley graph of the free product of cyclic groups
/// with the given orders (0 = infinite cyclic), standard generators. Elements
/// are kept in syllable normal form; order-2 factors contribute one
/// generator, all others a generator and its inverse.
Graph free_product_cyclic(std::span<const int> orders, int radius);
/// Free group of the given rank, i.e. free_product_cyclic({0,...,0}).
Graph free_group(int rank, int radius);

Graph cycle_graph(int n);
Graph path_graph(int n);
/// w x h lattice, base at the centre cell ((w-1)/2, (h-1)/2).
Graph grid_graph(int w, int h);
/// Three paths of length `arm` glued at a common centre (the base).
Graph tripod(int arm);
/// Hub with k leaves.
Graph star_graph(int k);
/// Random spanning tree plus `extra_edges` random chords; seeded.
Graph random_connected(int n, int extra_edges, std::uint64_t seed);

/// Renumbers vertices in BFS order from `base` (ties by input adjacency
/// order) and returns the resulting graph with base 0.
Graph relabel_bfs(Vertex n, const std::vector<std::pair<Vertex, Vertex>>& edges,
                  Vertex base);

/// Parses a generator spec such as `tree:3:6`, `freegroup:2:10`,
/// `freeprod:2,2,2:5`, `cycle:8`, `grid:5:5`, `path:6`, `tripod:4`,
/// `star:6`, `random:20:8:7`, or `file:<path>`.
Graph generate(const std::string& spec);

}  // namespace hyperb

#endif  // HYPERB_GENERATORS_HPP
