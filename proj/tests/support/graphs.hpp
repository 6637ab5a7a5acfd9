#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "corient/bits.hpp"
#include "corient/graph.hpp"
#include "corient/pipeline.hpp"

namespace corient::testing {

using EdgePairs = std::vector<std::pair<NodeId, NodeId>>;

UndirectedGraph make_graph(std::size_t n, const EdgePairs& edges);

UndirectedGraph complete_graph(std::size_t n);
UndirectedGraph cycle_graph(std::size_t n);
UndirectedGraph path_graph(std::size_t n);
UndirectedGraph star_graph(std::size_t leaves);
/// C_k with one pendant per cycle node: cycle on 0..k-1, pendant k+i on i.
UndirectedGraph necklace(std::size_t k);
/// Nodes 0 and 1 joined by `paths` internally disjoint paths of `length` edges.
UndirectedGraph theta_graph(std::size_t paths = 3, std::size_t length = 2);
UndirectedGraph petersen_graph();
/// K4 on 0..3 with edge {0,1} subdivided by node 4.
UndirectedGraph k4_subdivided();
UndirectedGraph triangle_with_pendant();
/// K4 minus the edge {2,3}.
UndirectedGraph diamond();

UndirectedGraph random_tree(std::size_t n, std::mt19937_64& rng);
/// Spanning tree plus each remaining pair with probability p.
UndirectedGraph random_connected(std::size_t n, double p, std::mt19937_64& rng);
/// Connected simple 3-regular graph by the pairing model with rejection.
UndirectedGraph random_cubic(std::size_t n, std::mt19937_64& rng);

/// Every connected labeled graph on n nodes.
std::vector<UndirectedGraph> all_connected_labeled(std::size_t n);
/// One representative per isomorphism class of connected graphs on n <= 7 nodes.
std::vector<UndirectedGraph> all_connected_unlabeled(std::size_t n);

/// Kahn's algorithm: true iff the digraph has no directed cycle.
bool kahn_acyclic(std::size_t n, const std::vector<Arc>& arcs);

/// Every cyclic orientation of g by exhaustive filtering, sorted.
std::vector<OrientationBits> oracle_cyclic_set(const UndirectedGraph& g);
std::uint64_t oracle_cyclic_count(const UndirectedGraph& g);

/// Girth by deleting each edge in turn and measuring the remaining distance
/// between its endpoints; 0 for a forest.
std::size_t girth_oracle(const UndirectedGraph& g);

/// Pulls every solution out of a source, in emission order.
std::vector<OrientationBits> drain(SolutionSource& source);

/// Sorted copy; `duplicates` receives how many adjacent equal pairs were seen.
std::vector<OrientationBits> sorted(std::vector<OrientationBits> list, std::size_t* duplicates);

}  // namespace corient::testing
