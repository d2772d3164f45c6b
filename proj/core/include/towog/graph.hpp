#ifndef TOWOG_GRAPH_HPP
#define TOWOG_GRAPH_HPP

#include <optional>
#include <vector>

#include "towog/exact.hpp"

namespace towog {

/// Oriented edge between 1-based vertex ids.
struct Edge {
  int tail = 0;
  int head = 0;
  bool operator==(const Edge&) const = default;
};

/// A vertex-weighted oriented graph: simple (no loops, no parallel edges),
/// every vertex carrying a positive integer weight. Edge e = (u, v) stands
/// for the monomial u * v^w(v).
struct WeightedOrientedGraph {
  int vertex_count = 0;
  std::vector<Int> weights;  // weights[i] is the weight of vertex i+1
  std::vector<Edge> edges;   // 1-based ids implied by position: edges[j] is e_{j+1}

  int edge_count() const { return static_cast<int>(edges.size()); }
  const Int& weight(int vertex) const { return weights[vertex - 1]; }
  bool operator==(const WeightedOrientedGraph&) const = default;
};

/// Edge monomial with two-variable support and arbitrary positive exponents;
/// generalizes the weighted oriented edge (tail^1 * head^w).
struct GeneralEdgeMonomial {
  int vertex_a = 0;
  Int exp_a = 1;
  int vertex_b = 0;
  Int exp_b = 1;
  bool operator==(const GeneralEdgeMonomial&) const = default;
};

struct GeneralEdgeMonomialGraph {
  int vertex_count = 0;
  std::vector<GeneralEdgeMonomial> edges;

  int edge_count() const { return static_cast<int>(edges.size()); }
  bool operator==(const GeneralEdgeMonomialGraph&) const = default;
};

GeneralEdgeMonomialGraph to_general(const WeightedOrientedGraph& g);

/// Checks the structural invariants (vertex ids in range, no self-loops, no
/// parallel edges, positive weights/exponents). Throws Error on violation.
void validate(const WeightedOrientedGraph& g);
void validate(const GeneralEdgeMonomialGraph& g);

/// One connected component together with the maps back to the original ids.
struct Component {
  WeightedOrientedGraph graph;
  std::vector<int> vertex_ids;  // local vertex i+1 -> original vertex id
  std::vector<int> edge_ids;    // local edge j+1  -> original edge id
};

std::vector<Component> connected_components(const WeightedOrientedGraph& g);

/// Result of iterated leaf removal. Vertices are retained (ids stay stable);
/// only edges incident to degree-1 vertices are deleted, repeatedly.
struct PruneResult {
  WeightedOrientedGraph graph;
  std::vector<int> removed_edges;  // original edge ids, ascending
  std::vector<int> edge_remap;     // surviving local edge j+1 -> original edge id
};

PruneResult prune_leaves(const WeightedOrientedGraph& g);

struct GeneralPruneResult {
  GeneralEdgeMonomialGraph graph;
  std::vector<int> removed_edges;
  std::vector<int> edge_remap;
};

GeneralPruneResult prune_leaves(const GeneralEdgeMonomialGraph& g);

enum class StructureTag {
  forest,
  unicyclic,
  two_cycles_shared_vertex,
  two_cycles_shared_path,
  two_cycles_bridged,
  multi_cycle_vertex_join,
  other,
};

/// Cycle layout of a pruned connected graph. `cycles` holds every cycle
/// relevant to balance checks as a cyclically ordered edge-id list in
/// canonical rotation (lexicographically smallest sequence over rotations
/// and both traversal directions). For two_cycles_shared_path all three
/// cycles are listed: the two through the shared path, then the outer one.
/// For `other` the classifier abstains: cycles is empty and only
/// cycle_space_dim is meaningful.
struct GraphStructure {
  StructureTag tag = StructureTag::forest;
  std::vector<std::vector<int>> cycles;
  std::vector<int> shared_path;  // edge ids, set for two_cycles_shared_path
  std::vector<int> bridge;       // edge ids, set for two_cycles_bridged
  int shared_vertex = 0;         // set for shared_vertex / multi_cycle_vertex_join
  int cycle_space_dim = 0;       // |E| - |V(non-isolated)| + 1, 0 if edgeless
};

/// Pre: validated, leafless, and connected up to isolated vertices.
/// Throws errc::not_pruned if a degree-1 vertex is present.
GraphStructure classify_structure(const WeightedOrientedGraph& g);

/// Vertex sequence x_1..x_n of a cycle given as a cyclically ordered edge-id
/// list, with edge i joining x_i and x_{i+1} (x_{n+1} = x_1). Throws
/// errc::not_a_cycle if the edges do not form a simple cycle of g.
std::vector<int> cycle_vertices(const WeightedOrientedGraph& g, const std::vector<int>& cycle);

/// True iff every edge of the cycle follows one fixed traversal direction.
bool is_naturally_oriented(const WeightedOrientedGraph& g, const std::vector<int>& cycle);

}  // namespace towog

#endif
