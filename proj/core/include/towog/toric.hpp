#ifndef TOWOG_TORIC_HPP
#define TOWOG_TORIC_HPP

#include <optional>
#include <vector>

#include "towog/exact.hpp"
#include "towog/graph.hpp"

namespace towog {

/// Vertex-by-edge incidence matrix. The column of edge e = (u, v) has entry 1
/// in row u and w(v) in row v (or the declared exponents for general edge
/// monomials); all other entries are zero. Columns follow edge-list order,
/// rows follow vertex-id order.
struct IncidenceMatrix {
  IntMatrix matrix;
  std::vector<int> edge_of_column;  // column j -> edge id j+1
  std::vector<int> vertex_of_row;   // row i -> vertex id i+1
};

IncidenceMatrix incidence_matrix(const WeightedOrientedGraph& g);
IncidenceMatrix incidence_matrix(const GeneralEdgeMonomialGraph& g);

/// Irreducible binomial e^plus - e^minus with disjoint supports, both
/// exponent vectors indexed by edge (length mu). The canonical sign puts the
/// smallest edge id of the support in the plus monomial.
struct Binomial {
  std::vector<Int> plus;
  std::vector<Int> minus;

  int edge_count() const { return static_cast<int>(plus.size()); }
  std::vector<int> support() const;  // ascending 1-based edge ids
  Binomial negated() const { return {minus, plus}; }
  Int degree() const;  // max of the two monomial total degrees
  bool operator==(const Binomial&) const = default;
};

/// Exponent vector of phi applied to the edge monomial e^exponents, i.e.
/// A(g) * exponents. Throws errc::length_mismatch.
std::vector<Int> phi_image(const WeightedOrientedGraph& g, const std::vector<Int>& exponents);

/// Splits a nonzero kernel vector of A into the canonical binomial.
/// Throws errc::zero_vector / errc::not_in_kernel.
Binomial kernel_vector_to_binomial(const IncidenceMatrix& a, const std::vector<Int>& u);

/// Balance test from the cycle's banded incidence form: even length and the
/// diagonal-entry product equal to a_{1,n} times the subdiagonal product;
/// equivalently det A(C_n) = 0.
bool is_balanced(const WeightedOrientedGraph& g, const std::vector<int>& cycle);

/// Even cycle with equally many edges in each traversal direction and one
/// common weight on every vertex that is neither a source nor a sink.
/// Throws errc::odd_length on odd cycles.
bool is_uniformly_balanced(const WeightedOrientedGraph& g, const std::vector<int>& cycle);

/// Generator of the toric ideal of a balanced cycle, produced by the joint
/// elimination recurrence (r_1 = 1; across each shared vertex multiply by,
/// divide by, or carry the weight; clear denominators by their lcm). The
/// result is cross-checked against the primitive null-space route and
/// returned over g's full edge index space. Throws errc::not_balanced.
Binomial balanced_cycle_generator(const WeightedOrientedGraph& g, const std::vector<int>& cycle);

enum class ZeroReason {
  only_trivial_even_closed_walks,
  odd_cycle,
  unbalanced_unicyclic,
  naturally_oriented,
  rank_only,
};

struct ZeroTest {
  bool zero = false;
  std::optional<ZeroReason> reason;  // set iff zero
};

/// Full-column-rank test of the incidence matrix, with the paper criterion
/// that also certifies the answer when one applies.
ZeroTest is_zero_ideal(const WeightedOrientedGraph& g);
ZeroTest is_zero_ideal(const GeneralEdgeMonomialGraph& g);

/// The unique (up to sign) primitive generator when the null space of A is
/// one-dimensional. Pre: validated, pruned, connected. The support is
/// cross-checked against the structural prediction. Throws
/// errc::not_principal when the kernel dimension differs from 1.
Binomial principal_generator(const WeightedOrientedGraph& g);

/// Predicted generator support for the two-cycle shapes: the edge set of the
/// unique balanced cycle if there is one (the outer cycle counts in the
/// shared-path case), otherwise every edge. nullopt when the graph is not a
/// two-cycle shape or more than one relevant cycle is balanced.
std::optional<std::vector<int>> predict_support(const WeightedOrientedGraph& g);

enum class Method {
  rank_test,
  balanced_cycle_algorithm,
  primitive_kernel,
  oracle_saturation,
};

enum class IdealKind { zero, principal, basis };

struct ToricIdealResult {
  IdealKind kind = IdealKind::zero;
  std::vector<Binomial> generators;  // exponents over the input graph's edges
  Method method = Method::rank_test;
  bool certified_minimal = true;
};

struct ComputeOptions {
  long max_spairs = 200000;
  long max_degree = 600;
  bool force_oracle = false;
};

/// Classification pipeline: decompose into components, prune leaves, then per
/// component decide by rank (zero), one-dimensional kernel (principal), or
/// delegate to the saturation oracle; edge ids are re-embedded through the
/// component and pruning remaps.
ToricIdealResult compute_toric_ideal(const WeightedOrientedGraph& g, const ComputeOptions& opt = {});

}  // namespace towog

#endif
