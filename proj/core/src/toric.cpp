#include "towog/toric.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "towog/oracle.hpp"

namespace towog {

IncidenceMatrix incidence_matrix(const WeightedOrientedGraph& g) {
  IncidenceMatrix out;
  out.matrix = IntMatrix(g.vertex_count, g.edges.size());
  for (std::size_t j = 0; j < g.edges.size(); ++j) {
    const Edge& e = g.edges[j];
    out.matrix(e.tail - 1, j) = 1;
    out.matrix(e.head - 1, j) = g.weight(e.head);
    out.edge_of_column.push_back(static_cast<int>(j) + 1);
  }
  for (int v = 1; v <= g.vertex_count; ++v) out.vertex_of_row.push_back(v);
  return out;
}

IncidenceMatrix incidence_matrix(const GeneralEdgeMonomialGraph& g) {
  IncidenceMatrix out;
  out.matrix = IntMatrix(g.vertex_count, g.edges.size());
  for (std::size_t j = 0; j < g.edges.size(); ++j) {
    const GeneralEdgeMonomial& e = g.edges[j];
    out.matrix(e.vertex_a - 1, j) = e.exp_a;
    out.matrix(e.vertex_b - 1, j) = e.exp_b;
    out.edge_of_column.push_back(static_cast<int>(j) + 1);
  }
  for (int v = 1; v <= g.vertex_count; ++v) out.vertex_of_row.push_back(v);
  return out;
}

std::vector<int> Binomial::support() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < plus.size(); ++i)
    if (plus[i] != 0 || minus[i] != 0) out.push_back(static_cast<int>(i) + 1);
  return out;
}

Int Binomial::degree() const {
  Int dp = 0, dm = 0;
  for (const Int& x : plus) dp += x;
  for (const Int& x : minus) dm += x;
  return std::max(dp, dm);
}

std::vector<Int> phi_image(const WeightedOrientedGraph& g, const std::vector<Int>& exponents) {
  if (exponents.size() != g.edges.size())
    fail(errc::length_mismatch, "phi_image: exponent vector length != edge count");
  return mat_vec(incidence_matrix(g).matrix, exponents);
}

Binomial kernel_vector_to_binomial(const IncidenceMatrix& a, const std::vector<Int>& u) {
  if (u.size() != a.matrix.cols())
    fail(errc::length_mismatch, "kernel vector length != column count");
  bool nonzero = false;
  for (const Int& x : u)
    if (x != 0) nonzero = true;
  if (!nonzero) fail(errc::zero_vector, "kernel vector is zero");
  for (const Int& y : mat_vec(a.matrix, u))
    if (y != 0) fail(errc::not_in_kernel, "vector is not in the kernel of A");
  std::vector<Int> v = u;
  for (const Int& x : v) {
    if (x == 0) continue;
    if (x < 0)
      for (Int& y : v) y = -y;
    break;
  }
  Binomial f;
  f.plus.assign(v.size(), 0);
  f.minus.assign(v.size(), 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] > 0)
      f.plus[i] = v[i];
    else if (v[i] < 0)
      f.minus[i] = -v[i];
  }
  return f;
}

namespace {

/// Banded entries of the cycle's incidence matrix in the traversal labeling:
/// a_{i,i} is the coefficient of vertex x_i in the column of edge e_i and
/// a_{i+1,i} the coefficient of x_{i+1}, with indices wrapping.
struct CycleBands {
  std::vector<Int> diag;     // a_{i,i}
  std::vector<Int> subdiag;  // a_{i+1,i}; the last entry is a_{1,n}
  std::vector<int> verts;
};

CycleBands cycle_bands(const WeightedOrientedGraph& g, const std::vector<int>& cycle) {
  CycleBands out;
  out.verts = cycle_vertices(g, cycle);
  const std::size_t n = cycle.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Edge& e = g.edges[cycle[i] - 1];
    int xi = out.verts[i];
    int xnext = out.verts[(i + 1) % n];
    out.diag.push_back(e.tail == xi ? Int(1) : g.weight(xi));
    out.subdiag.push_back(e.tail == xnext ? Int(1) : g.weight(xnext));
  }
  return out;
}

}  // namespace

bool is_balanced(const WeightedOrientedGraph& g, const std::vector<int>& cycle) {
  CycleBands bands = cycle_bands(g, cycle);
  if (cycle.size() % 2 != 0) return false;
  Int diag = 1, sub = 1;
  for (const Int& x : bands.diag) diag *= x;
  for (const Int& x : bands.subdiag) sub *= x;
  return diag == sub;
}

bool is_uniformly_balanced(const WeightedOrientedGraph& g, const std::vector<int>& cycle) {
  std::vector<int> verts = cycle_vertices(g, cycle);
  const std::size_t n = cycle.size();
  if (n % 2 != 0) fail(errc::odd_length, "uniform balance is defined for even cycles");
  std::size_t inc = 0, dec = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Edge& e = g.edges[cycle[i] - 1];
    if (e.tail == verts[i])
      ++inc;
    else
      ++dec;
  }
  if (inc != dec) return false;
  const Int* common = nullptr;
  for (std::size_t i = 0; i < n; ++i) {
    const Edge& prev = g.edges[cycle[(i + n - 1) % n] - 1];
    const Edge& next = g.edges[cycle[i] - 1];
    int v = verts[i];
    bool source = prev.tail == v && next.tail == v;
    bool sink = prev.head == v && next.head == v;
    if (source || sink) continue;
    if (common == nullptr)
      common = &g.weight(v);
    else if (*common != g.weight(v))
      return false;
  }
  return true;
}

Binomial balanced_cycle_generator(const WeightedOrientedGraph& g, const std::vector<int>& cycle) {
  if (!is_balanced(g, cycle)) fail(errc::not_balanced, "cycle is not balanced");
  std::vector<int> verts = cycle_vertices(g, cycle);
  const std::size_t n = cycle.size();

  std::vector<Rat> r(n);
  r[0] = 1;
  for (std::size_t i = 2; i <= n; ++i) {
    const Edge& prev = g.edges[cycle[i - 2] - 1];
    const Edge& cur = g.edges[cycle[i - 1] - 1];
    int xprev = verts[i - 2], xi = verts[i - 1], xnext = verts[i % n];
    if (prev.tail == xi && prev.head == xprev && cur.tail == xnext && cur.head == xi)
      r[i - 1] = r[i - 2] / Rat(g.weight(xi));
    else if (prev.tail == xprev && prev.head == xi && cur.tail == xi && cur.head == xnext)
      r[i - 1] = Rat(g.weight(xi)) * r[i - 2];
    else
      r[i - 1] = r[i - 2];
  }
  Int den_lcm = 1;
  for (const Rat& x : r) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den().get_mpz_t());
  std::vector<Int> u(g.edges.size(), 0);
  for (std::size_t i = 0; i < n; ++i) {
    Rat scaled = r[i] * Rat(den_lcm);
    u[cycle[i] - 1] = i % 2 == 0 ? Int(scaled.get_num()) : Int(-scaled.get_num());
  }
  IncidenceMatrix a = incidence_matrix(g);
  Binomial from_algorithm = kernel_vector_to_binomial(a, u);

  // Independent route: primitive vector of the cycle subgraph's null space.
  IntMatrix sub(g.vertex_count, n);
  for (std::size_t j = 0; j < n; ++j)
    for (int i = 0; i < g.vertex_count; ++i) sub(i, j) = a.matrix(i, cycle[j] - 1);
  auto basis = null_space_basis(sub);
  if (basis.size() != 1)
    fail(errc::internal_assertion, "balanced cycle must have a one-dimensional null space");
  std::vector<Int> prim = primitive_integer_vector(basis[0]);
  std::vector<Int> u2(g.edges.size(), 0);
  for (std::size_t j = 0; j < n; ++j) u2[cycle[j] - 1] = prim[j];
  Binomial from_kernel = kernel_vector_to_binomial(a, u2);
  if (!(from_algorithm == from_kernel))
    fail(errc::internal_assertion, "cycle generator: recurrence and null-space routes disagree");
  return from_algorithm;
}

namespace {

/// Shape-level view used for the zero-ideal certificates: prune, then look at
/// the edge-bearing connected components.
struct ShapeSummary {
  bool edgeless = false;
  bool single_cycle = false;        // pruned graph is one cycle (+ isolated vertices)
  bool all_odd_cycles = true;       // every edge-bearing component is an odd cycle
  std::vector<int> the_cycle;       // edge ids in the pruned-local space
  WeightedOrientedGraph pruned;
  std::vector<int> edge_remap;
};

ShapeSummary summarize(const WeightedOrientedGraph& g) {
  ShapeSummary s;
  PruneResult pr = prune_leaves(g);
  s.pruned = pr.graph;
  s.edge_remap = pr.edge_remap;
  if (s.pruned.edges.empty()) {
    s.edgeless = true;
    s.single_cycle = false;
    return s;
  }
  auto comps = connected_components(s.pruned);
  int edge_bearing = 0;
  for (const Component& c : comps) {
    if (c.graph.edges.empty()) continue;
    ++edge_bearing;
    GraphStructure st = classify_structure(c.graph);
    bool is_cycle = st.tag == StructureTag::unicyclic &&
                    st.cycles.size() == 1 &&
                    st.cycles[0].size() == c.graph.edges.size();
    if (!is_cycle || st.cycles[0].size() % 2 == 0) s.all_odd_cycles = false;
    if (edge_bearing == 1 && is_cycle) {
      s.single_cycle = true;
      s.the_cycle.resize(st.cycles[0].size());
      for (std::size_t i = 0; i < st.cycles[0].size(); ++i)
        s.the_cycle[i] = c.edge_ids[st.cycles[0][i] - 1];
    }
  }
  if (edge_bearing != 1) s.single_cycle = false;
  return s;
}

}  // namespace

ZeroTest is_zero_ideal(const WeightedOrientedGraph& g) {
  IncidenceMatrix a = incidence_matrix(g);
  if (rank(a.matrix) != a.matrix.cols()) return {false, std::nullopt};
  ShapeSummary s = summarize(g);
  if (s.edgeless) return {true, ZeroReason::only_trivial_even_closed_walks};
  if (s.single_cycle) {
    if (s.the_cycle.size() % 2 == 1) return {true, ZeroReason::odd_cycle};
    std::vector<int> verts = cycle_vertices(s.pruned, s.the_cycle);
    bool heavy = false;
    for (int v : verts)
      if (s.pruned.weight(v) > 1) heavy = true;
    if (heavy && is_naturally_oriented(s.pruned, s.the_cycle))
      return {true, ZeroReason::naturally_oriented};
    return {true, ZeroReason::unbalanced_unicyclic};
  }
  if (s.all_odd_cycles) return {true, ZeroReason::only_trivial_even_closed_walks};
  return {true, ZeroReason::rank_only};
}

ZeroTest is_zero_ideal(const GeneralEdgeMonomialGraph& g) {
  IncidenceMatrix a = incidence_matrix(g);
  if (rank(a.matrix) != a.matrix.cols()) return {false, std::nullopt};
  // Balance notions do not apply to general edge monomials; certify through
  // the cycle structure of the underlying graph only.
  WeightedOrientedGraph shape;
  shape.vertex_count = g.vertex_count;
  shape.weights.assign(g.vertex_count, 1);
  for (const GeneralEdgeMonomial& e : g.edges) shape.edges.push_back({e.vertex_a, e.vertex_b});
  ShapeSummary s = summarize(shape);
  if (s.edgeless) return {true, ZeroReason::only_trivial_even_closed_walks};
  if (s.single_cycle && s.the_cycle.size() % 2 == 1) return {true, ZeroReason::odd_cycle};
  if (s.all_odd_cycles) return {true, ZeroReason::only_trivial_even_closed_walks};
  return {true, ZeroReason::rank_only};
}

std::optional<std::vector<int>> predict_support(const WeightedOrientedGraph& g) {
  GraphStructure st = classify_structure(g);
  if (st.tag != StructureTag::two_cycles_shared_vertex &&
      st.tag != StructureTag::two_cycles_shared_path &&
      st.tag != StructureTag::two_cycles_bridged)
    return std::nullopt;
  std::vector<const std::vector<int>*> balanced;
  for (const auto& c : st.cycles)
    if (is_balanced(g, c)) balanced.push_back(&c);
  if (balanced.size() > 1) return std::nullopt;
  std::vector<int> supp;
  if (balanced.size() == 1) {
    supp = *balanced[0];
    std::sort(supp.begin(), supp.end());
  } else {
    for (int j = 1; j <= g.edge_count(); ++j) supp.push_back(j);
  }
  return supp;
}

Binomial principal_generator(const WeightedOrientedGraph& g) {
  IncidenceMatrix a = incidence_matrix(g);
  auto basis = null_space_basis(a.matrix);
  if (basis.size() != 1)
    fail(errc::not_principal,
         "kernel dimension is " + std::to_string(basis.size()) + ", not 1");
  Binomial f = kernel_vector_to_binomial(a, primitive_integer_vector(basis[0]));

  // Structural cross-assertions; the rank decides, the theorems must agree.
  GraphStructure st = classify_structure(g);
  if (st.tag == StructureTag::unicyclic) {
    std::vector<int> cyc = st.cycles[0];
    std::sort(cyc.begin(), cyc.end());
    if (f.support() != cyc)
      fail(errc::internal_assertion, "unicyclic generator must touch every cycle edge");
  } else if (st.tag == StructureTag::two_cycles_shared_vertex ||
             st.tag == StructureTag::two_cycles_shared_path ||
             st.tag == StructureTag::two_cycles_bridged) {
    auto predicted = predict_support(g);
    if (!predicted)
      fail(errc::internal_assertion,
           "one-dimensional kernel with more than one balanced cycle");
    if (f.support() != *predicted)
      fail(errc::internal_assertion, "generator support differs from the predicted support");
  }
  return f;
}

namespace {

int method_strength(Method m) {
  switch (m) {
    case Method::rank_test: return 0;
    case Method::balanced_cycle_algorithm: return 1;
    case Method::primitive_kernel: return 2;
    case Method::oracle_saturation: return 3;
  }
  return 0;
}

}  // namespace

ToricIdealResult compute_toric_ideal(const WeightedOrientedGraph& g, const ComputeOptions& opt) {
  validate(g);
  ToricIdealResult out;
  out.method = Method::rank_test;
  out.certified_minimal = true;
  const std::size_t mu = g.edges.size();

  for (const Component& comp : connected_components(g)) {
    if (comp.graph.edges.empty()) continue;
    PruneResult pr = prune_leaves(comp.graph);
    if (pr.graph.edges.empty()) continue;
    const WeightedOrientedGraph& h = pr.graph;
    IncidenceMatrix a = incidence_matrix(h);

    std::vector<Binomial> local;
    Method used = Method::rank_test;
    if (opt.force_oracle) {
      SaturationResult sat = saturate_markov_basis(a, {opt.max_spairs, opt.max_degree});
      local = std::move(sat.basis);
      used = Method::oracle_saturation;
      if (!sat.certified) out.certified_minimal = false;
    } else {
      auto basis = null_space_basis(a.matrix);
      if (basis.empty()) continue;
      if (basis.size() == 1) {
        GraphStructure st = classify_structure(h);
        if (st.tag == StructureTag::unicyclic) {
          local.push_back(balanced_cycle_generator(h, st.cycles[0]));
          used = Method::balanced_cycle_algorithm;
        } else {
          local.push_back(principal_generator(h));
          used = Method::primitive_kernel;
        }
      } else {
        SaturationResult sat = saturate_markov_basis(a, {opt.max_spairs, opt.max_degree});
        local = std::move(sat.basis);
        used = Method::oracle_saturation;
        if (!sat.certified) out.certified_minimal = false;
      }
    }
    if (method_strength(used) > method_strength(out.method)) out.method = used;

    for (Binomial& f : local) {
      Binomial lifted;
      lifted.plus.assign(mu, 0);
      lifted.minus.assign(mu, 0);
      for (std::size_t j = 0; j < f.plus.size(); ++j) {
        int original = comp.edge_ids[pr.edge_remap[j] - 1];
        lifted.plus[original - 1] = f.plus[j];
        lifted.minus[original - 1] = f.minus[j];
      }
      // Re-canonicalize the sign in the original edge id space.
      for (std::size_t j = 0; j < mu; ++j) {
        if (lifted.plus[j] == 0 && lifted.minus[j] == 0) continue;
        if (lifted.plus[j] == 0) lifted = lifted.negated();
        break;
      }
      out.generators.push_back(std::move(lifted));
    }
  }

  std::sort(out.generators.begin(), out.generators.end(), binomial_order_less);
  out.kind = out.generators.empty()  ? IdealKind::zero
             : out.generators.size() == 1 ? IdealKind::principal
                                          : IdealKind::basis;
  return out;
}

}  // namespace towog
