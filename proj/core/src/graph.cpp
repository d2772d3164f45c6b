#include "towog/graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>

namespace towog {

namespace {

std::string edge_str(int id, int a, int b) {
  return "e" + std::to_string(id) + "=(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

void validate_endpoints(int vertex_count, const std::vector<std::pair<int, int>>& ends) {
  std::map<std::pair<int, int>, int> seen;  // unordered support -> edge id
  for (std::size_t j = 0; j < ends.size(); ++j) {
    auto [a, b] = ends[j];
    int id = static_cast<int>(j) + 1;
    if (a < 1 || a > vertex_count || b < 1 || b > vertex_count)
      fail(errc::bad_vertex_id, "vertex id out of range in " + edge_str(id, a, b));
    if (a == b) fail(errc::self_loop, "self-loop at " + edge_str(id, a, b));
    auto key = std::minmax(a, b);
    auto [it, inserted] = seen.emplace(key, id);
    if (!inserted)
      fail(errc::parallel_edge, "parallel edges e" + std::to_string(it->second) + " and " +
                                    edge_str(id, a, b));
  }
}

std::vector<std::pair<int, int>> endpoints(const WeightedOrientedGraph& g) {
  std::vector<std::pair<int, int>> out;
  out.reserve(g.edges.size());
  for (const Edge& e : g.edges) out.emplace_back(e.tail, e.head);
  return out;
}

std::vector<std::pair<int, int>> endpoints(const GeneralEdgeMonomialGraph& g) {
  std::vector<std::pair<int, int>> out;
  out.reserve(g.edges.size());
  for (const GeneralEdgeMonomial& e : g.edges) out.emplace_back(e.vertex_a, e.vertex_b);
  return out;
}

/// Iterated leaf removal on an endpoint list; returns keep flags.
std::vector<bool> prune_flags(int vertex_count, const std::vector<std::pair<int, int>>& ends) {
  std::vector<int> degree(vertex_count + 1, 0);
  std::vector<bool> keep(ends.size(), true);
  for (auto [a, b] : ends) {
    ++degree[a];
    ++degree[b];
  }
  std::vector<int> stack;
  for (int v = 1; v <= vertex_count; ++v)
    if (degree[v] == 1) stack.push_back(v);
  std::vector<std::vector<std::size_t>> incident(vertex_count + 1);
  for (std::size_t j = 0; j < ends.size(); ++j) {
    incident[ends[j].first].push_back(j);
    incident[ends[j].second].push_back(j);
  }
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    if (degree[v] != 1) continue;
    for (std::size_t j : incident[v]) {
      if (!keep[j]) continue;
      keep[j] = false;
      int u = ends[j].first == v ? ends[j].second : ends[j].first;
      --degree[v];
      --degree[u];
      if (degree[u] == 1) stack.push_back(u);
      break;
    }
  }
  return keep;
}

}  // namespace

GeneralEdgeMonomialGraph to_general(const WeightedOrientedGraph& g) {
  GeneralEdgeMonomialGraph out;
  out.vertex_count = g.vertex_count;
  out.edges.reserve(g.edges.size());
  for (const Edge& e : g.edges)
    out.edges.push_back({e.tail, Int(1), e.head, g.weight(e.head)});
  return out;
}

void validate(const WeightedOrientedGraph& g) {
  if (g.vertex_count < 1) fail(errc::bad_vertex_id, "graph needs at least one vertex");
  if (static_cast<int>(g.weights.size()) != g.vertex_count)
    fail(errc::length_mismatch, "weight vector length != vertex count");
  for (int v = 1; v <= g.vertex_count; ++v)
    if (g.weight(v) < 1)
      fail(errc::non_positive_weight, "vertex " + std::to_string(v) + " has weight < 1");
  validate_endpoints(g.vertex_count, endpoints(g));
}

void validate(const GeneralEdgeMonomialGraph& g) {
  if (g.vertex_count < 1) fail(errc::bad_vertex_id, "graph needs at least one vertex");
  for (std::size_t j = 0; j < g.edges.size(); ++j)
    if (g.edges[j].exp_a < 1 || g.edges[j].exp_b < 1)
      fail(errc::non_positive_weight, "edge e" + std::to_string(j + 1) + " has exponent < 1");
  validate_endpoints(g.vertex_count, endpoints(g));
}

std::vector<Component> connected_components(const WeightedOrientedGraph& g) {
  std::vector<std::vector<int>> adj(g.vertex_count + 1);
  for (const Edge& e : g.edges) {
    adj[e.tail].push_back(e.head);
    adj[e.head].push_back(e.tail);
  }
  std::vector<int> comp_of(g.vertex_count + 1, 0);
  int ncomp = 0;
  for (int s = 1; s <= g.vertex_count; ++s) {
    if (comp_of[s]) continue;
    ++ncomp;
    std::vector<int> stack{s};
    comp_of[s] = ncomp;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : adj[v])
        if (!comp_of[u]) {
          comp_of[u] = ncomp;
          stack.push_back(u);
        }
    }
  }
  std::vector<Component> comps(ncomp);
  std::vector<int> local_id(g.vertex_count + 1, 0);
  for (int v = 1; v <= g.vertex_count; ++v) {
    Component& c = comps[comp_of[v] - 1];
    c.vertex_ids.push_back(v);
    local_id[v] = static_cast<int>(c.vertex_ids.size());
    c.graph.vertex_count = static_cast<int>(c.vertex_ids.size());
    c.graph.weights.push_back(g.weight(v));
  }
  for (std::size_t j = 0; j < g.edges.size(); ++j) {
    const Edge& e = g.edges[j];
    Component& c = comps[comp_of[e.tail] - 1];
    c.graph.edges.push_back({local_id[e.tail], local_id[e.head]});
    c.edge_ids.push_back(static_cast<int>(j) + 1);
  }
  return comps;
}

PruneResult prune_leaves(const WeightedOrientedGraph& g) {
  std::vector<bool> keep = prune_flags(g.vertex_count, endpoints(g));
  PruneResult out;
  out.graph.vertex_count = g.vertex_count;
  out.graph.weights = g.weights;
  for (std::size_t j = 0; j < g.edges.size(); ++j) {
    if (keep[j]) {
      out.graph.edges.push_back(g.edges[j]);
      out.edge_remap.push_back(static_cast<int>(j) + 1);
    } else {
      out.removed_edges.push_back(static_cast<int>(j) + 1);
    }
  }
  return out;
}

GeneralPruneResult prune_leaves(const GeneralEdgeMonomialGraph& g) {
  std::vector<bool> keep = prune_flags(g.vertex_count, endpoints(g));
  GeneralPruneResult out;
  out.graph.vertex_count = g.vertex_count;
  for (std::size_t j = 0; j < g.edges.size(); ++j) {
    if (keep[j]) {
      out.graph.edges.push_back(g.edges[j]);
      out.edge_remap.push_back(static_cast<int>(j) + 1);
    } else {
      out.removed_edges.push_back(static_cast<int>(j) + 1);
    }
  }
  return out;
}

namespace {

/// Canonical form of a cyclic edge-id sequence: lexicographically smallest
/// over all rotations of both traversal directions.
std::vector<int> canonical_cycle(std::vector<int> c) {
  const std::size_t n = c.size();
  std::vector<int> best;
  for (int dir = 0; dir < 2; ++dir) {
    for (std::size_t r = 0; r < n; ++r) {
      std::vector<int> cand(n);
      for (std::size_t i = 0; i < n; ++i) cand[i] = c[(r + i) % n];
      if (best.empty() || cand < best) best = std::move(cand);
    }
    std::reverse(c.begin(), c.end());
  }
  return best;
}

struct Thread {
  int start = 0;
  int end = 0;
  std::vector<int> edge_ids;  // path order from start to end
};

}  // namespace

GraphStructure classify_structure(const WeightedOrientedGraph& g) {
  const auto ends = endpoints(g);
  std::vector<int> degree(g.vertex_count + 1, 0);
  std::vector<std::vector<std::size_t>> incident(g.vertex_count + 1);
  for (std::size_t j = 0; j < ends.size(); ++j) {
    ++degree[ends[j].first];
    ++degree[ends[j].second];
    incident[ends[j].first].push_back(j);
    incident[ends[j].second].push_back(j);
  }
  for (int v = 1; v <= g.vertex_count; ++v)
    if (degree[v] == 1)
      fail(errc::not_pruned, "vertex " + std::to_string(v) + " is a leaf; prune first");

  GraphStructure out;
  if (ends.empty()) {
    out.tag = StructureTag::forest;
    return out;
  }

  int non_isolated = 0;
  for (int v = 1; v <= g.vertex_count; ++v)
    if (degree[v] > 0) ++non_isolated;
  {
    // Connectivity check over the edge-bearing part.
    std::vector<bool> visited(g.vertex_count + 1, false);
    int start = 0;
    for (int v = 1; v <= g.vertex_count && !start; ++v)
      if (degree[v] > 0) start = v;
    std::vector<int> stack{start};
    visited[start] = true;
    int reached = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (std::size_t j : incident[v]) {
        int u = ends[j].first == v ? ends[j].second : ends[j].first;
        if (!visited[u]) {
          visited[u] = true;
          ++reached;
          stack.push_back(u);
        }
      }
    }
    if (reached != non_isolated)
      fail(errc::internal_assertion, "classify_structure requires a connected graph");
  }

  out.cycle_space_dim = static_cast<int>(ends.size()) - non_isolated + 1;
  const int b = out.cycle_space_dim;

  std::vector<int> branch;  // vertices of degree >= 3
  for (int v = 1; v <= g.vertex_count; ++v)
    if (degree[v] >= 3) branch.push_back(v);

  if (b == 1) {
    // Leafless connected with |E| = |V|: every degree is exactly 2, so the
    // edge-bearing part is the cycle itself.
    std::vector<int> cyc;
    int start = ends[0].first;
    int v = start;
    std::size_t prev_edge = ends.size();
    do {
      std::size_t next = incident[v][0] == prev_edge ? incident[v][1] : incident[v][0];
      cyc.push_back(static_cast<int>(next) + 1);
      v = ends[next].first == v ? ends[next].second : ends[next].first;
      prev_edge = next;
    } while (v != start);
    out.tag = StructureTag::unicyclic;
    out.cycles.push_back(canonical_cycle(cyc));
    return out;
  }

  // Decompose into threads: maximal paths whose interior vertices have
  // degree 2, both endpoints branch vertices.
  std::vector<Thread> threads;
  std::vector<bool> used(ends.size(), false);
  for (int v : branch) {
    for (std::size_t j0 : incident[v]) {
      if (used[j0]) continue;
      Thread t;
      t.start = v;
      int cur = v;
      std::size_t j = j0;
      while (true) {
        used[j] = true;
        t.edge_ids.push_back(static_cast<int>(j) + 1);
        cur = ends[j].first == cur ? ends[j].second : ends[j].first;
        if (degree[cur] >= 3) break;
        j = incident[cur][0] == j ? incident[cur][1] : incident[cur][0];
      }
      t.end = cur;
      threads.push_back(std::move(t));
    }
  }

  auto join_cycle = [](const Thread& a, const Thread& b) {
    // a and b run between the same pair of branch vertices; traverse a
    // forward and b backward.
    std::vector<int> cyc = a.edge_ids;
    cyc.insert(cyc.end(), b.edge_ids.rbegin(), b.edge_ids.rend());
    return canonical_cycle(cyc);
  };

  if (b == 2) {
    if (branch.size() == 1) {
      // Figure-eight: two closed threads at the single degree-4 vertex.
      out.tag = StructureTag::two_cycles_shared_vertex;
      out.shared_vertex = branch[0];
      for (const Thread& t : threads) out.cycles.push_back(canonical_cycle(t.edge_ids));
      std::sort(out.cycles.begin(), out.cycles.end());
      return out;
    }
    // Two degree-3 branch vertices: theta graph or dumbbell.
    int closed = 0;
    for (const Thread& t : threads)
      if (t.start == t.end) ++closed;
    if (closed == 0) {
      // Theta: three internally disjoint paths between the branch vertices.
      // The shortest thread (ties by smallest edge id) is reported as the
      // shared path; the two cycles through it come first, the outer last.
      std::vector<std::size_t> order{0, 1, 2};
      std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        if (threads[x].edge_ids.size() != threads[y].edge_ids.size())
          return threads[x].edge_ids.size() < threads[y].edge_ids.size();
        return *std::min_element(threads[x].edge_ids.begin(), threads[x].edge_ids.end()) <
               *std::min_element(threads[y].edge_ids.begin(), threads[y].edge_ids.end());
      });
      Thread shared = threads[order[0]];
      Thread p1 = threads[order[1]];
      Thread p2 = threads[order[2]];
      if (p1.start != shared.start) std::swap(p1.start, p1.end), std::reverse(p1.edge_ids.begin(), p1.edge_ids.end());
      if (p2.start != shared.start) std::swap(p2.start, p2.end), std::reverse(p2.edge_ids.begin(), p2.edge_ids.end());
      out.tag = StructureTag::two_cycles_shared_path;
      out.shared_path = shared.edge_ids;
      std::vector<std::vector<int>> inner{join_cycle(shared, p1), join_cycle(shared, p2)};
      std::sort(inner.begin(), inner.end());
      out.cycles = std::move(inner);
      out.cycles.push_back(join_cycle(p1, p2));
      return out;
    }
    // Dumbbell: a closed thread at each branch vertex plus the bridge.
    out.tag = StructureTag::two_cycles_bridged;
    for (const Thread& t : threads) {
      if (t.start == t.end)
        out.cycles.push_back(canonical_cycle(t.edge_ids));
      else
        out.bridge = t.edge_ids;
    }
    std::sort(out.cycles.begin(), out.cycles.end());
    return out;
  }

  // b >= 3: recognize only the rose (all cycles joined at one vertex).
  if (branch.size() == 1 && degree[branch[0]] == 2 * b &&
      static_cast<int>(threads.size()) == b) {
    bool all_closed = true;
    for (const Thread& t : threads)
      if (t.start != t.end) all_closed = false;
    if (all_closed) {
      out.tag = StructureTag::multi_cycle_vertex_join;
      out.shared_vertex = branch[0];
      for (const Thread& t : threads) out.cycles.push_back(canonical_cycle(t.edge_ids));
      std::sort(out.cycles.begin(), out.cycles.end());
      return out;
    }
  }
  out.tag = StructureTag::other;
  return out;
}

std::vector<int> cycle_vertices(const WeightedOrientedGraph& g, const std::vector<int>& cycle) {
  const std::size_t n = cycle.size();
  if (n < 3) fail(errc::not_a_cycle, "a cycle needs at least 3 edges");
  std::set<int> distinct(cycle.begin(), cycle.end());
  if (distinct.size() != n) fail(errc::not_a_cycle, "repeated edge id in cycle");
  for (int id : cycle)
    if (id < 1 || id > g.edge_count()) fail(errc::not_a_cycle, "edge id out of range");
  auto ends_of = [&](int id) {
    const Edge& e = g.edges[id - 1];
    return std::pair<int, int>(e.tail, e.head);
  };
  auto common = [&](int id1, int id2) -> int {
    auto [a1, b1] = ends_of(id1);
    auto [a2, b2] = ends_of(id2);
    if (a1 == a2 || a1 == b2) return a1;
    if (b1 == a2 || b1 == b2) return b1;
    return 0;
  };
  std::vector<int> verts(n);
  int v0 = common(cycle[n - 1], cycle[0]);
  if (v0 == 0) fail(errc::not_a_cycle, "consecutive edges share no vertex");
  verts[0] = v0;
  for (std::size_t i = 0; i < n; ++i) {
    auto [a, b] = ends_of(cycle[i]);
    int cur = verts[i];
    if (a != cur && b != cur) fail(errc::not_a_cycle, "edges do not chain into a walk");
    int nxt = a == cur ? b : a;
    if (i + 1 < n)
      verts[i + 1] = nxt;
    else if (nxt != v0)
      fail(errc::not_a_cycle, "edge sequence does not close");
  }
  std::set<int> vset(verts.begin(), verts.end());
  if (vset.size() != n) fail(errc::not_a_cycle, "repeated vertex in cycle");
  return verts;
}

bool is_naturally_oriented(const WeightedOrientedGraph& g, const std::vector<int>& cycle) {
  std::vector<int> verts = cycle_vertices(g, cycle);
  const std::size_t n = cycle.size();
  bool forward = true, backward = true;
  for (std::size_t i = 0; i < n; ++i) {
    const Edge& e = g.edges[cycle[i] - 1];
    int from = verts[i], to = verts[(i + 1) % n];
    if (e.tail == from && e.head == to)
      backward = false;
    else
      forward = false;
  }
  return forward || backward;
}

}  // namespace towog
