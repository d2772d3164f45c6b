#ifndef TOWOG_TESTS_HELPERS_HPP
#define TOWOG_TESTS_HELPERS_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "towog/graph.hpp"
#include "towog/io.hpp"
#include "towog/toric.hpp"

namespace towog::testing {

inline WeightedOrientedGraph make_graph(int nv, std::vector<long> weights,
                                        std::vector<std::pair<int, int>> edges) {
  WeightedOrientedGraph g;
  g.vertex_count = nv;
  for (long w : weights) g.weights.emplace_back(w);
  for (auto [t, h] : edges) g.edges.push_back({t, h});
  return g;
}

/// Binomial from sparse {edge id -> exponent} maps.
inline Binomial make_binomial(int mu, const std::map<int, long>& plus,
                              const std::map<int, long>& minus) {
  Binomial f;
  f.plus.assign(mu, 0);
  f.minus.assign(mu, 0);
  for (auto [id, e] : plus) f.plus[id - 1] = e;
  for (auto [id, e] : minus) f.minus[id - 1] = e;
  return f;
}

inline bool equal_up_to_sign(const Binomial& a, const Binomial& b) {
  return a == b || a == b.negated();
}

inline std::string data_path(const std::string& name) {
  return std::string(TOWOG_DATA_DIR) + "/" + name;
}

inline WeightedOrientedGraph load_graph(const std::string& name) {
  return parse_graph(read_file(data_path(name)));
}

/// Independent determinant oracle: cofactor expansion along the first row.
inline Int cofactor_determinant(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Int det = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        minor(r - 1, cc++) = m(r, c);
      }
    }
    Int term = m(0, j) * cofactor_determinant(minor);
    det += (j % 2 == 0) ? term : Int(-term);
  }
  return det;
}

/// Independent exhaustive enumeration of all simple cycles (edge-id sets).
inline std::set<std::set<int>> brute_force_cycle_sets(const WeightedOrientedGraph& g) {
  std::set<std::set<int>> found;
  std::vector<std::vector<std::pair<int, int>>> adj(g.vertex_count + 1);  // (neighbor, edge id)
  for (int j = 0; j < g.edge_count(); ++j) {
    adj[g.edges[j].tail].push_back({g.edges[j].head, j + 1});
    adj[g.edges[j].head].push_back({g.edges[j].tail, j + 1});
  }
  // Paths from s through vertices > s only count each cycle once per direction;
  // the set representation collapses directions.
  for (int s = 1; s <= g.vertex_count; ++s) {
    std::vector<std::pair<int, std::vector<int>>> stack{{s, {}}};
    std::vector<bool> on_path(g.vertex_count + 1, false);
    // Depth-first search with explicit recursion.
    std::function<void(int, std::vector<int>&, std::vector<bool>&)> dfs =
        [&](int v, std::vector<int>& path_edges, std::vector<bool>& visited) {
          for (auto [u, id] : adj[v]) {
            if (!path_edges.empty() && id == path_edges.back()) continue;
            if (u == s && path_edges.size() >= 2) {
              std::set<int> cyc(path_edges.begin(), path_edges.end());
              cyc.insert(id);
              if (cyc.size() == path_edges.size() + 1) found.insert(cyc);
              continue;
            }
            if (u < s || visited[u]) continue;
            visited[u] = true;
            path_edges.push_back(id);
            dfs(u, path_edges, visited);
            path_edges.pop_back();
            visited[u] = false;
          }
        };
    std::vector<int> path_edges;
    std::vector<bool> visited(g.vertex_count + 1, false);
    visited[s] = true;
    dfs(s, path_edges, visited);
  }
  return found;
}

/// Independent bounded-kernel oracle: full enumeration of (2b+1)^mu vectors.
inline std::set<std::vector<long>> brute_force_bounded_kernel(const IntMatrix& m, long bound) {
  std::set<std::vector<long>> out;
  const std::size_t mu = m.cols();
  std::vector<long> u(mu, -bound);
  while (true) {
    bool nonzero = false;
    for (long x : u)
      if (x != 0) nonzero = true;
    if (nonzero) {
      bool in_kernel = true;
      for (std::size_t i = 0; i < m.rows() && in_kernel; ++i) {
        Int acc = 0;
        for (std::size_t j = 0; j < mu; ++j) acc += m(i, j) * u[j];
        if (acc != 0) in_kernel = false;
      }
      if (in_kernel) out.insert(u);
    }
    std::size_t k = mu;
    while (k > 0 && u[k - 1] == bound) u[--k] = -bound;
    if (k == 0) break;
    ++u[k - 1];
  }
  return out;
}

/// Oriented cycle on n vertices: bit i of `orientation` reverses edge i+1,
/// which otherwise runs x_i -> x_{i+1} (wrapping).
inline WeightedOrientedGraph oriented_cycle(int n, unsigned orientation,
                                            const std::vector<long>& weights) {
  WeightedOrientedGraph g;
  g.vertex_count = n;
  for (long w : weights) g.weights.emplace_back(w);
  for (int i = 0; i < n; ++i) {
    int a = i + 1, b = i == n - 1 ? 1 : i + 2;
    if (orientation >> i & 1u) std::swap(a, b);
    g.edges.push_back({a, b});
  }
  return g;
}

inline std::vector<int> full_cycle_ids(int n) {
  std::vector<int> ids(n);
  for (int i = 0; i < n; ++i) ids[i] = i + 1;
  return ids;
}

}  // namespace towog::testing

#endif
