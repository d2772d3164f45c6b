#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "helpers.hpp"
#include "towog/graph.hpp"

using namespace towog;
using namespace towog::testing;

namespace {

errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return errc::internal_assertion;
}

/// Random connected graph with optional pendant trees, for property tests.
WeightedOrientedGraph random_graph(std::mt19937& rng, int max_vertices, int max_extra_edges) {
  std::uniform_int_distribution<int> nv_dist(2, max_vertices);
  int nv = nv_dist(rng);
  std::uniform_int_distribution<int> w_dist(1, 3), coin(0, 1);
  WeightedOrientedGraph g;
  g.vertex_count = nv;
  for (int v = 0; v < nv; ++v) g.weights.emplace_back(w_dist(rng));
  std::set<std::pair<int, int>> used;
  for (int v = 2; v <= nv; ++v) {  // spanning tree
    std::uniform_int_distribution<int> parent(1, v - 1);
    int p = parent(rng);
    int a = coin(rng) ? p : v, b = a == p ? v : p;
    g.edges.push_back({a, b});
    used.insert(std::minmax(a, b));
  }
  std::uniform_int_distribution<int> extra(0, max_extra_edges), pick(1, nv);
  for (int k = extra(rng); k > 0; --k) {
    int a = pick(rng), b = pick(rng);
    if (a == b || used.count(std::minmax(a, b))) continue;
    used.insert(std::minmax(a, b));
    g.edges.push_back({a, b});
  }
  return g;
}

}  // namespace

TEST_CASE("validate accepts the minimal graph") {
  CHECK_NOTHROW(validate(make_graph(2, {1, 1}, {{1, 2}})));
}

TEST_CASE("validate rejects the listed violations") {
  CHECK(code_of([] { validate(make_graph(2, {1, 1}, {{1, 1}})); }) == errc::self_loop);
  CHECK(code_of([] { validate(make_graph(2, {1, 1}, {{1, 2}, {2, 1}})); }) == errc::parallel_edge);
  CHECK(code_of([] { validate(make_graph(2, {1, 1}, {{1, 3}})); }) == errc::bad_vertex_id);
  CHECK(code_of([] { validate(make_graph(2, {1, 0}, {{1, 2}})); }) == errc::non_positive_weight);
  CHECK(code_of([] { validate(make_graph(3, {1, 1}, {{1, 2}})); }) == errc::length_mismatch);
}

TEST_CASE("general edge monomial graphs validate the same invariants") {
  GeneralEdgeMonomialGraph g;
  g.vertex_count = 2;
  g.edges.push_back({1, Int(2), 2, Int(3)});
  CHECK_NOTHROW(validate(g));
  g.edges.push_back({2, Int(1), 1, Int(1)});
  CHECK(code_of([&] { validate(g); }) == errc::parallel_edge);
}

TEST_CASE("a connected graph is a single component with identity remaps") {
  auto g = make_graph(3, {1, 1, 1}, {{1, 2}, {2, 3}, {3, 1}});
  auto comps = connected_components(g);
  REQUIRE(comps.size() == 1);
  CHECK(comps[0].graph == g);
  CHECK(comps[0].vertex_ids == std::vector<int>{1, 2, 3});
  CHECK(comps[0].edge_ids == std::vector<int>{1, 2, 3});
}

TEST_CASE("two disjoint triangles split into two components") {
  auto g = make_graph(6, {1, 1, 1, 1, 1, 1},
                      {{1, 2}, {2, 3}, {3, 1}, {4, 5}, {5, 6}, {6, 4}});
  auto comps = connected_components(g);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].graph.edge_count() == 3);
  CHECK(comps[1].graph.edge_count() == 3);
  CHECK(comps[1].vertex_ids == std::vector<int>{4, 5, 6});
  CHECK(comps[1].edge_ids == std::vector<int>{4, 5, 6});
}

TEST_CASE("isolated vertices are their own components") {
  auto g = make_graph(3, {1, 1, 1}, {});
  CHECK(connected_components(g).size() == 3);
}

TEST_CASE("component edge ids partition the edge set") {
  std::mt19937 rng(555);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = random_graph(rng, 9, 4);
    std::set<int> all;
    for (const auto& comp : connected_components(g))
      for (int id : comp.edge_ids) CHECK(all.insert(id).second);
    CHECK(all.size() == static_cast<std::size_t>(g.edge_count()));
  }
}

TEST_CASE("pruning a triangle with a pendant edge") {
  auto g = make_graph(4, {1, 1, 1, 1}, {{1, 2}, {2, 3}, {3, 1}, {3, 4}});
  auto pr = prune_leaves(g);
  CHECK(pr.graph.edge_count() == 3);
  CHECK(pr.removed_edges == std::vector<int>{4});
  CHECK(pr.edge_remap == std::vector<int>{1, 2, 3});
  CHECK(pr.graph.vertex_count == 4);
}

TEST_CASE("pruning a tree removes every edge") {
  auto g = make_graph(5, {1, 2, 1, 2, 1}, {{1, 2}, {2, 3}, {2, 4}, {4, 5}});
  auto pr = prune_leaves(g);
  CHECK(pr.graph.edges.empty());
  CHECK(pr.removed_edges.size() == 4);
  CHECK(pr.graph.weights == g.weights);
}

TEST_CASE("a leafless graph is a pruning fixed point") {
  auto g = load_graph("8cycles_d1.wog");
  auto pr = prune_leaves(g);
  CHECK(pr.graph == g);
  CHECK(pr.removed_edges.empty());
}

TEST_CASE("pruning is idempotent and leaves minimum degree two") {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 150; ++trial) {
    auto g = random_graph(rng, 10, 5);
    auto pr = prune_leaves(g);
    CHECK(prune_leaves(pr.graph).graph == pr.graph);
    std::vector<int> degree(g.vertex_count + 1, 0);
    for (const Edge& e : pr.graph.edges) {
      ++degree[e.tail];
      ++degree[e.head];
    }
    for (int v = 1; v <= g.vertex_count; ++v) CHECK(degree[v] != 1);
  }
}

TEST_CASE("classify: oriented 8-cycle") {
  auto g = load_graph("8cycles_d1.wog");
  auto st = classify_structure(g);
  CHECK(st.tag == StructureTag::unicyclic);
  REQUIRE(st.cycles.size() == 1);
  CHECK(st.cycles[0].size() == 8);
  CHECK(st.cycle_space_dim == 1);
}

TEST_CASE("classify: two 4-cycles sharing one edge") {
  auto g = load_graph("twocycle_d2.wog");
  auto st = classify_structure(g);
  CHECK(st.tag == StructureTag::two_cycles_shared_path);
  REQUIRE(st.cycles.size() == 3);
  std::multiset<std::size_t> lengths{st.cycles[0].size(), st.cycles[1].size(),
                                     st.cycles[2].size()};
  CHECK(lengths == std::multiset<std::size_t>{4, 4, 6});
  CHECK(st.cycles[2].size() == 6);  // outer cycle listed last
  CHECK(st.shared_path == std::vector<int>{4});
}

TEST_CASE("classify: three cycles joined at a vertex") {
  auto g = load_graph("fivemingen_d1.wog");
  auto st = classify_structure(g);
  CHECK(st.tag == StructureTag::multi_cycle_vertex_join);
  CHECK(st.cycles.size() == 3);
  CHECK(st.shared_vertex == 1);
  CHECK(st.cycle_space_dim == 3);
}

TEST_CASE("classify: figure eight and dumbbell") {
  auto fig8 = make_graph(5, {1, 1, 1, 1, 1},
                         {{1, 2}, {2, 3}, {3, 1}, {1, 4}, {4, 5}, {5, 1}});
  auto st = classify_structure(fig8);
  CHECK(st.tag == StructureTag::two_cycles_shared_vertex);
  CHECK(st.shared_vertex == 1);
  CHECK(st.cycles.size() == 2);

  auto bell = make_graph(7, {1, 1, 1, 1, 1, 1, 1},
                         {{1, 2}, {2, 3}, {3, 1}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 5}});
  auto stb = classify_structure(bell);
  CHECK(stb.tag == StructureTag::two_cycles_bridged);
  CHECK(stb.bridge == std::vector<int>{4});
  CHECK(stb.cycles.size() == 2);
}

TEST_CASE("classify: K4 is out of the recognized family") {
  auto k4 = make_graph(4, {1, 1, 1, 1}, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  auto st = classify_structure(k4);
  CHECK(st.tag == StructureTag::other);
  CHECK(st.cycles.empty());
  CHECK(st.cycle_space_dim == 3);
}

TEST_CASE("classify rejects graphs with leaves") {
  auto g = make_graph(4, {1, 1, 1, 1}, {{1, 2}, {2, 3}, {3, 1}, {3, 4}});
  CHECK(code_of([&] { classify_structure(g); }) == errc::not_pruned);
}

TEST_CASE("classified cycles agree with exhaustive search") {
  std::mt19937 rng(31337);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    auto g = random_graph(rng, 8, 4);
    if (g.edge_count() > 12) continue;
    auto pr = prune_leaves(g);
    if (pr.graph.edges.empty()) continue;
    auto comps = connected_components(pr.graph);
    const Component* edge_comp = nullptr;
    int edge_bearing = 0;
    for (const auto& c : comps)
      if (!c.graph.edges.empty()) {
        ++edge_bearing;
        edge_comp = &c;
      }
    if (edge_bearing != 1) continue;
    auto st = classify_structure(edge_comp->graph);
    if (st.tag == StructureTag::other) continue;
    std::set<std::set<int>> got;
    for (const auto& cyc : st.cycles) got.insert({cyc.begin(), cyc.end()});
    CHECK(got == brute_force_cycle_sets(edge_comp->graph));
    CHECK(got.size() == st.cycles.size());
    ++checked;
  }
  CHECK(checked > 50);
}

TEST_CASE("cycle normalization is rotation and direction invariant") {
  auto g = make_graph(4, {1, 1, 1, 1}, {{1, 2}, {2, 3}, {3, 4}, {4, 1}});
  auto st = classify_structure(g);
  REQUIRE(st.cycles.size() == 1);
  CHECK(st.cycles[0] == std::vector<int>{1, 2, 3, 4});
}

TEST_CASE("natural orientation of cycles") {
  auto directed = make_graph(3, {1, 1, 1}, {{1, 2}, {2, 3}, {3, 1}});
  CHECK(is_naturally_oriented(directed, {1, 2, 3}));

  auto reversed_all = make_graph(3, {1, 1, 1}, {{2, 1}, {3, 2}, {1, 3}});
  CHECK(is_naturally_oriented(reversed_all, {1, 2, 3}));

  auto mixed = make_graph(4, {1, 1, 1, 1}, {{1, 2}, {2, 3}, {4, 3}, {4, 1}});
  CHECK(!is_naturally_oriented(mixed, {1, 2, 3, 4}));

  auto d1 = load_graph("8cycles_d1.wog");
  CHECK(!is_naturally_oriented(d1, full_cycle_ids(8)));
}

TEST_CASE("cycle validation failures") {
  auto g = make_graph(4, {1, 1, 1, 1}, {{1, 2}, {2, 3}, {3, 4}, {4, 1}});
  CHECK(code_of([&] { cycle_vertices(g, {1, 2}); }) == errc::not_a_cycle);
  CHECK(code_of([&] { cycle_vertices(g, {1, 2, 3}); }) == errc::not_a_cycle);
  CHECK(code_of([&] { cycle_vertices(g, {1, 1, 2, 3}); }) == errc::not_a_cycle);
  CHECK(code_of([&] { is_naturally_oriented(g, {1, 3, 2, 4}); }) == errc::not_a_cycle);
}
