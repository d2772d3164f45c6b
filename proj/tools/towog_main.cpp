// Command-line front end: classify / zero / generators / matrix / verify / dot.
//
// Exit codes: 0 success, 1 parse or validation failure (including a failed
// verification), 2 uncertified oracle result, 3 internal assertion failure.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "towog/io.hpp"
#include "towog/oracle.hpp"
#include "towog/toric.hpp"

using namespace towog;

namespace {

std::string reason_text(ZeroReason r) {
  switch (r) {
    case ZeroReason::only_trivial_even_closed_walks: return "only trivial even closed walks";
    case ZeroReason::odd_cycle: return "odd cycle";
    case ZeroReason::unbalanced_unicyclic: return "unbalanced unicyclic";
    case ZeroReason::naturally_oriented: return "naturally oriented";
    case ZeroReason::rank_only: return "rank";
  }
  return "rank";
}

std::string method_text(Method m) {
  switch (m) {
    case Method::rank_test: return "rank_test";
    case Method::balanced_cycle_algorithm: return "balanced_cycle_algorithm";
    case Method::primitive_kernel: return "primitive_kernel";
    case Method::oracle_saturation: return "oracle_saturation";
  }
  return "rank_test";
}

std::string tag_text(StructureTag t) {
  switch (t) {
    case StructureTag::forest: return "forest";
    case StructureTag::unicyclic: return "unicyclic";
    case StructureTag::two_cycles_shared_vertex: return "two cycles sharing a vertex";
    case StructureTag::two_cycles_shared_path: return "two cycles sharing a path";
    case StructureTag::two_cycles_bridged: return "two cycles joined by a path";
    case StructureTag::multi_cycle_vertex_join: return "cycles joined at one vertex";
    case StructureTag::other: return "other";
  }
  return "other";
}

std::string edge_list(const std::vector<int>& ids) {
  std::ostringstream out;
  for (std::size_t i = 0; i < ids.size(); ++i) out << (i ? " " : "") << "e" << ids[i];
  return out.str();
}

int run_classify(const WeightedOrientedGraph& g) {
  PruneResult pr = prune_leaves(g);
  std::cout << "vertices: " << g.vertex_count << "\n";
  std::cout << "edges: " << g.edge_count() << "\n";
  std::cout << "pruned leaf edges: "
            << (pr.removed_edges.empty() ? "none" : edge_list(pr.removed_edges)) << "\n";
  int printed = 0;
  for (const Component& comp : connected_components(pr.graph)) {
    if (comp.graph.edges.empty()) continue;
    GraphStructure st = classify_structure(comp.graph);
    std::cout << "component " << ++printed << ":\n";
    std::cout << "  structure: " << tag_text(st.tag) << "\n";
    std::cout << "  cycle-space dimension: " << st.cycle_space_dim << "\n";
    auto original = [&](const std::vector<int>& local) {
      std::vector<int> ids;
      for (int e : local) ids.push_back(pr.edge_remap[comp.edge_ids[e - 1] - 1]);
      return ids;
    };
    if (!st.shared_path.empty())
      std::cout << "  shared path: " << edge_list(original(st.shared_path)) << "\n";
    if (!st.bridge.empty())
      std::cout << "  bridge: " << edge_list(original(st.bridge)) << "\n";
    if (st.shared_vertex != 0)
      std::cout << "  shared vertex: x" << comp.vertex_ids[st.shared_vertex - 1] << "\n";
    for (std::size_t c = 0; c < st.cycles.size(); ++c) {
      const auto& cyc = st.cycles[c];
      std::cout << "  cycle " << c + 1 << ": " << edge_list(original(cyc)) << "\n";
      std::cout << "    length: " << cyc.size() << "\n";
      std::cout << "    balanced: " << (is_balanced(comp.graph, cyc) ? "yes" : "no") << "\n";
      if (cyc.size() % 2 == 0)
        std::cout << "    uniformly balanced: "
                  << (is_uniformly_balanced(comp.graph, cyc) ? "yes" : "no") << "\n";
      std::cout << "    naturally oriented: "
                << (is_naturally_oriented(comp.graph, cyc) ? "yes" : "no") << "\n";
    }
  }
  if (printed == 0) std::cout << "no cycles\n";
  return 0;
}

int run_zero(const WeightedOrientedGraph& g) {
  ZeroTest z = is_zero_ideal(g);
  if (z.zero) {
    std::cout << "zero (" << reason_text(*z.reason) << ")\n";
  } else {
    IncidenceMatrix a = incidence_matrix(g);
    std::cout << "nonzero (kernel dimension " << a.matrix.cols() - rank(a.matrix) << ")\n";
  }
  return 0;
}

int run_generators(const WeightedOrientedGraph& g, const ComputeOptions& opt, bool json) {
  ToricIdealResult res = compute_toric_ideal(g, opt);
  if (json) {
    nlohmann::json out;
    out["kind"] = res.kind == IdealKind::zero        ? "zero"
                  : res.kind == IdealKind::principal ? "principal"
                                                     : "basis";
    out["method"] = method_text(res.method);
    out["certified_minimal"] = res.certified_minimal;
    out["generators"] = nlohmann::json::array();
    for (const Binomial& f : res.generators) {
      nlohmann::json gen;
      for (const Int& x : f.plus) gen["plus"].push_back(x.get_str());
      for (const Int& x : f.minus) gen["minus"].push_back(x.get_str());
      out["generators"].push_back(gen);
    }
    std::cout << out.dump(2) << "\n";
  } else if (res.kind == IdealKind::zero) {
    std::cout << "zero ideal\n";
  } else {
    for (const Binomial& f : res.generators) std::cout << format_binomial(f) << "\n";
  }
  if (!res.certified_minimal) {
    std::cerr << "warning: oracle budget exhausted; basis is not certified\n";
    return 2;
  }
  return 0;
}

int run_matrix(const WeightedOrientedGraph& g) {
  IncidenceMatrix a = incidence_matrix(g);
  for (std::size_t i = 0; i < a.matrix.rows(); ++i) {
    for (std::size_t j = 0; j < a.matrix.cols(); ++j)
      std::cout << (j ? " " : "") << a.matrix(i, j).get_str();
    std::cout << "\n";
  }
  return 0;
}

int run_verify(const WeightedOrientedGraph& g, const std::string& binomials_text,
               const ComputeOptions& opt) {
  ToricIdealResult res = compute_toric_ideal(g, opt);
  if (!res.certified_minimal) {
    std::cerr << "error: oracle budget exhausted; cannot verify against an uncertified basis\n";
    return 2;
  }
  IncidenceMatrix a = incidence_matrix(g);
  std::istringstream in(binomials_text);
  std::string line;
  int lineno = 0, index = 0;
  bool all_ok = true;
  while (std::getline(in, line)) {
    ++lineno;
    std::string body = line.substr(0, line.find('#'));
    if (body.find_first_not_of(" \t\r") == std::string::npos) continue;
    ++index;
    Binomial f;
    try {
      f = parse_binomial(body, g.edge_count());
    } catch (const Error& e) {
      std::cout << "binomial " << index << ": parse error (" << e.what() << ")\n";
      all_ok = false;
      continue;
    }
    std::vector<Int> u(f.plus.size());
    for (std::size_t k = 0; k < u.size(); ++k) u[k] = f.plus[k] - f.minus[k];
    bool in_kernel = true;
    for (const Int& y : mat_vec(a.matrix, u))
      if (y != 0) in_kernel = false;
    bool in_ideal =
        in_kernel && !res.generators.empty() &&
        verify_membership(f, res.generators, {opt.max_spairs, opt.max_degree});
    std::cout << "binomial " << index << ": " << (in_kernel ? "in kernel" : "NOT in kernel")
              << "; " << (in_ideal ? "in ideal" : "NOT in ideal") << "\n";
    if (!in_kernel || !in_ideal) all_ok = false;
  }
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"toric ideals of vertex-weighted oriented graphs"};
  app.require_subcommand(1);

  std::string graph_path, binomials_path;
  ComputeOptions opt;
  bool json = false, force_oracle = false;

  CLI::App* classify = app.add_subcommand("classify", "structure and per-cycle balance report");
  classify->add_option("file", graph_path, "graph file")->required();

  CLI::App* zero = app.add_subcommand("zero", "zero-ideal test with certifying reason");
  zero->add_option("file", graph_path, "graph file")->required();

  CLI::App* generators = app.add_subcommand("generators", "generators of the toric ideal");
  generators->add_option("file", graph_path, "graph file")->required();
  generators->add_flag("--oracle", force_oracle, "force the saturation path");
  generators->add_option("--bound", opt.max_spairs, "oracle S-pair budget");
  generators->add_option("--degree", opt.max_degree, "oracle total-degree budget");
  generators->add_flag("--json", json, "structured output");

  CLI::App* matrix = app.add_subcommand("matrix", "incidence matrix as an integer grid");
  matrix->add_option("file", graph_path, "graph file")->required();

  CLI::App* verify = app.add_subcommand("verify", "check binomials for kernel and ideal membership");
  verify->add_option("file", graph_path, "graph file")->required();
  verify->add_option("binomials", binomials_path, "file with one binomial per line")->required();
  verify->add_flag("--oracle", force_oracle, "force the saturation path");
  verify->add_option("--bound", opt.max_spairs, "oracle S-pair budget");
  verify->add_option("--degree", opt.max_degree, "oracle total-degree budget");

  CLI::App* dot = app.add_subcommand("dot", "Graphviz export");
  dot->add_option("file", graph_path, "graph file")->required();

  CLI11_PARSE(app, argc, argv);
  opt.force_oracle = force_oracle;

  try {
    WeightedOrientedGraph g = parse_graph(read_file(graph_path));
    if (classify->parsed()) return run_classify(g);
    if (zero->parsed()) return run_zero(g);
    if (generators->parsed()) return run_generators(g, opt, json);
    if (matrix->parsed()) return run_matrix(g);
    if (verify->parsed()) return run_verify(g, read_file(binomials_path), opt);
    if (dot->parsed()) {
      std::cout << to_dot(g);
      return 0;
    }
  } catch (const Error& e) {
    switch (e.code()) {
      case errc::internal_assertion:
        std::cerr << "internal assertion failure: " << e.what() << "\n";
        return 3;
      case errc::budget_exceeded:
        std::cerr << "error: " << e.what() << "\n";
        return 2;
      default:
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
