#include "towog/io.hpp"

#include <fstream>
#include <sstream>

namespace towog {

namespace {

[[noreturn]] void parse_fail(int line, const std::string& message) {
  fail(errc::parse_error, "line " + std::to_string(line) + ": " + message);
}

Int parse_int(const std::string& token, int line) {
  try {
    return Int(token);
  } catch (const std::invalid_argument&) {
    parse_fail(line, "expected an integer, got '" + token + "'");
  }
}

}  // namespace

WeightedOrientedGraph parse_graph(const std::string& text) {
  WeightedOrientedGraph g;
  bool saw_vertices = false, saw_weights = false, in_edges = false;
  std::istringstream input(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(input, raw)) {
    ++lineno;
    std::string line = raw.substr(0, raw.find('#'));
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;
    if (word == "vertices") {
      long n = 0;
      if (!(ls >> n) || n < 1) parse_fail(lineno, "vertices needs a positive count");
      g.vertex_count = static_cast<int>(n);
      saw_vertices = true;
    } else if (word == "weights") {
      if (!saw_vertices) parse_fail(lineno, "weights before vertices");
      std::string tok;
      while (ls >> tok) g.weights.push_back(parse_int(tok, lineno));
      if (static_cast<int>(g.weights.size()) != g.vertex_count)
        parse_fail(lineno, "expected " + std::to_string(g.vertex_count) + " weights, got " +
                               std::to_string(g.weights.size()));
      saw_weights = true;
    } else if (word == "edges") {
      if (!saw_vertices) parse_fail(lineno, "edges before vertices");
      in_edges = true;
    } else if (in_edges) {
      long tail = 0, head = 0;
      std::istringstream es(line);
      if (!(es >> tail >> head)) parse_fail(lineno, "expected 'tail head'");
      std::string extra;
      if (es >> extra) parse_fail(lineno, "trailing tokens after edge '" + extra + "'");
      g.edges.push_back({static_cast<int>(tail), static_cast<int>(head)});
    } else {
      parse_fail(lineno, "unexpected token '" + word + "'");
    }
  }
  if (!saw_vertices) fail(errc::parse_error, "missing 'vertices' section");
  if (!saw_weights) fail(errc::parse_error, "missing 'weights' section");
  validate(g);
  return g;
}

std::string print_graph(const WeightedOrientedGraph& g) {
  std::ostringstream out;
  out << "vertices " << g.vertex_count << "\n";
  out << "weights";
  for (const Int& w : g.weights) out << " " << w.get_str();
  out << "\nedges\n";
  for (const Edge& e : g.edges) out << e.tail << " " << e.head << "\n";
  return out.str();
}

std::string format_binomial(const Binomial& f) {
  auto monomial = [](const std::vector<Int>& expo) {
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = 0; k < expo.size(); ++k) {
      if (expo[k] == 0) continue;
      if (!first) out << " ";
      out << "e" << k + 1 << "^" << expo[k].get_str();
      first = false;
    }
    if (first) out << "1";
    return out.str();
  };
  return monomial(f.plus) + " - " + monomial(f.minus);
}

Binomial parse_binomial(const std::string& text, int edge_count) {
  auto side = text.find(" - ");
  if (side == std::string::npos) fail(errc::parse_error, "binomial needs a ' - ' separator");
  Binomial f;
  f.plus.assign(edge_count, 0);
  f.minus.assign(edge_count, 0);
  auto parse_side = [&](const std::string& part, std::vector<Int>& expo) {
    std::istringstream ps(part);
    std::string tok;
    while (ps >> tok) {
      if (tok == "1") continue;
      auto caret = tok.find('^');
      if (tok.empty() || tok[0] != 'e' || caret == std::string::npos)
        fail(errc::parse_error, "bad factor '" + tok + "', expected e<id>^<exp>");
      int id = 0;
      try {
        id = std::stoi(tok.substr(1, caret - 1));
      } catch (const std::exception&) {
        fail(errc::parse_error, "bad edge id in '" + tok + "'");
      }
      if (id < 1 || id > edge_count)
        fail(errc::parse_error, "edge id out of range in '" + tok + "'");
      Int e;
      try {
        e = Int(tok.substr(caret + 1));
      } catch (const std::invalid_argument&) {
        fail(errc::parse_error, "bad exponent in '" + tok + "'");
      }
      if (e < 1) fail(errc::parse_error, "exponent must be positive in '" + tok + "'");
      expo[id - 1] += e;
    }
  };
  parse_side(text.substr(0, side), f.plus);
  parse_side(text.substr(side + 3), f.minus);
  for (int k = 0; k < edge_count; ++k)
    if (f.plus[k] != 0 && f.minus[k] != 0)
      fail(errc::parse_error, "edge e" + std::to_string(k + 1) + " appears on both sides");
  return f;
}

std::string to_dot(const WeightedOrientedGraph& g) {
  std::ostringstream out;
  out << "digraph D {\n";
  for (int v = 1; v <= g.vertex_count; ++v)
    out << "  x" << v << " [label=\"x" << v << " (w=" << g.weight(v).get_str() << ")\"];\n";
  for (std::size_t j = 0; j < g.edges.size(); ++j)
    out << "  x" << g.edges[j].tail << " -> x" << g.edges[j].head << " [label=\"e" << j + 1
        << "\"];\n";
  out << "}\n";
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::parse_error, "cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace towog
