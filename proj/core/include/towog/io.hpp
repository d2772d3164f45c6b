#ifndef TOWOG_IO_HPP
#define TOWOG_IO_HPP

#include <string>
#include <vector>

#include "towog/graph.hpp"
#include "towog/toric.hpp"

namespace towog {

/// Parses the line-oriented graph format:
///
///   # comment
///   vertices <n>
///   weights <w1> ... <wn>
///   edges
///   <tail> <head>
///   ...
///
/// Blank lines and `#` comments are ignored. Throws errc::parse_error with a
/// line-numbered message, then validates the graph.
WeightedOrientedGraph parse_graph(const std::string& text);

/// Inverse of parse_graph: parse_graph(print_graph(g)) == g.
std::string print_graph(const WeightedOrientedGraph& g);

/// One binomial as `e<id>^<exp> ... - e<id>^<exp> ...`: space-separated
/// factors with ascending ids and explicit exponents, plus monomial first.
std::string format_binomial(const Binomial& f);

/// Parses the format produced by format_binomial. `edge_count` fixes the
/// exponent vector length. Throws errc::parse_error.
Binomial parse_binomial(const std::string& text, int edge_count);

/// Graphviz export: weights as vertex labels, orientations as arrows.
std::string to_dot(const WeightedOrientedGraph& g);

std::string read_file(const std::string& path);

}  // namespace towog

#endif
