#ifndef ONEPLANAR_GRAPH6_HPP
#define ONEPLANAR_GRAPH6_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "oneplanar/graph.hpp"

namespace onep {

// Standard graph6 encoding: N(n) bytes at offset 63, then the upper triangle
// in column-major order packed six bits per byte, offset 63.
std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& line);

// One graph per non-empty line. Lines carrying a ">>graph6<<" header prefix
// are accepted.
std::vector<Graph> read_graph6_stream(std::istream& in);

} // namespace onep

#endif
