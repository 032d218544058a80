#ifndef SBE_DIMACS_HPP
#define SBE_DIMACS_HPP

#include "sbe/graph.hpp"

#include <iosfwd>
#include <string>

namespace sbe {

// DIMACS-style graph text. Written form is canonical and byte-stable:
//   p edge <n> <m>
//   e <u> <v>          (m lines, 1-based, u < v, ascending lexicographic, LF)
std::string write_dimacs(const Graph& g);
void write_dimacs(std::ostream& out, const Graph& g);

// Accepts the canonical form plus leading 'c' comment lines and unordered
// endpoints; rejects self-loops, duplicates, out-of-range endpoints and
// edge-count mismatches. Throws std::runtime_error with a line number.
Graph read_dimacs(std::istream& in);
Graph read_dimacs_file(const std::string& path);
void write_dimacs_file(const std::string& path, const Graph& g);

} // namespace sbe

#endif
