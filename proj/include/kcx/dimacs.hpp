#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "kcx/graph.hpp"

namespace kcx {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// DIMACS edge format: `p edge <n> <m>`, `e <u> <v>` (1-based), `c ...`
// comments. Vertices become 0..n-1.
Graph read_dimacs(std::istream& in);
Graph read_dimacs_file(const std::string& path);

// Requires dense ids. Each comment line is written as `c <line>`.
void write_dimacs(std::ostream& out, const Graph& g, const std::string& comment = "");
std::string to_dimacs(const Graph& g, const std::string& comment = "");

// SHA-256 (hex) of a canonical text form listing vertex ids and edges.
std::string graph_digest(const Graph& g);

std::string sha256_hex(const std::string& text);

}  // namespace kcx
