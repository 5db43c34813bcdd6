#pragma once

#include "molex/graph.hpp"

#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace molex {

/// graph6 encoding (no header, no trailing newline).
std::string to_graph6(const MolecularGraph& g);

/// Decodes one graph6 line. A leading ">>graph6<<" header is accepted.
/// Throws ParseError on malformed input and the `build` errors on graphs that
/// are not molecular.
MolecularGraph from_graph6(std::string_view text);

/// Writes the plain adjacency-list form: "n m" then one "u v" line per edge.
void write_adjacency_list(std::ostream& out, const MolecularGraph& g);

enum class GraphFormat { Graph6, AdjacencyList };

struct ParsedGraph {
    MolecularGraph graph;
    int line = 0;  ///< 1-based line on which the graph starts
};

/// Reads every graph in a stream. The format is detected from the first
/// non-blank line: two integers mean adjacency lists, anything else graph6.
/// Adjacency-list input may hold several graphs back to back. ParseError
/// messages carry the offending line number.
std::vector<ParsedGraph> read_graphs(std::istream& in);

GraphFormat detect_format(std::string_view first_line);

}  // namespace molex
