#pragma once

#include <iosfwd>
#include <string>

#include "paspt/graph.hpp"

namespace paspt {

// Plain whitespace-separated edge list, one "u v w" line per edge, 0-based
// vertex ids. Vertex count is 1 + max id unless a leading "n <count>" line
// is present (written by write_edge_list so isolated vertices round-trip).
WeightedGraph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const WeightedGraph& g);

// DIMACS shortest-path format: "p sp <n> <m>" header, "a <u> <v> <w>" arc
// lines with 1-based ids, "c" comments. Arcs repeated in both directions
// collapse to one undirected edge keeping the smaller weight.
WeightedGraph read_dimacs(std::istream& in);

// Dispatch on filename: ".gr" files parse as DIMACS, everything else as an
// edge list.
WeightedGraph load_graph(const std::string& path);
void save_edge_list(const std::string& path, const WeightedGraph& g);

// Fixed-format weight printing shared by every serializer: integral values
// print without a decimal point, so integer-weight files round-trip
// bit-exactly.
std::string format_weight(Weight w);

}  // namespace paspt
