#pragma once

#include <iosfwd>
#include <string>

#include "modnet/graph.hpp"
#include "modnet/partition.hpp"

namespace modnet {

// Edge-list format: one edge per line, "u v" or "u v w", whitespace
// separated; '#' starts a comment.  Vertex tokens are arbitrary strings
// mapped to ids in first-appearance order; the weight defaults to 1 and may
// be an integer, fraction "a/b" or decimal.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list_file(const std::string& path, const Graph& g);

// Partition format: lines "vertex_token part_token".  Vertex tokens resolve
// against the graph's labels (or decimal ids when the graph is unlabeled);
// every vertex must be assigned.
Partition read_partition(std::istream& in, const Graph& g);
Partition read_partition_file(const std::string& path, const Graph& g);
void write_partition(std::ostream& out, const Graph& g, const Partition& p);

// Loads the Fig.-1 dolphin network and validates the expected shape
// (62 vertices, 159 edges), failing with a descriptive error otherwise.
Graph read_dolphin_file(const std::string& path);

}  // namespace modnet
