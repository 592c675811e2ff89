#pragma once

#include <string>
#include <string_view>

#include "gulf/graph.hpp"

namespace gulf {

class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

enum class GraphFormat { graph6, edge_list };

Graph parse_graph(std::string_view text, GraphFormat format);
std::string serialize_graph(const Graph &g, GraphFormat format);

Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph &g);

// "n <count>" header then one "u v" pair per line.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph &g);

// Same layout as the edge list, pairs read as arcs u -> v.
DiGraph parse_digraph(std::string_view text);
std::string to_digraph_text(const DiGraph &d);

// Guesses the format from content: a leading "n " header means edge list.
Graph parse_graph_auto(std::string_view text);
Graph read_graph_file(const std::string &path);
std::string read_text_file(const std::string &path);
void write_text_file(const std::string &path, const std::string &text);

} // namespace gulf
