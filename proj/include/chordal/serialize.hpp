#pragma once

#include <string>

#include "chordal/graph.hpp"

namespace chordal {

enum class GraphFormat { edge_list, json };

// Edge-list text: "n m" then m lines "u v". Requires vertex set [n].
std::string to_edge_list(const LabeledGraph& g);
LabeledGraph from_edge_list(const std::string& text);

// {"n": ..., "vertices": [...], "edges": [[u, v], ...]}, edges sorted.
std::string to_json(const LabeledGraph& g);
LabeledGraph from_json(const std::string& text);

std::string format_graph(const LabeledGraph& g, GraphFormat fmt);
LabeledGraph parse_graph(const std::string& text, GraphFormat fmt);

}  // namespace chordal
