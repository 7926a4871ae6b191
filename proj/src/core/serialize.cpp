#include "chordal/serialize.hpp"

#include <algorithm>
#include <json.hpp>
#include <sstream>

#include "chordal/error.hpp"

namespace chordal {

std::string to_edge_list(const LabeledGraph& g) {
  const Label n = static_cast<Label>(g.vertex_count());
  if (g.vertices() != label_range(n))
    fail(Errc::invalid_argument, "edge-list output needs vertex set [n]");
  std::string out = std::to_string(n) + " " + std::to_string(g.edge_count()) + "\n";
  for (const auto& [u, v] : g.edges()) {
    out += std::to_string(u);
    out += ' ';
    out += std::to_string(v);
    out += '\n';
  }
  return out;
}

LabeledGraph from_edge_list(const std::string& text) {
  std::istringstream in(text);
  long long n = -1, m = -1;
  if (!(in >> n >> m) || n < 0 || m < 0) fail(Errc::parse, "edge list: bad header");
  LabeledGraph g = LabeledGraph::empty(static_cast<Label>(n));
  for (long long i = 0; i < m; ++i) {
    long long u = 0, v = 0;
    if (!(in >> u >> v)) fail(Errc::parse, "edge list: truncated edge lines");
    if (u < 1 || v < 1 || u > n || v > n) fail(Errc::parse, "edge list: endpoint out of range");
    g.add_edge(static_cast<Label>(u), static_cast<Label>(v));
  }
  return g;
}

std::string to_json(const LabeledGraph& g) {
  nlohmann::json j;
  j["n"] = g.vertex_count();
  j["vertices"] = g.vertices();
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  return j.dump();
}

LabeledGraph from_json(const std::string& text) {
  try {
    auto j = nlohmann::json::parse(text);
    LabelSet vs = j.at("vertices").get<LabelSet>();
    std::sort(vs.begin(), vs.end());
    LabeledGraph g(vs);
    for (const auto& e : j.at("edges")) g.add_edge(e.at(0).get<Label>(), e.at(1).get<Label>());
    if (j.contains("n") && j["n"].get<std::size_t>() != g.vertex_count())
      fail(Errc::parse, "json graph: n disagrees with vertices");
    return g;
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::parse, std::string("json graph: ") + e.what());
  }
}

std::string format_graph(const LabeledGraph& g, GraphFormat fmt) {
  return fmt == GraphFormat::json ? to_json(g) + "\n" : to_edge_list(g);
}

LabeledGraph parse_graph(const std::string& text, GraphFormat fmt) {
  return fmt == GraphFormat::json ? from_json(text) : from_edge_list(text);
}

}  // namespace chordal
