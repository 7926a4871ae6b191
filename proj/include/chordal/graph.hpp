#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace chordal {

using Label = std::uint32_t;
// Sorted, duplicate-free.
using LabelSet = std::vector<Label>;
using LabelMap = std::map<Label, Label>;
using Edge = std::pair<Label, Label>;

LabelSet label_range(Label first, Label last);  // [first, last], empty if first > last
inline LabelSet label_range(Label n) { return label_range(1, n); }
LabelSet set_union(const LabelSet& a, const LabelSet& b);
LabelSet set_difference(const LabelSet& a, const LabelSet& b);
LabelSet set_intersection(const LabelSet& a, const LabelSet& b);
bool is_subset(const LabelSet& a, const LabelSet& b);

class LabeledGraph {
 public:
  LabeledGraph() = default;
  explicit LabeledGraph(const LabelSet& vertices);
  LabeledGraph(const LabelSet& vertices, const std::vector<Edge>& edges);

  static LabeledGraph complete(const LabelSet& vertices);
  static LabeledGraph empty(Label n) { return LabeledGraph(label_range(n)); }

  void add_vertex(Label v);
  void add_edge(Label u, Label v);
  void remove_edge(Label u, Label v);

  bool has_vertex(Label v) const { return adj_.count(v) != 0; }
  bool has_edge(Label u, Label v) const;
  std::size_t vertex_count() const { return adj_.size(); }
  std::size_t edge_count() const { return edges_; }
  LabelSet vertices() const;
  std::vector<Edge> edges() const;  // (u < v), lexicographic
  const std::set<Label>& neighbors(Label v) const;
  std::size_t degree(Label v) const { return neighbors(v).size(); }

  bool is_clique(const LabelSet& s) const;
  bool is_independent(const LabelSet& s) const;
  LabeledGraph induced(const LabelSet& s) const;
  LabeledGraph complement() const;

  bool operator==(const LabeledGraph& o) const { return adj_ == o.adj_; }
  bool operator<(const LabeledGraph& o) const { return adj_ < o.adj_; }

 private:
  std::map<Label, std::set<Label>> adj_;
  std::size_t edges_ = 0;
};

// Maps the i-th smallest of a to the i-th smallest of b.
LabelMap phi_map(const LabelSet& a, const LabelSet& b);
// Composite of several phi maps; the pieces must have disjoint domains.
LabelMap merge_maps(std::initializer_list<LabelMap> parts);

LabeledGraph relabel(const LabeledGraph& g, const LabelMap& m);
LabeledGraph glue(const LabeledGraph& g1, const LabeledGraph& g2, const LabelSet& y);

bool is_simplicial(const LabeledGraph& g, Label v);

struct EvaporationSequence {
  LabelSet exception_set;
  std::vector<LabelSet> layers;

  int time() const { return static_cast<int>(layers.size()); }
  // Layer index (1-based) of v, 0 for exception vertices.
  int layer_of(Label v) const;
};

EvaporationSequence evaporation_sequence(const LabeledGraph& g, const LabelSet& x);
bool is_chordal(const LabeledGraph& g);
int max_clique_size(const LabeledGraph& g);

std::vector<LabelSet> connected_components(const LabeledGraph& g);
bool is_connected(const LabeledGraph& g);
// Vertices outside s adjacent to some vertex of s.
LabelSet neighborhood(const LabeledGraph& g, const LabelSet& s);

struct SplitPartition {
  LabelSet always_clique;
  LabelSet always_independent;
  LabelSet questioning;
};

// Empty optional when g is not a split graph.
std::optional<SplitPartition> split_partition(const LabeledGraph& g);

}  // namespace chordal
