#include "chordal/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "chordal/error.hpp"

namespace chordal {

LabelSet label_range(Label first, Label last) {
  LabelSet out;
  for (Label v = first; v <= last && first <= last; ++v) out.push_back(v);
  return out;
}

LabelSet set_union(const LabelSet& a, const LabelSet& b) {
  LabelSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

LabelSet set_difference(const LabelSet& a, const LabelSet& b) {
  LabelSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

LabelSet set_intersection(const LabelSet& a, const LabelSet& b) {
  LabelSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool is_subset(const LabelSet& a, const LabelSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

LabeledGraph::LabeledGraph(const LabelSet& vertices) {
  for (Label v : vertices) add_vertex(v);
}

LabeledGraph::LabeledGraph(const LabelSet& vertices, const std::vector<Edge>& edges)
    : LabeledGraph(vertices) {
  for (const auto& [u, v] : edges) add_edge(u, v);
}

LabeledGraph LabeledGraph::complete(const LabelSet& vertices) {
  LabeledGraph g(vertices);
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j) g.add_edge(vertices[i], vertices[j]);
  return g;
}

void LabeledGraph::add_vertex(Label v) {
  if (v == 0) fail(Errc::invalid_argument, "vertex labels must be positive");
  adj_.try_emplace(v);
}

void LabeledGraph::add_edge(Label u, Label v) {
  if (u == v) fail(Errc::invalid_argument, "self-loop on vertex " + std::to_string(u));
  auto iu = adj_.find(u);
  auto iv = adj_.find(v);
  if (iu == adj_.end() || iv == adj_.end())
    fail(Errc::invalid_argument,
         "edge endpoint not in vertex set: " + std::to_string(u) + " " + std::to_string(v));
  if (iu->second.insert(v).second) {
    iv->second.insert(u);
    ++edges_;
  }
}

void LabeledGraph::remove_edge(Label u, Label v) {
  auto iu = adj_.find(u);
  if (iu == adj_.end() || iu->second.erase(v) == 0) return;
  adj_[v].erase(u);
  --edges_;
}

bool LabeledGraph::has_edge(Label u, Label v) const {
  auto it = adj_.find(u);
  return it != adj_.end() && it->second.count(v) != 0;
}

LabelSet LabeledGraph::vertices() const {
  LabelSet out;
  out.reserve(adj_.size());
  for (const auto& [v, _] : adj_) out.push_back(v);
  return out;
}

std::vector<Edge> LabeledGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edges_);
  for (const auto& [u, nbrs] : adj_)
    for (auto it = nbrs.upper_bound(u); it != nbrs.end(); ++it) out.emplace_back(u, *it);
  return out;
}

const std::set<Label>& LabeledGraph::neighbors(Label v) const {
  auto it = adj_.find(v);
  if (it == adj_.end()) fail(Errc::invalid_argument, "vertex not in graph: " + std::to_string(v));
  return it->second;
}

bool LabeledGraph::is_clique(const LabelSet& s) const {
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto& nb = neighbors(s[i]);
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!nb.count(s[j])) return false;
  }
  return true;
}

bool LabeledGraph::is_independent(const LabelSet& s) const {
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto& nb = neighbors(s[i]);
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (nb.count(s[j])) return false;
  }
  return true;
}

LabeledGraph LabeledGraph::induced(const LabelSet& s) const {
  LabeledGraph h(s);
  for (Label u : s) {
    for (Label v : neighbors(u))
      if (v > u && h.has_vertex(v)) h.add_edge(u, v);
  }
  return h;
}

LabeledGraph LabeledGraph::complement() const {
  LabelSet vs = vertices();
  LabeledGraph h(vs);
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (!has_edge(vs[i], vs[j])) h.add_edge(vs[i], vs[j]);
  return h;
}

LabelMap phi_map(const LabelSet& a, const LabelSet& b) {
  if (a.size() != b.size())
    fail(Errc::invalid_argument, "phi_map: size mismatch " + std::to_string(a.size()) + " vs " +
                                     std::to_string(b.size()));
  LabelMap m;
  for (std::size_t i = 0; i < a.size(); ++i) m.emplace(a[i], b[i]);
  return m;
}

LabelMap merge_maps(std::initializer_list<LabelMap> parts) {
  LabelMap out;
  for (const auto& p : parts)
    for (const auto& kv : p)
      if (!out.insert(kv).second)
        fail(Errc::invalid_argument, "merge_maps: overlapping domains at " + std::to_string(kv.first));
  return out;
}

LabeledGraph relabel(const LabeledGraph& g, const LabelMap& m) {
  std::set<Label> image;
  for (const auto& [from, to] : m) {
    if (!g.has_vertex(from))
      fail(Errc::invalid_argument, "relabel: label " + std::to_string(from) + " not in graph");
    if (!image.insert(to).second)
      fail(Errc::invalid_argument, "relabel: map is not injective at " + std::to_string(to));
  }
  auto map_label = [&](Label v) {
    auto it = m.find(v);
    return it == m.end() ? v : it->second;
  };
  LabeledGraph h;
  for (Label v : g.vertices()) {
    if (!m.count(v) && image.count(v))
      fail(Errc::invalid_argument, "relabel: image collides with untouched label " + std::to_string(v));
    h.add_vertex(map_label(v));
  }
  for (const auto& [u, v] : g.edges()) h.add_edge(map_label(u), map_label(v));
  return h;
}

LabeledGraph glue(const LabeledGraph& g1, const LabeledGraph& g2, const LabelSet& y) {
  LabelSet v1 = g1.vertices();
  LabelSet v2 = g2.vertices();
  if (set_intersection(v1, v2) != y) fail(Errc::invalid_argument, "glue: overlap differs from the gluing set");
  if (!g1.is_clique(y) || !g2.is_clique(y)) fail(Errc::invalid_argument, "glue: gluing set is not a clique");
  LabeledGraph h = g1;
  for (Label v : v2) h.add_vertex(v);
  for (const auto& [u, v] : g2.edges()) h.add_edge(u, v);
  return h;
}

namespace {

bool simplicial_within(const LabeledGraph& g, Label v, const std::vector<char>& alive,
                       const std::map<Label, std::size_t>& index) {
  std::vector<Label> nb;
  for (Label u : g.neighbors(v))
    if (alive[index.at(u)]) nb.push_back(u);
  for (std::size_t i = 0; i < nb.size(); ++i) {
    const auto& ni = g.neighbors(nb[i]);
    for (std::size_t j = i + 1; j < nb.size(); ++j)
      if (!ni.count(nb[j])) return false;
  }
  return true;
}

}  // namespace

bool is_simplicial(const LabeledGraph& g, Label v) {
  const auto& nb = g.neighbors(v);
  LabelSet s(nb.begin(), nb.end());
  return g.is_clique(s);
}

int EvaporationSequence::layer_of(Label v) const {
  for (std::size_t i = 0; i < layers.size(); ++i)
    if (std::binary_search(layers[i].begin(), layers[i].end(), v)) return static_cast<int>(i) + 1;
  return 0;
}

EvaporationSequence evaporation_sequence(const LabeledGraph& g, const LabelSet& x) {
  LabelSet vs = g.vertices();
  if (!is_subset(x, vs)) fail(Errc::invalid_argument, "evaporation_sequence: exception set not in graph");
  // X = V(G) leaves nothing to evaporate, so only a proper X must be a clique.
  if (x.size() < vs.size() && !g.is_clique(x))
    fail(Errc::invalid_argument, "evaporation_sequence: exception set is not a clique");
  std::map<Label, std::size_t> index;
  for (std::size_t i = 0; i < vs.size(); ++i) index.emplace(vs[i], i);
  std::vector<char> alive(vs.size(), 1);
  std::vector<char> exempt(vs.size(), 0);
  for (Label v : x) exempt[index[v]] = 1;

  EvaporationSequence seq;
  seq.exception_set = x;
  std::size_t remaining = vs.size() - x.size();
  while (remaining > 0) {
    LabelSet layer;
    for (std::size_t i = 0; i < vs.size(); ++i)
      if (alive[i] && !exempt[i] && simplicial_within(g, vs[i], alive, index)) layer.push_back(vs[i]);
    if (layer.empty()) fail(Errc::not_chordal, "evaporation stalled: graph is not chordal");
    for (Label v : layer) alive[index[v]] = 0;
    remaining -= layer.size();
    seq.layers.push_back(std::move(layer));
  }
  return seq;
}

bool is_chordal(const LabeledGraph& g) {
  try {
    evaporation_sequence(g, {});
    return true;
  } catch (const Error& e) {
    if (e.code() == Errc::not_chordal) return false;
    throw;
  }
}

int max_clique_size(const LabeledGraph& g) {
  EvaporationSequence seq = evaporation_sequence(g, {});
  std::map<Label, std::size_t> position;
  std::size_t pos = 0;
  for (const auto& layer : seq.layers)
    for (Label v : layer) position.emplace(v, pos++);
  int best = 0;
  for (const auto& [v, p] : position) {
    int later = 0;
    for (Label u : g.neighbors(v))
      if (position[u] > p) ++later;
    best = std::max(best, later + 1);
  }
  return best;
}

std::vector<LabelSet> connected_components(const LabeledGraph& g) {
  std::vector<LabelSet> out;
  std::set<Label> seen;
  for (Label s : g.vertices()) {
    if (seen.count(s)) continue;
    LabelSet comp;
    std::deque<Label> queue{s};
    seen.insert(s);
    while (!queue.empty()) {
      Label v = queue.front();
      queue.pop_front();
      comp.push_back(v);
      for (Label u : g.neighbors(v))
        if (seen.insert(u).second) queue.push_back(u);
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const LabeledGraph& g) { return connected_components(g).size() <= 1; }

LabelSet neighborhood(const LabeledGraph& g, const LabelSet& s) {
  std::set<Label> out;
  for (Label v : s)
    for (Label u : g.neighbors(v))
      if (!std::binary_search(s.begin(), s.end(), u)) out.insert(u);
  return LabelSet(out.begin(), out.end());
}

std::optional<SplitPartition> split_partition(const LabeledGraph& g) {
  LabelSet vs = g.vertices();
  const std::size_t n = vs.size();
  if (n == 0) return SplitPartition{};

  // Degree-sequence recognition: with degrees sorted descending and
  // m = max{i : d_i >= i-1}, g is split iff sum_{i<=m} d_i = m(m-1) + sum_{i>m} d_i,
  // and then the top m vertices form a clique of a split partition.
  std::vector<Label> order = vs;
  std::stable_sort(order.begin(), order.end(),
                   [&](Label a, Label b) { return g.degree(a) > g.degree(b); });
  std::size_t m = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (g.degree(order[i]) + 1 >= i + 1) m = i + 1;
  std::size_t head = 0, tail = 0;
  for (std::size_t i = 0; i < n; ++i) (i < m ? head : tail) += g.degree(order[i]);
  if (head != m * (m - 1) + tail) return std::nullopt;

  std::vector<char> in_k(n, 0);
  std::map<Label, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(vs[i], i);
  for (std::size_t i = 0; i < m; ++i) in_k[index[order[i]]] = 1;

  // Any two split partitions differ by moving at most one vertex out of the
  // clique and at most one vertex into it, so one witness plus all single
  // moves and swaps enumerates every partition.
  std::vector<std::size_t> nk(n, 0), ni(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (Label u : g.neighbors(vs[i])) (in_k[index[u]] ? nk : ni)[i]++;
  const std::size_t ksize = m;
  std::vector<char> may_be_clique(n, 0), may_be_indep(n, 0);
  for (std::size_t i = 0; i < n; ++i) (in_k[i] ? may_be_clique : may_be_indep)[i] = 1;
  for (std::size_t v = 0; v < n; ++v) {
    if (in_k[v] && ni[v] == 0) may_be_indep[v] = 1;
    if (!in_k[v] && nk[v] == ksize) may_be_clique[v] = 1;
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (!in_k[v]) continue;
    for (std::size_t u = 0; u < n; ++u) {
      if (in_k[u]) continue;
      std::size_t adj = g.has_edge(vs[v], vs[u]) ? 1 : 0;
      if (nk[u] - adj == ksize - 1 && ni[v] - adj == 0) {
        may_be_indep[v] = 1;
        may_be_clique[u] = 1;
      }
    }
  }
  SplitPartition p;
  for (std::size_t i = 0; i < n; ++i) {
    if (may_be_clique[i] && may_be_indep[i])
      p.questioning.push_back(vs[i]);
    else if (may_be_clique[i])
      p.always_clique.push_back(vs[i]);
    else
      p.always_independent.push_back(vs[i]);
  }
  return p;
}

}  // namespace chordal
