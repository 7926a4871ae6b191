#include "chordal/oracle.hpp"

#include <algorithm>
#include <boost/math/distributions/chi_squared.hpp>
#include <map>

#include "chordal/error.hpp"
#include "chordal/serialize.hpp"

namespace chordal::oracle {

int pair_bit(int n, Label u, Label v) {
  if (u > v) std::swap(u, v);
  int idx = 0;
  for (Label a = 1; a < u; ++a) idx += n - static_cast<int>(a);
  return idx + static_cast<int>(v - u) - 1;
}

std::uint32_t graph_mask(const LabeledGraph& g) {
  const int n = static_cast<int>(g.vertex_count());
  if (g.vertices() != label_range(n)) fail(Errc::invalid_argument, "graph_mask needs vertex set [n]");
  std::uint32_t mask = 0;
  for (const auto& [u, v] : g.edges()) mask |= std::uint32_t{1} << pair_bit(n, u, v);
  return mask;
}

LabeledGraph graph_from_mask(int n, std::uint32_t mask) {
  LabeledGraph g = LabeledGraph::empty(n);
  int bit = 0;
  for (Label u = 1; u <= static_cast<Label>(n); ++u)
    for (Label v = u + 1; v <= static_cast<Label>(n); ++v, ++bit)
      if (mask >> bit & 1u) g.add_edge(u, v);
  return g;
}

void for_each_graph(int n, const std::function<void(std::uint32_t)>& visit) {
  if (n < 0 || n > kMaxEnumerationN) fail(Errc::domain, "enumeration supports n <= 7");
  const int pairs = n * (n - 1) / 2;
  const std::uint64_t total = std::uint64_t{1} << pairs;
  for (std::uint64_t m = 0; m < total; ++m) visit(static_cast<std::uint32_t>(m));
}

std::vector<LabeledGraph> enumerate_graphs(int n) {
  std::vector<LabeledGraph> out;
  for_each_graph(n, [&](std::uint32_t m) { out.push_back(graph_from_mask(n, m)); });
  return out;
}

namespace {

// Adjacency rows as bit masks over vertex index 0..n-1.
std::vector<std::uint32_t> adjacency_bits(int n, std::uint32_t mask) {
  std::vector<std::uint32_t> adj(n, 0);
  int bit = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++bit)
      if (mask >> bit & 1u) {
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
      }
  return adj;
}

bool clique_bits(const std::vector<std::uint32_t>& adj, std::uint32_t s) {
  for (std::uint32_t r = s; r; r &= r - 1) {
    int v = __builtin_ctz(r);
    if ((s & ~adj[v] & ~(1u << v)) != 0) return false;
  }
  return true;
}

bool independent_bits(const std::vector<std::uint32_t>& adj, std::uint32_t s) {
  for (std::uint32_t r = s; r; r &= r - 1)
    if (adj[__builtin_ctz(r)] & s) return false;
  return true;
}

// sides[0]: vertices seen on the clique side, sides[1]: on the independent side.
bool split_sides(int n, const std::vector<std::uint32_t>& adj, std::uint32_t sides[2]) {
  const std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
  sides[0] = sides[1] = 0;
  bool any = false;
  for (std::uint32_t s = 0; s <= full; ++s) {
    if (clique_bits(adj, s) && independent_bits(adj, full & ~s)) {
      any = true;
      sides[0] |= s;
      sides[1] |= full & ~s;
    }
    if (s == full) break;
  }
  return any;
}

}  // namespace

bool has_long_induced_cycle(const LabeledGraph& g) {
  LabelSet vs = g.vertices();
  const int n = static_cast<int>(vs.size());
  if (n > 20) fail(Errc::domain, "induced-cycle search supports at most 20 vertices");
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    if (__builtin_popcount(s) < 4) continue;
    LabelSet sub;
    for (int i = 0; i < n; ++i)
      if (s >> i & 1u) sub.push_back(vs[i]);
    LabeledGraph h = g.induced(sub);
    bool all_two = true;
    for (Label v : sub)
      if (h.degree(v) != 2) all_two = false;
    if (all_two && is_connected(h)) return true;
  }
  return false;
}

SplitClassification classify_split(const LabeledGraph& g) {
  LabelSet vs = g.vertices();
  const int n = static_cast<int>(vs.size());
  if (n > 20) fail(Errc::domain, "split enumeration supports at most 20 vertices");
  std::vector<std::uint32_t> adj(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (g.has_edge(vs[i], vs[j])) adj[i] |= 1u << j;
  std::uint32_t sides[2];
  SplitClassification out;
  out.split = split_sides(n, adj, sides);
  if (!out.split) return out;
  for (int i = 0; i < n; ++i) {
    bool c = sides[0] >> i & 1u, ind = sides[1] >> i & 1u;
    (c && ind ? out.questioning : c ? out.always_clique : out.always_independent).push_back(vs[i]);
  }
  return out;
}

BruteCounts brute_counts(int n, const BruteOptions& opts) {
  BruteCounts bc;
  bc.n = n;
  bc.chordal_all.assign(n + 1, 0);
  bc.chordal_connected.assign(n + 1, 0);
  for_each_graph(n, [&](std::uint32_t mask) {
    if (opts.split) {
      auto adj = adjacency_bits(n, mask);
      std::uint32_t sides[2];
      if (split_sides(n, adj, sides)) {
        ++bc.split_total;
        const int q = __builtin_popcount(sides[0] & sides[1]);
        (q == 0 ? bc.split_q0 : q == 1 ? bc.split_q1 : bc.split_qge2)++;
      }
    }
    if (opts.chordal) {
      LabeledGraph g = graph_from_mask(n, mask);
      if (!is_chordal(g)) return;
      const int w = n == 0 ? 0 : max_clique_size(g);
      const bool conn = n >= 1 && is_connected(g);
      for (int om = w; om <= n; ++om) {
        ++bc.chordal_all[om];
        if (conn) ++bc.chordal_connected[om];
      }
      if (opts.keep_chordal_masks) bc.chordal_masks.push_back(mask);
    }
  });
  return bc;
}

namespace {

// Components of g minus s, with the evaporation time of each and its neighborhood.
struct Piece {
  LabelSet vertices;
  int time = 0;
  LabelSet nbrs;
};

std::vector<Piece> pieces_outside(const LabeledGraph& g, const LabelSet& s, const EvaporationSequence& seq) {
  std::vector<Piece> out;
  LabeledGraph rest = g.induced(set_difference(g.vertices(), s));
  for (auto& comp : connected_components(rest)) {
    Piece p;
    for (Label v : comp) p.time = std::max(p.time, seq.layer_of(v));
    p.nbrs = neighborhood(g, comp);
    p.vertices = std::move(comp);
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

bool in_counter_class(CounterClass cls, const CounterArgs& a, int omega, const LabeledGraph& g) {
  const int total = class_vertex_count(cls, a);
  if (g.vertices() != label_range(total)) return false;
  if (!is_connected(g) || !is_chordal(g)) return false;
  if (total > 0 && max_clique_size(g) > omega) return false;
  const LabelSet xs = label_range(a.x);
  if (!g.is_clique(xs)) return false;
  const EvaporationSequence seq = evaporation_sequence(g, xs);

  if (!class_is_f_family(cls)) {
    if (seq.time() > a.t) return false;
    auto pieces = pieces_outside(g, xs, seq);
    const LabelSet zs = label_range(a.z);
    for (const auto& p : pieces) {
      const bool sees_all = is_subset(xs, p.nbrs);
      switch (cls) {
        case CounterClass::g:
          if (set_difference(p.nbrs, zs).empty()) return false;
          break;
        case CounterClass::g_tilde:
        case CounterClass::g_tilde_p:
          if (set_difference(p.nbrs, zs).empty() || p.time != a.t) return false;
          if (cls == CounterClass::g_tilde_p && sees_all) return false;
          break;
        default:
          if (!sees_all || p.time != a.t) return false;
          break;
      }
    }
    if (cls == CounterClass::g_tilde_1) return pieces.size() == 1;
    if (cls == CounterClass::g_tilde_ge2) return pieces.size() >= 2;
    return true;
  }

  if (seq.time() != a.t) return false;
  const LabelSet ls = label_range(a.x + 1, a.x + a.l);
  if (seq.layers.empty() || seq.layers.back() != ls) return false;
  const LabelSet root = set_union(xs, ls);
  if (!g.is_clique(root)) return false;
  const LabelSet keep = cls == CounterClass::f_tilde_p_z ? label_range(a.z) : xs;
  if (!is_connected(g.induced(set_difference(g.vertices(), keep)))) return false;
  if (cls == CounterClass::f) return true;
  auto pieces = pieces_outside(g, root, seq);
  if (pieces.empty()) return false;
  for (const auto& p : pieces) {
    if (p.time != a.t - 1) return false;
    if (cls != CounterClass::f_tilde && is_subset(root, p.nbrs)) return false;
  }
  return true;
}

std::vector<LabeledGraph> class_members(CounterClass cls, const CounterArgs& a, int omega) {
  std::vector<LabeledGraph> out;
  const int total = class_vertex_count(cls, a);
  for_each_graph(total, [&](std::uint32_t mask) {
    LabeledGraph g = graph_from_mask(total, mask);
    if (in_counter_class(cls, a, omega, g)) out.push_back(std::move(g));
  });
  return out;
}

UniformityResult uniformity_test(const std::vector<LabeledGraph>& samples, const std::vector<LabeledGraph>& support,
                                 double level) {
  UniformityResult res;
  if (support.empty()) {
    res.failure = "empty support";
    return res;
  }
  std::map<LabeledGraph, std::uint64_t> bins;
  for (const auto& g : support) bins.emplace(g, 0);
  for (const auto& g : samples) {
    auto it = bins.find(g);
    if (it == bins.end()) {
      res.failure = "sample outside the support: " + to_json(g);
      return res;
    }
    ++it->second;
  }
  const double expected = static_cast<double>(samples.size()) / static_cast<double>(bins.size());
  double stat = 0.0;
  for (const auto& [g, count] : bins) {
    const double d = static_cast<double>(count) - expected;
    stat += d * d / expected;
  }
  res.statistic = stat;
  res.degrees_of_freedom = bins.size() - 1;
  if (res.degrees_of_freedom == 0) {
    res.pass = true;
    return res;
  }
  boost::math::chi_squared dist(static_cast<double>(res.degrees_of_freedom));
  res.critical = boost::math::quantile(dist, level);
  res.pass = stat <= res.critical;
  return res;
}

}  // namespace chordal::oracle
