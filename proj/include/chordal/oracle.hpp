#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "chordal/counter.hpp"
#include "chordal/graph.hpp"

// Brute-force ground truth for small vertex counts.
namespace chordal::oracle {

constexpr int kMaxEnumerationN = 7;

// Bit index of the pair (u, v), u < v, in lexicographic pair order on [n].
int pair_bit(int n, Label u, Label v);
std::uint32_t graph_mask(const LabeledGraph& g);  // requires vertex set [n]
LabeledGraph graph_from_mask(int n, std::uint32_t mask);

// Visits every labeled graph on [n] once, in increasing mask order.
void for_each_graph(int n, const std::function<void(std::uint32_t mask)>& visit);
std::vector<LabeledGraph> enumerate_graphs(int n);

// Searches all vertex subsets for an induced cycle of length at least 4.
bool has_long_induced_cycle(const LabeledGraph& g);

struct SplitClassification {
  bool split = false;
  LabelSet always_clique;
  LabelSet always_independent;
  LabelSet questioning;
};

// Tries every vertex subset as the clique side.
SplitClassification classify_split(const LabeledGraph& g);

struct BruteCounts {
  int n = 0;
  // Index omega = 0..n; entry omega counts graphs with maximum clique <= omega.
  std::vector<std::uint64_t> chordal_all;
  std::vector<std::uint64_t> chordal_connected;
  std::uint64_t split_total = 0;
  std::uint64_t split_q0 = 0;
  std::uint64_t split_q1 = 0;
  std::uint64_t split_qge2 = 0;
  std::vector<std::uint32_t> chordal_masks;  // filled when requested
};

struct BruteOptions {
  bool chordal = true;
  bool split = true;
  bool keep_chordal_masks = false;
};

BruteCounts brute_counts(int n, const BruteOptions& opts = {});

// Direct check of the counter-class definition on a graph.
bool in_counter_class(CounterClass cls, const CounterArgs& a, int omega, const LabeledGraph& g);
std::vector<LabeledGraph> class_members(CounterClass cls, const CounterArgs& a, int omega);

struct UniformityResult {
  double statistic = 0.0;
  double critical = 0.0;
  std::size_t degrees_of_freedom = 0;
  bool pass = false;
  std::string failure;
};

// Pearson chi-square against the uniform law on `support`.
UniformityResult uniformity_test(const std::vector<LabeledGraph>& samples, const std::vector<LabeledGraph>& support,
                                 double level = 0.999);

}  // namespace chordal::oracle
