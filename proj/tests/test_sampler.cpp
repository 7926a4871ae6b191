#include <gtest/gtest.h>

#include <set>
#include <thread>

#include "chordal/counter.hpp"
#include "chordal/error.hpp"
#include "chordal/oracle.hpp"
#include "chordal/sampler.hpp"
#include "chordal/serialize.hpp"

using namespace chordal;

namespace {

CountingContext filled(int n, int omega) {
  CountingContext ctx(n, omega);
  ctx.fill_all();
  return ctx;
}

struct Key {
  CounterClass cls;
  CounterArgs args;
};

// Reachable keys (root clique at most omega) with exactly n vertices.
std::vector<Key> keys_with_vertices(int n, int omega) {
  std::vector<Key> keys;
  for (int t = 0; t <= n; ++t)
    for (int x = 0; x <= std::min(n, omega); ++x) {
      int k = n - x;
      keys.push_back({CounterClass::g_tilde_1, {t, x, 0, k, 0}});
      if (x >= 1) {
        keys.push_back({CounterClass::g_tilde_ge2, {t, x, 0, k, 0}});
        for (int z = 0; z < x; ++z) {
          keys.push_back({CounterClass::g, {t, x, 0, k, z}});
          keys.push_back({CounterClass::g_tilde, {t, x, 0, k, z}});
          keys.push_back({CounterClass::g_tilde_p, {t, x, 0, k, z}});
        }
      }
      if (t < 1) continue;
      for (int l = 1; x + l <= std::min(n, omega); ++l) {
        int kf = n - x - l;
        keys.push_back({CounterClass::f, {t, x, l, kf, 0}});
        keys.push_back({CounterClass::f_tilde, {t, x, l, kf, 0}});
        keys.push_back({CounterClass::f_tilde_p, {t, x, l, kf, x}});
        for (int z = 0; z <= x; ++z) keys.push_back({CounterClass::f_tilde_p_z, {t, x, l, kf, z}});
      }
    }
  return keys;
}

std::string describe(const Key& key) {
  const CounterArgs& a = key.args;
  return std::string(class_name(key.cls)) + "(t=" + std::to_string(a.t) + " x=" + std::to_string(a.x) +
         " l=" + std::to_string(a.l) + " k=" + std::to_string(a.k) + " z=" + std::to_string(a.z) + ")";
}

void expect_valid(const LabeledGraph& g, int n, int omega, bool connected) {
  ASSERT_EQ(g.vertices(), label_range(static_cast<Label>(n)));
  ASSERT_TRUE(is_chordal(g));
  ASSERT_LE(max_clique_size(g), omega);
  if (connected) ASSERT_TRUE(is_connected(g));
}

}  // namespace

TEST(Sampler, BaseCases) {
  CountingContext ctx = filled(6, 6);
  RandomStream rng(1);
  EXPECT_EQ(sample_chordal(0, ctx, rng).vertex_count(), 0u);
  EXPECT_EQ(sample_chordal(1, ctx, rng), LabeledGraph::empty(1));
  for (int i = 0; i < 20; ++i) EXPECT_EQ(sample_connected_chordal(2, ctx, rng), LabeledGraph::complete({1, 2}));
  EXPECT_EQ(sample_class(CounterClass::f, {1, 0, 3, 0, 0}, ctx, rng), LabeledGraph::complete({1, 2, 3}));
  for (int x = 1; x <= 4; ++x)
    EXPECT_EQ(sample_class(CounterClass::g, {0, x, 0, 0, 0}, ctx, rng),
              LabeledGraph::complete(label_range(static_cast<Label>(x))));
}

TEST(Sampler, PathsForTwoStepClass) {
  CountingContext ctx = filled(3, 3);
  std::vector<LabeledGraph> support = oracle::class_members(CounterClass::g_tilde_1, {2, 0, 0, 3, 0}, 3);
  ASSERT_EQ(support.size(), 3u);
  RandomStream rng(2);
  std::vector<LabeledGraph> samples;
  for (int i = 0; i < 6000; ++i) samples.push_back(sample_class(CounterClass::g_tilde_1, {2, 0, 0, 3, 0}, ctx, rng));
  oracle::UniformityResult r = oracle::uniformity_test(samples, support);
  EXPECT_TRUE(r.pass) << r.failure << " statistic=" << r.statistic;
}

TEST(Sampler, EmptyClassIsAnError) {
  CountingContext ctx = filled(5, 5);
  RandomStream rng(3);
  CountingContext w1 = filled(3, 1);
  EXPECT_THROW(sample_connected_chordal(2, w1, rng), Error);
  try {
    sample_class(CounterClass::g_tilde_p, {1, 1, 0, 1, 0}, ctx, rng);
    ADD_FAILURE() << "no error raised";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::empty_class);
  }
  CountingContext w2 = filled(5, 2);
  EXPECT_THROW(sample_class(CounterClass::f, {1, 0, 3, 0, 0}, w2, rng), Error);
}

TEST(Sampler, UnfilledContextIsAnError) {
  CountingContext ctx(5, 5);
  RandomStream rng(4);
  try {
    sample_chordal(4, ctx, rng);
    ADD_FAILURE() << "no error raised";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_filled);
  }
}

TEST(Sampler, OutputsAreValid) {
  RandomStream rng(5);
  for (int omega : {1, 2, 3, 6, 12}) {
    CountingContext ctx = filled(12, omega);
    for (int n = 0; n <= 12; ++n)
      for (int i = 0; i < 15; ++i) {
        expect_valid(sample_chordal(n, ctx, rng), n, omega, false);
        // With omega = 1 only edgeless graphs exist.
        if (n == 1 || (n >= 2 && omega >= 2)) expect_valid(sample_connected_chordal(n, ctx, rng), n, omega, true);
      }
  }
}

TEST(Sampler, EveryClassOutputIsAMember) {
  RandomStream rng(6);
  for (int omega : {2, 3, 5}) {
    CountingContext ctx = filled(5, omega);
    for (int n = 1; n <= 5; ++n)
      for (const Key& key : keys_with_vertices(n, omega)) {
        if (sgn(ctx.value(key.cls, key.args)) == 0) continue;
        for (int i = 0; i < 12; ++i) {
          LabeledGraph g = sample_class(key.cls, key.args, ctx, rng);
          ASSERT_TRUE(oracle::in_counter_class(key.cls, key.args, omega, g))
              << describe(key) << " omega=" << omega << "\n" << to_edge_list(g);
        }
      }
  }
}

TEST(Sampler, ClassSupportAndUniformityUpToFourVertices) {
  RandomStream rng(7);
  const int omega = 4;
  CountingContext ctx = filled(4, omega);
  int tested = 0;
  for (int n = 1; n <= 4; ++n)
    for (const Key& key : keys_with_vertices(n, omega)) {
      std::vector<LabeledGraph> support = oracle::class_members(key.cls, key.args, omega);
      ASSERT_EQ(ctx.value(key.cls, key.args), support.size()) << describe(key);
      if (support.size() < 2) continue;
      std::vector<LabeledGraph> samples;
      for (std::size_t i = 0; i < 150 * support.size(); ++i)
        samples.push_back(sample_class(key.cls, key.args, ctx, rng));
      std::set<LabeledGraph> seen(samples.begin(), samples.end());
      ASSERT_EQ(seen, std::set<LabeledGraph>(support.begin(), support.end())) << describe(key);
      oracle::UniformityResult r = oracle::uniformity_test(samples, support, 0.9999);
      EXPECT_TRUE(r.pass) << describe(key) << " " << r.failure << " statistic=" << r.statistic;
      ++tested;
    }
  EXPECT_GT(tested, 20);
}

TEST(Sampler, ConnectedThreeAndTrees) {
  RandomStream rng(8);
  CountingContext ctx = filled(4, 4);
  std::vector<LabeledGraph> samples;
  for (int i = 0; i < 8000; ++i) samples.push_back(sample_connected_chordal(3, ctx, rng));
  oracle::BruteCounts bc3 = oracle::brute_counts(3, {true, false, true});
  std::vector<LabeledGraph> conn3;
  for (std::uint32_t m : bc3.chordal_masks) {
    LabeledGraph g = oracle::graph_from_mask(3, m);
    if (is_connected(g)) conn3.push_back(g);
  }
  ASSERT_EQ(conn3.size(), 4u);
  EXPECT_TRUE(oracle::uniformity_test(samples, conn3).pass);

  CountingContext trees = filled(4, 2);
  std::vector<LabeledGraph> tree_samples;
  for (int i = 0; i < 16000; ++i) tree_samples.push_back(sample_connected_chordal(4, trees, rng));
  std::vector<LabeledGraph> all_trees;
  for (auto& g : oracle::enumerate_graphs(4))
    if (is_connected(g) && g.edge_count() == 3) all_trees.push_back(g);
  ASSERT_EQ(all_trees.size(), 16u);
  oracle::UniformityResult r = oracle::uniformity_test(tree_samples, all_trees);
  EXPECT_TRUE(r.pass) << r.failure;
}

TEST(Sampler, SameSeedSameSequence) {
  CountingContext ctx = filled(10, 10);
  RandomStream a(99), b(99);
  for (int i = 0; i < 50; ++i) EXPECT_EQ(sample_chordal(10, ctx, a), sample_chordal(10, ctx, b));
}

TEST(Sampler, ConcurrentStreamsMatchSequential) {
  CountingContext ctx = filled(12, 12);
  const int per = 40;
  std::vector<std::vector<LabeledGraph>> par(4), seq(4);
  std::vector<std::thread> pool;
  for (int s = 0; s < 4; ++s)
    pool.emplace_back([&, s] {
      RandomStream rng = RandomStream::derived(5, s);
      for (int i = 0; i < per; ++i) par[s].push_back(sample_chordal(12, ctx, rng));
    });
  for (auto& t : pool) t.join();
  for (int s = 0; s < 4; ++s) {
    RandomStream rng = RandomStream::derived(5, s);
    for (int i = 0; i < per; ++i) seq[s].push_back(sample_chordal(12, ctx, rng));
  }
  EXPECT_EQ(par, seq);
}

TEST(Sampler, OperationCountIsQuartic) {
  RandomStream rng(10);
  for (int n : {8, 16, 24, 32}) {
    CountingContext ctx = filled(n, n);
    std::uint64_t worst = 0;
    for (int i = 0; i < 20; ++i) {
      SamplerStats stats;
      sample_chordal(n, ctx, rng, &stats);
      worst = std::max(worst, stats.big_ops);
    }
    std::uint64_t n4 = static_cast<std::uint64_t>(n) * n * n * n;
    EXPECT_LE(worst, 20 * n4) << "n=" << n;
    EXPECT_GT(worst, 0u);
  }
}
