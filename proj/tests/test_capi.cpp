#include <gtest/gtest.h>

#include <set>
#include <string>
#include <vector>

#include "chordal/chordal.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  chordal_string_free(s);
  return out;
}

struct Context {
  chordal_context* ptr = nullptr;
  Context(int n, int omega) { EXPECT_EQ(chordal_context_create(n, omega, &ptr), CHORDAL_OK); }
  ~Context() { chordal_context_destroy(ptr); }
};

struct Rng {
  chordal_rng* ptr = nullptr;
  explicit Rng(std::uint64_t seed) { EXPECT_EQ(chordal_rng_create(seed, &ptr), CHORDAL_OK); }
  ~Rng() { chordal_rng_destroy(ptr); }
};

}  // namespace

TEST(CApi, VersionAndStatusNames) {
  EXPECT_NE(std::string(chordal_version()), "");
  EXPECT_STREQ(chordal_status_name(CHORDAL_OK), "ok");
  EXPECT_NE(std::string(chordal_status_name(CHORDAL_ERR_DOMAIN)), std::string(chordal_status_name(CHORDAL_OK)));
}

TEST(CApi, Counts) {
  Context ctx(12, 12);
  char* out = nullptr;
  ASSERT_EQ(chordal_count_connected(ctx.ptr, 12, &out), CHORDAL_OK);
  EXPECT_EQ(take(out), "4818917841228328");
  ASSERT_EQ(chordal_count_all(ctx.ptr, 0, &out), CHORDAL_OK);
  EXPECT_EQ(take(out), "1");
  EXPECT_EQ(chordal_context_omega(ctx.ptr), 12);

  Context trees(7, 2);
  ASSERT_EQ(chordal_count_connected(trees.ptr, 7, &out), CHORDAL_OK);
  EXPECT_EQ(take(out), "16807");
}

TEST(CApi, ErrorsReportStatusAndMessage) {
  chordal_context* ctx = nullptr;
  EXPECT_EQ(chordal_context_create(5, 0, &ctx), CHORDAL_ERR_DOMAIN);
  EXPECT_EQ(ctx, nullptr);
  EXPECT_NE(std::string(chordal_last_error()), "");
  EXPECT_EQ(chordal_context_create(5, 5, nullptr), CHORDAL_ERR_INVALID_ARGUMENT);

  Context c(5, 5);
  char* out = nullptr;
  EXPECT_EQ(chordal_count_connected(c.ptr, 9, &out), CHORDAL_ERR_DOMAIN);
  EXPECT_EQ(out, nullptr);

  Rng rng(1);
  chordal_graph* g = nullptr;
  EXPECT_EQ(chordal_sample(c.ptr, 4, 0, rng.ptr, &g), CHORDAL_ERR_NOT_FILLED);
  EXPECT_EQ(g, nullptr);

  EXPECT_EQ(chordal_approx_count(70, "2", nullptr, &out), CHORDAL_ERR_DOMAIN);
  EXPECT_EQ(chordal_approx_count(70, "x", nullptr, &out), CHORDAL_ERR_PARSE);
  EXPECT_EQ(chordal_graph_parse("2 1\n1 1\n", CHORDAL_FORMAT_EDGE_LIST, &g), CHORDAL_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(chordal_graph_parse("{", CHORDAL_FORMAT_JSON, &g), CHORDAL_ERR_PARSE);
}

TEST(CApi, SampleAndInspect) {
  Context ctx(8, 3);
  ASSERT_EQ(chordal_context_fill(ctx.ptr), CHORDAL_OK);
  Rng rng(7);
  for (int i = 0; i < 50; ++i) {
    chordal_graph* g = nullptr;
    ASSERT_EQ(chordal_sample(ctx.ptr, 8, 1, rng.ptr, &g), CHORDAL_OK);
    EXPECT_EQ(chordal_graph_vertex_count(g), 8u);
    int chordal = 0, clique = 0;
    ASSERT_EQ(chordal_graph_is_chordal(g, &chordal), CHORDAL_OK);
    ASSERT_EQ(chordal_graph_max_clique(g, &clique), CHORDAL_OK);
    EXPECT_EQ(chordal, 1);
    EXPECT_LE(clique, 3);

    std::vector<std::uint32_t> vs(chordal_graph_vertices(g, nullptr, 0));
    chordal_graph_vertices(g, vs.data(), vs.size());
    EXPECT_EQ(vs, (std::vector<std::uint32_t>{1, 2, 3, 4, 5, 6, 7, 8}));
    std::size_t m = chordal_graph_edge_count(g);
    std::vector<std::uint32_t> es(2 * m);
    EXPECT_EQ(chordal_graph_edges(g, es.data(), m), m);
    EXPECT_GE(m, 7u);
    for (std::size_t e = 0; e < m; ++e) EXPECT_LT(es[2 * e], es[2 * e + 1]);

    char* text = nullptr;
    ASSERT_EQ(chordal_graph_format(g, CHORDAL_FORMAT_JSON, &text), CHORDAL_OK);
    chordal_graph* back = nullptr;
    ASSERT_EQ(chordal_graph_parse(text, CHORDAL_FORMAT_JSON, &back), CHORDAL_OK);
    chordal_string_free(text);
    char* a = nullptr;
    char* b = nullptr;
    chordal_graph_format(g, CHORDAL_FORMAT_EDGE_LIST, &a);
    chordal_graph_format(back, CHORDAL_FORMAT_EDGE_LIST, &b);
    EXPECT_EQ(take(a), take(b));
    chordal_graph_destroy(back);
    chordal_graph_destroy(g);
  }
}

TEST(CApi, StreamsAreReproducible) {
  Context ctx(9, 9);
  chordal_context_fill(ctx.ptr);
  auto draw = [&](std::uint64_t stream) {
    chordal_rng* rng = nullptr;
    chordal_rng_create_stream(3, stream, &rng);
    chordal_graph* g = nullptr;
    chordal_sample(ctx.ptr, 9, 0, rng, &g);
    char* text = nullptr;
    chordal_graph_format(g, CHORDAL_FORMAT_EDGE_LIST, &text);
    chordal_graph_destroy(g);
    chordal_rng_destroy(rng);
    return take(text);
  };
  EXPECT_EQ(draw(4), draw(4));
  std::set<std::string> distinct;
  for (std::uint64_t s = 0; s < 10; ++s) distinct.insert(draw(s));
  EXPECT_GT(distinct.size(), 5u);
}

TEST(CApi, Approximation) {
  chordal_thresholds th = chordal_default_thresholds();
  EXPECT_EQ(th.n1, 65);
  int g = 0, f = 0;
  ASSERT_EQ(chordal_threshold_g("1e-6", nullptr, &g), CHORDAL_OK);
  EXPECT_EQ(g, 138);
  ASSERT_EQ(chordal_threshold_f("0.5", &th, &f), CHORDAL_OK);
  EXPECT_EQ(f, 65);

  char* out = nullptr;
  ASSERT_EQ(chordal_approx_count(12, "0.001", nullptr, &out), CHORDAL_OK);
  Context ctx(12, 12);
  char* exact = nullptr;
  chordal_count_all(ctx.ptr, 12, &exact);
  EXPECT_EQ(take(out), take(exact));

  chordal_approx_sampler* s = nullptr;
  ASSERT_EQ(chordal_approx_sampler_create(150, "0.01", nullptr, &s), CHORDAL_OK);
  Rng rng(2);
  for (int i = 0; i < 10; ++i) {
    chordal_graph* graph = nullptr;
    int iterations = 0;
    ASSERT_EQ(chordal_approx_sample(s, rng.ptr, &graph, &iterations), CHORDAL_OK);
    EXPECT_GE(iterations, 1);
    int split = 0;
    chordal_graph_is_split(graph, &split);
    EXPECT_EQ(split, 1);
    EXPECT_EQ(chordal_graph_vertex_count(graph), 150u);
    chordal_graph_destroy(graph);
  }
  chordal_approx_sampler_destroy(s);
}
