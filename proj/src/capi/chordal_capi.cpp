#include "chordal/chordal.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "chordal/approx_split.hpp"
#include "chordal/counter.hpp"
#include "chordal/error.hpp"
#include "chordal/graph.hpp"
#include "chordal/random.hpp"
#include "chordal/sampler.hpp"
#include "chordal/serialize.hpp"

struct chordal_context {
  chordal::CountingContext ctx;
};
struct chordal_rng {
  chordal::RandomStream stream;
};
struct chordal_graph {
  chordal::LabeledGraph g;
};
struct chordal_approx_sampler {
  chordal::ApproxChordalSampler sampler;
};

namespace {

thread_local std::string last_error;

chordal_status status_of(chordal::Errc code) {
  using chordal::Errc;
  switch (code) {
    case Errc::invalid_argument: return CHORDAL_ERR_INVALID_ARGUMENT;
    case Errc::domain: return CHORDAL_ERR_DOMAIN;
    case Errc::not_chordal: return CHORDAL_ERR_NOT_CHORDAL;
    case Errc::empty_class: return CHORDAL_ERR_EMPTY_CLASS;
    case Errc::not_filled: return CHORDAL_ERR_NOT_FILLED;
    case Errc::rejection_cap: return CHORDAL_ERR_REJECTION_CAP;
    case Errc::parse: return CHORDAL_ERR_PARSE;
    case Errc::internal: return CHORDAL_ERR_INTERNAL;
  }
  return CHORDAL_ERR_INTERNAL;
}

template <typename Body>
chordal_status guarded(Body&& body) {
  try {
    body();
    last_error.clear();
    return CHORDAL_OK;
  } catch (const chordal::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return CHORDAL_ERR_OUT_OF_MEMORY;
  } catch (const std::exception& e) {
    last_error = e.what();
    return CHORDAL_ERR_INTERNAL;
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(bool cond, const char* what) {
  if (!cond) chordal::fail(chordal::Errc::invalid_argument, what);
}

chordal::Thresholds thresholds_of(const chordal_thresholds* th) {
  chordal::Thresholds out;
  if (th) {
    out.n1 = th->n1;
    out.n2 = th->n2;
    out.n3 = th->n3;
  }
  return out;
}

chordal::GraphFormat format_of(chordal_format fmt) {
  return fmt == CHORDAL_FORMAT_JSON ? chordal::GraphFormat::json : chordal::GraphFormat::edge_list;
}

}  // namespace

extern "C" {

const char* chordal_version(void) { return "1.0.0"; }

const char* chordal_status_name(chordal_status status) {
  switch (status) {
    case CHORDAL_OK: return "ok";
    case CHORDAL_ERR_INVALID_ARGUMENT: return "invalid argument";
    case CHORDAL_ERR_DOMAIN: return "argument outside the domain";
    case CHORDAL_ERR_NOT_CHORDAL: return "graph is not chordal";
    case CHORDAL_ERR_EMPTY_CLASS: return "requested class is empty";
    case CHORDAL_ERR_NOT_FILLED: return "context is not filled";
    case CHORDAL_ERR_REJECTION_CAP: return "rejection cap exceeded";
    case CHORDAL_ERR_PARSE: return "parse error";
    case CHORDAL_ERR_OUT_OF_MEMORY: return "out of memory";
    case CHORDAL_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* chordal_last_error(void) { return last_error.c_str(); }

void chordal_string_free(char* s) { std::free(s); }

chordal_status chordal_context_create(int n_max, int omega, chordal_context** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = new chordal_context{chordal::CountingContext(n_max, omega)};
  });
}

void chordal_context_destroy(chordal_context* ctx) { delete ctx; }

int chordal_context_omega(const chordal_context* ctx) { return ctx ? ctx->ctx.omega() : 0; }

chordal_status chordal_count_connected(chordal_context* ctx, int n, char** out) {
  return guarded([&] {
    require(ctx && out, "null argument");
    *out = copy_string(chordal::to_decimal(ctx->ctx.count_connected(n)));
  });
}

chordal_status chordal_count_all(chordal_context* ctx, int n, char** out) {
  return guarded([&] {
    require(ctx && out, "null argument");
    *out = copy_string(chordal::to_decimal(ctx->ctx.count_all(n)));
  });
}

chordal_status chordal_context_fill(chordal_context* ctx) {
  return guarded([&] {
    require(ctx != nullptr, "null context");
    ctx->ctx.fill_all();
  });
}

chordal_status chordal_rng_create(uint64_t seed, chordal_rng** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = new chordal_rng{chordal::RandomStream(seed)};
  });
}

chordal_status chordal_rng_create_stream(uint64_t seed, uint64_t stream, chordal_rng** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = new chordal_rng{chordal::RandomStream::derived(seed, stream)};
  });
}

void chordal_rng_destroy(chordal_rng* rng) { delete rng; }

chordal_status chordal_sample(const chordal_context* ctx, int n, int connected, chordal_rng* rng,
                              chordal_graph** out) {
  return guarded([&] {
    require(ctx && rng && out, "null argument");
    const auto& c = ctx->ctx;
    chordal::LabeledGraph g = connected ? chordal::sample_connected_chordal(n, c, rng->stream)
                                        : chordal::sample_chordal(n, c, rng->stream);
    *out = new chordal_graph{std::move(g)};
  });
}

chordal_thresholds chordal_default_thresholds(void) {
  chordal::Thresholds d;
  return chordal_thresholds{d.n1, d.n2, d.n3};
}

chordal_status chordal_approx_count(int n, const char* epsilon, const chordal_thresholds* th, char** out) {
  return guarded([&] {
    require(epsilon && out, "null argument");
    auto eps = chordal::parse_epsilon(epsilon);
    *out = copy_string(chordal::to_decimal(chordal::approx_count_chordal(n, eps, thresholds_of(th))));
  });
}

chordal_status chordal_threshold_f(const char* epsilon, const chordal_thresholds* th, int* out) {
  return guarded([&] {
    require(epsilon && out, "null argument");
    *out = chordal::threshold_f(chordal::parse_epsilon(epsilon), thresholds_of(th));
  });
}

chordal_status chordal_threshold_g(const char* epsilon, const chordal_thresholds* th, int* out) {
  return guarded([&] {
    require(epsilon && out, "null argument");
    *out = chordal::threshold_g(chordal::parse_epsilon(epsilon), thresholds_of(th));
  });
}

chordal_status chordal_approx_sampler_create(int n, const char* epsilon, const chordal_thresholds* th,
                                             chordal_approx_sampler** out) {
  return guarded([&] {
    require(epsilon && out, "null argument");
    auto eps = chordal::parse_epsilon(epsilon);
    *out = new chordal_approx_sampler{chordal::ApproxChordalSampler(n, eps, thresholds_of(th))};
  });
}

void chordal_approx_sampler_destroy(chordal_approx_sampler* s) { delete s; }

chordal_status chordal_approx_sample(const chordal_approx_sampler* s, chordal_rng* rng, chordal_graph** out,
                                     int* iterations) {
  return guarded([&] {
    require(s && rng && out, "null argument");
    chordal::SplitSample r = s->sampler.sample(rng->stream);
    if (iterations) *iterations = r.iterations;
    *out = new chordal_graph{std::move(r.graph)};
  });
}

void chordal_graph_destroy(chordal_graph* g) { delete g; }

size_t chordal_graph_vertex_count(const chordal_graph* g) { return g ? g->g.vertex_count() : 0; }

size_t chordal_graph_edge_count(const chordal_graph* g) { return g ? g->g.edge_count() : 0; }

size_t chordal_graph_vertices(const chordal_graph* g, uint32_t* buf, size_t cap) {
  if (!g) return 0;
  auto vs = g->g.vertices();
  for (size_t i = 0; i < vs.size() && i < cap; ++i) buf[i] = vs[i];
  return vs.size();
}

size_t chordal_graph_edges(const chordal_graph* g, uint32_t* buf, size_t cap) {
  if (!g) return 0;
  auto es = g->g.edges();
  for (size_t i = 0; i < es.size() && i < cap; ++i) {
    buf[2 * i] = es[i].first;
    buf[2 * i + 1] = es[i].second;
  }
  return es.size();
}

chordal_status chordal_graph_format(const chordal_graph* g, chordal_format fmt, char** out) {
  return guarded([&] {
    require(g && out, "null argument");
    *out = copy_string(chordal::format_graph(g->g, format_of(fmt)));
  });
}

chordal_status chordal_graph_parse(const char* text, chordal_format fmt, chordal_graph** out) {
  return guarded([&] {
    require(text && out, "null argument");
    *out = new chordal_graph{chordal::parse_graph(text, format_of(fmt))};
  });
}

chordal_status chordal_graph_is_chordal(const chordal_graph* g, int* out) {
  return guarded([&] {
    require(g && out, "null argument");
    *out = chordal::is_chordal(g->g) ? 1 : 0;
  });
}

chordal_status chordal_graph_is_split(const chordal_graph* g, int* out) {
  return guarded([&] {
    require(g && out, "null argument");
    *out = chordal::split_partition(g->g).has_value() ? 1 : 0;
  });
}

chordal_status chordal_graph_max_clique(const chordal_graph* g, int* out) {
  return guarded([&] {
    require(g && out, "null argument");
    *out = chordal::max_clique_size(g->g);
  });
}

}  // extern "C"
