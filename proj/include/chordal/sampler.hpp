#pragma once

#include <cstdint>

#include "chordal/counter.hpp"
#include "chordal/graph.hpp"
#include "chordal/random.hpp"

namespace chordal {

// Big-integer operations spent on choice weights and draws.
struct SamplerStats {
  std::uint64_t big_ops = 0;
};

// All samplers read a filled context (CountingContext::fill_all) and never
// modify it, so one context can serve many threads with separate streams.
LabeledGraph sample_chordal(int n, const CountingContext& ctx, RandomStream& rng, SamplerStats* stats = nullptr);
LabeledGraph sample_connected_chordal(int n, const CountingContext& ctx, RandomStream& rng,
                                      SamplerStats* stats = nullptr);
// Uniform member of the class counted by ctx.value(cls, args), on [class_vertex_count].
LabeledGraph sample_class(CounterClass cls, const CounterArgs& args, const CountingContext& ctx, RandomStream& rng,
                          SamplerStats* stats = nullptr);

}  // namespace chordal
