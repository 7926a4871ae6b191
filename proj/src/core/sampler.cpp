#include "chordal/sampler.hpp"

#include <string>

#include "chordal/error.hpp"

namespace chordal {

namespace {

class Sampler {
 public:
  Sampler(const CountingContext& ctx, RandomStream& rng, SamplerStats* stats)
      : ctx_(ctx), rng_(rng), stats_(stats) {}

  LabeledGraph chordal(int n);
  LabeledGraph connected(int n);
  LabeledGraph g(int t, int x, int k, int z);
  LabeledGraph g_tilde(int t, int x, int k, int z, bool proper);
  LabeledGraph g_tilde_1(int t, int x, int k);
  LabeledGraph g_tilde_ge2(int t, int x, int k);
  LabeledGraph f(int t, int x, int l, int k);
  LabeledGraph f_tilde(int t, int x, int l, int k);
  LabeledGraph f_tilde_p(int t, int x, int l, int k, int z);

 private:
  BigNat product(std::initializer_list<const BigNat*> factors) {
    BigNat out = 1;
    for (const BigNat* f : factors) {
      if (sgn(*f) == 0) return 0;
      out *= *f;
      count(1);
    }
    return out;
  }
  const BigNat& binom(int a, int b) const { return ctx_.binomial(a, b); }
  std::size_t choose(const std::vector<BigNat>& w) {
    count(w.size() + 1);
    return categorical(w, rng_);
  }
  void count(std::uint64_t ops) {
    if (stats_) stats_->big_ops += ops;
  }

  const CountingContext& ctx_;
  RandomStream& rng_;
  SamplerStats* stats_;
};

// Relabels the part [from_first, from_first + |to| - 1] of a graph onto `to`.
LabelMap shift(Label from_first, const LabelSet& to) {
  return phi_map(label_range(from_first, from_first + static_cast<Label>(to.size()) - 1), to);
}

LabeledGraph Sampler::chordal(int n) {
  if (n == 0) return LabeledGraph();
  std::vector<BigNat> w(n + 1, BigNat(0));
  for (int k = 1; k <= n; ++k)
    w[k] = product({&binom(n - 1, k - 1), &ctx_.count_connected(k), &ctx_.count_all(n - k)});
  const int k = static_cast<int>(choose(w));
  LabeledGraph g1 = connected(k);
  LabeledGraph g2 = chordal(n - k);
  const LabelSet all = label_range(n);
  LabelSet c = random_subset_containing(all, k, 1, rng_);
  LabelSet d = set_difference(all, c);
  LabeledGraph a = relabel(g1, phi_map(label_range(k), c));
  LabeledGraph b = relabel(g2, phi_map(label_range(n - k), d));
  return glue(a, b, {});
}

LabeledGraph Sampler::connected(int n) {
  std::vector<BigNat> w(n + 1, BigNat(0));
  for (int t = 1; t <= n; ++t) w[t] = ctx_.g_tilde_1(t, 0, n);
  const int t = static_cast<int>(choose(w));
  return g_tilde_1(t, 0, n);
}

LabeledGraph Sampler::g_tilde_1(int t, int x, int k) {
  std::vector<BigNat> w(k + 1, BigNat(0));
  for (int l = 1; l <= k; ++l) w[l] = product({&binom(k, l), &ctx_.f(t, x, l, k - l)});
  const int l = static_cast<int>(choose(w));
  LabeledGraph g1 = f(t, x, l, k - l);
  const LabelSet free = label_range(x + 1, x + k);
  LabelSet lset = random_subset(free, l, rng_);
  LabelSet rest = set_difference(free, lset);
  return relabel(g1, merge_maps({shift(x + 1, lset), shift(x + l + 1, rest)}));
}

LabeledGraph Sampler::f(int t, int x, int l, int k) {
  if (t == 1 && k == 0) return LabeledGraph::complete(label_range(x + l));
  std::vector<BigNat> w(k + 1, BigNat(0));
  for (int kp = 1; kp <= k; ++kp)
    w[kp] = product({&binom(k, kp), &ctx_.f_tilde(t, x, l, kp), &ctx_.g(t - 2, x + l, k - kp, x)});
  const int kp = static_cast<int>(choose(w));
  LabeledGraph g1 = f_tilde(t, x, l, kp);
  LabeledGraph g2 = g(t - 2, x + l, k - kp, x);
  const LabelSet free = label_range(x + l + 1, x + l + k);
  LabelSet a = random_subset(free, kp, rng_);
  LabelSet b = set_difference(free, a);
  return glue(relabel(g1, shift(x + l + 1, a)), relabel(g2, shift(x + l + 1, b)), label_range(x + l));
}

LabeledGraph Sampler::g(int t, int x, int k, int z) {
  if (t == 0 && k == 0) return LabeledGraph::complete(label_range(x));
  std::vector<BigNat> w(k + 1, BigNat(0));
  for (int kp = 0; kp <= k; ++kp)
    w[kp] = product({&binom(k, kp), &ctx_.g_tilde(t, x, kp, z), &ctx_.g(t - 1, x, k - kp, z)});
  const int kp = static_cast<int>(choose(w));
  LabeledGraph g1 = g_tilde(t, x, kp, z, false);
  LabeledGraph g2 = g(t - 1, x, k - kp, z);
  const LabelSet free = label_range(x + 1, x + k);
  LabelSet a = random_subset(free, kp, rng_);
  LabelSet b = set_difference(free, a);
  return glue(relabel(g1, shift(x + 1, a)), relabel(g2, shift(x + 1, b)), label_range(x));
}

LabeledGraph Sampler::g_tilde(int t, int x, int k, int z, bool proper) {
  if (k == 0) return LabeledGraph::complete(label_range(x));
  const int xmax = proper ? x - 1 : x;
  struct Choice {
    int kp, xp;
  };
  std::vector<Choice> options;
  std::vector<BigNat> w;
  const BigNat* rest_row = nullptr;
  BigNat root;
  for (int kp = 1; kp <= k; ++kp) {
    rest_row = proper ? &ctx_.g_tilde_p(t, x, k - kp, z) : &ctx_.g_tilde(t, x, k - kp, z);
    for (int xp = 1; xp <= xmax; ++xp) {
      root = binom(x, xp) - binom(z, xp);
      options.push_back({kp, xp});
      w.push_back(product({&root, &binom(k - 1, kp - 1), &ctx_.g_tilde_1(t, xp, kp), rest_row}));
    }
  }
  const Choice ch = options[choose(w)];
  LabeledGraph g1 = g_tilde_1(t, ch.xp, ch.kp);
  LabeledGraph g2 = g_tilde(t, x, k - ch.kp, z, proper);
  LabelSet xs = random_subset_not_within(label_range(x), ch.xp, label_range(z), rng_);
  const LabelSet free = label_range(x + 1, x + k);
  LabelSet c = random_subset_containing(free, ch.kp, x + 1, rng_);
  LabelSet d = set_difference(free, c);
  LabeledGraph a = relabel(g1, merge_maps({phi_map(label_range(ch.xp), xs), shift(ch.xp + 1, c)}));
  LabeledGraph b = relabel(g2, shift(x + 1, d));
  return glue(a, b, xs);
}

LabeledGraph Sampler::g_tilde_ge2(int t, int x, int k) {
  std::vector<BigNat> w1(k, BigNat(0)), w2(k, BigNat(0));
  BigNat s1 = 0, s2 = 0;
  for (int kp = 1; kp <= k - 1; ++kp) {
    const BigNat& c = binom(k - 1, kp - 1);
    const BigNat& one = ctx_.g_tilde_1(t, x, kp);
    w1[kp] = product({&c, &one, &ctx_.g_tilde_1(t, x, k - kp)});
    w2[kp] = product({&c, &one, &ctx_.g_tilde_ge2(t, x, k - kp)});
    s1 += w1[kp];
    s2 += w2[kp];
  }
  const bool second = choose({s1, s2}) == 1;
  const int kp = static_cast<int>(choose(second ? w2 : w1));
  LabeledGraph g1 = g_tilde_1(t, x, kp);
  LabeledGraph g2 = second ? g_tilde_ge2(t, x, k - kp) : g_tilde_1(t, x, k - kp);
  const LabelSet free = label_range(x + 1, x + k);
  LabelSet c = random_subset_containing(free, kp, x + 1, rng_);
  LabelSet d = set_difference(free, c);
  return glue(relabel(g1, shift(x + 1, c)), relabel(g2, shift(x + 1, d)), label_range(x));
}

LabeledGraph Sampler::f_tilde(int t, int x, int l, int k) {
  const BigNat& s1 = ctx_.f_tilde_p(t, x, l, k);
  std::vector<BigNat> w2(k + 1, BigNat(0)), w3(k + 1, BigNat(0));
  BigNat s2 = 0, s3 = 0;
  for (int kp = 1; kp <= k; ++kp) {
    const BigNat& c = binom(k, kp);
    w2[kp] = product({&c, &ctx_.g_tilde_1(t - 1, x + l, kp), &ctx_.f_tilde_p(t, x, l, k - kp)});
    w3[kp] = product({&c, &ctx_.g_tilde_ge2(t - 1, x + l, kp), &ctx_.g_tilde_p(t - 1, x + l, k - kp, x)});
    s2 += w2[kp];
    s3 += w3[kp];
  }
  const std::size_t branch = choose({s1, s2, s3});
  if (branch == 0) return f_tilde_p(t, x, l, k, x);
  const int kp = static_cast<int>(choose(branch == 1 ? w2 : w3));
  LabeledGraph g1 = branch == 1 ? g_tilde_1(t - 1, x + l, kp) : g_tilde_ge2(t - 1, x + l, kp);
  LabeledGraph g2 = branch == 1 ? f_tilde_p(t, x, l, k - kp, x) : g_tilde(t - 1, x + l, k - kp, x, true);
  const LabelSet free = label_range(x + l + 1, x + l + k);
  LabelSet a = random_subset(free, kp, rng_);
  LabelSet b = set_difference(free, a);
  return glue(relabel(g1, shift(x + l + 1, a)), relabel(g2, shift(x + l + 1, b)), label_range(x + l));
}

LabeledGraph Sampler::f_tilde_p(int t, int x, int l, int k, int z) {
  struct Choice {
    int kp, xp, lp;
  };
  std::vector<Choice> options;
  std::vector<BigNat> w;
  BigNat root;
  for (int kp = 1; kp <= k; ++kp) {
    for (int xp = 0; xp <= x; ++xp) {
      for (int lp = 0; lp <= l; ++lp) {
        if (xp + lp == 0 || xp + lp == x + l) continue;
        root = lp > 0 ? binom(x, xp) : BigNat(binom(x, xp) - binom(z, xp));
        const BigNat& tail =
            lp < l ? ctx_.f_tilde_p(t, x + lp, l - lp, k - kp, z) : ctx_.g_tilde_p(t - 1, x + l, k - kp, z);
        options.push_back({kp, xp, lp});
        w.push_back(product({&binom(k - 1, kp - 1), &binom(l, lp), &ctx_.g_tilde_1(t - 1, xp + lp, kp), &root, &tail}));
      }
    }
  }
  const Choice ch = options[choose(w)];
  LabeledGraph g1 = g_tilde_1(t - 1, ch.xp + ch.lp, ch.kp);
  LabeledGraph g2 = ch.lp < l ? f_tilde_p(t, x + ch.lp, l - ch.lp, k - ch.kp, z)
                              : g_tilde(t - 1, x + l, k - ch.kp, z, true);
  LabelSet xs = ch.lp > 0 ? random_subset(label_range(x), ch.xp, rng_)
                          : random_subset_not_within(label_range(x), ch.xp, label_range(z), rng_);
  const LabelSet lrange = label_range(x + 1, x + l);
  LabelSet ls = random_subset(lrange, ch.lp, rng_);
  const LabelSet free = label_range(x + l + 1, x + l + k);
  LabelSet c = random_subset_containing(free, ch.kp, x + l + 1, rng_);
  LabelSet d = set_difference(free, c);
  LabeledGraph a = relabel(g1, merge_maps({phi_map(label_range(ch.xp), xs), shift(ch.xp + 1, ls),
                                           shift(ch.xp + ch.lp + 1, c)}));
  LabelMap m2 = shift(x + l + 1, d);
  if (ch.lp < l) {
    LabelMap inner = merge_maps({shift(x + 1, ls), shift(x + ch.lp + 1, set_difference(lrange, ls))});
    m2.insert(inner.begin(), inner.end());
  }
  LabeledGraph b = relabel(g2, m2);
  return glue(a, b, set_union(xs, ls));
}

void require_positive(const BigNat& v, const std::string& what) {
  if (sgn(v) == 0) fail(Errc::empty_class, what + " is empty");
}

}  // namespace

LabeledGraph sample_chordal(int n, const CountingContext& ctx, RandomStream& rng, SamplerStats* stats) {
  if (n < 0 || n > ctx.n_max()) fail(Errc::domain, "sample_chordal: n outside the context");
  Sampler s(ctx, rng, stats);
  return s.chordal(n);
}

LabeledGraph sample_connected_chordal(int n, const CountingContext& ctx, RandomStream& rng, SamplerStats* stats) {
  if (n < 1 || n > ctx.n_max()) fail(Errc::domain, "sample_connected_chordal: n outside the context");
  require_positive(ctx.count_connected(n), "the class of connected graphs");
  Sampler s(ctx, rng, stats);
  return s.connected(n);
}

LabeledGraph sample_class(CounterClass cls, const CounterArgs& a, const CountingContext& ctx, RandomStream& rng,
                          SamplerStats* stats) {
  require_positive(ctx.value(cls, a), std::string("class ") + class_name(cls));
  Sampler s(ctx, rng, stats);
  switch (cls) {
    case CounterClass::g: return s.g(a.t, a.x, a.k, a.z);
    case CounterClass::g_tilde: return s.g_tilde(a.t, a.x, a.k, a.z, false);
    case CounterClass::g_tilde_p: return s.g_tilde(a.t, a.x, a.k, a.z, true);
    case CounterClass::g_tilde_1: return s.g_tilde_1(a.t, a.x, a.k);
    case CounterClass::g_tilde_ge2: return s.g_tilde_ge2(a.t, a.x, a.k);
    case CounterClass::f: return s.f(a.t, a.x, a.l, a.k);
    case CounterClass::f_tilde: return s.f_tilde(a.t, a.x, a.l, a.k);
    case CounterClass::f_tilde_p: return s.f_tilde_p(a.t, a.x, a.l, a.k, a.x);
    case CounterClass::f_tilde_p_z: return s.f_tilde_p(a.t, a.x, a.l, a.k, a.z);
  }
  fail(Errc::internal, "unknown counter class");
}

}  // namespace chordal
