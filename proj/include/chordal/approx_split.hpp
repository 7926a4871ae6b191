#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "chordal/bignat.hpp"
#include "chordal/counter.hpp"
#include "chordal/graph.hpp"
#include "chordal/random.hpp"

namespace chordal {

struct Thresholds {
  int n1 = 65;
  int n2 = 65;
  int n3 = 65;
};

// Parses "0.001", "1e-6", "3/4" exactly. Requires a value in (0, 1).
Rational parse_epsilon(const std::string& text);

struct ApproxParams {
  Rational epsilon;
  int log_inv = 0;  // ceil(log2(1/eps))
  int s = 0;        // ceil(10 log2(1/eps) + 47)

  static ApproxParams from(const Rational& eps);
  int t1_pair(int n, int q) const { return (n - q) / 2 - log_inv - 3; }
  int t2_pair(int n, int q) const { return (n - q + 1) / 2 + log_inv + 3; }
  int t1_single(int n) const { return n / 2 - log_inv - 2; }
  int t2_single(int n) const { return (n + 1) / 2 + log_inv + 2; }
};

int threshold_f(const Rational& eps, const Thresholds& th = {});
int threshold_g(const Rational& eps, const Thresholds& th = {});

// Term weights of the split-count summations.
BigNat split_term_pair(int n, int q, int c);    // C(n,q) C(n-q,c) (2^(n-c-q)-1)^c
BigNat split_term_empty(int n, int c);          // Q empty, c clique vertices
BigNat split_term_single(int n, int c);         // |Q| = 1, c clique vertices

BigNat split_count_qge2_exact(int n);
BigNat split_count_q0_full(int n);
BigNat split_count_q1_full(int n);
BigNat split_count_qge2_truncated(int n, const Rational& eps);
BigNat split_count_q0_truncated(int n, const Rational& eps);
BigNat split_count_q1_truncated(int n, const Rational& eps);

BigNat approx_count_split(int n, const Rational& eps, const Thresholds& th = {});
BigNat approx_count_chordal(int n, const Rational& eps, const Thresholds& th = {});

struct ToneGraph {
  LabeledGraph graph;
  LabelSet cyan;    // clique side
  LabelSet indigo;  // independent side
  std::optional<Label> white;
};

// Uniform two-tone graph with c cyan vertices on [n] (Q empty case), before the P check.
ToneGraph sample_tone_empty(int n, int c, RandomStream& rng);
// Uniform three-tone graph with c cyan vertices and one white vertex on [n].
ToneGraph sample_tone_single(int n, int c, RandomStream& rng);
bool satisfies_property_p(const ToneGraph& g);
// Uniform split graph on [n] with a clique Q of size q and |C| = c, before the optional complement.
LabeledGraph sample_split_cell(int n, int q, int c, RandomStream& rng);

struct SplitSample {
  LabeledGraph graph;
  int iterations = 0;
};

// Precomputes the truncated sums for (n, eps) and draws from them.
class SplitSampler {
 public:
  SplitSampler(int n, const Rational& eps, const Thresholds& th = {});
  SplitSample sample(RandomStream& rng) const;
  int n() const { return n_; }
  int iteration_cap() const { return cap_; }
  const Rational& inner_epsilon() const { return inner_eps_; }

 private:
  struct Cell {
    int q;
    int c;
  };
  int n_;
  Rational inner_eps_;
  int cap_;
  std::vector<BigNat> case_weights_;  // |Q|=n, 2<=|Q|<n, Q empty, |Q|=1
  std::vector<Cell> pair_cells_;
  std::vector<BigNat> pair_weights_;
  std::vector<int> empty_cs_;
  std::vector<BigNat> empty_weights_;
  std::vector<int> single_cs_;
  std::vector<BigNat> single_weights_;
};

SplitSample sample_split_approx(int n, const Rational& eps, RandomStream& rng, const Thresholds& th = {});

// Exact sampler below threshold_g(eps/2), split sampler with eps/2 above it.
class ApproxChordalSampler {
 public:
  ApproxChordalSampler(int n, const Rational& eps, const Thresholds& th = {});
  SplitSample sample(RandomStream& rng) const;
  bool uses_exact_path() const { return exact_ != nullptr; }

 private:
  int n_;
  std::unique_ptr<CountingContext> exact_;
  std::unique_ptr<SplitSampler> split_;
};

}  // namespace chordal
