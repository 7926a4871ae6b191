#include "chordal/approx_split.hpp"

#include <algorithm>
#include <regex>

#include "chordal/error.hpp"
#include "chordal/sampler.hpp"

namespace chordal {

namespace {

BigNat binom(int a, int b) {
  BigNat out = 0;
  if (a >= 0 && b >= 0 && b <= a) mpz_bin_uiui(out.get_mpz_t(), a, b);
  return out;
}

BigNat pow2_minus_1(int e) {
  BigNat out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, e);
  return out - 1;
}

BigNat power(const BigNat& base, int e) {
  BigNat out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);  // 0^0 = 1
  return out;
}

Rational rational_power(const Rational& base, int e) {
  Rational out = 1;
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

// Smallest m >= 0 with base^m >= target, for base > 1.
int smallest_power_reaching(const Rational& base, const Rational& target) {
  Rational acc = 1;
  int m = 0;
  while (acc < target) {
    acc *= base;
    ++m;
  }
  return m;
}

void check_epsilon(const Rational& eps) {
  if (eps <= 0 || eps >= 1) fail(Errc::domain, "epsilon must lie strictly between 0 and 1");
}

}  // namespace

Rational parse_epsilon(const std::string& text) {
  static const std::regex decimal(R"(^\s*([0-9]*)(?:\.([0-9]*))?(?:[eE]([+-]?[0-9]{1,6}))?\s*$)");
  static const std::regex fraction(R"(^\s*([0-9]+)\s*/\s*([0-9]+)\s*$)");
  std::smatch m;
  Rational value;
  if (std::regex_match(text, m, fraction)) {
    BigNat num(m[1].str()), den(m[2].str());
    if (den == 0) fail(Errc::parse, "epsilon: zero denominator");
    value = Rational(num, den);
    value.canonicalize();
  } else if (std::regex_match(text, m, decimal) && (m[1].length() + m[2].length()) > 0) {
    const std::string digits = m[1].str() + m[2].str();
    int exp10 = m[3].matched ? std::stoi(m[3].str()) : 0;
    exp10 -= static_cast<int>(m[2].length());
    BigNat num(digits);
    BigNat scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::abs(exp10)));
    value = exp10 >= 0 ? Rational(num * scale) : Rational(num, scale);
    value.canonicalize();
  } else {
    fail(Errc::parse, "epsilon: not a decimal number: " + text);
  }
  check_epsilon(value);
  return value;
}

ApproxParams ApproxParams::from(const Rational& eps) {
  check_epsilon(eps);
  ApproxParams p;
  p.epsilon = eps;
  const Rational inv = 1 / eps;
  p.log_inv = smallest_power_reaching(Rational(2), inv);
  p.s = 47 + smallest_power_reaching(Rational(2), rational_power(inv, 10));
  return p;
}

int threshold_f(const Rational& eps, const Thresholds& th) {
  check_epsilon(eps);
  const Rational inv = 1 / eps;
  int m = smallest_power_reaching(Rational(3, 2), rational_power(inv, 3));
  return std::max({th.n1, th.n2, m});
}

int threshold_g(const Rational& eps, const Thresholds& th) {
  check_epsilon(eps);
  const Rational two_inv = 2 / eps;
  int a = smallest_power_reaching(Rational(10, 9), two_inv);
  int b = smallest_power_reaching(Rational(3, 2), rational_power(two_inv, 3));
  return std::max({th.n1, th.n2, th.n3, a, b});
}

BigNat split_term_pair(int n, int q, int c) {
  return binom(n, q) * binom(n - q, c) * power(pow2_minus_1(n - c - q), c);
}

BigNat split_term_empty(int n, int c) {
  return c <= n / 2 ? BigNat(binom(n, c) * power(pow2_minus_1(c), n - c))
                    : BigNat(binom(n, c) * power(pow2_minus_1(n - c), c));
}

BigNat split_term_single(int n, int c) {
  return c <= (n - 1) / 2 ? BigNat(n * binom(n - 1, c) * power(pow2_minus_1(c), n - c - 1))
                          : BigNat(n * binom(n - 1, c) * power(pow2_minus_1(n - c - 1), c));
}

BigNat split_count_qge2_exact(int n) {
  BigNat acc = 0;
  for (int q = 2; q <= n; ++q)
    for (int c = 0; c <= n - q; ++c) acc += split_term_pair(n, q, c);
  return 2 * acc;
}

BigNat split_count_q0_full(int n) {
  BigNat acc = 0;
  for (int c = 2; c <= n - 2; ++c) acc += split_term_empty(n, c);
  return acc;
}

BigNat split_count_q1_full(int n) {
  BigNat acc = 0;
  for (int c = 2; c <= n - 2; ++c) acc += split_term_single(n, c);
  return acc;
}

namespace {

template <typename Visit>
void visit_pair_cells(int n, const ApproxParams& p, Visit&& visit) {
  for (int q = 2; q <= std::min(p.s, n - 1); ++q) {
    const int lo = std::max(0, p.t1_pair(n, q));
    const int hi = std::min(p.t2_pair(n, q), n - q);
    for (int c = lo; c <= hi; ++c) visit(q, c);
  }
}

template <typename Visit>
void visit_single_range(int n, int split, const ApproxParams& p, Visit&& visit) {
  const int lo = std::max(2, p.t1_single(n));
  const int hi = std::min(p.t2_single(n), n - 2);
  for (int c = lo; c <= split; ++c) visit(c);
  for (int c = split + 1; c <= hi; ++c) visit(c);
}

}  // namespace

BigNat split_count_qge2_truncated(int n, const Rational& eps) {
  const ApproxParams p = ApproxParams::from(eps);
  BigNat acc = 0;
  visit_pair_cells(n, p, [&](int q, int c) { acc += split_term_pair(n, q, c); });
  return 2 * acc;
}

BigNat split_count_q0_truncated(int n, const Rational& eps) {
  const ApproxParams p = ApproxParams::from(eps);
  BigNat acc = 0;
  visit_single_range(n, n / 2, p, [&](int c) { acc += split_term_empty(n, c); });
  return acc;
}

BigNat split_count_q1_truncated(int n, const Rational& eps) {
  const ApproxParams p = ApproxParams::from(eps);
  BigNat acc = 0;
  visit_single_range(n, (n - 1) / 2, p, [&](int c) { acc += split_term_single(n, c); });
  return acc;
}

BigNat approx_count_split(int n, const Rational& eps, const Thresholds& th) {
  if (n < threshold_f(eps, th))
    fail(Errc::domain, "approx_count_split: n is below the threshold f(epsilon)");
  return split_count_qge2_truncated(n, eps) + split_count_q0_truncated(n, eps) + split_count_q1_truncated(n, eps) + 2;
}

BigNat approx_count_chordal(int n, const Rational& eps, const Thresholds& th) {
  if (n < 0) fail(Errc::domain, "approx_count_chordal: n must be nonnegative");
  if (n < threshold_g(eps, th)) {
    CountingContext ctx(n, std::max(n, 1));
    return ctx.count_all(n);
  }
  return approx_count_split(n, eps / 2, th);
}

ToneGraph sample_tone_empty(int n, int c, RandomStream& rng) {
  ToneGraph tg;
  const LabelSet all = label_range(n);
  tg.cyan = random_subset(all, c, rng);
  tg.indigo = set_difference(all, tg.cyan);
  tg.graph = glue(LabeledGraph::complete(tg.cyan), LabeledGraph(tg.indigo), {});
  if (c <= n / 2) {
    // Each indigo vertex misses a nonempty set of cyan vertices.
    for (Label v : tg.indigo) {
      LabelSet miss = random_nonempty_subset(tg.cyan, rng);
      for (Label u : set_difference(tg.cyan, miss)) tg.graph.add_edge(u, v);
    }
  } else {
    for (Label u : tg.cyan)
      for (Label v : random_nonempty_subset(tg.indigo, rng)) tg.graph.add_edge(u, v);
  }
  return tg;
}

ToneGraph sample_tone_single(int n, int c, RandomStream& rng) {
  ToneGraph tg;
  const LabelSet all = label_range(n);
  const Label white = static_cast<Label>(rng.uniform_below(static_cast<std::uint64_t>(n)) + 1);
  const LabelSet rest = set_difference(all, {white});
  tg.white = white;
  tg.cyan = random_subset(rest, c, rng);
  tg.indigo = set_difference(rest, tg.cyan);
  tg.graph = glue(LabeledGraph::complete(set_union(tg.cyan, {white})), LabeledGraph(tg.indigo), {});
  if (c <= (n - 1) / 2) {
    for (Label v : tg.indigo) {
      LabelSet miss = random_nonempty_subset(tg.cyan, rng);
      for (Label u : set_difference(tg.cyan, miss)) tg.graph.add_edge(u, v);
    }
  } else {
    for (Label u : tg.cyan)
      for (Label v : random_nonempty_subset(tg.indigo, rng)) tg.graph.add_edge(u, v);
  }
  return tg;
}

bool satisfies_property_p(const ToneGraph& tg) {
  const std::size_t n = tg.cyan.size() + tg.indigo.size();
  if (tg.cyan.size() <= n / 2) {
    for (Label u : tg.cyan) {
      bool found = false;
      for (Label v : tg.indigo)
        if (tg.graph.has_edge(u, v)) found = true;
      if (!found) return false;
    }
  } else {
    for (Label v : tg.indigo) {
      bool found = false;
      for (Label u : tg.cyan)
        if (!tg.graph.has_edge(u, v)) found = true;
      if (!found) return false;
    }
  }
  return true;
}

LabeledGraph sample_split_cell(int n, int q, int c, RandomStream& rng) {
  const LabelSet all = label_range(n);
  LabelSet qs = random_subset(all, q, rng);
  LabelSet rest = set_difference(all, qs);
  LabelSet cs = random_subset(rest, c, rng);
  LabelSet is = set_difference(rest, cs);
  LabeledGraph g = glue(LabeledGraph::complete(set_union(qs, cs)), LabeledGraph(is), {});
  for (Label u : cs)
    for (Label v : random_nonempty_subset(is, rng)) g.add_edge(u, v);
  return g;
}

SplitSampler::SplitSampler(int n, const Rational& eps, const Thresholds& th) : n_(n) {
  check_epsilon(eps);
  if (n < threshold_f(eps / 2, th))
    fail(Errc::domain, "sample_split_approx: n is below the threshold f(epsilon/2)");
  inner_eps_ = std::min(Rational(eps / 2), Rational(1, 3));
  // 64 * ceil(1 / (1 - eps')).
  Rational inv = 1 / (1 - inner_eps_);
  BigNat ceil_inv;
  mpz_cdiv_q(ceil_inv.get_mpz_t(), inv.get_num_mpz_t(), inv.get_den_mpz_t());
  cap_ = 64 * static_cast<int>(ceil_inv.get_si());

  const ApproxParams p = ApproxParams::from(inner_eps_);
  BigNat pair_total = 0, empty_total = 0, single_total = 0;
  visit_pair_cells(n, p, [&](int q, int c) {
    pair_cells_.push_back({q, c});
    pair_weights_.push_back(split_term_pair(n, q, c));
    pair_total += pair_weights_.back();
  });
  visit_single_range(n, n / 2, p, [&](int c) {
    empty_cs_.push_back(c);
    empty_weights_.push_back(split_term_empty(n, c));
    empty_total += empty_weights_.back();
  });
  visit_single_range(n, (n - 1) / 2, p, [&](int c) {
    single_cs_.push_back(c);
    single_weights_.push_back(split_term_single(n, c));
    single_total += single_weights_.back();
  });
  case_weights_ = {BigNat(2), BigNat(2 * pair_total), empty_total, single_total};
}

SplitSample SplitSampler::sample(RandomStream& rng) const {
  for (int it = 1; it <= cap_; ++it) {
    switch (categorical(case_weights_, rng)) {
      case 0: {
        LabeledGraph g = LabeledGraph::complete(label_range(n_));
        if (rng.uniform_below(std::uint64_t{2}) == 1) g = LabeledGraph::empty(n_);
        return {std::move(g), it};
      }
      case 1: {
        const Cell cell = pair_cells_[categorical(pair_weights_, rng)];
        LabeledGraph g = sample_split_cell(n_, cell.q, cell.c, rng);
        if (rng.uniform_below(std::uint64_t{2}) == 1) g = g.complement();
        return {std::move(g), it};
      }
      case 2: {
        ToneGraph tg = sample_tone_empty(n_, empty_cs_[categorical(empty_weights_, rng)], rng);
        if (satisfies_property_p(tg)) return {std::move(tg.graph), it};
        break;
      }
      default: {
        ToneGraph tg = sample_tone_single(n_, single_cs_[categorical(single_weights_, rng)], rng);
        if (satisfies_property_p(tg)) return {std::move(tg.graph), it};
        break;
      }
    }
  }
  fail(Errc::rejection_cap, "split sampler exceeded its rejection-iteration cap");
}

SplitSample sample_split_approx(int n, const Rational& eps, RandomStream& rng, const Thresholds& th) {
  return SplitSampler(n, eps, th).sample(rng);
}

ApproxChordalSampler::ApproxChordalSampler(int n, const Rational& eps, const Thresholds& th) : n_(n) {
  check_epsilon(eps);
  if (n < 0) fail(Errc::domain, "approx sampler: n must be nonnegative");
  if (n < threshold_g(eps / 2, th)) {
    exact_ = std::make_unique<CountingContext>(n, std::max(n, 1));
    exact_->fill_all();
  } else {
    split_ = std::make_unique<SplitSampler>(n, eps / 2, th);
  }
}

SplitSample ApproxChordalSampler::sample(RandomStream& rng) const {
  if (exact_) return {sample_chordal(n_, *exact_, rng), 0};
  return split_->sample(rng);
}

}  // namespace chordal
