#include "chordal/random.hpp"

#include <algorithm>

#include "chordal/error.hpp"

namespace chordal {

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

RandomStream RandomStream::derived(std::uint64_t seed, std::uint64_t stream) {
  return RandomStream(splitmix64(splitmix64(seed) ^ splitmix64(stream + 0x5851f42d4c957f2dULL)));
}

BigNat RandomStream::random_bits(unsigned bits) {
  const std::size_t words = (bits + 63) / 64;
  std::vector<std::uint64_t> buf(words);
  for (auto& w : buf) w = next_u64();
  draws_ += words;
  if (bits % 64 != 0 && words > 0) buf.back() &= (std::uint64_t{1} << (bits % 64)) - 1;
  BigNat out;
  if (words > 0) mpz_import(out.get_mpz_t(), words, -1, sizeof(std::uint64_t), 0, 0, buf.data());
  return out;
}

BigNat RandomStream::uniform_below(const BigNat& w) {
  if (w <= 0) fail(Errc::invalid_argument, "uniform_below: bound must be positive");
  if (w == 1) return 0;
  BigNat top = w - 1;
  const unsigned bits = static_cast<unsigned>(mpz_sizeinbase(top.get_mpz_t(), 2));
  for (;;) {
    BigNat r = random_bits(bits);
    if (r < w) return r;
  }
}

std::uint64_t RandomStream::uniform_below(std::uint64_t w) {
  if (w == 0) fail(Errc::invalid_argument, "uniform_below: bound must be positive");
  if (w == 1) return 0;
  const unsigned bits = 64 - static_cast<unsigned>(__builtin_clzll(w - 1));
  const std::uint64_t mask = bits == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
  for (;;) {
    ++draws_;
    std::uint64_t r = next_u64() & mask;
    if (r < w) return r;
  }
}

std::size_t categorical(const std::vector<BigNat>& weights, const BigNat& total, RandomStream& rng) {
  if (total <= 0) fail(Errc::invalid_argument, "categorical: all weights are zero");
  BigNat u = rng.uniform_below(total);
  BigNat acc = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (sgn(weights[i]) == 0) continue;
    acc += weights[i];
    if (u < acc) return i;
  }
  fail(Errc::internal, "categorical: total exceeds the weight sum");
}

std::size_t categorical(const std::vector<BigNat>& weights, RandomStream& rng) {
  BigNat total = 0;
  for (const auto& w : weights) total += w;
  return categorical(weights, total, rng);
}

LabelSet random_subset(const LabelSet& from, std::size_t k, RandomStream& rng) {
  if (k > from.size()) fail(Errc::invalid_argument, "random_subset: k exceeds set size");
  LabelSet out;
  std::size_t need = k;
  for (std::size_t i = 0; i < from.size() && need > 0; ++i) {
    std::uint64_t left = from.size() - i;
    if (rng.uniform_below(left) < need) {
      out.push_back(from[i]);
      --need;
    }
  }
  return out;
}

LabelSet random_subset_containing(const LabelSet& from, std::size_t k, Label must, RandomStream& rng) {
  if (k == 0 || !std::binary_search(from.begin(), from.end(), must))
    fail(Errc::invalid_argument, "random_subset_containing: required element unavailable");
  LabelSet rest = set_difference(from, {must});
  return set_union(random_subset(rest, k - 1, rng), {must});
}

LabelSet random_subset_not_within(const LabelSet& from, std::size_t k, const LabelSet& avoid_within,
                                  RandomStream& rng) {
  LabelSet inside = set_intersection(from, avoid_within);
  LabelSet outside = set_difference(from, avoid_within);
  // j = number drawn from outside, with weight C(|outside|, j) * C(|inside|, k - j), j >= 1.
  std::vector<BigNat> w;
  for (std::size_t j = 0; j <= k; ++j) {
    BigNat a, b;
    mpz_bin_uiui(a.get_mpz_t(), outside.size(), j);
    if (k - j > inside.size()) b = 0;
    else mpz_bin_uiui(b.get_mpz_t(), inside.size(), k - j);
    w.push_back(j == 0 ? BigNat(0) : BigNat(a * b));
  }
  std::size_t j = categorical(w, rng);
  return set_union(random_subset(outside, j, rng), random_subset(inside, k - j, rng));
}

LabelSet random_nonempty_subset(const LabelSet& from, RandomStream& rng) {
  if (from.empty()) fail(Errc::invalid_argument, "random_nonempty_subset: empty ground set");
  BigNat range;
  mpz_ui_pow_ui(range.get_mpz_t(), 2, from.size());
  range -= 1;
  BigNat mask = rng.uniform_below(range) + 1;
  LabelSet out;
  for (std::size_t i = 0; i < from.size(); ++i)
    if (mpz_tstbit(mask.get_mpz_t(), i)) out.push_back(from[i]);
  return out;
}

}  // namespace chordal
