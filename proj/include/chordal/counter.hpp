#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chordal/bignat.hpp"

namespace chordal {

enum class CounterClass {
  g,
  g_tilde,
  g_tilde_p,
  g_tilde_1,
  g_tilde_ge2,
  f,
  f_tilde,
  f_tilde_p,    // four arguments, z = x
  f_tilde_p_z,  // five arguments
};

struct CounterArgs {
  int t = 0;
  int x = 0;
  int l = 0;
  int k = 0;
  int z = 0;
};

const char* class_name(CounterClass cls);
// Number of vertices of every graph in the class: x+k, or x+l+k for the f family.
int class_vertex_count(CounterClass cls, const CounterArgs& a);
bool class_is_f_family(CounterClass cls);

enum class FpStrategy { helper, direct };

// Memoized counting tables for omega-colorable labeled chordal graphs on at
// most n_max vertices. Rows over k are filled together on first use. After
// fill_all() the context is read-only and the const accessors never compute.
class CountingContext {
 public:
  static constexpr int kMaxN = 62;

  CountingContext(int n_max, int omega, FpStrategy strategy = FpStrategy::helper);

  int n_max() const { return n_; }
  int omega() const { return omega_; }
  FpStrategy strategy() const { return strategy_; }

  const BigNat& binomial(int a, int b) const;
  std::uint64_t binomial_u64(int a, int b) const {
    return b < 0 || b > a ? 0 : binom_[static_cast<std::size_t>(a) * (n_ + 1) + b];
  }

  const BigNat& g(int t, int x, int k, int z);
  const BigNat& g_tilde(int t, int x, int k, int z);
  const BigNat& g_tilde_p(int t, int x, int k, int z);
  const BigNat& g_tilde_1(int t, int x, int k);
  const BigNat& g_tilde_ge2(int t, int x, int k);
  const BigNat& f(int t, int x, int l, int k);
  const BigNat& f_tilde(int t, int x, int l, int k);
  const BigNat& f_tilde_p(int t, int x, int l, int k) { return f_tilde_p(t, x, l, k, x); }
  const BigNat& f_tilde_p(int t, int x, int l, int k, int z);
  BigNat h(int t, int x, int l, int z, int r, int k);
  const BigNat& value(CounterClass cls, const CounterArgs& a);

  const BigNat& g(int t, int x, int k, int z) const;
  const BigNat& g_tilde(int t, int x, int k, int z) const;
  const BigNat& g_tilde_p(int t, int x, int k, int z) const;
  const BigNat& g_tilde_1(int t, int x, int k) const;
  const BigNat& g_tilde_ge2(int t, int x, int k) const;
  const BigNat& f(int t, int x, int l, int k) const;
  const BigNat& f_tilde(int t, int x, int l, int k) const;
  const BigNat& f_tilde_p(int t, int x, int l, int k) const { return f_tilde_p(t, x, l, k, x); }
  const BigNat& f_tilde_p(int t, int x, int l, int k, int z) const;
  BigNat h(int t, int x, int l, int z, int r, int k) const;
  const BigNat& value(CounterClass cls, const CounterArgs& a) const;

  // Connected (c) and all (a) omega-colorable chordal graphs on [n].
  const BigNat& count_connected(int n);
  const BigNat& count_all(int n);
  const BigNat& count_connected(int n) const;
  const BigNat& count_all(int n) const;

  // Computes every row the samplers can reach and c, a up to n_max.
  void fill_all();
  bool filled() const { return filled_; }

  std::size_t stored_entries() const;
  std::size_t entry_writes() const { return writes_; }
  int max_depth() const { return max_depth_; }
  int depth_limit() const { return depth_limit_; }

 private:
  using Row = std::vector<BigNat>;

  struct RowTable {
    int side = 0;
    int dims = 0;
    std::vector<Row> rows;
    std::vector<char> busy;
    void init(int side_, int dims_);
    std::size_t index(int a, int b = 0, int c = 0, int d = 0) const;
  };

  enum Table { kG, kGt, kGtp, kGt1, kGt2, kF, kFt, kFtp, kTableCount };

  const Row& row_g(int t, int x, int z);
  const Row& row_gt(int t, int x, int z);
  const Row& row_gtp(int t, int x, int z);
  const Row& row_gt1(int t, int x);
  const Row& row_gt2(int t, int x);
  const Row& row_f(int t, int x, int l);
  const Row& row_ft(int t, int x, int l);
  const Row& row_ftp(int t, int x, int l, int z);

  const Row& stored(Table tab, std::size_t idx) const;

  Row compute_g(int t, int x, int z);
  Row compute_gt(int t, int x, int z, bool proper);
  Row compute_gt1(int t, int x);
  Row compute_gt2(int t, int x);
  Row compute_f(int t, int x, int l);
  Row compute_ft(int t, int x, int l);
  Row compute_ftp_helper(int t, int x, int l, int z);
  Row compute_ftp_direct(int t, int x, int l, int z);

  template <typename Compute>
  const Row& memo(Table tab, std::size_t idx, Compute&& compute);

  std::uint64_t root_weight(int x, int z, int xp, bool unrestricted) const;

  int n_;
  int omega_;
  FpStrategy strategy_;
  std::vector<std::uint64_t> binom_;
  std::vector<BigNat> binom_big_;
  RowTable tables_[kTableCount];
  std::vector<std::optional<BigNat>> c_;
  std::vector<std::optional<BigNat>> a_;
  bool filled_ = false;
  std::size_t writes_ = 0;
  int depth_ = 0;
  int max_depth_ = 0;
  int depth_limit_ = 0;
  BigNat tmp_;
};

}  // namespace chordal
