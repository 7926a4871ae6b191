#include "chordal/counter.hpp"

#include <algorithm>
#include <string>

#include "chordal/error.hpp"

namespace chordal {

namespace {

const BigNat kZero = 0;

std::string args_text(const char* name, std::initializer_list<int> v) {
  std::string s = std::string(name) + "(";
  bool first = true;
  for (int a : v) {
    if (!first) s += ",";
    s += std::to_string(a);
    first = false;
  }
  return s + ")";
}

[[noreturn]] void domain_error(const char* name, std::initializer_list<int> v) {
  fail(Errc::domain, "argument outside the domain: " + args_text(name, v));
}

// acc += c * a * b
inline void addmul3(mpz_t acc, std::uint64_t c, const BigNat& a, const BigNat& b, mpz_t tmp) {
  if (c == 0 || sgn(a) == 0 || sgn(b) == 0) return;
  mpz_mul(tmp, a.get_mpz_t(), b.get_mpz_t());
  mpz_addmul_ui(acc, tmp, c);
}

// acc += c1 * c2 * a * b
inline void addmul4(mpz_t acc, std::uint64_t c1, std::uint64_t c2, const BigNat& a, const BigNat& b, mpz_t tmp) {
  if (c1 == 0 || c2 == 0 || sgn(a) == 0 || sgn(b) == 0) return;
  mpz_mul(tmp, a.get_mpz_t(), b.get_mpz_t());
  mpz_mul_ui(tmp, tmp, c1);
  mpz_addmul_ui(acc, tmp, c2);
}

inline void addmul2(mpz_t acc, std::uint64_t c, const BigNat& a) {
  if (c == 0 || sgn(a) == 0) return;
  mpz_addmul_ui(acc, a.get_mpz_t(), c);
}

}  // namespace

const char* class_name(CounterClass cls) {
  switch (cls) {
    case CounterClass::g: return "g";
    case CounterClass::g_tilde: return "g_tilde";
    case CounterClass::g_tilde_p: return "g_tilde_p";
    case CounterClass::g_tilde_1: return "g_tilde_1";
    case CounterClass::g_tilde_ge2: return "g_tilde_ge2";
    case CounterClass::f: return "f";
    case CounterClass::f_tilde: return "f_tilde";
    case CounterClass::f_tilde_p: return "f_tilde_p";
    case CounterClass::f_tilde_p_z: return "f_tilde_p_z";
  }
  return "?";
}

bool class_is_f_family(CounterClass cls) {
  return cls == CounterClass::f || cls == CounterClass::f_tilde || cls == CounterClass::f_tilde_p ||
         cls == CounterClass::f_tilde_p_z;
}

int class_vertex_count(CounterClass cls, const CounterArgs& a) {
  return class_is_f_family(cls) ? a.x + a.l + a.k : a.x + a.k;
}

void CountingContext::RowTable::init(int side_, int dims_) {
  side = side_;
  dims = dims_;
  std::size_t count = 1;
  for (int i = 0; i < dims; ++i) count *= static_cast<std::size_t>(side);
  rows.assign(count, Row());
  busy.assign(count, 0);
}

std::size_t CountingContext::RowTable::index(int a, int b, int c, int d) const {
  std::size_t s = static_cast<std::size_t>(side);
  std::size_t idx = static_cast<std::size_t>(a);
  if (dims > 1) idx = idx * s + static_cast<std::size_t>(b);
  if (dims > 2) idx = idx * s + static_cast<std::size_t>(c);
  if (dims > 3) idx = idx * s + static_cast<std::size_t>(d);
  return idx;
}

CountingContext::CountingContext(int n_max, int omega, FpStrategy strategy)
    : n_(n_max), omega_(omega), strategy_(strategy) {
  if (n_max < 0 || n_max > kMaxN)
    fail(Errc::domain, "n_max must lie in [0, " + std::to_string(kMaxN) + "]");
  if (omega < 1) fail(Errc::domain, "omega must be at least 1");
  omega_ = std::min(omega, std::max(n_max, 1));
  const std::size_t side = static_cast<std::size_t>(n_) + 1;
  binom_.assign(side * side, 0);
  binom_big_.assign(side * side, BigNat(0));
  for (int a = 0; a <= n_; ++a) {
    binom_[a * side] = 1;
    for (int b = 1; b <= a; ++b)
      binom_[a * side + b] = binom_[(a - 1) * side + b - 1] + (b <= a - 1 ? binom_[(a - 1) * side + b] : 0);
    for (int b = 0; b <= a; ++b) binom_big_[a * side + b] = BigNat(static_cast<unsigned long>(binom_[a * side + b]));
  }
  const int s = n_ + 1;
  tables_[kG].init(s, 3);
  tables_[kGt].init(s, 3);
  tables_[kGtp].init(s, 3);
  tables_[kGt1].init(s, 2);
  tables_[kGt2].init(s, 2);
  tables_[kF].init(s, 3);
  tables_[kFt].init(s, 3);
  tables_[kFtp].init(s, 4);
  c_.assign(side, std::nullopt);
  a_.assign(side, std::nullopt);
  depth_limit_ = 4 * n_ + 8;
}

const BigNat& CountingContext::binomial(int a, int b) const {
  if (a < 0 || a > n_) domain_error("binomial", {a, b});
  if (b < 0 || b > a) return kZero;
  return binom_big_[static_cast<std::size_t>(a) * (n_ + 1) + b];
}

std::uint64_t CountingContext::root_weight(int x, int z, int xp, bool unrestricted) const {
  // Ways to pick an x'-subset of [x]; when restricted, it must not lie inside [z].
  return unrestricted ? binomial_u64(x, xp) : binomial_u64(x, xp) - binomial_u64(z, xp);
}

template <typename Compute>
const CountingContext::Row& CountingContext::memo(Table tab, std::size_t idx, Compute&& compute) {
  RowTable& tbl = tables_[tab];
  if (!tbl.rows[idx].empty()) return tbl.rows[idx];
  if (tbl.busy[idx]) fail(Errc::internal, "cyclic dependency between counting rows");
  if (depth_ >= depth_limit_) fail(Errc::internal, "counting recursion exceeded its depth guard");
  tbl.busy[idx] = 1;
  ++depth_;
  max_depth_ = std::max(max_depth_, depth_);
  Row row = compute();
  --depth_;
  tbl.busy[idx] = 0;
  if (!tbl.rows[idx].empty()) fail(Errc::internal, "counting row written twice");
  writes_ += row.size();
  tbl.rows[idx] = std::move(row);
  return tbl.rows[idx];
}

const CountingContext::Row& CountingContext::row_g(int t, int x, int z) {
  return memo(kG, tables_[kG].index(t, x, z), [&] { return compute_g(t, x, z); });
}
const CountingContext::Row& CountingContext::row_gt(int t, int x, int z) {
  return memo(kGt, tables_[kGt].index(t, x, z), [&] { return compute_gt(t, x, z, false); });
}
const CountingContext::Row& CountingContext::row_gtp(int t, int x, int z) {
  return memo(kGtp, tables_[kGtp].index(t, x, z), [&] { return compute_gt(t, x, z, true); });
}
const CountingContext::Row& CountingContext::row_gt1(int t, int x) {
  return memo(kGt1, tables_[kGt1].index(t, x), [&] { return compute_gt1(t, x); });
}
const CountingContext::Row& CountingContext::row_gt2(int t, int x) {
  return memo(kGt2, tables_[kGt2].index(t, x), [&] { return compute_gt2(t, x); });
}
const CountingContext::Row& CountingContext::row_f(int t, int x, int l) {
  return memo(kF, tables_[kF].index(t, x, l), [&] { return compute_f(t, x, l); });
}
const CountingContext::Row& CountingContext::row_ft(int t, int x, int l) {
  return memo(kFt, tables_[kFt].index(t, x, l), [&] { return compute_ft(t, x, l); });
}
const CountingContext::Row& CountingContext::row_ftp(int t, int x, int l, int z) {
  return memo(kFtp, tables_[kFtp].index(t, x, l, z), [&] {
    return strategy_ == FpStrategy::helper ? compute_ftp_helper(t, x, l, z) : compute_ftp_direct(t, x, l, z);
  });
}

CountingContext::Row CountingContext::compute_g(int t, int x, int z) {
  const int kmax = n_ - x;
  Row row(kmax + 1, BigNat(0));
  if (t == 0) {
    row[0] = 1;
    return row;
  }
  const Row& tilde = row_gt(t, x, z);
  const Row& prev = row_g(t - 1, x, z);
  for (int k = 0; k <= kmax; ++k) {
    mpz_ptr acc = row[k].get_mpz_t();
    for (int kp = 0; kp <= k; ++kp) addmul3(acc, binomial_u64(k, kp), tilde[kp], prev[k - kp], tmp_.get_mpz_t());
  }
  return row;
}

CountingContext::Row CountingContext::compute_gt(int t, int x, int z, bool proper) {
  const int kmax = n_ - x;
  Row row(kmax + 1, BigNat(0));
  row[0] = 1;
  // s[k'] = sum over x' of (C(x,x') - C(z,x')) * g~1(t, x', k').
  Row s(kmax + 1, BigNat(0));
  const int xmax = proper ? x - 1 : x;
  for (int xp = 1; xp <= xmax; ++xp) {
    std::uint64_t w = root_weight(x, z, xp, false);
    if (w == 0) continue;
    const Row& one = row_gt1(t, xp);
    for (int kp = 1; kp <= kmax; ++kp) addmul2(s[kp].get_mpz_t(), w, one[kp]);
  }
  for (int k = 1; k <= kmax; ++k) {
    mpz_ptr acc = row[k].get_mpz_t();
    for (int kp = 1; kp <= k; ++kp) addmul3(acc, binomial_u64(k - 1, kp - 1), s[kp], row[k - kp], tmp_.get_mpz_t());
  }
  return row;
}

CountingContext::Row CountingContext::compute_gt1(int t, int x) {
  const int kmax = n_ - x;
  Row row(kmax + 1, BigNat(0));
  if (t == 0) return row;
  for (int l = 1; l <= kmax; ++l) {
    const Row& fr = row_f(t, x, l);
    for (int k = l; k <= kmax; ++k) addmul2(row[k].get_mpz_t(), binomial_u64(k, l), fr[k - l]);
  }
  return row;
}

CountingContext::Row CountingContext::compute_gt2(int t, int x) {
  const int kmax = n_ - x;
  Row row(kmax + 1, BigNat(0));
  if (t == 0) return row;
  const Row& one = row_gt1(t, x);
  BigNat both;
  for (int k = 2; k <= kmax; ++k) {
    mpz_ptr acc = row[k].get_mpz_t();
    for (int kp = 1; kp <= k - 1; ++kp) {
      both = one[k - kp] + row[k - kp];
      addmul3(acc, binomial_u64(k - 1, kp - 1), one[kp], both, tmp_.get_mpz_t());
    }
  }
  return row;
}

CountingContext::Row CountingContext::compute_f(int t, int x, int l) {
  const int kmax = n_ - x - l;
  Row row(kmax + 1, BigNat(0));
  if (x + l > omega_) return row;
  if (t == 1) {
    row[0] = 1;
    return row;
  }
  const Row& tilde = row_ft(t, x, l);
  const Row& rest = row_g(t - 2, x + l, x);
  for (int k = 1; k <= kmax; ++k) {
    mpz_ptr acc = row[k].get_mpz_t();
    for (int kp = 1; kp <= k; ++kp) addmul3(acc, binomial_u64(k, kp), tilde[kp], rest[k - kp], tmp_.get_mpz_t());
  }
  return row;
}

CountingContext::Row CountingContext::compute_ft(int t, int x, int l) {
  const int kmax = n_ - x - l;
  Row row(kmax + 1, BigNat(0));
  if (t == 1) return row;
  const Row& fp = row_ftp(t, x, l, x);
  const Row& one = row_gt1(t - 1, x + l);
  const Row& two = row_gt2(t - 1, x + l);
  const Row& gp = row_gtp(t - 1, x + l, x);
  for (int k = 1; k <= kmax; ++k) {
    mpz_ptr acc = row[k].get_mpz_t();
    mpz_set(acc, fp[k].get_mpz_t());
    for (int kp = 1; kp <= k; ++kp) {
      const std::uint64_t c = binomial_u64(k, kp);
      addmul3(acc, c, one[kp], fp[k - kp], tmp_.get_mpz_t());
      addmul3(acc, c, two[kp], gp[k - kp], tmp_.get_mpz_t());
    }
  }
  return row;
}

CountingContext::Row CountingContext::compute_ftp_helper(int t, int x, int l, int z) {
  const int kmax = n_ - x - l;
  Row row(kmax + 1, BigNat(0));
  if (t == 1 || kmax == 0) return row;
  const int rmax = x + l - 1;
  std::vector<const Row*> one(rmax + 1, nullptr);
  for (int r = 1; r <= rmax; ++r) one[r] = &row_gt1(t - 1, r);
  std::vector<const Row*> inner(l, nullptr);
  for (int lp = 1; lp < l; ++lp) inner[lp] = &row_ftp(t, x + lp, l - lp, z);
  const Row& gp = row_gtp(t - 1, x + l, z);

  // hr[r][k] = helper sum for (t, x, l, z, r, k); column k needs row[k].
  std::vector<Row> hr(rmax + 1, Row(kmax + 1, BigNat(0)));
  auto fill_column = [&](int k) {
    for (int r = 1; r <= rmax; ++r) {
      mpz_ptr acc = hr[r][k].get_mpz_t();
      for (int lp = std::max(0, r - x); lp <= std::min(r, l); ++lp) {
        const int xp = r - lp;
        std::uint64_t w = binomial_u64(l, lp) * root_weight(x, z, xp, lp > 0);
        const BigNat& tail = lp < l ? (lp == 0 ? row[k] : (*inner[lp])[k]) : gp[k];
        addmul2(acc, w, tail);
      }
    }
  };
  fill_column(0);
  BigNat part;
  for (int k = 1; k <= kmax; ++k) {
    mpz_ptr acc = row[k].get_mpz_t();
    for (int kp = 1; kp <= k; ++kp) {
      part = 0;
      for (int r = 1; r <= rmax; ++r) {
        const BigNat& a = (*one[r])[kp];
        const BigNat& b = hr[r][k - kp];
        if (sgn(a) != 0 && sgn(b) != 0) mpz_addmul(part.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      }
      addmul2(acc, binomial_u64(k - 1, kp - 1), part);
    }
    fill_column(k);
  }
  return row;
}

CountingContext::Row CountingContext::compute_ftp_direct(int t, int x, int l, int z) {
  const int kmax = n_ - x - l;
  Row row(kmax + 1, BigNat(0));
  if (t == 1 || kmax == 0) return row;
  std::vector<const Row*> one(x + l, nullptr);
  for (int r = 1; r < x + l; ++r) one[r] = &row_gt1(t - 1, r);
  std::vector<const Row*> inner(l, nullptr);
  for (int lp = 1; lp < l; ++lp) inner[lp] = &row_ftp(t, x + lp, l - lp, z);
  const Row& gp = row_gtp(t - 1, x + l, z);
  for (int k = 1; k <= kmax; ++k) {
    mpz_ptr acc = row[k].get_mpz_t();
    for (int kp = 1; kp <= k; ++kp) {
      for (int xp = 0; xp <= x; ++xp) {
        for (int lp = 0; lp <= l; ++lp) {
          if (xp + lp == 0 || xp + lp == x + l) continue;
          std::uint64_t w = binomial_u64(l, lp) * root_weight(x, z, xp, lp > 0);
          const BigNat& tail = lp < l ? (lp == 0 ? row[k - kp] : (*inner[lp])[k - kp]) : gp[k - kp];
          addmul4(acc, binomial_u64(k - 1, kp - 1), w, (*one[xp + lp])[kp], tail, tmp_.get_mpz_t());
        }
      }
    }
  }
  return row;
}

// ---- checked accessors ----

#define CHORDAL_REQUIRE(cond, name, ...) \
  do {                                   \
    if (!(cond)) domain_error(name, {__VA_ARGS__}); \
  } while (0)

const BigNat& CountingContext::g(int t, int x, int k, int z) {
  CHORDAL_REQUIRE(t >= 0 && t <= n_ && x >= 1 && x <= n_ && z >= 0 && z < x && k >= 0 && x + k <= n_, "g", t, x, k, z);
  return row_g(t, x, z)[k];
}
const BigNat& CountingContext::g_tilde(int t, int x, int k, int z) {
  CHORDAL_REQUIRE(t >= 0 && t <= n_ && x >= 1 && x <= n_ && z >= 0 && z < x && k >= 0 && x + k <= n_, "g_tilde", t, x, k, z);
  return row_gt(t, x, z)[k];
}
const BigNat& CountingContext::g_tilde_p(int t, int x, int k, int z) {
  CHORDAL_REQUIRE(t >= 0 && t <= n_ && x >= 1 && x <= n_ && z >= 0 && z < x && k >= 0 && x + k <= n_, "g_tilde_p", t, x, k, z);
  return row_gtp(t, x, z)[k];
}
const BigNat& CountingContext::g_tilde_1(int t, int x, int k) {
  CHORDAL_REQUIRE(t >= 0 && t <= n_ && x >= 0 && k >= 0 && x + k <= n_, "g_tilde_1", t, x, k);
  return row_gt1(t, x)[k];
}
const BigNat& CountingContext::g_tilde_ge2(int t, int x, int k) {
  CHORDAL_REQUIRE(t >= 0 && t <= n_ && x >= 1 && k >= 0 && x + k <= n_, "g_tilde_ge2", t, x, k);
  return row_gt2(t, x)[k];
}
const BigNat& CountingContext::f(int t, int x, int l, int k) {
  CHORDAL_REQUIRE(t >= 1 && t <= n_ && x >= 0 && l >= 1 && k >= 0 && x + l + k <= n_, "f", t, x, l, k);
  return row_f(t, x, l)[k];
}
const BigNat& CountingContext::f_tilde(int t, int x, int l, int k) {
  CHORDAL_REQUIRE(t >= 1 && t <= n_ && x >= 0 && l >= 1 && k >= 0 && x + l + k <= n_, "f_tilde", t, x, l, k);
  return row_ft(t, x, l)[k];
}
const BigNat& CountingContext::f_tilde_p(int t, int x, int l, int k, int z) {
  CHORDAL_REQUIRE(t >= 1 && t <= n_ && x >= 0 && l >= 1 && k >= 0 && x + l + k <= n_ && z >= 0 && z <= x, "f_tilde_p", t, x, l, k, z);
  return row_ftp(t, x, l, z)[k];
}

BigNat CountingContext::h(int t, int x, int l, int z, int r, int k) {
  CHORDAL_REQUIRE(t >= 2 && t <= n_ && x >= 0 && l >= 1 && k >= 0 && x + l + k <= n_ && z >= 0 && z <= x && r >= 1 && r <= x + l - 1,
                  "h", t, x, l, z, r, k);
  for (int lp = 0; lp < l; ++lp) row_ftp(t, x + lp, l - lp, z);
  row_gtp(t - 1, x + l, z);
  return static_cast<const CountingContext&>(*this).h(t, x, l, z, r, k);
}

const CountingContext::Row& CountingContext::stored(Table tab, std::size_t idx) const {
  const Row& row = tables_[tab].rows[idx];
  if (row.empty()) fail(Errc::not_filled, "counting context is not filled for this entry");
  return row;
}

const BigNat& CountingContext::g(int t, int x, int k, int z) const {
  CHORDAL_REQUIRE(t >= 0 && t <= n_ && x >= 1 && x <= n_ && z >= 0 && z < x && k >= 0 && x + k <= n_, "g", t, x, k, z);
  return stored(kG, tables_[kG].index(t, x, z))[k];
}
const BigNat& CountingContext::g_tilde(int t, int x, int k, int z) const {
  CHORDAL_REQUIRE(t >= 0 && t <= n_ && x >= 1 && x <= n_ && z >= 0 && z < x && k >= 0 && x + k <= n_, "g_tilde", t, x, k, z);
  return stored(kGt, tables_[kGt].index(t, x, z))[k];
}
const BigNat& CountingContext::g_tilde_p(int t, int x, int k, int z) const {
  CHORDAL_REQUIRE(t >= 0 && t <= n_ && x >= 1 && x <= n_ && z >= 0 && z < x && k >= 0 && x + k <= n_, "g_tilde_p", t, x, k, z);
  return stored(kGtp, tables_[kGtp].index(t, x, z))[k];
}
const BigNat& CountingContext::g_tilde_1(int t, int x, int k) const {
  CHORDAL_REQUIRE(t >= 0 && t <= n_ && x >= 0 && k >= 0 && x + k <= n_, "g_tilde_1", t, x, k);
  return stored(kGt1, tables_[kGt1].index(t, x))[k];
}
const BigNat& CountingContext::g_tilde_ge2(int t, int x, int k) const {
  CHORDAL_REQUIRE(t >= 0 && t <= n_ && x >= 1 && k >= 0 && x + k <= n_, "g_tilde_ge2", t, x, k);
  return stored(kGt2, tables_[kGt2].index(t, x))[k];
}
const BigNat& CountingContext::f(int t, int x, int l, int k) const {
  CHORDAL_REQUIRE(t >= 1 && t <= n_ && x >= 0 && l >= 1 && k >= 0 && x + l + k <= n_, "f", t, x, l, k);
  if (x + l > omega_) return kZero;
  return stored(kF, tables_[kF].index(t, x, l))[k];
}
const BigNat& CountingContext::f_tilde(int t, int x, int l, int k) const {
  CHORDAL_REQUIRE(t >= 1 && t <= n_ && x >= 0 && l >= 1 && k >= 0 && x + l + k <= n_, "f_tilde", t, x, l, k);
  return stored(kFt, tables_[kFt].index(t, x, l))[k];
}
const BigNat& CountingContext::f_tilde_p(int t, int x, int l, int k, int z) const {
  CHORDAL_REQUIRE(t >= 1 && t <= n_ && x >= 0 && l >= 1 && k >= 0 && x + l + k <= n_ && z >= 0 && z <= x, "f_tilde_p", t, x, l, k, z);
  return stored(kFtp, tables_[kFtp].index(t, x, l, z))[k];
}

BigNat CountingContext::h(int t, int x, int l, int z, int r, int k) const {
  CHORDAL_REQUIRE(t >= 2 && t <= n_ && x >= 0 && l >= 1 && k >= 0 && x + l + k <= n_ && z >= 0 && z <= x && r >= 1 && r <= x + l - 1,
                  "h", t, x, l, z, r, k);
  BigNat acc = 0;
  for (int lp = std::max(0, r - x); lp <= std::min(r, l); ++lp) {
    const int xp = r - lp;
    std::uint64_t w = binomial_u64(l, lp) * root_weight(x, z, xp, lp > 0);
    const BigNat& tail = lp < l ? f_tilde_p(t, x + lp, l - lp, k, z) : g_tilde_p(t - 1, x + l, k, z);
    addmul2(acc.get_mpz_t(), w, tail);
  }
  return acc;
}

#undef CHORDAL_REQUIRE

const BigNat& CountingContext::value(CounterClass cls, const CounterArgs& a) {
  switch (cls) {
    case CounterClass::g: return g(a.t, a.x, a.k, a.z);
    case CounterClass::g_tilde: return g_tilde(a.t, a.x, a.k, a.z);
    case CounterClass::g_tilde_p: return g_tilde_p(a.t, a.x, a.k, a.z);
    case CounterClass::g_tilde_1: return g_tilde_1(a.t, a.x, a.k);
    case CounterClass::g_tilde_ge2: return g_tilde_ge2(a.t, a.x, a.k);
    case CounterClass::f: return f(a.t, a.x, a.l, a.k);
    case CounterClass::f_tilde: return f_tilde(a.t, a.x, a.l, a.k);
    case CounterClass::f_tilde_p: return f_tilde_p(a.t, a.x, a.l, a.k);
    case CounterClass::f_tilde_p_z: return f_tilde_p(a.t, a.x, a.l, a.k, a.z);
  }
  fail(Errc::internal, "unknown counter class");
}

const BigNat& CountingContext::value(CounterClass cls, const CounterArgs& a) const {
  switch (cls) {
    case CounterClass::g: return g(a.t, a.x, a.k, a.z);
    case CounterClass::g_tilde: return g_tilde(a.t, a.x, a.k, a.z);
    case CounterClass::g_tilde_p: return g_tilde_p(a.t, a.x, a.k, a.z);
    case CounterClass::g_tilde_1: return g_tilde_1(a.t, a.x, a.k);
    case CounterClass::g_tilde_ge2: return g_tilde_ge2(a.t, a.x, a.k);
    case CounterClass::f: return f(a.t, a.x, a.l, a.k);
    case CounterClass::f_tilde: return f_tilde(a.t, a.x, a.l, a.k);
    case CounterClass::f_tilde_p: return f_tilde_p(a.t, a.x, a.l, a.k);
    case CounterClass::f_tilde_p_z: return f_tilde_p(a.t, a.x, a.l, a.k, a.z);
  }
  fail(Errc::internal, "unknown counter class");
}

const BigNat& CountingContext::count_connected(int n) {
  if (n < 1 || n > n_) domain_error("count_connected", {n});
  if (!c_[n]) {
    BigNat acc = 0;
    for (int t = 1; t <= n; ++t) acc += row_gt1(t, 0)[n];
    c_[n] = std::move(acc);
  }
  return *c_[n];
}

const BigNat& CountingContext::count_all(int n) {
  if (n < 0 || n > n_) domain_error("count_all", {n});
  if (!a_[n]) {
    BigNat acc = 0;
    if (n == 0) acc = 1;
    for (int k = 1; k <= n; ++k) {
      const BigNat& rest = count_all(n - k);
      addmul3(acc.get_mpz_t(), binomial_u64(n - 1, k - 1), count_connected(k), rest, tmp_.get_mpz_t());
    }
    a_[n] = std::move(acc);
  }
  return *a_[n];
}

const BigNat& CountingContext::count_connected(int n) const {
  if (n < 1 || n > n_) domain_error("count_connected", {n});
  if (!c_[n]) fail(Errc::not_filled, "counting context is not filled");
  return *c_[n];
}

const BigNat& CountingContext::count_all(int n) const {
  if (n < 0 || n > n_) domain_error("count_all", {n});
  if (!a_[n]) fail(Errc::not_filled, "counting context is not filled");
  return *a_[n];
}

void CountingContext::fill_all() {
  if (filled_) return;
  for (int n = 0; n <= n_; ++n) count_all(n);
  const int top = std::min(n_, omega_);
  for (int t = 0; t <= n_; ++t) {
    for (int x = 0; x <= top; ++x) {
      row_gt1(t, x);
      if (x >= 1) {
        row_gt2(t, x);
        for (int z = 0; z < x; ++z) {
          row_g(t, x, z);
          row_gt(t, x, z);
          row_gtp(t, x, z);
        }
      }
      if (t >= 1) {
        for (int l = 1; x + l <= top; ++l) {
          row_f(t, x, l);
          row_ft(t, x, l);
          for (int z = 0; z <= x; ++z) row_ftp(t, x, l, z);
        }
      }
    }
  }
  filled_ = true;
}

std::size_t CountingContext::stored_entries() const {
  std::size_t total = 0;
  for (const auto& tbl : tables_)
    for (const auto& row : tbl.rows) total += row.size();
  return total;
}

}  // namespace chordal
