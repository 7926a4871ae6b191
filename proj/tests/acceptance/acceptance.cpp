// Prints one PASS/FAIL line per acceptance criterion. Exit status is nonzero
// when any gating criterion fails.
//
//   acceptance --cli <path to chordal-lab> [--stretch]

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "chordal/approx_split.hpp"
#include "chordal/counter.hpp"
#include "chordal/oracle.hpp"
#include "chordal/sampler.hpp"
#include "../fixtures.hpp"

using namespace chordal;
using chordal::testing::kConnected;
using chordal::testing::kConnectedByOmega;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  std::string id;
  std::string title;
  double budget_seconds;
  std::function<Outcome()> run;
  bool gating = true;
};

Outcome fail(std::string why) { return {false, std::move(why)}; }

Rational pow2_inv(int e) {
  BigNat den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, e);
  return Rational(BigNat(1), den);
}

std::string run_command(const std::string& cmd, int* status) {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    *status = -1;
    return out;
  }
  std::array<char, 65536> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  *status = pclose(pipe);
  return out;
}

Outcome connected_up_to_twelve() {
  CountingContext ctx(12, 12);
  for (int n = 1; n <= 12; ++n) {
    std::string got = to_decimal(ctx.count_connected(n));
    if (got != kConnected[n - 1]) return fail("n=" + std::to_string(n) + " got " + got);
  }
  return {true, "n=1..12"};
}

Outcome deep_point(int n, const char* expect) {
  CountingContext ctx(n, n);
  std::string got = to_decimal(ctx.count_connected(n));
  if (got != expect) return fail("got " + got);
  return {true, "n=" + std::to_string(n) + " max depth " + std::to_string(ctx.max_depth()) + "/" +
                    std::to_string(ctx.depth_limit())};
}

Outcome connected_by_omega() {
  int entries = 0;
  for (int omega = 2; omega <= 12; ++omega) {
    CountingContext ctx(12, omega);
    for (int n = omega; n <= 12; ++n) {
      std::string got = to_decimal(ctx.count_connected(n));
      if (got != kConnectedByOmega[n - 2][omega - 2])
        return fail("n=" + std::to_string(n) + " omega=" + std::to_string(omega) + " got " + got);
      ++entries;
    }
    if (omega == 2)
      for (int n = 2; n <= 12; ++n) {
        BigNat trees;
        mpz_ui_pow_ui(trees.get_mpz_t(), n, n - 2);
        if (ctx.count_connected(n) != trees) return fail("tree count n=" + std::to_string(n));
      }
  }
  return {true, std::to_string(entries) + " entries"};
}

Outcome oracle_gate() {
  int checks = 0;
  for (int n = 1; n <= 6; ++n) {
    oracle::BruteCounts bc = oracle::brute_counts(n, {true, false, false});
    for (int omega = 1; omega <= n; ++omega) {
      CountingContext ctx(n, omega);
      if (ctx.count_all(n) != bc.chordal_all[omega] || ctx.count_connected(n) != bc.chordal_connected[omega])
        return fail("n=" + std::to_string(n) + " omega=" + std::to_string(omega));
      checks += 2;
    }
  }
  return {true, std::to_string(checks) + " exact comparisons"};
}

Outcome helper_vs_direct() {
  const int n = 8;
  CountingContext helper(n, n, FpStrategy::helper);
  CountingContext direct(n, n, FpStrategy::direct);
  helper.fill_all();
  direct.fill_all();
  std::size_t keys = 0;
  for (int t = 1; t <= n; ++t)
    for (int x = 0; x <= n; ++x)
      for (int l = 1; x + l <= n; ++l)
        for (int k = 0; x + l + k <= n; ++k)
          for (int z = 0; z <= x; ++z) {
            if (helper.f_tilde_p(t, x, l, k, z) != direct.f_tilde_p(t, x, l, k, z))
              return fail("t=" + std::to_string(t) + " x=" + std::to_string(x) + " l=" + std::to_string(l) +
                          " k=" + std::to_string(k) + " z=" + std::to_string(z));
            ++keys;
          }
  if (helper.count_connected(n) != direct.count_connected(n)) return fail("c(8) differs");
  return {true, std::to_string(keys) + " keys"};
}

std::vector<LabeledGraph> brute_chordal(int n) {
  oracle::BruteCounts bc = oracle::brute_counts(n, {true, false, true});
  std::vector<LabeledGraph> out;
  for (std::uint32_t m : bc.chordal_masks) out.push_back(oracle::graph_from_mask(n, m));
  return out;
}

Outcome sampler_validity() {
  std::vector<LabeledGraph> support = brute_chordal(4);
  if (support.size() != 61) return fail("brute support has " + std::to_string(support.size()) + " graphs");
  CountingContext ctx(4, 4);
  ctx.fill_all();
  RandomStream rng(20240601);
  std::vector<LabeledGraph> samples;
  samples.reserve(100000);
  for (int i = 0; i < 100000; ++i) {
    LabeledGraph g = sample_chordal(4, ctx, rng);
    if (g.vertices() != label_range(4) || !is_chordal(g) || max_clique_size(g) > 4) return fail("invalid output");
    samples.push_back(std::move(g));
  }
  oracle::UniformityResult r = oracle::uniformity_test(samples, support);
  std::ostringstream d;
  d << "chi2=" << r.statistic << " critical=" << r.critical << " df=" << r.degrees_of_freedom;
  if (!r.pass) return fail(d.str() + " " + r.failure);
  return {true, d.str()};
}

Outcome sampler_support() {
  std::vector<LabeledGraph> support = brute_chordal(3);
  CountingContext ctx(3, 3);
  ctx.fill_all();
  RandomStream rng(31337);
  std::set<LabeledGraph> seen;
  for (int i = 0; i < 100000; ++i) seen.insert(sample_chordal(3, ctx, rng));
  if (seen != std::set<LabeledGraph>(support.begin(), support.end()))
    return fail(std::to_string(seen.size()) + " distinct outputs");
  return {true, std::to_string(seen.size()) + " distinct graphs, equal to brute force"};
}

Outcome split_exactness() {
  for (int n = 2; n <= 7; ++n) {
    oracle::BruteCounts bc = oracle::brute_counts(n, {false, true, false});
    if (split_count_qge2_exact(n) != bc.split_qge2)
      return fail("n=" + std::to_string(n) + " brute " + std::to_string(bc.split_qge2));
  }
  return {true, "n=2..7"};
}

Outcome truncation() {
  int checks = 0;
  for (int n : {70, 100, 200})
    for (int e : {7, 20}) {
      Rational eps = pow2_inv(e);
      Rational lo = 1 - eps;
      const std::pair<BigNat, BigNat> pairs[] = {
          {split_count_qge2_truncated(n, eps), split_count_qge2_exact(n) - 2},
          {split_count_q0_truncated(n, eps), split_count_q0_full(n)},
          {split_count_q1_truncated(n, eps), split_count_q1_full(n)},
      };
      for (const auto& [trunc, full] : pairs) {
        if (trunc > full || Rational(trunc) < lo * Rational(full))
          return fail("n=" + std::to_string(n) + " eps=2^-" + std::to_string(e));
        ++checks;
      }
    }
  return {true, std::to_string(checks) + " inequalities"};
}

Outcome approx_dispatch() {
  CountingContext ctx(12, 12);
  for (int n = 0; n <= 12; ++n)
    for (const char* eps : {"0.5", "1e-3", "1e-9"})
      if (approx_count_chordal(n, parse_epsilon(eps)) != ctx.count_all(n))
        return fail("delegation n=" + std::to_string(n) + " eps=" + eps);
  ApproxChordalSampler sampler(200, parse_epsilon("1e-3"));
  if (sampler.uses_exact_path()) return fail("n=200 took the exact path");
  RandomStream rng(4242);
  long iterations = 0;
  for (int i = 0; i < 1000; ++i) {
    SplitSample s = sampler.sample(rng);
    if (s.graph.vertices() != label_range(200) || !split_partition(s.graph)) return fail("non-split output");
    iterations += s.iterations;
  }
  double mean = static_cast<double>(iterations) / 1000.0;
  std::ostringstream d;
  d << "1000 split samples at n=200, mean iterations " << mean;
  if (mean > 2.0) return fail(d.str());
  return {true, d.str()};
}

Outcome determinism(const std::string& cli) {
  if (cli.empty()) return fail("no --cli path given");
  const std::vector<std::string> commands = {
      "sample --n 4 --omega 2 --connected --seed 7 --count 2000",
      "sample --n 12 --seed 11 --count 300 --format json",
      "approx-sample --n 200 --epsilon 1e-3 --seed 5 --count 20",
  };
  for (const auto& args : commands) {
    int s1 = 0, s2 = 0, s3 = 0;
    std::string a = run_command("CHORDAL_LAB_THREADS=1 '" + cli + "' " + args, &s1);
    std::string b = run_command("CHORDAL_LAB_THREADS=1 '" + cli + "' " + args, &s2);
    std::string c = run_command("CHORDAL_LAB_THREADS=4 '" + cli + "' " + args, &s3);
    if (s1 != 0 || s2 != 0 || s3 != 0) return fail("nonzero exit for: " + args);
    if (a.empty()) return fail("empty output for: " + args);
    if (a != b) return fail("two runs differ for: " + args);
    if (a != c) return fail("thread count changes output for: " + args);
  }
  return {true, std::to_string(commands.size()) + " commands byte-identical across runs and thread counts"};
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli;
  bool stretch = false;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--cli" && i + 1 < argc) {
      cli = argv[++i];
    } else if (arg == "--stretch") {
      stretch = true;
    } else {
      std::cerr << "usage: acceptance --cli <chordal-lab> [--stretch]\n";
      return 2;
    }
  }

  std::vector<Criterion> criteria = {
      {"1", "connected counts n=1..12", 10, connected_up_to_twelve},
      {"2", "connected count n=20", 180, [] { return deep_point(20, chordal::testing::kConnected20); }},
      {"3", "connected counts by omega, n<=12", 60, connected_by_omega},
      {"4", "oracle gate n<=6", 60, oracle_gate},
      {"5", "helper and direct f_tilde_p agree at n_max=8", 60, helper_vs_direct},
      {"6", "sampler validity and uniformity at (4,4)", 60, sampler_validity},
      {"7", "sampler support at n=3", 60, sampler_support},
      {"8", "split |Q|>=2 exactness", 60, split_exactness},
      {"9", "truncation guarantee", 10, truncation},
      {"10", "approx dispatch and rejection rate", 120, approx_dispatch},
      {"11", "CLI determinism", 120, [&] { return determinism(cli); }},
  };
  if (stretch)
    criteria.push_back({"2s", "connected count n=30 (stretch, non-gating)", 900,
                        [] { return deep_point(30, chordal::testing::kConnected30); }, false});

  int failures = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.pass && secs > c.budget_seconds) o = fail(o.detail + "; over the time budget");
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " [" << o.detail << "] "
         << secs << "s";
    std::cout << line.str() << std::endl;
    if (!o.pass && c.gating) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
