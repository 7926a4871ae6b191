// chordal-lab: count and sample labeled chordal graphs.
#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "chordal/chordal.h"

namespace {

struct CliConfig {
  int n = -1;
  std::optional<int> omega;
  bool connected = false;
  std::string epsilon = "0.001";
  std::optional<std::uint64_t> seed;
  long long count = 1;
  std::string format = "edge-list";
  std::string out;
  bool by_omega = false;
  chordal_thresholds thresholds = chordal_default_thresholds();
};

struct CliFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(chordal_status st) {
  if (st != CHORDAL_OK) {
    std::string msg = chordal_last_error();
    throw CliFailure(msg.empty() ? chordal_status_name(st) : msg);
  }
}

std::string take(char* s) {
  std::string out(s);
  chordal_string_free(s);
  return out;
}

struct ContextHandle {
  chordal_context* p = nullptr;
  ContextHandle(int n, int omega) { check(chordal_context_create(n, omega, &p)); }
  ~ContextHandle() { chordal_context_destroy(p); }
  ContextHandle(const ContextHandle&) = delete;
  ContextHandle& operator=(const ContextHandle&) = delete;
};

struct ApproxHandle {
  chordal_approx_sampler* p = nullptr;
  ApproxHandle(int n, const std::string& eps, const chordal_thresholds& th) {
    check(chordal_approx_sampler_create(n, eps.c_str(), &th, &p));
  }
  ~ApproxHandle() { chordal_approx_sampler_destroy(p); }
  ApproxHandle(const ApproxHandle&) = delete;
  ApproxHandle& operator=(const ApproxHandle&) = delete;
};

int resolve_omega(const CliConfig& cfg) {
  int omega = cfg.omega.value_or(std::max(cfg.n, 1));
  if (omega < 1) throw CliFailure("omega must be at least 1");
  return omega;
}

void require_n(const CliConfig& cfg) {
  if (cfg.n < 0) throw CliFailure("--n must be a nonnegative integer");
}

chordal_format format_of(const CliConfig& cfg) {
  return cfg.format == "json" ? CHORDAL_FORMAT_JSON : CHORDAL_FORMAT_EDGE_LIST;
}

std::uint64_t resolve_seed(const CliConfig& cfg) {
  if (cfg.seed) return *cfg.seed;
  std::random_device rd;
  std::uint64_t s = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
  std::cerr << "chordal-lab: seed " << s << "\n";
  return s;
}

unsigned thread_cap() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("CHORDAL_LAB_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1) throw CliFailure("CHORDAL_LAB_THREADS must be a positive integer");
    return static_cast<unsigned>(v);
  }
  return hw;
}

// Runs draw(i) for i in [0, count) across worker threads, writing results in index order.
template <typename Draw>
void run_batch(long long count, std::ostream& os, Draw&& draw) {
  if (count < 0) throw CliFailure("--count must be nonnegative");
  const long long block = 4096;
  const unsigned workers = static_cast<unsigned>(std::min<long long>(thread_cap(), std::max<long long>(count, 1)));
  std::vector<std::string> buf;
  for (long long start = 0; start < count; start += block) {
    const long long len = std::min(block, count - start);
    buf.assign(static_cast<std::size_t>(len), std::string());
    std::vector<std::string> errors(workers);
    auto work = [&](unsigned w) {
      try {
        for (long long i = w; i < len; i += workers) buf[static_cast<std::size_t>(i)] = draw(start + i);
      } catch (const std::exception& e) {
        errors[w] = e.what();
      }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work, w);
    work(0);
    for (auto& t : pool) t.join();
    for (const auto& e : errors)
      if (!e.empty()) throw CliFailure(e);
    for (const auto& s : buf) os << s;
  }
}

std::string render(chordal_graph* g, chordal_format fmt) {
  char* text = nullptr;
  chordal_status st = chordal_graph_format(g, fmt, &text);
  chordal_graph_destroy(g);
  check(st);
  return take(text);
}

void cmd_count(const CliConfig& cfg, std::ostream& os) {
  require_n(cfg);
  ContextHandle ctx(cfg.n, resolve_omega(cfg));
  char* s = nullptr;
  check(cfg.connected ? chordal_count_connected(ctx.p, cfg.n, &s) : chordal_count_all(ctx.p, cfg.n, &s));
  os << take(s) << "\n";
}

void cmd_sample(const CliConfig& cfg, std::ostream& os) {
  require_n(cfg);
  ContextHandle ctx(cfg.n, resolve_omega(cfg));
  check(chordal_context_fill(ctx.p));
  const std::uint64_t seed = resolve_seed(cfg);
  const chordal_format fmt = format_of(cfg);
  run_batch(cfg.count, os, [&](long long i) {
    chordal_rng* rng = nullptr;
    check(chordal_rng_create_stream(seed, static_cast<std::uint64_t>(i), &rng));
    chordal_graph* g = nullptr;
    chordal_status st = chordal_sample(ctx.p, cfg.n, cfg.connected ? 1 : 0, rng, &g);
    chordal_rng_destroy(rng);
    check(st);
    return render(g, fmt);
  });
}

void cmd_approx_count(const CliConfig& cfg, std::ostream& os) {
  require_n(cfg);
  char* s = nullptr;
  check(chordal_approx_count(cfg.n, cfg.epsilon.c_str(), &cfg.thresholds, &s));
  os << take(s) << "\n";
}

void cmd_approx_sample(const CliConfig& cfg, std::ostream& os) {
  require_n(cfg);
  ApproxHandle sampler(cfg.n, cfg.epsilon, cfg.thresholds);
  const std::uint64_t seed = resolve_seed(cfg);
  const chordal_format fmt = format_of(cfg);
  run_batch(cfg.count, os, [&](long long i) {
    chordal_rng* rng = nullptr;
    check(chordal_rng_create_stream(seed, static_cast<std::uint64_t>(i), &rng));
    chordal_graph* g = nullptr;
    chordal_status st = chordal_approx_sample(sampler.p, rng, &g, nullptr);
    chordal_rng_destroy(rng);
    check(st);
    return render(g, fmt);
  });
}

void emit_row(std::ostream& os, int n, int omega, ContextHandle& ctx) {
  char* c = nullptr;
  char* a = nullptr;
  check(chordal_count_connected(ctx.p, n, &c));
  std::string cs = take(c);
  check(chordal_count_all(ctx.p, n, &a));
  os << n << "," << omega << "," << cs << "," << take(a) << "\n";
}

void cmd_tables(const CliConfig& cfg, std::ostream& os) {
  require_n(cfg);
  os << "n,omega,connected_count,all_count\n";
  if (cfg.n == 0) return;
  if (cfg.by_omega) {
    for (int omega = 1; omega <= cfg.n; ++omega) {
      ContextHandle ctx(cfg.n, omega);
      for (int n = omega; n <= cfg.n; ++n) emit_row(os, n, omega, ctx);
    }
    return;
  }
  const int omega = resolve_omega(cfg);
  ContextHandle ctx(cfg.n, omega);
  for (int n = 1; n <= cfg.n; ++n) emit_row(os, n, std::min(omega, n), ctx);
}

void add_common(CLI::App* sub, CliConfig& cfg) {
  sub->add_option("--n", cfg.n, "Number of vertices")->required();
  sub->add_option("--out", cfg.out, "Output path (default stdout)");
}

void add_omega(CLI::App* sub, CliConfig& cfg) {
  sub->add_option("--omega", cfg.omega, "Maximum clique size (default n)");
}

void add_sampling(CLI::App* sub, CliConfig& cfg) {
  sub->add_option("--seed", cfg.seed, "64-bit seed (default: entropy)");
  sub->add_option("--count", cfg.count, "Number of samples")->check(CLI::NonNegativeNumber);
  sub->add_option("--format", cfg.format, "Graph format")->check(CLI::IsMember({"edge-list", "json"}));
}

void add_approx(CLI::App* sub, CliConfig& cfg) {
  sub->add_option("--epsilon", cfg.epsilon, "Accuracy in (0,1) as a decimal string, e.g. 1e-6");
  sub->add_option("--n1", cfg.thresholds.n1, "Size threshold N1");
  sub->add_option("--n2", cfg.thresholds.n2, "Size threshold N2");
  sub->add_option("--n3", cfg.thresholds.n3, "Size threshold N3");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Count and sample labeled chordal graphs"};
  app.require_subcommand(1);
  CliConfig cfg;

  auto* count = app.add_subcommand("count", "Exact number of chordal graphs on [n]");
  add_common(count, cfg);
  add_omega(count, cfg);
  count->add_flag("--connected", cfg.connected, "Count connected graphs only");

  auto* sample = app.add_subcommand("sample", "Uniform samples of chordal graphs on [n]");
  add_common(sample, cfg);
  add_omega(sample, cfg);
  add_sampling(sample, cfg);
  sample->add_flag("--connected", cfg.connected, "Sample connected graphs only");

  auto* acount = app.add_subcommand("approx-count", "Approximate number of chordal graphs on [n]");
  add_common(acount, cfg);
  add_approx(acount, cfg);

  auto* asample = app.add_subcommand("approx-sample", "Approximately uniform chordal graphs on [n]");
  add_common(asample, cfg);
  add_approx(asample, cfg);
  add_sampling(asample, cfg);

  auto* tables = app.add_subcommand("tables", "CSV of exact counts for 1..n");
  add_common(tables, cfg);
  add_omega(tables, cfg);
  tables->add_flag("--by-omega", cfg.by_omega, "One row per (n, omega) with omega <= n");

  CLI11_PARSE(app, argc, argv);

  try {
    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!cfg.out.empty()) {
      file.open(cfg.out, std::ios::binary);
      if (!file) throw CliFailure("cannot open output file " + cfg.out);
      os = &file;
    }
    if (count->parsed()) cmd_count(cfg, *os);
    else if (sample->parsed()) cmd_sample(cfg, *os);
    else if (acount->parsed()) cmd_approx_count(cfg, *os);
    else if (asample->parsed()) cmd_approx_sample(cfg, *os);
    else cmd_tables(cfg, *os);
    os->flush();
    if (!*os) throw CliFailure("write failed");
  } catch (const std::exception& e) {
    std::cerr << "chordal-lab: error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
