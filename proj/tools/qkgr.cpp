#include <cstdlib>
#include <exception>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "qkgr/engine.hpp"
#include "qkgr/reduction_trace.hpp"
#include "qkgr/verify.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

// Rings up to this many Schubert classes are small enough to attach an
// exact value to a reduction trace.
constexpr std::size_t kTraceOracleLimit = 210;

struct RingFlags {
  int k = 2;
  int n = 4;
  std::optional<int> trunc;
  int jobs = 1;
  bool json = false;
};

std::optional<int> env_truncation() {
  const char* raw = std::getenv("QKGR_TRUNC");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  try {
    std::size_t used = 0;
    const int value = std::stoi(raw, &used);
    if (used == std::string(raw).size()) return value;
  } catch (const std::exception&) {
  }
  throw std::invalid_argument(std::string("QKGR_TRUNC is not an integer: ") + raw);
}

qkgr::GrContext make_ring(const RingFlags& f) {
  return qkgr::GrContext::make(f.k, f.n, f.trunc ? f.trunc : env_truncation());
}

qkgr::EngineOptions engine_options(const RingFlags& f) {
  qkgr::EngineOptions options;
  options.jobs = f.jobs;
  return options;
}

void add_ring_flags(CLI::App* cmd, RingFlags& f, bool k_required) {
  auto* k = cmd->add_option("-k", f.k, "Dimension of the subspaces");
  if (k_required) k->required();
  cmd->add_option("-n", f.n, "Dimension of the ambient space")->required();
  cmd->add_option("--trunc", f.trunc, "Truncation degree D (default from QKGR_TRUNC or the ring)");
  cmd->add_option("--jobs", f.jobs, "Worker threads")->check(CLI::PositiveNumber);
  cmd->add_flag("--json", f.json, "Machine-readable output");
}

int cmd_product(const RingFlags& f, const std::string& lhs, const std::string& rhs) {
  const qkgr::GrContext ctx = make_ring(f);
  const qkgr::Partition lambda = qkgr::parse_partition(ctx, lhs);
  const qkgr::Partition mu = qkgr::parse_partition(ctx, rhs);
  const qkgr::QKEngine engine(ctx, engine_options(f));
  const qkgr::QKElement result = engine.product(lambda, mu);
  if (f.json) {
    std::cout << result.to_json() << '\n';
  } else {
    std::cout << result.to_string() << '\n';
  }
  return kOk;
}

int cmd_verify(const RingFlags& f, const std::string& suite, std::uint64_t samples, std::uint64_t seed) {
  qkgr::SweepOptions options;
  options.k = f.k;
  options.n = f.n;
  options.jobs = f.jobs;
  options.trunc = f.trunc ? f.trunc : env_truncation();
  options.samples = samples;
  options.seed = seed;
  const qkgr::SuiteReport report = qkgr::run_suite(suite, options);
  if (f.json) {
    std::cout << report.to_json() << '\n';
  } else {
    std::cout << report.to_text();
  }
  return report.passed() ? kOk : kFailure;
}

int cmd_reduce(const RingFlags& f, const std::string& lhs, const std::string& rhs, const std::string& nu, int deg) {
  const qkgr::GrContext ctx = make_ring(f);
  const qkgr::IndexTuple start{qkgr::parse_partition(ctx, lhs), qkgr::parse_partition(ctx, rhs),
                               qkgr::parse_partition(ctx, nu), deg};
  const qkgr::ReductionTrace trace = qkgr::greedy_reduce(ctx, start);
  std::optional<qkgr::Coeff> value;
  if (trace.vanishes()) {
    value = 0;
  } else if (qkgr::binomial(ctx.n, ctx.k) <= static_cast<qkgr::Coeff>(kTraceOracleLimit)) {
    const qkgr::QKEngine engine(ctx, engine_options(f));
    const qkgr::IndexTuple last = trace.final_tuple();
    value = last.d >= 0 ? engine.structure_constant(last) : 0;
  }
  if (f.json) {
    std::cout << qkgr::trace_json(trace, value) << '\n';
  } else {
    std::cout << qkgr::trace_text(trace, value);
  }
  return kOk;
}

int cmd_table(const RingFlags& f, bool csv) {
  const qkgr::GrContext ctx = make_ring(f);
  const qkgr::QKEngine engine(ctx, engine_options(f));
  engine.build_table();
  if (csv) {
    engine.write_csv(std::cout);
  } else {
    engine.write_jsonl(std::cout);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact products in the quantum K-theory of Grassmannians"};
  app.require_subcommand(1);

  RingFlags product_flags;
  std::string lhs, rhs, nu;
  auto* product = app.add_subcommand("product", "Expand O^lhs * O^rhs");
  add_ring_flags(product, product_flags, true);
  product->add_option("--lhs", lhs, "Left partition, e.g. 4,0,0,0")->required();
  product->add_option("--rhs", rhs, "Right partition")->required();

  RingFlags verify_flags;
  verify_flags.k = 3;
  std::string suite;
  std::uint64_t samples = 0;
  std::uint64_t seed = 20240601;
  auto* verify = app.add_subcommand("verify", "Run an exhaustive verification sweep");
  verify->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(qkgr::suite_names()));
  add_ring_flags(verify, verify_flags, false);
  verify->add_option("--samples", samples, "Sample this many associativity triples (0 = all)");
  verify->add_option("--seed", seed, "Seed for sampled triples");

  RingFlags reduce_flags;
  std::string reduce_lhs, reduce_rhs;
  int deg = 0;
  auto* reduce = app.add_subcommand("reduce", "Greedily reduce a structure constant index");
  add_ring_flags(reduce, reduce_flags, true);
  reduce->add_option("--lhs", reduce_lhs, "lambda")->required();
  reduce->add_option("--rhs", reduce_rhs, "mu")->required();
  reduce->add_option("--nu", nu, "nu")->required();
  reduce->add_option("--deg", deg, "Degree d")->required();

  RingFlags table_flags;
  bool csv = false;
  auto* table = app.add_subcommand("table", "Print the full multiplication table");
  add_ring_flags(table, table_flags, true);
  table->add_flag("--csv", csv, "CSV instead of JSON lines");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*product) return cmd_product(product_flags, lhs, rhs);
    if (*verify) return cmd_verify(verify_flags, suite, samples, seed);
    if (*reduce) return cmd_reduce(reduce_flags, reduce_lhs, reduce_rhs, nu, deg);
    if (*table) return cmd_table(table_flags, csv);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}
