#pragma once

// Exhaustive (or seeded-sample) consistency sweeps over one ring Gr(k,n).
// Each suite returns per-check counts and the first failing case.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qkgr {

struct CheckCount {
  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t failed = 0;
  std::optional<std::string> first_failure;
};

class SuiteReport {
 public:
  SuiteReport() = default;
  SuiteReport(std::string suite, std::string ring) : suite_(std::move(suite)), ring_(std::move(ring)) {}

  /// Counts one check; `describe` is only invoked for the first failure.
  template <typename Describe>
  void record(std::string_view check, bool ok, Describe&& describe) {
    CheckCount& c = slot(check);
    ++c.checked;
    if (!ok && c.failed++ == 0) c.first_failure = describe();
  }
  void record(std::string_view check, bool ok) {
    record(check, ok, [] { return std::string("(no detail)"); });
  }
  /// Appends another report's counts (kept in first-seen order).
  void merge(const SuiteReport& other);
  void set_metric(std::string name, long long value);

  const std::string& suite() const { return suite_; }
  const std::string& ring() const { return ring_; }
  const std::vector<CheckCount>& checks() const { return checks_; }
  const std::vector<std::pair<std::string, long long>>& metrics() const { return metrics_; }
  std::uint64_t checked() const;
  std::uint64_t failed() const;
  bool passed() const { return failed() == 0 && checked() > 0; }
  /// The first failing check in check order.
  std::optional<std::string> first_failure() const;

  std::string to_json() const;
  std::string to_text() const;

 private:
  CheckCount& slot(std::string_view check);

  std::string suite_;
  std::string ring_;
  std::vector<CheckCount> checks_;
  std::vector<std::pair<std::string, long long>> metrics_;
};

struct SweepOptions {
  int k = 3;
  int n = 6;
  int jobs = 1;
  std::optional<int> trunc;
  /// Triple checks: 0 means exhaustive, otherwise this many seeded samples.
  std::uint64_t samples = 0;
  std::uint64_t seed = 20240601;
};

/// seidel, pieri-equiv, gr3n-rule, dmin, reductions, positivity, duality,
/// curve-nbhd, associativity.
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite.
SuiteReport run_suite(std::string_view name, const SweepOptions& options);

SuiteReport verify_seidel(const SweepOptions& options);
SuiteReport verify_pieri_equiv(const SweepOptions& options);
/// Forces k = 3.
SuiteReport verify_gr3n_rule(const SweepOptions& options);
SuiteReport verify_dmin(const SweepOptions& options);
SuiteReport verify_reductions(const SweepOptions& options);
SuiteReport verify_positivity(const SweepOptions& options);
SuiteReport verify_duality(const SweepOptions& options);
SuiteReport verify_curve_nbhd(const SweepOptions& options);
SuiteReport verify_associativity(const SweepOptions& options);

}  // namespace qkgr
