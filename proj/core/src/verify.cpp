#include "qkgr/verify.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "qkgr/curve_nbhd.hpp"
#include "qkgr/engine.hpp"
#include "qkgr/gr3n.hpp"

namespace qkgr {

CheckCount& SuiteReport::slot(std::string_view check) {
  for (CheckCount& c : checks_) {
    if (c.name == check) return c;
  }
  checks_.push_back({std::string(check), 0, 0, std::nullopt});
  return checks_.back();
}

void SuiteReport::merge(const SuiteReport& other) {
  for (const CheckCount& c : other.checks_) {
    CheckCount& mine = slot(c.name);
    if (mine.failed == 0 && c.failed > 0) mine.first_failure = c.first_failure;
    mine.checked += c.checked;
    mine.failed += c.failed;
  }
  for (const auto& m : other.metrics_) set_metric(m.first, m.second);
}

void SuiteReport::set_metric(std::string name, long long value) {
  for (auto& m : metrics_) {
    if (m.first == name) {
      m.second = value;
      return;
    }
  }
  metrics_.emplace_back(std::move(name), value);
}

std::uint64_t SuiteReport::checked() const {
  std::uint64_t total = 0;
  for (const CheckCount& c : checks_) total += c.checked;
  return total;
}

std::uint64_t SuiteReport::failed() const {
  std::uint64_t total = 0;
  for (const CheckCount& c : checks_) total += c.failed;
  return total;
}

std::optional<std::string> SuiteReport::first_failure() const {
  for (const CheckCount& c : checks_) {
    if (c.failed > 0) return c.name + ": " + c.first_failure.value_or("");
  }
  return std::nullopt;
}

std::string SuiteReport::to_json() const {
  nlohmann::ordered_json j;
  j["suite"] = suite_;
  j["ring"] = ring_;
  j["passed"] = passed();
  j["checked"] = checked();
  j["failed"] = failed();
  j["checks"] = nlohmann::ordered_json::array();
  for (const CheckCount& c : checks_) {
    nlohmann::ordered_json entry = {{"name", c.name}, {"checked", c.checked}, {"failed", c.failed}};
    if (c.first_failure) entry["first_failure"] = *c.first_failure;
    j["checks"].push_back(std::move(entry));
  }
  for (const auto& [name, value] : metrics_) j["metrics"][name] = value;
  if (auto f = first_failure()) j["first_failure"] = *f;
  return j.dump();
}

std::string SuiteReport::to_text() const {
  std::ostringstream out;
  out << suite_ << " on " << ring_ << ": " << (passed() ? "pass" : "FAIL") << " (" << checked() << " checks, "
      << failed() << " failed)\n";
  for (const CheckCount& c : checks_) {
    out << "  " << c.name << ": " << c.checked << " checked, " << c.failed << " failed";
    if (c.first_failure) out << "; first: " << *c.first_failure;
    out << '\n';
  }
  for (const auto& [name, value] : metrics_) out << "  " << name << " = " << value << '\n';
  return out.str();
}

namespace {

GrContext ring(const SweepOptions& o) { return GrContext::make(o.k, o.n, o.trunc); }

EngineOptions engine_options(const SweepOptions& o) {
  EngineOptions e;
  e.jobs = o.jobs;
  return e;
}

// Runs body(i, local) for i in [0, count) on `jobs` threads; local reports are
// merged in index order so the first failure does not depend on scheduling.
void parallel_sweep(std::size_t count, int jobs, SuiteReport& into,
                    const std::function<void(std::size_t, SuiteReport&)>& body) {
  std::vector<SuiteReport> partial(count, SuiteReport(into.suite(), into.ring()));
  const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(count)));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto run = [&] {
    try {
      for (std::size_t i = next++; i < count; i = next++) body(i, partial[i]);
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  };
  if (workers == 1) {
    run();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(run);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  for (const SuiteReport& p : partial) into.merge(p);
}

std::string show(const QKElement& e) { return e.is_zero() ? "0" : e.to_string(); }

IndexTuple swap_factors(const IndexTuple& t) { return {t.mu, t.lambda, t.nu, t.d}; }

// Value of N at a reduced index; a degree outside [0, D] is only decidable
// when negative (the constant vanishes).
std::optional<Coeff> constant_at(const QKEngine& engine, int D, const IndexTuple& t) {
  if (t.d < 0) return 0;
  if (t.d > D) return std::nullopt;
  return engine.structure_constant(t);
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"seidel",     "pieri-equiv", "gr3n-rule",  "dmin",         "reductions",
                                                 "positivity", "duality",     "curve-nbhd", "associativity"};
  return names;
}

SuiteReport run_suite(std::string_view name, const SweepOptions& options) {
  if (name == "seidel") return verify_seidel(options);
  if (name == "pieri-equiv") return verify_pieri_equiv(options);
  if (name == "gr3n-rule") return verify_gr3n_rule(options);
  if (name == "dmin") return verify_dmin(options);
  if (name == "reductions") return verify_reductions(options);
  if (name == "positivity") return verify_positivity(options);
  if (name == "duality") return verify_duality(options);
  if (name == "curve-nbhd") return verify_curve_nbhd(options);
  if (name == "associativity") return verify_associativity(options);
  throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

SuiteReport verify_seidel(const SweepOptions& o) {
  const GrContext ctx = ring(o);
  // T^n and H^n reach degrees k and n-k.
  const GrContext wide = ctx.with_truncation(std::max(ctx.D, std::max(ctx.k, ctx.width()) + 1));
  SuiteReport report("seidel", ctx.describe());
  const QKEngine engine(ctx, engine_options(o));
  const Partition column = column_partition(ctx);
  const Partition row = special_partition(ctx, ctx.width());
  const PieriOperator& top = engine.pieri().op(ctx.width());

  for (const Partition& lambda : engine.basis().partitions()) {
    const QKElement x = QKElement::basis(lambda);
    const std::string at = "(" + lambda.to_string() + ")";
    const QKElement tn = seidel_T_power(wide, x, ctx.n);
    report.record("T^n = q^k", tn == x.shifted(ctx.k), [&] { return at + " -> " + show(tn); });
    const QKElement hn = seidel_H_power(wide, x, ctx.n);
    report.record("H^n = q^(n-k)", hn == x.shifted(ctx.width()), [&] { return at + " -> " + show(hn); });
    const QKElement ht = seidel_H(wide, seidel_T(wide, x));
    report.record("HT = q", ht == x.shifted(1), [&] { return at + " -> " + show(ht); });
    const QKElement th = seidel_T(wide, seidel_H(wide, x));
    report.record("TH = q", th == x.shifted(1), [&] { return at + " -> " + show(th); });

    const QKElement t = seidel_T(wide, x);
    const QKElement via_product = engine.product(column, lambda, ProductRoute::lift);
    report.record("T matches O^(1^k) product", via_product == t,
                  [&] { return at + ": " + show(via_product) + " vs " + show(t); });
    const QKElement h = seidel_H(wide, x);
    const QKElement via_row = engine.product(row, lambda, ProductRoute::lift);
    report.record("H matches O^(n-k) product", via_row == h,
                  [&] { return at + ": " + show(via_row) + " vs " + show(h); });
    const QKElement via_operator = top.apply(engine.basis(), x);
    report.record("P_(n-k) equals H", via_operator == h, [&] { return at + ": " + show(via_operator); });
    if (ctx.k == 3) {
      const QKElement routed = engine.product(column, lambda, ProductRoute::third_row);
      report.record("T matches third-row product", routed == t, [&] { return at + ": " + show(routed); });
    }

    const JumpSequence jumps = to_jump_sequence(ctx, lambda);
    report.record("jump roundtrip", from_jump_sequence(ctx, jumps) == lambda, [&] { return at; });
    report.record("jump shift", to_jump_sequence(ctx, seidel_up(ctx, lambda, 1)) == shift_jump(ctx, jumps, -1),
                  [&] { return at; });
    report.record("dual involution", dual(ctx, dual(ctx, lambda)) == lambda, [&] { return at; });
    report.record("shift period n", seidel_up(ctx, lambda, ctx.n) == lambda, [&] { return at; });
    for (int r = 0; r <= ctx.n; ++r) {
      const std::string where = at + " r=" + std::to_string(r);
      const SeidelPower p = qh_seidel_power(ctx, lambda, r);
      report.record("shift degree = jump count", p.degree == d_count(ctx, jumps, r), [&] { return where; });
      const QKElement tr = seidel_T_power(wide, x, r);
      report.record("T^r closed form", tr == QKElement::basis(p.partition, p.degree), [&] { return where; });
      report.record("shift commutes with duality",
                    dual(ctx, seidel_up(ctx, lambda, r)) == seidel_down(ctx, dual(ctx, lambda), r),
                    [&] { return where; });
      for (int s = 0; s <= ctx.n; ++s) {
        report.record("shifts compose", seidel_up(ctx, seidel_up(ctx, lambda, r), s) == seidel_up(ctx, lambda, r + s),
                      [&] { return where + " s=" + std::to_string(s); });
      }
    }
  }
  return report;
}

SuiteReport verify_pieri_equiv(const SweepOptions& o) {
  const GrContext ctx = ring(o);
  SuiteReport report("pieri-equiv", ctx.describe());
  const PieriFamily family(ctx);
  const Basis& basis = family.basis();
  for (const Partition& lambda : basis.partitions()) {
    for (int i = 1; i <= ctx.width(); ++i) {
      const std::string at = "(" + lambda.to_string() + ") i=" + std::to_string(i);
      const QKElement a = quantum_pieri(ctx, lambda, i);
      const QKElement b = quantum_pieri_restated(ctx, lambda, i);
      report.record("rim form = shifted form", a == b, [&] { return at + ": " + show(a) + " vs " + show(b); });
      report.record("q = 0 part is classical", a.degree_part(0) == classical_pieri(ctx, lambda, i),
                    [&] { return at; });
      report.record("degree at most 1", a.max_degree() <= 1, [&] { return at + ": " + show(a); });
      if (lambda[ctx.k - 1] == 0) report.record("no q-part without full column", a.max_degree() <= 0, [&] { return at; });
      report.record("operator column = rule", family.op(i).apply(basis, QKElement::basis(lambda)) == a,
                    [&] { return at; });
    }
  }
  for (int i = 1; i <= ctx.width(); ++i) {
    const QKElement unit = family.op(i).apply(basis, QKElement::basis(empty_partition(ctx)));
    report.record("P_i on the unit", unit == QKElement::basis(special_partition(ctx, i)),
                  [&] { return "i=" + std::to_string(i) + ": " + show(unit); });
    for (int j = i + 1; j <= ctx.width(); ++j) {
      for (std::size_t idx = 0; idx < basis.size(); ++idx) {
        const QVector e = QVector::unit(basis.size(), ctx.D, idx);
        const QVector ij = family.op(i).apply(family.op(j).apply(e));
        const QVector ji = family.op(j).apply(family.op(i).apply(e));
        report.record("operators commute", ij == ji, [&] {
          return "P_" + std::to_string(i) + " P_" + std::to_string(j) + " on (" + basis.at(idx).to_string() + ")";
        });
      }
    }
  }
  return report;
}

SuiteReport verify_gr3n_rule(const SweepOptions& options) {
  SweepOptions o = options;
  o.k = 3;
  const GrContext ctx = ring(o);
  SuiteReport report("gr3n-rule", ctx.describe());
  const QKEngine engine(ctx, engine_options(o));
  engine.build_table();
  const int D = engine.context().D;
  const Gr3Path& path = *engine.gr3_path();
  const Basis& basis = engine.basis();
  const std::size_t size = basis.size();

  // Degree-zero constants for the rule come from the third-row path so the
  // comparison with the lifted table is between independent computations.
  std::vector<QKElement> classical(size * size);
  parallel_sweep(size, o.jobs, report, [&](std::size_t l, SuiteReport& local) {
    for (std::size_t m = 0; m < size; ++m) {
      const QKElement routed = path.product(basis.at(l), basis.at(m));
      const QKElement lifted = engine.product(basis.at(l), basis.at(m), ProductRoute::lift);
      local.record("third-row path = lifted table", routed == lifted, [&] {
        return "(" + basis.at(l).to_string() + ")*(" + basis.at(m).to_string() + "): " + show(routed) + " vs " +
               show(lifted);
      });
      classical[l * size + m] = routed.degree_part(0);
    }
  });
  const ClassicalLR lr = [&](const Partition& a, const Partition& b, const Partition& c) {
    return classical[basis.index(a) * size + basis.index(b)].coefficient(c, 0);
  };

  parallel_sweep(size, o.jobs, report, [&](std::size_t l, SuiteReport& local) {
    const Partition& lambda = basis.at(l);
    for (const Partition& mu : basis.partitions()) {
      for (const Partition& nu : basis.partitions()) {
        for (int d = 0; d <= D; ++d) {
          const IndexTuple t{lambda, mu, nu, d};
          const Coeff oracle = engine.structure_constant(t);
          const Coeff rule = qlr_gr3_full(ctx, t, lr);
          local.record("rule = oracle", rule == oracle,
                       [&] { return t.to_string() + ": rule " + std::to_string(rule) + ", oracle " + std::to_string(oracle); });
          if (lambda[2] != 0 || mu[2] != 0 || d != 1) continue;

          const Gr3Evaluation ev = qlr_gr3_explain(ctx, t, lr);
          local.record("swap symmetry", ev.value == qlr_gr3(ctx, swap_factors(t), lr), [&] { return t.to_string(); });
          if (ev.rule == Gr3Rule::first_row || ev.rule == Gr3Rule::second_row) {
            const int row = ev.rule == Gr3Rule::first_row ? 0 : 1;
            const IndexTuple oriented = nu[row] < lambda[row] ? t : swap_factors(t);
            const auto direct = reduce_deg_one(ctx, oriented);
            local.record("row cases are degree-one reductions", direct && *direct == *ev.classical_tuple,
                         [&] { return t.to_string() + " -> " + ev.classical_tuple->to_string(); });
          }
          if (nu[2] == 0 && nu[0] >= std::max(lambda[0], mu[0]) && nu[1] >= std::max(lambda[1], mu[1])) {
            const Nu3Result r = nu3_zero_case(ctx, lambda, mu, nu);
            Coeff value = 0;
            std::string how = "zero";
            if (const auto* red = std::get_if<Nu3Reduced>(&r)) {
              value = engine.structure_constant(red->tuple);
              how = red->tuple.to_string();
            } else if (const auto* closed = std::get_if<Nu3Closed>(&r)) {
              value = closed->value;
              how = "closed " + std::to_string(value);
            }
            local.record("nu_3 = 0 cases", value == oracle,
                         [&] { return t.to_string() + " via " + how + ", oracle " + std::to_string(oracle); });
          }
        }
      }
    }
  });
  report.set_metric("truncation", D);
  report.set_metric("max_degree", engine.observed_max_degree());
  return report;
}

SuiteReport verify_dmin(const SweepOptions& o) {
  const GrContext ctx = ring(o);
  SuiteReport report("dmin", ctx.describe());
  const QKEngine engine(ctx, engine_options(o));
  engine.build_table();
  const Partition empty = empty_partition(ctx);
  for (const Partition& lambda : engine.basis().partitions()) {
    const DMin trivial = d_min(ctx, lambda, empty);
    report.record("empty factor", trivial.d == 0 && trivial.r == 0, [&] { return "(" + lambda.to_string() + ")"; });
    for (const Partition& mu : engine.basis().partitions()) {
      const std::string at = "(" + lambda.to_string() + ")*(" + mu.to_string() + ")";
      const DMin dm = d_min(ctx, lambda, mu);
      const QKElement product = engine.product(lambda, mu, ProductRoute::lift);
      report.record("formula = smallest q-power", product.min_degree() == dm.d,
                    [&] { return at + ": formula " + std::to_string(dm.d) + ", product " + show(product); });
      for (int i = 0; i <= ctx.n; ++i) {
        const int num = lambda.boxes() - seidel_up(ctx, lambda, i).boxes() + mu.boxes() -
                        seidel_up(ctx, mu, ctx.n - i).boxes();
        if (num != dm.d * ctx.n) continue;
        const QKElement shifted = engine.product(seidel_up(ctx, lambda, i), seidel_up(ctx, mu, ctx.n - i),
                                                 ProductRoute::lift).shifted(dm.d);
        report.record(i == dm.r ? "shifted product identity" : "identity at other maximizers", shifted == product,
                      [&] { return at + " r=" + std::to_string(i) + ": " + show(shifted); });
      }
    }
  }
  return report;
}

SuiteReport verify_reductions(const SweepOptions& o) {
  const GrContext ctx = ring(o);
  SuiteReport report("reductions", ctx.describe());
  const QKEngine engine(ctx, engine_options(o));
  engine.build_table();
  const int D = engine.context().D;
  const Basis& basis = engine.basis();

  parallel_sweep(basis.size(), o.jobs, report, [&](std::size_t l, SuiteReport& local) {
    const Partition& lambda = basis.at(l);
    for (const Partition& nu : basis.partitions()) {
      for (int m = 1; m <= ctx.k; ++m) {
        bool valid = nu[m - 1] < lambda[m - 1];
        for (int i = 0; i + 1 < m; ++i) valid = valid && nu[i] >= lambda[i];
        if (!valid) continue;
        bool ok = true;
        try {
          lemcom_shift(ctx, lambda, nu, m);
        } catch (const std::exception&) {
          ok = false;
        }
        local.record("closed-form shifts", ok, [&] {
          return "(" + lambda.to_string() + "),(" + nu.to_string() + ") m=" + std::to_string(m);
        });
      }
    }
    for (const Partition& mu : basis.partitions()) {
      for (const Partition& nu : basis.partitions()) {
        for (int d = 0; d <= D; ++d) {
          const IndexTuple t{lambda, mu, nu, d};
          const Coeff n0 = engine.structure_constant(t);
          const auto check = [&](std::string_view rule, const std::optional<IndexTuple>& r) {
            if (!r) return;
            const auto v = constant_at(engine, D, *r);
            if (!v) return;
            local.record(rule, *v == n0, [&] {
              return t.to_string() + " = " + std::to_string(n0) + " but " + r->to_string() + " = " + std::to_string(*v);
            });
          };
          check("single lift up", reduce_lemred(ctx, t, 1));
          check("single lift down", reduce_lemred(ctx, t, 2));
          for (int i = 1; i < ctx.n; ++i) {
            check("balanced shift up", reduce_lemred(ctx, t, 3, i));
            check("balanced shift down", reduce_lemred(ctx, t, 4, i));
          }
          for (int i = 0; i <= ctx.n; ++i) check("exact transport", transport_up(ctx, t, i));
          const IndexTuple dt = duality(ctx, t);
          check("duality", dt);
          local.record("duality involution", duality(ctx, dt) == t, [&] { return t.to_string(); });
          const auto one = reduce_deg_one(ctx, t);
          check("degree-one", one);
          for (int s = 2; s <= ctx.k; ++s) {
            const auto higher = reduce_higher(ctx, t, s);
            check("higher degree", higher);
            if (higher) {
              std::optional<IndexTuple> iterated = t;
              for (int step = 0; step < s && iterated; ++step) iterated = reduce_deg_one(ctx, *iterated);
              local.record("higher degree = iterated degree-one", iterated && *iterated == *higher,
                           [&] { return t.to_string() + " s=" + std::to_string(s); });
            }
          }
          const auto dual_shift = reduce_dual_shift(ctx, t);
          check("dual shift", dual_shift);
          if (dual_shift) {
            // The same index reached through duality, a balanced downward
            // shift and a degree-one reduction on the second factor.
            const IndexTuple flipped = swap_factors(duality(ctx, swap_factors(t)));
            const auto balanced = reduce_lemred(ctx, flipped, 4, ctx.width() - nu[0]);
            std::optional<IndexTuple> composed;
            if (balanced) {
              if (auto r = reduce_deg_one(ctx, swap_factors(*balanced))) composed = swap_factors(*r);
            }
            local.record("dual shift = composed reductions", composed && *composed == *dual_shift,
                         [&] { return t.to_string() + " -> " + dual_shift->to_string(); });
          }
          if (ctx.k == 3) {
            const auto r = reduce_third_row(ctx, t);
            if (r) {
              check("third-row", r);
              const long before = static_cast<long>(lambda.boxes()) + mu.boxes() + nu.boxes() + static_cast<long>(d) * ctx.n;
              const long after = static_cast<long>(r->lambda.boxes()) + r->mu.boxes() + r->nu.boxes() +
                                 static_cast<long>(r->d) * ctx.n;
              local.record("third-row parity", (before - after) % 2 == 0, [&] { return t.to_string(); });
            } else {
              local.record("third-row", n0 == 0, [&] { return t.to_string() + " should vanish"; });
            }
          }
        }
      }
    }
  });
  return report;
}

SuiteReport verify_positivity(const SweepOptions& o) {
  const GrContext ctx = ring(o);
  SuiteReport report("positivity", ctx.describe());
  const QKEngine engine(ctx, engine_options(o));
  engine.build_table();
  const Basis& basis = engine.basis();
  for (const Partition& mu : basis.partitions()) {
    const auto col = engine.column(mu);
    for (std::size_t l = 0; l < basis.size(); ++l) {
      for (const ProductEntry& e : col[l]) {
        const IndexTuple t{basis.at(l), mu, basis.at(e.index), e.degree};
        const bool ok = positivity_check(ctx, t, e.coeff);
        const auto describe = [&] { return t.to_string() + " = " + std::to_string(e.coeff); };
        if (e.degree == 0) report.record("alternating sign at q = 0", ok, describe);
        // The quantum sign pattern is only claimed for three-row Grassmannians.
        else if (ctx.k == 3) report.record("alternating sign, quantum", ok, describe);
      }
    }
  }
  report.set_metric("max_degree", engine.observed_max_degree());
  return report;
}

SuiteReport verify_duality(const SweepOptions& o) {
  const GrContext ctx = ring(o);
  SuiteReport report("duality", ctx.describe());
  const QKEngine engine(ctx, engine_options(o));
  engine.build_table();
  const int D = engine.context().D;
  const Basis& basis = engine.basis();
  parallel_sweep(basis.size(), o.jobs, report, [&](std::size_t l, SuiteReport& local) {
    for (const Partition& mu : basis.partitions()) {
      for (const Partition& nu : basis.partitions()) {
        for (int d = 0; d <= D; ++d) {
          const IndexTuple t{basis.at(l), mu, nu, d};
          const Coeff value = engine.structure_constant(t);
          const IndexTuple dt = duality(ctx, t);
          local.record("dual indices", engine.structure_constant(dt) == value, [&] { return t.to_string(); });
          local.record("involution", duality(ctx, dt) == t, [&] { return t.to_string(); });
          local.record("commutativity", engine.structure_constant(swap_factors(t)) == value,
                       [&] { return t.to_string(); });
        }
      }
    }
  });
  return report;
}

SuiteReport verify_curve_nbhd(const SweepOptions& o) {
  const GrContext ctx = ring(o);
  SuiteReport report("curve-nbhd", ctx.describe());
  const std::vector<Partition> parts = all_partitions(ctx);
  const int bound = std::min(ctx.k, ctx.width());
  for (const Partition& lambda : parts) {
    Partition peeled = lambda;
    for (int d = 0; d <= ctx.k; ++d) {
      const std::string at = "(" + lambda.to_string() + ") d=" + std::to_string(d);
      report.record("iterated rim peel", peeled == curve_neighborhood(ctx, lambda, d), [&] { return at; });
      if (d >= bound) report.record("large degree fills", curve_neighborhood(ctx, lambda, d).empty_shape(), [&] { return at; });
      for (const Partition& kappa : parts) {
        if (!kappa.contains(lambda)) continue;
        report.record("monotone", curve_neighborhood(ctx, kappa, d).contains(curve_neighborhood(ctx, lambda, d)),
                      [&] { return at + " inside (" + kappa.to_string() + ")"; });
      }
      peeled = rim_peel(ctx, peeled);
    }
    if (lambda[ctx.k - 1] == 0) continue;
    const Partition eta = dual(ctx, lambda);
    const Partition lifted = seidel_up(ctx, eta, 1);
    for (int d = 1; d < std::min(ctx.k + 1, ctx.width()); ++d) {
      const Partition lhs = gamma_special(ctx, eta, d);
      const Partition rhs = dual(ctx, curve_neighborhood(ctx, dual(ctx, lifted), d - 1));
      report.record("special neighborhood = shifted neighborhood", lhs == rhs, [&] {
        return "mu=(" + lambda.to_string() + ") d=" + std::to_string(d) + ": (" + lhs.to_string() + ") vs (" +
               rhs.to_string() + ")";
      });
    }
  }
  return report;
}

SuiteReport verify_associativity(const SweepOptions& o) {
  const GrContext ctx = ring(o);
  SuiteReport report("associativity", ctx.describe());
  const QKEngine engine(ctx, engine_options(o));
  engine.build_table();
  const Basis& basis = engine.basis();
  const std::size_t size = basis.size();
  const Partition empty = empty_partition(ctx);

  for (const Partition& lambda : basis.partitions()) {
    const QKElement x = QKElement::basis(lambda);
    report.record("unit", engine.product(empty, lambda, ProductRoute::lift) == x &&
                              engine.product(lambda, empty, ProductRoute::lift) == x,
                  [&] { return "(" + lambda.to_string() + ")"; });
    report.record("euler characteristic of a class", euler_char(x) == std::vector<Coeff>{1},
                  [&] { return "(" + lambda.to_string() + ")"; });
    for (const Partition& mu : basis.partitions()) {
      const std::string at = "(" + lambda.to_string() + "),(" + mu.to_string() + ")";
      report.record("commutativity",
                    engine.product(lambda, mu, ProductRoute::lift) == engine.product(mu, lambda, ProductRoute::lift),
                    [&] { return at; });
      const Coeff chi = engine.pairing(lambda, mu);
      report.record("pairing with ideal sheaves", chi == (lambda == mu ? 1 : 0),
                    [&] { return at + ": " + std::to_string(chi); });
    }
  }

  const std::uint64_t triples = static_cast<std::uint64_t>(size) * size * size;
  const auto triple = [&](std::size_t a, std::size_t b, std::size_t c) {
    report.record("associativity", engine.verify_recursion(basis.at(a), basis.at(b), basis.at(c)), [&] {
      return "(" + basis.at(a).to_string() + "),(" + basis.at(b).to_string() + "),(" + basis.at(c).to_string() + ")";
    });
  };
  if (o.samples == 0 || o.samples >= triples) {
    for (std::size_t a = 0; a < size; ++a)
      for (std::size_t b = 0; b < size; ++b)
        for (std::size_t c = 0; c < size; ++c) triple(a, b, c);
  } else {
    std::mt19937_64 rng(o.seed);
    std::uniform_int_distribution<std::size_t> pick(0, size - 1);
    for (std::uint64_t i = 0; i < o.samples; ++i) {
      const std::size_t a = pick(rng), b = pick(rng), c = pick(rng);
      triple(a, b, c);
    }
  }

  // Raising the truncation must not change any product.
  const GrContext wider = engine.context().with_truncation(engine.context().D + 2);
  EngineOptions fixed = engine_options(o);
  fixed.escalate = false;
  const QKEngine reference(wider, fixed);
  reference.build_table();
  for (const Partition& mu : basis.partitions()) {
    report.record("stable under D -> D+2", engine.column(mu) == reference.column(mu),
                  [&] { return "column (" + mu.to_string() + ")"; });
  }
  report.set_metric("truncation", engine.context().D);
  report.set_metric("max_degree", engine.observed_max_degree());
  return report;
}

}  // namespace qkgr
