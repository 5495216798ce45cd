#include "qkgr/reduction_trace.hpp"

#include <sstream>

#include <json.hpp>

#include "qkgr/gr3_path.hpp"

namespace qkgr {

namespace {

IndexTuple swap_factors(const IndexTuple& t) { return {t.mu, t.lambda, t.nu, t.d}; }

std::optional<int> deficit_shift(const GrContext& ctx, const Partition& lambda, const Partition& nu) {
  for (int m = 1; m <= ctx.k; ++m) {
    if (nu[m - 1] < lambda[m - 1]) return ctx.width() - lambda[m - 1] + m;
  }
  return std::nullopt;
}

std::optional<TraceStep> next_step(const GrContext& ctx, const IndexTuple& t) {
  const auto on_lambda = deficit_shift(ctx, t.lambda, t.nu);
  const auto on_mu = deficit_shift(ctx, t.mu, t.nu);
  if (on_lambda && (!on_mu || *on_lambda <= *on_mu)) return TraceStep{"row-deficit", *reduce_deg_one(ctx, t)};
  if (on_mu) return TraceStep{"row-deficit[mu]", swap_factors(*reduce_deg_one(ctx, swap_factors(t)))};
  if (auto r = reduce_dual_shift(ctx, t)) return TraceStep{"dual-row-deficit", *r};
  if (auto r = reduce_lemred(ctx, t, 1)) return TraceStep{"lift-up", *r};
  if (auto r = reduce_lemred(ctx, t, 2)) return TraceStep{"lift-down", *r};
  return std::nullopt;
}

nlohmann::ordered_json tuple_json(const IndexTuple& t) {
  return {{"lambda", t.lambda.vec()}, {"mu", t.mu.vec()}, {"nu", t.nu.vec()}, {"d", t.d}};
}

}  // namespace

ReductionTrace greedy_reduce(const GrContext& ctx, const IndexTuple& start) {
  ReductionTrace trace{start, {}, ""};
  IndexTuple t = start;
  if (ctx.k == 3 && (t.lambda[2] > 0 || t.mu[2] > 0)) {
    const auto r = reduce_third_row(ctx, t);
    if (!r) {
      trace.outcome = "vanishes";
      return trace;
    }
    t = *r;
    trace.steps.push_back({"third-row", t});
  }
  while (t.d > 0) {
    auto step = next_step(ctx, t);
    if (!step) {
      trace.outcome = "no rule applies";
      return trace;
    }
    t = step->tuple;
    trace.steps.push_back(std::move(*step));
  }
  trace.outcome = t.d == 0 ? "degree zero" : "vanishes";
  return trace;
}

std::string trace_json(const ReductionTrace& trace, std::optional<Coeff> value) {
  nlohmann::ordered_json j;
  j["start"] = tuple_json(trace.start);
  j["steps"] = nlohmann::ordered_json::array();
  for (const TraceStep& s : trace.steps) {
    nlohmann::ordered_json step = {{"rule", s.rule}};
    const nlohmann::ordered_json fields = tuple_json(s.tuple);
    for (auto it = fields.begin(); it != fields.end(); ++it) step[it.key()] = it.value();
    j["steps"].push_back(std::move(step));
  }
  j["outcome"] = trace.outcome;
  if (value) j["value"] = *value;
  return j.dump();
}

std::string trace_text(const ReductionTrace& trace, std::optional<Coeff> value) {
  std::ostringstream out;
  out << "  " << trace.start.to_string() << '\n';
  for (const TraceStep& s : trace.steps) out << "= " << s.tuple.to_string() << "   [" << s.rule << "]\n";
  out << trace.outcome;
  if (value) out << ", value " << *value;
  out << '\n';
  return out.str();
}

}  // namespace qkgr
