#include "qkgr/gr3n.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "qkgr/gr3_path.hpp"

namespace qkgr {

const char* to_string(Gr3Rule rule) {
  switch (rule) {
    case Gr3Rule::classical: return "classical";
    case Gr3Rule::high_degree: return "high-degree";
    case Gr3Rule::first_row: return "first-row";
    case Gr3Rule::second_row: return "second-row";
    case Gr3Rule::closed_form: return "closed-form";
  }
  return "?";
}

namespace {

void require_reduced(const GrContext& ctx, const IndexTuple& t) {
  if (ctx.k != 3) throw std::invalid_argument("Gr(3,n) rule needs k = 3, got " + ctx.describe());
  require_fits(ctx, t.lambda);
  require_fits(ctx, t.mu);
  require_fits(ctx, t.nu);
  if (t.lambda[2] != 0 || t.mu[2] != 0) throw std::invalid_argument("Gr(3,n) rule needs lambda_3 = mu_3 = 0");
}

Coeff closed_form(const GrContext& ctx, const IndexTuple& t) {
  const Partition& l = t.lambda;
  const Partition& u = t.mu;
  const Partition& v = t.nu;
  const int w = ctx.width();
  const int m = v.boxes() + ctx.n - l.boxes() - u.boxes();
  const int A = l[0] + u[0] - v[0] - v[1];
  const bool holds = A > 0 && m >= 0 && m <= 3 && std::min(l[0] + l[1], u[0] + u[1]) >= w + v[2] &&
                     std::min(l[0], u[0]) > v[1] && std::min(l[1], u[1]) > v[2];
  if (!holds) return 0;
  const Coeff room = w - v[0];
  if (room < 0) throw std::logic_error("nu_1 exceeds the rectangle");
  const Coeff a0 = std::min<Coeff>(A, room);
  const Coeff a1 = std::min<Coeff>(A - 1, room);
  switch (m) {
    case 0: return a1;
    case 1: return -a0 - 2 * a1;
    case 2: return 2 * a0 + a1;
    default: return -a0;
  }
}

}  // namespace

Gr3Evaluation qlr_gr3_explain(const GrContext& ctx, const IndexTuple& t, const ClassicalLR& lr) {
  require_reduced(ctx, t);
  if (t.d < 0) return {0, Gr3Rule::high_degree, std::nullopt};
  if (t.d == 0) return {lr(t.lambda, t.mu, t.nu), Gr3Rule::classical, t};
  if (t.d >= 2) return {0, Gr3Rule::high_degree, std::nullopt};

  const int n = ctx.n;
  const Partition& v = t.nu;
  if (v[0] < std::max(t.lambda[0], t.mu[0])) {
    const auto [l, u] = v[0] < t.lambda[0] ? std::pair{t.lambda, t.mu} : std::pair{t.mu, t.lambda};
    const int shift = n - 2 - l[0];
    IndexTuple reduced{Partition({l[1] + n - 3 - l[0], n - 3 - l[0], 0}), u,
                       Partition({v[0] + shift, v[1] + shift, v[2] + shift}), 0};
    return {lr(reduced.lambda, reduced.mu, reduced.nu), Gr3Rule::first_row, reduced};
  }
  if (v[1] < std::max(t.lambda[1], t.mu[1])) {
    const auto [l, u] = v[1] < t.lambda[1] ? std::pair{t.lambda, t.mu} : std::pair{t.mu, t.lambda};
    const int shift = n - 2 - l[1];
    IndexTuple reduced{Partition({n - 3 - l[1], l[0] - l[1], 0}), u,
                       Partition({v[1] + shift, v[2] + shift, v[0] - l[1] + 1}), 0};
    return {lr(reduced.lambda, reduced.mu, reduced.nu), Gr3Rule::second_row, reduced};
  }
  return {closed_form(ctx, t), Gr3Rule::closed_form, std::nullopt};
}

Coeff qlr_gr3(const GrContext& ctx, const IndexTuple& t, const ClassicalLR& lr) {
  return qlr_gr3_explain(ctx, t, lr).value;
}

Coeff qlr_gr3_full(const GrContext& ctx, const IndexTuple& t, const ClassicalLR& lr) {
  const auto reduced = reduce_third_row(ctx, t);
  if (!reduced) return 0;
  return qlr_gr3(ctx, *reduced, lr);
}

bool positivity_check(const GrContext& ctx, const IndexTuple& t, Coeff value) {
  const long parity = static_cast<long>(t.lambda.boxes()) + t.mu.boxes() + t.nu.boxes() + static_cast<long>(t.d) * ctx.n;
  return (parity % 2 == 0 ? value : -value) >= 0;
}

namespace {

IndexTuple swap_factors(const IndexTuple& t) { return {t.mu, t.lambda, t.nu, t.d}; }

// N_{lambda,mu}^{nu,1} = N_{lambda,nu^dual}^{mu^dual,1}, then shift the last
// two indices together (they lose equally many boxes).
IndexTuple dual_and_shift(const GrContext& ctx, const IndexTuple& t, int variant, int steps) {
  const IndexTuple swapped = swap_factors(duality(ctx, t));
  const auto shifted = reduce_lemred(ctx, swapped, variant, steps);
  if (!shifted) throw std::logic_error("equal-loss shift unexpectedly inapplicable");
  return swap_factors(*shifted);
}

}  // namespace

Nu3Result nu3_zero_case(const GrContext& ctx, const Partition& lambda, const Partition& mu, const Partition& nu) {
  const IndexTuple t{lambda, mu, nu, 1};
  require_reduced(ctx, t);
  if (nu[2] != 0 || nu[0] < std::max(lambda[0], mu[0]) || nu[1] < std::max(lambda[1], mu[1])) {
    throw std::invalid_argument("nu must have nu_3 = 0 and dominate lambda, mu in the first two rows");
  }
  const int w = ctx.width();
  if (w - mu[0] < lambda[1] || w - mu[1] < lambda[0]) {
    const auto reduced = reduce_deg_one(ctx, dual_and_shift(ctx, t, 3, 1));
    if (!reduced) throw std::logic_error("degree-one reduction unexpectedly inapplicable");
    return Nu3Reduced{*reduced};
  }
  if (lambda == mu && lambda == nu && lambda[0] + lambda[1] == w) {
    if (lambda[0] < 2 * lambda[1]) {
      const auto reduced = reduce_deg_one(ctx, dual_and_shift(ctx, t, 4, lambda[1]));
      if (!reduced) throw std::logic_error("degree-one reduction unexpectedly inapplicable");
      return Nu3Reduced{*reduced};
    }
    // lambda_1 >= 2 lambda_2: the closed form gives -min(lambda_1 - lambda_2, lambda_2).
    return Nu3Closed{-lambda[1]};
  }
  return Nu3Zero{};
}

}  // namespace qkgr
