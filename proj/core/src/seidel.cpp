#include "qkgr/seidel.hpp"

#include <stdexcept>
#include <vector>

namespace qkgr {

std::string IndexTuple::to_string() const {
  return "N_{(" + lambda.to_string() + "),(" + mu.to_string() + ")}^{(" + nu.to_string() + ")," +
         std::to_string(d) + "}";
}

Term seidel_T(const GrContext& ctx, const Partition& lambda) {
  require_fits(ctx, lambda);
  if (lambda[0] == ctx.width()) {
    std::vector<int> parts(lambda.vec().begin() + 1, lambda.vec().end());
    parts.push_back(0);
    return {1, Partition(std::move(parts))};
  }
  std::vector<int> parts = lambda.vec();
  for (int& v : parts) ++v;
  return {0, Partition(std::move(parts))};
}

Term seidel_H(const GrContext& ctx, const Partition& mu) {
  require_fits(ctx, mu);
  const int k = ctx.k;
  if (mu[k - 1] > 0) {
    std::vector<int> parts = mu.vec();
    for (int& v : parts) --v;
    return {1, Partition(std::move(parts))};
  }
  std::vector<int> parts;
  parts.reserve(k);
  parts.push_back(ctx.width());
  parts.insert(parts.end(), mu.vec().begin(), mu.vec().end() - 1);
  return {0, Partition(std::move(parts))};
}

namespace {

template <typename Op>
QKElement apply_basiswise(const GrContext& ctx, const QKElement& a, Op op) {
  QKElement out;
  for (const auto& [term, c] : a.terms()) {
    const Term image = op(ctx, term.partition);
    out.add(image.partition, term.degree + image.degree, c);
  }
  out.check_truncation(ctx);
  return out;
}

}  // namespace

QKElement seidel_T(const GrContext& ctx, const QKElement& a) {
  return apply_basiswise(ctx, a, [](const GrContext& c, const Partition& p) { return seidel_T(c, p); });
}

QKElement seidel_H(const GrContext& ctx, const QKElement& a) {
  return apply_basiswise(ctx, a, [](const GrContext& c, const Partition& p) { return seidel_H(c, p); });
}

QKElement seidel_T_power(const GrContext& ctx, const QKElement& a, int p) {
  QKElement out = a;
  for (int i = 0; i < p; ++i) out = seidel_T(ctx, out);
  return out;
}

QKElement seidel_H_power(const GrContext& ctx, const QKElement& a, int p) {
  QKElement out = a;
  for (int i = 0; i < p; ++i) out = seidel_H(ctx, out);
  return out;
}

int seidel_degree(const GrContext& ctx, const Partition& lambda, long r) {
  if (r < 0) throw std::invalid_argument("negative Seidel power");
  const long numerator = r * ctx.k + lambda.boxes() - seidel_up(ctx, lambda, r).boxes();
  if (numerator % ctx.n != 0 || numerator < 0) {
    throw std::logic_error("Seidel degree is not a non-negative integer for (" + lambda.to_string() + ")");
  }
  return static_cast<int>(numerator / ctx.n);
}

SeidelPower qh_seidel_power(const GrContext& ctx, const Partition& lambda, int r) {
  if (r < 0 || r > ctx.n) throw std::invalid_argument("Seidel power outside 0..n");
  return {seidel_degree(ctx, lambda, r), seidel_up(ctx, lambda, r)};
}

DMin d_min(const GrContext& ctx, const Partition& lambda, const Partition& mu) {
  DMin best{-1, 0};
  for (int i = 0; i <= ctx.n; ++i) {
    const int num = lambda.boxes() - seidel_up(ctx, lambda, i).boxes() + mu.boxes() -
                    seidel_up(ctx, mu, ctx.n - i).boxes();
    if (num % ctx.n != 0) throw std::logic_error("d_min numerator not divisible by n");
    const int value = num / ctx.n;
    if (best.d < 0 || value > best.d) best = {value, i};
  }
  return best;
}

IndexTuple transport_up(const GrContext& ctx, const IndexTuple& t, int i) {
  return {seidel_up(ctx, t.lambda, i), t.mu, seidel_up(ctx, t.nu, i),
          t.d + seidel_degree(ctx, t.nu, i) - seidel_degree(ctx, t.lambda, i)};
}

std::optional<IndexTuple> reduce_lemred(const GrContext& ctx, const IndexTuple& t, int variant, int i) {
  const auto loss_up = [&](const Partition& p, int steps) { return p.boxes() - seidel_up(ctx, p, steps).boxes(); };
  const auto loss_down = [&](const Partition& p, int steps) {
    return p.boxes() - seidel_down(ctx, p, steps).boxes();
  };
  switch (variant) {
    case 1:
      if (t.d < 1 || loss_up(t.lambda, 1) <= loss_up(t.nu, 1)) return std::nullopt;
      return IndexTuple{seidel_up(ctx, t.lambda, 1), t.mu, seidel_up(ctx, t.nu, 1), t.d - 1};
    case 2:
      if (t.d < 1 || loss_down(t.lambda, 1) <= loss_down(t.nu, 1)) return std::nullopt;
      return IndexTuple{seidel_down(ctx, t.lambda, 1), t.mu, seidel_down(ctx, t.nu, 1), t.d - 1};
    case 3:
      if (i < 0 || loss_up(t.lambda, i) != loss_up(t.nu, i)) return std::nullopt;
      return IndexTuple{seidel_up(ctx, t.lambda, i), t.mu, seidel_up(ctx, t.nu, i), t.d};
    case 4:
      if (i < 0 || loss_down(t.lambda, i) != loss_down(t.nu, i)) return std::nullopt;
      return IndexTuple{seidel_down(ctx, t.lambda, i), t.mu, seidel_down(ctx, t.nu, i), t.d};
    default:
      throw std::invalid_argument("reduction variant must be 1..4");
  }
}

IndexTuple duality(const GrContext& ctx, const IndexTuple& t) {
  return {t.lambda, dual(ctx, t.nu), dual(ctx, t.mu), t.d};
}

ShiftPair lemcom_shift(const GrContext& ctx, const Partition& lambda, const Partition& nu, int m) {
  const int k = ctx.k;
  if (m < 1 || m > k) throw std::invalid_argument("row index m outside 1..k");
  for (int i = 0; i + 1 < m; ++i) {
    if (nu[i] < lambda[i]) throw std::invalid_argument("nu_i < lambda_i before row m");
  }
  if (nu[m - 1] >= lambda[m - 1]) throw std::invalid_argument("nu_m >= lambda_m");

  const int lm = lambda[m - 1];
  const int shift = ctx.width() - lm + m;
  std::vector<int> lam, shifted_nu;
  for (int j = m; j < k; ++j) lam.push_back(lambda[j] + ctx.width() - lm);
  for (int j = 0; j + 1 < m; ++j) lam.push_back(lambda[j] - lm);
  lam.push_back(0);
  for (int j = m - 1; j < k; ++j) shifted_nu.push_back(nu[j] + ctx.width() - lm + 1);
  for (int j = 0; j + 1 < m; ++j) shifted_nu.push_back(nu[j] - lm + 1);

  ShiftPair out{Partition(std::move(lam)), Partition(std::move(shifted_nu)), shift};
  if (out.lambda != seidel_up(ctx, lambda, shift) || out.nu != seidel_up(ctx, nu, shift)) {
    throw std::logic_error("closed-form shift disagrees with iterated Seidel shift");
  }
  return out;
}

std::optional<IndexTuple> reduce_deg_one(const GrContext& ctx, const IndexTuple& t) {
  if (t.d < 1) return std::nullopt;
  for (int m = 1; m <= ctx.k; ++m) {
    if (t.nu[m - 1] < t.lambda[m - 1]) {
      const ShiftPair s = lemcom_shift(ctx, t.lambda, t.nu, m);
      return IndexTuple{s.lambda, t.mu, s.nu, t.d - 1};
    }
  }
  return std::nullopt;
}

std::optional<IndexTuple> reduce_higher(const GrContext& ctx, const IndexTuple& t, int s) {
  const int k = ctx.k;
  if (s < 2 || s > k || t.d < s) return std::nullopt;
  const auto lam = [&](int j) { return t.lambda[j - 1]; };
  const auto nu = [&](int j) { return t.nu[j - 1]; };
  if (!(nu(1) + s - 2 < lam(s - 1))) return std::nullopt;
  for (int j = s; j <= k; ++j) {
    if (nu(j - s + 1) + s - 1 < lam(j)) {
      const int shift = ctx.width() - lam(j) + j;
      return IndexTuple{seidel_up(ctx, t.lambda, shift), t.mu, seidel_up(ctx, t.nu, shift), t.d - s};
    }
  }
  return std::nullopt;
}

std::optional<IndexTuple> reduce_dual_shift(const GrContext& ctx, const IndexTuple& t) {
  const int k = ctx.k;
  if (t.d < 1 || t.nu[0] < t.lambda[0]) return std::nullopt;
  const int nu1 = t.nu[0];
  for (int m = 1; m <= k; ++m) {
    const int mu_m = t.mu[m - 1];
    if (nu1 < t.lambda[k - m] + mu_m) {
      return IndexTuple{seidel_down(ctx, dual(ctx, t.nu), ctx.width() - nu1),
                        seidel_down(ctx, t.mu, k + mu_m - m),
                        seidel_down(ctx, dual(ctx, t.lambda), ctx.n - nu1 + mu_m - m), t.d - 1};
    }
  }
  return std::nullopt;
}

}  // namespace qkgr
