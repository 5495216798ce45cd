#include "qkgr/curve_nbhd.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace qkgr {

Partition curve_neighborhood(const GrContext& ctx, const Partition& lambda, int d) {
  require_fits(ctx, lambda);
  if (d < 0) throw std::invalid_argument("curve degree must be non-negative");
  std::vector<int> parts(ctx.k, 0);
  for (int j = d; j < ctx.k; ++j) parts[j - d] = std::max(lambda[j] - d, 0);
  return Partition(std::move(parts));
}

Partition rim_peel(const GrContext& ctx, const Partition& lambda) {
  return curve_neighborhood(ctx, lambda, 1);
}

Partition gamma_special(const GrContext& ctx, const Partition& eta, int d) {
  require_fits(ctx, eta);
  if (d < 1 || d >= std::min(ctx.k + 1, ctx.width())) {
    throw std::invalid_argument("degree " + std::to_string(d) + " outside 1 <= d < min(k+1, n-k)");
  }
  std::vector<int> parts(ctx.k);
  for (int j = 1; j <= ctx.k; ++j) {
    const int i = j - d + 1;
    const int eta_i = i <= 0 ? ctx.n : eta[i - 1];
    parts[j - 1] = std::min(eta_i + d, ctx.width());
  }
  return Partition(std::move(parts));
}

}  // namespace qkgr
