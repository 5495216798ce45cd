#pragma once

// Partitions of degree-d curve neighborhoods of Schubert varieties.

#include "qkgr/partition.hpp"

namespace qkgr {

/// lambda^d: drop the first d rows, subtract d from the remaining rows
/// (floored at 0) and pad with zeros.
Partition curve_neighborhood(const GrContext& ctx, const Partition& lambda, int d);

/// One outer-rim removal: (lambda_2 - 1, ..., lambda_k - 1, 0), floored at 0.
Partition rim_peel(const GrContext& ctx, const Partition& lambda);

/// Two-pointed neighborhood of the special class against X_eta:
/// tau_j = min(eta_{j-d+1} + d, n-k) with eta_i = n for i <= 0.
/// Requires 1 <= d < min(k+1, n-k).
Partition gamma_special(const GrContext& ctx, const Partition& eta, int d);

}  // namespace qkgr
