#pragma once

// Seidel operators T = O^(1,...,1) * - and H = O^(n-k) * -, the smallest
// q-power of a product, and the index reductions that trade q-degree for
// Seidel shifts of the structure-constant indices.

#include <optional>
#include <string>

#include "qkgr/context.hpp"
#include "qkgr/partition.hpp"
#include "qkgr/qk_element.hpp"

namespace qkgr {

/// Index tuple of a structure constant N_{lambda,mu}^{nu,d}.
struct IndexTuple {
  Partition lambda;
  Partition mu;
  Partition nu;
  int d = 0;

  std::string to_string() const;  // "N[(..),(..)|(..),d]"
  friend bool operator==(const IndexTuple&, const IndexTuple&) = default;
};

/// T(O^lambda) as a single term q^e O^kappa.
Term seidel_T(const GrContext& ctx, const Partition& lambda);
/// H(O^mu) as a single term.
Term seidel_H(const GrContext& ctx, const Partition& mu);

/// Linear extensions. Throw TruncationError when a degree passes ctx.D.
QKElement seidel_T(const GrContext& ctx, const QKElement& a);
QKElement seidel_H(const GrContext& ctx, const QKElement& a);
QKElement seidel_T_power(const GrContext& ctx, const QKElement& a, int p);
QKElement seidel_H_power(const GrContext& ctx, const QKElement& a, int p);

/// (rk + |lambda| - |lambda^r|)/n, the q-power picked up by T^r on O^lambda.
int seidel_degree(const GrContext& ctx, const Partition& lambda, long r);

struct SeidelPower {
  int degree = 0;
  Partition partition;
};

/// T^r(O^lambda) = q^degree O^{lambda shifted up r}, 0 <= r <= n.
SeidelPower qh_seidel_power(const GrContext& ctx, const Partition& lambda, int r);

struct DMin {
  int d = 0;
  int r = 0;
};

/// Smallest q-power of O^lambda * O^mu:
/// max over 0 <= i <= n of (|lambda| - |lambda^i| + |mu| - |mu^(n-i)|)/n,
/// with r the smallest maximizing i.
DMin d_min(const GrContext& ctx, const Partition& lambda, const Partition& mu);

/// Exact transport of an index along T^i acting on lambda and nu:
/// N_{lambda,mu}^{nu,d} = N_{lambda^i,mu}^{nu^i, d + d_i(nu) - d_i(lambda)}.
IndexTuple transport_up(const GrContext& ctx, const IndexTuple& t, int i);

/// Four single-shift reductions. Variant 1: shift up once when lambda loses
/// more boxes than nu (degree drops by one). Variant 2: the downward analogue.
/// Variants 3/4: shift up/down i times when lambda and nu lose equally many
/// boxes (degree unchanged). Absent when the condition fails.
std::optional<IndexTuple> reduce_lemred(const GrContext& ctx, const IndexTuple& t, int variant, int i = 1);

/// N_{lambda,mu}^{nu,d} = N_{lambda,nu^dual}^{mu^dual,d}. An involution.
IndexTuple duality(const GrContext& ctx, const IndexTuple& t);

struct ShiftPair {
  Partition lambda;
  Partition nu;
  int shift = 0;  // n - k - lambda_m + m
};

/// Shifts lambda and nu up by n-k-lambda_m+m through the explicit component
/// formulas, cross-checked against iterated seidel_up. Requires
/// nu_i >= lambda_i for i < m and nu_m < lambda_m (m is 1-based); throws
/// std::invalid_argument otherwise.
ShiftPair lemcom_shift(const GrContext& ctx, const Partition& lambda, const Partition& nu, int m);

/// Degree-one reduction: with m the first row where nu_m < lambda_m,
/// (lambda^r, mu, nu^r, d-1), r = n-k-lambda_m+m. Absent if d < 1 or nu
/// contains lambda.
std::optional<IndexTuple> reduce_deg_one(const GrContext& ctx, const IndexTuple& t);

/// Removes s degrees at once when nu_1+s-2 < lambda_{s-1} and some j in
/// [s,k] has nu_{j-s+1}+s-1 < lambda_j. Absent if d < s, s < 2 or the
/// conditions fail.
std::optional<IndexTuple> reduce_higher(const GrContext& ctx, const IndexTuple& t, int s);

/// Reduction through the dual indices: requires d >= 1, nu_1 >= lambda_1 and
/// nu_1 < lambda_{k+1-j} + mu_j for some j; with m the least such j returns
/// (nu^dual down (n-k-nu_1), mu down (k+mu_m-m), lambda^dual down
/// (n-nu_1+mu_m-m), d-1).
std::optional<IndexTuple> reduce_dual_shift(const GrContext& ctx, const IndexTuple& t);

}  // namespace qkgr
