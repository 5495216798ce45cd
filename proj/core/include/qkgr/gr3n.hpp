#pragma once

// Closed-form quantum Littlewood-Richardson rule for QK(Gr(3,n)).

#include <functional>
#include <optional>
#include <variant>

#include "qkgr/seidel.hpp"

namespace qkgr {

/// Degree-zero constants N_{lambda,mu}^{nu,0}, supplied by the caller.
using ClassicalLR = std::function<Coeff(const Partition& lambda, const Partition& mu, const Partition& nu)>;

enum class Gr3Rule {
  classical,         // d = 0
  high_degree,       // d >= 2 (vanishes)
  first_row,         // nu_1 below max(lambda_1, mu_1)
  second_row,        // nu_2 below max(lambda_2, mu_2)
  closed_form,       // both rows of nu dominate
};

const char* to_string(Gr3Rule rule);

struct Gr3Evaluation {
  Coeff value = 0;
  Gr3Rule rule = Gr3Rule::classical;
  /// The degree-zero tuple the value was read from, if any.
  std::optional<IndexTuple> classical_tuple;
};

/// N_{lambda,mu}^{nu,d} for lambda_3 = mu_3 = 0. Throws std::invalid_argument
/// when k != 3 or a third row is non-empty.
Gr3Evaluation qlr_gr3_explain(const GrContext& ctx, const IndexTuple& t, const ClassicalLR& lr);
Coeff qlr_gr3(const GrContext& ctx, const IndexTuple& t, const ClassicalLR& lr);

/// Any lambda, mu: strips third rows first, then applies the rule.
Coeff qlr_gr3_full(const GrContext& ctx, const IndexTuple& t, const ClassicalLR& lr);

/// (-1)^{|lambda|+|mu|+|nu|+dn} N >= 0.
bool positivity_check(const GrContext& ctx, const IndexTuple& t, Coeff value);

struct Nu3Reduced {
  IndexTuple tuple;  // degree zero
};
struct Nu3Closed {
  Coeff value;
};
struct Nu3Zero {};
using Nu3Result = std::variant<Nu3Reduced, Nu3Closed, Nu3Zero>;

/// Degree-one constants with nu_3 = 0 and nu dominating lambda, mu in the
/// first two rows: either a degree-zero tuple with the same value, the closed
/// value -lambda_2 (lambda = mu = nu, lambda_1 >= 2 lambda_2,
/// lambda_1 + lambda_2 = n-3), or zero.
Nu3Result nu3_zero_case(const GrContext& ctx, const Partition& lambda, const Partition& mu, const Partition& nu);

}  // namespace qkgr
