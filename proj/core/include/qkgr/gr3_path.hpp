#pragma once

// Products in QK(Gr(3,n)) without a multiplication table: strip the third
// rows (they are Seidel shifts), write one factor as a signed sum of
// two-factor Pieri products, and apply those to the other factor.

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "qkgr/pieri.hpp"
#include "qkgr/seidel.hpp"

namespace qkgr {

/// N_{lambda,mu}^{nu,d} = N_{lambda-hat,mu-hat}^{nu-hat,d-hat} with the third
/// rows removed from lambda and mu, nu-hat = nu shifted down s = lambda_3+mu_3
/// and d-hat = d + (|nu| - |nu-hat| - 3s)/n. Absent when d-hat < 0, in which
/// case the constant vanishes. Requires k = 3.
std::optional<IndexTuple> reduce_third_row(const GrContext& ctx, const IndexTuple& t);

/// (lambda_1 - lambda_3, lambda_2 - lambda_3, 0).
Partition strip_third_row(const Partition& lambda);

/// sign * O^{factors[0]} * O^{factors[1]} * ...; no factors means the unit.
struct PieriMonomial {
  Coeff sign = 1;
  std::vector<int> factors;

  friend bool operator==(const PieriMonomial&, const PieriMonomial&) = default;
};

/// O^mu for mu = (mu_1, mu_2, 0) as
/// O^{mu_1} O^{mu_2-1} + sum_{j=mu_1}^{n-3} O^j (O^{mu_2} - O^{mu_2-1}),
/// where O^0 is the unit; a single special class when mu_2 = 0.
std::vector<PieriMonomial> giambelli_gr3(const GrContext& ctx, const Partition& mu);

/// Applies the recipe to O^start through the Pieri operators, exactly.
QKElement evaluate_recipe(const PieriFamily& family, const std::vector<PieriMonomial>& recipe,
                          const Partition& start);

class Gr3Path {
 public:
  explicit Gr3Path(std::shared_ptr<const PieriFamily> family);

  const GrContext& context() const { return family_->context(); }

  /// O^lambda * O^mu for lambda_3 = mu_3 = 0 (cached).
  const QKElement& reduced_product(const Partition& lambda, const Partition& mu) const;
  /// O^lambda * O^mu = T^{lambda_3+mu_3}(O^lambda-hat * O^mu-hat), exact.
  QKElement product(const Partition& lambda, const Partition& mu) const;
  Coeff structure_constant(const IndexTuple& t) const;

 private:
  std::shared_ptr<const PieriFamily> family_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<std::size_t, std::size_t>, QKElement> cache_;
};

}  // namespace qkgr
