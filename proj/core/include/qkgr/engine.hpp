#pragma once

// Full product engine for QK(Gr(k,n)).
//
// Every Schubert class is a polynomial in the special classes O^1..O^{n-k}
// (Giambelli). Because the quantum Pieri operators commute, evaluating that
// polynomial at the operators gives multiplication by O^lambda, up to a
// q-adic correction that a short fixpoint iteration removes. Products are
// computed column by column (fixed right factor) and cached.

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "qkgr/basis.hpp"
#include "qkgr/gr3_path.hpp"
#include "qkgr/pieri.hpp"
#include "qkgr/qk_element.hpp"
#include "qkgr/seidel.hpp"

namespace qkgr {

/// One step of the Giambelli recursion
/// G_lambda = P_{lambda_1} G_{parent} - sum_j coeff_j G_{nu_j},
/// parent = (lambda_2, ..., lambda_k, 0).
struct GiambelliStep {
  std::size_t target = 0;
  int special = 0;  // lambda_1; 0 only for the empty partition
  std::size_t parent = 0;
  std::vector<std::pair<std::size_t, Coeff>> corrections;
};

/// Recursion steps for every basis element, in an order where each step
/// depends only on earlier ones.
std::vector<GiambelliStep> giambelli_recursion(const Basis& basis);

/// Sparse product O^lambda * O^mu: (basis index, degree, coefficient),
/// sorted by degree then index.
struct ProductEntry {
  std::uint32_t index;
  int degree;
  Coeff coeff;

  friend bool operator==(const ProductEntry&, const ProductEntry&) = default;
};
using SparseProduct = std::vector<ProductEntry>;

enum class ProductRoute {
  automatic,  // third-row path for k = 3, lifted table otherwise
  lift,
  third_row,
};

struct EngineOptions {
  int jobs = 1;
  /// Raise D by 2 whenever a product reaches degree D.
  bool escalate = true;
};

class QKEngine {
 public:
  explicit QKEngine(const GrContext& ctx, EngineOptions options = {});

  /// Current context; D may have grown through escalation.
  GrContext context() const;
  const Basis& basis() const { return family_->basis(); }
  const PieriFamily& pieri() const { return *family_; }
  const std::vector<GiambelliStep>& recursion() const { return steps_; }
  /// The third-row product path; null unless k = 3.
  const Gr3Path* gr3_path() const { return gr3_.get(); }
  /// Number of D escalations performed so far.
  int escalations() const;

  /// All products with right factor mu, indexed by the left factor.
  std::vector<SparseProduct> column(const Partition& mu) const;
  /// Builds every column (in parallel with options.jobs workers).
  void build_table() const;

  QKElement product(const Partition& lambda, const Partition& mu, ProductRoute route = ProductRoute::automatic) const;
  /// Bilinear product; throws TruncationError if a term passes D.
  QKElement product(const QKElement& a, const QKElement& b, ProductRoute route = ProductRoute::automatic) const;
  /// Bilinear product modulo q^(D+1).
  QKElement product_mod(const QKElement& a, const QKElement& b, ProductRoute route = ProductRoute::automatic) const;

  /// N_{lambda,mu}^{nu,d} from the lifted table.
  Coeff structure_constant(const Partition& lambda, const Partition& mu, const Partition& nu, int d) const;
  Coeff structure_constant(const IndexTuple& t) const;
  /// Largest q-degree over the whole table (builds it).
  int observed_max_degree() const;

  /// xi_mu: the signed rook-strip sum over mu^dual.
  QKElement ideal_sheaf(const Partition& mu) const;
  /// chi(O^lambda . xi_mu) computed with the classical (q = 0) product.
  Coeff pairing(const Partition& lambda, const Partition& mu) const;
  /// (O^lambda * O^mu) * O^kappa == O^lambda * (O^mu * O^kappa) modulo q^(D+1).
  bool verify_recursion(const Partition& lambda, const Partition& mu, const Partition& kappa) const;

  /// One JSON object per (lambda, mu) in basis order.
  void write_jsonl(std::ostream& out) const;
  /// Header lambda,mu,q,nu,coeff then one row per nonzero constant.
  void write_csv(std::ostream& out) const;

  QKElement to_element(const SparseProduct& p) const;

 private:
  struct State;

  std::vector<SparseProduct> compute_column(const State& state, std::size_t mu) const;
  std::shared_ptr<const std::vector<SparseProduct>> column_ptr(std::size_t mu) const;
  std::shared_ptr<State> state() const;
  void escalate(const std::shared_ptr<State>& seen) const;

  EngineOptions options_;
  std::shared_ptr<const PieriFamily> family_;
  std::vector<GiambelliStep> steps_;
  std::unique_ptr<Gr3Path> gr3_;

  mutable std::mutex mutex_;
  mutable std::shared_ptr<State> state_;
};

}  // namespace qkgr
