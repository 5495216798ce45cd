#pragma once

// Classical and quantum K-theoretic Pieri rules, O^lambda * O^i, and their
// realization as sparse operators on the Schubert basis.

#include <cstdint>
#include <vector>

#include "qkgr/basis.hpp"
#include "qkgr/context.hpp"
#include "qkgr/partition.hpp"
#include "qkgr/qk_element.hpp"

namespace qkgr {

/// O^lambda . O^i in K(Gr(k,n)): the sum over horizontal strips nu/lambda
/// with i <= |nu/lambda| <= i + r(nu/lambda) - 1 of
/// (-1)^{|nu/lambda|-i} binom(r(nu/lambda)-1, |nu/lambda|-i) O^nu.
QKElement classical_pieri(const GrContext& ctx, const Partition& lambda, int i);

/// O^lambda * O^i in QK(Gr(k,n)), rim-removal form: the classical part plus
/// (-1)^e binom(rho, e) q O^nu for every outer-rim removal nu of lambda, where
/// e = |nu| + n - |lambda| - i. Only present when lambda_k > 0.
QKElement quantum_pieri(const GrContext& ctx, const Partition& lambda, int i);

/// Same product computed through the Seidel-shifted form: the q-part is read
/// off from classical strips over lambda shifted down lambda_k times.
QKElement quantum_pieri_restated(const GrContext& ctx, const Partition& lambda, int i);

/// Multiplication by O^i as a sparse basis-indexed matrix whose entries are
/// monomials c q^d (quantum Pieri products never exceed q^1).
class PieriOperator {
 public:
  struct Entry {
    std::uint32_t row;
    int degree;
    Coeff coeff;
  };

  PieriOperator() = default;
  static PieriOperator build(const Basis& basis, int i);

  int index() const { return index_; }
  std::size_t dimension() const { return columns_.size(); }
  const std::vector<Entry>& column(std::size_t j) const { return columns_[j]; }
  std::size_t nonzeros() const;

  /// out = P * in, truncated at the vector's degree bound. `out` is overwritten.
  void apply(const QVector& in, QVector& out) const;
  QVector apply(const QVector& in) const;
  /// Exact (untruncated) action on an element.
  QKElement apply(const Basis& basis, const QKElement& in) const;

 private:
  int index_ = 0;
  std::vector<std::vector<Entry>> columns_;
};

/// The basis together with P_1 .. P_{n-k}; built once per (k, n, D) and
/// shared read-only.
class PieriFamily {
 public:
  explicit PieriFamily(const GrContext& ctx);

  const GrContext& context() const { return basis_.context(); }
  const Basis& basis() const { return basis_; }
  /// P_i for 1 <= i <= n-k.
  const PieriOperator& op(int i) const;

 private:
  Basis basis_;
  std::vector<PieriOperator> ops_;
};

}  // namespace qkgr
