#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "qkgr/context.hpp"
#include "qkgr/partition.hpp"
#include "qkgr/qk_element.hpp"

namespace qkgr {

/// Schubert basis of QK(Gr(k,n)) in basis order (size, then lex).
class Basis {
 public:
  explicit Basis(const GrContext& ctx);

  const GrContext& context() const { return ctx_; }
  std::size_t size() const { return parts_.size(); }
  const Partition& at(std::size_t i) const { return parts_[i]; }
  const std::vector<Partition>& partitions() const { return parts_; }

  std::optional<std::size_t> find(const Partition& p) const;
  /// Throws std::invalid_argument if p is not a basis label.
  std::size_t index(const Partition& p) const;

 private:
  GrContext ctx_;
  std::vector<Partition> parts_;
  std::map<std::vector<int>, std::size_t> lookup_;
};

/// Dense vector over Z[q]/(q^(D+1)) indexed by the basis: entry (i, d) is the
/// coefficient of q^d O^{basis[i]}.
class QVector {
 public:
  QVector() = default;
  QVector(std::size_t basis_size, int trunc) : n_(basis_size), stride_(trunc + 1), data_(n_ * stride_, 0) {}

  static QVector unit(std::size_t basis_size, int trunc, std::size_t index) {
    QVector v(basis_size, trunc);
    v.at(index, 0) = 1;
    return v;
  }

  std::size_t basis_size() const { return n_; }
  int trunc() const { return static_cast<int>(stride_) - 1; }
  Coeff& at(std::size_t i, int d) { return data_[i * stride_ + d]; }
  Coeff at(std::size_t i, int d) const { return data_[i * stride_ + d]; }
  const Coeff* row(std::size_t i) const { return data_.data() + i * stride_; }
  Coeff* row(std::size_t i) { return data_.data() + i * stride_; }

  void axpy(Coeff scale, const QVector& x);
  /// this += scale * q^shift * x (terms past the truncation are dropped).
  void axpy_shifted(Coeff scale, int shift, const QVector& x);
  bool is_zero() const;
  /// Index/degree-ordered element; needs the basis for the labels.
  QKElement to_element(const Basis& basis) const;
  static QVector from_element(const Basis& basis, int trunc, const QKElement& e);

  friend bool operator==(const QVector&, const QVector&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t stride_ = 1;
  std::vector<Coeff> data_;
};

}  // namespace qkgr
