#include "qkgr/basis.hpp"

#include <algorithm>
#include <stdexcept>

namespace qkgr {

Basis::Basis(const GrContext& ctx) : ctx_(ctx), parts_(all_partitions(ctx)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) lookup_.emplace(parts_[i].vec(), i);
}

std::optional<std::size_t> Basis::find(const Partition& p) const {
  auto it = lookup_.find(p.vec());
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t Basis::index(const Partition& p) const {
  if (auto i = find(p)) return *i;
  throw std::invalid_argument("(" + p.to_string() + ") is not a basis label of " + ctx_.describe());
}

void QVector::axpy(Coeff scale, const QVector& x) {
  if (scale == 0) return;
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (x.data_[i] != 0) data_[i] = checked_add(data_[i], checked_mul(scale, x.data_[i]));
  }
}

void QVector::axpy_shifted(Coeff scale, int shift, const QVector& x) {
  if (scale == 0) return;
  const int D = trunc();
  for (std::size_t i = 0; i < n_; ++i) {
    const Coeff* src = x.row(i);
    Coeff* dst = row(i);
    for (int d = 0; d + shift <= D; ++d) {
      if (src[d] != 0) dst[d + shift] = checked_add(dst[d + shift], checked_mul(scale, src[d]));
    }
  }
}

bool QVector::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Coeff c) { return c == 0; });
}

QKElement QVector::to_element(const Basis& basis) const {
  QKElement out;
  for (std::size_t i = 0; i < n_; ++i) {
    for (int d = 0; d <= trunc(); ++d) {
      if (Coeff c = at(i, d); c != 0) out.add(basis.at(i), d, c);
    }
  }
  return out;
}

QVector QVector::from_element(const Basis& basis, int trunc, const QKElement& e) {
  QVector v(basis.size(), trunc);
  for (const auto& [term, c] : e.terms()) {
    if (term.degree > trunc) throw TruncationError("element exceeds truncation bound");
    v.at(basis.index(term.partition), term.degree) = c;
  }
  return v;
}

}  // namespace qkgr
