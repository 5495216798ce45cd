#include "qkgr/pieri.hpp"

#include <stdexcept>

namespace qkgr {

namespace {

void require_index(const GrContext& ctx, int i) {
  if (i < 1 || i > ctx.width()) {
    throw std::invalid_argument("Pieri index " + std::to_string(i) + " outside 1.." + std::to_string(ctx.width()));
  }
}

Coeff sign_of(int exponent) { return exponent % 2 == 0 ? 1 : -1; }

}  // namespace

QKElement classical_pieri(const GrContext& ctx, const Partition& lambda, int i) {
  require_index(ctx, i);
  QKElement out;
  for (const Partition& nu : horizontal_strips_over(ctx, lambda)) {
    const StripInfo strip = horizontal_strip(lambda, nu);
    if (strip.size < i || strip.size > i + strip.rows - 1) continue;
    const int excess = strip.size - i;
    out.add(nu, 0, sign_of(excess) * binomial(strip.rows - 1, excess));
  }
  return out;
}

QKElement quantum_pieri(const GrContext& ctx, const Partition& lambda, int i) {
  QKElement out = classical_pieri(ctx, lambda, i);
  for (const RimRemoval& removal : outer_rim_removals(ctx, lambda)) {
    const int e = removal.nu.boxes() + ctx.n - lambda.boxes() - i;
    if (e < 0 || e > removal.rim_rows) continue;
    out.add(removal.nu, 1, sign_of(e) * binomial(removal.rim_rows, e));
  }
  return out;
}

QKElement quantum_pieri_restated(const GrContext& ctx, const Partition& lambda, int i) {
  QKElement out = classical_pieri(ctx, lambda, i);
  const int k = ctx.k;
  const int last = lambda[k - 1];
  if (last == 0) return out;
  const Partition shifted = seidel_down(ctx, lambda, last);
  for (const Partition& tilde_nu : horizontal_strips_over(ctx, shifted)) {
    const StripInfo strip = horizontal_strip(shifted, tilde_nu);
    if (strip.size < i || strip.size > i + strip.rows - 1) continue;
    if (tilde_nu[0] <= ctx.width() - last) continue;
    std::vector<int> parts(k);
    for (int j = 0; j + 1 < k; ++j) parts[j] = tilde_nu[j + 1] + last - 1;
    parts[k - 1] = last - ctx.width() + tilde_nu[0] - 1;
    const Partition nu(std::move(parts));
    const int exponent = nu.boxes() + ctx.n - i - lambda.boxes();
    out.add(nu, 1, sign_of(exponent) * binomial(strip.rows - 1, strip.size - i));
  }
  return out;
}

PieriOperator PieriOperator::build(const Basis& basis, int i) {
  const GrContext& ctx = basis.context();
  require_index(ctx, i);
  PieriOperator op;
  op.index_ = i;
  op.columns_.resize(basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const QKElement product = quantum_pieri(ctx, basis.at(j), i);
    auto& column = op.columns_[j];
    column.reserve(product.term_count());
    for (const auto& [term, c] : product.terms()) {
      column.push_back({static_cast<std::uint32_t>(basis.index(term.partition)), term.degree, c});
    }
  }
  return op;
}

std::size_t PieriOperator::nonzeros() const {
  std::size_t total = 0;
  for (const auto& c : columns_) total += c.size();
  return total;
}

void PieriOperator::apply(const QVector& in, QVector& out) const {
  out = QVector(in.basis_size(), in.trunc());
  const int D = in.trunc();
  for (std::size_t j = 0; j < columns_.size(); ++j) {
    const Coeff* src = in.row(j);
    for (int d = 0; d <= D; ++d) {
      if (src[d] == 0) continue;
      for (const Entry& e : columns_[j]) {
        const int target = d + e.degree;
        if (target > D) continue;
        Coeff& slot = out.at(e.row, target);
        slot = checked_add(slot, checked_mul(e.coeff, src[d]));
      }
    }
  }
}

QVector PieriOperator::apply(const QVector& in) const {
  QVector out;
  apply(in, out);
  return out;
}

QKElement PieriOperator::apply(const Basis& basis, const QKElement& in) const {
  QKElement out;
  for (const auto& [term, c] : in.terms()) {
    for (const Entry& e : columns_[basis.index(term.partition)]) {
      out.add(basis.at(e.row), term.degree + e.degree, checked_mul(c, e.coeff));
    }
  }
  return out;
}

PieriFamily::PieriFamily(const GrContext& ctx) : basis_(ctx) {
  ops_.reserve(ctx.width());
  for (int i = 1; i <= ctx.width(); ++i) ops_.push_back(PieriOperator::build(basis_, i));
}

const PieriOperator& PieriFamily::op(int i) const {
  if (i < 1 || i > static_cast<int>(ops_.size())) {
    throw std::invalid_argument("Pieri index " + std::to_string(i) + " outside 1.." + std::to_string(ops_.size()));
  }
  return ops_[i - 1];
}

}  // namespace qkgr
