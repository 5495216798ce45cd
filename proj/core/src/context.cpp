#include "qkgr/context.hpp"

#include <algorithm>

namespace qkgr {

int GrContext::default_truncation(int k, int n) { return std::min(k, n - k) + 1; }

GrContext GrContext::make(int k, int n, std::optional<int> trunc) {
  if (k < 1 || k >= n) {
    throw std::invalid_argument("Gr(k,n) requires 1 <= k < n, got k=" + std::to_string(k) +
                                " n=" + std::to_string(n));
  }
  const int min_trunc = default_truncation(k, n);
  const int D = trunc.value_or(min_trunc);
  if (D < min_trunc) {
    throw std::invalid_argument("truncation degree " + std::to_string(D) + " below minimum " +
                                std::to_string(min_trunc) + " for Gr(" + std::to_string(k) + "," +
                                std::to_string(n) + ")");
  }
  return GrContext{k, n, D};
}

std::string GrContext::describe() const {
  return "Gr(" + std::to_string(k) + "," + std::to_string(n) + ") mod q^" + std::to_string(D + 1);
}

Coeff binomial(int top, int bottom) {
  if (bottom < 0 || top < 0 || bottom > top) return 0;
  bottom = std::min(bottom, top - bottom);
  Coeff result = 1;
  for (int j = 1; j <= bottom; ++j) {
    // exact at every step: result * (top - bottom + j) is divisible by j
    result = checked_mul(result, top - bottom + j) / j;
  }
  return result;
}

}  // namespace qkgr
