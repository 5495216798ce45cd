#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace qkgr {

/// Exact integer coefficient type. All arithmetic on it goes through the
/// checked helpers below; overflow raises instead of wrapping.
using Coeff = std::int64_t;

struct OverflowError : std::overflow_error {
  using std::overflow_error::overflow_error;
};

/// Raised when a q-power exceeds the truncation bound of a context.
struct TruncationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Coeff checked_add(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("coefficient overflow in addition");
  return r;
}

inline Coeff checked_sub(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("coefficient overflow in subtraction");
  return r;
}

inline Coeff checked_mul(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("coefficient overflow in multiplication");
  return r;
}

/// Ambient parameters of QK(Gr(k,n)): k rows, ambient dimension n and the
/// q-truncation degree D. Every computation is exact modulo q^(D+1).
struct GrContext {
  int k = 1;
  int n = 2;
  int D = 2;

  /// Validates 1 <= k < n and D >= min(k, n-k) + 1. When `trunc` is empty the
  /// default truncation min(k, n-k) + 1 is used.
  static GrContext make(int k, int n, std::optional<int> trunc = std::nullopt);

  static int default_truncation(int k, int n);

  int width() const { return n - k; }
  GrContext with_truncation(int trunc) const { return make(k, n, trunc); }

  std::string describe() const;

  friend bool operator==(const GrContext&, const GrContext&) = default;
};

Coeff binomial(int top, int bottom);

}  // namespace qkgr
