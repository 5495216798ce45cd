#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qkgr/context.hpp"
#include "qkgr/partition.hpp"

namespace qkgr {

/// Index of a basis term q^degree * O^partition.
struct Term {
  int degree = 0;
  Partition partition;

  friend bool operator==(const Term&, const Term&) = default;
  friend auto operator<=>(const Term&, const Term&) = default;
};

/// A finitely supported integer combination of q^d O^lambda. Zero
/// coefficients are never stored. Terms iterate in (degree, basis order).
class QKElement {
 public:
  using Map = std::map<Term, Coeff>;

  QKElement() = default;
  static QKElement basis(const Partition& p, int degree = 0, Coeff coeff = 1);

  void add(const Partition& p, int degree, Coeff coeff);
  void add(const QKElement& other, Coeff scale = 1);
  Coeff coefficient(const Partition& p, int degree) const;

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const Map& terms() const { return terms_; }
  /// -1 for the zero element.
  int max_degree() const;
  int min_degree() const;

  /// Keeps the terms of q-degree exactly `degree`, shifted to degree 0.
  QKElement degree_part(int degree) const;
  /// Multiplies by q^shift.
  QKElement shifted(int shift) const;
  /// Throws TruncationError if any term exceeds the context's bound D.
  void check_truncation(const GrContext& ctx) const;

  /// Human form, e.g. "O^(2,0) + O^(1,1) - O^(2,1) + q*O^(0,0)".
  std::string to_string() const;
  /// {"terms":[{"q":d,"partition":[...],"coeff":c}, ...]}
  std::string to_json() const;
  static QKElement from_json(const GrContext& ctx, std::string_view json);

  friend QKElement operator+(QKElement a, const QKElement& b) {
    a.add(b);
    return a;
  }
  friend QKElement operator-(QKElement a, const QKElement& b) {
    a.add(b, -1);
    return a;
  }
  friend QKElement operator*(Coeff s, const QKElement& a);
  friend bool operator==(const QKElement&, const QKElement&) = default;

 private:
  Map terms_;
};

/// Sum over basis elements of (coefficients) per q-degree; entry d is the
/// Euler characteristic of the degree-d part (chi(O^nu) = 1).
std::vector<Coeff> euler_char(const QKElement& a);

}  // namespace qkgr
