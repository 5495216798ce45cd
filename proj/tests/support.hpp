#pragma once

#include <string_view>

#include "qkgr/partition.hpp"
#include "qkgr/qk_element.hpp"

namespace qkgr::test {

inline Partition P(const GrContext& ctx, std::string_view text) { return parse_partition(ctx, text); }

inline QKElement O(const GrContext& ctx, std::string_view text, int degree = 0, Coeff coeff = 1) {
  return QKElement::basis(P(ctx, text), degree, coeff);
}

}  // namespace qkgr::test
