#pragma once

// Partitions in the k x (n-k) rectangle and the combinatorics around them:
// duality, jump sequences, Seidel shifts, horizontal strips, rook strips and
// outer-rim removals.

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qkgr/context.hpp"

namespace qkgr {

/// Weakly decreasing tuple of non-negative row lengths. A partition belonging
/// to a context always has exactly k entries (trailing zeros explicit); use
/// make_partition() to normalize and validate against a GrContext.
///
/// Ordering is the basis order used throughout: first by number of boxes,
/// then lexicographically by rows.
class Partition {
 public:
  Partition() = default;
  /// Checks only shape (non-negative, weakly decreasing); not the rectangle.
  explicit Partition(std::vector<int> parts);

  std::size_t length() const { return parts_.size(); }
  int operator[](std::size_t i) const { return parts_[i]; }
  std::span<const int> parts() const { return parts_; }
  const std::vector<int>& vec() const { return parts_; }

  /// |lambda|, the number of boxes.
  int boxes() const;
  bool empty_shape() const;
  /// Number of non-zero rows.
  int nonzero_rows() const;
  bool contains(const Partition& other) const;

  std::string to_string() const;  // "3,2,1"

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

 private:
  std::vector<int> parts_;
};

/// Strictly increasing k-subset of {1..n}.
class JumpSequence {
 public:
  JumpSequence() = default;
  explicit JumpSequence(std::vector<int> elems);

  std::size_t size() const { return elems_.size(); }
  int operator[](std::size_t i) const { return elems_[i]; }
  const std::vector<int>& vec() const { return elems_; }

  friend bool operator==(const JumpSequence&, const JumpSequence&) = default;

 private:
  std::vector<int> elems_;
};

/// Pads with zeros to length k and validates n-k >= parts[0] >= ... >= 0.
/// Throws std::invalid_argument for anything that is not in P_{k,n}.
Partition make_partition(const GrContext& ctx, std::vector<int> parts);
bool fits(const GrContext& ctx, const Partition& p);
void require_fits(const GrContext& ctx, const Partition& p);

/// Parses "3,2,1" (short tuples are padded). Whitespace around entries is ok.
Partition parse_partition(const GrContext& ctx, std::string_view text);
/// Parses the JSON array form "[3,2,1]".
Partition parse_partition_json(const GrContext& ctx, std::string_view json);
std::string partition_json(const Partition& p);

Partition empty_partition(const GrContext& ctx);
/// (i, 0, ..., 0), the special class O^i.
Partition special_partition(const GrContext& ctx, int i);
/// (1, ..., 1).
Partition column_partition(const GrContext& ctx);
/// (n-k, ..., n-k).
Partition full_rectangle(const GrContext& ctx);

/// All of P_{k,n} in basis order.
std::vector<Partition> all_partitions(const GrContext& ctx);

Partition dual(const GrContext& ctx, const Partition& lambda);

JumpSequence to_jump_sequence(const GrContext& ctx, const Partition& lambda);
Partition from_jump_sequence(const GrContext& ctx, const JumpSequence& jumps);

/// The element of ([n] choose k) congruent to I + p elementwise mod n.
JumpSequence shift_jump(const GrContext& ctx, const JumpSequence& jumps, long p);

/// #{j : a_j <= i} for 0 <= i <= n.
int d_count(const GrContext& ctx, const JumpSequence& jumps, int i);

/// lambda shifted up p times; p is reduced mod n (the shift has period n).
Partition seidel_up(const GrContext& ctx, const Partition& lambda, long p);
/// lambda shifted down p times, i.e. seidel_up(lambda, n - p).
Partition seidel_down(const GrContext& ctx, const Partition& lambda, long p);

struct StripInfo {
  bool is_strip = false;
  int size = 0;  // |nu| - |lambda|
  int rows = 0;  // number of non-empty rows of nu/lambda
};

/// nu/lambda is a horizontal strip iff nu contains lambda and
/// nu_{i+1} <= lambda_i for all i.
StripInfo horizontal_strip(const Partition& lambda, const Partition& nu);

/// All horizontal strips nu/lambda inside the rectangle (including nu=lambda).
std::vector<Partition> horizontal_strips_over(const GrContext& ctx, const Partition& lambda);

struct SignedPartition {
  Partition partition;
  int sign = 1;

  friend bool operator==(const SignedPartition&, const SignedPartition&) = default;
};

/// All eta containing mu^dual with eta/mu^dual a rook strip, signed by
/// (-1)^{|eta/mu^dual|}. Listed in basis order.
std::vector<SignedPartition> rook_strips_over(const GrContext& ctx, const Partition& mu);

struct RimRemoval {
  Partition nu;
  /// Rows of nu holding a rim box of lambda, bottom rim row excluded.
  int rim_rows = 0;
};

/// Partitions obtained from lambda by deleting outer-rim boxes, at least one
/// per row. Empty unless lambda_k > 0. Listed in basis order.
std::vector<RimRemoval> outer_rim_removals(const GrContext& ctx, const Partition& lambda);

}  // namespace qkgr
