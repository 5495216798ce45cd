#include "qkgr/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

namespace qkgr {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw std::invalid_argument("partition has a negative part");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing: " + to_string());
    }
  }
}

int Partition::boxes() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Partition::empty_shape() const {
  return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p == 0; });
}

int Partition::nonzero_rows() const {
  return static_cast<int>(std::count_if(parts_.begin(), parts_.end(), [](int p) { return p > 0; }));
}

bool Partition::contains(const Partition& other) const {
  if (other.length() != length()) return false;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (other[i] > parts_[i]) return false;
  }
  return true;
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
  if (auto c = a.boxes() <=> b.boxes(); c != 0) return c;
  return a.parts_ <=> b.parts_;
}

JumpSequence::JumpSequence(std::vector<int> elems) : elems_(std::move(elems)) {
  for (std::size_t i = 1; i < elems_.size(); ++i) {
    if (elems_[i] <= elems_[i - 1]) throw std::invalid_argument("jump sequence must be strictly increasing");
  }
}

bool fits(const GrContext& ctx, const Partition& p) {
  if (p.length() != static_cast<std::size_t>(ctx.k)) return false;
  return p.length() == 0 || p[0] <= ctx.width();
}

void require_fits(const GrContext& ctx, const Partition& p) {
  if (!fits(ctx, p)) {
    throw std::invalid_argument("partition (" + p.to_string() + ") is not in the " +
                                std::to_string(ctx.k) + "x" + std::to_string(ctx.width()) + " rectangle");
  }
}

Partition make_partition(const GrContext& ctx, std::vector<int> parts) {
  if (parts.size() > static_cast<std::size_t>(ctx.k)) {
    // allow explicit trailing zeros beyond k only if they are zeros
    for (std::size_t i = ctx.k; i < parts.size(); ++i) {
      if (parts[i] != 0) throw std::invalid_argument("partition has more than k non-zero rows");
    }
    parts.resize(ctx.k);
  }
  parts.resize(ctx.k, 0);
  Partition p(std::move(parts));
  require_fits(ctx, p);
  return p;
}

Partition parse_partition(const GrContext& ctx, std::string_view text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.size() >= 2 && text.front() == '(' && text.back() == ')') text = text.substr(1, text.size() - 2);
  if (trim(text).empty()) return make_partition(ctx, {});
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view item = trim(text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos));
    int value = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw std::invalid_argument("malformed partition '" + std::string(text) + "'");
    }
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return make_partition(ctx, std::move(parts));
}

Partition parse_partition_json(const GrContext& ctx, std::string_view json) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed partition JSON: ") + e.what());
  }
  if (!j.is_array()) throw std::invalid_argument("partition JSON must be an array");
  std::vector<int> parts;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw std::invalid_argument("partition JSON entries must be integers");
    parts.push_back(v.get<int>());
  }
  return make_partition(ctx, std::move(parts));
}

std::string partition_json(const Partition& p) { return nlohmann::json(p.vec()).dump(); }

Partition empty_partition(const GrContext& ctx) { return Partition(std::vector<int>(ctx.k, 0)); }

Partition special_partition(const GrContext& ctx, int i) {
  if (i < 0 || i > ctx.width()) throw std::invalid_argument("special class index out of range");
  std::vector<int> parts(ctx.k, 0);
  parts[0] = i;
  return Partition(std::move(parts));
}

Partition column_partition(const GrContext& ctx) { return Partition(std::vector<int>(ctx.k, 1)); }

Partition full_rectangle(const GrContext& ctx) { return Partition(std::vector<int>(ctx.k, ctx.width())); }

namespace {

void enumerate_rows(int row, int bound, std::vector<int>& current, std::vector<Partition>& out) {
  if (row == static_cast<int>(current.size())) {
    out.emplace_back(current);
    return;
  }
  for (int v = 0; v <= bound; ++v) {
    current[row] = v;
    enumerate_rows(row + 1, v, current, out);
  }
}

}  // namespace

std::vector<Partition> all_partitions(const GrContext& ctx) {
  std::vector<Partition> out;
  std::vector<int> current(ctx.k, 0);
  enumerate_rows(0, ctx.width(), current, out);
  std::sort(out.begin(), out.end());
  return out;
}

Partition dual(const GrContext& ctx, const Partition& lambda) {
  require_fits(ctx, lambda);
  std::vector<int> parts(ctx.k);
  for (int i = 0; i < ctx.k; ++i) parts[i] = ctx.width() - lambda[ctx.k - 1 - i];
  return Partition(std::move(parts));
}

JumpSequence to_jump_sequence(const GrContext& ctx, const Partition& lambda) {
  require_fits(ctx, lambda);
  std::vector<int> elems(ctx.k);
  for (int j = 1; j <= ctx.k; ++j) elems[j - 1] = ctx.width() + j - lambda[j - 1];
  return JumpSequence(std::move(elems));
}

Partition from_jump_sequence(const GrContext& ctx, const JumpSequence& jumps) {
  if (jumps.size() != static_cast<std::size_t>(ctx.k) || jumps[0] < 1 || jumps[ctx.k - 1] > ctx.n) {
    throw std::invalid_argument("jump sequence is not a k-subset of {1..n}");
  }
  std::vector<int> parts(ctx.k);
  for (int j = 1; j <= ctx.k; ++j) parts[j - 1] = ctx.width() + j - jumps[j - 1];
  return Partition(std::move(parts));
}

JumpSequence shift_jump(const GrContext& ctx, const JumpSequence& jumps, long p) {
  std::vector<int> elems(jumps.size());
  const long n = ctx.n;
  for (std::size_t j = 0; j < jumps.size(); ++j) {
    elems[j] = static_cast<int>(((jumps[j] - 1 + p) % n + n) % n) + 1;
  }
  std::sort(elems.begin(), elems.end());
  return JumpSequence(std::move(elems));
}

int d_count(const GrContext& ctx, const JumpSequence& jumps, int i) {
  if (i < 0 || i > ctx.n) throw std::invalid_argument("d_count index must lie in 0..n");
  return static_cast<int>(std::count_if(jumps.vec().begin(), jumps.vec().end(), [i](int a) { return a <= i; }));
}

Partition seidel_up(const GrContext& ctx, const Partition& lambda, long p) {
  require_fits(ctx, lambda);
  const long steps = ((p % ctx.n) + ctx.n) % ctx.n;
  std::vector<int> parts = lambda.vec();
  for (long s = 0; s < steps; ++s) {
    if (parts[0] < ctx.width()) {
      for (int& v : parts) ++v;
    } else {
      std::rotate(parts.begin(), parts.begin() + 1, parts.end());
      parts.back() = 0;
    }
  }
  return Partition(std::move(parts));
}

Partition seidel_down(const GrContext& ctx, const Partition& lambda, long p) {
  return seidel_up(ctx, lambda, static_cast<long>(ctx.n) - (p % ctx.n));
}

StripInfo horizontal_strip(const Partition& lambda, const Partition& nu) {
  StripInfo info;
  if (lambda.length() != nu.length() || !nu.contains(lambda)) return info;
  for (std::size_t i = 0; i + 1 < nu.length(); ++i) {
    if (nu[i + 1] > lambda[i]) return info;
  }
  info.is_strip = true;
  info.size = nu.boxes() - lambda.boxes();
  for (std::size_t i = 0; i < nu.length(); ++i) info.rows += nu[i] > lambda[i] ? 1 : 0;
  return info;
}

namespace {

void enumerate_strips(const GrContext& ctx, const Partition& lambda, std::size_t row, std::vector<int>& current,
                      std::vector<Partition>& out) {
  if (row == lambda.length()) {
    out.emplace_back(current);
    return;
  }
  const int upper = row == 0 ? ctx.width() : lambda[row - 1];
  for (int v = lambda[row]; v <= upper; ++v) {
    current[row] = v;
    enumerate_strips(ctx, lambda, row + 1, current, out);
  }
}

}  // namespace

std::vector<Partition> horizontal_strips_over(const GrContext& ctx, const Partition& lambda) {
  require_fits(ctx, lambda);
  std::vector<Partition> out;
  std::vector<int> current(lambda.length());
  enumerate_strips(ctx, lambda, 0, current, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SignedPartition> rook_strips_over(const GrContext& ctx, const Partition& mu) {
  const Partition base = dual(ctx, mu);
  // Only the top row of each block of equal parts may take a box; this keeps
  // eta a partition and puts the new boxes in distinct columns.
  std::vector<int> eligible;
  for (int i = 0; i < ctx.k; ++i) {
    const bool top_of_block = i == 0 || base[i - 1] > base[i];
    if (top_of_block && base[i] < ctx.width()) eligible.push_back(i);
  }
  std::vector<SignedPartition> out;
  const std::size_t subsets = std::size_t{1} << eligible.size();
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    std::vector<int> parts = base.vec();
    int added = 0;
    for (std::size_t b = 0; b < eligible.size(); ++b) {
      if (mask & (std::size_t{1} << b)) {
        ++parts[eligible[b]];
        ++added;
      }
    }
    out.push_back({Partition(std::move(parts)), added % 2 == 0 ? 1 : -1});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.partition < b.partition; });
  return out;
}

std::vector<RimRemoval> outer_rim_removals(const GrContext& ctx, const Partition& lambda) {
  require_fits(ctx, lambda);
  std::vector<RimRemoval> out;
  const int k = ctx.k;
  if (lambda[k - 1] == 0) return out;
  // Row j keeps nu_j boxes with lambda_{j+1} - 1 <= nu_j <= lambda_j - 1
  // (lambda_{k+1} := 0): every removed box is then a rim box and each row
  // loses at least one.
  std::vector<int> lo(k), hi(k);
  for (int j = 0; j < k; ++j) {
    const int below = j + 1 < k ? lambda[j + 1] : 0;
    lo[j] = std::max(below - 1, 0);
    hi[j] = lambda[j] - 1;
  }
  std::vector<int> current(k);
  auto recurse = [&](auto&& self, int row) -> void {
    if (row == k) {
      int rim_rows = 0;
      for (int j = 0; j + 1 < k; ++j) rim_rows += current[j] >= lambda[j + 1] ? 1 : 0;
      out.push_back({Partition(current), rim_rows});
      return;
    }
    for (int v = lo[row]; v <= hi[row]; ++v) {
      current[row] = v;
      self(self, row + 1);
    }
  };
  recurse(recurse, 0);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.nu < b.nu; });
  return out;
}

}  // namespace qkgr
