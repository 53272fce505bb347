// Sparse count tables over packed (s, d, i, m') keys, with counts in the ring
// of integers mod 2^64.
#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace fvs {

/// Index of a counting subproblem. i is the plain weight sum of F', d its
/// degree sum, s = |F'| and m = |E[L' ∪ R']| (with multiplicity).
struct CutCountKey {
  std::uint32_t s = 0;
  std::uint32_t d = 0;
  std::uint32_t i = 0;
  std::uint32_t m = 0;

  /// Combined weight W = i·n² + d.
  std::uint64_t combined_weight(std::size_t n) const { return std::uint64_t{i} * n * n + d; }

  friend bool operator==(const CutCountKey&, const CutCountKey&) = default;
};

/// Keys are packed 16 bits per field as s | d | i | m (most significant
/// first), so packed addition adds fieldwise and the packed order sorts by
/// (s, d, i, m). Every stored field stays at or below kMaxField, which keeps
/// sums of two keys carry-free.
namespace packed {

inline constexpr std::uint64_t kMaxField = 0x3fff;
inline constexpr std::uint64_t kHighBits = 0x8000800080008000ULL;

constexpr std::uint64_t make(std::uint64_t s, std::uint64_t d, std::uint64_t i, std::uint64_t m) {
  return (s << 48) | (d << 32) | (i << 16) | m;
}
constexpr std::uint64_t make(const CutCountKey& k) { return make(k.s, k.d, k.i, k.m); }
constexpr std::uint64_t m_unit() { return 1; }

inline CutCountKey unpack(std::uint64_t key) {
  return {static_cast<std::uint32_t>(key >> 48), static_cast<std::uint32_t>((key >> 32) & 0xffff),
          static_cast<std::uint32_t>((key >> 16) & 0xffff), static_cast<std::uint32_t>(key & 0xffff)};
}

}  // namespace packed

/// Fieldwise upper bounds on keys.
class KeyLimits {
 public:
  /// Every field bounded only by kMaxField.
  static KeyLimits unbounded();
  static KeyLimits at_most(std::uint64_t max_s, std::uint64_t max_d);
  static KeyLimits exactly(const CutCountKey& key);

  bool admits(std::uint64_t key) const { return (((bound_ | packed::kHighBits) - key) & packed::kHighBits) == packed::kHighBits; }
  /// Bounds raised by `delta` in every field, saturating at kMaxField.
  KeyLimits raised(std::uint64_t delta) const;
  std::uint64_t bound() const { return bound_; }

 private:
  explicit KeyLimits(std::uint64_t bound) : bound_(bound) {}
  std::uint64_t bound_;
};

class CountTable {
 public:
  using Entry = std::pair<std::uint64_t, std::uint64_t>;

  CountTable() = default;
  static CountTable unit(std::uint64_t key = 0);

  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  const std::vector<Entry>& entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  /// Count at `key` (0 when absent).
  std::uint64_t at(std::uint64_t key) const;

  void add(const CountTable& other);
  /// Adds `delta` to every key (or subtracts it). Order is preserved.
  void shift_up(std::uint64_t delta);
  void shift_down(std::uint64_t delta);
  /// Drops entries outside `limits`.
  void restrict(const KeyLimits& limits);

  friend CountTable convolve(const CountTable& a, const CountTable& b, const KeyLimits& limits);
  friend bool operator==(const CountTable&, const CountTable&) = default;

 private:
  /// Sorts, merges equal keys and drops zero counts.
  static std::vector<Entry> normalise(std::vector<Entry> raw);

  std::vector<Entry> entries_;
};

CountTable convolve(const CountTable& a, const CountTable& b, const KeyLimits& limits);
CountTable sum(const CountTable& a, const CountTable& b);

}  // namespace fvs
