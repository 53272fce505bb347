#include "fvskit/count_table.hpp"

#include <algorithm>

namespace fvs {

KeyLimits KeyLimits::unbounded() {
  const std::uint64_t f = packed::kMaxField;
  return KeyLimits(packed::make(f, f, f, f));
}

KeyLimits KeyLimits::at_most(std::uint64_t max_s, std::uint64_t max_d) {
  const std::uint64_t f = packed::kMaxField;
  return KeyLimits(packed::make(std::min(max_s, f), std::min(max_d, f), f, f));
}

KeyLimits KeyLimits::exactly(const CutCountKey& key) {
  const std::uint64_t f = packed::kMaxField;
  return KeyLimits(packed::make(std::min<std::uint64_t>(key.s, f), std::min<std::uint64_t>(key.d, f),
                                std::min<std::uint64_t>(key.i, f), std::min<std::uint64_t>(key.m, f)));
}

KeyLimits KeyLimits::raised(std::uint64_t delta) const {
  CutCountKey b = packed::unpack(bound_);
  CutCountKey x = packed::unpack(delta);
  auto add = [](std::uint64_t u, std::uint64_t v) { return std::min(u + v, packed::kMaxField); };
  return KeyLimits(packed::make(add(b.s, x.s), add(b.d, x.d), add(b.i, x.i), add(b.m, x.m)));
}

CountTable CountTable::unit(std::uint64_t key) {
  CountTable t;
  t.entries_.emplace_back(key, 1);
  return t;
}

std::uint64_t CountTable::at(std::uint64_t key) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), key,
                             [](const Entry& e, std::uint64_t k) { return e.first < k; });
  return it != entries_.end() && it->first == key ? it->second : 0;
}

void CountTable::add(const CountTable& other) {
  if (other.empty()) return;
  if (empty()) {
    entries_ = other.entries_;
    return;
  }
  std::vector<Entry> merged;
  merged.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
      merged.push_back(*a++);
    } else if (a == entries_.end() || b->first < a->first) {
      merged.push_back(*b++);
    } else {
      std::uint64_t c = a->second + b->second;
      if (c != 0) merged.emplace_back(a->first, c);
      ++a;
      ++b;
    }
  }
  entries_ = std::move(merged);
}

void CountTable::shift_up(std::uint64_t delta) {
  for (Entry& e : entries_) e.first += delta;
}

void CountTable::shift_down(std::uint64_t delta) {
  for (Entry& e : entries_) e.first -= delta;
}

void CountTable::restrict(const KeyLimits& limits) {
  std::erase_if(entries_, [&](const Entry& e) { return !limits.admits(e.first); });
}

std::vector<CountTable::Entry> CountTable::normalise(std::vector<Entry> raw) {
  std::sort(raw.begin(), raw.end(), [](const Entry& x, const Entry& y) { return x.first < y.first; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < raw.size();) {
    std::uint64_t key = raw[i].first;
    std::uint64_t c = 0;
    for (; i < raw.size() && raw[i].first == key; ++i) c += raw[i].second;
    if (c != 0) raw[out++] = {key, c};
  }
  raw.resize(out);
  return raw;
}

CountTable convolve(const CountTable& a, const CountTable& b, const KeyLimits& limits) {
  CountTable out;
  if (a.empty() || b.empty()) return out;
  const CountTable& big = a.size() >= b.size() ? a : b;
  const CountTable& small = a.size() >= b.size() ? b : a;
  if (small.size() == 1) {
    auto [key, c] = small.entries_.front();
    out.entries_.reserve(big.size());
    for (const auto& [k, v] : big.entries_) {
      std::uint64_t sum_key = k + key;
      std::uint64_t prod = v * c;
      if (prod != 0 && limits.admits(sum_key)) out.entries_.emplace_back(sum_key, prod);
    }
    return out;
  }
  std::vector<CountTable::Entry> raw;
  raw.reserve(big.size() * small.size());
  for (const auto& [ks, vs] : small.entries_) {
    for (const auto& [kb, vb] : big.entries_) {
      std::uint64_t key = ks + kb;
      if (limits.admits(key)) raw.emplace_back(key, vs * vb);
    }
  }
  out.entries_ = CountTable::normalise(std::move(raw));
  return out;
}

CountTable sum(const CountTable& a, const CountTable& b) {
  CountTable out = a;
  out.add(b);
  return out;
}

}  // namespace fvs
