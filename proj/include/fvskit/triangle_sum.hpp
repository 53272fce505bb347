// Weighted triangle sums over tripartite graphs, generic in the value ring.
// The default evaluates trace(XY · YZ · ZX) with cubic matrix products; a
// faster product can be supplied through the Product parameter.
#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fvskit/count_table.hpp"

namespace fvs {

/// Vertex classes X, Y, Z with weighted edges only between different
/// classes. Matrices are row-major: xy[x * ny + y], yz[y * nz + z],
/// zx[z * nx + x]. Missing edges carry the ring's zero.
template <class Value>
struct TriPartiteWeightedGraph {
  std::size_t nx = 0;
  std::size_t ny = 0;
  std::size_t nz = 0;
  std::vector<Value> xy;
  std::vector<Value> yz;
  std::vector<Value> zx;
};

/// Integers mod 2^64.
struct WrappingRing {
  using Value = std::uint64_t;
  Value zero() const { return 0; }
  bool is_zero(Value v) const { return v == 0; }
  Value add(Value a, Value b) const { return a + b; }
  Value mul(Value a, Value b) const { return a * b; }
};

/// Count tables under convolution, truncated to fieldwise key limits.
struct TableRing {
  using Value = CountTable;
  KeyLimits limits = KeyLimits::unbounded();
  Value zero() const { return {}; }
  bool is_zero(const Value& v) const { return v.empty(); }
  Value add(const Value& a, const Value& b) const { return sum(a, b); }
  Value mul(const Value& a, const Value& b) const { return convolve(a, b, limits); }
};

/// Schoolbook product of a (rows × inner) and b (inner × cols).
struct CubicProduct {
  template <class Ring>
  std::vector<typename Ring::Value> operator()(const Ring& ring, const std::vector<typename Ring::Value>& a,
                                               const std::vector<typename Ring::Value>& b, std::size_t rows,
                                               std::size_t inner, std::size_t cols) const {
    std::vector<typename Ring::Value> c(rows * cols, ring.zero());
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t t = 0; t < inner; ++t) {
        const auto& left = a[r * inner + t];
        if (ring.is_zero(left)) continue;
        for (std::size_t col = 0; col < cols; ++col) {
          const auto& right = b[t * cols + col];
          if (ring.is_zero(right)) continue;
          c[r * cols + col] = ring.add(c[r * cols + col], ring.mul(left, right));
        }
      }
    }
    return c;
  }
};

/// Σ over triangles (x,y,z) of w(xy)·w(yz)·w(zx).
template <class Ring, class Product = CubicProduct>
typename Ring::Value triangle_weighted_sum(const TriPartiteWeightedGraph<typename Ring::Value>& h,
                                           const Ring& ring = {}, const Product& product = {}) {
  // (YZ · ZX)[y][x] closes every path y-z-x; pairing with xy closes the triangle.
  std::vector<typename Ring::Value> closing = product(ring, h.yz, h.zx, h.ny, h.nz, h.nx);
  typename Ring::Value total = ring.zero();
  for (std::size_t x = 0; x < h.nx; ++x) {
    for (std::size_t y = 0; y < h.ny; ++y) {
      const auto& w = h.xy[x * h.ny + y];
      const auto& back = closing[y * h.nx + x];
      if (ring.is_zero(w) || ring.is_zero(back)) continue;
      total = ring.add(total, ring.mul(w, back));
    }
  }
  return total;
}

}  // namespace fvs
