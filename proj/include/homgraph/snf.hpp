#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "homgraph/errors.hpp"
#include "homgraph/matrix.hpp"

namespace homgraph {

using BigInt = boost::multiprecision::cpp_int;
using BigMatrix = Matrix<BigInt>;

/// left * input * right == diag(diagonal), diagonal[i] | diagonal[i+1],
/// both transforms unimodular. left_inverse is carried along so callers can
/// map new generators back to the original basis.
template <class Int>
struct BasicSnfResult {
  std::vector<Int> diagonal;
  Matrix<Int> left_transform;
  Matrix<Int> left_inverse;
  Matrix<Int> right_transform;
};

using SnfResult = BasicSnfResult<std::int64_t>;
using BigSnfResult = BasicSnfResult<BigInt>;

namespace detail {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow{};
  return r;
}
inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticOverflow{};
  return r;
}
inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow{};
  return r;
}
inline std::int64_t neg(std::int64_t a) {
  if (a == std::numeric_limits<std::int64_t>::min()) throw ArithmeticOverflow{};
  return -a;
}
inline std::int64_t magnitude(std::int64_t a) { return a < 0 ? neg(a) : a; }

inline BigInt add(const BigInt& a, const BigInt& b) { return a + b; }
inline BigInt sub(const BigInt& a, const BigInt& b) { return a - b; }
inline BigInt mul(const BigInt& a, const BigInt& b) { return a * b; }
inline BigInt neg(const BigInt& a) { return -a; }
inline BigInt magnitude(const BigInt& a) { return boost::multiprecision::abs(a); }

template <class Int>
class SnfReducer {
 public:
  explicit SnfReducer(Matrix<Int> a)
      : a_(std::move(a)),
        left_(Matrix<Int>::identity(a_.rows())),
        left_inv_(Matrix<Int>::identity(a_.rows())),
        right_(Matrix<Int>::identity(a_.cols())) {}

  BasicSnfResult<Int> run() {
    const std::size_t m = a_.rows();
    const std::size_t n = a_.cols();
    const std::size_t steps = std::min(m, n);
    for (std::size_t t = 0; t < steps; ++t) {
      if (!move_min_to_pivot(t, /*whole_block=*/true)) break;
      for (;;) {
        bool clean = true;
        for (std::size_t i = t + 1; i < m; ++i) {
          if (a_(i, t) == 0) continue;
          row_add(i, t, neg(Int(a_(i, t) / a_(t, t))));
          if (a_(i, t) != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < n; ++j) {
          if (a_(t, j) == 0) continue;
          col_add(j, t, neg(Int(a_(t, j) / a_(t, t))));
          if (a_(t, j) != 0) clean = false;
        }
        if (!clean) {
          move_min_to_pivot(t, /*whole_block=*/false);
          continue;
        }
        if (!fix_divisibility(t)) break;
      }
      if (a_(t, t) < 0) row_negate(t);
    }
    BasicSnfResult<Int> out;
    out.diagonal.reserve(steps);
    for (std::size_t i = 0; i < steps; ++i) out.diagonal.push_back(a_(i, i));
    out.left_transform = std::move(left_);
    out.left_inverse = std::move(left_inv_);
    out.right_transform = std::move(right_);
    return out;
  }

 private:
  // Smallest nonzero magnitude either in the trailing block or in row/col t.
  bool move_min_to_pivot(std::size_t t, bool whole_block) {
    bool found = false;
    std::size_t bi = t, bj = t;
    Int best{};
    auto consider = [&](std::size_t i, std::size_t j) {
      if (a_(i, j) == 0) return;
      Int v = magnitude(a_(i, j));
      if (!found || v < best) {
        found = true;
        best = v;
        bi = i;
        bj = j;
      }
    };
    if (whole_block) {
      for (std::size_t i = t; i < a_.rows(); ++i)
        for (std::size_t j = t; j < a_.cols(); ++j) consider(i, j);
    } else {
      for (std::size_t i = t; i < a_.rows(); ++i) consider(i, t);
      for (std::size_t j = t + 1; j < a_.cols(); ++j) consider(t, j);
    }
    if (!found) return false;
    if (bi != t) row_swap(bi, t);
    if (bj != t) col_swap(bj, t);
    return true;
  }

  // Returns true if some trailing entry was not divisible and a row was folded in.
  bool fix_divisibility(std::size_t t) {
    for (std::size_t i = t + 1; i < a_.rows(); ++i)
      for (std::size_t j = t + 1; j < a_.cols(); ++j)
        if (a_(i, j) % a_(t, t) != 0) {
          row_add(t, i, Int(1));
          return true;
        }
    return false;
  }

  // row_dst += q * row_src
  void row_add(std::size_t dst, std::size_t src, const Int& q) {
    for (std::size_t j = 0; j < a_.cols(); ++j) a_(dst, j) = add(a_(dst, j), mul(q, a_(src, j)));
    for (std::size_t j = 0; j < left_.cols(); ++j) left_(dst, j) = add(left_(dst, j), mul(q, left_(src, j)));
    for (std::size_t i = 0; i < left_inv_.rows(); ++i)
      left_inv_(i, src) = sub(left_inv_(i, src), mul(q, left_inv_(i, dst)));
  }
  void row_swap(std::size_t x, std::size_t y) {
    for (std::size_t j = 0; j < a_.cols(); ++j) std::swap(a_(x, j), a_(y, j));
    for (std::size_t j = 0; j < left_.cols(); ++j) std::swap(left_(x, j), left_(y, j));
    for (std::size_t i = 0; i < left_inv_.rows(); ++i) std::swap(left_inv_(i, x), left_inv_(i, y));
  }
  void row_negate(std::size_t x) {
    for (std::size_t j = 0; j < a_.cols(); ++j) a_(x, j) = neg(a_(x, j));
    for (std::size_t j = 0; j < left_.cols(); ++j) left_(x, j) = neg(left_(x, j));
    for (std::size_t i = 0; i < left_inv_.rows(); ++i) left_inv_(i, x) = neg(left_inv_(i, x));
  }
  // col_dst += q * col_src
  void col_add(std::size_t dst, std::size_t src, const Int& q) {
    for (std::size_t i = 0; i < a_.rows(); ++i) a_(i, dst) = add(a_(i, dst), mul(q, a_(i, src)));
    for (std::size_t i = 0; i < right_.rows(); ++i) right_(i, dst) = add(right_(i, dst), mul(q, right_(i, src)));
  }
  void col_swap(std::size_t x, std::size_t y) {
    for (std::size_t i = 0; i < a_.rows(); ++i) std::swap(a_(i, x), a_(i, y));
    for (std::size_t i = 0; i < right_.rows(); ++i) std::swap(right_(i, x), right_(i, y));
  }

  Matrix<Int> a_;
  Matrix<Int> left_;
  Matrix<Int> left_inv_;
  Matrix<Int> right_;
};

}  // namespace detail

/// Smith normal form over the integers. Int is std::int64_t (overflow-checked,
/// throws ArithmeticOverflow) or BigInt.
template <class Int>
BasicSnfResult<Int> smith_normal_form_exact(Matrix<Int> m) {
  return detail::SnfReducer<Int>(std::move(m)).run();
}

/// 64-bit entry point. Falls back to arbitrary precision internally and
/// throws ArithmeticOverflow only if the transforms do not fit in 64 bits.
SnfResult smith_normal_form(const IntMatrix& m);

BigSnfResult smith_normal_form_big(const BigMatrix& m);

}  // namespace homgraph
