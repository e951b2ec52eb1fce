#include "homgraph/snf.hpp"

#include <limits>

namespace homgraph {
namespace {

std::int64_t narrow(const BigInt& v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) throw ArithmeticOverflow{};
  return static_cast<std::int64_t>(v);
}

IntMatrix narrow(const BigMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = narrow(m(i, j));
  return out;
}

}  // namespace

SnfResult smith_normal_form(const IntMatrix& m) {
  try {
    return smith_normal_form_exact(m);
  } catch (const ArithmeticOverflow&) {
    auto big = smith_normal_form_big(m.cast<BigInt>());
    SnfResult out;
    for (const auto& d : big.diagonal) out.diagonal.push_back(narrow(d));
    out.left_transform = narrow(big.left_transform);
    out.left_inverse = narrow(big.left_inverse);
    out.right_transform = narrow(big.right_transform);
    return out;
  }
}

BigSnfResult smith_normal_form_big(const BigMatrix& m) { return smith_normal_form_exact(m); }

}  // namespace homgraph
