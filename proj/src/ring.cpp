#include "homgraph/ring.hpp"

#include <limits>

#include "homgraph/errors.hpp"

namespace homgraph {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::int64_t ipow(std::int64_t p, int e) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) {
    if (__builtin_mul_overflow(r, p, &r)) throw InvalidInput("power p^e overflows 64 bits");
  }
  return r;
}

int ilog(std::int64_t p, std::int64_t n) {
  if (n < 1 || p < 2) return -1;
  int e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  return n == 1 ? e : -1;
}

std::string to_string(RingKind kind) {
  switch (kind) {
    case RingKind::zmod: return "zmod";
    case RingKind::prime_field: return "field";
    case RingKind::product_field: return "prod";
    case RingKind::local_square_zero: return "kxy";
  }
  return "?";
}

void RingSpec::validate() const {
  if (!is_prime(p)) throw InvalidInput("p=" + std::to_string(p) + " is not prime");
  if (k < 1) throw InvalidInput("k must be at least 1");
  if (kind != RingKind::zmod && k != 1) throw InvalidInput("k is only meaningful for zmod");
  (void)ipow(p, k);
}

std::size_t RingSpec::generator_count() const {
  switch (kind) {
    case RingKind::zmod: return 1;
    case RingKind::prime_field: return 0;
    case RingKind::product_field:
    case RingKind::local_square_zero: return 2;
  }
  return 0;
}

std::size_t RingSpec::action_count() const {
  return kind == RingKind::product_field || kind == RingKind::local_square_zero ? 2 : 0;
}

std::string RingSpec::generator_name(std::size_t index) const {
  if (index >= generator_count()) throw InvalidInput("ring generator index out of range");
  switch (kind) {
    case RingKind::zmod: return "p";
    case RingKind::product_field: return index == 0 ? "e1" : "e2";
    case RingKind::local_square_zero: return index == 0 ? "x" : "y";
    case RingKind::prime_field: break;
  }
  return "?";
}

std::vector<std::size_t> RingSpec::radical_generators() const {
  switch (kind) {
    case RingKind::zmod: return {0};
    case RingKind::prime_field: return {};
    case RingKind::local_square_zero: return {0, 1};
    case RingKind::product_field: break;
  }
  throw LocalityRequired("F_" + std::to_string(p) + " x F_" + std::to_string(p) + " is not local");
}

std::int64_t RingSpec::exponent() const { return kind == RingKind::zmod ? ipow(p, k) : p; }

std::string RingSpec::name() const {
  const std::string ps = std::to_string(p);
  switch (kind) {
    case RingKind::zmod: return "Z/" + std::to_string(ipow(p, k));
    case RingKind::prime_field: return "F_" + ps;
    case RingKind::product_field: return "F_" + ps + " x F_" + ps;
    case RingKind::local_square_zero: return "F_" + ps + "[x,y]/(x,y)^2";
  }
  return "?";
}

}  // namespace homgraph
