#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace homgraph {

enum class RingKind {
  zmod,               // Z/p^k
  prime_field,        // F_p
  product_field,      // F_p x F_p
  local_square_zero,  // F_p[x,y]/(x,y)^2
};

/// One of the four supported finite commutative rings.
///
/// Ring generators are indexed uniformly for module_action():
///   zmod: 0 -> multiplication by p
///   prime_field: none
///   product_field: 0 -> e1, 1 -> e2 (idempotent selectors)
///   local_square_zero: 0 -> x, 1 -> y
/// Only product_field and local_square_zero carry action matrices.
struct RingSpec {
  RingKind kind = RingKind::prime_field;
  std::int64_t p = 2;
  int k = 1;

  static RingSpec zmod(std::int64_t p, int k) { return {RingKind::zmod, p, k}; }
  static RingSpec prime_field(std::int64_t p) { return {RingKind::prime_field, p, 1}; }
  static RingSpec product_field(std::int64_t p) { return {RingKind::product_field, p, 1}; }
  static RingSpec local_square_zero(std::int64_t p) { return {RingKind::local_square_zero, p, 1}; }

  /// Throws InvalidInput when p is not prime or k < 1.
  void validate() const;

  bool is_local() const { return kind != RingKind::product_field; }

  std::size_t generator_count() const;
  std::size_t action_count() const;
  std::string generator_name(std::size_t index) const;

  /// Generators of the maximal ideal, as generator indices. Throws
  /// LocalityRequired for the product ring.
  std::vector<std::size_t> radical_generators() const;

  /// p^k for zmod, p otherwise. Annihilates every module over the ring.
  std::int64_t exponent() const;

  std::string name() const;

  friend bool operator==(const RingSpec&, const RingSpec&) = default;
};

bool is_prime(std::int64_t n);

/// p^e with overflow check.
std::int64_t ipow(std::int64_t p, int e);

/// e with p^e == n, or -1 when n is not a power of p.
int ilog(std::int64_t p, std::int64_t n);

std::string to_string(RingKind kind);

}  // namespace homgraph
