#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "homgraph/limits.hpp"
#include "homgraph/matrix.hpp"
#include "homgraph/ring.hpp"

namespace homgraph {

/// Residue tuple; coords[j] in [0, d_j).
struct Element {
  std::vector<std::int64_t> coords;

  friend auto operator<=>(const Element&, const Element&) = default;
};

/// Mixed-radix index of an element; code order equals lexicographic order of coords.
using Code = std::uint32_t;

/// A finite module: the abelian group (+)_j Z/d_j together with one matrix per
/// ring action generator. Column j of an action matrix is the image of the
/// j-th basis vector; row i is read modulo d_i.
///
/// The constructor validates every axiom (orders, order compatibility,
/// commutation, ring relations, size cap) and throws InvalidInput or
/// CapExceeded.
class ModulePresentation {
 public:
  ModulePresentation(RingSpec ring, std::vector<std::int64_t> cyclic_orders, std::vector<IntMatrix> actions = {},
                     std::uint64_t max_order = Limits{}.max_module_order);

  const RingSpec& ring() const { return ring_; }
  const std::vector<std::int64_t>& cyclic_orders() const { return orders_; }
  const std::vector<IntMatrix>& actions() const { return actions_; }

  std::size_t rank() const { return orders_.size(); }
  std::uint64_t order() const { return order_; }

  Element zero() const { return Element{std::vector<std::int64_t>(rank(), 0)}; }
  bool is_valid(const Element& x) const;
  Element reduce(std::vector<std::int64_t> coords) const;

  Element add(const Element& a, const Element& b) const;
  Element negate(const Element& a) const;
  Element scale(std::int64_t s, const Element& a) const;
  /// Multiply by an action matrix (index into actions()).
  Element apply_matrix(std::size_t action, const Element& a) const;

  Code encode(const Element& x) const;
  Element decode(Code c) const;

  /// Action matrices composed with this module's row reduction.
  IntMatrix compose(const IntMatrix& a, const IntMatrix& b) const;

  friend bool operator==(const ModulePresentation&, const ModulePresentation&) = default;

 private:
  RingSpec ring_;
  std::vector<std::int64_t> orders_;
  std::vector<IntMatrix> actions_;
  std::vector<std::uint64_t> weights_;
  std::uint64_t order_ = 1;
};

/// Precomputed element arithmetic for one module (all |M| elements).
class ElementTable {
 public:
  explicit ElementTable(const ModulePresentation& m);

  std::size_t size() const { return size_; }
  const ModulePresentation& module() const { return module_; }

  Code add(Code a, Code b) const;
  Code negate(Code a) const { return neg_[a]; }
  /// Ring generator action, indexed as in RingSpec.
  Code act(std::size_t generator, Code a) const { return act_[generator][a]; }
  std::size_t generator_count() const { return act_.size(); }
  /// Additive order of an element.
  std::uint64_t additive_order(Code a) const;
  std::int64_t coord(Code a, std::size_t j) const { return coords_[a * rank_ + j]; }

 private:
  ModulePresentation module_;
  std::size_t size_;
  std::size_t rank_;
  std::vector<std::int64_t> coords_;
  std::vector<Code> neg_;
  std::vector<std::vector<Code>> act_;
};

/// Applies ring generator `generator` (RingSpec indexing) to x.
/// Throws InvalidInput for an out-of-range index or an invalid element.
Element module_action(const ModulePresentation& m, std::size_t generator, const Element& x);

/// Elements killed by every generator of the maximal ideal (all of M over F_p).
/// Sorted. Throws LocalityRequired over the product ring.
std::vector<Element> socle(const ModulePresentation& m);

struct AnnihilatorEntry {
  std::string monomial;
  bool kills = false;

  friend bool operator==(const AnnihilatorEntry&, const AnnihilatorEntry&) = default;
};

/// For each ring generator (by index) and each degree 1..d, whether g^d kills M.
/// zmod lists p, p^2, .., p^k; product_field e1, e2; local_square_zero x, x^2, y, y^2.
std::vector<AnnihilatorEntry> annihilator_profile(const ModulePresentation& m);

std::string format_profile(const std::vector<AnnihilatorEntry>& profile);

/// Sum of log_p d_j: every composition factor has order p for the supported rings.
std::size_t composition_length(const ModulePresentation& m);

/// Rank of an integer matrix over F_p (entries reduced mod p).
std::size_t rank_mod_p(const IntMatrix& a, std::int64_t p);

std::string format_element(const Element& x);

}  // namespace homgraph
