#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "homgraph/limits.hpp"
#include "homgraph/module.hpp"
#include "homgraph/ring.hpp"

namespace homgraph {

struct ZooMember {
  std::string spec;
  ModulePresentation module;
};

/// Pairwise non-isomorphic modules over one ring, up to a size bound.
struct ModuleZoo {
  RingSpec ring;
  std::vector<ZooMember> members;
  std::size_t bound = 0;
};

/// zmod: every multiset of exponents <= k with sum <= bound (sum ascending,
/// larger parts first). field: dimensions 1..bound. prod: multiplicity pairs
/// with sum in 1..bound. kxy: the presets of dimension <= bound, then for
/// p = 2 every (X, Y) pair of dimension <= min(bound, 3) not isomorphic to an
/// earlier member. Throws CapExceeded when a member exceeds the module cap.
ModuleZoo enumerate_zoo(const RingSpec& ring, std::size_t bound, const Limits& limits = {});

struct ModuleIsoResult {
  bool isomorphic = false;
  /// Isomorphism: the intertwining matrix or matching invariant.
  /// Non-isomorphism: the separating invariant, or the exhausted search.
  std::string certificate;
};

/// zmod: cyclic order multisets. field: dimension. prod: multiplicities.
/// kxy: annihilator profile and rank filters, then a search for an invertible
/// P with P X_a = X_b P and P Y_a = Y_b P inside the solution space of those
/// linear equations. Throws InvalidInput on a ring mismatch and CapExceeded
/// when the solution space exceeds limits.max_commutant_candidates.
ModuleIsoResult module_isomorphism(const ModulePresentation& a, const ModulePresentation& b, const Limits& limits = {});

bool module_isomorphic(const ModulePresentation& a, const ModulePresentation& b, const Limits& limits = {});

/// Basis of the right null space of a matrix over F_p.
std::vector<std::vector<std::int64_t>> nullspace_mod_p(const IntMatrix& a, std::int64_t p);

}  // namespace homgraph
