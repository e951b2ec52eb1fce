#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "homgraph/lattice.hpp"
#include "homgraph/limits.hpp"
#include "homgraph/module.hpp"
#include "homgraph/snf.hpp"

namespace homgraph {

/// Hom_R(A, B) as a finite abelian group: ascending prime-power factors.
/// An empty list is the zero group.
struct HomStructure {
  std::vector<std::int64_t> invariant_factors;

  bool is_zero() const { return invariant_factors.empty(); }
  BigInt order() const;

  friend bool operator==(const HomStructure&, const HomStructure&) = default;
};

std::string format_hom(const HomStructure& h);

/// Cyclic decomposition of a submodule with the induced action matrices.
/// Throws InternalInconsistency if the induced data fails validation.
ModulePresentation present_submodule(const ModulePresentation& m, const Submodule& n);

/// Cyclic decomposition of M/N with the induced action matrices.
ModulePresentation present_quotient(const ModulePresentation& m, const Submodule& n);

/// Structural Hom computation. Homs (+)Z/d_i -> (+)Z/e_j are matrices with
/// h_ji in (e_j/gcd(d_i,e_j))Z/e_j; commuting with every action matrix adds
/// linear congruences; the solution group is read off with three Smith forms.
/// Throws InvalidInput on a ring mismatch.
HomStructure hom_structure(const ModulePresentation& a, const ModulePresentation& b);

/// Independent brute-force Hom: tries every image tuple for an R-generating
/// tuple of A, keeps the well-defined ones, and decomposes the resulting
/// group from its element-order counts. Throws CapExceeded if |A| exceeds
/// limits.max_oracle_order.
HomStructure hom_oracle(const ModulePresentation& a, const ModulePresentation& b, const Limits& limits = {});

/// Submodule and quotient presentations of every lattice node, computed once.
class VertexPresentations {
 public:
  explicit VertexPresentations(const SubmoduleLattice& l);

  const ModulePresentation& sub(std::size_t node) const { return subs_[node]; }
  const ModulePresentation& quotient(std::size_t node) const { return quotients_[node]; }

 private:
  std::vector<ModulePresentation> subs_;
  std::vector<ModulePresentation> quotients_;
};

/// Hom(N_i, M/N_j) != 0 or Hom(N_j, M/N_i) != 0, for distinct proper nodes.
bool adjacent(const SubmoduleLattice& l, std::size_t i, std::size_t j);
bool adjacent(const VertexPresentations& v, std::size_t i, std::size_t j);

}  // namespace homgraph
