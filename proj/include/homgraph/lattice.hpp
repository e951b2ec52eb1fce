#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "homgraph/bitset.hpp"
#include "homgraph/limits.hpp"
#include "homgraph/module.hpp"

namespace homgraph {

/// A submodule of the parent presentation, stored as a bit set over element codes.
struct Submodule {
  DynamicBitset members;
  /// Sorted element codes: the canonical label.
  std::vector<Code> elements;
  /// Greedy R-module generating tuple (largest cyclic submodule first).
  std::vector<Code> generators;

  std::size_t order() const { return elements.size(); }
  bool contains(Code c) const { return members.test(c); }
};

/// Every submodule of a finite module, in canonical order: by order, then by
/// the lexicographic order of the sorted element list. Node 0 is the zero
/// submodule and the last node is M.
class SubmoduleLattice {
 public:
  SubmoduleLattice(ModulePresentation parent, std::vector<Submodule> nodes);

  const ModulePresentation& parent() const { return parent_; }
  const ElementTable& table() const { return *table_; }
  const std::vector<Submodule>& nodes() const { return nodes_; }
  const Submodule& node(std::size_t i) const { return nodes_[i]; }
  std::size_t size() const { return nodes_.size(); }

  std::size_t bottom() const { return 0; }
  std::size_t top() const { return nodes_.size() - 1; }

  /// nodes[i] is contained in nodes[j].
  bool leq(std::size_t i, std::size_t j) const { return leq_[i].test(j); }

  /// Indices of the proper submodules (all nodes except M), in node order.
  const std::vector<std::size_t>& proper_indices() const { return proper_; }

  /// Index of the node with exactly this element set, or size() if absent.
  std::size_t find(const DynamicBitset& members) const;

  /// "<g1,g2,...>" using the node's generating tuple, "<0>" for the zero submodule.
  std::string label(std::size_t i) const;

 private:
  ModulePresentation parent_;
  std::shared_ptr<const ElementTable> table_;
  std::vector<Submodule> nodes_;
  std::vector<DynamicBitset> leq_;
  std::vector<std::size_t> proper_;
};

/// Seeds with every cyclic submodule R*x and closes under sums until fixpoint.
/// Throws CapExceeded when |M| or the node count exceeds the limits.
SubmoduleLattice enumerate_submodules(const ModulePresentation& m, const Limits& limits = {});

/// Submodule generated by a set of elements (closure under +, and ring action).
DynamicBitset generated_submodule(const ElementTable& table, const std::vector<Code>& generators);

std::vector<std::size_t> maximal_submodules(const SubmoduleLattice& l);
std::vector<std::size_t> minimal_nonzero_submodules(const SubmoduleLattice& l);

bool is_uniserial(const SubmoduleLattice& l);

/// Number of covering steps in a longest chain from 0 to M.
std::size_t longest_chain(const SubmoduleLattice& l);

struct SocleNode {
  std::size_t index = 0;
  /// Socle equals M (semisimple); it is then not a proper vertex.
  bool is_whole_module = false;
  /// Socle is contained in every maximal submodule. Reported, not enforced:
  /// it fails for modules such as Z/4 + Z/2.
  bool inside_every_maximal = true;
};

/// Locates the socle among the nodes. Throws LocalityRequired for the product ring.
SocleNode socle_node(const SubmoduleLattice& l);

/// Socle equals M (local rings), or any module over the product of fields.
bool is_semisimple(const SubmoduleLattice& l);

}  // namespace homgraph
