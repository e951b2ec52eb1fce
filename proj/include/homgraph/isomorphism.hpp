#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "homgraph/graph.hpp"
#include "homgraph/limits.hpp"

namespace homgraph {

struct GraphIsoResult {
  bool isomorphic = false;
  /// mapping[v] is the image in the second graph of vertex v of the first.
  std::vector<std::size_t> mapping;
  /// Name of the first invariant that separated the graphs, empty when isomorphic.
  std::string distinguishing_invariant;
};

/// Exact isomorphism test. Cheap invariants first (t, edge count, degree
/// sequence, spectrum), complete graphs by vertex count, then colour
/// refinement guided backtracking. Throws SearchBudgetExceeded when the
/// search visits more than limits.iso_search_budget nodes.
GraphIsoResult are_isomorphic(const Graph& g1, const Graph& g2, const Limits& limits = {});

/// Whether Aut(g) is transitive on vertices. Throws CapExceeded above
/// limits.max_transitivity_vertices (complete graphs are answered directly).
bool is_vertex_transitive(const Graph& g, const Limits& limits = {});

/// Whether `mapping` is an isomorphism g1 -> g2.
bool is_isomorphism(const Graph& g1, const Graph& g2, const std::vector<std::size_t>& mapping);

}  // namespace homgraph
