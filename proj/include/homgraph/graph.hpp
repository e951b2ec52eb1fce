#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "homgraph/bitset.hpp"
#include "homgraph/lattice.hpp"
#include "homgraph/limits.hpp"

namespace homgraph {

/// Simple undirected loopless graph with per-vertex submodule labels.
class Graph {
 public:
  struct VertexLabel {
    std::string label;
    std::uint64_t order = 0;
  };

  explicit Graph(std::size_t n = 0);

  static Graph complete(std::size_t n);
  static Graph path(std::size_t n);
  static Graph cycle(std::size_t n);
  /// K_{1,leaves}; vertex 0 is the center.
  static Graph star(std::size_t leaves);

  std::size_t vertex_count() const { return adj_.size(); }
  std::size_t edge_count() const;

  /// Ignores i == j.
  void add_edge(std::size_t i, std::size_t j);
  bool adjacent(std::size_t i, std::size_t j) const { return adj_[i].test(j); }
  std::size_t degree(std::size_t i) const { return adj_[i].count(); }
  const DynamicBitset& neighbors(std::size_t i) const { return adj_[i]; }

  /// All edges (i, j) with i < j in lexicographic order.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  const std::vector<VertexLabel>& labels() const { return labels_; }
  void set_label(std::size_t i, std::string label, std::uint64_t order);

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  std::vector<DynamicBitset> adj_;
  std::vector<VertexLabel> labels_;
};

/// The homomorphism submodule graph: one vertex per proper submodule in
/// lattice order (vertex 0 is the zero submodule), edges by adjacent().
/// Pairs are evaluated in parallel; the result does not depend on scheduling.
Graph build_graph(const SubmoduleLattice& l, const Limits& limits = {});

bool is_complete(const Graph& g);
bool is_connected(const Graph& g);
/// Largest eccentricity by BFS from every vertex; nullopt when disconnected.
std::optional<std::size_t> diameter(const Graph& g);
/// Connected with t - 1 edges.
bool is_tree(const Graph& g);
bool is_regular(const Graph& g);
/// Non-increasing.
std::vector<std::size_t> degree_sequence(const Graph& g);
std::vector<std::size_t> universal_vertices(const Graph& g);

struct ChordalityResult {
  bool chordal = true;
  /// Perfect elimination ordering when chordal.
  std::vector<std::size_t> elimination_order;
  /// Induced cycle of length >= 4 when not chordal.
  std::vector<std::size_t> hole;
};

/// Lexicographic breadth-first search visit order.
std::vector<std::size_t> lex_bfs_order(const Graph& g);
bool is_perfect_elimination_order(const Graph& g, const std::vector<std::size_t>& order);
/// LexBFS + elimination check; on failure searches for a chordless cycle.
ChordalityResult is_chordal(const Graph& g);
/// True when every listed consecutive pair is adjacent, the cycle closes and no chord exists.
bool is_induced_cycle(const Graph& g, const std::vector<std::size_t>& cycle);

enum class ExportFormat { dot, json };
ExportFormat parse_export_format(std::string_view name);

/// DOT: `graph G { i -- j; ... }` with submodule labels.
/// JSON: {"vertices":[{"id","label","order"}],"edges":[[i,j]],"properties":{...}}.
std::string export_graph(const Graph& g, ExportFormat format, const Limits& limits = {});

}  // namespace homgraph
