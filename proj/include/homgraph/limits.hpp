#pragma once

#include <cstddef>
#include <cstdint>

namespace homgraph {

/// Size caps shared by every stage. All are overridable from the CLI.
struct Limits {
  std::uint64_t max_module_order = 4096;
  std::size_t max_lattice = 5000;
  std::size_t max_spectrum = 500;
  std::size_t max_transitivity_vertices = 64;
  std::uint64_t max_oracle_order = 64;
  std::uint64_t iso_search_budget = 2'000'000;
  std::uint64_t max_commutant_candidates = std::uint64_t{1} << 20;
  double tol = 1e-9;
};

}  // namespace homgraph
