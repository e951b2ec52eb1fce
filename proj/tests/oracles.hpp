#pragma once

// Test-only reference implementations. None of these share code paths with
// the library algorithms they check.

#include <Eigen/Dense>
#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "homgraph/graph.hpp"
#include "homgraph/module.hpp"

namespace oracle {

using homgraph::Code;
using homgraph::Element;
using homgraph::ModulePresentation;

inline std::vector<Element> all_elements(const ModulePresentation& m) {
  std::vector<Element> out;
  for (Code c = 0; c < m.order(); ++c) out.push_back(m.decode(c));
  return out;
}

inline std::size_t generator_count(const ModulePresentation& m) { return m.ring().generator_count(); }

/// Every subset of M that is a subgroup closed under the ring generators.
/// Exponential: only for |M| <= 16.
inline std::set<std::vector<Code>> powerset_submodules(const ModulePresentation& m) {
  const auto elems = all_elements(m);
  const std::size_t n = elems.size();
  std::set<std::vector<Code>> out;
  for (std::uint32_t mask = 1; mask < (1u << n); mask += 2) {  // must contain 0 (code 0)
    auto in = [&](Code c) { return (mask >> c) & 1u; };
    bool ok = true;
    for (Code a = 0; a < n && ok; ++a) {
      if (!in(a)) continue;
      for (Code b = 0; b < n && ok; ++b)
        if (in(b)) ok = in(m.encode(m.add(elems[a], elems[b])));
      for (std::size_t g = 0; g < generator_count(m) && ok; ++g) ok = in(m.encode(homgraph::module_action(m, g, elems[a])));
    }
    if (!ok) continue;
    std::vector<Code> s;
    for (Code c = 0; c < n; ++c)
      if (in(c)) s.push_back(c);
    out.insert(s);
  }
  return out;
}

/// Submodules by repeated one-element growth from 0, closing naively each time.
inline std::set<std::vector<Code>> grown_submodules(const ModulePresentation& m) {
  const auto elems = all_elements(m);
  auto close = [&](std::vector<bool> s) {
    bool changed = true;
    while (changed) {
      changed = false;
      std::vector<Code> cur;
      for (Code c = 0; c < s.size(); ++c)
        if (s[c]) cur.push_back(c);
      for (auto a : cur) {
        for (auto b : cur) {
          const auto c = m.encode(m.add(elems[a], elems[b]));
          if (!s[c]) s[c] = changed = true;
        }
        for (std::size_t g = 0; g < generator_count(m); ++g) {
          const auto c = m.encode(homgraph::module_action(m, g, elems[a]));
          if (!s[c]) s[c] = changed = true;
        }
      }
    }
    return s;
  };
  std::vector<bool> zero(elems.size(), false);
  zero[0] = true;
  std::set<std::vector<bool>> seen{zero};
  std::vector<std::vector<bool>> frontier{zero};
  while (!frontier.empty()) {
    auto s = frontier.back();
    frontier.pop_back();
    for (Code x = 0; x < elems.size(); ++x) {
      if (s[x]) continue;
      auto t = s;
      t[x] = true;
      t = close(t);
      if (seen.insert(t).second) frontier.push_back(t);
    }
  }
  std::set<std::vector<Code>> out;
  for (const auto& s : seen) {
    std::vector<Code> v;
    for (Code c = 0; c < s.size(); ++c)
      if (s[c]) v.push_back(c);
    out.insert(v);
  }
  return out;
}

/// Eigenvalues of the adjacency matrix via Eigen, non-increasing.
inline std::vector<double> eigen_spectrum(const homgraph::Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.vertex_count());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (auto [i, j] : g.edges()) a(i, j) = a(j, i) = 1.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
  std::vector<double> out(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  std::sort(out.rbegin(), out.rend());
  return out;
}

/// Chordal iff simplicial vertices can be deleted one at a time until empty.
inline bool chordal_by_simplicial_deletion(const homgraph::Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> alive(n, true);
  for (std::size_t round = 0; round < n; ++round) {
    bool removed = false;
    for (std::size_t v = 0; v < n && !removed; ++v) {
      if (!alive[v]) continue;
      std::vector<std::size_t> nb;
      for (std::size_t u = 0; u < n; ++u)
        if (alive[u] && g.adjacent(u, v)) nb.push_back(u);
      bool clique = true;
      for (std::size_t i = 0; i < nb.size() && clique; ++i)
        for (std::size_t j = i + 1; j < nb.size() && clique; ++j) clique = g.adjacent(nb[i], nb[j]);
      if (clique) {
        alive[v] = false;
        removed = true;
      }
    }
    if (!removed) return false;
  }
  return true;
}

/// Graph isomorphism by trying every permutation (n <= 8).
inline bool isomorphic_by_permutations(const homgraph::Graph& a, const homgraph::Graph& b) {
  const std::size_t n = a.vertex_count();
  if (n != b.vertex_count()) return false;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = i + 1; j < n && ok; ++j) ok = a.adjacent(i, j) == b.adjacent(perm[i], perm[j]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

/// Vertex-transitivity by trying every permutation (n <= 8).
inline bool transitive_by_permutations(const homgraph::Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> reached(n, false);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = i + 1; j < n && ok; ++j) ok = g.adjacent(i, j) == g.adjacent(perm[i], perm[j]);
    if (ok) reached[perm[0]] = true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::all_of(reached.begin(), reached.end(), [](bool r) { return r; });
}

}  // namespace oracle
