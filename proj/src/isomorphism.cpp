#include "homgraph/isomorphism.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "homgraph/errors.hpp"
#include "homgraph/spectrum.hpp"

namespace homgraph {
namespace {

using Colours = std::vector<std::size_t>;

// 1-WL on the disjoint union so colour names are comparable across graphs.
void refine(const Graph& g1, const Graph& g2, Colours& c1, Colours& c2) {
  const std::size_t n1 = g1.vertex_count();
  const std::size_t n2 = g2.vertex_count();
  auto classes = [](const Colours& a, const Colours& b) {
    std::vector<std::size_t> all(a);
    all.insert(all.end(), b.begin(), b.end());
    std::sort(all.begin(), all.end());
    return static_cast<std::size_t>(std::unique(all.begin(), all.end()) - all.begin());
  };
  std::size_t count = classes(c1, c2);
  for (;;) {
    using Signature = std::pair<std::size_t, std::vector<std::size_t>>;
    auto signature = [](const Graph& g, const Colours& c, std::size_t v) {
      Signature s{c[v], {}};
      g.neighbors(v).for_each([&](std::size_t u) { s.second.push_back(c[u]); });
      std::sort(s.second.begin(), s.second.end());
      return s;
    };
    std::vector<Signature> s1(n1), s2(n2);
    for (std::size_t v = 0; v < n1; ++v) s1[v] = signature(g1, c1, v);
    for (std::size_t v = 0; v < n2; ++v) s2[v] = signature(g2, c2, v);
    std::map<Signature, std::size_t> names;
    for (const auto& s : s1) names.emplace(s, 0);
    for (const auto& s : s2) names.emplace(s, 0);
    std::size_t next = 0;
    for (auto& [s, name] : names) name = next++;
    for (std::size_t v = 0; v < n1; ++v) c1[v] = names[s1[v]];
    for (std::size_t v = 0; v < n2; ++v) c2[v] = names[s2[v]];
    if (next == count) return;
    count = next;
  }
}

bool same_histogram(Colours a, Colours b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

class Matcher {
 public:
  Matcher(const Graph& g1, const Graph& g2, Colours c1, Colours c2, std::size_t budget)
      : g1_(g1), g2_(g2), c1_(std::move(c1)), c2_(std::move(c2)), budget_(budget) {
    const std::size_t n = g1.vertex_count();
    std::vector<std::size_t> class_size(n + n2_count(), 0);
    for (auto c : c1_) ++class_size[c];
    order_.resize(n);
    std::iota(order_.begin(), order_.end(), 0);
    // Small colour classes first, then follow adjacency to keep constraints tight.
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
      return class_size[c1_[a]] < class_size[c1_[b]];
    });
    image_.assign(n, kUnset);
    used_.assign(g2.vertex_count(), false);
  }

  bool run() { return extend(0); }
  const std::vector<std::size_t>& mapping() const { return image_; }

 private:
  static constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

  std::size_t n2_count() const { return g2_.vertex_count(); }

  bool extend(std::size_t depth) {
    if (++visited_ > budget_)
      throw SearchBudgetExceeded("isomorphism search exceeded " + std::to_string(budget_) + " nodes");
    if (depth == order_.size()) return true;
    const std::size_t v = order_[depth];
    for (std::size_t w = 0; w < g2_.vertex_count(); ++w) {
      if (used_[w] || c2_[w] != c1_[v]) continue;
      bool ok = true;
      for (std::size_t d = 0; d < depth && ok; ++d) {
        const std::size_t u = order_[d];
        ok = g1_.adjacent(u, v) == g2_.adjacent(image_[u], w);
      }
      if (!ok) continue;
      image_[v] = w;
      used_[w] = true;
      if (extend(depth + 1)) return true;
      used_[w] = false;
      image_[v] = kUnset;
    }
    return false;
  }

  const Graph& g1_;
  const Graph& g2_;
  Colours c1_, c2_;
  std::size_t budget_;
  std::size_t visited_ = 0;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> image_;
  std::vector<bool> used_;
};

// Refine from the given initial colours, then search.
GraphIsoResult match(const Graph& g1, const Graph& g2, Colours c1, Colours c2, std::size_t budget) {
  GraphIsoResult r;
  refine(g1, g2, c1, c2);
  if (!same_histogram(c1, c2)) {
    r.distinguishing_invariant = "colour refinement";
    return r;
  }
  Matcher m(g1, g2, std::move(c1), std::move(c2), budget);
  if (m.run()) {
    r.isomorphic = true;
    r.mapping = m.mapping();
  } else {
    r.distinguishing_invariant = "exhaustive search";
  }
  return r;
}

}  // namespace

bool is_isomorphism(const Graph& g1, const Graph& g2, const std::vector<std::size_t>& mapping) {
  const std::size_t n = g1.vertex_count();
  if (n != g2.vertex_count() || mapping.size() != n) return false;
  std::vector<bool> hit(n, false);
  for (auto w : mapping) {
    if (w >= n || hit[w]) return false;
    hit[w] = true;
  }
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (g1.adjacent(u, v) != g2.adjacent(mapping[u], mapping[v])) return false;
  return true;
}

GraphIsoResult are_isomorphic(const Graph& g1, const Graph& g2, const Limits& limits) {
  GraphIsoResult r;
  const std::size_t n = g1.vertex_count();
  if (n != g2.vertex_count()) {
    r.distinguishing_invariant = "vertex count";
    return r;
  }
  if (g1.edge_count() != g2.edge_count()) {
    r.distinguishing_invariant = "edge count";
    return r;
  }
  if (degree_sequence(g1) != degree_sequence(g2)) {
    r.distinguishing_invariant = "degree sequence";
    return r;
  }
  if (is_complete(g1) && is_complete(g2)) {
    r.isomorphic = true;
    r.mapping.resize(n);
    std::iota(r.mapping.begin(), r.mapping.end(), 0);
    return r;
  }
  if (n <= limits.max_spectrum) {
    const auto s1 = spectrum(g1, limits).eigenvalues;
    const auto s2 = spectrum(g2, limits).eigenvalues;
    for (std::size_t i = 0; i < s1.size(); ++i)
      if (std::abs(s1[i] - s2[i]) > limits.tol * std::max(1.0, std::abs(s1[i]))) {
        r.distinguishing_invariant = "spectrum";
        return r;
      }
  }
  return match(g1, g2, Colours(n, 0), Colours(n, 0), limits.iso_search_budget);
}

bool is_vertex_transitive(const Graph& g, const Limits& limits) {
  const std::size_t n = g.vertex_count();
  if (n <= 1 || is_complete(g)) return true;
  if (n > limits.max_transitivity_vertices)
    throw CapExceeded("vertex-transitivity search limited to " + std::to_string(limits.max_transitivity_vertices) +
                      " vertices, graph has " + std::to_string(n));
  if (!is_regular(g)) return false;
  for (std::size_t v = 1; v < n; ++v) {
    Colours c1(n, 0), c2(n, 0);
    c1[0] = 1;
    c2[v] = 1;
    if (!match(g, g, std::move(c1), std::move(c2), limits.iso_search_budget).isomorphic) return false;
  }
  return true;
}

}  // namespace homgraph
