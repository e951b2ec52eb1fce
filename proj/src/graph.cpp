#include "homgraph/graph.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <exception>
#include <sstream>
#include <thread>

#include "homgraph/errors.hpp"
#include "homgraph/hom.hpp"
#include "homgraph/spectrum.hpp"
#include "json.hpp"

namespace homgraph {

Graph::Graph(std::size_t n) : adj_(n, DynamicBitset(n)), labels_(n) {
  for (std::size_t i = 0; i < n; ++i) labels_[i].label = std::to_string(i);
}

Graph Graph::complete(std::size_t n) {
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph Graph::path(std::size_t n) {
  Graph g(n);
  for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph Graph::cycle(std::size_t n) {
  Graph g = path(n);
  if (n >= 3) g.add_edge(n - 1, 0);
  return g;
}

Graph Graph::star(std::size_t leaves) {
  Graph g(leaves + 1);
  for (std::size_t i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& row : adj_) twice += row.count();
  return twice / 2;
}

void Graph::add_edge(std::size_t i, std::size_t j) {
  if (i == j) return;
  adj_[i].set(j);
  adj_[j].set(i);
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < adj_.size(); ++i)
    adj_[i].for_each([&](std::size_t j) {
      if (i < j) out.emplace_back(i, j);
    });
  return out;
}

void Graph::set_label(std::size_t i, std::string label, std::uint64_t order) {
  labels_[i] = {std::move(label), order};
}

Graph build_graph(const SubmoduleLattice& l, const Limits& limits) {
  const auto& proper = l.proper_indices();
  const std::size_t t = proper.size();
  if (t > limits.max_lattice) throw CapExceeded("graph has more than " + std::to_string(limits.max_lattice) + " vertices");
  const VertexPresentations presentations(l);

  std::vector<std::vector<char>> rows(t);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    try {
      for (std::size_t i = next++; i < t && !failed; i = next++) {
        rows[i].assign(t, 0);
        for (std::size_t j = i + 1; j < t; ++j) rows[i][j] = adjacent(presentations, proper[i], proper[j]) ? 1 : 0;
      }
    } catch (...) {
      if (!failed.exchange(true)) failure = std::current_exception();
    }
  };
  const std::size_t threads = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, 16);
  if (t < 16 || threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t k = 0; k < threads; ++k) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  Graph g(t);
  for (std::size_t i = 0; i < t; ++i) {
    g.set_label(i, l.label(proper[i]), l.node(proper[i]).order());
    for (std::size_t j = i + 1; j < t; ++j)
      if (rows[i][j]) g.add_edge(i, j);
  }
  return g;
}

bool is_complete(const Graph& g) {
  const std::size_t t = g.vertex_count();
  for (std::size_t i = 0; i < t; ++i)
    if (g.degree(i) != t - 1) return false;
  return true;
}

namespace {

std::vector<std::size_t> bfs_distances(const Graph& g, std::size_t source) {
  constexpr auto unreached = static_cast<std::size_t>(-1);
  std::vector<std::size_t> dist(g.vertex_count(), unreached);
  std::deque<std::size_t> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const auto v = queue.front();
    queue.pop_front();
    g.neighbors(v).for_each([&](std::size_t w) {
      if (dist[w] == unreached) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    });
  }
  return dist;
}

}  // namespace

bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  const auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](std::size_t d) { return d == static_cast<std::size_t>(-1); });
}

std::optional<std::size_t> diameter(const Graph& g) {
  std::size_t best = 0;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    for (auto d : bfs_distances(g, v)) {
      if (d == static_cast<std::size_t>(-1)) return std::nullopt;
      best = std::max(best, d);
    }
  return best;
}

bool is_tree(const Graph& g) {
  return g.vertex_count() > 0 && is_connected(g) && g.edge_count() == g.vertex_count() - 1;
}

bool is_regular(const Graph& g) {
  for (std::size_t i = 1; i < g.vertex_count(); ++i)
    if (g.degree(i) != g.degree(0)) return false;
  return true;
}

std::vector<std::size_t> degree_sequence(const Graph& g) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < g.vertex_count(); ++i) out.push_back(g.degree(i));
  std::sort(out.rbegin(), out.rend());
  return out;
}

std::vector<std::size_t> universal_vertices(const Graph& g) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < g.vertex_count(); ++i)
    if (g.degree(i) + 1 == g.vertex_count()) out.push_back(i);
  return out;
}

std::vector<std::size_t> lex_bfs_order(const Graph& g) {
  // Partition refinement: classes ordered by decreasing label.
  std::vector<std::vector<std::size_t>> classes;
  if (g.vertex_count()) {
    classes.emplace_back();
    for (std::size_t v = 0; v < g.vertex_count(); ++v) classes.back().push_back(v);
  }
  std::vector<std::size_t> order;
  while (!classes.empty()) {
    const std::size_t v = classes.front().front();
    classes.front().erase(classes.front().begin());
    order.push_back(v);
    std::vector<std::vector<std::size_t>> refined;
    for (auto& cls : classes) {
      std::vector<std::size_t> in, out;
      for (auto w : cls) (g.adjacent(v, w) ? in : out).push_back(w);
      if (!in.empty()) refined.push_back(std::move(in));
      if (!out.empty()) refined.push_back(std::move(out));
    }
    classes = std::move(refined);
  }
  return order;
}

bool is_perfect_elimination_order(const Graph& g, const std::vector<std::size_t>& order) {
  const std::size_t n = g.vertex_count();
  if (order.size() != n) return false;
  std::vector<std::size_t> position(n);
  for (std::size_t i = 0; i < n; ++i) position[order[i]] = i;
  for (std::size_t i = 0; i < n; ++i) {
    const auto v = order[i];
    std::vector<std::size_t> later;
    g.neighbors(v).for_each([&](std::size_t w) {
      if (position[w] > i) later.push_back(w);
    });
    if (later.empty()) continue;
    const auto parent = *std::min_element(later.begin(), later.end(),
                                          [&](std::size_t a, std::size_t b) { return position[a] < position[b]; });
    for (auto w : later)
      if (w != parent && !g.adjacent(parent, w)) return false;
  }
  return true;
}

namespace {

// For v with non-adjacent neighbours a, b: a shortest a-b path avoiding the
// rest of N[v] closes a chordless cycle through v.
std::vector<std::size_t> find_hole(const Graph& g) {
  const std::size_t n = g.vertex_count();
  for (std::size_t v = 0; v < n; ++v) {
    const auto nbrs = g.neighbors(v).indices();
    for (std::size_t x = 0; x < nbrs.size(); ++x)
      for (std::size_t y = x + 1; y < nbrs.size(); ++y) {
        const auto a = nbrs[x], b = nbrs[y];
        if (g.adjacent(a, b)) continue;
        std::vector<char> blocked(n, 0);
        blocked[v] = 1;
        for (auto w : nbrs)
          if (w != a && w != b) blocked[w] = 1;
        constexpr auto none = static_cast<std::size_t>(-1);
        std::vector<std::size_t> parent(n, none);
        std::deque<std::size_t> queue{a};
        parent[a] = a;
        while (!queue.empty() && parent[b] == none) {
          const auto u = queue.front();
          queue.pop_front();
          g.neighbors(u).for_each([&](std::size_t w) {
            if (!blocked[w] && parent[w] == none) {
              parent[w] = u;
              queue.push_back(w);
            }
          });
        }
        if (parent[b] == none) continue;
        std::vector<std::size_t> cycle{v};
        std::vector<std::size_t> path;
        for (auto u = b; u != a; u = parent[u]) path.push_back(u);
        path.push_back(a);
        cycle.insert(cycle.end(), path.rbegin(), path.rend());
        return cycle;
      }
  }
  return {};
}

}  // namespace

ChordalityResult is_chordal(const Graph& g) {
  ChordalityResult out;
  auto order = lex_bfs_order(g);
  std::reverse(order.begin(), order.end());
  if (is_perfect_elimination_order(g, order)) {
    out.elimination_order = std::move(order);
    return out;
  }
  out.chordal = false;
  out.hole = find_hole(g);
  if (out.hole.size() < 4) throw InternalInconsistency("elimination check failed but no hole was found");
  return out;
}

bool is_induced_cycle(const Graph& g, const std::vector<std::size_t>& cycle) {
  const std::size_t k = cycle.size();
  if (k < 3) return false;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      const bool consecutive = j == i + 1 || (i == 0 && j == k - 1);
      if (cycle[i] == cycle[j] || g.adjacent(cycle[i], cycle[j]) != consecutive) return false;
    }
  return true;
}

ExportFormat parse_export_format(std::string_view name) {
  if (name == "dot") return ExportFormat::dot;
  if (name == "json") return ExportFormat::json;
  throw InvalidInput("unknown graph format '" + std::string(name) + "' (expected dot or json)");
}

namespace {

std::string escape_dot(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string export_graph(const Graph& g, ExportFormat format, const Limits& limits) {
  if (format == ExportFormat::dot) {
    std::ostringstream os;
    os << "graph G {\n";
    for (std::size_t i = 0; i < g.vertex_count(); ++i)
      os << "  " << i << " [label=\"" << escape_dot(g.labels()[i].label) << "\"];\n";
    for (auto [i, j] : g.edges()) os << "  " << i << " -- " << j << ";\n";
    os << "}\n";
    return os.str();
  }

  nlohmann::ordered_json doc;
  doc["vertices"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < g.vertex_count(); ++i)
    doc["vertices"].push_back({{"id", i}, {"label", g.labels()[i].label}, {"order", g.labels()[i].order}});
  doc["edges"] = nlohmann::ordered_json::array();
  for (auto [i, j] : g.edges()) doc["edges"].push_back({i, j});
  nlohmann::ordered_json props;
  props["vertex_count"] = g.vertex_count();
  props["edge_count"] = g.edge_count();
  props["complete"] = is_complete(g);
  props["connected"] = is_connected(g);
  const auto diam = diameter(g);
  props["diameter"] = diam ? nlohmann::ordered_json(*diam) : nlohmann::ordered_json(nullptr);
  props["chordal"] = is_chordal(g).chordal;
  props["tree"] = is_tree(g);
  props["regular"] = is_regular(g);
  props["universal_vertices"] = universal_vertices(g);
  props["degree_sequence"] = degree_sequence(g);
  props["lambda_max"] = spectrum(g, limits).lambda_max;
  doc["properties"] = std::move(props);
  return doc.dump() + "\n";
}

}  // namespace homgraph
