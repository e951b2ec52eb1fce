#include "homgraph/lattice.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "homgraph/errors.hpp"

namespace homgraph {
namespace {

// Grows an R-closed subgroup by new generators; the result stays R-closed.
class Closure {
 public:
  explicit Closure(const ElementTable& table) : table_(table), set_(table.size()), members_{0} { set_.set(0); }
  Closure(const ElementTable& table, const DynamicBitset& start) : table_(table), set_(start), members_() {
    for (auto i : start.indices()) members_.push_back(static_cast<Code>(i));
  }

  void add(Code generator) {
    std::deque<Code> queue{generator};
    while (!queue.empty()) {
      const Code v = queue.front();
      queue.pop_front();
      if (set_.test(v)) continue;
      const std::size_t base = members_.size();
      Code multiple = v;
      while (!set_.test(multiple)) {
        for (std::size_t i = 0; i < base; ++i) {
          const Code s = table_.add(members_[i], multiple);
          set_.set(s);
          members_.push_back(s);
        }
        multiple = table_.add(multiple, v);
      }
      for (std::size_t g = 0; g < table_.generator_count(); ++g) queue.push_back(table_.act(g, v));
    }
  }

  const DynamicBitset& set() const { return set_; }

 private:
  const ElementTable& table_;
  DynamicBitset set_;
  std::vector<Code> members_;
};

std::vector<Code> greedy_generators(const ElementTable& table, const DynamicBitset& target,
                                    const std::vector<std::size_t>& cyclic_size) {
  std::vector<Code> candidates;
  target.for_each([&](std::size_t c) {
    if (c != 0) candidates.push_back(static_cast<Code>(c));
  });
  std::stable_sort(candidates.begin(), candidates.end(),
                   [&](Code a, Code b) { return cyclic_size[a] > cyclic_size[b]; });
  Closure span(table);
  std::vector<Code> gens;
  for (Code x : candidates) {
    if (span.set() == target) break;
    if (span.set().test(x)) continue;
    span.add(x);
    gens.push_back(x);
  }
  return gens;
}

}  // namespace

DynamicBitset generated_submodule(const ElementTable& table, const std::vector<Code>& generators) {
  Closure c(table);
  for (auto g : generators) c.add(g);
  return c.set();
}

SubmoduleLattice::SubmoduleLattice(ModulePresentation parent, std::vector<Submodule> nodes)
    : parent_(std::move(parent)), table_(std::make_shared<ElementTable>(parent_)), nodes_(std::move(nodes)) {
  const std::size_t n = nodes_.size();
  leq_.assign(n, DynamicBitset(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const auto oi = nodes_[i].order(), oj = nodes_[j].order();
      if (oj % oi != 0) continue;
      if (nodes_[i].members.is_subset_of(nodes_[j].members)) leq_[i].set(j);
    }
  for (std::size_t i = 0; i + 1 < n; ++i) proper_.push_back(i);
}

std::size_t SubmoduleLattice::find(const DynamicBitset& members) const {
  const auto count = members.count();
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    if (nodes_[i].order() == count && nodes_[i].members == members) return i;
  return nodes_.size();
}

std::string SubmoduleLattice::label(std::size_t i) const {
  const auto& gens = nodes_[i].generators;
  if (gens.empty()) return "<0>";
  std::string out = "<";
  for (std::size_t k = 0; k < gens.size(); ++k) out += (k ? "," : "") + format_element(parent_.decode(gens[k]));
  return out + ">";
}

SubmoduleLattice enumerate_submodules(const ModulePresentation& m, const Limits& limits) {
  if (m.order() > limits.max_module_order)
    throw CapExceeded("module order " + std::to_string(m.order()) + " exceeds enumeration cap " +
                      std::to_string(limits.max_module_order));
  const ElementTable table(m);
  const std::size_t size = table.size();

  std::vector<DynamicBitset> sets;
  std::unordered_map<DynamicBitset, std::size_t, DynamicBitsetHash> index;
  auto insert = [&](DynamicBitset s) -> std::pair<std::size_t, bool> {
    auto [it, fresh] = index.try_emplace(s, sets.size());
    if (fresh) {
      sets.push_back(std::move(s));
      if (sets.size() > limits.max_lattice)
        throw CapExceeded("submodule lattice exceeds " + std::to_string(limits.max_lattice) + " nodes");
    }
    return {it->second, fresh};
  };

  std::vector<std::size_t> cyclic_size(size);
  std::vector<std::pair<std::size_t, Code>> cyclics;  // (set index, generator)
  for (std::size_t x = 0; x < size; ++x) {
    auto s = generated_submodule(table, {static_cast<Code>(x)});
    cyclic_size[x] = s.count();
    auto [id, fresh] = insert(std::move(s));
    if (fresh) cyclics.emplace_back(id, static_cast<Code>(x));
  }

  std::deque<std::size_t> work;
  for (std::size_t i = 0; i < sets.size(); ++i) work.push_back(i);
  while (!work.empty()) {
    const std::size_t i = work.front();
    work.pop_front();
    for (const auto& [cid, gen] : cyclics) {
      if (sets[i].test(gen)) continue;
      Closure join(table, sets[i]);
      join.add(gen);
      auto [id, fresh] = insert(join.set());
      if (fresh) work.push_back(id);
    }
  }

  std::vector<Submodule> nodes;
  nodes.reserve(sets.size());
  for (auto& s : sets) {
    Submodule node;
    node.elements.reserve(s.count());
    s.for_each([&](std::size_t c) { node.elements.push_back(static_cast<Code>(c)); });
    node.generators = greedy_generators(table, s, cyclic_size);
    node.members = std::move(s);
    nodes.push_back(std::move(node));
  }
  std::sort(nodes.begin(), nodes.end(), [](const Submodule& a, const Submodule& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements < b.elements;
  });
  return SubmoduleLattice(m, std::move(nodes));
}

std::vector<std::size_t> maximal_submodules(const SubmoduleLattice& l) {
  std::vector<std::size_t> out;
  const std::size_t top = l.top();
  for (std::size_t i = 0; i < top; ++i) {
    bool covered = true;
    for (std::size_t j = i + 1; j < top && covered; ++j)
      if (l.leq(i, j)) covered = false;
    if (covered) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> minimal_nonzero_submodules(const SubmoduleLattice& l) {
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i < l.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 1; j < i && minimal; ++j)
      if (l.leq(j, i)) minimal = false;
    if (minimal) out.push_back(i);
  }
  return out;
}

bool is_uniserial(const SubmoduleLattice& l) {
  for (std::size_t i = 0; i < l.size(); ++i)
    for (std::size_t j = i + 1; j < l.size(); ++j)
      if (!l.leq(i, j) && !l.leq(j, i)) return false;
  return true;
}

std::size_t longest_chain(const SubmoduleLattice& l) {
  std::vector<std::size_t> depth(l.size(), 0);
  for (std::size_t i = 1; i < l.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (l.leq(j, i)) depth[i] = std::max(depth[i], depth[j] + 1);
  return depth[l.top()];
}

SocleNode socle_node(const SubmoduleLattice& l) {
  const auto& m = l.parent();
  DynamicBitset members(static_cast<std::size_t>(m.order()));
  for (const auto& x : socle(m)) members.set(m.encode(x));
  SocleNode out;
  out.index = l.find(members);
  if (out.index == l.size()) throw InternalInconsistency("socle is not a node of the enumerated lattice");
  out.is_whole_module = out.index == l.top();
  if (!out.is_whole_module)
    for (auto mx : maximal_submodules(l))
      if (mx != out.index && !l.leq(out.index, mx)) out.inside_every_maximal = false;
  return out;
}

bool is_semisimple(const SubmoduleLattice& l) {
  if (l.parent().ring().kind == RingKind::product_field) return true;
  return socle_node(l).is_whole_module;
}

}  // namespace homgraph
