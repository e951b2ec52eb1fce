#include "homgraph/hom.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "homgraph/errors.hpp"

namespace homgraph {
namespace {

template <class Int>
Int floor_mod(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

// Runs f<int64_t>() and retries with big integers on overflow.
template <class F>
auto with_overflow_fallback(F&& f) {
  try {
    return f.template operator()<std::int64_t>();
  } catch (const ArithmeticOverflow&) {
    return f.template operator()<BigInt>();
  }
}

template <class Int>
std::int64_t to_i64(const Int& v) {
  return static_cast<std::int64_t>(v);
}

std::vector<std::int64_t> prime_power_parts(std::int64_t n) {
  std::vector<std::int64_t> parts;
  for (std::int64_t q = 2; q * q <= n; ++q) {
    if (n % q) continue;
    std::int64_t pw = 1;
    while (n % q == 0) {
      n /= q;
      pw *= q;
    }
    parts.push_back(pw);
  }
  if (n > 1) parts.push_back(n);
  return parts;
}

HomStructure from_diagonal(const std::vector<std::int64_t>& diagonal) {
  HomStructure h;
  for (auto d : diagonal) {
    if (d == 0) throw InternalInconsistency("Hom group came out infinite");
    for (auto part : prime_power_parts(d < 0 ? -d : d)) h.invariant_factors.push_back(part);
  }
  std::sort(h.invariant_factors.begin(), h.invariant_factors.end());
  return h;
}

// Basis of {u : C u in diag(moduli) Z^r}: the u-part of ker [C | diag(moduli)].
// The projection is injective on that kernel, so the result is square.
template <class Int>
Matrix<Int> congruence_solutions(const Matrix<Int>& c, const std::vector<Int>& moduli) {
  const std::size_t r = c.rows(), n = c.cols();
  if (r == 0) return Matrix<Int>::identity(n);
  Matrix<Int> system(r, n + r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < n; ++j) system(i, j) = c(i, j);
    system(i, n + i) = moduli[i];
  }
  auto snf = smith_normal_form_exact(std::move(system));
  std::size_t rank = 0;
  for (const auto& d : snf.diagonal)
    if (d != 0) ++rank;
  if (rank != r) throw InternalInconsistency("congruence system lost rank");
  Matrix<Int> basis(n, n + r - rank);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = rank; k < n + r; ++k) basis(i, k - rank) = snf.right_transform(i, k);
  if (basis.cols() != n) throw InternalInconsistency("solution lattice is not full rank");
  return basis;
}

// Lattice generated by the columns of `gens` (n x s) together with diag(orders)
// gives N; returns generators of the relation lattice {c : gens c in D Z^n}.
template <class Int>
Matrix<Int> relation_lattice(const Matrix<Int>& gens, const std::vector<std::int64_t>& orders) {
  const std::size_t n = gens.rows(), s = gens.cols();
  Matrix<Int> system(n, s + n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < s; ++j) system(i, j) = gens(i, j);
    system(i, s + i) = Int(orders[i]);
  }
  auto snf = smith_normal_form_exact(std::move(system));
  std::size_t rank = 0;
  for (const auto& d : snf.diagonal)
    if (d != 0) ++rank;
  Matrix<Int> rel(s, s + n - rank);
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t k = rank; k < s + n; ++k) rel(i, k - rank) = snf.right_transform(i, k);
  return rel;
}

// Additive generators of a submodule: its R-generators closed under the action matrices.
std::vector<Element> additive_generators(const ModulePresentation& m, const Submodule& n) {
  std::vector<Element> gens;
  for (auto c : n.generators) gens.push_back(m.decode(c));
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t a = 0; a < m.actions().size(); ++a) {
      Element y = m.apply_matrix(a, gens[i]);
      if (y != m.zero() && std::find(gens.begin(), gens.end(), y) == gens.end()) gens.push_back(std::move(y));
    }
  return gens;
}

ModulePresentation zero_module(const RingSpec& ring) {
  return ModulePresentation(ring, {}, std::vector<IntMatrix>(ring.action_count(), IntMatrix(0, 0)));
}

ModulePresentation validated(const RingSpec& ring, std::vector<std::int64_t> orders, std::vector<IntMatrix> actions,
                             const char* what) {
  try {
    return ModulePresentation(ring, std::move(orders), std::move(actions), std::uint64_t{1} << 31);
  } catch (const InvalidInput& e) {
    throw InternalInconsistency(std::string(what) + " presentation failed validation: " + e.what());
  }
}

}  // namespace

BigInt HomStructure::order() const {
  BigInt o = 1;
  for (auto f : invariant_factors) o *= f;
  return o;
}

std::string format_hom(const HomStructure& h) {
  if (h.is_zero()) return "0";
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < h.invariant_factors.size(); ++i) os << (i ? "," : "") << h.invariant_factors[i];
  os << ')';
  return os.str();
}

ModulePresentation present_submodule(const ModulePresentation& m, const Submodule& n) {
  if (n.order() == 1) return zero_module(m.ring());
  const auto gens = additive_generators(m, n);
  const std::size_t rank = m.rank(), s = gens.size();

  // New basis f_i (as elements of M) with orders a_i.
  auto [basis, orders] = with_overflow_fallback([&]<class Int>() {
    Matrix<Int> g(rank, s);
    for (std::size_t j = 0; j < s; ++j)
      for (std::size_t i = 0; i < rank; ++i) g(i, j) = Int(gens[j].coords[i]);
    auto snf = smith_normal_form_exact(relation_lattice(g, m.cyclic_orders()));
    if (snf.diagonal.size() != s) throw InternalInconsistency("submodule relation lattice is not full rank");
    std::vector<Element> basis;
    std::vector<std::int64_t> orders;
    for (std::size_t k = 0; k < s; ++k) {
      if (snf.diagonal[k] == 0) throw InternalInconsistency("submodule has an infinite cyclic factor");
      if (snf.diagonal[k] == 1) continue;
      std::vector<std::int64_t> coords(rank);
      for (std::size_t i = 0; i < rank; ++i) {
        Int v = 0;
        for (std::size_t j = 0; j < s; ++j) v = detail::add(v, detail::mul(g(i, j), snf.left_inverse(j, k)));
        coords[i] = to_i64(floor_mod(v, Int(m.cyclic_orders()[i])));
      }
      basis.push_back(m.reduce(std::move(coords)));
      orders.push_back(to_i64(snf.diagonal[k]));
    }
    return std::pair{basis, orders};
  });

  // Coordinates of each member in the new basis.
  std::vector<std::int64_t> slot(static_cast<std::size_t>(m.order()), -1);
  std::vector<std::vector<std::int64_t>> coords_of;
  std::vector<std::int64_t> y(orders.size(), 0);
  for (;;) {
    Element x = m.zero();
    for (std::size_t i = 0; i < orders.size(); ++i) x = m.add(x, m.scale(y[i], basis[i]));
    const Code c = m.encode(x);
    if (!n.contains(c) || slot[c] != -1) throw InternalInconsistency("submodule basis does not generate the submodule freely");
    slot[c] = static_cast<std::int64_t>(coords_of.size());
    coords_of.push_back(y);
    std::size_t i = 0;
    while (i < y.size() && ++y[i] == orders[i]) y[i++] = 0;
    if (i == y.size()) break;
  }
  if (coords_of.size() != n.order()) throw InternalInconsistency("submodule presentation has the wrong order");

  std::vector<IntMatrix> actions;
  for (std::size_t a = 0; a < m.actions().size(); ++a) {
    IntMatrix induced(orders.size(), orders.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const auto idx = slot[m.encode(m.apply_matrix(a, basis[j]))];
      if (idx < 0) throw InternalInconsistency("submodule is not closed under the ring action");
      for (std::size_t i = 0; i < orders.size(); ++i) induced(i, j) = coords_of[static_cast<std::size_t>(idx)][i];
    }
    actions.push_back(std::move(induced));
  }
  return validated(m.ring(), std::move(orders), std::move(actions), "submodule");
}

ModulePresentation present_quotient(const ModulePresentation& m, const Submodule& n) {
  const auto gens = additive_generators(m, n);
  const std::size_t rank = m.rank(), s = gens.size();
  if (rank == 0) return zero_module(m.ring());

  return with_overflow_fallback([&]<class Int>() {
    Matrix<Int> rel(rank, rank + s);
    for (std::size_t i = 0; i < rank; ++i) {
      rel(i, i) = Int(m.cyclic_orders()[i]);
      for (std::size_t j = 0; j < s; ++j) rel(i, rank + j) = Int(gens[j].coords[i]);
    }
    auto snf = smith_normal_form_exact(std::move(rel));
    std::vector<std::size_t> kept;
    std::vector<std::int64_t> orders;
    std::uint64_t quotient_order = 1;
    for (std::size_t k = 0; k < rank; ++k) {
      if (snf.diagonal[k] == 0) throw InternalInconsistency("quotient has an infinite cyclic factor");
      if (snf.diagonal[k] == 1) continue;
      kept.push_back(k);
      orders.push_back(to_i64(snf.diagonal[k]));
      quotient_order *= static_cast<std::uint64_t>(orders.back());
    }
    if (quotient_order * n.order() != m.order()) throw InternalInconsistency("quotient order does not match |M|/|N|");

    auto project = [&](const Element& x) {
      std::vector<std::int64_t> y(kept.size());
      for (std::size_t t = 0; t < kept.size(); ++t) {
        Int v = 0;
        for (std::size_t j = 0; j < rank; ++j) v = detail::add(v, detail::mul(snf.left_transform(kept[t], j), Int(x.coords[j])));
        y[t] = to_i64(floor_mod(v, Int(orders[t])));
      }
      return y;
    };
    std::vector<Element> lifts;
    for (auto k : kept) {
      std::vector<std::int64_t> coords(rank);
      for (std::size_t i = 0; i < rank; ++i) coords[i] = to_i64(floor_mod(snf.left_inverse(i, k), Int(m.cyclic_orders()[i])));
      lifts.push_back(m.reduce(std::move(coords)));
    }
    std::vector<IntMatrix> actions;
    for (std::size_t a = 0; a < m.actions().size(); ++a) {
      IntMatrix induced(kept.size(), kept.size());
      for (std::size_t j = 0; j < kept.size(); ++j) {
        const auto y = project(m.apply_matrix(a, lifts[j]));
        for (std::size_t i = 0; i < kept.size(); ++i) induced(i, j) = y[i];
      }
      actions.push_back(std::move(induced));
    }
    return validated(m.ring(), std::move(orders), std::move(actions), "quotient");
  });
}

HomStructure hom_structure(const ModulePresentation& a, const ModulePresentation& b) {
  if (!(a.ring() == b.ring())) throw InvalidInput("Hom needs modules over the same ring");
  const std::size_t n = a.rank(), m = b.rank();
  if (n == 0 || m == 0) return {};
  const auto& d = a.cyclic_orders();
  const auto& e = b.cyclic_orders();
  const std::size_t vars = n * m;
  auto var = [n](std::size_t j, std::size_t i) { return j * n + i; };

  return with_overflow_fallback([&]<class Int>() {
    // h_ji = scale_ji * u_ji; u_ji ranges over Z/gcd(d_i, e_j).
    std::vector<Int> scale(vars), period(vars);
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t i = 0; i < n; ++i) {
        const auto g = std::gcd(d[i], e[j]);
        period[var(j, i)] = Int(g);
        scale[var(j, i)] = Int(e[j] / g);
      }

    // H S_g == T_g H, row j read modulo e_j.
    const std::size_t gens = a.actions().size();
    Matrix<Int> c(gens * m * n, vars);
    std::vector<Int> moduli(gens * m * n);
    std::size_t row = 0;
    for (std::size_t g = 0; g < gens; ++g) {
      const auto& s = a.actions()[g];
      const auto& t = b.actions()[g];
      for (std::size_t j = 0; j < m; ++j)
        for (std::size_t i = 0; i < n; ++i, ++row) {
          const Int ej(e[j]);
          moduli[row] = ej;
          for (std::size_t k = 0; k < n; ++k)
            c(row, var(j, k)) = floor_mod(detail::add(c(row, var(j, k)), detail::mul(scale[var(j, k)], Int(s(k, i)))), ej);
          for (std::size_t l = 0; l < m; ++l)
            c(row, var(l, i)) = floor_mod(detail::sub(c(row, var(l, i)), detail::mul(Int(t(j, l)), scale[var(l, i)])), ej);
        }
    }

    // K = solutions, K0 = diag(period) Z^N, Hom = K / K0.
    const auto basis = congruence_solutions(c, moduli);
    auto snf = smith_normal_form_exact(basis);
    Matrix<Int> y(vars, vars);
    for (std::size_t i = 0; i < vars; ++i) {
      const Int& s_i = snf.diagonal[i];
      if (s_i == 0) throw InternalInconsistency("solution lattice is singular");
      for (std::size_t k = 0; k < vars; ++k) {
        const Int v = detail::mul(snf.left_transform(i, k), period[k]);
        if (v % s_i != 0) throw InternalInconsistency("trivial homs are not contained in the solution lattice");
        y(i, k) = v / s_i;
      }
    }
    auto quotient = smith_normal_form_exact(std::move(y));
    std::vector<std::int64_t> diagonal;
    for (const auto& v : quotient.diagonal)
      if (v != 1) diagonal.push_back(to_i64(v));
    return from_diagonal(diagonal);
  });
}

namespace {

// Every element of the ring as (scalar, coefficient per action matrix).
struct RingElement {
  std::int64_t scalar = 0;
  std::vector<std::int64_t> coeffs;
};

std::vector<RingElement> ring_elements(const RingSpec& ring) {
  std::vector<RingElement> out;
  const auto p = ring.p;
  switch (ring.kind) {
    case RingKind::zmod:
      for (std::int64_t s = 0; s < ring.exponent(); ++s) out.push_back({s, {}});
      break;
    case RingKind::prime_field:
      for (std::int64_t s = 0; s < p; ++s) out.push_back({s, {}});
      break;
    case RingKind::product_field:
      for (std::int64_t u = 0; u < p; ++u)
        for (std::int64_t v = 0; v < p; ++v) out.push_back({0, {u, v}});
      break;
    case RingKind::local_square_zero:
      for (std::int64_t s = 0; s < p; ++s)
        for (std::int64_t u = 0; u < p; ++u)
          for (std::int64_t v = 0; v < p; ++v) out.push_back({s, {u, v}});
      break;
  }
  return out;
}

// ring_table[r][code] = code of r * element.
std::vector<std::vector<Code>> ring_table(const ModulePresentation& m, const std::vector<RingElement>& ring) {
  std::vector<std::vector<Code>> table(ring.size(), std::vector<Code>(static_cast<std::size_t>(m.order())));
  for (Code c = 0; c < m.order(); ++c) {
    const Element x = m.decode(c);
    std::vector<Element> images;
    for (std::size_t g = 0; g < m.actions().size(); ++g) images.push_back(m.apply_matrix(g, x));
    for (std::size_t r = 0; r < ring.size(); ++r) {
      Element y = m.scale(ring[r].scalar, x);
      for (std::size_t g = 0; g < images.size(); ++g) y = m.add(y, m.scale(ring[r].coeffs[g], images[g]));
      table[r][c] = m.encode(y);
    }
  }
  return table;
}

class HomSearch {
 public:
  HomSearch(const ModulePresentation& a, const ModulePresentation& b)
      : a_(a), b_(b), ta_(a), tb_(b), ring_(ring_elements(a.ring())), ra_(ring_table(a, ring_)), rb_(ring_table(b, ring_)) {
    // R-generating tuple of A, greedily by cyclic submodule size.
    std::vector<std::pair<std::size_t, Code>> ranked;
    for (Code x = 1; x < a.order(); ++x) ranked.emplace_back(generated_submodule(ta_, {x}).count(), x);
    std::stable_sort(ranked.begin(), ranked.end(), [](auto& l, auto& r) { return l.first > r.first; });
    DynamicBitset span = generated_submodule(ta_, {});
    for (auto [size, x] : ranked) {
      if (span.count() == a.order()) break;
      if (span.test(x)) continue;
      gens_.push_back(x);
      span = generated_submodule(ta_, gens_);
    }
  }

  HomStructure run() {
    std::vector<std::int64_t> image(static_cast<std::size_t>(a_.order()), -1);
    image[0] = 0;
    chosen_.clear();
    search(0, image, {0});
    return decompose();
  }

 private:
  void search(std::size_t level, const std::vector<std::int64_t>& image, const std::vector<Code>& domain) {
    if (level == gens_.size()) {
      std::uint64_t order = 1;
      for (auto y : chosen_) order = std::max(order, tb_.additive_order(y));
      ++order_counts_[order];
      return;
    }
    const Code x = gens_[level];
    for (Code y = 0; y < b_.order(); ++y) {
      auto next = image;
      std::vector<Code> next_domain = domain;
      bool consistent = true;
      for (std::size_t d = 0; d < domain.size() && consistent; ++d)
        for (std::size_t r = 0; r < ring_.size(); ++r) {
          const Code xs = ta_.add(domain[d], ra_[r][x]);
          const Code ys = tb_.add(static_cast<Code>(image[domain[d]]), rb_[r][y]);
          if (next[xs] < 0) {
            next[xs] = ys;
            next_domain.push_back(xs);
          } else if (next[xs] != ys) {
            consistent = false;
            break;
          }
        }
      if (!consistent) continue;
      chosen_.push_back(y);
      search(level + 1, next, next_domain);
      chosen_.pop_back();
    }
  }

  HomStructure decompose() const {
    const std::int64_t p = a_.ring().p;
    std::vector<std::uint64_t> cumulative;  // maps killed by p^i
    std::uint64_t running = 0, bound = 1;
    for (int i = 0;; ++i) {
      auto it = order_counts_.find(bound);
      running += it == order_counts_.end() ? 0 : it->second;
      cumulative.push_back(running);
      if (running == total()) break;
      bound *= static_cast<std::uint64_t>(p);
    }
    if (cumulative[0] != 1) throw InternalInconsistency("oracle did not find exactly one zero map");
    std::vector<int> at_least;  // factors of order >= p^i
    for (std::size_t i = 1; i < cumulative.size(); ++i) {
      if (cumulative[i] % cumulative[i - 1]) throw InternalInconsistency("oracle map counts are not a group");
      const int e = ilog(p, static_cast<std::int64_t>(cumulative[i] / cumulative[i - 1]));
      if (e < 0) throw InternalInconsistency("oracle map counts are not a p-group");
      at_least.push_back(e);
    }
    HomStructure h;
    for (std::size_t i = 0; i < at_least.size(); ++i) {
      const int exact = at_least[i] - (i + 1 < at_least.size() ? at_least[i + 1] : 0);
      for (int c = 0; c < exact; ++c) h.invariant_factors.push_back(ipow(p, static_cast<int>(i + 1)));
    }
    std::sort(h.invariant_factors.begin(), h.invariant_factors.end());
    return h;
  }

  std::uint64_t total() const {
    std::uint64_t t = 0;
    for (auto& [o, c] : order_counts_) t += c;
    return t;
  }

  const ModulePresentation& a_;
  const ModulePresentation& b_;
  ElementTable ta_;
  ElementTable tb_;
  std::vector<RingElement> ring_;
  std::vector<std::vector<Code>> ra_;
  std::vector<std::vector<Code>> rb_;
  std::vector<Code> gens_;
  std::vector<Code> chosen_;
  std::map<std::uint64_t, std::uint64_t> order_counts_;
};

}  // namespace

HomStructure hom_oracle(const ModulePresentation& a, const ModulePresentation& b, const Limits& limits) {
  if (!(a.ring() == b.ring())) throw InvalidInput("Hom needs modules over the same ring");
  if (a.order() > limits.max_oracle_order)
    throw CapExceeded("oracle domain order " + std::to_string(a.order()) + " exceeds cap " +
                      std::to_string(limits.max_oracle_order));
  return HomSearch(a, b).run();
}

VertexPresentations::VertexPresentations(const SubmoduleLattice& l) {
  const auto& m = l.parent();
  subs_.reserve(l.size());
  quotients_.reserve(l.size());
  for (const auto& node : l.nodes()) {
    subs_.push_back(present_submodule(m, node));
    quotients_.push_back(present_quotient(m, node));
  }
}

bool adjacent(const VertexPresentations& v, std::size_t i, std::size_t j) {
  const bool forward = !hom_structure(v.sub(i), v.quotient(j)).is_zero();
  const bool backward = !hom_structure(v.sub(j), v.quotient(i)).is_zero();
  return forward || backward;
}

bool adjacent(const SubmoduleLattice& l, std::size_t i, std::size_t j) {
  if (i == j || i >= l.top() || j >= l.top()) throw InvalidInput("adjacency needs two distinct proper submodules");
  const auto& m = l.parent();
  const auto si = present_submodule(m, l.node(i)), sj = present_submodule(m, l.node(j));
  const auto qi = present_quotient(m, l.node(i)), qj = present_quotient(m, l.node(j));
  return !hom_structure(si, qj).is_zero() || !hom_structure(sj, qi).is_zero();
}

}  // namespace homgraph
