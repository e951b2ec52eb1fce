#include "homgraph/zoo.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "homgraph/errors.hpp"
#include "homgraph/module_spec.hpp"

namespace homgraph {
namespace {

std::int64_t mod(std::int64_t a, std::int64_t p) {
  a %= p;
  return a < 0 ? a + p : a;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t p) {
  std::int64_t r = 1, e = p - 2;
  a = mod(a, p);
  while (e > 0) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

// Partitions of n into parts <= largest, parts non-increasing, largest first.
void partitions(int n, int largest, std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(prefix);
    return;
  }
  for (int part = std::min(n, largest); part >= 1; --part) {
    prefix.push_back(part);
    partitions(n - part, part, prefix, out);
    prefix.pop_back();
  }
}

void check_cap(const ModulePresentation& m, const std::string& spec, const Limits& limits) {
  if (m.order() > limits.max_module_order)
    throw CapExceeded("zoo member " + spec + " has order " + std::to_string(m.order()) + " above the cap " +
                      std::to_string(limits.max_module_order));
}

IntMatrix reduced(const IntMatrix& a, std::int64_t p) {
  IntMatrix r = a;
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (std::size_t j = 0; j < r.cols(); ++j) r(i, j) = mod(r(i, j), p);
  return r;
}

IntMatrix mul_mod(const IntMatrix& a, const IntMatrix& b, std::int64_t p) { return reduced(a * b, p); }

IntMatrix combination(const IntMatrix& x, const IntMatrix& y, std::int64_t a, std::int64_t b, std::int64_t p) {
  IntMatrix r(x.rows(), x.cols());
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (std::size_t j = 0; j < r.cols(); ++j) r(i, j) = mod(a * x(i, j) + b * y(i, j), p);
  return r;
}

// Ranks of aX + bY over all (a, b): an invariant of R-linear isomorphism.
std::vector<std::size_t> pencil_ranks(const ModulePresentation& m) {
  const auto p = m.ring().p;
  std::vector<std::size_t> out;
  for (std::int64_t a = 0; a < p; ++a)
    for (std::int64_t b = 0; b < p; ++b) out.push_back(rank_mod_p(combination(m.actions()[0], m.actions()[1], a, b, p), p));
  return out;
}

std::string format_orders(std::vector<std::int64_t> orders) {
  std::sort(orders.rbegin(), orders.rend());
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < orders.size(); ++i) os << (i ? "," : "") << orders[i];
  os << ')';
  return os.str();
}

ModuleIsoResult kxy_isomorphism(const ModulePresentation& a, const ModulePresentation& b, const Limits& limits) {
  const auto p = a.ring().p;
  const std::size_t n = a.rank();
  if (n != b.rank()) return {false, "dimension " + std::to_string(n) + " vs " + std::to_string(b.rank())};
  const auto pa = annihilator_profile(a), pb = annihilator_profile(b);
  if (pa != pb) return {false, "annihilator profile " + format_profile(pa) + " vs " + format_profile(pb)};
  const auto ra = pencil_ranks(a), rb = pencil_ranks(b);
  for (std::size_t i = 0; i < ra.size(); ++i)
    if (ra[i] != rb[i]) {
      const auto s = static_cast<std::int64_t>(i) / p, t = static_cast<std::int64_t>(i) % p;
      return {false, "rank of " + std::to_string(s) + "x+" + std::to_string(t) + "y: " + std::to_string(ra[i]) + " vs " +
                         std::to_string(rb[i])};
    }
  if (n == 0) return {true, "zero modules"};

  // Unknown P (n x n, row-major index i*n + j); equations P*A_g - B_g*P = 0.
  IntMatrix system(2 * n * n, n * n, 0);
  for (std::size_t g = 0; g < 2; ++g) {
    const auto& ag = a.actions()[g];
    const auto& bg = b.actions()[g];
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        const std::size_t row = g * n * n + r * n + c;
        for (std::size_t k = 0; k < n; ++k) {
          system(row, r * n + k) = mod(system(row, r * n + k) + ag(k, c), p);
          system(row, k * n + c) = mod(system(row, k * n + c) - bg(r, k), p);
        }
      }
  }
  const auto basis = nullspace_mod_p(system, p);
  std::uint64_t candidates = 1;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (candidates > limits.max_commutant_candidates / static_cast<std::uint64_t>(p))
      throw CapExceeded("intertwiner search space p^" + std::to_string(basis.size()) + " exceeds the cap " +
                        std::to_string(limits.max_commutant_candidates));
    candidates *= static_cast<std::uint64_t>(p);
  }
  std::vector<std::int64_t> coeff(basis.size(), 0);
  for (std::uint64_t idx = 0; idx < candidates; ++idx) {
    std::uint64_t rest = idx;
    for (auto& c : coeff) {
      c = static_cast<std::int64_t>(rest % static_cast<std::uint64_t>(p));
      rest /= static_cast<std::uint64_t>(p);
    }
    IntMatrix pm(n, n, 0);
    for (std::size_t v = 0; v < basis.size(); ++v)
      if (coeff[v] != 0)
        for (std::size_t e = 0; e < n * n; ++e) pm(e / n, e % n) = mod(pm(e / n, e % n) + coeff[v] * basis[v][e], p);
    if (rank_mod_p(pm, p) == n) return {true, "intertwiner P=" + format_matrix(pm)};
  }
  return {false, "no invertible intertwiner among " + std::to_string(candidates) + " solutions (exhausted search)"};
}

// Key that every isomorphic pair shares; used to bucket candidates before the search.
std::vector<std::size_t> kxy_key(const ModulePresentation& m) {
  auto key = pencil_ranks(m);
  key.push_back(m.rank());
  for (const auto& e : annihilator_profile(m)) key.push_back(e.kills);
  return key;
}

}  // namespace

std::vector<std::vector<std::int64_t>> nullspace_mod_p(const IntMatrix& a, std::int64_t p) {
  IntMatrix w = reduced(a, p);
  const std::size_t rows = w.rows(), cols = w.cols();
  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && w(piv, col) == 0) ++piv;
    if (piv == rows) continue;
    for (std::size_t j = 0; j < cols; ++j) std::swap(w(rank, j), w(piv, j));
    const auto inv = inverse_mod(w(rank, col), p);
    for (std::size_t j = 0; j < cols; ++j) w(rank, j) = w(rank, j) * inv % p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || w(i, col) == 0) continue;
      const auto f = w(i, col);
      for (std::size_t j = 0; j < cols; ++j) w(i, j) = mod(w(i, j) - f * w(rank, j), p);
    }
    pivot_col.push_back(col);
    ++rank;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<std::int64_t>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<std::int64_t> v(cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = mod(-w(r, free), p);
    basis.push_back(std::move(v));
  }
  return basis;
}

ModuleIsoResult module_isomorphism(const ModulePresentation& a, const ModulePresentation& b, const Limits& limits) {
  if (!(a.ring() == b.ring())) throw InvalidInput("module isomorphism needs a common ring: " + a.ring().name() + " vs " + b.ring().name());
  const auto p = a.ring().p;
  switch (a.ring().kind) {
    case RingKind::zmod: {
      auto oa = a.cyclic_orders(), ob = b.cyclic_orders();
      std::sort(oa.begin(), oa.end());
      std::sort(ob.begin(), ob.end());
      if (oa == ob) return {true, "cyclic orders " + format_orders(oa)};
      return {false, "cyclic orders " + format_orders(oa) + " vs " + format_orders(ob)};
    }
    case RingKind::prime_field:
      if (a.rank() == b.rank()) return {true, "dimension " + std::to_string(a.rank())};
      return {false, "dimension " + std::to_string(a.rank()) + " vs " + std::to_string(b.rank())};
    case RingKind::product_field: {
      auto mult = [p](const ModulePresentation& m) {
        return "(" + std::to_string(rank_mod_p(m.actions()[0], p)) + "," + std::to_string(rank_mod_p(m.actions()[1], p)) + ")";
      };
      const auto ma = mult(a), mb = mult(b);
      if (ma == mb) return {true, "multiplicities " + ma};
      return {false, "multiplicities " + ma + " vs " + mb};
    }
    case RingKind::local_square_zero: return kxy_isomorphism(a, b, limits);
  }
  throw InvalidInput("unsupported ring");
}

bool module_isomorphic(const ModulePresentation& a, const ModulePresentation& b, const Limits& limits) {
  return module_isomorphism(a, b, limits).isomorphic;
}

ModuleZoo enumerate_zoo(const RingSpec& ring, std::size_t bound, const Limits& limits) {
  ring.validate();
  if (bound == 0) throw InvalidInput("zoo bound must be positive");
  ModuleZoo zoo{ring, {}, bound};
  const auto p = ring.p;
  auto add = [&](std::string spec, ModulePresentation m) {
    check_cap(m, spec, limits);
    zoo.members.push_back({std::move(spec), std::move(m)});
  };
  switch (ring.kind) {
    case RingKind::zmod: {
      for (std::size_t total = 1; total <= bound; ++total) {
        std::vector<std::vector<int>> parts;
        std::vector<int> prefix;
        partitions(static_cast<int>(total), ring.k, prefix, parts);
        for (const auto& e : parts) {
          // Cheap order check before building: p^total.
          std::uint64_t order = 1;
          for (std::size_t i = 0; i < total; ++i) {
            order *= static_cast<std::uint64_t>(p);
            if (order > limits.max_module_order)
              throw CapExceeded("zoo member " + zmod_spec(p, ring.k, e) + " exceeds the module order cap " +
                                std::to_string(limits.max_module_order));
          }
          std::vector<std::int64_t> orders;
          for (int x : e) orders.push_back(ipow(p, x));
          add(zmod_spec(p, ring.k, e), ModulePresentation(ring, orders, {}, limits.max_module_order));
        }
      }
      break;
    }
    case RingKind::prime_field:
      for (std::size_t d = 1; d <= bound; ++d) {
        if (d > 40) throw CapExceeded("field dimension " + std::to_string(d) + " exceeds the module order cap");
        add(field_spec(p, d), parse_module_spec(field_spec(p, d), limits));
      }
      break;
    case RingKind::product_field:
      for (std::size_t m = 1; m <= bound; ++m) {
        std::vector<std::pair<std::size_t, std::size_t>> pairs{{m, 0}, {0, m}};
        for (std::size_t j = 1; j < m; ++j) {
          pairs.emplace_back(m, j);
          pairs.emplace_back(j, m);
        }
        pairs.emplace_back(m, m);
        for (auto [a, b] : pairs)
          if (a + b <= bound) {
            if (a + b > 40) throw CapExceeded("product module exceeds the module order cap");
            add(prod_spec(p, a, b), parse_module_spec(prod_spec(p, a, b), limits));
          }
      }
      break;
    case RingKind::local_square_zero: {
      std::map<std::vector<std::size_t>, std::vector<std::size_t>> buckets;
      for (const auto& name : kxy_preset_names()) {
        auto m = kxy_preset(p, name);
        if (m.rank() > bound) continue;
        buckets[kxy_key(m)].push_back(zoo.members.size());
        auto spec = kxy_preset_spec(p, name);
        add(std::move(spec), std::move(m));
      }
      if (p != 2) break;
      const std::size_t top = std::min<std::size_t>(bound, 3);
      for (std::size_t n = 1; n <= top; ++n) {
        const std::uint32_t cells = static_cast<std::uint32_t>(n * n);
        auto matrix = [&](std::uint32_t bits) {
          IntMatrix m(n, n, 0);
          for (std::uint32_t e = 0; e < cells; ++e) m(e / n, e % n) = (bits >> e) & 1u;
          return m;
        };
        std::vector<IntMatrix> square_zero;
        for (std::uint32_t bits = 0; bits < (1u << cells); ++bits) {
          auto m = matrix(bits);
          if (rank_mod_p(mul_mod(m, m, 2), 2) == 0) square_zero.push_back(std::move(m));
        }
        for (const auto& x : square_zero)
          for (const auto& y : square_zero) {
            if (rank_mod_p(mul_mod(x, y, 2), 2) != 0 || rank_mod_p(mul_mod(y, x, 2), 2) != 0) continue;
            ModulePresentation m(ring, std::vector<std::int64_t>(n, 2), {x, y}, limits.max_module_order);
            auto& bucket = buckets[kxy_key(m)];
            const bool seen = std::any_of(bucket.begin(), bucket.end(), [&](std::size_t i) {
              return module_isomorphic(zoo.members[i].module, m, limits);
            });
            if (seen) continue;
            bucket.push_back(zoo.members.size());
            auto spec = kxy_matrix_spec(m);
            add(std::move(spec), std::move(m));
          }
      }
      break;
    }
  }
  return zoo;
}

}  // namespace homgraph
