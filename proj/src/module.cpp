#include "homgraph/module.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "homgraph/errors.hpp"

namespace homgraph {
namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % m);
}

}  // namespace

ModulePresentation::ModulePresentation(RingSpec ring, std::vector<std::int64_t> cyclic_orders,
                                       std::vector<IntMatrix> actions, std::uint64_t max_order)
    : ring_(ring), orders_(std::move(cyclic_orders)), actions_(std::move(actions)) {
  ring_.validate();
  const std::int64_t exponent = ring_.exponent();
  for (auto d : orders_) {
    if (d < 2 || ilog(ring_.p, d) < 1)
      throw InvalidInput("cyclic order " + std::to_string(d) + " is not a positive power of " + std::to_string(ring_.p));
    if (d > exponent)
      throw InvalidInput("cyclic order " + std::to_string(d) + " is not annihilated by " + ring_.name());
  }
  const std::uint64_t hard_cap = std::min<std::uint64_t>(max_order, std::uint64_t{1} << 31);
  for (auto d : orders_) {
    if (order_ > hard_cap / static_cast<std::uint64_t>(d))
      throw CapExceeded("module order exceeds cap " + std::to_string(hard_cap));
    order_ *= static_cast<std::uint64_t>(d);
  }
  if (order_ > hard_cap)
    throw CapExceeded("module order " + std::to_string(order_) + " exceeds cap " + std::to_string(hard_cap));

  weights_.assign(rank(), 1);
  for (std::size_t j = rank(); j-- > 1;) weights_[j - 1] = weights_[j] * static_cast<std::uint64_t>(orders_[j]);

  if (actions_.size() != ring_.action_count())
    throw InvalidInput(ring_.name() + " modules need " + std::to_string(ring_.action_count()) + " action matrices, got " +
                       std::to_string(actions_.size()));
  const std::size_t n = rank();
  for (auto& a : actions_) {
    if (a.rows() != n || a.cols() != n) throw InvalidInput("action matrix must be " + std::to_string(n) + "x" + std::to_string(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) = mod(a(i, j), orders_[i]);
        if (mulmod(orders_[j], a(i, j), orders_[i]) != 0)
          throw InvalidInput("action entry (" + std::to_string(i) + "," + std::to_string(j) + ") does not respect orders");
      }
  }
  for (std::size_t a = 0; a < actions_.size(); ++a)
    for (std::size_t b = a + 1; b < actions_.size(); ++b)
      if (compose(actions_[a], actions_[b]) != compose(actions_[b], actions_[a]))
        throw InvalidInput("action matrices do not commute");

  IntMatrix zero(n, n);
  if (ring_.kind == RingKind::local_square_zero) {
    const auto& x = actions_[0];
    const auto& y = actions_[1];
    if (compose(x, x) != zero || compose(y, y) != zero || compose(x, y) != zero)
      throw InvalidInput("actions violate x^2 = y^2 = xy = 0");
  } else if (ring_.kind == RingKind::product_field) {
    const auto& e1 = actions_[0];
    const auto& e2 = actions_[1];
    if (compose(e1, e1) != e1 || compose(e2, e2) != e2 || compose(e1, e2) != zero)
      throw InvalidInput("selectors are not orthogonal idempotents");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (mod(e1(i, j) + e2(i, j), orders_[i]) != (i == j ? 1 : 0)) throw InvalidInput("selectors do not sum to the identity");
  }
}

IntMatrix ModulePresentation::compose(const IntMatrix& a, const IntMatrix& b) const {
  const std::size_t n = rank();
  IntMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::int64_t s = 0;
      for (std::size_t k = 0; k < n; ++k) s = mod(s + mulmod(a(i, k), b(k, j), orders_[i]), orders_[i]);
      out(i, j) = s;
    }
  return out;
}

bool ModulePresentation::is_valid(const Element& x) const {
  if (x.coords.size() != rank()) return false;
  for (std::size_t j = 0; j < rank(); ++j)
    if (x.coords[j] < 0 || x.coords[j] >= orders_[j]) return false;
  return true;
}

Element ModulePresentation::reduce(std::vector<std::int64_t> coords) const {
  if (coords.size() != rank()) throw InvalidInput("element has wrong length");
  for (std::size_t j = 0; j < rank(); ++j) coords[j] = mod(coords[j], orders_[j]);
  return Element{std::move(coords)};
}

Element ModulePresentation::add(const Element& a, const Element& b) const {
  Element out = a;
  for (std::size_t j = 0; j < rank(); ++j) out.coords[j] = mod(a.coords[j] + b.coords[j], orders_[j]);
  return out;
}

Element ModulePresentation::negate(const Element& a) const {
  Element out = a;
  for (std::size_t j = 0; j < rank(); ++j) out.coords[j] = mod(-a.coords[j], orders_[j]);
  return out;
}

Element ModulePresentation::scale(std::int64_t s, const Element& a) const {
  Element out = a;
  for (std::size_t j = 0; j < rank(); ++j) out.coords[j] = mod(mulmod(mod(s, orders_[j]), a.coords[j], orders_[j]), orders_[j]);
  return out;
}

Element ModulePresentation::apply_matrix(std::size_t action, const Element& a) const {
  const auto& m = actions_.at(action);
  Element out = zero();
  for (std::size_t i = 0; i < rank(); ++i) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < rank(); ++j) s = mod(s + mulmod(m(i, j), a.coords[j], orders_[i]), orders_[i]);
    out.coords[i] = s;
  }
  return out;
}

Code ModulePresentation::encode(const Element& x) const {
  std::uint64_t c = 0;
  for (std::size_t j = 0; j < rank(); ++j) c += static_cast<std::uint64_t>(x.coords[j]) * weights_[j];
  return static_cast<Code>(c);
}

Element ModulePresentation::decode(Code c) const {
  Element x = zero();
  std::uint64_t rest = c;
  for (std::size_t j = 0; j < rank(); ++j) {
    x.coords[j] = static_cast<std::int64_t>(rest / weights_[j]);
    rest %= weights_[j];
  }
  return x;
}

Element module_action(const ModulePresentation& m, std::size_t generator, const Element& x) {
  if (!m.is_valid(x)) throw InvalidInput("element " + format_element(x) + " is not in the module");
  if (generator >= m.ring().generator_count())
    throw InvalidInput("ring generator index " + std::to_string(generator) + " out of range for " + m.ring().name());
  if (m.ring().kind == RingKind::zmod) return m.scale(m.ring().p, x);
  return m.apply_matrix(generator, x);
}

ElementTable::ElementTable(const ModulePresentation& m)
    : module_(m), size_(static_cast<std::size_t>(m.order())), rank_(m.rank()) {
  coords_.resize(size_ * rank_);
  for (std::size_t c = 0; c < size_; ++c) {
    const Element x = m.decode(static_cast<Code>(c));
    std::copy(x.coords.begin(), x.coords.end(), coords_.begin() + static_cast<std::ptrdiff_t>(c * rank_));
  }
  neg_.resize(size_);
  for (std::size_t c = 0; c < size_; ++c) neg_[c] = m.encode(m.negate(m.decode(static_cast<Code>(c))));
  act_.assign(m.ring().generator_count(), std::vector<Code>(size_));
  for (std::size_t g = 0; g < act_.size(); ++g)
    for (std::size_t c = 0; c < size_; ++c)
      act_[g][c] = m.encode(module_action(m, g, m.decode(static_cast<Code>(c))));
}

Code ElementTable::add(Code a, Code b) const {
  const auto& orders = module_.cyclic_orders();
  std::uint64_t code = 0;
  for (std::size_t j = 0; j < rank_; ++j) {
    std::int64_t s = coords_[a * rank_ + j] + coords_[b * rank_ + j];
    if (s >= orders[j]) s -= orders[j];
    code = code * static_cast<std::uint64_t>(orders[j]) + static_cast<std::uint64_t>(s);
  }
  return static_cast<Code>(code);
}

std::uint64_t ElementTable::additive_order(Code a) const {
  std::uint64_t order = 1;
  const auto& orders = module_.cyclic_orders();
  for (std::size_t j = 0; j < rank_; ++j) {
    const std::int64_t c = coords_[a * rank_ + j];
    if (c == 0) continue;
    const auto o = static_cast<std::uint64_t>(orders[j] / std::gcd(orders[j], c));
    order = std::max(order, o);  // p-power orders: lcm is the max
  }
  return order;
}

std::vector<Element> socle(const ModulePresentation& m) {
  const auto radical = m.ring().radical_generators();
  std::vector<Element> out;
  for (Code c = 0; c < m.order(); ++c) {
    Element x = m.decode(c);
    bool killed = true;
    for (auto g : radical)
      if (module_action(m, g, x) != m.zero()) {
        killed = false;
        break;
      }
    if (killed) out.push_back(std::move(x));
  }
  return out;
}

std::vector<AnnihilatorEntry> annihilator_profile(const ModulePresentation& m) {
  const auto& ring = m.ring();
  const std::size_t n = m.rank();
  std::vector<AnnihilatorEntry> out;
  auto basis = [&](std::size_t j) {
    Element e = m.zero();
    e.coords[j] = 1;
    return e;
  };
  switch (ring.kind) {
    case RingKind::zmod:
      for (int d = 1; d <= ring.k; ++d) {
        const std::int64_t s = ipow(ring.p, d);
        bool kills = true;
        for (std::size_t j = 0; j < n; ++j) kills = kills && m.scale(s, basis(j)) == m.zero();
        out.push_back({d == 1 ? "p" : "p^" + std::to_string(d), kills});
      }
      break;
    case RingKind::prime_field: break;
    case RingKind::product_field:
    case RingKind::local_square_zero: {
      const int max_degree = ring.kind == RingKind::product_field ? 1 : 2;
      for (std::size_t g = 0; g < ring.action_count(); ++g) {
        IntMatrix power = m.actions()[g];
        for (int d = 1; d <= max_degree; ++d) {
          if (d > 1) power = m.compose(power, m.actions()[g]);
          bool kills = true;
          for (std::size_t i = 0; i < n && kills; ++i)
            for (std::size_t j = 0; j < n; ++j)
              if (power(i, j) != 0) {
                kills = false;
                break;
              }
          const std::string name = ring.generator_name(g);
          out.push_back({d == 1 ? name : name + "^" + std::to_string(d), kills});
        }
      }
      break;
    }
  }
  return out;
}

std::string format_profile(const std::vector<AnnihilatorEntry>& profile) {
  std::string out = "{";
  for (std::size_t i = 0; i < profile.size(); ++i) {
    if (i) out += ", ";
    out += profile[i].monomial + (profile[i].kills ? " kills" : " does not kill");
  }
  return out + "}";
}

std::size_t composition_length(const ModulePresentation& m) {
  std::size_t length = 0;
  for (auto d : m.cyclic_orders()) length += static_cast<std::size_t>(ilog(m.ring().p, d));
  return length;
}

std::size_t rank_mod_p(const IntMatrix& a, std::int64_t p) {
  IntMatrix w = a;
  for (std::size_t i = 0; i < w.rows(); ++i)
    for (std::size_t j = 0; j < w.cols(); ++j) w(i, j) = mod(w(i, j), p);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < w.cols() && rank < w.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < w.rows() && w(pivot, col) == 0) ++pivot;
    if (pivot == w.rows()) continue;
    for (std::size_t j = 0; j < w.cols(); ++j) std::swap(w(rank, j), w(pivot, j));
    // inverse via Fermat
    std::int64_t inv = 1, base = w(rank, col), e = p - 2;
    while (e > 0) {
      if (e & 1) inv = mulmod(inv, base, p);
      base = mulmod(base, base, p);
      e >>= 1;
    }
    for (std::size_t j = 0; j < w.cols(); ++j) w(rank, j) = mulmod(w(rank, j), inv, p);
    for (std::size_t i = 0; i < w.rows(); ++i) {
      if (i == rank || w(i, col) == 0) continue;
      const std::int64_t f = w(i, col);
      for (std::size_t j = 0; j < w.cols(); ++j) w(i, j) = mod(w(i, j) - mulmod(f, w(rank, j), p), p);
    }
    ++rank;
  }
  return rank;
}

std::string format_element(const Element& x) {
  std::ostringstream os;
  os << '(';
  for (std::size_t j = 0; j < x.coords.size(); ++j) os << (j ? "," : "") << x.coords[j];
  os << ')';
  return os.str();
}

}  // namespace homgraph
