#include "homgraph/module_spec.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

#include "homgraph/errors.hpp"

namespace homgraph {
namespace {

std::int64_t parse_int(std::string_view s, std::string_view what) {
  std::int64_t v = 0;
  const auto* first = s.data();
  const auto* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last) throw InvalidInput("expected an integer for " + std::string(what) + ", got '" + std::string(s) + "'");
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

// Splits on commas at bracket depth zero.
std::vector<std::string_view> split_top(std::string_view s) {
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '[') ++depth;
    if (s[i] == ']') --depth;
    if (depth < 0) throw InvalidInput("unbalanced brackets in '" + std::string(s) + "'");
    if (s[i] == ',' && depth == 0) {
      parts.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  if (depth != 0) throw InvalidInput("unbalanced brackets in '" + std::string(s) + "'");
  parts.push_back(trim(s.substr(start)));
  return parts;
}

std::string_view strip_brackets(std::string_view s, std::string_view what) {
  s = trim(s);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') throw InvalidInput(std::string(what) + " must be a bracketed list");
  return s.substr(1, s.size() - 2);
}

std::vector<std::int64_t> parse_int_list(std::string_view s, std::string_view what) {
  const auto inner = trim(strip_brackets(s, what));
  std::vector<std::int64_t> out;
  if (inner.empty()) return out;
  for (auto part : split_top(inner)) out.push_back(parse_int(part, what));
  return out;
}

IntMatrix parse_matrix(std::string_view s, std::size_t n, std::string_view what) {
  const auto inner = trim(strip_brackets(s, what));
  const auto rows = inner.empty() ? std::vector<std::string_view>{} : split_top(inner);
  if (rows.size() != n) throw InvalidInput(std::string(what) + " must have " + std::to_string(n) + " rows");
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto row = parse_int_list(rows[i], what);
    if (row.size() != n) throw InvalidInput(std::string(what) + " must have " + std::to_string(n) + " columns");
    for (std::size_t j = 0; j < n; ++j) m(i, j) = row[j];
  }
  return m;
}

class KeyValues {
 public:
  KeyValues(std::string_view body, std::vector<std::string> allowed) {
    for (auto part : split_top(body)) {
      const auto eq = part.find('=');
      if (eq == std::string_view::npos) throw InvalidInput("expected key=value, got '" + std::string(part) + "'");
      std::string key(trim(part.substr(0, eq)));
      if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) throw InvalidInput("unknown key '" + key + "'");
      if (!values_.emplace(key, std::string(trim(part.substr(eq + 1)))).second) throw InvalidInput("duplicate key '" + key + "'");
    }
  }
  bool has(const std::string& key) const { return values_.count(key) > 0; }
  const std::string& get(const std::string& key) const {
    auto it = values_.find(key);
    if (it == values_.end()) throw InvalidInput("missing key '" + key + "'");
    return it->second;
  }
  std::int64_t get_int(const std::string& key) const { return parse_int(get(key), key); }
  std::size_t size() const { return values_.size(); }

 private:
  std::map<std::string, std::string> values_;
};

std::size_t checked_dim(std::int64_t v, std::string_view what) {
  if (v < 0 || v > 64) throw InvalidInput(std::string(what) + " out of range");
  return static_cast<std::size_t>(v);
}

void require_nonzero(std::size_t n) {
  if (n == 0) throw InvalidInput("module must be nonzero");
}

}  // namespace

ModulePresentation parse_module_spec(std::string_view spec, const Limits& limits) {
  spec = trim(spec);
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) throw InvalidInput("module spec needs '<kind>:' prefix: '" + std::string(spec) + "'");
  const auto kind = spec.substr(0, colon);
  const auto body = spec.substr(colon + 1);
  const auto cap = limits.max_module_order;

  if (kind == "zmod") {
    KeyValues kv(body, {"p", "k", "type"});
    const auto p = kv.get_int("p");
    const auto k = kv.get_int("k");
    if (k < 1 || k > 62) throw InvalidInput("k out of range");
    RingSpec ring = RingSpec::zmod(p, static_cast<int>(k));
    ring.validate();
    std::vector<std::int64_t> orders;
    for (auto e : parse_int_list(kv.get("type"), "type")) {
      if (e < 1 || e > k) throw InvalidInput("type exponents must lie in [1, k]");
      orders.push_back(ipow(p, static_cast<int>(e)));
    }
    require_nonzero(orders.size());
    return ModulePresentation(ring, std::move(orders), {}, cap);
  }
  if (kind == "field") {
    KeyValues kv(body, {"p", "dim"});
    const auto p = kv.get_int("p");
    const auto dim = checked_dim(kv.get_int("dim"), "dim");
    require_nonzero(dim);
    return ModulePresentation(RingSpec::prime_field(p), std::vector<std::int64_t>(dim, p), {}, cap);
  }
  if (kind == "prod") {
    KeyValues kv(body, {"p", "mult"});
    const auto p = kv.get_int("p");
    const auto mult = parse_int_list(kv.get("mult"), "mult");
    if (mult.size() != 2) throw InvalidInput("mult must list two multiplicities");
    const auto m1 = checked_dim(mult[0], "mult");
    const auto m2 = checked_dim(mult[1], "mult");
    const std::size_t n = m1 + m2;
    require_nonzero(n);
    IntMatrix e1(n, n), e2(n, n);
    for (std::size_t i = 0; i < n; ++i) (i < m1 ? e1 : e2)(i, i) = 1;
    return ModulePresentation(RingSpec::product_field(p), std::vector<std::int64_t>(n, p), {e1, e2}, cap);
  }
  if (kind == "kxy") {
    KeyValues kv(body, {"p", "preset", "dim", "X", "Y"});
    const auto p = kv.get_int("p");
    if (kv.has("preset")) {
      if (kv.size() != 2) throw InvalidInput("kxy preset form takes only p and preset");
      return kxy_preset(p, kv.get("preset"));
    }
    const auto dim = checked_dim(kv.get_int("dim"), "dim");
    require_nonzero(dim);
    auto x = parse_matrix(kv.get("X"), dim, "X");
    auto y = parse_matrix(kv.get("Y"), dim, "Y");
    return ModulePresentation(RingSpec::local_square_zero(p), std::vector<std::int64_t>(dim, p), {x, y}, cap);
  }
  throw InvalidInput("unknown module kind '" + std::string(kind) + "'");
}

const std::vector<std::string>& kxy_preset_names() {
  static const std::vector<std::string> names{"k", "R/(x)", "R/(y)", "R/(x+y)", "k2", "R"};
  return names;
}

ModulePresentation kxy_preset(std::int64_t p, std::string_view name) {
  const RingSpec ring = RingSpec::local_square_zero(p);
  ring.validate();
  auto make = [&](std::size_t n, IntMatrix x, IntMatrix y) {
    return ModulePresentation(ring, std::vector<std::int64_t>(n, p), {std::move(x), std::move(y)});
  };
  if (name == "k") return make(1, IntMatrix(1, 1), IntMatrix(1, 1));
  if (name == "k2") return make(2, IntMatrix(2, 2), IntMatrix(2, 2));
  // basis (1, x, y)
  if (name == "R") return make(3, IntMatrix{{0, 0, 0}, {1, 0, 0}, {0, 0, 0}}, IntMatrix{{0, 0, 0}, {0, 0, 0}, {1, 0, 0}});
  // basis (1, y)
  if (name == "R/(x)") return make(2, IntMatrix(2, 2), IntMatrix{{0, 0}, {1, 0}});
  // basis (1, x)
  if (name == "R/(y)") return make(2, IntMatrix{{0, 0}, {1, 0}}, IntMatrix(2, 2));
  // basis (1, x), y = -x
  if (name == "R/(x+y)") return make(2, IntMatrix{{0, 0}, {1, 0}}, IntMatrix{{0, 0}, {p - 1, 0}});
  throw InvalidInput("unknown kxy preset '" + std::string(name) + "'");
}

std::string zmod_spec(std::int64_t p, int k, const std::vector<int>& exponents) {
  std::ostringstream os;
  os << "zmod:p=" << p << ",k=" << k << ",type=[";
  for (std::size_t i = 0; i < exponents.size(); ++i) os << (i ? "," : "") << exponents[i];
  os << ']';
  return os.str();
}

std::string field_spec(std::int64_t p, std::size_t dim) {
  return "field:p=" + std::to_string(p) + ",dim=" + std::to_string(dim);
}

std::string prod_spec(std::int64_t p, std::size_t m1, std::size_t m2) {
  return "prod:p=" + std::to_string(p) + ",mult=[" + std::to_string(m1) + "," + std::to_string(m2) + "]";
}

std::string kxy_preset_spec(std::int64_t p, std::string_view name) {
  return "kxy:p=" + std::to_string(p) + ",preset=" + std::string(name);
}

std::string format_matrix(const IntMatrix& a) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < a.rows(); ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < a.cols(); ++j) os << (j ? "," : "") << a(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

std::string kxy_matrix_spec(const ModulePresentation& m) {
  if (m.ring().kind != RingKind::local_square_zero) throw InvalidInput("kxy_matrix_spec needs a kxy module");
  return "kxy:p=" + std::to_string(m.ring().p) + ",dim=" + std::to_string(m.rank()) + ",X=" + format_matrix(m.actions()[0]) +
         ",Y=" + format_matrix(m.actions()[1]);
}

std::string describe_structure(const ModulePresentation& m) {
  const auto& ring = m.ring();
  const std::string ps = std::to_string(ring.p);
  if (m.rank() == 0) return "0";
  switch (ring.kind) {
    case RingKind::zmod: {
      auto orders = m.cyclic_orders();
      std::sort(orders.rbegin(), orders.rend());
      std::string out;
      for (std::size_t i = 0; i < orders.size(); ++i) out += (i ? " + Z/" : "Z/") + std::to_string(orders[i]);
      return out;
    }
    case RingKind::prime_field: return "F_" + ps + "^" + std::to_string(m.rank());
    case RingKind::product_field:
      return "S1^" + std::to_string(rank_mod_p(m.actions()[0], ring.p)) + " + S2^" +
             std::to_string(rank_mod_p(m.actions()[1], ring.p));
    case RingKind::local_square_zero:
      return "dim " + std::to_string(m.rank()) + " over " + ring.name() + ", ann " + format_profile(annihilator_profile(m));
  }
  return "?";
}

}  // namespace homgraph
