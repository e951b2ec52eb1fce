#include <gtest/gtest.h>

#include "homgraph/errors.hpp"
#include "homgraph/hom.hpp"
#include "homgraph/module_spec.hpp"
#include "homgraph/zoo.hpp"

using namespace homgraph;

namespace {

std::size_t node_of(const SubmoduleLattice& l, const std::vector<std::vector<std::int64_t>>& gens) {
  std::vector<Code> codes;
  for (const auto& g : gens) codes.push_back(l.parent().encode(Element{g}));
  const auto idx = l.find(generated_submodule(l.table(), codes));
  EXPECT_LT(idx, l.size());
  return idx;
}

ModulePresentation direct_sum(const ModulePresentation& a, const ModulePresentation& b) {
  std::vector<std::int64_t> orders = a.cyclic_orders();
  orders.insert(orders.end(), b.cyclic_orders().begin(), b.cyclic_orders().end());
  std::vector<IntMatrix> actions;
  const std::size_t n = a.rank() + b.rank();
  for (std::size_t g = 0; g < a.actions().size(); ++g) {
    IntMatrix s(n, n, 0);
    for (std::size_t i = 0; i < a.rank(); ++i)
      for (std::size_t j = 0; j < a.rank(); ++j) s(i, j) = a.actions()[g](i, j);
    for (std::size_t i = 0; i < b.rank(); ++i)
      for (std::size_t j = 0; j < b.rank(); ++j) s(a.rank() + i, a.rank() + j) = b.actions()[g](i, j);
    actions.push_back(s);
  }
  return ModulePresentation(a.ring(), orders, actions);
}

}  // namespace

TEST(PresentSubmodule, Examples) {
  const auto l = enumerate_submodules(parse_module_spec("zmod:p=2,k=2,type=[2,1]"));
  const auto n = node_of(l, {{2, 1}});
  EXPECT_EQ(l.node(n).order(), 2u);
  EXPECT_EQ(present_submodule(l.parent(), l.node(n)).cyclic_orders(), (std::vector<std::int64_t>{2}));

  const auto rx = enumerate_submodules(kxy_preset(2, "R/(x)"));
  const auto soc = present_submodule(rx.parent(), rx.node(socle_node(rx).index));
  EXPECT_EQ(soc.cyclic_orders(), (std::vector<std::int64_t>{2}));
  EXPECT_EQ(soc.actions()[0], IntMatrix(1, 1));
  EXPECT_EQ(soc.actions()[1], IntMatrix(1, 1));

  const auto zero = present_submodule(l.parent(), l.node(0));
  EXPECT_EQ(zero.order(), 1u);
  EXPECT_EQ(zero.rank(), 0u);
}

TEST(PresentQuotient, Examples) {
  const auto l = enumerate_submodules(parse_module_spec("zmod:p=2,k=2,type=[2,1]"));
  EXPECT_EQ(present_quotient(l.parent(), l.node(node_of(l, {{2, 1}}))).cyclic_orders(), (std::vector<std::int64_t>{4}));
  EXPECT_TRUE(module_isomorphic(present_quotient(l.parent(), l.node(0)), l.parent()));

  const auto z8 = enumerate_submodules(parse_module_spec("zmod:p=2,k=3,type=[3]"));
  EXPECT_EQ(present_quotient(z8.parent(), z8.node(node_of(z8, {{4}}))).cyclic_orders(), (std::vector<std::int64_t>{4}));

  const auto r = enumerate_submodules(kxy_preset(2, "R"));
  const auto top = present_quotient(r.parent(), r.node(r.top()));
  EXPECT_EQ(top.order(), 1u);
}

TEST(PresentSubmodule, SizesAndAxiomsOnZoo) {
  for (const auto& member : enumerate_zoo(RingSpec::local_square_zero(2), 3).members) {
    const auto l = enumerate_submodules(member.module);
    for (const auto& node : l.nodes()) {
      EXPECT_EQ(present_submodule(member.module, node).order(), node.order());
      EXPECT_EQ(present_quotient(member.module, node).order() * node.order(), member.module.order());
    }
  }
}

TEST(HomStructure, Examples) {
  const auto ring = RingSpec::zmod(2, 2);
  const ModulePresentation z2(ring, {2}), z4(ring, {4}), zero(ring, {});
  EXPECT_EQ(hom_structure(z2, z4).invariant_factors, (std::vector<std::int64_t>{2}));
  EXPECT_TRUE(hom_structure(zero, z4).is_zero());
  EXPECT_TRUE(hom_structure(z4, zero).is_zero());
  EXPECT_EQ(hom_structure(kxy_preset(2, "R/(x)"), kxy_preset(2, "R/(y)")).invariant_factors, (std::vector<std::int64_t>{2}));
  EXPECT_EQ(hom_structure(z4, z4).invariant_factors, (std::vector<std::int64_t>{4}));
  EXPECT_EQ(format_hom(hom_structure(z4, z4)), "(4)");
  EXPECT_EQ(format_hom(hom_structure(zero, z4)), "0");
  EXPECT_THROW(hom_structure(z2, kxy_preset(2, "k")), InvalidInput);
}

TEST(HomStructure, LargerExamples) {
  // Hom_Z(Z/8 + Z/2, Z/4 + Z/4) = Z/4 + Z/4 + Z/2 + Z/2.
  const auto ring = RingSpec::zmod(2, 3);
  const ModulePresentation a(ring, {8, 2}), b(ring, {4, 4});
  EXPECT_EQ(hom_structure(a, b).invariant_factors, (std::vector<std::int64_t>{2, 2, 4, 4}));
  // End over F_3 of F_3^2 has order 81.
  const auto f = parse_module_spec("field:p=3,dim=2");
  EXPECT_EQ(hom_structure(f, f).order(), 81);
  // End_R(R) = R has order 8.
  EXPECT_EQ(hom_structure(kxy_preset(2, "R"), kxy_preset(2, "R")).order(), 8);
}

TEST(HomOracle, Examples) {
  const auto ring = RingSpec::zmod(2, 2);
  const ModulePresentation z2(ring, {2}), z4(ring, {4});
  EXPECT_EQ(hom_oracle(z2, z2).invariant_factors, (std::vector<std::int64_t>{2}));
  EXPECT_EQ(hom_oracle(z4, z2).invariant_factors, (std::vector<std::int64_t>{2}));
  EXPECT_TRUE(hom_oracle(parse_module_spec("prod:p=2,mult=[1,0]"), parse_module_spec("prod:p=2,mult=[0,1]")).is_zero());
  EXPECT_EQ(hom_oracle(kxy_preset(2, "R/(x)"), kxy_preset(2, "R/(y)")).invariant_factors, (std::vector<std::int64_t>{2}));

  Limits tight;
  tight.max_oracle_order = 4;
  const auto big_ring = RingSpec::zmod(2, 3);
  EXPECT_THROW(hom_oracle(ModulePresentation(big_ring, {8}), ModulePresentation(big_ring, {2}), tight), CapExceeded);
}

TEST(HomStructure, AgreesWithOracleOnSmallPairs) {
  const auto ring = RingSpec::zmod(3, 2);
  std::vector<ModulePresentation> mods{ModulePresentation(ring, {3}), ModulePresentation(ring, {9}), ModulePresentation(ring, {9, 3}),
                                       ModulePresentation(ring, {3, 3})};
  for (const auto& a : mods)
    for (const auto& b : mods) EXPECT_EQ(hom_structure(a, b), hom_oracle(a, b));
  for (const auto& a : enumerate_zoo(RingSpec::local_square_zero(3), 3).members)
    for (const auto& b : enumerate_zoo(RingSpec::local_square_zero(3), 3).members)
      EXPECT_EQ(hom_structure(a.module, b.module), hom_oracle(a.module, b.module)) << a.spec << " -> " << b.spec;
}

TEST(HomStructure, DirectSumsMultiplyOrders) {
  const auto zoo = enumerate_zoo(RingSpec::local_square_zero(2), 2);
  for (const auto& a : zoo.members)
    for (const auto& a2 : zoo.members)
      for (const auto& b : zoo.members) {
        const auto sum = direct_sum(a.module, a2.module);
        EXPECT_EQ(hom_structure(sum, b.module).order(), hom_structure(a.module, b.module).order() * hom_structure(a2.module, b.module).order());
      }
  const auto prod = enumerate_zoo(RingSpec::product_field(3), 2);
  for (const auto& a : prod.members)
    for (const auto& a2 : prod.members)
      for (const auto& b : prod.members)
        EXPECT_EQ(hom_structure(direct_sum(a.module, a2.module), b.module).order(),
                  hom_structure(a.module, b.module).order() * hom_structure(a2.module, b.module).order());
}

TEST(Adjacent, Examples) {
  for (std::int64_t p : {2, 3}) {
    const auto l = enumerate_submodules(ModulePresentation(RingSpec::zmod(p, 2), {p * p}));
    EXPECT_TRUE(adjacent(l, 0, 1));
  }
  const auto f2 = enumerate_submodules(parse_module_spec("field:p=2,dim=2"));
  EXPECT_TRUE(adjacent(f2, 1, 2));
  const auto s = enumerate_submodules(parse_module_spec("prod:p=2,mult=[1,1]"));
  ASSERT_EQ(s.proper_indices().size(), 3u);
  EXPECT_TRUE(adjacent(s, 1, 2));
  EXPECT_THROW(adjacent(s, 1, 1), InvalidInput);
  EXPECT_THROW(adjacent(s, 0, s.top()), InvalidInput);
}

TEST(Adjacent, SymmetricWithUniversalZero) {
  for (const char* spec : {"zmod:p=2,k=3,type=[3,1]", "kxy:p=2,preset=R", "prod:p=2,mult=[2,1]", "field:p=3,dim=2"}) {
    const auto l = enumerate_submodules(parse_module_spec(spec));
    const VertexPresentations v(l);
    const auto& proper = l.proper_indices();
    for (std::size_t i = 0; i < proper.size(); ++i)
      for (std::size_t j = i + 1; j < proper.size(); ++j) {
        EXPECT_EQ(adjacent(v, proper[i], proper[j]), adjacent(v, proper[j], proper[i]));
        if (i == 0) EXPECT_TRUE(adjacent(v, proper[0], proper[j])) << spec;
      }
  }
}
