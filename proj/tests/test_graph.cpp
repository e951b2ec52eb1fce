#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "homgraph/errors.hpp"
#include "homgraph/graph.hpp"
#include "homgraph/isomorphism.hpp"
#include "homgraph/module_spec.hpp"
#include "homgraph/spectrum.hpp"
#include "homgraph/zoo.hpp"
#include "json.hpp"
#include "oracles.hpp"

using namespace homgraph;

namespace {

Graph graph_of(const std::string& spec) { return build_graph(enumerate_submodules(parse_module_spec(spec))); }

Graph random_graph(std::mt19937& rng, std::size_t n, double density) {
  std::bernoulli_distribution edge(density);
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (edge(rng)) g.add_edge(i, j);
  return g;
}

Graph permuted(const Graph& g, const std::vector<std::size_t>& perm) {
  Graph h(g.vertex_count());
  for (auto [i, j] : g.edges()) h.add_edge(perm[i], perm[j]);
  return h;
}

}  // namespace

TEST(BuildGraph, Examples) {
  for (const char* spec : {"zmod:p=2,k=2,type=[2]", "zmod:p=3,k=2,type=[2]", "zmod:p=5,k=2,type=[2]"}) {
    const auto g = graph_of(spec);
    EXPECT_EQ(g, Graph::complete(2)) << spec;
  }
  const auto z8 = build_graph(enumerate_submodules(parse_module_spec("zmod:p=2,k=3,type=[3]")));
  EXPECT_EQ(z8, Graph::complete(3));
  EXPECT_EQ(z8.labels()[0].label, "<0>");
  EXPECT_EQ(z8.labels()[1].label, "<(4)>");
  EXPECT_EQ(z8.labels()[2].label, "<(2)>");
  const auto single = graph_of("prod:p=2,mult=[1,0]");
  EXPECT_EQ(single.vertex_count(), 1u);
  EXPECT_EQ(single.edge_count(), 0u);
}

TEST(BuildGraph, VertexCountIsProperSubmoduleCount) {
  for (const auto& member : enumerate_zoo(RingSpec::zmod(2, 3), 4).members) {
    const auto l = enumerate_submodules(member.module);
    EXPECT_EQ(build_graph(l).vertex_count(), l.size() - 1);
  }
  Limits tiny;
  tiny.max_lattice = 3;
  const auto l = enumerate_submodules(parse_module_spec("field:p=2,dim=2"));
  EXPECT_THROW(build_graph(l, tiny), CapExceeded);
}

TEST(Analyzers, CompleteGraphs) {
  const auto k2 = Graph::complete(2);
  EXPECT_TRUE(is_complete(k2));
  EXPECT_TRUE(is_connected(k2));
  EXPECT_EQ(diameter(k2), std::optional<std::size_t>(1));
  EXPECT_TRUE(is_tree(k2));
  EXPECT_TRUE(is_regular(k2));

  const auto k4 = graph_of("field:p=2,dim=2");
  EXPECT_EQ(k4, Graph::complete(4));
  EXPECT_EQ(diameter(k4), std::optional<std::size_t>(1));
  EXPECT_FALSE(is_tree(k4));
  EXPECT_TRUE(is_regular(k4));
  EXPECT_EQ(universal_vertices(k4), (std::vector<std::size_t>{0, 1, 2, 3}));

  const Graph one(1);
  EXPECT_TRUE(is_connected(one));
  EXPECT_EQ(diameter(one), std::optional<std::size_t>(0));
  EXPECT_TRUE(is_tree(one));
}

TEST(Analyzers, SyntheticGraphs) {
  const auto p4 = Graph::path(4);
  EXPECT_EQ(diameter(p4), std::optional<std::size_t>(3));
  EXPECT_TRUE(is_tree(p4));
  EXPECT_FALSE(is_regular(p4));
  EXPECT_EQ(degree_sequence(p4), (std::vector<std::size_t>{2, 2, 1, 1}));
  EXPECT_TRUE(universal_vertices(p4).empty());

  const auto star = Graph::star(3);
  EXPECT_EQ(universal_vertices(star), (std::vector<std::size_t>{0}));
  EXPECT_EQ(diameter(star), std::optional<std::size_t>(2));

  Graph split(4);
  split.add_edge(0, 1);
  split.add_edge(2, 3);
  EXPECT_FALSE(is_connected(split));
  EXPECT_FALSE(diameter(split).has_value());
  EXPECT_FALSE(is_tree(split));

  const auto c5 = Graph::cycle(5);
  EXPECT_TRUE(is_regular(c5));
  EXPECT_EQ(diameter(c5), std::optional<std::size_t>(2));
}

TEST(Chordality, Examples) {
  for (std::size_t n : {1, 2, 5, 9}) EXPECT_TRUE(is_chordal(Graph::complete(n)).chordal);
  const auto star = is_chordal(Graph::star(3));
  EXPECT_TRUE(star.chordal);
  EXPECT_TRUE(is_perfect_elimination_order(Graph::star(3), star.elimination_order));
  EXPECT_TRUE(is_chordal(Graph::path(6)).chordal);

  const auto c4 = Graph::cycle(4);
  const auto r = is_chordal(c4);
  EXPECT_FALSE(r.chordal);
  ASSERT_EQ(r.hole.size(), 4u);
  EXPECT_TRUE(is_induced_cycle(c4, r.hole));
  auto sorted = r.hole;
  std::sort(sorted.begin(), sorted.end());
  EXPECT_EQ(sorted, (std::vector<std::size_t>{0, 1, 2, 3}));

  auto c6 = Graph::cycle(6);
  c6.add_edge(0, 3);
  const auto r6 = is_chordal(c6);
  EXPECT_FALSE(r6.chordal);
  EXPECT_EQ(r6.hole.size(), 4u);
  EXPECT_TRUE(is_induced_cycle(c6, r6.hole));
}

TEST(Chordality, AgreesWithSimplicialDeletion) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 400; ++trial) {
    const auto g = random_graph(rng, 3 + trial % 8, 0.3 + 0.1 * (trial % 6));
    const auto r = is_chordal(g);
    EXPECT_EQ(r.chordal, oracle::chordal_by_simplicial_deletion(g));
    if (r.chordal) EXPECT_TRUE(is_perfect_elimination_order(g, r.elimination_order));
    else {
      EXPECT_GE(r.hole.size(), 4u);
      EXPECT_TRUE(is_induced_cycle(g, r.hole));
    }
  }
}

TEST(Spectrum, Examples) {
  const auto k3 = spectrum(Graph::complete(3));
  EXPECT_EQ(k3.eigenvalues, (std::vector<double>{2, -1, -1}));
  EXPECT_TRUE(k3.closed_form);
  EXPECT_EQ(spectrum(Graph(1)).eigenvalues, (std::vector<double>{0}));
  const auto k4 = spectrum(graph_of("field:p=2,dim=2"));
  EXPECT_EQ(k4.eigenvalues, (std::vector<double>{3, -1, -1, -1}));
  EXPECT_GE(k4.lambda_max, std::sqrt(3.0));

  const auto numeric = spectrum(Graph::complete(7), {}, SpectrumMethod::numeric);
  EXPECT_FALSE(numeric.closed_form);
  EXPECT_NEAR(numeric.eigenvalues[0], 6.0, 1e-9);
  for (std::size_t i = 1; i < 7; ++i) EXPECT_NEAR(numeric.eigenvalues[i], -1.0, 1e-9);
}

TEST(Spectrum, JacobiAgreesWithEigen) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const auto g = random_graph(rng, 2 + trial % 30, 0.5);
    const auto ours = spectrum(g, {}, SpectrumMethod::numeric).eigenvalues;
    const auto ref = oracle::eigen_spectrum(g);
    ASSERT_EQ(ours.size(), ref.size());
    for (std::size_t i = 0; i < ours.size(); ++i) EXPECT_NEAR(ours[i], ref[i], 1e-9);
  }
}

TEST(Spectrum, PartialModeUsesPowerIteration) {
  Limits limits;
  limits.max_spectrum = 5;
  const auto c8 = Graph::cycle(8);
  const auto r = spectrum(c8, limits);
  EXPECT_TRUE(r.partial);
  EXPECT_NEAR(r.lambda_max, 2.0, 1e-8);
  std::mt19937 rng(5);
  const auto g = random_graph(rng, 12, 0.4);
  EXPECT_NEAR(power_iteration_lambda_max(g, 1e-12), oracle::eigen_spectrum(g).front(), 1e-8);
  EXPECT_THROW(power_iteration_lambda_max(Graph::path(9), 1e-12, 3), NonConvergence);
}

TEST(Isomorphism, Examples) {
  EXPECT_TRUE(are_isomorphic(Graph::complete(3), Graph::complete(3)).isomorphic);
  const auto r = are_isomorphic(Graph::complete(2), Graph::complete(3));
  EXPECT_FALSE(r.isomorphic);
  EXPECT_EQ(r.distinguishing_invariant, "vertex count");
  EXPECT_TRUE(are_isomorphic(graph_of("kxy:p=2,preset=R/(x)"), graph_of("kxy:p=2,preset=R/(y)")).isomorphic);
  // Same degree sequence, different graphs: two triangles vs a hexagon.
  Graph triangles(6);
  for (std::size_t base : {0, 3})
    for (std::size_t i = 0; i < 3; ++i) triangles.add_edge(base + i, base + (i + 1) % 3);
  const auto c6 = are_isomorphic(triangles, Graph::cycle(6));
  EXPECT_FALSE(c6.isomorphic);
  EXPECT_EQ(c6.distinguishing_invariant, "spectrum");
}

TEST(Isomorphism, AgreesWithPermutationSearch) {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + trial % 6;
    const auto a = random_graph(rng, n, 0.5);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto same = are_isomorphic(a, permuted(a, perm));
    ASSERT_TRUE(same.isomorphic);
    EXPECT_TRUE(is_isomorphism(a, permuted(a, perm), same.mapping));
    const auto b = random_graph(rng, n, 0.5);
    const auto r = are_isomorphic(a, b);
    EXPECT_EQ(r.isomorphic, oracle::isomorphic_by_permutations(a, b));
    if (r.isomorphic) EXPECT_TRUE(is_isomorphism(a, b, r.mapping));
    EXPECT_EQ(are_isomorphic(b, a).isomorphic, r.isomorphic);
  }
}

TEST(Isomorphism, BudgetExceeded) {
  Limits limits;
  limits.iso_search_budget = 3;
  limits.max_spectrum = 1;  // skip the spectral filter so the search runs
  EXPECT_THROW(are_isomorphic(Graph::cycle(8), Graph::cycle(8), limits), SearchBudgetExceeded);
}

TEST(VertexTransitivity, Examples) {
  EXPECT_TRUE(is_vertex_transitive(Graph::complete(5)));
  EXPECT_TRUE(is_vertex_transitive(Graph::complete(2)));
  EXPECT_FALSE(is_vertex_transitive(Graph::star(3)));
  EXPECT_TRUE(is_vertex_transitive(Graph::cycle(7)));
  Limits limits;
  limits.max_transitivity_vertices = 6;
  EXPECT_THROW(is_vertex_transitive(Graph::cycle(7), limits), CapExceeded);
  EXPECT_TRUE(is_vertex_transitive(Graph::complete(70), limits));
}

TEST(VertexTransitivity, AgreesWithPermutationSearch) {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 150; ++trial) {
    const auto g = random_graph(rng, 2 + trial % 6, 0.5);
    EXPECT_EQ(is_vertex_transitive(g), oracle::transitive_by_permutations(g));
  }
  // Prism graph: regular and vertex-transitive but not complete.
  Graph prism(6);
  for (std::size_t base : {0, 3})
    for (std::size_t i = 0; i < 3; ++i) prism.add_edge(base + i, base + (i + 1) % 3);
  for (std::size_t i = 0; i < 3; ++i) prism.add_edge(i, i + 3);
  EXPECT_TRUE(is_vertex_transitive(prism));
}

TEST(Export, Dot) {
  const auto g = build_graph(enumerate_submodules(parse_module_spec("zmod:p=2,k=2,type=[2]")));
  EXPECT_EQ(export_graph(g, ExportFormat::dot), "graph G {\n  0 [label=\"<0>\"];\n  1 [label=\"<(2)>\"];\n  0 -- 1;\n}\n");
}

TEST(Export, Json) {
  const auto single = nlohmann::json::parse(export_graph(graph_of("prod:p=2,mult=[1,0]"), ExportFormat::json));
  EXPECT_TRUE(single["edges"].empty());
  EXPECT_EQ(single["vertices"].size(), 1u);
  EXPECT_EQ(single["vertices"][0]["order"], 1);

  const auto k3 = export_graph(graph_of("zmod:p=2,k=3,type=[3]"), ExportFormat::json);
  const auto doc = nlohmann::json::parse(k3);
  EXPECT_EQ(doc["edges"], nlohmann::json::parse("[[0,1],[0,2],[1,2]]"));
  EXPECT_EQ(doc["vertices"][2], nlohmann::json::parse(R"({"id":2,"label":"<(2)>","order":4})"));
  EXPECT_EQ(doc["properties"]["complete"], true);
  EXPECT_EQ(doc["properties"]["diameter"], 1);
  EXPECT_EQ(doc["properties"]["lambda_max"], 2.0);
  // Key order is part of the format.
  EXPECT_EQ(k3.substr(0, 13), "{\"vertices\":[");
  EXPECT_NE(k3.find("],\"edges\":[[0,1],[0,2],[1,2]],\"properties\":{"), std::string::npos);
}

TEST(Export, UnknownFormat) {
  EXPECT_EQ(parse_export_format("dot"), ExportFormat::dot);
  EXPECT_EQ(parse_export_format("json"), ExportFormat::json);
  EXPECT_THROW(parse_export_format("gml"), InvalidInput);
}
