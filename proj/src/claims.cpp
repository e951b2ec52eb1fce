#include "homgraph/claims.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>

#include "homgraph/errors.hpp"
#include "homgraph/hom.hpp"
#include "homgraph/isomorphism.hpp"
#include "homgraph/module_spec.hpp"

namespace homgraph {

std::string to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::confirmed: return "confirmed";
    case ClaimStatus::refuted: return "refuted";
    case ClaimStatus::mixed: return "mixed";
    case ClaimStatus::not_applicable: return "not-applicable";
  }
  return "?";
}

ClaimStatus derive_status(const ClaimVerdict& v) {
  if (v.instances_checked == 0) return ClaimStatus::not_applicable;
  if (v.passed == v.instances_checked) return ClaimStatus::confirmed;
  if (v.universal || v.passed == 0) return ClaimStatus::refuted;
  return ClaimStatus::mixed;
}

const std::vector<ClaimInfo>& claim_registry() {
  static const std::vector<ClaimInfo> registry = [] {
    std::vector<ClaimInfo> r{
        {"semisimple-criterion", "semisimple adjacency criterion: shared simple summand"},
        {"uniserial-complete", "uniserial modules give complete graphs"},
        {"complete-iff-uniserial.if", "complete graph characterization, uniserial implies complete"},
        {"complete-iff-uniserial.only-if", "complete graph characterization, complete implies uniserial"},
        {"connected.zero-universal", "connectedness: zero is a universal vertex"},
        {"chordal", "chordal and perfect graphs"},
        {"diameter.bound", "diameter at most two"},
        {"diameter.if", "diameter one for uniserial modules with two or more proper submodules"},
        {"diameter.only-if", "diameter one only for uniserial modules"},
        {"regular-iff-complete.if", "regularity, complete implies regular"},
        {"regular-iff-complete.only-if", "regularity, regular implies complete"},
        {"regular-iff-complete.uniserial", "regularity, regular implies uniserial"},
        {"empty-graph.simple", "empty graph: simple modules give one vertex"},
        {"empty-graph.nonempty", "empty graph: two or more proper submodules give an edge"},
        {"tree-iff-length2.if", "tree graphs, length two gives K_2"},
        {"tree-iff-length2.only-if", "tree graphs, tree implies length two"},
        {"socle-in-maximals", "socle lies in every maximal submodule"},
        {"vertex-transitivity.large", "vertex-transitivity fails above two vertices"},
        {"vertex-transitivity.small-cases", "vertex-transitive only for simple or length two modules"},
        {"kn-spectrum", "spectrum of K_n for uniserial modules"},
        {"spectral-radius", "spectral radius of R/m^n"},
        {"lambda-max-bound", "lambda_max at least sqrt(t-1)"},
        {"reconstruction", "reconstruction over Artinian local rings", true},
        {"reconstruction.step3-split", "reconstruction, split length two module k+k"},
        {"reconstruction.step4-a", "reconstruction, socle adjacent to every maximal submodule"},
        {"reconstruction.step4-b", "reconstruction, socle unique with that adjacency"},
        {"reconstruction.step4-c", "reconstruction, zero is the unique vertex of maximum degree"},
        {"non-local-remark", "reconstruction needs locality (product of fields)"},
        {"noetherian-reduction", "reduction from Noetherian local to Artinian local rings"},
        {"uniserial-reconstruction", "reconstruction for uniserial modules", true},
    };
    std::sort(r.begin(), r.end(), [](const ClaimInfo& a, const ClaimInfo& b) { return a.id < b.id; });
    return r;
  }();
  return registry;
}

namespace {

const ClaimInfo& info(std::string_view id) {
  for (const auto& c : claim_registry())
    if (c.id == id) return c;
  throw InternalInconsistency("unknown claim id " + std::string(id));
}

bool selected(std::string_view id, std::string_view suite) {
  return suite.empty() || suite == "all" || id.substr(0, suite.size()) == suite;
}

std::string describe_graph(const Graph& g) {
  std::ostringstream os;
  if (is_complete(g)) os << "K_" << g.vertex_count();
  else os << g.vertex_count() << " vertices, " << g.edge_count() << " edges";
  return os.str();
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

// Accumulates instances of one registry row.
class Tally {
 public:
  explicit Tally(std::string_view id) {
    const auto& c = info(id);
    v_.claim_id = c.id;
    v_.paper_ref = c.ref;
    v_.universal = c.universal;
  }
  void check(bool ok, std::vector<std::string> modules, const std::string& failure_detail) {
    ++v_.instances_checked;
    if (ok) ++v_.passed;
    else v_.witnesses.push_back({std::move(modules), failure_detail});
  }
  void note(std::vector<std::string> modules, std::string detail) { v_.witnesses.push_back({std::move(modules), std::move(detail)}); }
  ClaimVerdict finish() {
    std::sort(v_.witnesses.begin(), v_.witnesses.end());
    v_.witnesses.erase(std::unique(v_.witnesses.begin(), v_.witnesses.end()), v_.witnesses.end());
    v_.status = derive_status(v_);
    return v_;
  }

 private:
  ClaimVerdict v_;
};

// Multiplicity of each simple type in a node (one type over a local ring).
std::vector<std::size_t> simple_multiplicities(const SubmoduleLattice& l, std::size_t node) {
  const auto& ring = l.parent().ring();
  const auto p = static_cast<std::uint64_t>(ring.p);
  auto log_p = [p](std::uint64_t n) {
    std::size_t e = 0;
    while (n > 1) {
      n /= p;
      ++e;
    }
    return e;
  };
  const auto& nd = l.node(node);
  if (ring.kind != RingKind::product_field) return {log_p(nd.order())};
  std::vector<std::size_t> out;
  for (std::size_t g = 0; g < 2; ++g) {
    std::vector<Code> image;
    for (auto c : nd.elements) image.push_back(l.table().act(g, c));
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    out.push_back(log_p(image.size()));
  }
  return out;
}

// Whether N_i and M/N_j share a simple summand, for semisimple M.
bool shares_summand(const std::vector<std::size_t>& ni, const std::vector<std::size_t>& nj, const std::vector<std::size_t>& m) {
  for (std::size_t s = 0; s < m.size(); ++s)
    if (ni[s] > 0 && m[s] > nj[s]) return true;
  return false;
}

std::optional<std::size_t> quotient_power(const MemberAnalysis& a) {
  // R/m^n: cyclic (one generator) with the length of R/m^n.
  if (!a.lattice) return std::nullopt;
  const auto& l = *a.lattice;
  if (l.node(l.top()).generators.size() != 1) return std::nullopt;
  switch (l.parent().ring().kind) {
    case RingKind::zmod: return a.length;
    case RingKind::local_square_zero:
      if (a.length == 3) return 2;
      return std::nullopt;
    default: return std::nullopt;
  }
}

ClaimVerdict pairwise_reconstruction(std::string_view id, const ModuleZoo& zoo, const std::vector<MemberAnalysis>& analyses,
                                     const Limits& limits, bool uniserial_only) {
  Tally tally(id);
  if (!zoo.ring.is_local()) return tally.finish();
  for (std::size_t i = 0; i < analyses.size(); ++i) {
    const auto& a = analyses[i];
    if (!a.error.empty() || (uniserial_only && !a.uniserial)) continue;
    for (std::size_t j = i + 1; j < analyses.size(); ++j) {
      const auto& b = analyses[j];
      if (!b.error.empty() || (uniserial_only && !b.uniserial)) continue;
      try {
        const auto giso = are_isomorphic(a.graph, b.graph, limits);
        if (!giso.isomorphic) {
          tally.check(true, {}, "");
          continue;
        }
        const auto miso = module_isomorphism(zoo.members[i].module, zoo.members[j].module, limits);
        tally.check(miso.isomorphic, {a.spec, b.spec},
                    "isomorphic graphs " + describe_graph(a.graph) + "; modules not isomorphic: " + miso.certificate);
      } catch (const CapExceeded& e) {
        tally.note({a.spec, b.spec}, std::string("pair skipped: ") + e.what());
      } catch (const SearchBudgetExceeded& e) {
        tally.note({a.spec, b.spec}, std::string("pair undecided: ") + e.what());
      }
    }
  }
  return tally.finish();
}

}  // namespace

std::vector<MemberAnalysis> analyze_zoo(const ModuleZoo& zoo, const Limits& limits) {
  std::vector<MemberAnalysis> out;
  out.reserve(zoo.members.size());
  for (const auto& member : zoo.members) {
    MemberAnalysis a;
    a.spec = member.spec;
    a.structure = describe_structure(member.module);
    try {
      a.lattice.emplace(enumerate_submodules(member.module, limits));
      const auto& l = *a.lattice;
      a.graph = build_graph(l, limits);
      a.t = a.graph.vertex_count();
      a.length = composition_length(member.module);
      if (a.length != longest_chain(l))
        throw InternalInconsistency("composition length " + std::to_string(a.length) + " differs from the longest chain in " + a.spec);
      a.uniserial = is_uniserial(l);
      a.semisimple = is_semisimple(l);
      a.complete = is_complete(a.graph);
      a.connected = is_connected(a.graph);
      const auto uv = universal_vertices(a.graph);
      a.zero_universal = !uv.empty() && uv.front() == 0;
      a.tree = is_tree(a.graph);
      a.regular = is_regular(a.graph);
      a.diameter = diameter(a.graph);
      a.chordal = is_chordal(a.graph);
      a.spectrum = spectrum(a.graph, limits);
      try {
        a.vertex_transitive = is_vertex_transitive(a.graph, limits);
      } catch (const CapExceeded&) {
      } catch (const SearchBudgetExceeded&) {
      }
    } catch (const InternalInconsistency&) {
      throw;
    } catch (const Error& e) {
      a.error = e.what();
      a.lattice.reset();
    }
    out.push_back(std::move(a));
  }
  return out;
}

Step4Report step4_socle_probe(const SubmoduleLattice& l, const Graph& g) {
  Step4Report r;
  if (!l.parent().ring().is_local()) {
    r.reason = "ring is not local";
    return r;
  }
  if (composition_length(l.parent()) < 2) {
    r.reason = "composition length below 2";
    return r;
  }
  const auto soc = socle_node(l);
  if (soc.is_whole_module) {
    r.reason = "socle equals M";
    return r;
  }
  r.applicable = true;
  // Proper nodes are the graph vertices, in node order, so vertex == node index.
  const auto maximals = maximal_submodules(l);
  auto adjacent_to_maximals = [&](std::size_t v) {
    return std::all_of(maximals.begin(), maximals.end(), [&](std::size_t m) { return m == v || g.adjacent(v, m); });
  };
  r.socle_adjacent_to_maximals = adjacent_to_maximals(soc.index);
  std::size_t with_property = 0;
  for (std::size_t v = 1; v < g.vertex_count(); ++v)
    if (adjacent_to_maximals(v)) ++with_property;
  r.socle_unique = r.socle_adjacent_to_maximals && with_property == 1;
  const auto degrees = degree_sequence(g);
  std::size_t at_max = 0;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == degrees.front()) ++at_max;
  r.zero_unique_max_degree = g.degree(0) == degrees.front() && at_max == 1;
  return r;
}

ClaimVerdict reconstruction_experiment(const ModuleZoo& zoo, const std::vector<MemberAnalysis>& analyses, const Limits& limits) {
  return pairwise_reconstruction("reconstruction", zoo, analyses, limits, false);
}

ClaimVerdict reconstruction_experiment(const ModuleZoo& zoo, const Limits& limits) {
  return reconstruction_experiment(zoo, analyze_zoo(zoo, limits), limits);
}

std::vector<ClaimVerdict> run_claim_suite(const ModuleZoo& zoo, const Limits& limits, std::string_view suite) {
  return run_claim_suite(zoo, analyze_zoo(zoo, limits), limits, suite);
}

std::vector<ClaimVerdict> run_claim_suite(const ModuleZoo& zoo, const std::vector<MemberAnalysis>& analyses, const Limits& limits,
                                          std::string_view suite) {
  if (analyses.size() != zoo.members.size()) throw InvalidInput("analyses do not match the zoo");
  const bool local = zoo.ring.is_local();
  std::vector<ClaimVerdict> out;

  // Per-member rows: each callback sees one analyzed member.
  using MemberCheck = std::function<void(Tally&, const MemberAnalysis&, std::size_t)>;
  auto per_member = [&](std::string_view id, const MemberCheck& check) {
    if (!selected(id, suite)) return;
    Tally tally(id);
    for (std::size_t i = 0; i < analyses.size(); ++i) {
      const auto& a = analyses[i];
      if (!a.error.empty()) {
        tally.note({a.spec}, "not analyzed: " + a.error);
        continue;
      }
      check(tally, a, i);
    }
    out.push_back(tally.finish());
  };
  auto single = [&](const MemberAnalysis& a) -> std::vector<std::string> { return {a.spec}; };

  per_member("semisimple-criterion", [&](Tally& t, const MemberAnalysis& a, std::size_t) {
    if (!a.semisimple) return;
    const auto& l = *a.lattice;
    const auto whole = simple_multiplicities(l, l.top());
    std::vector<std::vector<std::size_t>> mult;
    for (auto node : l.proper_indices()) mult.push_back(simple_multiplicities(l, node));
    std::string failure;
    for (std::size_t i = 0; i < a.t && failure.empty(); ++i)
      for (std::size_t j = i + 1; j < a.t && failure.empty(); ++j) {
        const bool predicted = shares_summand(mult[i], mult[j], whole) || shares_summand(mult[j], mult[i], whole);
        if (predicted != a.graph.adjacent(i, j))
          failure = l.label(i) + " and " + l.label(j) + ": Hom adjacency " + (predicted ? "false" : "true") +
                    ", shared summand " + (predicted ? "true" : "false");
      }
    t.check(failure.empty(), single(a), failure);
  });

  per_member("uniserial-complete", [&](Tally& t, const MemberAnalysis& a, std::size_t) {
    if (a.uniserial) t.check(a.complete, single(a), "uniserial but graph is " + describe_graph(a.graph));
  });
  per_member("complete-iff-uniserial.if", [&](Tally& t, const MemberAnalysis& a, std::size_t) {
    if (a.t >= 2 && a.uniserial) t.check(a.complete, single(a), "uniserial but graph is " + describe_graph(a.graph));
  });
  per_member("complete-iff-uniserial.only-if", [&](Tally& t, const MemberAnalysis& a, std::size_t) {
    if (a.t >= 2 && a.complete)
      t.check(a.uniserial, single(a), "graph " + describe_graph(a.graph) + " is complete but " + a.structure + " is not uniserial");
  });
  per_member("connected.zero-universal", [&](Tally& t, const MemberAnalysis& a, std::size_t) {
    if (a.t >= 2)
      t.check(a.zero_universal && a.connected, single(a),
              std::string("zero universal ") + (a.zero_universal ? "yes" : "no") + ", connected " + (a.connected ? "yes" : "no"));
  });
  per_member("chordal", [&](Tally& t, const MemberAnalysis& a, std::size_t) {
    std::ostringstream hole;
    hole << "induced cycle";
    for (auto v : a.chordal.hole) hole << ' ' << v;
    t.check(a.chordal.chordal, single(a), hole.str());
  });
  per_member("diameter.bound", [&](Tally& t, const MemberAnalysis& a, std::size_t) {
    if (a.t >= 2)
      t.check(a.diameter && *a.diameter <= 2, single(a),
              "diameter " + (a.diameter ? std::to_string(*a.diameter) : std::string("infinite")));
  });
  per_member("diameter.if", [&](Tally& t, const MemberAnalysis& a, std::size_t) {
    if (a.t >= 2 && a.uniserial) t.check(a.diameter == std::optional<std::size_t>(1), single(a), "uniserial with diameter != 1");
  });
  per_member("diameter.only-if", [&](Tally& t, const MemberAnalysis& a, std::size_t) {
    if (a.diameter == std::optional<std::size_t>(1))
      t.check(a.uniserial && a.t >= 2, single(a), "diameter 1 (" + describe_graph(a.graph) + ") but " + a.structure + " is not uniserial");
  });
  per_member("regular-iff-complete.if", [&](Tally& t, const MemberAnalysis& a, std::size_t) {
    if (a.t >= 3 && a.complete) t.check(a.regular, single(a), "complete but not regular");
  });
  per_member("regular-iff-complete.only-if", [&](Tally& t, const MemberAnalysis& a, std::size_t) {
    if (a.t >= 3 && a.regular) t.check(a.complete, single(a), "regular but not complete: " + describe_graph(a.graph));
  });
  per_member("regular-iff-complete.uniserial", [&](Tally& t, const MemberAnalysis& a, std::size_t) {
    if (a.t >= 3 && a.regular)
      t.check(a.uniserial, single(a), "regular graph " + describe_graph(a.graph) + " but " + a.structure + " is not uniserial");
  });
  per_member("empty-graph.simple", [&](Tally& t, const MemberAnalysis& a, std::size_t) {
    if (a.length == 1) t.check(a.t == 1 && a.graph.edge_count() == 0, single(a), "simple module with graph " + describe_graph(a.graph));
  });
  per_member("empty-graph.nonempty", [&](Tally& t, const MemberAnalysis& a, std::size_t) {
    if (a.t >= 2) t.check(a.graph.edge_count() >= 1, single(a), "no edges on " + std::to_string(a.t) + " vertices");
  });
  per_member("tree-iff-length2.if", [&](Tally& t, const MemberAnalysis& a, std::size_t) {
    if (a.length == 2)
      t.check(a.tree && a.t == 2, single(a), "length 2 but graph is " + describe_graph(a.graph) + " with t=" + std::to_string(a.t));
  });
  per_member("tree-iff-length2.only-if", [&](Tally& t, const MemberAnalysis& a, std::size_t) {
    if (a.tree)
      t.check(a.length == 2, single(a), "graph " + describe_graph(a.graph) + " is a tree but length is " + std::to_string(a.length));
  });
  per_member("socle-in-maximals", [&](Tally& t, const MemberAnalysis& a, std::size_t) {
    if (!local) return;
    const auto soc = socle_node(*a.lattice);
    if (soc.is_whole_module) return;
    t.check(soc.inside_every_maximal, single(a),
            "socle " + a.lattice->label(soc.index) + " is not contained in every maximal submodule");
  });
  per_member("vertex-transitivity.large", [&](Tally& t, const MemberAnalysis& a, std::size_t) {
    if (a.t <= 2) return;
    if (!a.vertex_transitive) {
      t.note(single(a), "automorphism search over its cap");
      return;
    }
    t.check(!*a.vertex_transitive, single(a), "graph " + describe_graph(a.graph) + " is vertex-transitive");
  });
  per_member("vertex-transitivity.small-cases", [&](Tally& t, const MemberAnalysis& a, std::size_t) {
    if (!a.vertex_transitive || !*a.vertex_transitive) return;
    const bool expected = (a.t == 1 && a.length == 1) || (a.t == 2 && a.length == 2);
    t.check(expected, single(a),
            "vertex-transitive " + describe_graph(a.graph) + " for a module of length " + std::to_string(a.length));
  });
  per_member("kn-spectrum", [&](Tally& t, const MemberAnalysis& a, std::size_t) {
    if (!a.uniserial || a.t < 2 || a.t > limits.max_spectrum) return;
    const auto numeric = spectrum(a.graph, limits, SpectrumMethod::numeric);
    bool ok = numeric.eigenvalues.size() == a.t && std::abs(numeric.eigenvalues[0] - static_cast<double>(a.t - 1)) <= limits.tol;
    for (std::size_t i = 1; ok && i < a.t; ++i) ok = std::abs(numeric.eigenvalues[i] + 1.0) <= limits.tol;
    t.check(ok, single(a), "eigenvalues differ from {" + std::to_string(a.t - 1) + ", -1 x" + std::to_string(a.t - 1) + "}");
  });
  per_member("spectral-radius", [&](Tally& t, const MemberAnalysis& a, std::size_t) {
    const auto n = quotient_power(a);
    if (!n || *n < 2) return;
    const std::string measured = "R/m^" + std::to_string(*n) + ": measured " + describe_graph(a.graph) +
                                 ", lambda_max " + fmt(a.spectrum.lambda_max) + ", length " + std::to_string(a.length);
    t.check(a.complete, single(a), measured + "; graph is not a clique");
    const bool stated = a.t == *n - 1 && std::abs(a.spectrum.lambda_max - static_cast<double>(*n - 2)) <= limits.tol;
    t.check(stated, single(a),
            measured + "; stated K_" + std::to_string(*n - 1) + " with lambda_max " + std::to_string(*n - 2));
  });
  per_member("lambda-max-bound", [&](Tally& t, const MemberAnalysis& a, std::size_t) {
    if (a.t < 2) return;
    const double bound = std::sqrt(static_cast<double>(a.t - 1));
    t.check(a.spectrum.lambda_max + limits.tol >= bound, single(a),
            "lambda_max " + fmt(a.spectrum.lambda_max) + " below sqrt(t-1) = " + fmt(bound));
  });
  per_member("reconstruction.step3-split", [&](Tally& t, const MemberAnalysis& a, std::size_t) {
    if (!local || a.length != 2 || !a.semisimple) return;
    t.check(a.t == 3 && a.complete, single(a),
            "k+k has " + std::to_string(a.t) + " proper submodules (" + describe_graph(a.graph) + "); stated 3 (K_3)");
  });
  for (const char* probe : {"reconstruction.step4-a", "reconstruction.step4-b", "reconstruction.step4-c"}) {
    const char which = probe[std::string_view(probe).size() - 1];
    per_member(probe, [&, which](Tally& t, const MemberAnalysis& a, std::size_t) {
      if (!local) return;
      const auto r = step4_socle_probe(*a.lattice, a.graph);
      if (!r.applicable) return;
      if (which == 'a') t.check(r.socle_adjacent_to_maximals, single(a), "socle misses a maximal submodule in " + describe_graph(a.graph));
      if (which == 'b')
        t.check(r.socle_unique, single(a), "other nonzero vertices are adjacent to every maximal submodule in " + describe_graph(a.graph));
      if (which == 'c')
        t.check(r.zero_unique_max_degree, single(a), "vertex 0 shares the maximum degree in " + describe_graph(a.graph));
    });
  }
  per_member("noetherian-reduction", [&](Tally& t, const MemberAnalysis& a, std::size_t i) {
    if (zoo.ring.kind != RingKind::zmod) return;
    const auto& m = zoo.members[i].module;
    const ModulePresentation lifted(RingSpec::zmod(zoo.ring.p, zoo.ring.k + 1), m.cyclic_orders(), {}, limits.max_module_order);
    const auto g = build_graph(enumerate_submodules(lifted, limits), limits);
    t.check(g == a.graph, single(a), "graph over Z/p^" + std::to_string(zoo.ring.k + 1) + " differs from the graph over Z/p^" + std::to_string(zoo.ring.k));
  });

  if (selected("non-local-remark", suite)) {
    Tally tally("non-local-remark");
    if (!local) {
      for (std::size_t i = 0; i < analyses.size(); ++i)
        for (std::size_t j = i + 1; j < analyses.size(); ++j) {
          const auto& a = analyses[i];
          const auto& b = analyses[j];
          if (!a.error.empty() || !b.error.empty() || a.length != 1 || b.length != 1) continue;
          const auto giso = are_isomorphic(a.graph, b.graph, limits);
          const auto miso = module_isomorphism(zoo.members[i].module, zoo.members[j].module, limits);
          const bool ok = giso.isomorphic && a.t == 1 && !miso.isomorphic;
          const std::string detail = "graphs " + describe_graph(a.graph) + " and " + describe_graph(b.graph) + (giso.isomorphic ? " isomorphic" : " not isomorphic") +
                                     "; modules " + (miso.isomorphic ? "isomorphic: " : "not isomorphic: ") + miso.certificate;
          tally.check(ok, {a.spec, b.spec}, detail);
          if (ok) tally.note({a.spec, b.spec}, detail);
        }
    }
    out.push_back(tally.finish());
  }
  if (selected("reconstruction", suite)) out.push_back(reconstruction_experiment(zoo, analyses, limits));
  if (selected("uniserial-reconstruction", suite))
    out.push_back(pairwise_reconstruction("uniserial-reconstruction", zoo, analyses, limits, true));

  std::sort(out.begin(), out.end(), [](const ClaimVerdict& a, const ClaimVerdict& b) { return a.claim_id < b.claim_id; });
  return out;
}

std::vector<ClaimVerdict> aggregate_verdicts(const std::vector<std::vector<ClaimVerdict>>& runs) {
  std::map<std::string, ClaimVerdict> merged;
  for (const auto& run : runs)
    for (const auto& v : run) {
      auto [it, fresh] = merged.try_emplace(v.claim_id, v);
      if (fresh) continue;
      auto& m = it->second;
      m.instances_checked += v.instances_checked;
      m.passed += v.passed;
      m.witnesses.insert(m.witnesses.end(), v.witnesses.begin(), v.witnesses.end());
    }
  std::vector<ClaimVerdict> out;
  for (auto& [id, v] : merged) {
    std::sort(v.witnesses.begin(), v.witnesses.end());
    v.witnesses.erase(std::unique(v.witnesses.begin(), v.witnesses.end()), v.witnesses.end());
    v.status = derive_status(v);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace homgraph
