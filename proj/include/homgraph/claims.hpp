#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "homgraph/graph.hpp"
#include "homgraph/lattice.hpp"
#include "homgraph/limits.hpp"
#include "homgraph/spectrum.hpp"
#include "homgraph/zoo.hpp"

namespace homgraph {

enum class ClaimStatus { confirmed, refuted, mixed, not_applicable };
std::string to_string(ClaimStatus s);

struct Witness {
  std::vector<std::string> modules;
  std::string detail;

  friend auto operator<=>(const Witness&, const Witness&) = default;
};

struct ClaimVerdict {
  std::string claim_id;
  std::string paper_ref;
  std::size_t instances_checked = 0;
  std::size_t passed = 0;
  /// Universal claims (reconstruction) are refuted by a single failing pair
  /// instead of turning mixed.
  bool universal = false;
  ClaimStatus status = ClaimStatus::not_applicable;
  std::vector<Witness> witnesses;
};

/// Status from the instance counts.
ClaimStatus derive_status(const ClaimVerdict& v);

struct ClaimInfo {
  std::string id;
  std::string ref;
  bool universal = false;
};

/// Every registry row, sorted by id.
const std::vector<ClaimInfo>& claim_registry();

/// Everything the claims need about one zoo member.
struct MemberAnalysis {
  std::string spec;
  std::string structure;
  /// Set when a cap or solver error stopped the analysis; other fields are then unset.
  std::string error;
  std::optional<SubmoduleLattice> lattice;
  Graph graph;
  std::size_t t = 0;
  std::size_t length = 0;
  bool uniserial = false;
  bool semisimple = false;
  bool complete = false;
  bool connected = false;
  bool zero_universal = false;
  bool tree = false;
  bool regular = false;
  std::optional<std::size_t> diameter;
  ChordalityResult chordal;
  SpectrumReport spectrum;
  /// Empty when the automorphism search was over its cap.
  std::optional<bool> vertex_transitive;
};

/// Members are analyzed in parallel; the output follows member order.
std::vector<MemberAnalysis> analyze_zoo(const ModuleZoo& zoo, const Limits& limits = {});

struct Step4Report {
  bool applicable = false;
  std::string reason;
  /// (a) socle vertex adjacent to every maximal-submodule vertex.
  bool socle_adjacent_to_maximals = false;
  /// (b) socle is the only nonzero proper vertex with property (a).
  bool socle_unique = false;
  /// (c) vertex 0 is the only vertex of maximum degree.
  bool zero_unique_max_degree = false;
};

Step4Report step4_socle_probe(const SubmoduleLattice& l, const Graph& g);

/// Graph isomorphism implies module isomorphism, over every member pair.
/// Not applicable over the product ring.
ClaimVerdict reconstruction_experiment(const ModuleZoo& zoo, const std::vector<MemberAnalysis>& analyses,
                                       const Limits& limits = {});
ClaimVerdict reconstruction_experiment(const ModuleZoo& zoo, const Limits& limits = {});

/// Runs every registry row whose id starts with `suite` ("all" or "" for
/// everything). Sorted by claim_id; witnesses sorted.
std::vector<ClaimVerdict> run_claim_suite(const ModuleZoo& zoo, const Limits& limits = {}, std::string_view suite = "all");
std::vector<ClaimVerdict> run_claim_suite(const ModuleZoo& zoo, const std::vector<MemberAnalysis>& analyses,
                                          const Limits& limits = {}, std::string_view suite = "all");

/// Merges per-zoo verdict lists: counts add up, witnesses are united and
/// the status is derived again.
std::vector<ClaimVerdict> aggregate_verdicts(const std::vector<std::vector<ClaimVerdict>>& runs);

/// [{"claim_id","paper_ref","instances_checked","status","witnesses":[{"modules","detail"}]}]
std::string verdicts_to_json(const std::vector<ClaimVerdict>& verdicts);
/// claim_id,status,instances,witness_count
std::string verdicts_to_csv(const std::vector<ClaimVerdict>& verdicts);

}  // namespace homgraph
