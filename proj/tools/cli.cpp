#include "cli.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "homgraph/claims.hpp"
#include "homgraph/errors.hpp"
#include "homgraph/graph.hpp"
#include "homgraph/hom.hpp"
#include "homgraph/lattice.hpp"
#include "homgraph/module_spec.hpp"
#include "homgraph/spectrum.hpp"
#include "homgraph/zoo.hpp"

namespace homgraph::cli {
namespace {

struct RunConfig {
  std::vector<std::string> specs;
  Limits limits;
  bool json = false;
  bool dot = false;
  std::string format = "json";
  std::string out_dir;
  std::string ring;
  std::int64_t p = 2;
  int kk = 0;
  std::size_t bound = 0;
  std::string suite = "all";
};

void add_limits(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--max-module-order", cfg.limits.max_module_order, "Largest module order to enumerate")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--max-lattice", cfg.limits.max_lattice, "Largest submodule lattice")->check(CLI::PositiveNumber);
  cmd->add_option("--max-spectrum", cfg.limits.max_spectrum, "Largest graph for the full eigensolver")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--tol", cfg.limits.tol, "Eigenvalue tolerance")->check(CLI::PositiveNumber);
  cmd->add_option("--out", cfg.out_dir, "Directory for output artifacts");
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string number(double x) {
  if (std::abs(x) < 5e-13) x = 0.0;
  std::ostringstream os;
  os << std::setprecision(12) << x;
  return os.str();
}

std::string describe(const Graph& g) {
  if (is_complete(g)) return "K_" + std::to_string(g.vertex_count());
  return std::to_string(g.vertex_count()) + " vertices, " + std::to_string(g.edge_count()) + " edges";
}

void emit(const RunConfig& cfg, const std::string& file, const std::string& text, std::ostream& out) {
  if (cfg.out_dir.empty()) {
    out << text;
    return;
  }
  std::filesystem::create_directories(cfg.out_dir);
  std::ofstream f(std::filesystem::path(cfg.out_dir) / file, std::ios::binary);
  if (!f) throw InvalidInput("cannot write " + file + " in " + cfg.out_dir);
  f << text;
}

struct Built {
  ModulePresentation module;
  SubmoduleLattice lattice;
  Graph graph;
};

Built build(const std::string& spec, const Limits& limits) {
  auto m = parse_module_spec(spec, limits);
  auto l = enumerate_submodules(m, limits);
  auto g = build_graph(l, limits);
  return {std::move(m), std::move(l), std::move(g)};
}

void cmd_analyze(const RunConfig& cfg, std::ostream& out) {
  const auto b = build(cfg.specs.at(0), cfg.limits);
  if (cfg.dot) return emit(cfg, "graph.dot", export_graph(b.graph, ExportFormat::dot, cfg.limits), out);
  if (cfg.json) return emit(cfg, "graph.json", export_graph(b.graph, ExportFormat::json, cfg.limits), out);
  const auto& g = b.graph;
  std::ostringstream os;
  os << "module: " << describe_structure(b.module) << '\n';
  os << "ring: " << b.module.ring().name() << '\n';
  os << "order: " << b.module.order() << '\n';
  os << "proper submodules (t): " << g.vertex_count() << '\n';
  os << "composition length: " << composition_length(b.module) << '\n';
  os << "uniserial: " << yes_no(is_uniserial(b.lattice)) << '\n';
  os << "semisimple: " << yes_no(is_semisimple(b.lattice)) << '\n';
  os << "graph: " << describe(g) << '\n';
  os << "edges: " << g.edge_count() << '\n';
  os << "complete: " << yes_no(is_complete(g)) << '\n';
  os << "connected: " << yes_no(is_connected(g)) << '\n';
  const auto d = diameter(g);
  os << "diameter: " << (d ? std::to_string(*d) : std::string("infinite")) << '\n';
  os << "chordal: " << yes_no(is_chordal(g).chordal) << '\n';
  os << "tree: " << yes_no(is_tree(g)) << '\n';
  os << "regular: " << yes_no(is_regular(g)) << '\n';
  os << "universal vertices:";
  for (auto v : universal_vertices(g)) os << ' ' << v;
  os << '\n';
  const auto s = spectrum(g, cfg.limits);
  os << "lambda_max: " << number(s.lambda_max) << (s.partial ? " (power iteration)" : "") << '\n';
  emit(cfg, "analyze.txt", os.str(), out);
}

void cmd_graph(const RunConfig& cfg, std::ostream& out) {
  const auto b = build(cfg.specs.at(0), cfg.limits);
  const auto format = parse_export_format(cfg.format);
  emit(cfg, format == ExportFormat::dot ? "graph.dot" : "graph.json", export_graph(b.graph, format, cfg.limits), out);
}

void cmd_spectrum(const RunConfig& cfg, std::ostream& out) {
  const auto b = build(cfg.specs.at(0), cfg.limits);
  const auto s = spectrum(b.graph, cfg.limits);
  std::ostringstream os;
  const std::size_t t = b.graph.vertex_count();
  if (s.partial) os << "partial: t=" << t << " exceeds --max-spectrum, lambda_max only\n";
  for (double e : s.eigenvalues) os << number(e) << '\n';
  if (t >= 2) {
    const double bound = std::sqrt(static_cast<double>(t - 1));
    os << "bound: lambda_max " << number(s.lambda_max) << " >= sqrt(t-1) = " << number(bound) << ": "
       << (s.lambda_max + cfg.limits.tol >= bound ? "satisfied" : "violated") << '\n';
  }
  emit(cfg, "spectrum.txt", os.str(), out);
}

void cmd_homtest(const RunConfig& cfg, std::ostream& out) {
  const auto a = parse_module_spec(cfg.specs.at(0), cfg.limits);
  const auto b = parse_module_spec(cfg.specs.at(1), cfg.limits);
  const auto solver = hom_structure(a, b);
  std::ostringstream os;
  os << "solver: " << format_hom(solver) << '\n';
  if (a.order() <= cfg.limits.max_oracle_order) {
    const auto oracle = hom_oracle(a, b, cfg.limits);
    os << "oracle: " << format_hom(oracle) << '\n';
    if (!(oracle == solver)) {
      out << os.str();
      throw InternalInconsistency("solver " + format_hom(solver) + " and oracle " + format_hom(oracle) + " disagree");
    }
  } else {
    os << "oracle: skipped (|A| = " << a.order() << " above " << cfg.limits.max_oracle_order << ")\n";
  }
  emit(cfg, "homtest.txt", os.str(), out);
}

struct ZooRequest {
  RingSpec ring;
  std::size_t bound;
};

std::vector<ZooRequest> zoo_requests(const RunConfig& cfg) {
  auto default_bound = [](RingKind k) -> std::size_t {
    switch (k) {
      case RingKind::zmod: return 5;
      case RingKind::prime_field: return 3;
      case RingKind::product_field: return 4;
      case RingKind::local_square_zero: return 3;
    }
    return 3;
  };
  auto make = [&](RingKind kind) {
    RingSpec r{kind, cfg.p, 1};
    if (kind == RingKind::zmod) r.k = cfg.kk > 0 ? cfg.kk : 5;
    r.validate();
    return ZooRequest{r, cfg.bound > 0 ? cfg.bound : default_bound(kind)};
  };
  if (cfg.ring.empty() || cfg.ring == "all")
    return {make(RingKind::zmod), make(RingKind::prime_field), make(RingKind::product_field), make(RingKind::local_square_zero)};
  if (cfg.ring == "zmod") return {make(RingKind::zmod)};
  if (cfg.ring == "field") return {make(RingKind::prime_field)};
  if (cfg.ring == "prod") return {make(RingKind::product_field)};
  if (cfg.ring == "kxy") return {make(RingKind::local_square_zero)};
  throw InvalidInput("unknown ring '" + cfg.ring + "' (expected zmod, field, prod, kxy or all)");
}

void cmd_verify(const RunConfig& cfg, std::ostream& out, bool reconstruction_only) {
  std::vector<std::vector<ClaimVerdict>> runs;
  for (const auto& req : zoo_requests(cfg)) {
    const auto zoo = enumerate_zoo(req.ring, req.bound, cfg.limits);
    auto verdicts = run_claim_suite(zoo, cfg.limits, reconstruction_only ? "reconstruction" : cfg.suite);
    if (reconstruction_only)
      std::erase_if(verdicts, [](const ClaimVerdict& v) { return v.claim_id != "reconstruction"; });
    runs.push_back(std::move(verdicts));
  }
  const auto verdicts = aggregate_verdicts(runs);
  const auto json = verdicts_to_json(verdicts);
  if (!cfg.out_dir.empty()) {
    std::filesystem::create_directories(cfg.out_dir);
    std::ofstream(std::filesystem::path(cfg.out_dir) / "verdicts.json", std::ios::binary) << json;
    std::ofstream(std::filesystem::path(cfg.out_dir) / "verdicts.csv", std::ios::binary) << verdicts_to_csv(verdicts);
  }
  if (cfg.json) {
    out << json;
    return;
  }
  for (const auto& v : verdicts)
    out << std::left << std::setw(34) << v.claim_id << ' ' << std::setw(15) << to_string(v.status)
        << " instances=" << v.instances_checked << " witnesses=" << v.witnesses.size() << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Homomorphism submodule graphs of finite modules"};
  app.require_subcommand(1);

  auto* analyze = app.add_subcommand("analyze", "Module, lattice and graph summary");
  analyze->add_option("spec", cfg.specs, "Module spec")->required()->expected(1);
  auto* json_flag = analyze->add_flag("--json", cfg.json, "Emit graph JSON");
  analyze->add_flag("--dot", cfg.dot, "Emit graph DOT")->excludes(json_flag);
  add_limits(analyze, cfg);

  auto* graph = app.add_subcommand("graph", "Export the graph");
  graph->add_option("spec", cfg.specs, "Module spec")->required()->expected(1);
  graph->add_option("--format", cfg.format, "dot or json")->check(CLI::IsMember({"dot", "json"}));
  add_limits(graph, cfg);

  auto* spec_cmd = app.add_subcommand("spectrum", "Adjacency eigenvalues");
  spec_cmd->add_option("spec", cfg.specs, "Module spec")->required()->expected(1);
  add_limits(spec_cmd, cfg);

  auto* homtest = app.add_subcommand("homtest", "Hom(A, B) from the solver and the oracle");
  homtest->add_option("specs", cfg.specs, "Module specs A and B")->required()->expected(2);
  add_limits(homtest, cfg);

  CLI::App* verify = app.add_subcommand("verify", "Run the claim suite over module zoos");
  CLI::App* reconstruct = app.add_subcommand("reconstruct", "Reconstruction experiment only");
  for (auto* cmd : {verify, reconstruct}) {
    cmd->add_option("--ring", cfg.ring, "zmod, field, prod, kxy or all (default: all four zoos)");
    cmd->add_option("--p", cfg.p, "Residue characteristic")->check(CLI::PositiveNumber);
    cmd->add_option("--kk", cfg.kk, "Exponent k of Z/p^k")->check(CLI::PositiveNumber);
    cmd->add_option("--bound", cfg.bound, "Zoo size bound")->check(CLI::PositiveNumber);
    cmd->add_flag("--json", cfg.json, "Print verdict JSON instead of the summary");
    add_limits(cmd, cfg);
  }
  verify->add_option("--suite", cfg.suite, "Claim id prefix, or all");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  }

  std::ostringstream buffer;
  int code = ok;
  try {
    if (analyze->parsed()) cmd_analyze(cfg, buffer);
    else if (graph->parsed()) cmd_graph(cfg, buffer);
    else if (spec_cmd->parsed()) cmd_spectrum(cfg, buffer);
    else if (homtest->parsed()) cmd_homtest(cfg, buffer);
    else if (verify->parsed()) cmd_verify(cfg, buffer, false);
    else if (reconstruct->parsed()) cmd_verify(cfg, buffer, true);
  } catch (const InternalInconsistency& e) {
    err << "internal inconsistency: " << e.what() << '\n';
    code = inconsistency;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << '\n';
    code = cap_exceeded;
  } catch (const NonConvergence& e) {
    err << "no convergence: " << e.what() << '\n';
    code = cap_exceeded;
  } catch (const SearchBudgetExceeded& e) {
    err << "search budget: " << e.what() << '\n';
    code = cap_exceeded;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    code = usage;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    code = usage;
  }
  out << buffer.str();
  return code;
}

}  // namespace homgraph::cli
