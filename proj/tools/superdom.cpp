// Command-line front end: invariants, constructions, products, bounds,
// family-F recognition and the theorem-verification campaigns.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "superdom/family_f.hpp"
#include "superdom/formulas.hpp"
#include "superdom/harness.hpp"
#include "superdom/io.hpp"
#include "superdom/products.hpp"
#include "superdom/solvers.hpp"

namespace {

using nlohmann::ordered_json;
using namespace superdom;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

/// Bad user input (unparseable graph, unknown id); maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Graph load(const std::string& spec) {
  try {
    return load_graph(spec);
  } catch (const std::invalid_argument& e) {
    throw UsageError("cannot read graph '" + spec + "': " + e.what());
  }
}

template <class F>
auto parse_or_usage(F&& f) {
  try {
    return f();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

void print(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

ordered_json set_json(VertexSet s) { return s.to_vector(); }

ordered_json decomposition_json(const FDecomposition& d) {
  ordered_json j;
  j["k"] = d.k();
  j["k_prime"] = d.k_prime();
  j["cliques"] = ordered_json::array();
  for (VertexSet s : d.cliques) j["cliques"].push_back(set_json(s));
  j["empties"] = ordered_json::array();
  for (VertexSet s : d.empties) j["empties"].push_back(set_json(s));
  return j;
}

ordered_json bound_report_json(const BoundReport& r) {
  ordered_json j;
  j["graph_id"] = r.graph_id;
  j["n"] = r.n;
  j["n_prime"] = r.n_prime;
  j["applicable"] = ordered_json::array();
  for (const BoundEntry& e : r.applicable) {
    j["applicable"].push_back({{"theorem_id", e.theorem_id}, {"kind", std::string(to_string(e.kind))}, {"value", e.value}});
  }
  j["gamma_sp_exact"] = r.gamma_sp_exact ? ordered_json(*r.gamma_sp_exact) : ordered_json(nullptr);
  j["consistent"] = r.consistent();
  return j;
}

std::vector<int> parse_sizes(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw UsageError("bad size list: " + csv);
    }
  }
  return out;
}

int write_report(const std::vector<TheoremCheck>& checks, const std::string& format, bool timing,
                 const std::string& out_path) {
  const ReportFormat fmt = parse_or_usage([&] { return parse_report_format(format); });
  const std::string doc = report(checks, fmt, ReportOptions{timing});
  if (out_path.empty() || out_path == "-") {
    std::cout << doc;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw UsageError("cannot write " + out_path);
    out << doc;
  }
  bool ok = true;
  for (const TheoremCheck& c : checks) {
    ok = ok && c.passed();
    std::cerr << (c.passed() ? "PASS " : "FAIL ") << to_string(c.id) << "  instances=" << c.instances
              << " skipped=" << c.skipped << " failures=" << c.failure_count << "\n";
  }
  return ok ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Super domination number toolkit: exact invariants, graph products and theorem verification"};
  app.require_subcommand(1);
  int exit_code = kExitPass;

  // compute
  auto* compute = app.add_subcommand("compute", "Compute one invariant with its witness");
  std::string inv_name;
  std::string graph_spec;
  int k = 1;
  compute->add_option("invariant", inv_name, "gamma | gamma_sp | alpha | alpha_2 | alpha_k | tau | rho")->required();
  compute->add_option("graph", graph_spec, "graph6 string or file (graph6 / edge list)")->required();
  compute->add_option("--k", k, "k for alpha_k")->check(CLI::PositiveNumber);
  compute->callback([&] {
    const InvariantKind kind = parse_or_usage([&] { return parse_invariant_kind(inv_name); });
    const Graph g = load(graph_spec);
    const auto start = std::chrono::steady_clock::now();
    const InvariantValue v = compute_invariant(g, kind, k);
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    ordered_json j;
    j["name"] = kind == InvariantKind::alpha_k ? "alpha_" + std::to_string(k) : std::string(to_string(kind));
    j["graph6"] = to_graph6(g);
    j["value"] = v.value;
    j["witness"] = set_json(v.witness);
    if (v.super_witness) {
      j["assignment"] = ordered_json::array();
      for (const auto& [u, w] : v.super_witness->assignment) j["assignment"].push_back({u, w});
    }
    j["elapsed_ms"] = ms;
    print(j);
  });

  // construct
  auto* construct_cmd = app.add_subcommand("construct", "Build a named graph and print graph6");
  std::string kind_name;
  std::vector<int> sizes;
  int copies = 1;
  construct_cmd->add_option("kind", kind_name, "path | cycle | complete | empty | complete_bipartite | "
                                               "complete_multipartite | corona_K1")
      ->required();
  construct_cmd->add_option("sizes", sizes, "order parameters")->required();
  construct_cmd->add_option("--copies", copies, "disjoint copies")->check(CLI::PositiveNumber);
  construct_cmd->callback([&] {
    const Graph one = parse_or_usage([&] { return construct(parse_graph_kind(kind_name), sizes); });
    const Graph g = copies == 1 ? one : disjoint_union(std::vector<Graph>(static_cast<std::size_t>(copies), one));
    std::cout << to_graph6(g) << "\n";
  });

  // product
  auto* product_cmd = app.add_subcommand("product", "Lexicographic product or join with its coordinate map");
  std::string op;
  std::vector<std::string> factors;
  product_cmd->add_option("op", op, "lex | join")->required()->check(CLI::IsMember({"lex", "join"}));
  product_cmd->add_option("graphs", factors, "G H [H_1 ... H_{n-1}]")->required()->expected(2, -1);
  product_cmd->callback([&] {
    const Graph g = load(factors[0]);
    std::vector<Graph> hs;
    for (std::size_t i = 1; i < factors.size(); ++i) hs.push_back(load(factors[i]));
    if (op == "join" && hs.size() != 1) throw UsageError("join takes exactly two graphs");
    const ProductGraph p = parse_or_usage([&] { return op == "join" ? join(g, hs[0]) : lex_product(g, hs); });
    ordered_json j;
    j["graph6"] = to_graph6(p.graph());
    j["order"] = p.graph().order();
    j["coordinates"] = ordered_json::array();
    for (int v = 0; v < p.graph().order(); ++v) {
      const Coord c = p.coord_of(v);
      j["coordinates"].push_back({c.copy, c.inner});
    }
    print(j);
  });

  // bounds
  auto* bounds_cmd = app.add_subcommand("bounds", "Every applicable bound and closed form for a product");
  std::string g_spec;
  std::string h_spec;
  std::string bound_op = "lex";
  bool no_exact = false;
  bounds_cmd->add_option("G", g_spec)->required();
  bounds_cmd->add_option("H", h_spec)->required();
  bounds_cmd->add_option("--op", bound_op, "lex | join")->check(CLI::IsMember({"lex", "join"}));
  bounds_cmd->add_flag("--no-exact", no_exact, "skip the exact solver");
  bounds_cmd->callback([&] {
    const Graph g = load(g_spec);
    const Graph h = load(h_spec);
    const BoundReport r = parse_or_usage(
        [&] { return bound_op == "join" ? join_bound_report(g, h, !no_exact) : lex_bound_report(g, h, !no_exact); });
    print(bound_report_json(r));
    if (!r.consistent()) exit_code = kExitFail;
  });

  // family-f
  auto* family = app.add_subcommand("family-f", "Recognize or construct members of the family F");
  family->require_subcommand(1);
  auto* recognize = family->add_subcommand("recognize", "Decompose a connected graph");
  std::string f_graph;
  recognize->add_option("graph", f_graph)->required();
  recognize->callback([&] {
    const Graph g = load(f_graph);
    const auto d = parse_or_usage([&] { return recognize_family_f(g); });
    if (d) {
      print(decomposition_json(*d));
    } else {
      std::cout << "\"not-member\"\n";
    }
  });
  auto* f_construct = family->add_subcommand("construct", "Build a member from layer sizes");
  std::string cliques_csv;
  std::string empties_csv;
  f_construct->add_option("--cliques", cliques_csv, "comma-separated clique sizes")->required();
  f_construct->add_option("--empties", empties_csv, "comma-separated companion sizes");
  f_construct->callback([&] {
    const auto c = parse_sizes(cliques_csv);
    const auto e = parse_sizes(empties_csv);
    std::cout << to_graph6(parse_or_usage([&] { return construct_family_f(c, e); })) << "\n";
  });

  // reduce-alpha
  auto* reduce = app.add_subcommand("reduce-alpha", "Recover alpha(G) from gamma_sp(G o tK2)");
  std::string r_graph;
  reduce->add_option("graph", r_graph)->required();
  reduce->callback([&] {
    const Graph g = load(r_graph);
    const ReductionTrace tr = parse_or_usage([&] { return alpha_via_reduction(g); });
    const int direct = alpha(g).value;
    ordered_json j;
    j["graph6"] = to_graph6(g);
    j["t"] = tr.t;
    j["gamma_sp_tK2"] = tr.gamma_sp_h;
    j["product_order"] = tr.product_order;
    j["gamma_sp_product"] = tr.gamma_sp_product;
    j["alpha"] = tr.alpha;
    j["alpha_direct"] = direct;
    print(j);
    if (direct != tr.alpha) exit_code = kExitFail;
  });

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "Print every labeled graph of order n as graph6");
  int en = 0;
  std::string filter_name = "all";
  enumerate->add_option("n", en)->required()->check(CLI::Range(0, Corpus::kMaxEnumerated));
  enumerate->add_option("--filter", filter_name, "all | connected | isolate-free | nonempty");
  enumerate->callback([&] {
    const Corpus c = enumerate_labeled(en, parse_or_usage([&] { return parse_corpus_filter(filter_name); }));
    for (std::uint64_t i = 0; i < c.raw_size(); ++i) {
      if (auto g = c.item(i)) std::cout << to_graph6(*g) << "\n";
    }
  });

  // verify / campaign
  std::string format = "json";
  std::string out_path;
  bool no_timing = false;
  int workers = 0;
  int max_n = 6;

  auto* verify_cmd = app.add_subcommand("verify", "Run one theorem check on its standard corpus");
  std::string theorem_name;
  verify_cmd->add_option("theorem", theorem_name)->required();
  verify_cmd->add_option("--max-n", max_n)->check(CLI::Range(1, Corpus::kMaxEnumerated));
  verify_cmd->add_option("--format", format, "json | csv | markdown");
  verify_cmd->add_option("--out", out_path, "report path (default stdout)");
  verify_cmd->add_flag("--no-timing", no_timing, "omit elapsed_ms");
  verify_cmd->add_option("--workers", workers, "worker threads (default SUPERDOM_WORKERS or all cores)");
  verify_cmd->callback([&] {
    const TheoremId id = parse_or_usage([&] { return parse_theorem_id(theorem_name); });
    CampaignConfig config{max_n, RunOptions{workers > 0 ? workers : default_workers()}};
    const TheoremId ids[] = {id};
    exit_code = write_report(run_campaign(config, ids), format, !no_timing, out_path);
  });

  auto* campaign = app.add_subcommand("campaign", "Run theorem checks over the standard corpora");
  bool all = false;
  std::vector<std::string> theorem_names;
  campaign->add_flag("--all", all, "every registered theorem");
  campaign->add_option("--theorem", theorem_names, "theorem id (repeatable)");
  campaign->add_option("--max-n", max_n)->check(CLI::Range(1, Corpus::kMaxEnumerated));
  campaign->add_option("--format", format, "json | csv | markdown");
  campaign->add_option("--out", out_path, "report path (default stdout)");
  campaign->add_flag("--no-timing", no_timing, "omit elapsed_ms");
  campaign->add_option("--workers", workers, "worker threads (default SUPERDOM_WORKERS or all cores)");
  campaign->callback([&] {
    std::vector<TheoremId> ids;
    if (all) {
      ids.assign(all_theorems().begin(), all_theorems().end());
    } else {
      for (const std::string& name : theorem_names) ids.push_back(parse_or_usage([&] { return parse_theorem_id(name); }));
    }
    if (ids.empty()) throw UsageError("campaign needs --all or at least one --theorem");
    CampaignConfig config{max_n, RunOptions{workers > 0 ? workers : default_workers()}};
    exit_code = write_report(run_campaign(config, ids), format, !no_timing, out_path);
  });

  auto* list = app.add_subcommand("list-theorems", "Print every theorem id with its statement");
  list->callback([&] {
    for (TheoremId id : all_theorems()) std::cout << to_string(id) << "\t" << theorem_statement(id) << "\n";
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return exit_code;
}
