#include "cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>

#include "mostar/edge_list.hpp"
#include "mostar/error.hpp"
#include "mostar/families.hpp"
#include "mostar/formulas.hpp"
#include "mostar/invariants.hpp"
#include "mostar/operators.hpp"
#include "mostar/verify.hpp"

namespace mostar::cli {
namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Graph load_checked(const std::string& path) {
  Graph g = load_edge_list(path);
  if (g.order() > kMaxOrder) {
    throw UsageError(path + ": order " + std::to_string(g.order()) + " exceeds the limit of " +
                     std::to_string(kMaxOrder));
  }
  return g;
}

void emit_graph(const Graph& g, const std::string& out_path, std::ostream& out) {
  if (out_path.empty() || out_path == "-") {
    write_edge_list(out, g);
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw UsageError("cannot write " + out_path);
  write_edge_list(f, g);
}

// ---- compute ---------------------------------------------------------------

struct ComputeOpts {
  std::string input;
  std::string index = "mostar";
  bool edges = false;
  std::string format = "text";
};

int do_compute(const ComputeOpts& o, std::ostream& out, std::ostream& err) {
  const Graph g = load_checked(o.input);
  const bool want_mo = o.index == "mostar" || o.index == "all";
  const bool want_irr = o.index == "irr" || o.index == "all";
  const bool want_irr_t = o.index == "irr-t" || o.index == "all";

  std::vector<EdgeContribution> contrib;
  if (want_mo || o.edges) {
    if (!is_connected(g)) {
      err << "error: graph is disconnected; the Mostar index is undefined\n";
      return kDisconnected;
    }
    contrib = edge_contributions(g);
  }

  std::vector<std::pair<std::string, std::int64_t>> values;
  if (want_mo) {
    std::int64_t mo = 0;
    for (const auto& c : contrib) mo += static_cast<std::int64_t>(c.contribution);
    values.emplace_back("mostar", mo);
  }
  if (want_irr) values.emplace_back("irr", albertson_irregularity(g));
  if (want_irr_t) values.emplace_back("irr-t", total_irregularity(g));

  if (o.format == "json") {
    json doc;
    doc["order"] = g.order();
    doc["size"] = g.size();
    for (const auto& [k, v] : values) doc[k] = v;
    if (o.edges) {
      json rows = json::array();
      for (const auto& c : contrib) {
        rows.push_back({{"u", c.edge.u},
                        {"v", c.edge.v},
                        {"n_u", c.n_u},
                        {"n_v", c.n_v},
                        {"contribution", c.contribution}});
      }
      doc["edges"] = std::move(rows);
    }
    out << doc.dump(2) << "\n";
  } else if (o.format == "csv") {
    out << "index,value\n";
    for (const auto& [k, v] : values) out << k << ',' << v << '\n';
    if (o.edges) {
      out << "u,v,n_u,n_v,contribution\n";
      for (const auto& c : contrib) {
        out << c.edge.u << ',' << c.edge.v << ',' << c.n_u << ',' << c.n_v << ',' << c.contribution
            << '\n';
      }
    }
  } else {
    if (values.size() == 1) {
      out << values[0].second << '\n';
    } else {
      for (const auto& [k, v] : values) out << k << ' ' << v << '\n';
    }
    if (o.edges) {
      for (const auto& c : contrib) {
        out << c.edge.u << ' ' << c.edge.v << ' ' << c.n_u << ' ' << c.n_v << ' ' << c.contribution
            << '\n';
      }
    }
  }
  return kOk;
}

// ---- generate --------------------------------------------------------------

FamilySpec parse_spec(const std::string& name, const std::vector<std::uint32_t>& params) {
  const auto family = parse_family(name);
  if (!family) throw UsageError("unknown family '" + name + "'");
  return {*family, params};
}

// ---- product ---------------------------------------------------------------

struct ProductOpts {
  std::string op;
  std::string lhs;
  std::string rhs;
  std::string third;
  std::string out;
};

int do_product(const ProductOpts& o, std::ostream& out) {
  auto need_rhs = [&] {
    if (o.rhs.empty()) throw UsageError("--op " + o.op + " needs --rhs");
    return load_checked(o.rhs);
  };
  const Graph g = load_checked(o.lhs);
  Graph result = [&] {
    if (o.op == "corona") return corona(g, need_rhs());
    if (o.op == "cartesian") return cartesian(g, need_rhs());
    if (o.op == "join") return join(g, need_rhs());
    if (o.op == "lexicographic") return lexicographic(g, need_rhs());
    if (o.op == "indu-bala") return indu_bala(g, need_rhs());
    if (o.op == "subdivision") return subdivision(g);
    if (o.op == "sve") {
      std::optional<Graph> g2;
      std::optional<Graph> g3;
      if (!o.rhs.empty()) g2 = load_checked(o.rhs);
      if (!o.third.empty()) g3 = load_checked(o.third);
      OptionalGraphRef r2 = g2 ? OptionalGraphRef(std::cref(*g2)) : std::nullopt;
      OptionalGraphRef r3 = g3 ? OptionalGraphRef(std::cref(*g3)) : std::nullopt;
      return sve_join(g, r2, r3);
    }
    throw UsageError("unknown --op '" + o.op + "'");
  }();
  if (result.order() > kMaxOrder) throw UsageError("product exceeds the order limit");
  emit_graph(result, o.out, out);
  return kOk;
}

// ---- verify ----------------------------------------------------------------

struct VerifyOpts {
  std::string suite = "all";
  std::uint32_t max_n = 8;
  std::uint64_t seed = 42;
  std::string report;
};

int do_verify(const VerifyOpts& o, std::ostream& out, std::ostream& err) {
  const auto suite = parse_suite(o.suite);
  if (!suite) {
    err << "error: unknown suite '" << o.suite << "' (expected exact, bounds, examples or all)\n";
    return kUsage;
  }
  if (o.max_n < 2) {
    err << "error: --max-n must be at least 2\n";
    return kUsage;
  }
  const VerificationReport report = run_suite(*suite, o.max_n, o.seed);
  if (!o.report.empty()) {
    std::ofstream f(o.report, std::ios::binary);
    if (!f) throw UsageError("cannot write " + o.report);
    f << report.to_json();
  }

  std::size_t discrepancies = 0;
  for (const auto& [id, t] : report.summary()) {
    if (t.violated == 0) continue;
    const ClaimInfo& info = find_claim(id);
    const bool gated = info.suite != Suite::kExamples;
    if (!gated) ++discrepancies;
    out << (gated ? "VIOLATED " : "discrepancy ") << id << ": " << t.violated << " of "
        << (t.exact + t.tight + t.holds + t.violated) << " checks\n";
  }
  out << "suite " << o.suite << ", max_n " << o.max_n << ", seed " << o.seed << ": "
      << report.corpus_names.size() << " corpus graphs, " << report.outcomes.size()
      << " outcomes, " << discrepancies << " example discrepancies, gate "
      << (report.gate_passed() ? "passed" : "FAILED") << "\n";
  return report.gate_passed() ? kOk : kGateFailed;
}

// ---- bench -----------------------------------------------------------------

// Closed form for the benchmarked family instance, when one exists.
std::optional<FormulaValue> family_formula(const FamilySpec& spec) {
  std::vector<std::int64_t> p(spec.params.begin(), spec.params.end());
  switch (spec.family) {
    case Family::kPath: return prop1(Prop1Family::kPath, p[0]);
    case Family::kCycle: return prop1(Prop1Family::kCycle, p[0]);
    case Family::kComplete: return prop1(Prop1Family::kComplete, p[0]);
    case Family::kGrid: return ex_cartesian_family(CartesianFamily::kGrid, p);
    case Family::kLadder: return ex_cartesian_family(CartesianFamily::kLadder, p);
    case Family::kHypercube: return ex_cartesian_family(CartesianFamily::kHypercube, p);
    case Family::kHamming: return ex_cartesian_family(CartesianFamily::kHamming, p);
    case Family::kWheel: return ex_wheel(p[0]);
    case Family::kStar: return ex_star(p[0] - 1);
    case Family::kCone: return ex_cone_corollary(p[0], p[1]);
    default: return std::nullopt;
  }
}

std::vector<std::uint32_t> bench_params(Family f, std::uint32_t size) {
  switch (f) {
    case Family::kCompleteBipartite:
    case Family::kGrid:
    case Family::kHamming:
    case Family::kCone: return {size, size};
    case Family::kBridgeCycle: return {size, 3};
    default: return {size};
  }
}

int do_bench(const std::string& family, const std::vector<std::uint32_t>& sizes, std::ostream& out) {
  const auto f = parse_family(family);
  if (!f) throw UsageError("unknown family '" + family + "'");
  using clock = std::chrono::steady_clock;
  out << "family size order edges mostar oracle_ms formula formula_us\n";
  for (std::uint32_t size : sizes) {
    const FamilySpec spec{*f, bench_params(*f, size)};
    const Graph g = generate(spec);
    if (g.order() > kMaxOrder) throw UsageError(to_string(spec) + " exceeds the order limit");
    auto t0 = clock::now();
    const std::optional<std::int64_t> mo =
        is_connected(g) ? std::optional<std::int64_t>(mostar(g)) : std::nullopt;
    const double oracle_ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
    t0 = clock::now();
    const auto fv = family_formula(spec);
    const double formula_us = std::chrono::duration<double, std::micro>(clock::now() - t0).count();
    out << family << ' ' << size << ' ' << g.order() << ' ' << g.size() << ' '
        << (mo ? std::to_string(*mo) : "-") << ' ' << oracle_ms << ' '
        << (fv ? std::to_string(fv->value) : "-") << ' ' << (fv ? std::to_string(formula_us) : "-")
        << '\n';
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mostar index and irregularity toolkit", "mostar"};
  app.require_subcommand(1);

  ComputeOpts compute_opts;
  auto* compute = app.add_subcommand("compute", "Compute indices of an edge-list graph");
  compute->add_option("--input", compute_opts.input, "Edge-list file")->required();
  compute->add_option("--index", compute_opts.index, "mostar, irr, irr-t or all")
      ->check(CLI::IsMember({"mostar", "irr", "irr-t", "all"}));
  compute->add_flag("--edges", compute_opts.edges, "Also print the per-edge table");
  compute->add_option("--format", compute_opts.format, "text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  std::string gen_family;
  std::vector<std::uint32_t> gen_params;
  std::string gen_out;
  auto* gen = app.add_subcommand("generate", "Write a family instance as an edge list");
  gen->add_option("--family", gen_family, "Family name")->required();
  gen->add_option("--params", gen_params, "Comma-separated parameters")->delimiter(',')->required();
  gen->add_option("--out", gen_out, "Output path (stdout if omitted)");

  ProductOpts prod_opts;
  auto* prod = app.add_subcommand("product", "Build a graph product");
  prod->add_option("--op", prod_opts.op,
                   "corona, cartesian, join, lexicographic, indu-bala, subdivision or sve")
      ->required();
  prod->add_option("--lhs", prod_opts.lhs, "First operand")->required();
  prod->add_option("--rhs", prod_opts.rhs, "Second operand");
  prod->add_option("--third", prod_opts.third, "Third operand (sve only)");
  prod->add_option("--out", prod_opts.out, "Output path (stdout if omitted)");

  VerifyOpts verify_opts;
  auto* verify = app.add_subcommand("verify", "Check every registered claim against the oracle");
  verify->add_option("--suite", verify_opts.suite, "exact, bounds, examples or all");
  verify->add_option("--max-n", verify_opts.max_n, "Largest corpus order");
  verify->add_option("--seed", verify_opts.seed, "Corpus seed");
  verify->add_option("--report", verify_opts.report, "Write the JSON report here");

  std::string bench_family;
  std::vector<std::uint32_t> bench_sizes;
  auto* bench = app.add_subcommand("bench", "Time the oracle on a family");
  bench->add_option("--family", bench_family, "Family name")->required();
  bench->add_option("--sizes", bench_sizes, "Comma-separated sizes")->delimiter(',')->required();

  auto* claims = app.add_subcommand("claims", "Print the claim registry as JSON");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (*compute) return do_compute(compute_opts, out, err);
    if (*gen) {
      emit_graph(generate(parse_spec(gen_family, gen_params)), gen_out, out);
      return kOk;
    }
    if (*prod) return do_product(prod_opts, out);
    if (*verify) return do_verify(verify_opts, out, err);
    if (*bench) return do_bench(bench_family, bench_sizes, out);
    if (*claims) {
      out << claim_registry_json();
      return kOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == Errc::kDisconnected ? kDisconnected : kUsage;
  }
  return kUsage;
}

}  // namespace mostar::cli
