#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "knotsieve/bracket.hpp"
#include "knotsieve/determinant.hpp"
#include "knotsieve/dt_code.hpp"
#include "knotsieve/errors.hpp"
#include "knotsieve/generation.hpp"
#include "knotsieve/pipeline.hpp"
#include "knotsieve/polyhedron.hpp"
#include "knotsieve/reduction.hpp"

using namespace knotsieve;

namespace {

constexpr int kExitAborted = 2;

// PD codes from the command line, or one per line on stdin.
std::vector<PlanarDiagram> read_diagrams(const std::vector<std::string>& args) {
  std::vector<PlanarDiagram> out;
  if (!args.empty()) {
    for (const auto& a : args) out.push_back(PlanarDiagram::parse(a));
    return out;
  }
  std::string line;
  while (std::getline(std::cin, line)) {
    if (line.empty() || line[0] == '#') continue;
    out.push_back(PlanarDiagram::parse(line));
  }
  return out;
}

void parse_shard(const std::string& text, int& index, int& count) {
  auto slash = text.find('/');
  if (slash == std::string::npos) throw CLI::ValidationError("--shard", "expected i/k");
  index = std::stoi(text.substr(0, slash));
  count = std::stoi(text.substr(slash + 1));
  if (count < 1 || index < 0 || index >= count) throw CLI::ValidationError("--shard", "need 0 <= i < k");
}

std::string default_catalog() {
#ifdef KNOTSIEVE_DEFAULT_CATALOG
  return KNOTSIEVE_DEFAULT_CATALOG;
#else
  return "";
#endif
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Enumerate knot diagrams, filter them and flag trivial Jones polynomials"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "List candidate diagrams with exactly N crossings");
  int gen_n = 3;
  std::string gen_class = "algebraic", gen_catalog = default_catalog(), gen_triv = "closure", gen_shard = "0/1";
  std::uint64_t gen_start = 0, gen_limit = 0;
  bool gen_tangles = false;
  gen->add_option("-n,--crossings", gen_n, "Crossing budget")->required()->check(CLI::PositiveNumber);
  gen->add_option("--class", gen_class, "algebraic or polyhedral")->check(CLI::IsMember({"algebraic", "polyhedral"}));
  gen->add_option("--catalog", gen_catalog, "Polyhedron catalog file");
  gen->add_option("--trivializability", gen_triv, "off, slot or closure")->check(CLI::IsMember({"off", "slot", "closure"}));
  gen->add_option("--start", gen_start, "First stream position");
  gen->add_option("--limit", gen_limit, "Stop after this many lines (0: no limit)");
  gen->add_option("--shard", gen_shard, "Shard i/k of the stream");
  gen->add_flag("--tangles", gen_tangles, "List tangles instead of closures");

  // reduce
  auto* red = app.add_subcommand("reduce", "Reduce diagrams by R1, R2 and pass moves");
  std::vector<std::string> red_pd;
  int red_bridge = kUnboundedBridge;
  bool red_trace = false;
  red->add_option("pd", red_pd, "PD codes (default: one per line on stdin)");
  red->add_option("--max-bridge", red_bridge, "Longest bridge to reroute")->check(CLI::PositiveNumber);
  red->add_flag("--trace", red_trace, "Print every reduction to stderr");

  // det
  auto* det = app.add_subcommand("det", "Knot determinant from the Goeritz matrix");
  std::vector<std::string> det_pd;
  det->add_option("pd", det_pd, "PD codes (default: stdin)");

  // bracket
  auto* br = app.add_subcommand("bracket", "Kauffman bracket, f-polynomial and Jones polynomial");
  std::vector<std::string> br_pd;
  bool br_naive = false;
  int br_cap = kDefaultWidthCap;
  br->add_option("pd", br_pd, "PD codes (default: stdin)");
  br->add_flag("--naive", br_naive, "Use the full state sum instead of the sweep");
  br->add_option("--width-cap", br_cap, "Largest frontier the sweep may hold")->check(CLI::PositiveNumber);

  // verify
  auto* ver = app.add_subcommand("verify", "Run the full pipeline over crossing budgets");
  VerifyConfig cfg;
  cfg.jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  cfg.catalog = default_catalog();
  std::string ver_class = "algebraic", ver_shard = "0/1", ver_triv = "closure";
  ver->add_option("--max-crossings", cfg.max_crossings, "Largest crossing budget")->required()->check(CLI::PositiveNumber);
  ver->add_option("--min-crossings", cfg.min_crossings, "Smallest crossing budget")->check(CLI::PositiveNumber);
  ver->add_option("--class", ver_class, "algebraic, polyhedral or both")
      ->check(CLI::IsMember({"algebraic", "polyhedral", "both"}));
  ver->add_option("--shard", ver_shard, "Shard i/k of every stream");
  ver->add_option("--catalog", cfg.catalog, "Polyhedron catalog file");
  ver->add_option("--checkpoint", cfg.checkpoint, "Checkpoint file (resumes when present)");
  ver->add_option("--out", cfg.out, "Merged record file")->required();
  ver->add_option("--max-bridge", cfg.options.max_bridge, "Longest bridge to reroute")->check(CLI::PositiveNumber);
  ver->add_option("--width-cap", cfg.options.width_cap, "Frontier width cap")->check(CLI::PositiveNumber);
  ver->add_option("--progress", cfg.progress_every, "Report to stderr every N candidates per job");
  ver->add_option("--jobs", cfg.jobs, "Parallel sub-shards")->check(CLI::PositiveNumber);
  ver->add_option("--trivializability", ver_triv, "off, slot or closure")
      ->check(CLI::IsMember({"off", "slot", "closure"}));
  ver->add_option("--checkpoint-every", cfg.checkpoint_every, "Candidates between checkpoints")
      ->check(CLI::PositiveNumber);
  ver->add_option("--halt-after", cfg.halt_after, "Stop abruptly after N candidates (testing)");

  // export
  auto* ex = app.add_subcommand("export", "Write flagged diagrams from a record file");
  std::string ex_records, ex_format = "pd", ex_out;
  ex->add_option("--records", ex_records, "Record file")->required();
  ex->add_option("--format", ex_format, "pd or dt")->check(CLI::IsMember({"pd", "dt"}));
  ex->add_option("--out", ex_out, "Output file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      int si = 0, sk = 1;
      parse_shard(gen_shard, si, sk);
      std::uint64_t emitted = 0;
      auto accept = [&](std::uint64_t p) { return in_shard(p, si, sk); };
      auto emit = [&](const Candidate& c) {
        std::cout << GenerationCursor{c.diagram_class, c.budget, c.position}.to_string() << '\t' << c.source
                  << '\t' << (c.components == 1 ? c.embedding.to_diagram().to_string() : "link") << '\n';
        return gen_limit == 0 || ++emitted < gen_limit;
      };
      TangleEnumerator tangles;
      if (gen_tangles) {
        tangles.for_each(gen_n, gen_start, [&](std::uint64_t pos, const Tangle& t) {
          if (!accept(pos)) return true;
          std::cout << pos << '\t' << t.to_string() << '\n';
          return gen_limit == 0 || ++emitted < gen_limit;
        });
      } else if (gen_class == "algebraic") {
        generate_closures(tangles, gen_n, gen_start, accept, emit);
      } else {
        generate_polyhedral(tangles, gen_n, load_catalog(gen_catalog), parse_trivializability(gen_triv),
                            gen_start, accept, emit);
      }
      return 0;
    }
    if (*red) {
      for (const auto& d : read_diagrams(red_pd)) {
        require_valid(d);
        std::vector<ReductionOutcome> trace;
        PlanarDiagram r = reduce_fixpoint(d, red_bridge, &trace);
        if (red_trace)
          for (const auto& o : trace) std::cerr << o.to_string() << '\n';
        std::cout << (r.crossing_count() == 0 ? std::string("unknot (0 crossings)") : r.to_string()) << '\n';
      }
      return 0;
    }
    if (*det) {
      for (const auto& d : read_diagrams(det_pd)) {
        require_valid(d);
        std::cout << determinant_goeritz(d).get_str() << '\n';
      }
      return 0;
    }
    if (*br) {
      for (const auto& d : read_diagrams(br_pd)) {
        require_valid(d);
        LaurentPolynomial b = br_naive ? bracket_naive(d) : bracket_dc(d, plan_cut_order(d), br_cap);
        LaurentPolynomial f = normalize_bracket(b, writhe(d));
        std::cout << "bracket=" << b.to_string("A") << "\tf=" << f.to_string("A")
                  << "\tjones=" << jones_from_f(f).to_string("t") << '\n';
      }
      return 0;
    }
    if (*ver) {
      parse_shard(ver_shard, cfg.shard_index, cfg.shard_count);
      cfg.algebraic = ver_class != "polyhedral";
      cfg.polyhedral = ver_class != "algebraic";
      cfg.trivializability = parse_trivializability(ver_triv);
      RunReport report = run_verification(cfg);
      std::cout << report.to_string();
      return exit_status(report);
    }
    if (*ex) {
      std::size_t n = export_flagged(read_records(ex_records), parse_export_format(ex_format), ex_out);
      std::cout << "exported " << n << " flagged diagram" << (n == 1 ? "" : "s") << '\n';
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "knotsieve: " << e.what() << '\n';
    return kExitAborted;
  }
  return 0;
}
