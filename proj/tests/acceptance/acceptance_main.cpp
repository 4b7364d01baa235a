// Acceptance suite: one PASS/FAIL line per criterion.

#include <CLI11.hpp>

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "fixtures.hpp"
#include "knotsieve/bracket.hpp"
#include "knotsieve/determinant.hpp"
#include "knotsieve/generation.hpp"
#include "knotsieve/pipeline.hpp"
#include "knotsieve/reduction.hpp"
#include "oracles.hpp"

using namespace knotsieve;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double x, int digits = 2) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

class Failures {
 public:
  void add(const std::string& what) {
    if (count_++ < 5) std::cerr << "  failure: " << what << "\n";
  }
  int count() const { return count_; }

 private:
  int count_ = 0;
};

// Random knot diagrams with crossing counts in [lo, hi]: braid closures,
// random tangle closures and Reidemeister scrambles of small knots.
std::vector<PlanarDiagram> random_corpus(oracle::Rng& rng, int count, int lo, int hi) {
  std::vector<PlanarDiagram> out;
  std::uniform_int_distribution<int> size(lo, hi);
  while (static_cast<int>(out.size()) < count) {
    int n = size(rng);
    switch (out.size() % 3) {
      case 0:
        out.push_back(oracle::random_braid_knot(rng, n));
        break;
      case 1: {
        auto mode = rng() & 1 ? ClosureMode::kNumerator : ClosureMode::kDenominator;
        Embedding e = closure_embedding(oracle::random_tangle(rng, n), mode);
        if (e.component_count() == 1) out.push_back(e.to_diagram());
        break;
      }
      default: {
        PlanarDiagram base = rng() % 3 == 0 ? PlanarDiagram{} : rng() & 1 ? fixture::trefoil() : fixture::figure_eight();
        Embedding e = Embedding::from_diagram(base);
        for (int s = 0; s < 60 && e.crossing_count() != n; ++s) {
          auto m = fixture::random_move(e, rng, n);
          if (!m) break;
          e = apply_move(e, *m);
        }
        if (e.crossing_count() >= lo && e.crossing_count() <= hi) out.push_back(e.to_diagram());
      }
    }
  }
  return out;
}

// Every knot closure of the enumerated tangles with budget <= max_n.
template <class F>
void for_each_closure(int max_n, F&& f) {
  TangleEnumerator te;
  for (int n = 1; n <= max_n; ++n)
    generate_closures(te, n, 0, [](std::uint64_t) { return true; }, [&](const Candidate& c) {
      if (c.components == 1) f(c);
      return true;
    });
}

struct CliResult {
  int status = -1;
  std::string output;
};

CliResult run_cli(const std::string& args, const std::string& workdir) {
  const std::string log = (fs::path(workdir) / "cli.log").string();
  std::string cmd = std::string("\"") + KNOTSIEVE_CLI_PATH + "\" " + args + " > \"" + log + "\" 2>&1";
  int raw = std::system(cmd.c_str());
  CliResult r;
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  std::ifstream in(log);
  std::ostringstream ss;
  ss << in.rdbuf();
  r.output = ss.str();
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::multiset<std::string> lines_of(const std::string& path) {
  std::multiset<std::string> out;
  std::ifstream in(path, std::ios::binary);
  for (std::string line; std::getline(in, line);) out.insert(line);
  return out;
}

std::uint64_t counter_value(const std::string& report, const std::string& name) {
  auto at = report.find(name + "=");
  if (at == std::string::npos) return ~0ULL;
  return std::stoull(report.substr(at + name.size() + 1));
}

std::string q(const std::string& path) { return "\"" + path + "\""; }

// 1
Outcome oracle_equivalence() {
  auto t0 = Clock::now();
  oracle::Rng rng(1001);
  Failures bad;
  std::uint64_t checked = 0;
  for (const auto& d : random_corpus(rng, 200, 4, 14)) {
    if (bracket_dc(d) != bracket_naive(d)) bad.add(d.to_string());
    ++checked;
  }
  std::uint64_t closures = 0;
  for_each_closure(10, [&](const Candidate& c) {
    auto d = c.embedding.to_diagram();
    if (bracket_dc(c.embedding, plan_cut_order(c.embedding)) != bracket_naive(d)) bad.add(c.source);
    ++closures;
  });
  double s = seconds_since(t0);
  return {bad.count() == 0 && s < 600,
          std::to_string(checked) + " random + " + std::to_string(closures) + " closures, " +
              std::to_string(bad.count()) + " mismatches, " + fmt(s) + " s (limit 600)"};
}

// 2
Outcome invariance_suite() {
  auto t0 = Clock::now();
  oracle::Rng rng(1002);
  Failures bad;
  int runs = 0, r1_steps = 0, other_steps = 0, peak = 0;
  const LaurentPolynomial up = -LaurentPolynomial::monomial(1, 3), down = -LaurentPolynomial::monomial(1, -3);
  const std::vector<std::pair<std::string, PlanarDiagram>> bases{
      {"unknot", PlanarDiagram{}}, {"trefoil", fixture::trefoil()}, {"figure-eight", fixture::figure_eight()}};
  for (const auto& [name, base] : bases) {
    const LaurentPolynomial f0 = jones_f(base);
    for (int run = 0; run < 100; ++run, ++runs) {
      Embedding e = Embedding::from_diagram(base);
      LaurentPolynomial b = bracket_dc(e, plan_cut_order(e), 24);
      const int steps = 20 + static_cast<int>(rng() % 60);
      for (int step = 0; step < steps; ++step) {
        auto m = fixture::random_move(e, rng, 25);
        if (!m) break;
        Embedding next = apply_move(e, *m);
        LaurentPolynomial nb = bracket_dc(next, plan_cut_order(next), 24);
        bool r1 = m->kind == MoveKind::kR1Add || m->kind == MoveKind::kR1Remove;
        if (r1) {
          ++r1_steps;
          if (nb != b * up && nb != b * down) bad.add(name + " R1 factor at " + m->to_string());
        } else {
          ++other_steps;
          if (nb != b) bad.add(name + " bracket changed by " + m->to_string());
        }
        e = std::move(next);
        b = std::move(nb);
        peak = std::max(peak, e.crossing_count());
      }
      auto d = e.to_diagram();
      if (!pd_validate(d).ok()) bad.add(name + " invalid scramble");
      if (normalize_bracket(b, writhe(d)) != f0 || jones_f(d) != f0) bad.add(name + " jones changed: " + d.to_string());
    }
  }
  return {bad.count() == 0, std::to_string(runs) + " scrambles, " + std::to_string(r1_steps) + " R1 and " +
                                std::to_string(other_steps) + " R2/R3 steps, peak " + std::to_string(peak) +
                                " crossings, " + std::to_string(bad.count()) + " violations, " +
                                fmt(seconds_since(t0)) + " s"};
}

// 3
Outcome determinant_crosscheck() {
  auto t0 = Clock::now();
  oracle::Rng rng(1003);
  Failures bad;
  std::uint64_t checked = 0;
  auto check = [&](const PlanarDiagram& d, const std::string& what) {
    mpz_class g = determinant_goeritz(d);
    if (g != determinant_via_jones(d)) bad.add("goeritz != |V(-1)| for " + what);
    if (g % 2 != 1) bad.add("even determinant for " + what);
    if (g != oracle::fox_determinant(d)) bad.add("goeritz != fox for " + what);
    ++checked;
  };
  for_each_closure(9, [&](const Candidate& c) { check(c.embedding.to_diagram(), c.source); });
  for (const auto& d : random_corpus(rng, 3000, 1, 14)) check(d, d.to_string());
  if (determinant_goeritz(fixture::trefoil()) != 3) bad.add("trefoil");
  if (determinant_goeritz(fixture::figure_eight()) != 5) bad.add("figure-eight");
  if (determinant_goeritz(PlanarDiagram{}) != 1) bad.add("crossing-free unknot");
  int unknots = 0;
  for (int i = 0; i < 200; ++i) {
    Embedding e = Embedding::unknot();
    for (int s = 0; s < 40; ++s) {
      auto m = fixture::random_move(e, rng, 14);
      if (m) e = apply_move(e, *m);
    }
    auto d = e.to_diagram();
    check(d, "unknot " + d.to_string());
    if (determinant_goeritz(d) != 1) bad.add("unknot with determinant != 1");
    ++unknots;
  }
  return {bad.count() == 0, std::to_string(checked) + " diagrams (" + std::to_string(unknots) +
                                " scrambled unknots), trefoil 3, figure-eight 5, " + std::to_string(bad.count()) +
                                " disagreements, " + fmt(seconds_since(t0)) + " s"};
}

// 4
Outcome mini_run(const std::string& dir) {
  const std::string out = (fs::path(dir) / "mini.records").string();
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  auto t0 = Clock::now();
  CliResult r = run_cli("verify --max-crossings 12 --class algebraic --out " + q(out) + " --jobs " +
                            std::to_string(jobs),
                        dir);
  double s = seconds_since(t0);
  if (r.status != 0 && r.status != 1) return {false, "verify exited with " + std::to_string(r.status) + ": " + r.output};
  std::uint64_t unresolved = counter_value(r.output, "unresolved");
  std::uint64_t flagged = 0, records = 0, bad_flags = 0;
  {
    std::ifstream in(out, std::ios::binary);
    for (std::string line; std::getline(in, line);) {
      ++records;
      auto rec = VerificationRecord::parse(line);
      if (rec.stage == Stage::kUnresolved) ++unresolved;
      if (!rec.flagged) continue;
      ++flagged;
      if (!rec.f || *rec.f != LaurentPolynomial(1)) {
        ++bad_flags;
        std::cerr << "  flagged with f != 1: " << line << "\n";
      }
    }
  }
  fs::remove(out);
  std::string report = r.output;
  std::replace(report.begin(), report.end(), '\n', ' ');
  return {unresolved == 0 && bad_flags == 0 && s < 7200 && records > 0,
          std::to_string(records) + " records, " + std::to_string(flagged) + " flagged (all f = 1: " +
              (bad_flags == 0 ? "yes" : "no") + "), unresolved " + std::to_string(unresolved) + ", " + fmt(s) +
              " s on " + std::to_string(jobs) + " job(s) (limit 7200); report: " + report};
}

// 5
Outcome determinism_and_resume(const std::string& dir, const std::string& reference) {
  auto t0 = Clock::now();
  const std::string again = (fs::path(dir) / "again.records").string();
  CliResult a = run_cli("verify --max-crossings 10 --jobs 1 --out " + q(again), dir);
  if (a.status != 0) return {false, "second run exited with " + std::to_string(a.status)};
  bool identical = slurp(again) == slurp(reference);
  std::uint64_t generated = counter_value(a.output, "generated");
  fs::remove(again);

  const std::string resumed = (fs::path(dir) / "resumed.records").string();
  const std::string ck = (fs::path(dir) / "resume.ck").string();
  fs::remove(ck);
  std::string common = "verify --max-crossings 10 --jobs 2 --checkpoint-every 2000 --checkpoint " + q(ck) +
                       " --out " + q(resumed);
  CliResult killed = run_cli(common + " --halt-after " + std::to_string(generated / 2), dir);
  bool halted = killed.status == 2 && fs::exists(ck) && !fs::exists(resumed);
  CliResult rest = run_cli(common, dir);
  bool resumed_ok = rest.status == 0 && rest.output.find("resumed") != std::string::npos;
  bool same = slurp(resumed) == slurp(reference);
  bool counters = rest.output.find(a.output.substr(a.output.find("generated="),
                                                   a.output.find("\n", a.output.find("generated=")) -
                                                       a.output.find("generated="))) != std::string::npos;
  fs::remove(resumed);
  return {identical && halted && resumed_ok && same && counters,
          std::string("repeat run byte-identical: ") + (identical ? "yes" : "no") + "; halted at " +
              std::to_string(generated / 2) + "/" + std::to_string(generated) + " candidates: " +
              (halted ? "yes" : "no") + "; resumed from checkpoint: " + (resumed_ok ? "yes" : "no") +
              "; merged file identical: " + (same ? "yes" : "no") + "; counters identical: " +
              (counters ? "yes" : "no") + ", " + fmt(seconds_since(t0)) + " s"};
}

// 6
Outcome shard_soundness(const std::string& dir, const std::string& reference) {
  auto t0 = Clock::now();
  const auto want = lines_of(reference);
  std::string detail;
  bool pass = !want.empty();
  for (int k : {2, 4, 8}) {
    std::multiset<std::string> got;
    for (int i = 0; i < k; ++i) {
      const std::string part = (fs::path(dir) / ("shard" + std::to_string(i) + "of" + std::to_string(k))).string();
      CliResult r = run_cli("verify --max-crossings 10 --jobs 1 --shard " + std::to_string(i) + "/" +
                                std::to_string(k) + " --out " + q(part),
                            dir);
      if (r.status != 0) pass = false;
      auto l = lines_of(part);
      got.insert(l.begin(), l.end());
      fs::remove(part);
    }
    bool eq = got == want;
    pass &= eq;
    detail += "k=" + std::to_string(k) + (eq ? " equal; " : " DIFFERENT; ");
  }
  return {pass, std::to_string(want.size()) + " records at budgets 1..10: " + detail + fmt(seconds_since(t0)) + " s"};
}

// 7
Tangle positive_tangle(oracle::Rng& rng, int n) {
  if (n == 1 || (n <= 4 && rng() % 3 == 0)) return Tangle::integer(n);
  int a = 1 + static_cast<int>(rng() % (n - 1));
  Tangle l = positive_tangle(rng, a), r = positive_tangle(rng, n - a);
  return (rng() & 1) ? Tangle::sum(l, r) : Tangle::product(l, r);
}

Outcome performance_floor() {
  oracle::Rng rng(1007);
  std::vector<Embedding> batch;
  int rejected_width = 0;
  // Half alternating (positive leaves), half with random leaf signs.
  while (batch.size() < 10000) {
    auto mode = rng() & 1 ? ClosureMode::kNumerator : ClosureMode::kDenominator;
    Tangle t = batch.size() % 2 ? positive_tangle(rng, 23) : oracle::random_tangle(rng, 23, 4);
    Embedding e = closure_embedding(t, mode);
    if (e.component_count() != 1) continue;
    if (plan_cut_order(e).max_width() > 4) {
      ++rejected_width;
      continue;
    }
    batch.push_back(std::move(e));
  }
  double worst_single = 0, all_brackets = 0;
  for (const auto& e : batch) {
    auto t0 = Clock::now();
    volatile auto terms = bracket_dc(e, plan_cut_order(e)).term_count();
    (void)terms;
    double s = seconds_since(t0);
    worst_single = std::max(worst_single, s);
    all_brackets += s;
  }
  GenerationCursor src{DiagramClass::kAlgebraic, 23, 0};
  std::map<Stage, int> stages;
  auto t0 = Clock::now();
  for (const auto& e : batch) stages[process_candidate(e, src).stage]++;
  double total = seconds_since(t0);
  bool pass = worst_single < 0.1 && total < 60 && stages[Stage::kUnresolved] == 0;
  return {pass, "worst single bracket " + fmt(worst_single * 1000, 3) + " ms over 10000 (limit 100 ms), " +
                    fmt(all_brackets) + " s for all 10000 brackets; pipeline on 10000 diagrams " + fmt(total) +
                    " s single-threaded (limit 60 s): reduced " + std::to_string(stages[Stage::kReducedAway]) +
                    ", det-filtered " + std::to_string(stages[Stage::kDetFiltered]) + ", bracket " +
                    std::to_string(stages[Stage::kBracketComputed]) + "; " + std::to_string(rejected_width) +
                    " sampled closures skipped for width > 4"};
}

// 8
Outcome reduction_soundness() {
  auto t0 = Clock::now();
  oracle::Rng rng(1008);
  Failures bad;
  std::uint64_t checked = 0, changed = 0;
  auto check = [&](const Embedding& e, const std::string& what) {
    ++checked;
    Embedding r = reduce_fixpoint(e);
    if (r == e) return;
    ++changed;
    auto before = e.to_diagram(), after = r.to_diagram();
    if (!pd_validate(after).ok()) bad.add("invalid reduction of " + what);
    if (jones_f(before) != jones_f(after)) bad.add("jones changed for " + what);
  };
  for_each_closure(9, [&](const Candidate& c) { check(c.embedding, c.source); });
  TangleEnumerator te;
  for (int n = 10; n <= 14; ++n) {
    std::uint64_t total = 2 * te.count(n), step = std::max<std::uint64_t>(1, total / 4000);
    generate_closures(te, n, 0, [&](std::uint64_t p) { return p % step == 0; }, [&](const Candidate& c) {
      if (c.components == 1) check(c.embedding, c.source);
      return true;
    });
  }
  for (const auto& d : random_corpus(rng, 6000, 3, 14)) check(Embedding::from_diagram(d), d.to_string());
  return {bad.count() == 0, std::to_string(checked) + " diagrams up to 14 crossings, " + std::to_string(changed) +
                                " reduced, " + std::to_string(bad.count()) + " Jones mismatches, " +
                                fmt(seconds_since(t0)) + " s"};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"knotsieve acceptance suite"};
  std::string workdir = (fs::temp_directory_path() / "knotsieve_acceptance").string();
  std::vector<int> only;
  app.add_option("--workdir", workdir, "Scratch directory for CLI runs");
  app.add_option("--only", only, "Run only these criteria (1-8)");
  CLI11_PARSE(app, argc, argv);
  fs::create_directories(workdir);

  auto wanted = [&](int i) { return only.empty() || std::find(only.begin(), only.end(), i) != only.end(); };
  const std::string reference = (fs::path(workdir) / "reference.records").string();
  auto ensure_reference = [&]() -> bool {
    if (fs::exists(reference)) return true;
    return run_cli("verify --max-crossings 10 --jobs 1 --out " + q(reference), workdir).status == 0;
  };

  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "oracle equivalence", oracle_equivalence},
      {2, "invariance suite", invariance_suite},
      {3, "determinant cross-check", determinant_crosscheck},
      {4, "mini-verification run", [&] { return mini_run(workdir); }},
      {5, "determinism and resumability",
       [&] { return ensure_reference() ? determinism_and_resume(workdir, reference) : Outcome{false, "reference run failed"}; }},
      {6, "shard soundness",
       [&] { return ensure_reference() ? shard_soundness(workdir, reference) : Outcome{false, "reference run failed"}; }},
      {7, "performance floor", performance_floor},
      {8, "reduction soundness", reduction_soundness},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    if (!wanted(c.id)) continue;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << ": " << o.detail << std::endl;
  }
  fs::remove(reference);
  return failed == 0 ? 0 : 1;
}
