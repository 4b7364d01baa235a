#include <gtest/gtest.h>

#include <map>
#include <set>

#include "fixtures.hpp"
#include "knotsieve/bracket.hpp"
#include "knotsieve/errors.hpp"
#include "knotsieve/generation.hpp"
#include "knotsieve/polyhedron.hpp"
#include "knotsieve/reduction.hpp"
#include "oracles.hpp"

using namespace knotsieve;

namespace {

Embedding add_kinks(Embedding e, int count, oracle::Rng& rng) {
  for (int i = 0; i < count; ++i) {
    auto moves = applicable_moves(e, MoveKind::kR1Add);
    e = apply_move(e, moves[rng() % moves.size()]);
  }
  return e;
}

bool lex_smaller(const ReductionOutcome& o) {
  if (o.after_count != o.before_count) return o.after_count < o.before_count;
  return o.after_vertices >= 0 && o.after_vertices < o.before_vertices;
}

// Corpus of knot diagrams: braid closures, tangle closures and scrambles.
std::vector<PlanarDiagram> corpus(oracle::Rng& rng, int count, int max_crossings) {
  std::vector<PlanarDiagram> out;
  while (static_cast<int>(out.size()) < count) {
    int n = 3 + static_cast<int>(rng() % (max_crossings - 2));
    switch (out.size() % 3) {
      case 0:
        out.push_back(oracle::random_braid_knot(rng, n));
        break;
      case 1: {
        Embedding e = closure_embedding(oracle::random_tangle(rng, n), ClosureMode::kDenominator);
        if (e.component_count() == 1) out.push_back(e.to_diagram());
        break;
      }
      default: {
        Embedding e = Embedding::from_diagram(fixture::figure_eight());
        for (int s = 0; s < 20; ++s) {
          auto m = fixture::random_move(e, rng, max_crossings);
          if (!m) break;
          e = apply_move(e, *m);
        }
        out.push_back(e.to_diagram());
      }
    }
  }
  return out;
}

}  // namespace

TEST(Bridges, PartitionCrossingsOnEachLevel) {
  oracle::Rng rng(61);
  for (int i = 0; i < 60; ++i) {
    auto d = oracle::random_braid_knot(rng, 3 + i % 10);
    Embedding e = Embedding::from_diagram(d);
    std::map<bool, std::multiset<int>> seen;
    for (const auto& b : find_bridges(e)) {
      EXPECT_GE(b.length(), 1);
      for (int c : b.crossings) seen[b.over].insert(c);
    }
    for (bool level : {true, false}) {
      std::multiset<int> all;
      for (int c = 0; c < e.crossing_count(); ++c) all.insert(c);
      EXPECT_EQ(seen[level], all) << d.to_string();
    }
  }
  Embedding t = Embedding::from_diagram(fixture::trefoil());
  for (const auto& b : find_bridges(t)) EXPECT_EQ(b.length(), 1);
}

TEST(Elementary, Examples) {
  auto k = find_elementary_reduction(fixture::kink());
  ASSERT_TRUE(k.has_value());
  EXPECT_EQ(k->kind, ReductionKind::kR1);
  EXPECT_EQ(k->before_count, 1);
  EXPECT_EQ(k->after_count, 0);
  EXPECT_EQ(k->result.crossing_count(), 0);

  Embedding e = Embedding::from_diagram(fixture::trefoil());
  auto adds = applicable_moves(e, MoveKind::kR2Add);
  ASSERT_FALSE(adds.empty());
  for (std::size_t i = 0; i < adds.size(); i += 3) {
    Embedding clasped = apply_move(e, adds[i]);
    auto r = find_elementary_reduction(clasped);
    ASSERT_TRUE(r.has_value());
    EXPECT_EQ(r->kind, ReductionKind::kR2);
    EXPECT_EQ(r->after_count, 3);
    EXPECT_TRUE(pd_validate(r->diagram()).ok());
  }
  EXPECT_FALSE(find_elementary_reduction(fixture::trefoil()).has_value());
  EXPECT_FALSE(find_elementary_reduction(fixture::figure_eight()).has_value());
}

TEST(PassMove, TrefoilHasNone) {
  for (int m : {1, 2, 3, kUnboundedBridge}) {
    EXPECT_FALSE(find_pass_move(fixture::trefoil(), m).has_value());
    EXPECT_FALSE(find_pass_move(fixture::figure_eight(), m).has_value());
  }
}

TEST(PassMove, SubsumesElementaryReductions) {
  oracle::Rng rng(62);
  int fired = 0;
  for (const auto& d : corpus(rng, 150, 12)) {
    auto el = find_elementary_reduction(d);
    if (!el) continue;
    ++fired;
    for (int m : {1, kUnboundedBridge}) {
      auto pm = find_pass_move(d, m);
      ASSERT_TRUE(pm.has_value()) << d.to_string();
      EXPECT_LT(pm->after_count, pm->before_count);
    }
  }
  EXPECT_GT(fired, 20);
}

// A genuine pass: a 7-crossing closure without kinks or clasps whose long
// bridge reroutes across fewer strands.
TEST(PassMove, ReroutesLongBridge) {
  TangleEnumerator te;
  int found = 0;
  generate_closures(te, 7, 0, [](std::uint64_t) { return true; }, [&](const Candidate& c) {
    if (c.components != 1 || find_elementary_reduction(c.embedding)) return true;
    auto pm = find_pass_move(c.embedding);
    if (!pm || pm->after_count >= pm->before_count) return true;
    EXPECT_EQ(pm->kind, ReductionKind::kPass);
    EXPECT_EQ(pm->witness.rfind("pass ", 0), 0u);
    auto before = c.embedding.to_diagram();
    auto after = pm->diagram();
    EXPECT_TRUE(pd_validate(after).ok());
    EXPECT_EQ(jones_f(after), jones_f(before)) << c.source;
    EXPECT_EQ(replay_witness(c.embedding, pm->witness), pm->result);
    return ++found < 5;
  });
  EXPECT_EQ(found, 5);
}

TEST(Fixpoint, Examples) {
  oracle::Rng rng(63);
  Embedding five = add_kinks(Embedding::unknot(), 5, rng);
  ASSERT_EQ(five.crossing_count(), 5);
  std::vector<ReductionOutcome> trace;
  EXPECT_EQ(reduce_fixpoint(five.to_diagram(), kUnboundedBridge, &trace), PlanarDiagram{});
  EXPECT_EQ(trace.size(), 5u);
  for (const auto& o : trace) EXPECT_EQ(o.kind, ReductionKind::kR1);

  EXPECT_EQ(diagram_key(reduce_fixpoint(fixture::trefoil())), diagram_key(fixture::trefoil()));

  Embedding f8 = Embedding::from_diagram(fixture::figure_eight());
  for (const auto& m : applicable_moves(f8, MoveKind::kR2Add)) {
    Embedding r = apply_move(f8, m);
    EXPECT_EQ(diagram_key(reduce_fixpoint(r.to_diagram())), diagram_key(fixture::figure_eight()));
  }
}

TEST(Witness, RejectsGarbage) {
  Embedding t = Embedding::from_diagram(fixture::trefoil());
  EXPECT_THROW(replay_witness(t, ""), ParseError);
  EXPECT_THROW(replay_witness(t, "r3 c=0"), ParseError);
  EXPECT_THROW(replay_witness(t, "r1 c=x"), ParseError);
  EXPECT_THROW(replay_witness(t, "r1 c=0"), InvalidDiagramError);
}

TEST(ReductionProperty, JonesPreservedAndTraceReplays) {
  oracle::Rng rng(64);
  int changed = 0;
  for (const auto& d : corpus(rng, 240, 14)) {
    std::vector<ReductionOutcome> trace;
    Embedding start = Embedding::from_diagram(d);
    Embedding end = reduce_fixpoint(start, kUnboundedBridge, &trace);
    EXPECT_LE(trace.size(), static_cast<std::size_t>(2 * d.crossing_count()));
    Embedding cur = start;
    for (const auto& o : trace) {
      EXPECT_TRUE(lex_smaller(o)) << o.to_string();
      EXPECT_EQ(o.before_count, cur.crossing_count());
      EXPECT_EQ(replay_witness(cur, o.witness), o.result) << o.to_string();
      cur = o.result;
    }
    EXPECT_EQ(cur, end);
    if (trace.empty()) continue;
    ++changed;
    auto after = end.to_diagram();
    EXPECT_TRUE(pd_validate(after).ok());
    EXPECT_EQ(jones_f(after), jones_f(d)) << d.to_string();
  }
  EXPECT_GT(changed, 50);
}

TEST(VertexCount, AlgebraicAndPolyhedral) {
  oracle::Rng rng(65);
  for (int i = 0; i < 100; ++i) {
    Embedding e = closure_embedding(oracle::random_tangle(rng, 2 + i % 12), ClosureMode::kNumerator);
    EXPECT_EQ(polyhedral_vertex_count(e), 0);
  }
  auto cat = load_catalog(KNOTSIEVE_CATALOG);
  for (const auto& p : cat) {
    EXPECT_EQ(polyhedral_vertex_count(polyhedron_graph(p)), p.vertex_count()) << p.name;
    std::vector<Tangle> slots(p.vertex_count(), Tangle::integer(1));
    slots[0] = Tangle::parse("2*2");
    slots[1] = Tangle::integer(-3);
    EXPECT_EQ(polyhedral_vertex_count(polyhedron_embedding(p, slots)), p.vertex_count()) << p.name;
  }
}

// Every diagram the reduction stage removes reappears at its reduced size:
// either literally among that budget's closures, or (when the pass leaves the
// closure family) as a knot whose Jones polynomial some surviving smaller
// algebraic or polyhedral diagram already carries.
TEST(ReductionProperty, EliminatedDiagramsReplayAtSmallerBudget) {
  TangleEnumerator te;
  auto cat = load_catalog(KNOTSIEVE_CATALOG);
  std::map<int, std::set<std::string>> keys, survivors;
  std::uint64_t literal = 0, by_invariant = 0;
  for (int n = 1; n <= 10; ++n) {
    generate_polyhedral(te, n, cat, TrivializabilityMode::kClosure, 0, [](std::uint64_t) { return true; },
                        [&](const Candidate& c) {
                          if (c.components == 1 && !find_pass_move(c.embedding))
                            survivors[n].insert(jones_f(c.embedding.to_diagram()).to_string());
                          return true;
                        });
    generate_closures(te, n, 0, [](std::uint64_t) { return true; }, [&](const Candidate& c) {
      if (c.components != 1) return true;
      Embedding r = reduce_fixpoint(c.embedding);
      keys[n].insert(diagram_key(c.embedding.to_diagram()));
      if (r.crossing_count() == n) {
        survivors[n].insert(jones_f(c.embedding.to_diagram()).to_string());
        return true;
      }
      int m = r.crossing_count();
      if (m == 0) return true;
      auto rd = r.to_diagram();
      if (keys[m].count(diagram_key(rd))) {
        ++literal;
        return true;
      }
      std::string f = jones_f(rd).to_string();
      bool seen = false;
      for (int q = 1; q <= m && !seen; ++q) seen = survivors[q].count(f) > 0;
      if (seen)
        ++by_invariant;
      else
        ADD_FAILURE() << c.source << " reduces to an unseen " << m << "-crossing knot " << rd.to_string();
      return true;
    });
  }
  EXPECT_GT(literal, 10000u);
  RecordProperty("literal", std::to_string(literal));
  RecordProperty("by_invariant", std::to_string(by_invariant));
}
