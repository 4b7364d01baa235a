#ifndef KNOTSIEVE_TESTS_FIXTURES_HPP
#define KNOTSIEVE_TESTS_FIXTURES_HPP

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

#include "knotsieve/embedding.hpp"
#include "knotsieve/planar_diagram.hpp"
#include "knotsieve/reidemeister.hpp"

namespace fixture {

inline knotsieve::PlanarDiagram trefoil() {
  return knotsieve::PlanarDiagram::parse("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)");
}

inline knotsieve::PlanarDiagram figure_eight() {
  return knotsieve::PlanarDiagram::parse("X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)");
}

inline knotsieve::PlanarDiagram kink() { return knotsieve::PlanarDiagram::parse("X(1,1,2,2)"); }

// Picks a random applicable move. Adds are only offered below max_crossings.
inline std::optional<knotsieve::ReidemeisterMove> random_move(const knotsieve::Embedding& e, std::mt19937_64& rng,
                                                              int max_crossings) {
  using knotsieve::MoveKind;
  std::vector<MoveKind> kinds{MoveKind::kR3, MoveKind::kR3, MoveKind::kR1Remove, MoveKind::kR2Remove};
  if (e.crossing_count() + 1 <= max_crossings) kinds.insert(kinds.end(), 2, MoveKind::kR1Add);
  if (e.crossing_count() + 2 <= max_crossings) kinds.insert(kinds.end(), 3, MoveKind::kR2Add);
  std::shuffle(kinds.begin(), kinds.end(), rng);
  for (MoveKind k : kinds) {
    auto moves = knotsieve::applicable_moves(e, k);
    if (moves.empty()) continue;
    return moves[rng() % moves.size()];
  }
  return std::nullopt;
}

}  // namespace fixture

#endif  // KNOTSIEVE_TESTS_FIXTURES_HPP
