#ifndef KNOTSIEVE_REIDEMEISTER_HPP
#define KNOTSIEVE_REIDEMEISTER_HPP

#include <string>
#include <vector>

#include "knotsieve/embedding.hpp"
#include "knotsieve/planar_diagram.hpp"

namespace knotsieve {

enum class MoveKind { kR1Add, kR1Remove, kR2Add, kR2Remove, kR3 };

/// A Reidemeister move located by slot indices of an Embedding (for a PD code,
/// slot 4c+p is position p of the c-th listed crossing).
///
///   kR1Add     kink on the edge leaving slot `a` (ignored on a crossing-free
///              unknot), on the `left` or right of travel, with crossing `sign`.
///   kR1Remove  remove the kink at crossing `a`.
///   kR2Add     push the edge leaving `a` across the edge leaving `b`; both
///              half-edges must bound the same face on their left. The pushed
///              strand goes over when `sign` > 0.
///   kR2Remove  cancel the bigon whose boundary contains the half-edge leaving `a`.
///   kR3        slide the triangle side leaving `a` across the opposite crossing.
struct ReidemeisterMove {
  MoveKind kind = MoveKind::kR1Add;
  int a = 0;
  int b = 0;
  int sign = 1;
  bool left = true;

  std::string to_string() const;
  friend bool operator==(const ReidemeisterMove&, const ReidemeisterMove&) = default;
};

bool is_applicable(const Embedding& e, const ReidemeisterMove& m);
/// Throws InvalidDiagramError when the move does not apply.
Embedding apply_move(const Embedding& e, const ReidemeisterMove& m);
PlanarDiagram apply_reidemeister(const PlanarDiagram& d, const ReidemeisterMove& m);

/// All applicable moves of one kind, in slot order. kR1Add and kR2Add list
/// every location with both sides/levels and signs.
std::vector<ReidemeisterMove> applicable_moves(const Embedding& e, MoveKind kind);

/// Crossing index of a removable kink, or -1.
int find_kink(const Embedding& e);
/// A slot on the boundary of a cancellable bigon, or -1.
int find_clasp(const Embedding& e);

}  // namespace knotsieve

#endif  // KNOTSIEVE_REIDEMEISTER_HPP
