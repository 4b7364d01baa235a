#ifndef KNOTSIEVE_REDUCTION_HPP
#define KNOTSIEVE_REDUCTION_HPP

#include <climits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "knotsieve/embedding.hpp"
#include "knotsieve/planar_diagram.hpp"

namespace knotsieve {

inline constexpr int kUnboundedBridge = INT_MAX;

/// Maximal run of consecutive visits on one level along the knot, traced from
/// slot 0. The strand leaves the bounding crossing through `start_slot`,
/// passes `crossings` (over when `over`, else under) and enters the next
/// bounding crossing at `end_slot`.
struct Bridge {
  bool over = true;
  int start_slot = -1;
  int end_slot = -1;
  std::vector<int> crossings;

  int length() const noexcept { return static_cast<int>(crossings.size()); }
};

std::vector<Bridge> find_bridges(const Embedding& e);

enum class ReductionKind { kR1, kR2, kPass };
std::string_view to_string(ReductionKind k);

struct ReductionOutcome {
  ReductionKind kind = ReductionKind::kR1;
  int before_count = 0;
  int after_count = 0;
  /// Polyhedral vertex counts, filled in when a pass keeps the crossing count.
  int before_vertices = -1;
  int after_vertices = -1;
  /// Replayable description; see replay_witness.
  std::string witness;
  Embedding result;

  PlanarDiagram diagram() const { return result.to_diagram(); }
  std::string to_string() const;
};

/// A removable kink (R1) or cancellable clasp (R2).
std::optional<ReductionOutcome> find_elementary_reduction(const Embedding& e);
std::optional<ReductionOutcome> find_elementary_reduction(const PlanarDiagram& d);

/// Elementary reductions first (they are passes of length-1 bridges). Then
/// every bridge of length <= max_bridge is lifted off and redrawn along a
/// shortest path through the faces of the remaining diagram, on its own
/// level. Accepted when the path crosses fewer strands, or as many strands
/// while the polyhedral vertex count drops.
std::optional<ReductionOutcome> find_pass_move(const Embedding& e, int max_bridge = kUnboundedBridge);
std::optional<ReductionOutcome> find_pass_move(const PlanarDiagram& d,
                                               int max_bridge = kUnboundedBridge);

/// Rebuilds the result of an outcome from its witness:
///   `r1 c=K`                   remove the kink at crossing K
///   `r2 s=S`                   cancel the bigon next to slot S
///   `pass over|under a=A x=S1,S2,...`
///                              redraw the bridge leaving slot A, crossing the
///                              edges leaving S1, S2, ... from left to right
///                              (`x=-` for none)
/// Throws ParseError or InvalidDiagramError.
Embedding replay_witness(const Embedding& e, std::string_view witness);

/// Applies reductions until none is found. Each step lowers the crossing
/// count or, at equal count, the polyhedral vertex count.
Embedding reduce_fixpoint(const Embedding& e, int max_bridge = kUnboundedBridge,
                          std::vector<ReductionOutcome>* trace = nullptr);
PlanarDiagram reduce_fixpoint(const PlanarDiagram& d, int max_bridge = kUnboundedBridge,
                              std::vector<ReductionOutcome>* trace = nullptr);

/// Vertices left after repeatedly deleting monogons and loops joining
/// opposite ports and merging the two ends of every bigon. Closures of
/// algebraic tangles collapse to 0; a filled polyhedron keeps one vertex per
/// template vertex.
int polyhedral_vertex_count(const Embedding& e);

}  // namespace knotsieve

#endif  // KNOTSIEVE_REDUCTION_HPP
