#ifndef KNOTSIEVE_EMBEDDING_HPP
#define KNOTSIEVE_EMBEDDING_HPP

#include <cstdint>
#include <vector>

#include "knotsieve/planar_diagram.hpp"

namespace knotsieve {

/// Mutable combinatorial map of a link diagram.
///
/// Slot 4c+p is position p (counterclockwise) at crossing c. The under-strand
/// occupies positions 0 and 2, the over-strand 1 and 3. Unlike a PD code the
/// embedding does not fix the direction of travel; orientation is recovered by
/// tracing. Crossing-free components are counted in free_loops.
class Embedding {
 public:
  static constexpr int kUnset = -1;

  Embedding() = default;
  static Embedding unknot();
  /// Pairs slots by arc label. Throws InvalidDiagramError if a label is not
  /// used exactly twice.
  static Embedding from_diagram(const PlanarDiagram& d);
  static Embedding from_mates(std::vector<int> mate, int free_loops);

  static constexpr int crossing_of(int s) noexcept { return s >> 2; }
  static constexpr int position_of(int s) noexcept { return s & 3; }
  static constexpr int slot(int c, int p) noexcept { return 4 * c + (p & 3); }
  static constexpr int opposite(int s) noexcept { return s ^ 2; }
  static constexpr int cw(int s) noexcept { return (s & ~3) | ((s + 3) & 3); }
  static constexpr int ccw(int s) noexcept { return (s & ~3) | ((s + 1) & 3); }
  static constexpr bool is_over(int s) noexcept { return (s & 1) != 0; }

  int crossing_count() const noexcept { return static_cast<int>(mate_.size() / 4); }
  int slot_count() const noexcept { return static_cast<int>(mate_.size()); }
  int free_loops() const noexcept { return free_loops_; }
  void set_free_loops(int n) noexcept { free_loops_ = n; }
  int mate(int s) const { return mate_[s]; }
  const std::vector<int>& mates() const noexcept { return mate_; }

  void connect(int a, int b) {
    mate_[a] = b;
    mate_[b] = a;
  }
  /// Appends a crossing with unmated slots; returns its index.
  int add_crossing();
  /// Exchanges over and under at crossing c while keeping the geometry.
  void switch_crossing(int c);

  /// Removes the given crossings, joining the strands that passed through
  /// them. Closed strands left behind become free loops. Remaining crossings
  /// keep their relative order.
  void splice_out(const std::vector<int>& crossings);

  /// Face id of the region on the left of the half-edge leaving via slot s.
  struct Faces {
    std::vector<int> left_of;
    int count = 0;
  };
  Faces faces() const;

  bool is_connected() const;
  /// Connected, all slots mated, and Euler characteristic of a sphere.
  bool is_planar() const;

  /// Number of link components, including free loops.
  int component_count() const;

  /// Travel along the strand that enters at `start`. `entries` lists entered
  /// slots in order (2n of them for a knot); `entered[s]` marks entry slots.
  struct Trace {
    std::vector<int> entries;
    std::vector<std::uint8_t> entered;
  };
  Trace trace_from(int start) const;

  /// Signs of all crossings for the orientation that enters slot 0 of
  /// crossing 0. Requires a knot.
  std::vector<int> signs() const;
  int writhe() const;

  /// Canonical PD code: arc 1 enters crossing 0 at slot 0, arcs are numbered
  /// in traversal order and crossings are sorted by their first label.
  /// Throws MultiComponentError for links.
  PlanarDiagram to_diagram() const;
  /// PD code with arc 1 entering `start`.
  PlanarDiagram to_diagram_from(int start) const;

  friend bool operator==(const Embedding&, const Embedding&) = default;

 private:
  std::vector<int> mate_;
  int free_loops_ = 0;
};

}  // namespace knotsieve

#endif  // KNOTSIEVE_EMBEDDING_HPP
