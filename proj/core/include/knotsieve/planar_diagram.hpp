#ifndef KNOTSIEVE_PLANAR_DIAGRAM_HPP
#define KNOTSIEVE_PLANAR_DIAGRAM_HPP

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace knotsieve {

/// A knot diagram in PD notation.
///
/// Each crossing lists four arc labels counterclockwise, starting with the
/// incoming under-strand. The crossing-free diagram (empty list) is the
/// unknot. Labels are 1..2n for n crossings, each used exactly twice.
struct PlanarDiagram {
  using Crossing = std::array<int, 4>;

  std::vector<Crossing> crossings;

  int crossing_count() const noexcept { return static_cast<int>(crossings.size()); }
  int arc_count() const noexcept { return 2 * crossing_count(); }

  /// `X(a,b,c,d)` tuples separated by spaces; the unknot is the empty string.
  std::string to_string() const;
  static PlanarDiagram parse(std::string_view text);

  friend bool operator==(const PlanarDiagram&, const PlanarDiagram&) = default;
  friend auto operator<=>(const PlanarDiagram&, const PlanarDiagram&) = default;
};

enum class Violation {
  kBadLabel,
  kDuplicateArcCount,
  kDisconnected,
  kNonPlanar,
  kMultiComponent,
  kInconsistentOrientation,
};

std::string_view to_string(Violation v);

struct ValidationResult {
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
  bool has(Violation v) const;
  std::string describe() const;
};

ValidationResult pd_validate(const PlanarDiagram& d);

/// Throws InvalidDiagramError (or MultiComponentError) unless pd_validate is ok.
void require_valid(const PlanarDiagram& d);

/// Crossing signs (+1 / -1) in crossing order, using the orientation in which
/// every under-strand runs from position 0 to position 2.
std::vector<int> crossing_signs(const PlanarDiagram& d);

int writhe(const PlanarDiagram& d);

/// Switches every crossing, keeping arc labels.
PlanarDiagram mirror(const PlanarDiagram& d);

/// Renumbers arcs in traversal order from a deterministic start. Equal
/// results mean equal diagrams up to relabeling of arcs and reordering of
/// crossings from that start.
PlanarDiagram canonicalize(const PlanarDiagram& d);

/// Start-independent key: minimum over every starting slot of the
/// canonical relabeling. Used for replay and dedup checks.
std::string diagram_key(const PlanarDiagram& d);

}  // namespace knotsieve

#endif  // KNOTSIEVE_PLANAR_DIAGRAM_HPP
