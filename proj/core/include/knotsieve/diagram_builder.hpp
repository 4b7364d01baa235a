#ifndef KNOTSIEVE_DIAGRAM_BUILDER_HPP
#define KNOTSIEVE_DIAGRAM_BUILDER_HPP

#include <utility>
#include <vector>

#include "knotsieve/embedding.hpp"

namespace knotsieve {

/// Assembles an Embedding from crossings and crossing-free wires joined at
/// their endpoints. Endpoints are opaque integers handed out by the builder.
class DiagramBuilder {
 public:
  /// Adds a crossing and returns its index; its endpoints are endpoint(c, p).
  int add_crossing();
  int endpoint(int crossing, int position) const { return slot_endpoint_[4 * crossing + position]; }
  /// A crossing-free strand; returns its two endpoints.
  std::pair<int, int> add_wire();
  void link(int a, int b);

  /// Reflects crossings [first, last) so their positions run clockwise:
  /// positions 1 and 3 trade places, over/under is kept.
  void reflect_crossings(int first, int last);

  int crossing_count() const { return static_cast<int>(slot_endpoint_.size() / 4); }

  /// Resolves wires into slot-to-slot connections. Every endpoint must be
  /// linked. Closed wire-only circuits become free loops.
  Embedding finish() const;

 private:
  int new_endpoint(int slot, int through);

  std::vector<int> link_;
  std::vector<int> through_;  // other end of a wire, -1 for crossing slots
  std::vector<int> slot_of_;  // slot index for crossing endpoints
  std::vector<int> slot_endpoint_;
};

}  // namespace knotsieve

#endif  // KNOTSIEVE_DIAGRAM_BUILDER_HPP
