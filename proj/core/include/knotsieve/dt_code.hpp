#ifndef KNOTSIEVE_DT_CODE_HPP
#define KNOTSIEVE_DT_CODE_HPP

#include <string>
#include <vector>

#include "knotsieve/embedding.hpp"
#include "knotsieve/planar_diagram.hpp"

namespace knotsieve {

/// Dowker-Thistlethwaite code. Visits are numbered 1..2n along the knot; entry
/// i of the result is the even label paired with odd label 2i+1, negated when
/// the strand passes over at the even visit.
std::vector<int> dt_code(const Embedding& e, int start_slot = 0);
/// Traversal starts at the tail of arc 1 and follows the PD orientation.
std::vector<int> dt_code(const PlanarDiagram& d);

std::string dt_to_string(const std::vector<int>& code);

}  // namespace knotsieve

#endif  // KNOTSIEVE_DT_CODE_HPP
