#ifndef KNOTSIEVE_DETERMINANT_HPP
#define KNOTSIEVE_DETERMINANT_HPP

#include <gmpxx.h>

#include <vector>

#include "knotsieve/embedding.hpp"
#include "knotsieve/planar_diagram.hpp"

namespace knotsieve {

/// Checkerboard data of a knot diagram. Faces are numbered by
/// Embedding::faces(); the face on the right of arc 1 is unshaded.
struct GoeritzData {
  std::vector<int> face_shaded;   // 1 if shaded, per face id
  std::vector<int> shaded_faces;  // shaded face ids, in increasing order
  /// Symmetric matrix over the shaded faces with the first one deleted.
  std::vector<std::vector<mpz_class>> matrix;
};

GoeritzData goeritz_data(const Embedding& e, int arc1_head_slot = 0);
GoeritzData goeritz_data(const PlanarDiagram& d);

/// Determinant of a square integer matrix by fraction-free elimination.
mpz_class bareiss_determinant(std::vector<std::vector<mpz_class>> m);

/// |det| of the Goeritz matrix; the crossing-free unknot gives 1.
/// Throws MultiComponentError for links.
mpz_class determinant_goeritz(const PlanarDiagram& d);
mpz_class determinant_goeritz(const Embedding& e);

/// |V(-1)| from the Jones polynomial.
mpz_class determinant_via_jones(const PlanarDiagram& d);

bool passes_det_filter(const PlanarDiagram& d);

}  // namespace knotsieve

#endif  // KNOTSIEVE_DETERMINANT_HPP
