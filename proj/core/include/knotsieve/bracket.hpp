#ifndef KNOTSIEVE_BRACKET_HPP
#define KNOTSIEVE_BRACKET_HPP

#include <vector>

#include "knotsieve/embedding.hpp"
#include "knotsieve/planar_diagram.hpp"
#include "knotsieve/polynomial.hpp"

namespace knotsieve {

inline constexpr int kDefaultOracleLimit = 16;
inline constexpr int kDefaultWidthCap = 16;

/// Kauffman bracket by the full state sum over all 2^n smoothings,
/// normalized so the crossing-free unknot has bracket 1. Throws
/// std::invalid_argument above `limit` crossings.
LaurentPolynomial bracket_naive(const PlanarDiagram& d, int limit = kDefaultOracleLimit);

/// Order in which a sweep absorbs crossings. frontier_width[i] is the number
/// of open boundary points after the first i+1 crossings.
struct CutOrder {
  std::vector<int> order;
  std::vector<int> frontier_width;

  int max_width() const;
};

/// Frontier widths of an arbitrary permutation of crossings.
CutOrder make_cut_order(const Embedding& e, std::vector<int> order);

/// Greedy sweep: start at crossing 0, then repeatedly absorb the crossing with
/// the most slots already joined to the absorbed region (lowest index on ties).
CutOrder plan_cut_order(const Embedding& e);
CutOrder plan_cut_order(const PlanarDiagram& d);

/// Kauffman bracket by sweeping Temperley-Lieb states across the diagram.
/// Throws ResourceError if the order's frontier ever exceeds width_cap.
LaurentPolynomial bracket_dc(const Embedding& e, const CutOrder& order,
                             int width_cap = kDefaultWidthCap);
LaurentPolynomial bracket_dc(const PlanarDiagram& d, const CutOrder& order,
                             int width_cap = kDefaultWidthCap);
LaurentPolynomial bracket_dc(const PlanarDiagram& d);

/// f(A) = (-A^3)^(-writhe) * bracket; a knot invariant.
LaurentPolynomial normalize_bracket(const LaurentPolynomial& bracket, int writhe);
LaurentPolynomial jones_f(const PlanarDiagram& d);
/// Jones polynomial in t, with t = A^-4.
LaurentPolynomial jones_from_f(const LaurentPolynomial& f);
LaurentPolynomial jones_polynomial(const PlanarDiagram& d);

}  // namespace knotsieve

#endif  // KNOTSIEVE_BRACKET_HPP
