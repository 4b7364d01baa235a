#ifndef KNOTSIEVE_TEMPERLEY_LIEB_HPP
#define KNOTSIEVE_TEMPERLEY_LIEB_HPP

#include <array>
#include <map>
#include <utility>
#include <vector>

#include "knotsieve/polynomial.hpp"

namespace knotsieve {

/// Perfect matching of points 1..2k on a circle, stored as a 0-based partner
/// array.
struct PlanarMatching {
  std::vector<int> partner;

  int points() const noexcept { return static_cast<int>(partner.size()); }
  /// 1-based pairs (a, b) with a < b, sorted by a.
  std::vector<std::pair<int, int>> pairs() const;
  bool is_noncrossing() const;

  friend auto operator<=>(const PlanarMatching&, const PlanarMatching&) = default;
};

/// All non-crossing matchings of `points` boundary points (Catalan many).
/// Throws std::invalid_argument for odd or negative counts.
std::vector<PlanarMatching> enumerate_matchings(int points);

/// Linear combination of matchings of a labeled boundary with Laurent
/// polynomial coefficients.
///
/// Boundary points carry arbitrary distinct integer labels; a matching is a
/// partner array indexed by position in the sorted label list. Coefficients
/// are never zero.
class TLElement {
 public:
  using Matching = std::vector<int>;

  TLElement() = default;
  static TLElement scalar(const LaurentPolynomial& value);
  static TLElement arc(int a, int b);
  /// Both smoothings of a crossing whose counterclockwise slots carry the
  /// given labels, under-strand at positions 0 and 2:
  /// A * {(0,1),(2,3)} + A^-1 * {(0,3),(1,2)}.
  static TLElement crossing(const std::array<int, 4>& labels);

  const std::vector<int>& boundary() const noexcept { return boundary_; }
  int boundary_size() const noexcept { return static_cast<int>(boundary_.size()); }
  const std::map<Matching, LaurentPolynomial>& terms() const noexcept { return terms_; }
  int term_count() const noexcept { return static_cast<int>(terms_.size()); }

  /// Coefficient of the matching given as label pairs (zero if absent).
  LaurentPolynomial coefficient(const std::vector<std::pair<int, int>>& label_pairs) const;
  /// Coefficient of the empty matching; requires an empty boundary.
  LaurentPolynomial value() const;

  void add_term(const Matching& m, const LaurentPolynomial& c);

  friend TLElement glue(const TLElement& x, const TLElement& y,
                        const std::vector<std::pair<int, int>>& joins);
  friend bool operator==(const TLElement&, const TLElement&) = default;

 private:
  std::vector<int> boundary_;
  std::map<Matching, LaurentPolynomial> terms_;
};

/// Places x and y side by side (their labels must be disjoint) and joins the
/// listed pairs of boundary points. Every closed loop multiplies the
/// coefficient by -A^2 - A^-2. Joins may connect two points of the same
/// element. Throws std::invalid_argument for missing or reused points.
TLElement glue(const TLElement& x, const TLElement& y,
               const std::vector<std::pair<int, int>>& joins);

}  // namespace knotsieve

#endif  // KNOTSIEVE_TEMPERLEY_LIEB_HPP
