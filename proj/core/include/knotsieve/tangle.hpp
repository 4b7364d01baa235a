#ifndef KNOTSIEVE_TANGLE_HPP
#define KNOTSIEVE_TANGLE_HPP

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "knotsieve/diagram_builder.hpp"
#include "knotsieve/embedding.hpp"
#include "knotsieve/planar_diagram.hpp"

namespace knotsieve {

/// Algebraic tangle as an immutable expression tree.
///
/// Leaves are integer twists [k] (horizontal, k crossings of sign k/|k|), the
/// 0 tangle (two horizontal arcs) and the infinity tangle (two vertical arcs).
/// Sum(a, b) places b to the right of a. Product(a, b) reflects a in its
/// NW-SE diagonal and adds b, so for rational tangles F(ab) = 1/F(a) + F(b).
///
/// Text form: `+` for sum, `*` for product (binds tighter, both left
/// associative), parentheses, signed integers, `0` and `inf`. For example the
/// rational tangle 3 2 is written `3*2`.
class Tangle {
 public:
  enum class Kind { kInteger, kZero, kInfinity, kSum, kProduct };

  static Tangle integer(int k);  // k == 0 yields the 0 tangle
  static Tangle zero();
  static Tangle infinity();
  static Tangle sum(const Tangle& left, const Tangle& right);
  static Tangle product(const Tangle& left, const Tangle& right);

  Kind kind() const noexcept { return node_->kind; }
  int value() const noexcept { return node_->value; }
  Tangle left() const { return Tangle(node_->left); }
  Tangle right() const { return Tangle(node_->right); }
  int crossing_count() const noexcept { return node_->crossings; }

  std::string to_string() const;
  static Tangle parse(std::string_view text);

  friend bool operator==(const Tangle& a, const Tangle& b);

 private:
  struct Node {
    Kind kind;
    int value;
    int crossings;
    std::shared_ptr<const Node> left;
    std::shared_ptr<const Node> right;
  };
  explicit Tangle(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  std::shared_ptr<const Node> node_;
};

/// Boundary endpoints of a tangle under construction.
struct TangleEnds {
  int nw, ne, sw, se;
};

/// Adds the crossings and wires of t to the builder.
TangleEnds build_tangle(DiagramBuilder& builder, const Tangle& t);

enum class ClosureMode { kNumerator, kDenominator };

/// Numerator joins NW-NE and SW-SE; denominator joins NW-SW and NE-SE.
Embedding closure_embedding(const Tangle& t, ClosureMode mode);
/// Canonical PD of the closure; throws MultiComponentError for links.
PlanarDiagram tangle_closure(const Tangle& t, ClosureMode mode);

/// Extended rational number p/q with q >= 0 and gcd 1; infinity is 1/0.
struct Fraction {
  mpz_class num;
  mpz_class den;

  static Fraction of(const mpz_class& p, const mpz_class& q);
  static Fraction infinity() { return {1, 0}; }
  bool is_infinite() const { return den == 0; }
  Fraction inverse() const { return of(den, num); }
  std::string to_string() const;

  friend Fraction operator+(const Fraction& a, const Fraction& b);
  friend bool operator==(const Fraction& a, const Fraction& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator<(const Fraction& a, const Fraction& b) {
    if (a.num != b.num) return a.num < b.num;
    return a.den < b.den;
  }
};

/// Fraction of a rational tangle, or nullopt when the tree is not recognized
/// as rational.
std::optional<Fraction> tangle_fraction(const Tangle& t);

/// All fractions obtainable by changing crossings inside the twist leaves
/// (a leaf [k] can become any [j] with |j| <= |k| and j = k mod 2), or
/// nullopt when the tree is not recognized as rational.
std::optional<std::set<Fraction>> reachable_fractions(const Tangle& t);

}  // namespace knotsieve

#endif  // KNOTSIEVE_TANGLE_HPP
