#ifndef KNOTSIEVE_GENERATION_HPP
#define KNOTSIEVE_GENERATION_HPP

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "knotsieve/embedding.hpp"
#include "knotsieve/polyhedron.hpp"
#include "knotsieve/tangle.hpp"

namespace knotsieve {

enum class DiagramClass { kAlgebraic, kPolyhedral };

std::string_view to_string(DiagramClass c);
/// Accepts "algebraic"/"alg" and "polyhedral"/"poly".
DiagramClass parse_diagram_class(std::string_view text);

/// Resumable position in a generation stream.
struct GenerationCursor {
  DiagramClass diagram_class = DiagramClass::kAlgebraic;
  int budget = 1;
  std::uint64_t position = 0;

  /// Single-line form `class:budget:position`.
  std::string to_string() const;
  static GenerationCursor parse(std::string_view text);
  friend bool operator==(const GenerationCursor&, const GenerationCursor&) = default;
};

/// Key equal for trees that differ only in the order of Sum operands.
std::string canonical_key(const Tangle& t);

/// Enumerates algebraic tangles with exactly n crossings, one tree per class
/// of the normal form
///
///   T   ::= [k] | R(X)         X a twist [k] with |k| >= 2, or a Sum
///   Sum ::= multiset of >= 2 non-Sum terms, at most one of them a twist
///
/// where R is reflection in the NW-SE diagonal. This quotients the tree
/// grammar by sum associativity and commutativity, merging of adjacent twists
/// of equal sign, R(R(X)) = X and R([+-1]) = [+-1]; nothing else. The 0 and
/// infinity tangles are not enumerated.
///
/// The stream for size n lists [n], [-n], R([n]), R([-n]) (n >= 2), then each
/// Sum S followed by R(S). Sizes below n are kept in memory.
class TangleEnumerator {
 public:
  TangleEnumerator();
  ~TangleEnumerator();
  TangleEnumerator(const TangleEnumerator&) = delete;
  TangleEnumerator& operator=(const TangleEnumerator&) = delete;

  /// Calls visit(position, tangle) for every position >= start, in order,
  /// until visit returns false.
  void for_each(int n, std::uint64_t start,
                const std::function<bool(std::uint64_t, const Tangle&)>& visit);
  std::vector<Tangle> all(int n);
  std::uint64_t count(int n);

 private:
  struct Impl;
  Impl* impl_;
};

/// Number of tangles the enumerator yields for size n (computed without
/// enumerating).
mpz_class normal_form_count(int n);
/// Number of raw expression trees over nonzero twist leaves with Sum and
/// Product nodes and n crossings in total.
mpz_class raw_tree_count(int n);

enum class TrivializabilityMode {
  kOff,        // keep everything
  kSlot,       // fraction 0 or infinity reachable
  kClosure,    // a closure with unit numerator or denominator reachable
};

std::string_view to_string(TrivializabilityMode m);
TrivializabilityMode parse_trivializability(std::string_view text);

/// Conservative filter: false only when crossing changes inside the twist
/// leaves of a rational tangle provably cannot reach the target fractions.
/// Trees not recognized as rational always pass.
bool is_algebraically_trivializable(const Tangle& t,
                                    TrivializabilityMode mode = TrivializabilityMode::kClosure);

struct Candidate {
  DiagramClass diagram_class;
  int budget;
  std::uint64_t position;
  std::string source;  // tangle (and closure) or polyhedron filling
  Embedding embedding;
  int components;
};

/// Numerator and denominator closures of the enumerated tangles. Position 2i
/// is the numerator closure of tangle i and 2i+1 its denominator closure.
/// `accept` filters positions before any diagram is built.
void generate_closures(TangleEnumerator& tangles, int n, std::uint64_t start,
                       const std::function<bool(std::uint64_t)>& accept,
                       const std::function<bool(const Candidate&)>& visit);

/// Every catalog polyhedron with every composition of n into one positive
/// part per vertex and every filling by enumerated tangles that pass the
/// trivializability filter. Positions count emitted fillings.
void generate_polyhedral(TangleEnumerator& tangles, int n,
                         const std::vector<ConwayPolyhedron>& catalog,
                         TrivializabilityMode mode, std::uint64_t start,
                         const std::function<bool(std::uint64_t)>& accept,
                         const std::function<bool(const Candidate&)>& visit);

/// True when `position` belongs to shard `index` of `count`.
inline bool in_shard(std::uint64_t position, int index, int count) {
  return static_cast<int>(position % static_cast<std::uint64_t>(count)) == index;
}

}  // namespace knotsieve

#endif  // KNOTSIEVE_GENERATION_HPP
