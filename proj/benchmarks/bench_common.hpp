#ifndef KNOTSIEVE_BENCH_COMMON_HPP
#define KNOTSIEVE_BENCH_COMMON_HPP

#include <random>
#include <vector>

#include "knotsieve/bracket.hpp"
#include "knotsieve/tangle.hpp"

namespace bench {

inline knotsieve::Tangle random_tangle(std::mt19937_64& rng, int n, bool positive) {
  using knotsieve::Tangle;
  if (n == 1 || (n <= 4 && rng() % 3 == 0)) return Tangle::integer(positive || rng() & 1 ? n : -n);
  int a = 1 + static_cast<int>(rng() % (n - 1));
  Tangle l = random_tangle(rng, a, positive), r = random_tangle(rng, n - a, positive);
  return (rng() & 1) ? Tangle::sum(l, r) : Tangle::product(l, r);
}

// Knot closures with n crossings whose planned frontier stays within max_width.
inline std::vector<knotsieve::Embedding> closures(int n, int count, int max_width, bool positive,
                                                  unsigned seed = 7) {
  std::mt19937_64 rng(seed);
  std::vector<knotsieve::Embedding> out;
  while (static_cast<int>(out.size()) < count) {
    auto mode = rng() & 1 ? knotsieve::ClosureMode::kNumerator : knotsieve::ClosureMode::kDenominator;
    auto e = knotsieve::closure_embedding(random_tangle(rng, n, positive), mode);
    if (e.component_count() == 1 && knotsieve::plan_cut_order(e).max_width() <= max_width)
      out.push_back(std::move(e));
  }
  return out;
}

}  // namespace bench

#endif
