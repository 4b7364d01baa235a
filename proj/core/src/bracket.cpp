#include "knotsieve/bracket.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

#include "knotsieve/errors.hpp"
#include "knotsieve/temperley_lieb.hpp"

namespace knotsieve {

LaurentPolynomial bracket_naive(const PlanarDiagram& d, int limit) {
  const int n = d.crossing_count();
  if (n > limit)
    throw std::invalid_argument("bracket_naive: " + std::to_string(n) +
                                " crossings exceeds oracle limit " + std::to_string(limit));
  if (n == 0) return LaurentPolynomial(1);
  const int arcs = 2 * n;
  // count[(a - b) + n][loops] over all states.
  std::vector<std::vector<std::int64_t>> count(2 * n + 1, std::vector<std::int64_t>(arcs + 1, 0));
  std::vector<int> parent(arcs + 1);
  for (std::uint32_t state = 0; state < (1u << n); ++state) {
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    int components = arcs;
    auto unite = [&](int a, int b) {
      a = find(a);
      b = find(b);
      if (a != b) {
        parent[a] = b;
        --components;
      }
    };
    int a_count = 0;
    for (int c = 0; c < n; ++c) {
      const auto& x = d.crossings[c];
      if (state & (1u << c)) {
        unite(x[0], x[3]);
        unite(x[1], x[2]);
      } else {
        ++a_count;
        unite(x[0], x[1]);
        unite(x[2], x[3]);
      }
    }
    ++count[2 * a_count - n + n][components];
  }
  LaurentPolynomial result;
  std::vector<LaurentPolynomial> delta_pow{LaurentPolynomial(1)};
  for (int k = 1; k <= arcs; ++k) delta_pow.push_back(delta_pow.back() * LaurentPolynomial::loop_value());
  for (int e = 0; e <= 2 * n; ++e) {
    for (int loops = 1; loops <= arcs; ++loops) {
      if (count[e][loops] == 0) continue;
      result += LaurentPolynomial::monomial(mpz_class(static_cast<long>(count[e][loops])), e - n) *
                delta_pow[loops - 1];
    }
  }
  return result;
}

int CutOrder::max_width() const {
  int w = 0;
  for (int x : frontier_width) w = std::max(w, x);
  return w;
}

CutOrder make_cut_order(const Embedding& e, std::vector<int> order) {
  const int n = e.crossing_count();
  if (static_cast<int>(order.size()) != n) throw std::invalid_argument("cut order length mismatch");
  std::vector<char> done(n, 0);
  CutOrder co;
  co.order = std::move(order);
  int width = 0;
  for (int c : co.order) {
    if (c < 0 || c >= n || done[c]) throw std::invalid_argument("cut order is not a permutation");
    for (int p = 0; p < 4; ++p) {
      int mc = Embedding::crossing_of(e.mate(Embedding::slot(c, p)));
      if (mc == c) continue;
      width += done[mc] ? -1 : 1;
    }
    done[c] = 1;
    co.frontier_width.push_back(width);
  }
  return co;
}

CutOrder plan_cut_order(const Embedding& e) {
  const int n = e.crossing_count();
  std::vector<int> order;
  if (n == 0) return make_cut_order(e, order);
  std::vector<char> done(n, 0);
  std::vector<int> links(n, 0);  // slots mated into the absorbed region
  auto absorb = [&](int c) {
    done[c] = 1;
    order.push_back(c);
    for (int p = 0; p < 4; ++p) {
      int mc = Embedding::crossing_of(e.mate(Embedding::slot(c, p)));
      if (!done[mc]) ++links[mc];
    }
  };
  absorb(0);
  for (int step = 1; step < n; ++step) {
    int best = -1;
    for (int c = 0; c < n; ++c)
      if (!done[c] && (best == -1 || links[c] > links[best])) best = c;
    absorb(best);
  }
  return make_cut_order(e, std::move(order));
}

CutOrder plan_cut_order(const PlanarDiagram& d) { return plan_cut_order(Embedding::from_diagram(d)); }

LaurentPolynomial bracket_dc(const Embedding& e, const CutOrder& order, int width_cap) {
  const int n = e.crossing_count();
  if (static_cast<int>(order.order.size()) != n)
    throw std::invalid_argument("cut order does not match diagram");
  int w = order.max_width();
  if (w > width_cap) throw ResourceError(w, width_cap);
  std::vector<char> done(n, 0);
  TLElement state = TLElement::scalar(LaurentPolynomial(1));
  std::vector<std::pair<int, int>> joins;
  for (int c : order.order) {
    joins.clear();
    for (int p = 0; p < 4; ++p) {
      int s = Embedding::slot(c, p);
      int m = e.mate(s);
      int mc = Embedding::crossing_of(m);
      if (done[mc] || (mc == c && s < m)) joins.emplace_back(s, m);
    }
    done[c] = 1;
    state = glue(state,
                 TLElement::crossing({Embedding::slot(c, 0), Embedding::slot(c, 1),
                                      Embedding::slot(c, 2), Embedding::slot(c, 3)}),
                 joins);
    if (state.boundary_size() > width_cap) throw ResourceError(state.boundary_size(), width_cap);
  }
  LaurentPolynomial total = state.value();
  const LaurentPolynomial& delta = LaurentPolynomial::loop_value();
  if (e.free_loops() > 0) total *= delta.pow(static_cast<unsigned>(e.free_loops()));
  return total.divide_exact(delta);
}

LaurentPolynomial bracket_dc(const PlanarDiagram& d, const CutOrder& order, int width_cap) {
  return bracket_dc(Embedding::from_diagram(d), order, width_cap);
}

LaurentPolynomial bracket_dc(const PlanarDiagram& d) {
  Embedding e = Embedding::from_diagram(d);
  return bracket_dc(e, plan_cut_order(e));
}

LaurentPolynomial normalize_bracket(const LaurentPolynomial& bracket, int writhe) {
  // (-A^3)^(-w) = (-1)^w * A^(-3w)
  LaurentPolynomial f = bracket.shifted(-3 * writhe);
  return (writhe % 2 != 0) ? -f : f;
}

LaurentPolynomial jones_f(const PlanarDiagram& d) {
  Embedding e = Embedding::from_diagram(d);
  return normalize_bracket(bracket_dc(e, plan_cut_order(e)), e.writhe());
}

LaurentPolynomial jones_from_f(const LaurentPolynomial& f) { return f.compress_exponents(-4); }

LaurentPolynomial jones_polynomial(const PlanarDiagram& d) { return jones_from_f(jones_f(d)); }

}  // namespace knotsieve
