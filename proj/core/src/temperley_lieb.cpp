#include "knotsieve/temperley_lieb.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>
#include <string>

namespace knotsieve {

std::vector<std::pair<int, int>> PlanarMatching::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < points(); ++i)
    if (i < partner[i]) out.emplace_back(i + 1, partner[i] + 1);
  return out;
}

bool PlanarMatching::is_noncrossing() const {
  auto ps = pairs();
  for (const auto& [a, b] : ps)
    for (const auto& [c, d] : ps)
      if (a < c && c < b && b < d) return false;
  return true;
}

std::vector<PlanarMatching> enumerate_matchings(int points) {
  if (points < 0 || points % 2 != 0)
    throw std::invalid_argument("enumerate_matchings: point count must be even and nonnegative, got " +
                                std::to_string(points));
  // matchings[k] holds all matchings of 2k points; point 0 pairs with 2j+1,
  // enclosing a matching of 2j points and followed by one of 2(k-1-j).
  std::vector<std::vector<std::vector<int>>> table(points / 2 + 1);
  table[0].push_back({});
  for (int k = 1; k <= points / 2; ++k) {
    for (int j = 0; j < k; ++j) {
      for (const auto& inner : table[j]) {
        for (const auto& outer : table[k - 1 - j]) {
          std::vector<int> m(2 * k);
          m[0] = 2 * j + 1;
          m[2 * j + 1] = 0;
          for (int i = 0; i < 2 * j; ++i) m[i + 1] = inner[i] + 1;
          for (int i = 0; i < 2 * (k - 1 - j); ++i) m[2 * j + 2 + i] = outer[i] + 2 * j + 2;
          table[k].push_back(std::move(m));
        }
      }
    }
  }
  std::vector<PlanarMatching> out;
  out.reserve(table[points / 2].size());
  for (auto& m : table[points / 2]) out.push_back({std::move(m)});
  std::sort(out.begin(), out.end());
  return out;
}

TLElement TLElement::scalar(const LaurentPolynomial& value) {
  TLElement t;
  if (!value.is_zero()) t.terms_.emplace(Matching{}, value);
  return t;
}

TLElement TLElement::arc(int a, int b) {
  if (a == b) throw std::invalid_argument("arc endpoints must differ");
  TLElement t;
  t.boundary_ = {std::min(a, b), std::max(a, b)};
  t.terms_.emplace(Matching{1, 0}, LaurentPolynomial(1));
  return t;
}

TLElement TLElement::crossing(const std::array<int, 4>& labels) {
  TLElement t;
  t.boundary_.assign(labels.begin(), labels.end());
  std::sort(t.boundary_.begin(), t.boundary_.end());
  if (std::adjacent_find(t.boundary_.begin(), t.boundary_.end()) != t.boundary_.end())
    throw std::invalid_argument("crossing labels must be distinct");
  auto pos = [&](int p) {
    return static_cast<int>(std::lower_bound(t.boundary_.begin(), t.boundary_.end(), labels[p]) -
                            t.boundary_.begin());
  };
  auto make = [&](int a, int b, int c, int d) {
    Matching m(4);
    m[pos(a)] = pos(b);
    m[pos(b)] = pos(a);
    m[pos(c)] = pos(d);
    m[pos(d)] = pos(c);
    return m;
  };
  t.add_term(make(0, 1, 2, 3), LaurentPolynomial::monomial(1, 1));
  t.add_term(make(0, 3, 1, 2), LaurentPolynomial::monomial(1, -1));
  return t;
}

LaurentPolynomial TLElement::coefficient(const std::vector<std::pair<int, int>>& label_pairs) const {
  Matching m(boundary_.size(), -1);
  auto pos = [&](int label) {
    auto it = std::lower_bound(boundary_.begin(), boundary_.end(), label);
    if (it == boundary_.end() || *it != label)
      throw std::invalid_argument("label " + std::to_string(label) + " not on boundary");
    return static_cast<int>(it - boundary_.begin());
  };
  for (const auto& [a, b] : label_pairs) {
    m[pos(a)] = pos(b);
    m[pos(b)] = pos(a);
  }
  auto it = terms_.find(m);
  return it == terms_.end() ? LaurentPolynomial() : it->second;
}

LaurentPolynomial TLElement::value() const {
  if (!boundary_.empty()) throw std::logic_error("TLElement::value on a nonempty boundary");
  auto it = terms_.find(Matching{});
  return it == terms_.end() ? LaurentPolynomial() : it->second;
}

void TLElement::add_term(const Matching& m, const LaurentPolynomial& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

namespace {

LaurentPolynomial times(const LaurentPolynomial& p, const LaurentPolynomial& q) {
  if (q.term_count() == 1 && q.terms().front().coefficient == 1)
    return p.shifted(q.terms().front().exponent);
  if (p.term_count() == 1 && p.terms().front().coefficient == 1)
    return q.shifted(p.terms().front().exponent);
  return p * q;
}

const LaurentPolynomial& loop_power(int k) {
  static thread_local std::vector<LaurentPolynomial> cache{LaurentPolynomial(1)};
  while (static_cast<int>(cache.size()) <= k)
    cache.push_back(cache.back() * LaurentPolynomial::loop_value());
  return cache[k];
}

}  // namespace

TLElement glue(const TLElement& x, const TLElement& y,
               const std::vector<std::pair<int, int>>& joins) {
  std::vector<int> all;
  all.reserve(x.boundary_.size() + y.boundary_.size());
  std::merge(x.boundary_.begin(), x.boundary_.end(), y.boundary_.begin(), y.boundary_.end(),
             std::back_inserter(all));
  if (std::adjacent_find(all.begin(), all.end()) != all.end())
    throw std::invalid_argument("glue: operands share a boundary label");
  auto pos = [&](int label) {
    auto it = std::lower_bound(all.begin(), all.end(), label);
    if (it == all.end() || *it != label)
      throw std::invalid_argument("glue: join references missing point " + std::to_string(label));
    return static_cast<int>(it - all.begin());
  };
  const int total = static_cast<int>(all.size());
  std::vector<char> joined(total, 0);
  std::vector<std::pair<int, int>> jp;
  jp.reserve(joins.size());
  for (const auto& [a, b] : joins) {
    int pa = pos(a), pb = pos(b);
    if (pa == pb || joined[pa] || joined[pb])
      throw std::invalid_argument("glue: boundary point joined twice");
    joined[pa] = joined[pb] = 1;
    jp.emplace_back(pa, pb);
  }
  std::vector<int> xmap(x.boundary_.size()), ymap(y.boundary_.size());
  for (std::size_t i = 0; i < x.boundary_.size(); ++i) xmap[i] = pos(x.boundary_[i]);
  for (std::size_t i = 0; i < y.boundary_.size(); ++i) ymap[i] = pos(y.boundary_[i]);
  std::vector<int> remaining_index(total, -1);
  TLElement out;
  for (int i = 0; i < total; ++i) {
    if (joined[i]) continue;
    remaining_index[i] = static_cast<int>(out.boundary_.size());
    out.boundary_.push_back(all[i]);
  }
  std::vector<int> partner(total);
  TLElement::Matching key(out.boundary_.size());
  for (const auto& [mx, cx] : x.terms_) {
    for (const auto& [my, cy] : y.terms_) {
      for (std::size_t i = 0; i < mx.size(); ++i) partner[xmap[i]] = xmap[mx[i]];
      for (std::size_t i = 0; i < my.size(); ++i) partner[ymap[i]] = ymap[my[i]];
      int loops = 0;
      for (const auto& [p, q] : jp) {
        if (partner[p] == q) {
          ++loops;
        } else {
          int a = partner[p], b = partner[q];
          partner[a] = b;
          partner[b] = a;
        }
      }
      for (int i = 0; i < total; ++i)
        if (!joined[i]) key[remaining_index[i]] = remaining_index[partner[i]];
      LaurentPolynomial c = times(cx, cy);
      if (loops) c = c * loop_power(loops);
      out.add_term(key, c);
    }
  }
  return out;
}

}  // namespace knotsieve
