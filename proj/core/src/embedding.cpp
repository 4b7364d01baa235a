#include "knotsieve/embedding.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "knotsieve/errors.hpp"

namespace knotsieve {

Embedding Embedding::unknot() {
  Embedding e;
  e.free_loops_ = 1;
  return e;
}

Embedding Embedding::from_diagram(const PlanarDiagram& d) {
  const int n = d.crossing_count();
  if (n == 0) return unknot();
  std::vector<int> first(2 * n + 1, kUnset);
  Embedding e;
  e.mate_.assign(4 * n, kUnset);
  for (int c = 0; c < n; ++c) {
    for (int p = 0; p < 4; ++p) {
      int label = d.crossings[c][p];
      if (label < 1 || label > 2 * n)
        throw InvalidDiagramError("arc label " + std::to_string(label) + " out of range");
      int s = slot(c, p);
      if (first[label] == kUnset) {
        first[label] = s;
      } else if (first[label] >= 0) {
        e.connect(first[label], s);
        first[label] = -2;
      } else {
        throw InvalidDiagramError("arc label " + std::to_string(label) +
                                  " used more than twice");
      }
    }
  }
  for (int label = 1; label <= 2 * n; ++label)
    if (first[label] != -2)
      throw InvalidDiagramError("arc label " + std::to_string(label) + " not used twice");
  return e;
}

Embedding Embedding::from_mates(std::vector<int> mate, int free_loops) {
  Embedding e;
  e.mate_ = std::move(mate);
  e.free_loops_ = free_loops;
  return e;
}

int Embedding::add_crossing() {
  int c = crossing_count();
  mate_.insert(mate_.end(), 4, kUnset);
  return c;
}

void Embedding::switch_crossing(int c) {
  // Position p becomes p+1, so the old over-strand lands on even positions.
  std::array<int, 4> old_mate;
  for (int p = 0; p < 4; ++p) old_mate[p] = mate_[slot(c, p)];
  auto moved = [c](int s) { return crossing_of(s) == c ? slot(c, position_of(s) + 1) : s; };
  for (int p = 0; p < 4; ++p) {
    int m = old_mate[p];
    int from = slot(c, p + 1);
    int to = m == kUnset ? kUnset : moved(m);
    mate_[from] = to;
    if (to != kUnset && crossing_of(to) != c) mate_[to] = from;
  }
}

void Embedding::splice_out(const std::vector<int>& crossings) {
  const int n = crossing_count();
  std::vector<std::uint8_t> removed(n, 0);
  for (int c : crossings) removed[c] = 1;
  std::vector<std::uint8_t> seen(mate_.size(), 0);
  std::vector<int> new_mate = mate_;
  for (int s = 0; s < slot_count(); ++s) {
    if (removed[crossing_of(s)]) continue;
    int cur = mate_[s];
    if (!removed[crossing_of(cur)]) continue;
    for (;;) {
      seen[cur] = 1;
      int out = opposite(cur);
      seen[out] = 1;
      int next = mate_[out];
      if (!removed[crossing_of(next)]) {
        new_mate[s] = next;
        new_mate[next] = s;
        break;
      }
      cur = next;
    }
  }
  int loops = 0;
  for (int s = 0; s < slot_count(); ++s) {
    if (!removed[crossing_of(s)] || seen[s]) continue;
    ++loops;
    int cur = s;
    while (!seen[cur]) {
      seen[cur] = 1;
      int out = opposite(cur);
      seen[out] = 1;
      cur = mate_[out];
    }
  }
  std::vector<int> index(n, kUnset);
  int kept = 0;
  for (int c = 0; c < n; ++c)
    if (!removed[c]) index[c] = kept++;
  std::vector<int> compact(4 * kept);
  for (int c = 0; c < n; ++c) {
    if (removed[c]) continue;
    for (int p = 0; p < 4; ++p) {
      int m = new_mate[slot(c, p)];
      compact[slot(index[c], p)] = slot(index[crossing_of(m)], position_of(m));
    }
  }
  mate_ = std::move(compact);
  free_loops_ += loops;
}

Embedding::Faces Embedding::faces() const {
  Faces f;
  f.left_of.assign(mate_.size(), kUnset);
  for (int s = 0; s < slot_count(); ++s) {
    if (f.left_of[s] != kUnset) continue;
    int cur = s;
    while (f.left_of[cur] == kUnset) {
      f.left_of[cur] = f.count;
      cur = cw(mate_[cur]);
    }
    ++f.count;
  }
  return f;
}

bool Embedding::is_connected() const {
  const int n = crossing_count();
  if (n == 0) return free_loops_ <= 1;
  if (free_loops_ > 0) return false;
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int s = 0; s < slot_count(); ++s) {
    if (mate_[s] == kUnset) return false;
    parent[find(crossing_of(s))] = find(crossing_of(mate_[s]));
  }
  int root = find(0);
  for (int c = 1; c < n; ++c)
    if (find(c) != root) return false;
  return true;
}

bool Embedding::is_planar() const {
  if (crossing_count() == 0) return true;
  if (!is_connected()) return false;
  return faces().count == crossing_count() + 2;
}

int Embedding::component_count() const {
  std::vector<std::uint8_t> seen(mate_.size(), 0);
  int components = free_loops_;
  for (int s = 0; s < slot_count(); ++s) {
    if (seen[s]) continue;
    ++components;
    int cur = s;
    while (!seen[cur]) {
      seen[cur] = 1;
      int out = opposite(cur);
      seen[out] = 1;
      cur = mate_[out];
    }
  }
  return components;
}

Embedding::Trace Embedding::trace_from(int start) const {
  Trace t;
  t.entered.assign(mate_.size(), 0);
  int cur = start;
  do {
    if (t.entered[cur]) break;
    t.entered[cur] = 1;
    t.entries.push_back(cur);
    cur = mate_[opposite(cur)];
  } while (cur != start);
  return t;
}

std::vector<int> Embedding::signs() const {
  const int n = crossing_count();
  if (component_count() != 1) throw MultiComponentError(component_count());
  std::vector<int> result(n, 0);
  if (n == 0) return result;
  Trace t = trace_from(0);
  std::vector<int> under_in(n, kUnset), over_in(n, kUnset);
  for (int s : t.entries) {
    if (is_over(s))
      over_in[crossing_of(s)] = position_of(s);
    else
      under_in[crossing_of(s)] = position_of(s);
  }
  for (int c = 0; c < n; ++c) result[c] = ((over_in[c] - under_in[c] + 4) % 4) == 3 ? 1 : -1;
  return result;
}

int Embedding::writhe() const {
  auto s = signs();
  return std::accumulate(s.begin(), s.end(), 0);
}

PlanarDiagram Embedding::to_diagram_from(int start) const {
  const int n = crossing_count();
  PlanarDiagram d;
  if (n == 0) return d;
  Trace t = trace_from(start);
  if (static_cast<int>(t.entries.size()) != 2 * n || free_loops_ != 0)
    throw MultiComponentError(component_count());
  std::vector<int> label(mate_.size(), 0);
  for (int i = 0; i < 2 * n; ++i) {
    int e = t.entries[i];
    label[e] = i + 1;
    label[mate_[e]] = i + 1;
  }
  d.crossings.reserve(n);
  for (int c = 0; c < n; ++c) {
    int u = t.entered[slot(c, 0)] ? slot(c, 0) : slot(c, 2);
    PlanarDiagram::Crossing x;
    for (int k = 0; k < 4; ++k) x[k] = label[slot(c, position_of(u) + k)];
    d.crossings.push_back(x);
  }
  std::sort(d.crossings.begin(), d.crossings.end(),
            [](const auto& a, const auto& b) { return a[0] < b[0]; });
  return d;
}

PlanarDiagram Embedding::to_diagram() const {
  if (crossing_count() == 0) {
    if (component_count() != 1) throw MultiComponentError(component_count());
    return {};
  }
  return to_diagram_from(0);
}

}  // namespace knotsieve
