#include "knotsieve/reduction.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "knotsieve/errors.hpp"
#include "knotsieve/reidemeister.hpp"

namespace knotsieve {

namespace {

using E = Embedding;

std::string join_slots(const std::vector<int>& xs) {
  if (xs.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(xs[i]);
  }
  return out;
}

int parse_int(std::string_view s) {
  int v = 0;
  auto r = std::from_chars(s.data(), s.data() + s.size(), v);
  if (r.ec != std::errc() || r.ptr != s.data() + s.size())
    throw ParseError("bad integer '" + std::string(s) + "' in witness");
  return v;
}

std::string_view field(std::string_view token, std::string_view key) {
  if (token.substr(0, key.size()) != key) throw ParseError("expected '" + std::string(key) + "' in witness");
  return token.substr(key.size());
}

// Redraws the bridge that leaves slot a on the given level so that it crosses
// the edges leaving `crossed`, each from its left to its right.
Embedding reroute(const Embedding& e, bool over, int a, const std::vector<int>& crossed) {
  const int n = e.crossing_count();
  if (a < 0 || a >= e.slot_count()) throw InvalidDiagramError("bridge slot out of range");
  if (E::is_over(a) == over) throw InvalidDiagramError("slot does not bound a bridge on that level");
  std::vector<char> removed(n, 0);
  int cur = e.mate(a);
  int steps = 0;
  while (E::is_over(cur) == over) {
    if (removed[E::crossing_of(cur)] || ++steps > n) throw InvalidDiagramError("bridge does not end");
    removed[E::crossing_of(cur)] = 1;
    cur = e.mate(E::opposite(cur));
  }
  const int b = cur;
  if (steps == 0) throw InvalidDiagramError("empty bridge");
  if (removed[E::crossing_of(a)] || removed[E::crossing_of(b)])
    throw InvalidDiagramError("bridge runs through its own end crossing");

  const int m = static_cast<int>(crossed.size());
  std::vector<int> mt = e.mates();
  mt.resize(4 * (n + m), -1);
  auto join = [&](int x, int y) {
    mt[x] = y;
    mt[y] = x;
  };
  int prev = a;
  for (int j = 0; j < m; ++j) {
    const int s = crossed[j];
    if (s < 0 || s >= e.slot_count()) throw InvalidDiagramError("crossed slot out of range");
    const int t = e.mate(s);
    if (mt[s] != t || mt[t] != s) throw InvalidDiagramError("edge crossed twice");
    const int z = n + j;
    int entry, exit;
    if (over) {
      join(s, E::slot(z, 0));
      join(t, E::slot(z, 2));
      entry = E::slot(z, 3);
      exit = E::slot(z, 1);
    } else {
      join(s, E::slot(z, 3));
      join(t, E::slot(z, 1));
      entry = E::slot(z, 0);
      exit = E::slot(z, 2);
    }
    join(prev, entry);
    prev = exit;
  }
  join(prev, b);

  std::vector<int> index(n + m, -1);
  int kept = 0;
  for (int c = 0; c < n + m; ++c)
    if (c >= n || !removed[c]) index[c] = kept++;
  std::vector<int> result(4 * kept, -1);
  for (int c = 0; c < n + m; ++c) {
    if (index[c] < 0) continue;
    for (int p = 0; p < 4; ++p) {
      int x = mt[E::slot(c, p)];
      int guard = 0;
      while (E::crossing_of(x) < n && removed[E::crossing_of(x)]) {
        if (++guard > 4 * n) throw InvalidDiagramError("strand trapped in removed crossings");
        x = mt[E::opposite(x)];
      }
      result[E::slot(index[c], p)] = E::slot(index[E::crossing_of(x)], E::position_of(x));
    }
  }
  Embedding out = Embedding::from_mates(std::move(result), e.free_loops());
  if (out.component_count() != 1 || !out.is_planar())
    throw InvalidDiagramError("rerouted bridge does not give a planar knot diagram");
  return out;
}

ReductionOutcome elementary_outcome(const Embedding& e, ReductionKind kind, int where) {
  ReidemeisterMove mv;
  mv.kind = kind == ReductionKind::kR1 ? MoveKind::kR1Remove : MoveKind::kR2Remove;
  mv.a = where;
  ReductionOutcome o;
  o.kind = kind;
  o.before_count = e.crossing_count();
  o.result = apply_move(e, mv);
  o.after_count = o.result.crossing_count();
  o.witness = kind == ReductionKind::kR1 ? "r1 c=" + std::to_string(where) : "r2 s=" + std::to_string(where);
  return o;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

std::vector<Bridge> find_bridges(const Embedding& e) {
  const int n = e.crossing_count();
  std::vector<Bridge> out;
  if (n == 0) return out;
  E::Trace t = e.trace_from(0);
  const int len = static_cast<int>(t.entries.size());
  if (len != 2 * n || e.free_loops() != 0) throw MultiComponentError(e.component_count());
  auto at = [&](int i) { return t.entries[((i % len) + len) % len]; };
  int first = 0;
  while (E::is_over(at(first)) == E::is_over(at(first - 1))) ++first;
  int i = first;
  while (i < first + len) {
    Bridge br;
    br.over = E::is_over(at(i));
    br.start_slot = E::opposite(at(i - 1));
    int j = i;
    while (j < first + len && E::is_over(at(j)) == br.over) br.crossings.push_back(E::crossing_of(at(j++)));
    br.end_slot = at(j);
    out.push_back(std::move(br));
    i = j;
  }
  return out;
}

std::string_view to_string(ReductionKind k) {
  switch (k) {
    case ReductionKind::kR1:
      return "r1";
    case ReductionKind::kR2:
      return "r2";
    case ReductionKind::kPass:
      return "pass";
  }
  return {};
}

std::string ReductionOutcome::to_string() const {
  std::ostringstream os;
  os << knotsieve::to_string(kind) << " " << before_count << "->" << after_count;
  if (before_vertices >= 0) os << " vertices " << before_vertices << "->" << after_vertices;
  os << " [" << witness << "]";
  return os.str();
}

std::optional<ReductionOutcome> find_elementary_reduction(const Embedding& e) {
  if (int k = find_kink(e); k >= 0) return elementary_outcome(e, ReductionKind::kR1, k);
  if (int s = find_clasp(e); s >= 0) return elementary_outcome(e, ReductionKind::kR2, s);
  return std::nullopt;
}

std::optional<ReductionOutcome> find_elementary_reduction(const PlanarDiagram& d) {
  return find_elementary_reduction(Embedding::from_diagram(d));
}

std::optional<ReductionOutcome> find_pass_move(const Embedding& e, int max_bridge) {
  if (auto o = find_elementary_reduction(e)) return o;
  const int n = e.crossing_count();
  if (n == 0) return std::nullopt;
  const std::vector<Bridge> bridges = find_bridges(e);
  const E::Faces faces = e.faces();
  int original_vertices = -2;  // computed on first use

  std::vector<char> on_bridge(e.slot_count());
  std::vector<char> in_bridge(n);
  std::vector<int> dist(faces.count), from_class(faces.count), via_slot(faces.count);
  std::vector<std::vector<std::pair<int, int>>> adj(faces.count);
  for (const Bridge& br : bridges) {
    const int len = br.length();
    if (len > max_bridge) continue;
    std::fill(in_bridge.begin(), in_bridge.end(), 0);
    for (int c : br.crossings) in_bridge[c] = 1;
    if (in_bridge[E::crossing_of(br.start_slot)] || in_bridge[E::crossing_of(br.end_slot)]) continue;

    std::fill(on_bridge.begin(), on_bridge.end(), 0);
    UnionFind uf(faces.count);
    int s = br.start_slot;
    for (int k = 0; k <= len; ++k) {
      int m = e.mate(s);
      on_bridge[s] = on_bridge[m] = 1;
      uf.unite(faces.left_of[s], faces.left_of[m]);
      s = E::opposite(m);
    }
    for (auto& a : adj) a.clear();
    for (int x = 0; x < e.slot_count(); ++x) {
      if (on_bridge[x]) continue;
      int u = uf.find(faces.left_of[x]);
      int v = uf.find(faces.left_of[e.mate(x)]);
      if (u != v) adj[u].emplace_back(v, x);
    }
    const int from = uf.find(faces.left_of[br.start_slot]);
    const int to = uf.find(faces.left_of[br.end_slot]);
    std::fill(dist.begin(), dist.end(), -1);
    std::vector<int> queue{from};
    dist[from] = 0;
    for (std::size_t qi = 0; qi < queue.size() && dist[to] < 0; ++qi) {
      int u = queue[qi];
      for (auto [v, x] : adj[u]) {
        if (dist[v] >= 0) continue;
        dist[v] = dist[u] + 1;
        from_class[v] = u;
        via_slot[v] = x;
        queue.push_back(v);
      }
    }
    if (dist[to] < 0 || dist[to] > len) continue;
    if (dist[to] == len) {
      if (original_vertices == -2) original_vertices = polyhedral_vertex_count(e);
      if (original_vertices <= 0) continue;
    }
    std::vector<int> crossed;
    for (int c = to; c != from; c = from_class[c]) crossed.push_back(via_slot[c]);
    std::reverse(crossed.begin(), crossed.end());

    ReductionOutcome o;
    o.kind = ReductionKind::kPass;
    o.before_count = n;
    try {
      o.result = reroute(e, br.over, br.start_slot, crossed);
    } catch (const InvalidDiagramError&) {
      continue;
    }
    o.after_count = o.result.crossing_count();
    o.witness = std::string("pass ") + (br.over ? "over" : "under") +
                " a=" + std::to_string(br.start_slot) + " x=" + join_slots(crossed);
    if (o.after_count == n) {
      o.before_vertices = original_vertices;
      o.after_vertices = polyhedral_vertex_count(o.result);
      if (o.after_vertices >= o.before_vertices) continue;
    }
    return o;
  }
  return std::nullopt;
}

std::optional<ReductionOutcome> find_pass_move(const PlanarDiagram& d, int max_bridge) {
  return find_pass_move(Embedding::from_diagram(d), max_bridge);
}

Embedding replay_witness(const Embedding& e, std::string_view witness) {
  std::vector<std::string> tok;
  {
    std::istringstream is{std::string(witness)};
    std::string w;
    while (is >> w) tok.push_back(w);
  }
  if (tok.empty()) throw ParseError("empty witness");
  if (tok[0] == "r1" && tok.size() == 2) {
    return apply_move(e, {MoveKind::kR1Remove, parse_int(field(tok[1], "c=")), 0, 1, true});
  }
  if (tok[0] == "r2" && tok.size() == 2) {
    return apply_move(e, {MoveKind::kR2Remove, parse_int(field(tok[1], "s=")), 0, 1, true});
  }
  if (tok[0] == "pass" && tok.size() == 4 && (tok[1] == "over" || tok[1] == "under")) {
    int a = parse_int(field(tok[2], "a="));
    std::string_view xs = field(tok[3], "x=");
    std::vector<int> crossed;
    if (xs != "-") {
      std::size_t p = 0;
      while (p <= xs.size()) {
        std::size_t q = xs.find(',', p);
        if (q == std::string_view::npos) q = xs.size();
        crossed.push_back(parse_int(xs.substr(p, q - p)));
        p = q + 1;
      }
    }
    return reroute(e, tok[1] == "over", a, crossed);
  }
  throw ParseError("unrecognized witness '" + std::string(witness) + "'");
}

Embedding reduce_fixpoint(const Embedding& e, int max_bridge, std::vector<ReductionOutcome>* trace) {
  Embedding cur = e;
  while (auto o = find_pass_move(cur, max_bridge)) {
    cur = o->result;
    if (trace) trace->push_back(std::move(*o));
  }
  return cur;
}

PlanarDiagram reduce_fixpoint(const PlanarDiagram& d, int max_bridge,
                              std::vector<ReductionOutcome>* trace) {
  return reduce_fixpoint(Embedding::from_diagram(d), max_bridge, trace).to_diagram();
}

int polyhedral_vertex_count(const Embedding& e) {
  const int n = e.crossing_count();
  std::vector<int> mt = e.mates();
  std::vector<char> alive(n, 1);
  auto join = [&](int x, int y) {
    mt[x] = y;
    mt[y] = x;
  };
  // Deletes vertex v whose ports p and p+2 or p+1 are tied together.
  auto drop = [&](int v, int q1, int q2) {
    int x = E::slot(v, q1), y = E::slot(v, q2);
    if (mt[x] != y) join(mt[x], mt[y]);
    alive[v] = 0;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < n && !changed; ++v) {
      if (!alive[v]) continue;
      for (int p = 0; p < 4 && !changed; ++p) {
        const int s = E::slot(v, p);
        if (mt[s] == E::ccw(s)) {
          drop(v, p + 2, p + 3);
          changed = true;
        } else if (mt[s] == E::opposite(s)) {
          drop(v, p + 1, p + 3);
          changed = true;
        } else {
          const int m1 = mt[s];
          const int s2 = E::cw(m1);
          const int w = E::crossing_of(s2);
          if (w == v || mt[s2] != E::ccw(s)) continue;
          const int q = E::position_of(s2);
          const std::array<int, 4> keep{E::slot(v, p + 2), E::slot(v, p + 3), E::slot(w, q + 2),
                                        E::slot(w, q + 3)};
          std::array<int, 4> partner{};
          for (int i = 0; i < 4; ++i) {
            partner[i] = mt[keep[i]];
            for (int k = 0; k < 4; ++k)
              if (partner[i] == keep[k]) partner[i] = E::slot(v, k);
          }
          for (int i = 0; i < 4; ++i) {
            mt[E::slot(v, i)] = partner[i];
            if (E::crossing_of(partner[i]) != v) mt[partner[i]] = E::slot(v, i);
          }
          alive[w] = 0;
          changed = true;
        }
      }
    }
  }
  return static_cast<int>(std::count(alive.begin(), alive.end(), 1));
}

}  // namespace knotsieve
