#include "knotsieve/reidemeister.hpp"

#include <array>
#include <utility>

#include "knotsieve/errors.hpp"

namespace knotsieve {

namespace {

using E = Embedding;

bool is_kink(const Embedding& e, int c) {
  for (int p = 0; p < 4; ++p)
    if (e.mate(E::slot(c, p)) == E::slot(c, p + 1)) return true;
  return false;
}

bool is_clasp_slot(const Embedding& e, int x) {
  int y = e.mate(x);
  if (E::crossing_of(x) == E::crossing_of(y)) return false;
  if (e.mate(E::cw(y)) != E::ccw(x)) return false;
  return E::is_over(x) == E::is_over(y);
}

struct Triangle {
  int yE, yNE, yW, ySW;
  int xW, xNW, xE, xSE;
  int zSE, zSW, zNW, zNE;
};

bool triangle_at(const Embedding& e, int a, Triangle& t) {
  if (a < 0 || a >= e.slot_count()) return false;
  t.yE = a;
  t.xW = e.mate(a);
  t.xNW = E::cw(t.xW);
  t.zSE = e.mate(t.xNW);
  t.zSW = E::cw(t.zSE);
  t.yNE = e.mate(t.zSW);
  if (E::cw(t.yNE) != a) return false;
  int y = E::crossing_of(t.yE), x = E::crossing_of(t.xW), z = E::crossing_of(t.zSE);
  if (x == y || y == z || x == z) return false;
  if (E::is_over(t.yE) != E::is_over(t.xW)) return false;
  t.yW = E::opposite(t.yE);
  t.ySW = E::cw(t.yE);
  t.xE = E::opposite(t.xW);
  t.xSE = E::ccw(t.xW);
  t.zNW = E::opposite(t.zSE);
  t.zNE = E::ccw(t.zSE);
  return true;
}

Embedding r1_add(const Embedding& e, const ReidemeisterMove& m) {
  Embedding r = e;
  int x = r.add_crossing();
  auto xs = [x](int p) { return E::slot(x, p); };
  if (e.crossing_count() == 0) {
    r.connect(xs(2), xs(3));
    r.connect(xs(1), xs(0));
    r.set_free_loops(e.free_loops() - 1);
    if (m.sign < 0) r.switch_crossing(x);
    return r;
  }
  int s = m.a;
  int t = e.mate(s);
  r.connect(s, xs(0));
  if (m.left) {
    r.connect(xs(2), xs(3));
    r.connect(xs(1), t);
  } else {
    r.connect(xs(2), xs(1));
    r.connect(xs(3), t);
  }
  // Entering the loop on the under-strand gives + for a left loop, - for right.
  int natural = m.left ? 1 : -1;
  if (natural != m.sign) r.switch_crossing(x);
  return r;
}

Embedding r2_add(const Embedding& e, const ReidemeisterMove& m) {
  Embedding r = e;
  int a1 = m.a, b1 = e.mate(m.a), a2 = m.b, b2 = e.mate(m.b);
  int P = r.add_crossing();
  int Q = r.add_crossing();
  // Geometric arms S, E, N, W; the pushed strand runs S-N.
  std::array<int, 4> pos = m.sign > 0 ? std::array<int, 4>{3, 0, 1, 2}
                                      : std::array<int, 4>{0, 1, 2, 3};
  enum { S, Ea, N, W };
  auto p = [&](int arm) { return E::slot(P, pos[arm]); };
  auto q = [&](int arm) { return E::slot(Q, pos[arm]); };
  r.connect(a1, p(S));
  r.connect(b2, p(W));
  r.connect(p(Ea), q(W));
  r.connect(p(N), q(N));
  r.connect(b1, q(S));
  r.connect(a2, q(Ea));
  return r;
}

Embedding r3(const Embedding& e, const Triangle& t) {
  Embedding r = e;
  const std::array<std::pair<int, int>, 6> remap{{{t.yW, t.xW},
                                                  {t.xE, t.yE},
                                                  {t.ySW, t.zSW},
                                                  {t.zNE, t.yNE},
                                                  {t.zNW, t.xNW},
                                                  {t.xSE, t.zSE}}};
  auto mapped = [&](int s) {
    for (const auto& [from, to] : remap)
      if (from == s) return to;
    return -1;
  };
  std::vector<std::pair<int, int>> edges;
  for (const auto& [from, to] : remap) {
    int other = e.mate(from);
    int other_new = mapped(other);
    if (other_new == -1) {
      edges.emplace_back(to, other);
    } else if (from < other) {
      edges.emplace_back(to, other_new);
    }
  }
  edges.emplace_back(t.xE, t.yW);
  edges.emplace_back(t.xSE, t.zNW);
  edges.emplace_back(t.ySW, t.zNE);
  for (const auto& [u, v] : edges) r.connect(u, v);
  return r;
}

}  // namespace

std::string ReidemeisterMove::to_string() const {
  switch (kind) {
    case MoveKind::kR1Add:
      return "R1+ slot " + std::to_string(a) + (left ? " left" : " right") +
             (sign > 0 ? " positive" : " negative");
    case MoveKind::kR1Remove: return "R1- crossing " + std::to_string(a);
    case MoveKind::kR2Add:
      return "R2+ slots " + std::to_string(a) + "," + std::to_string(b) +
             (sign > 0 ? " over" : " under");
    case MoveKind::kR2Remove: return "R2- slot " + std::to_string(a);
    case MoveKind::kR3: return "R3 slot " + std::to_string(a);
  }
  return "?";
}

bool is_applicable(const Embedding& e, const ReidemeisterMove& m) {
  const int n = e.crossing_count();
  const int slots = e.slot_count();
  switch (m.kind) {
    case MoveKind::kR1Add:
      if (m.sign != 1 && m.sign != -1) return false;
      if (n == 0) return e.free_loops() > 0;
      return m.a >= 0 && m.a < slots;
    case MoveKind::kR1Remove: return m.a >= 0 && m.a < n && is_kink(e, m.a);
    case MoveKind::kR2Add: {
      if (n == 0 || m.a < 0 || m.a >= slots || m.b < 0 || m.b >= slots) return false;
      if (m.a == m.b || e.mate(m.a) == m.b) return false;
      Embedding::Faces f = e.faces();
      return f.left_of[m.a] == f.left_of[m.b];
    }
    case MoveKind::kR2Remove: return m.a >= 0 && m.a < slots && is_clasp_slot(e, m.a);
    case MoveKind::kR3: {
      Triangle t;
      return triangle_at(e, m.a, t);
    }
  }
  return false;
}

Embedding apply_move(const Embedding& e, const ReidemeisterMove& m) {
  if (!is_applicable(e, m)) throw InvalidDiagramError("move not applicable: " + m.to_string());
  switch (m.kind) {
    case MoveKind::kR1Add: return r1_add(e, m);
    case MoveKind::kR1Remove: {
      Embedding r = e;
      r.splice_out({m.a});
      return r;
    }
    case MoveKind::kR2Add: return r2_add(e, m);
    case MoveKind::kR2Remove: {
      Embedding r = e;
      r.splice_out({E::crossing_of(m.a), E::crossing_of(e.mate(m.a))});
      return r;
    }
    case MoveKind::kR3: {
      Triangle t;
      triangle_at(e, m.a, t);
      return r3(e, t);
    }
  }
  throw InvalidDiagramError("unknown move");
}

PlanarDiagram apply_reidemeister(const PlanarDiagram& d, const ReidemeisterMove& m) {
  return apply_move(Embedding::from_diagram(d), m).to_diagram();
}

std::vector<ReidemeisterMove> applicable_moves(const Embedding& e, MoveKind kind) {
  std::vector<ReidemeisterMove> out;
  const int n = e.crossing_count();
  switch (kind) {
    case MoveKind::kR1Add:
      if (n == 0) {
        if (e.free_loops() > 0) {
          out.push_back({kind, 0, 0, 1, true});
          out.push_back({kind, 0, 0, -1, true});
        }
        break;
      }
      for (int s = 0; s < e.slot_count(); ++s)
        for (bool left : {true, false})
          for (int sign : {1, -1}) out.push_back({kind, s, 0, sign, left});
      break;
    case MoveKind::kR1Remove:
      for (int c = 0; c < n; ++c)
        if (is_kink(e, c)) out.push_back({kind, c, 0, 1, true});
      break;
    case MoveKind::kR2Add: {
      if (n == 0) break;
      Embedding::Faces f = e.faces();
      std::vector<std::vector<int>> boundary(f.count);
      for (int s = 0; s < e.slot_count(); ++s) boundary[f.left_of[s]].push_back(s);
      for (const auto& face : boundary)
        for (int a : face)
          for (int b : face)
            if (a != b && e.mate(a) != b)
              for (int sign : {1, -1}) out.push_back({kind, a, b, sign, true});
      break;
    }
    case MoveKind::kR2Remove:
      for (int s = 0; s < e.slot_count(); ++s)
        if (is_clasp_slot(e, s)) out.push_back({kind, s, 0, 1, true});
      break;
    case MoveKind::kR3:
      for (int s = 0; s < e.slot_count(); ++s) {
        Triangle t;
        if (triangle_at(e, s, t)) out.push_back({kind, s, 0, 1, true});
      }
      break;
  }
  return out;
}

int find_kink(const Embedding& e) {
  for (int c = 0; c < e.crossing_count(); ++c)
    if (is_kink(e, c)) return c;
  return -1;
}

int find_clasp(const Embedding& e) {
  for (int s = 0; s < e.slot_count(); ++s)
    if (is_clasp_slot(e, s)) return s;
  return -1;
}

}  // namespace knotsieve
