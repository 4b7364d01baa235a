#include "knotsieve/determinant.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

#include "knotsieve/bracket.hpp"
#include "knotsieve/errors.hpp"

namespace knotsieve {

GoeritzData goeritz_data(const Embedding& e, int arc1_head_slot) {
  if (e.component_count() != 1) throw MultiComponentError(e.component_count());
  GoeritzData g;
  const int n = e.crossing_count();
  if (n == 0) return g;
  Embedding::Faces f = e.faces();
  // Adjacent faces across every edge get opposite colors.
  std::vector<std::vector<int>> adj(f.count);
  for (int s = 0; s < e.slot_count(); ++s) {
    int a = f.left_of[s], b = f.left_of[e.mate(s)];
    adj[a].push_back(b);
  }
  g.face_shaded.assign(f.count, -1);
  int start = f.left_of[arc1_head_slot];
  g.face_shaded[start] = 0;
  std::queue<int> q;
  q.push(start);
  while (!q.empty()) {
    int a = q.front();
    q.pop();
    for (int b : adj[a]) {
      if (g.face_shaded[b] == -1) {
        g.face_shaded[b] = 1 - g.face_shaded[a];
        q.push(b);
      } else if (g.face_shaded[b] == g.face_shaded[a]) {
        throw InvalidDiagramError("faces are not two-colorable");
      }
    }
  }
  std::vector<int> index(f.count, -1);
  for (int face = 0; face < f.count; ++face) {
    if (g.face_shaded[face] == 1) {
      index[face] = static_cast<int>(g.shaded_faces.size());
      g.shaded_faces.push_back(face);
    }
  }
  const int k = static_cast<int>(g.shaded_faces.size());
  std::vector<std::vector<long>> full(k, std::vector<long>(k, 0));
  for (int c = 0; c < n; ++c) {
    int i, j, eta;
    if (g.face_shaded[f.left_of[Embedding::slot(c, 0)]] == 1) {
      i = index[f.left_of[Embedding::slot(c, 0)]];
      j = index[f.left_of[Embedding::slot(c, 2)]];
      eta = 1;
    } else {
      i = index[f.left_of[Embedding::slot(c, 1)]];
      j = index[f.left_of[Embedding::slot(c, 3)]];
      eta = -1;
    }
    if (i == j) continue;
    full[i][j] -= eta;
    full[j][i] -= eta;
    full[i][i] += eta;
    full[j][j] += eta;
  }
  g.matrix.assign(k > 0 ? k - 1 : 0, std::vector<mpz_class>(k > 0 ? k - 1 : 0));
  for (int i = 1; i < k; ++i)
    for (int j = 1; j < k; ++j) g.matrix[i - 1][j - 1] = full[i][j];
  return g;
}

GoeritzData goeritz_data(const PlanarDiagram& d) {
  Embedding e = Embedding::from_diagram(d);
  if (e.crossing_count() == 0) return goeritz_data(e);
  Embedding::Trace t = e.trace_from(0);
  int head = 0;
  for (int c = 0; c < d.crossing_count(); ++c)
    for (int p = 0; p < 4; ++p)
      if (d.crossings[c][p] == 1 && t.entered[Embedding::slot(c, p)]) head = Embedding::slot(c, p);
  return goeritz_data(e, head);
}

mpz_class bareiss_determinant(std::vector<std::vector<mpz_class>> m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  mpz_class sign = 1;
  mpz_class prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

mpz_class determinant_goeritz(const Embedding& e) {
  return abs(bareiss_determinant(goeritz_data(e).matrix));
}

mpz_class determinant_goeritz(const PlanarDiagram& d) {
  return abs(bareiss_determinant(goeritz_data(d).matrix));
}

mpz_class determinant_via_jones(const PlanarDiagram& d) {
  mpq_class v = evaluate(jones_polynomial(d), -1);
  return abs(v.get_num());
}

bool passes_det_filter(const PlanarDiagram& d) { return determinant_goeritz(d) == 1; }

}  // namespace knotsieve
