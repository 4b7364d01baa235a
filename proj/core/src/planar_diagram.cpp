#include "knotsieve/planar_diagram.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "knotsieve/embedding.hpp"
#include "knotsieve/errors.hpp"

namespace knotsieve {

std::string PlanarDiagram::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < crossings.size(); ++i) {
    if (i) out += ' ';
    const auto& x = crossings[i];
    out += "X(" + std::to_string(x[0]) + ',' + std::to_string(x[1]) + ',' +
           std::to_string(x[2]) + ',' + std::to_string(x[3]) + ')';
  }
  return out;
}

PlanarDiagram PlanarDiagram::parse(std::string_view text) {
  PlanarDiagram d;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
      ++i;
  };
  auto fail = [&](const std::string& what) {
    throw ParseError("PD: " + what + " at offset " + std::to_string(i));
  };
  for (;;) {
    skip_ws();
    if (i >= text.size()) break;
    if (text[i] != 'X') fail("expected 'X'");
    ++i;
    if (i >= text.size() || (text[i] != '(' && text[i] != '[')) fail("expected '('");
    char close = text[i] == '(' ? ')' : ']';
    ++i;
    Crossing x{};
    for (int k = 0; k < 4; ++k) {
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
      int v = 0;
      auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
      if (ec != std::errc()) fail("expected integer");
      i = static_cast<std::size_t>(ptr - text.data());
      x[k] = v;
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
      if (k < 3) {
        if (i >= text.size() || text[i] != ',') fail("expected ','");
        ++i;
      }
    }
    if (i >= text.size() || text[i] != close) fail("expected closing bracket");
    ++i;
    d.crossings.push_back(x);
  }
  return d;
}

std::string_view to_string(Violation v) {
  switch (v) {
    case Violation::kBadLabel: return "bad-label";
    case Violation::kDuplicateArcCount: return "duplicate-arc-count";
    case Violation::kDisconnected: return "disconnected";
    case Violation::kNonPlanar: return "non-planar";
    case Violation::kMultiComponent: return "multi-component";
    case Violation::kInconsistentOrientation: return "inconsistent-orientation";
  }
  return "unknown";
}

bool ValidationResult::has(Violation v) const {
  return std::find(violations.begin(), violations.end(), v) != violations.end();
}

std::string ValidationResult::describe() const {
  if (ok()) return "ok";
  std::string out;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i) out += ", ";
    out += to_string(violations[i]);
  }
  return out;
}

ValidationResult pd_validate(const PlanarDiagram& d) {
  ValidationResult r;
  const int n = d.crossing_count();
  if (n == 0) return r;
  std::vector<int> count(2 * n + 1, 0);
  bool bad_label = false;
  for (const auto& x : d.crossings) {
    for (int a : x) {
      if (a < 1 || a > 2 * n)
        bad_label = true;
      else
        ++count[a];
    }
  }
  bool bad_count = bad_label;
  for (int a = 1; a <= 2 * n; ++a)
    if (count[a] != 2) bad_count = true;
  if (bad_label) r.violations.push_back(Violation::kBadLabel);
  if (bad_count) r.violations.push_back(Violation::kDuplicateArcCount);
  if (!r.ok()) return r;

  Embedding e = Embedding::from_diagram(d);
  if (!e.is_connected()) {
    r.violations.push_back(Violation::kDisconnected);
  } else if (e.faces().count != n + 2) {
    r.violations.push_back(Violation::kNonPlanar);
  }
  if (e.component_count() != 1) {
    r.violations.push_back(Violation::kMultiComponent);
    return r;
  }
  for (int s : e.trace_from(0).entries) {
    if (!Embedding::is_over(s) && Embedding::position_of(s) != 0) {
      r.violations.push_back(Violation::kInconsistentOrientation);
      break;
    }
  }
  return r;
}

void require_valid(const PlanarDiagram& d) {
  ValidationResult r = pd_validate(d);
  if (r.ok()) return;
  if (r.violations.size() == 1 && r.has(Violation::kMultiComponent))
    throw MultiComponentError(Embedding::from_diagram(d).component_count());
  throw InvalidDiagramError("invalid diagram: " + r.describe());
}

std::vector<int> crossing_signs(const PlanarDiagram& d) {
  return Embedding::from_diagram(d).signs();
}

int writhe(const PlanarDiagram& d) { return Embedding::from_diagram(d).writhe(); }

PlanarDiagram mirror(const PlanarDiagram& d) {
  std::vector<int> s = crossing_signs(d);
  PlanarDiagram m = d;
  for (std::size_t c = 0; c < m.crossings.size(); ++c) {
    const auto& x = d.crossings[c];
    m.crossings[c] = s[c] > 0 ? PlanarDiagram::Crossing{x[3], x[0], x[1], x[2]}
                              : PlanarDiagram::Crossing{x[1], x[2], x[3], x[0]};
  }
  return m;
}

PlanarDiagram canonicalize(const PlanarDiagram& d) {
  return Embedding::from_diagram(d).to_diagram();
}

std::string diagram_key(const PlanarDiagram& d) {
  Embedding e = Embedding::from_diagram(d);
  if (e.crossing_count() == 0) return "";
  PlanarDiagram best = e.to_diagram_from(0);
  for (int s = 1; s < e.slot_count(); ++s) best = std::min(best, e.to_diagram_from(s));
  return best.to_string();
}

}  // namespace knotsieve
