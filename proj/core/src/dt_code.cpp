#include "knotsieve/dt_code.hpp"

#include "knotsieve/errors.hpp"

namespace knotsieve {

std::vector<int> dt_code(const Embedding& e, int start_slot) {
  const int n = e.crossing_count();
  if (e.component_count() != 1) throw MultiComponentError(e.component_count());
  if (n == 0) return {};
  Embedding::Trace t = e.trace_from(start_slot);
  std::vector<int> odd_label(n, 0), even_label(n, 0);
  for (int i = 0; i < 2 * n; ++i) {
    const int s = t.entries[i];
    const int label = i + 1;
    const int c = Embedding::crossing_of(s);
    if (label % 2 == 1) {
      if (odd_label[c] != 0) throw InvalidDiagramError("crossing visited twice at odd steps");
      odd_label[c] = label;
    } else {
      if (even_label[c] != 0) throw InvalidDiagramError("crossing visited twice at even steps");
      even_label[c] = Embedding::is_over(s) ? -label : label;
    }
  }
  std::vector<int> code(n, 0);
  for (int c = 0; c < n; ++c) code[(odd_label[c] - 1) / 2] = even_label[c];
  return code;
}

std::vector<int> dt_code(const PlanarDiagram& d) {
  Embedding e = Embedding::from_diagram(d);
  if (e.crossing_count() == 0) return {};
  // Position 0 is always entered in the PD orientation.
  Embedding::Trace t = e.trace_from(0);
  for (int c = 0; c < d.crossing_count(); ++c)
    for (int p = 0; p < 4; ++p)
      if (d.crossings[c][p] == 1 && t.entered[Embedding::slot(c, p)])
        return dt_code(e, Embedding::slot(c, p));
  throw InvalidDiagramError("arc 1 not found");
}

std::string dt_to_string(const std::vector<int>& code) {
  std::string out;
  for (std::size_t i = 0; i < code.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(code[i]);
  }
  return out;
}

}  // namespace knotsieve
