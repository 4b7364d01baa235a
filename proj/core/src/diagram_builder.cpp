#include "knotsieve/diagram_builder.hpp"

#include <cstdint>
#include <stdexcept>
#include <utility>

namespace knotsieve {

int DiagramBuilder::new_endpoint(int slot, int through) {
  int id = static_cast<int>(link_.size());
  link_.push_back(-1);
  through_.push_back(through);
  slot_of_.push_back(slot);
  return id;
}

int DiagramBuilder::add_crossing() {
  int c = crossing_count();
  for (int p = 0; p < 4; ++p) slot_endpoint_.push_back(new_endpoint(4 * c + p, -1));
  return c;
}

std::pair<int, int> DiagramBuilder::add_wire() {
  int a = new_endpoint(-1, -1);
  int b = new_endpoint(-1, a);
  through_[a] = b;
  return {a, b};
}

void DiagramBuilder::link(int a, int b) {
  if (link_[a] != -1 || link_[b] != -1) throw std::logic_error("endpoint linked twice");
  link_[a] = b;
  link_[b] = a;
}

void DiagramBuilder::reflect_crossings(int first, int last) {
  for (int c = first; c < last; ++c) {
    int e1 = slot_endpoint_[4 * c + 1];
    int e3 = slot_endpoint_[4 * c + 3];
    std::swap(slot_endpoint_[4 * c + 1], slot_endpoint_[4 * c + 3]);
    std::swap(slot_of_[e1], slot_of_[e3]);
  }
}

Embedding DiagramBuilder::finish() const {
  const int n = crossing_count();
  std::vector<int> mate(4 * n, Embedding::kUnset);
  std::vector<std::uint8_t> used(link_.size(), 0);
  for (int s = 0; s < 4 * n; ++s) {
    int x = slot_endpoint_[s];
    int y = link_[x];
    if (y == -1) throw std::logic_error("unlinked endpoint");
    while (through_[y] != -1) {
      used[y] = 1;
      used[through_[y]] = 1;
      y = link_[through_[y]];
      if (y == -1) throw std::logic_error("unlinked endpoint");
    }
    mate[s] = slot_of_[y];
  }
  int loops = 0;
  for (std::size_t w = 0; w < link_.size(); ++w) {
    if (through_[w] == -1 || used[w]) continue;
    ++loops;
    int y = static_cast<int>(w);
    while (!used[y]) {
      used[y] = 1;
      used[through_[y]] = 1;
      y = link_[through_[y]];
      if (y == -1) throw std::logic_error("unlinked endpoint");
    }
  }
  return Embedding::from_mates(std::move(mate), loops);
}

}  // namespace knotsieve
