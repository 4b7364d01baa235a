#include "knotsieve/polyhedron.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "knotsieve/errors.hpp"

namespace knotsieve {

std::string ConwayPolyhedron::to_string() const {
  std::string out = name + ' ' + std::to_string(vertex_count());
  for (const auto& v : vertices) {
    out += " V(" + std::to_string(v[0]) + ',' + std::to_string(v[1]) + ',' +
           std::to_string(v[2]) + ',' + std::to_string(v[3]) + ')';
  }
  return out;
}

ConwayPolyhedron ConwayPolyhedron::parse(std::string_view line) {
  std::istringstream in{std::string(line)};
  ConwayPolyhedron p;
  int declared = 0;
  if (!(in >> p.name >> declared)) throw ParseError("polyhedron: expected name and vertex count");
  std::string rest;
  std::getline(in, rest);
  // Reuse the PD reader by spelling vertices as crossings.
  for (char& c : rest)
    if (c == 'V') c = 'X';
  PlanarDiagram body = PlanarDiagram::parse(rest);
  p.vertices = body.crossings;
  if (p.vertex_count() != declared)
    throw ParseError("polyhedron " + p.name + ": declares " + std::to_string(declared) +
                     " vertices but lists " + std::to_string(p.vertex_count()));
  return p;
}

Embedding polyhedron_graph(const ConwayPolyhedron& p) {
  PlanarDiagram as_pd{p.vertices};
  return Embedding::from_diagram(as_pd);
}

std::vector<std::string> polyhedron_problems(const ConwayPolyhedron& p) {
  std::vector<std::string> problems;
  Embedding g;
  try {
    g = polyhedron_graph(p);
  } catch (const InvalidDiagramError& e) {
    problems.push_back(std::string("not 4-valent: ") + e.what());
    return problems;
  }
  if (p.vertex_count() < 6) problems.push_back("fewer than six vertices");
  if (!g.is_connected()) {
    problems.push_back("not connected");
    return problems;
  }
  Embedding::Faces f = g.faces();
  if (f.count != g.crossing_count() + 2) problems.push_back("not planar");
  std::vector<int> size(f.count, 0);
  for (int face : f.left_of) ++size[face];
  for (int s : size) {
    if (s <= 2) {
      problems.push_back("has a monogon or bigon face");
      break;
    }
  }
  return problems;
}

std::vector<ConwayPolyhedron> parse_catalog(std::istream& in) {
  std::vector<ConwayPolyhedron> out;
  std::string line;
  while (std::getline(in, line)) {
    std::size_t i = 0;
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i == line.size() || line[i] == '#') continue;
    ConwayPolyhedron p = ConwayPolyhedron::parse(line);
    auto problems = polyhedron_problems(p);
    if (!problems.empty())
      throw InvalidDiagramError("polyhedron " + p.name + ": " + problems.front());
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<ConwayPolyhedron> load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open catalog " + path);
  return parse_catalog(in);
}

Embedding polyhedron_embedding(const ConwayPolyhedron& p, const std::vector<Tangle>& slots) {
  if (static_cast<int>(slots.size()) != p.vertex_count())
    throw std::invalid_argument("polyhedron " + p.name + " has " +
                                std::to_string(p.vertex_count()) + " slots, got " +
                                std::to_string(slots.size()));
  DiagramBuilder b;
  std::vector<std::array<int, 4>> ports;
  ports.reserve(slots.size());
  for (const Tangle& t : slots) {
    TangleEnds e = build_tangle(b, t);
    ports.push_back({e.nw, e.sw, e.se, e.ne});
  }
  Embedding g = polyhedron_graph(p);
  for (int s = 0; s < g.slot_count(); ++s) {
    int m = g.mate(s);
    if (s < m)
      b.link(ports[Embedding::crossing_of(s)][Embedding::position_of(s)],
             ports[Embedding::crossing_of(m)][Embedding::position_of(m)]);
  }
  return b.finish();
}

PlanarDiagram polyhedron_substitute(const ConwayPolyhedron& p, const std::vector<Tangle>& slots) {
  return polyhedron_embedding(p, slots).to_diagram();
}

}  // namespace knotsieve
