#ifndef KNOTSIEVE_POLYHEDRON_HPP
#define KNOTSIEVE_POLYHEDRON_HPP

#include <array>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "knotsieve/embedding.hpp"
#include "knotsieve/tangle.hpp"

namespace knotsieve {

/// Template for substitution: a 4-valent planar graph whose vertices receive
/// tangles. Each vertex lists its edge labels counterclockwise in the order
/// NW, SW, SE, NE, which is also the boundary order of the inserted tangle.
///
/// Catalog line format: `name vertex_count V(a,b,c,d) V(...) ...`. Blank lines
/// and lines starting with `#` are ignored.
struct ConwayPolyhedron {
  std::string name;
  std::vector<std::array<int, 4>> vertices;

  int vertex_count() const noexcept { return static_cast<int>(vertices.size()); }
  std::string to_string() const;
  static ConwayPolyhedron parse(std::string_view line);
};

/// Empty when the template is planar, 4-valent, connected, has at least six
/// vertices and no monogon or bigon faces.
std::vector<std::string> polyhedron_problems(const ConwayPolyhedron& p);

std::vector<ConwayPolyhedron> parse_catalog(std::istream& in);
/// Reads and validates a catalog file; throws ParseError or InvalidDiagramError.
std::vector<ConwayPolyhedron> load_catalog(const std::string& path);

/// Graph of the template as an embedding (vertices as crossings, port order
/// NW, SW, SE, NE as positions 0..3). Over/under information is meaningless.
Embedding polyhedron_graph(const ConwayPolyhedron& p);

Embedding polyhedron_embedding(const ConwayPolyhedron& p, const std::vector<Tangle>& slots);
/// Canonical PD of the filled template. Throws std::invalid_argument on a
/// slot count mismatch and MultiComponentError for links.
PlanarDiagram polyhedron_substitute(const ConwayPolyhedron& p, const std::vector<Tangle>& slots);

}  // namespace knotsieve

#endif  // KNOTSIEVE_POLYHEDRON_HPP
