#pragma once

#include "parv/linalg.hpp"

namespace parv {

/// One closed halfspace <normal, x> <= offset in the standard coordinate
/// pairing (metric-free; any inner-product geometry is baked into the
/// normal by the caller).
struct Halfspace {
  Vec normal;
  Scalar offset;
};

struct HPolyhedron {
  int dim = 0;
  std::vector<Halfspace> halfspaces;
};

/// Vertex description with vertex <-> facet incidence, as produced by
/// dual_description. Vertices are sorted lexicographically.
struct VPolytope {
  std::vector<Vec> vertices;
  std::vector<std::vector<int>> vertex_facets;  // per vertex, sorted halfspace indices met with equality
};

bool satisfies(const HPolyhedron& h, const Vec& point);

}  // namespace parv
