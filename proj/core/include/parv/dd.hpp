#pragma once

#include "parv/polyhedron.hpp"

namespace parv {

class unbounded_error : public input_error {
public:
  unbounded_error(const std::string& what, Vec dir)
      : input_error(what), direction(std::move(dir)) {}
  Vec direction;
};

struct DdResult {
  VPolytope polytope;
  std::vector<int> redundant;  // halfspace indices that do not support a facet
};

/// Exact vertex enumeration of a bounded H-polyhedron by the double
/// description method on the homogenization cone, with halfspaces inserted
/// in lexicographic order (deterministic output). Boundedness is checked
/// first by LPs in the +-coordinate directions; an unbounded input throws
/// unbounded_error carrying the unbounded direction, an empty one throws
/// input_error. Every returned vertex is tight on >= dim(P) halfspaces and
/// the vertex/facet incidence is exact.
DdResult dual_description(const HPolyhedron& h);

/// Extreme rays of the pointed cone {x : <n, x> <= 0 for all n in normals}.
/// Rays are primitive integer vectors in deterministic (lex) order.
std::vector<Vec> cone_extreme_rays(const std::vector<Vec>& normals, int dim);

/// Facet normals (in <n, x> <= 0 form, primitive, lex-sorted) of the cone
/// generated by the given vectors. Requires the generators to span, i.e. a
/// full-dimensional cone.
std::vector<Vec> cone_facet_normals(const std::vector<Vec>& generators, int dim);

}  // namespace parv
