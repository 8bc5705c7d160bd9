#pragma once

#include "parv/affine.hpp"
#include "parv/dd.hpp"

namespace parv {

/// Facet description of conv(points) for a full-dimensional point set,
/// obtained by running the double description method on the polar body
/// (the centroid of the input is an interior point, so the polar is a
/// bounded polytope whose vertices are the facet normals).
struct HullDescription {
  HPolyhedron facets;
  std::vector<std::vector<int>> facet_members;  // input point indices tight on each facet
  std::vector<int> hull_vertices;               // input point indices that are 0-faces
};

HullDescription hull_description(const std::vector<Vec>& points);

/// True iff `point` is a vertex of conv(points): decided by the exact LP
/// separating the point from the hull of the others. Independent of
/// hull_description, which makes it usable as a cross-check.
bool is_hull_vertex(const std::vector<Vec>& points, std::size_t index);

/// Exact squared k'-dimensional volume (k' = within.dim) of conv(points)
/// with respect to `form`, via a pulling triangulation: if V is the sum of
/// simplex volumes in within-basis coordinates and D the Gram determinant
/// of the basis, the result is V^2 * D, which is rational. Returns 0 iff
/// the points do not span `within`.
Scalar squared_volume(const std::vector<Vec>& points, const AffineSubspace& within,
                      const QuadraticForm& form);
Scalar squared_volume(const VPolytope& p, const AffineSubspace& within,
                      const QuadraticForm& form);

}  // namespace parv
