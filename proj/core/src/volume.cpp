#include "parv/volume.hpp"

#include <algorithm>

#include "parv/errors.hpp"
#include "parv/lp.hpp"

namespace parv {

namespace {

// Pulling triangulation of conv(pts) (full-dimensional in its space):
// cone every facet avoiding the pulled vertex over that vertex. Returns
// simplices as tuples of indices into `ids`.
std::vector<std::vector<int>> triangulate(const std::vector<Vec>& pts,
                                          const std::vector<int>& ids) {
  const int dim = static_cast<int>(pts[0].size());
  if (dim == 1) {
    int lo = 0, hi = 0;
    for (std::size_t i = 1; i < pts.size(); ++i) {
      if (pts[i][0] < pts[lo][0]) lo = static_cast<int>(i);
      if (pts[i][0] > pts[hi][0]) hi = static_cast<int>(i);
    }
    return {{ids[lo], ids[hi]}};
  }
  const auto hull = hull_description(pts);
  // Lexicographically smallest point is always a hull vertex.
  int apex = 0;
  for (std::size_t i = 1; i < pts.size(); ++i)
    if (pts[i] < pts[apex]) apex = static_cast<int>(i);

  std::vector<std::vector<int>> simplices;
  for (std::size_t f = 0; f < hull.facet_members.size(); ++f) {
    const auto& members = hull.facet_members[f];
    if (std::find(members.begin(), members.end(), apex) != members.end()) continue;
    std::vector<Vec> fpts;
    for (int m : members) fpts.push_back(pts[m]);
    const AffineSubspace fsub = affine_hull(fpts);
    if (fsub.dim() != dim - 1) throw internal_error("triangulate: degenerate facet");
    std::vector<Vec> local;
    std::vector<int> local_ids;
    for (std::size_t i = 0; i < fpts.size(); ++i) {
      auto coords = coordinates_in(fsub.direction_basis, vec_sub(fpts[i], fsub.base_point));
      if (!coords) throw internal_error("triangulate: facet point outside its hull");
      local.push_back(std::move(*coords));
      local_ids.push_back(ids[members[i]]);
    }
    for (auto& s : triangulate(local, local_ids)) {
      s.push_back(ids[apex]);
      simplices.push_back(std::move(s));
    }
  }
  return simplices;
}

}  // namespace

HullDescription hull_description(const std::vector<Vec>& points) {
  if (points.empty()) throw input_error("hull_description: no points");
  const int dim = static_cast<int>(points[0].size());
  if (affine_rank(points) != dim)
    throw input_error("hull_description: points are not full-dimensional");

  Vec centroid = zero_vec(dim);
  for (const auto& p : points) centroid = vec_add(centroid, p);
  centroid = vec_scale(Scalar(1, static_cast<unsigned long>(points.size())), centroid);

  HPolyhedron polar;
  polar.dim = dim;
  for (std::size_t i = 0; i < points.size(); ++i) {
    Vec shifted = vec_sub(points[i], centroid);
    if (is_zero_vec(shifted)) continue;
    polar.halfspaces.push_back({std::move(shifted), Scalar(1)});
  }
  const auto polar_dd = dual_description(polar);

  HullDescription out;
  out.facets.dim = dim;
  for (const auto& y : polar_dd.polytope.vertices) {
    // Facet <y, x - centroid> <= 1 in original coordinates.
    out.facets.halfspaces.push_back({y, Scalar(1) + dot(y, centroid)});
  }
  out.facet_members.resize(out.facets.halfspaces.size());
  std::vector<Mat> active(points.size());
  for (std::size_t f = 0; f < out.facets.halfspaces.size(); ++f) {
    const auto& hs = out.facets.halfspaces[f];
    for (std::size_t i = 0; i < points.size(); ++i) {
      const Scalar v = dot(hs.normal, points[i]);
      if (v > hs.offset) throw internal_error("hull_description: point outside hull");
      if (v == hs.offset) {
        out.facet_members[f].push_back(static_cast<int>(i));
        active[i].push_back(hs.normal);
      }
    }
  }
  for (std::size_t i = 0; i < points.size(); ++i)
    if (rank(active[i]) == dim) out.hull_vertices.push_back(static_cast<int>(i));
  return out;
}

bool is_hull_vertex(const std::vector<Vec>& points, std::size_t index) {
  if (index >= points.size()) throw input_error("is_hull_vertex: index out of range");
  // v is a vertex iff it cannot be written as a convex combination of the
  // other points; encode the combination weights as LP variables.
  const int n = static_cast<int>(points.size());
  const int dim = static_cast<int>(points[0].size());
  HPolyhedron lp;
  lp.dim = n - 1;
  std::vector<int> others;
  for (int i = 0; i < n; ++i)
    if (i != static_cast<int>(index)) others.push_back(i);
  for (int j = 0; j < n - 1; ++j) {
    Vec row = zero_vec(n - 1);
    row[j] = -1;
    lp.halfspaces.push_back({std::move(row), Scalar(0)});  // weights >= 0
  }
  Vec ones(n - 1, Scalar(1));
  lp.halfspaces.push_back({ones, Scalar(1)});
  lp.halfspaces.push_back({vec_neg(ones), Scalar(-1)});  // weights sum to 1
  for (int c = 0; c < dim; ++c) {
    Vec row(n - 1);
    for (int j = 0; j < n - 1; ++j) row[j] = points[others[j]][c];
    const Scalar target = points[index][c];
    lp.halfspaces.push_back({row, target});
    lp.halfspaces.push_back({vec_neg(row), -target});
  }
  return !feasible_point(lp).has_value();
}

Scalar squared_volume(const std::vector<Vec>& points, const AffineSubspace& within,
                      const QuadraticForm& form) {
  if (points.empty()) throw input_error("squared_volume: no points");
  const int kp = within.dim();
  std::vector<Vec> local;
  for (const auto& p : points) {
    auto coords = coordinates_in(within.direction_basis, vec_sub(p, within.base_point));
    if (!coords) throw input_error("squared_volume: point outside the given subspace");
    local.push_back(std::move(*coords));
  }
  std::sort(local.begin(), local.end());
  local.erase(std::unique(local.begin(), local.end()), local.end());
  if (affine_rank(local) < kp) return Scalar(0);
  if (kp == 0) return Scalar(1);

  // Gram determinant of the subspace basis under `form`.
  Mat basis_gram(kp, Vec(kp));
  for (int i = 0; i < kp; ++i)
    for (int j = 0; j < kp; ++j)
      basis_gram[i][j] = form.pairing(within.direction_basis[i], within.direction_basis[j]);
  const Scalar delta = det(basis_gram);

  std::vector<int> ids(local.size());
  for (std::size_t i = 0; i < local.size(); ++i) ids[i] = static_cast<int>(i);
  Scalar factor = 0;
  Int kfact = 1;
  for (int i = 2; i <= kp; ++i) kfact *= i;
  for (const auto& s : triangulate(local, ids)) {
    Mat edges;
    for (std::size_t i = 1; i < s.size(); ++i)
      edges.push_back(vec_sub(local[s[i]], local[s[0]]));
    Scalar volume = det(edges);
    if (volume < 0) volume = -volume;
    factor += volume / Scalar(kfact);
  }
  return factor * factor * delta;
}

Scalar squared_volume(const VPolytope& p, const AffineSubspace& within,
                      const QuadraticForm& form) {
  return squared_volume(p.vertices, within, form);
}

}  // namespace parv
