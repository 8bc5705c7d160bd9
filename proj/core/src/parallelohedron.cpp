#include "parv/parallelohedron.hpp"

#include <algorithm>
#include <map>

#include "parv/dd.hpp"
#include "parv/errors.hpp"
#include "parv/face_enum.hpp"

namespace parv {

Parallelohedron voronoi_cell(const Lattice& l) {
  Parallelohedron out;
  out.relevant = relevant_vectors(l);
  out.hrep.dim = l.dim();
  const auto& gram = l.construction_form().gram();
  for (std::size_t i = 0; i < out.relevant.vectors.size(); ++i) {
    const Vec v = to_vec(out.relevant.vectors[i]);
    out.hrep.halfspaces.push_back({mat_apply(gram, v), out.relevant.norm2[i] / 2});
  }
  auto dd = dual_description(out.hrep);
  if (!dd.redundant.empty())
    throw internal_error("voronoi_cell: a relevant vector did not define a facet");
  out.vrep = std::move(dd.polytope);
  return out;
}

std::vector<int> FaceLattice::ids_of_dim(int dim) const {
  std::vector<int> out;
  for (const auto& f : faces)
    if (f.dim == dim) out.push_back(f.id);
  return out;
}

std::vector<long> FaceLattice::fvector() const {
  std::vector<long> fv(space_dim + 1, 0);
  for (const auto& f : faces)
    if (f.dim >= 0) ++fv[f.dim];
  return fv;
}

bool FaceLattice::face_leq(int inner, int outer) const {
  const auto& a = face(inner).vertex_ids;
  const auto& b = face(outer).vertex_ids;
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

int FaceLattice::find_by_vertex_ids(const std::vector<int>& ids) const {
  for (const auto& f : faces)
    if (f.vertex_ids == ids) return f.id;
  return -1;
}

FaceLattice face_lattice(const Parallelohedron& cell) {
  FaceLattice fl;
  const int nv = static_cast<int>(cell.vrep.vertices.size());
  fl.space_dim = cell.hrep.dim;

  std::vector<std::vector<int>> facet_members(cell.hrep.halfspaces.size());
  for (int vi = 0; vi < nv; ++vi)
    for (int fi : cell.vrep.vertex_facets[vi]) facet_members[fi].push_back(vi);

  const auto sets = incidence_closure(nv, facet_members);
  std::vector<Face> faces;
  for (const auto& s : sets) {
    Face f;
    f.vertex_ids = s;
    for (int vi : s) f.vertices.push_back(cell.vrep.vertices[vi]);
    if (s.empty()) {
      f.dim = -1;
    } else {
      const AffineSubspace hull = affine_hull(f.vertices);
      f.dim = hull.dim();
      f.lin_basis = hull.direction_basis;
    }
    for (std::size_t fi = 0; fi < facet_members.size(); ++fi) {
      std::vector<int> sorted = facet_members[fi];
      std::sort(sorted.begin(), sorted.end());
      if (std::includes(sorted.begin(), sorted.end(), s.begin(), s.end()))
        f.facet_set.push_back(static_cast<int>(fi));
    }
    faces.push_back(std::move(f));
  }
  std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.vertex_ids < b.vertex_ids;
  });
  for (std::size_t i = 0; i < faces.size(); ++i) faces[i].id = static_cast<int>(i);
  fl.faces = std::move(faces);
  return fl;
}

Vec central_symmetry_check(const Parallelohedron& cell) {
  std::vector<Vec> negated;
  for (const auto& v : cell.vrep.vertices) negated.push_back(vec_neg(v));
  std::sort(negated.begin(), negated.end());
  if (negated != cell.vrep.vertices)
    throw internal_error("central_symmetry_check: vertex set not symmetric about 0");
  // Every facet must have a parallel opposite: halfspaces come from +-pairs
  // of relevant vectors, so look for the negated normal with equal offset.
  for (const auto& hs : cell.hrep.halfspaces) {
    bool found = false;
    for (const auto& other : cell.hrep.halfspaces)
      found = found || (other.normal == vec_neg(hs.normal) && other.offset == hs.offset);
    if (!found)
      throw internal_error("central_symmetry_check: facet without a parallel opposite");
  }
  return zero_vec(cell.hrep.dim);
}

bool tile_contains(const Parallelohedron& cell, const IVec& t, const Vec& point) {
  const Vec shifted = vec_sub(point, to_vec(t));
  return satisfies(cell.hrep, shifted);
}

StandardFaceResult standard_face_center(const Parallelohedron& cell, const FaceLattice& fl,
                                        const IVec& t1, const IVec& t2) {
  if (t1 == t2) throw input_error("standard_face_center: tiles coincide");
  HPolyhedron both;
  both.dim = cell.hrep.dim;
  for (const auto& shift : {t1, t2}) {
    const Vec s = to_vec(shift);
    for (const auto& hs : cell.hrep.halfspaces)
      both.halfspaces.push_back({hs.normal, hs.offset + dot(hs.normal, s)});
  }
  std::vector<Vec> inter;
  try {
    inter = dual_description(both).polytope.vertices;
  } catch (const input_error&) {
    throw input_error("standard_face_center: tiles do not intersect");
  }

  StandardFaceResult out;
  out.intersection_vertices = inter;
  out.center = vec_scale(Scalar(1, 2), vec_add(to_vec(t1), to_vec(t2)));

  // Eq-style center membership and central symmetry of the intersection.
  if (!satisfies(both, out.center))
    throw internal_error("standard_face_center: midpoint outside the intersection");
  std::vector<Vec> reflected;
  for (const auto& v : inter)
    reflected.push_back(vec_sub(vec_scale(Scalar(2), out.center), v));
  std::sort(reflected.begin(), reflected.end());
  if (reflected != inter)
    throw internal_error("standard_face_center: intersection not centrally symmetric");

  // Face-to-face: the intersection shifted back by t_i must be a face of P0.
  int matched = -1;
  for (const auto& shift : {t1, t2}) {
    std::vector<int> ids;
    for (const auto& v : inter) {
      const Vec local = vec_sub(v, to_vec(shift));
      const auto it = std::find(cell.vrep.vertices.begin(), cell.vrep.vertices.end(), local);
      if (it == cell.vrep.vertices.end()) {
        matched = -2;
        break;
      }
      ids.push_back(static_cast<int>(it - cell.vrep.vertices.begin()));
    }
    if (matched == -2) break;
    std::sort(ids.begin(), ids.end());
    const int fid = fl.find_by_vertex_ids(ids);
    if (fid < 0) {
      matched = -2;
      break;
    }
    if (shift == t1) matched = fid;
  }
  if (matched < 0)
    throw internal_error("standard_face_center: intersection is not a face of both tiles");
  out.face_id = matched;
  return out;
}

Tiling build_tiling(const Lattice& l) {
  Tiling t{l, voronoi_cell(l), {}, Scalar(0), Scalar(0)};
  t.faces = face_lattice(t.cell);
  central_symmetry_check(t.cell);
  t.circumradius2 = covering_radius_bound(l, t.cell.vrep);
  t.star_search_r2 = Scalar(4) * t.circumradius2;
  return t;
}

}  // namespace parv
