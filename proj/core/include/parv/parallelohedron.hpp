#pragma once

#include "parv/affine.hpp"
#include "parv/lattice.hpp"

namespace parv {

/// The prototile: Voronoi cell of the lattice under the construction form.
/// Its halfspaces are <x, v>_{G_V} <= ||v||^2_{G_V}/2, one per relevant
/// vector, expressed in the standard pairing (normal = G_V v).
struct Parallelohedron {
  HPolyhedron hrep;
  VPolytope vrep;
  RelevantVectorSet relevant;
};

Parallelohedron voronoi_cell(const Lattice& l);

/// A tile of the tiling is the prototile shifted by an integer vector; the
/// translation is also the tile's center of symmetry.
struct Tile {
  IVec translation;
  const IVec& center() const { return translation; }
};

struct Face {
  int id = -1;
  int dim = -1;                  // -1 marks the empty-face sentinel
  std::vector<int> vertex_ids;   // sorted indices into the cell's vertex list
  std::vector<Vec> vertices;
  std::vector<Vec> lin_basis;    // basis of lin F (affine hull directions)
  std::vector<int> facet_set;    // halfspace indices containing the face
  int codim(int space_dim) const { return space_dim - dim; }
};

/// Complete face lattice of the prototile: the empty face, all proper
/// faces, and the cell itself, ordered by (dim, vertex ids). Closed under
/// intersection by construction.
struct FaceLattice {
  int space_dim = 0;
  std::vector<Face> faces;

  const Face& face(int id) const { return faces.at(id); }
  std::vector<int> ids_of_dim(int dim) const;
  std::vector<int> ids_of_codim(int k) const { return ids_of_dim(space_dim - k); }
  /// f-vector (f_0, ..., f_d); excludes the empty face, includes the cell.
  std::vector<long> fvector() const;
  /// Inclusion test via vertex sets: faces are determined by their vertices.
  bool face_leq(int inner, int outer) const;
  /// Id of the face with the given sorted vertex-id set, or -1.
  int find_by_vertex_ids(const std::vector<int>& ids) const;
};

FaceLattice face_lattice(const Parallelohedron& cell);

/// Checks the prototile is centrally symmetric about the origin: the vertex
/// set is invariant under negation and every facet has a parallel opposite
/// facet. Returns the center (always 0); throws internal_error on failure.
Vec central_symmetry_check(const Parallelohedron& cell);

struct StandardFaceResult {
  Vec center;       // (t1 + t2) / 2
  int face_id;      // face F of the prototile with (P0+t1) cap (P0+t2) = F + t1
  std::vector<Vec> intersection_vertices;
};

/// Verifies property 3 of parallelohedral tilings for two intersecting
/// tiles: the intersection is a face of both, is centrally symmetric, and
/// its center (t1+t2)/2 lies in the intersection. Empty intersection throws
/// input_error; a non-face intersection throws internal_error (a
/// face-to-face breach, which no valid lattice input can produce).
StandardFaceResult standard_face_center(const Parallelohedron& cell, const FaceLattice& fl,
                                        const IVec& t1, const IVec& t2);

/// Everything derived from one lattice that the face sweeps need.
struct Tiling {
  Lattice lattice;
  Parallelohedron cell;
  FaceLattice faces;
  Scalar circumradius2;     // covering_radius_bound
  Scalar star_search_r2;    // 4 * circumradius2
};

Tiling build_tiling(const Lattice& l);

/// Exact membership of a point in the tile P0 + t.
bool tile_contains(const Parallelohedron& cell, const IVec& t, const Vec& point);

}  // namespace parv
