#pragma once

#include <map>
#include <string>

#include "parv/star.hpp"

namespace parv {

/// Convex hull of the star's tile centers. In the Voronoi case this is the
/// dual (Delaunay) cell of the face; in general it is still a well-defined
/// polytope whose affine dimension is recorded but asserted only in
/// Voronoi mode.
struct DualCell {
  int face_id = -1;
  int k = 0;
  std::vector<Vec> centers;             // lex-sorted
  int dual_dim = 0;                     // dim aff(centers)
  std::vector<IVec> sublattice_basis;   // basis of Lambda(F), the lattice spanned by center differences
};

DualCell delaunay_cell(const Face& f, const FaceStar& star);

struct DualDimCheck {
  int k = 0;
  int dual_dim = 0;
  bool voronoi_mode = true;
  bool ok = true;          // voronoi mode: dual_dim == k
  bool noteworthy = false; // general mode: dual_dim > k was observed
};

DualDimCheck dual_dim_check(const DualCell& dc, bool voronoi_mode);

struct DualVertexCheck {
  bool pass = true;
  std::string failure;
};

/// Voronoi-mode checks: every center is a vertex of the hull (exact LP),
/// centers are pairwise distinct mod 2Z^d and mod 2*Lambda(F). Together
/// these force valence <= 2^k.
DualVertexCheck dual_vertex_check(const DualCell& dc, const FaceStar& star);

struct FanFace {
  std::vector<int> ray_ids;  // sorted global ray ids; empty = apex
  int dim = 0;
};

/// The fan of a face: projected tangent cones of the star's tiles, one
/// full-dimensional pointed cone per tile, together with all their faces
/// and the cover relation of the face poset. Construction verifies that
/// interiors are pairwise disjoint and that every (k-1)-dimensional face
/// lies in exactly two top cones.
struct ConeFan {
  int k = 0;
  std::vector<Vec> rays;                          // primitive, lex-sorted
  std::vector<std::vector<int>> cone_rays;        // per top cone, sorted ray ids
  std::vector<std::vector<Vec>> cone_normals;     // per top cone, facet normals (<= 0 form)
  std::vector<FanFace> faces;                     // sorted by (dim, ray_ids)
  std::vector<std::pair<int, int>> covers;        // face poset covers (indices into faces)
  int top_cones() const { return static_cast<int>(cone_rays.size()); }
};

ConeFan fan_of_face(const Tiling& tiling, const Face& f, const FaceStar& star);

/// Canonical signature: equal strings iff the fans' face posets are
/// isomorphic (dimension labels included).
std::string fan_signature(const ConeFan& fan);

/// Short display form (the full signature is long): "k<k>.m<top>.<hash>".
std::string fan_signature_digest(const ConeFan& fan);
std::string signature_digest(const std::string& signature);

/// Face poset (dimension labels + covers) of conv(points), computed inside
/// the affine hull. Used to cross-check the fan poset against the dual
/// cell: in Voronoi mode the two posets are anti-isomorphic.
struct PolytopePoset {
  std::vector<int> labels;
  std::vector<std::pair<int, int>> covers;
};
PolytopePoset polytope_face_poset(const std::vector<Vec>& points);

struct CensusEntry {
  long count = 0;
  std::vector<std::pair<std::string, int>> witnesses;  // (lattice name, face id), one per lattice
};
using CensusTable = std::map<std::string, CensusEntry>;  // signature -> entry

/// Sweeps every codimension-k face of every corpus tiling and aggregates
/// fan signatures. Requires dim >= k for every entry.
CensusTable census(const std::vector<std::pair<std::string, Lattice>>& corpus, int k,
                   int jobs = 1);

}  // namespace parv
