#pragma once

#include "parv/parallelohedron.hpp"

namespace parv {

/// The star of a face F: all tiles P0 + t containing F. `translations` is
/// lex-sorted and contains 0 (the tile P0 itself). For the translate-based
/// construction, equivalent_faces[i] is the face F_i of P0 with
/// F_i = F + tau(i); those faces satisfy F = F_i + translations[i].
struct FaceStar {
  int face_id = -1;
  int k = 0;  // codimension of the face
  std::vector<IVec> translations;
  std::vector<int> equivalent_faces;  // parallel to translations; empty for direct_star

  int valence() const { return static_cast<int>(translations.size()); }
  IVec tau(int i) const { return ivec_neg(translations[i]); }
};

/// Star by definition: sweep the search ball and keep every t such that all
/// vertices of F lie in the closed tile P0 + t (convexity makes vertex
/// membership sufficient, and halfspace evaluation is exact).
FaceStar direct_star(const Tiling& tiling, const Face& f);

/// Star by translation equivalence: find all faces F_i of P0 that are
/// integer translates of F; then F = F_i + t_{i1} lies in P0 + t_{i1}.
/// Equivalence is decided on sorted vertex lists (translation preserves
/// lexicographic order), so the test is a single vector difference.
FaceStar translate_star(const Tiling& tiling, const Face& f);

/// t_ij with F_i + t_ij = F_j, from the translate star. Antisymmetric and
/// additive by construction; both are re-checked exactly.
std::vector<std::vector<IVec>> translation_system(const FaceStar& star);

struct ParityAudit {
  bool pass = true;
  int first = -1, second = -1;  // indices of an offending pair when !pass
};

/// Tiles sharing a face must lie in pairwise distinct classes mod 2Z^d.
ParityAudit parity_audit(const FaceStar& star);
ParityAudit parity_audit_translations(const std::vector<IVec>& translations);

}  // namespace parv
