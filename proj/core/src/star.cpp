#include "parv/star.hpp"

#include <algorithm>

#include "parv/errors.hpp"

namespace parv {

FaceStar direct_star(const Tiling& tiling, const Face& f) {
  if (f.dim < 0) throw input_error("direct_star: empty face has no star");
  FaceStar star;
  star.face_id = f.id;
  star.k = f.codim(tiling.faces.space_dim);
  const Vec origin = zero_vec(tiling.lattice.dim());
  for (const auto& t : enumerate_ball(tiling.lattice, origin, tiling.star_search_r2)) {
    bool inside = true;
    for (const auto& v : f.vertices)
      inside = inside && tile_contains(tiling.cell, t, v);
    if (inside) star.translations.push_back(t);
  }
  std::sort(star.translations.begin(), star.translations.end());
  return star;
}

FaceStar translate_star(const Tiling& tiling, const Face& f) {
  if (f.dim < 0) throw input_error("translate_star: empty face has no star");
  FaceStar star;
  star.face_id = f.id;
  star.k = f.codim(tiling.faces.space_dim);

  std::vector<Vec> ref = f.vertices;  // already lex-sorted (vertex ids are)
  std::vector<std::pair<IVec, int>> found;
  for (const auto& g : tiling.faces.faces) {
    if (g.dim != f.dim) continue;
    if (g.vertex_ids.size() != f.vertex_ids.size()) continue;
    const Vec shift = vec_sub(g.vertices[0], ref[0]);
    if (!is_integral(shift)) continue;
    bool all = true;
    for (std::size_t i = 1; i < ref.size() && all; ++i)
      all = vec_sub(g.vertices[i], ref[i]) == shift;
    if (!all) continue;
    // g = F + tau; the star translation is t = -tau.
    found.emplace_back(ivec_neg(to_ivec(shift)), g.id);
  }
  std::sort(found.begin(), found.end());
  for (auto& [t, id] : found) {
    star.translations.push_back(std::move(t));
    star.equivalent_faces.push_back(id);
  }
  return star;
}

std::vector<std::vector<IVec>> translation_system(const FaceStar& star) {
  const int m = star.valence();
  std::vector<std::vector<IVec>> t(m, std::vector<IVec>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      t[i][j] = ivec_sub(star.tau(j), star.tau(i));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (t[i][j] != ivec_neg(t[j][i]))
        throw internal_error("translation_system: antisymmetry failed");
      for (int l = 0; l < m; ++l)
        if (ivec_add(t[i][j], t[j][l]) != t[i][l])
          throw internal_error("translation_system: additivity failed");
    }
  return t;
}

ParityAudit parity_audit_translations(const std::vector<IVec>& translations) {
  ParityAudit out;
  for (std::size_t i = 0; i < translations.size(); ++i)
    for (std::size_t j = i + 1; j < translations.size(); ++j)
      if (parity_class(translations[i]) == parity_class(translations[j]))
        return {false, static_cast<int>(i), static_cast<int>(j)};
  return out;
}

ParityAudit parity_audit(const FaceStar& star) {
  return parity_audit_translations(star.translations);
}

}  // namespace parv
