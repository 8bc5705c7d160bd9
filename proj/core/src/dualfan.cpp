#include "parv/dualfan.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "parv/dd.hpp"
#include "parv/digest.hpp"
#include "parv/errors.hpp"
#include "parv/face_enum.hpp"
#include "parv/lp.hpp"
#include "parv/parallel.hpp"
#include "parv/poset_canon.hpp"
#include "parv/volume.hpp"

namespace parv {

DualCell delaunay_cell(const Face& f, const FaceStar& star) {
  DualCell dc;
  dc.face_id = f.id;
  dc.k = star.k;
  for (const auto& t : star.translations) dc.centers.push_back(to_vec(t));
  dc.dual_dim = affine_rank(dc.centers);
  std::vector<IVec> diffs;
  for (std::size_t i = 1; i < star.translations.size(); ++i)
    diffs.push_back(ivec_sub(star.translations[i], star.translations[0]));
  dc.sublattice_basis = lattice_basis(diffs, static_cast<int>(star.translations[0].size()));
  return dc;
}

DualDimCheck dual_dim_check(const DualCell& dc, bool voronoi_mode) {
  DualDimCheck out;
  out.k = dc.k;
  out.dual_dim = dc.dual_dim;
  out.voronoi_mode = voronoi_mode;
  if (voronoi_mode)
    out.ok = dc.dual_dim == dc.k;
  else
    out.noteworthy = dc.dual_dim > dc.k;
  return out;
}

DualVertexCheck dual_vertex_check(const DualCell& dc, const FaceStar& star) {
  DualVertexCheck out;
  for (std::size_t i = 0; i < dc.centers.size(); ++i) {
    if (!is_hull_vertex(dc.centers, i)) {
      out.pass = false;
      out.failure = "center " + vec_to_string(dc.centers[i]) + " is not a vertex of D(F)";
      return out;
    }
  }
  const auto parity = parity_audit(star);
  if (!parity.pass) {
    out.pass = false;
    out.failure = "centers share a class mod 2L";
    return out;
  }
  // Pairwise distinct mod 2*Lambda(F): reduce coordinates in the sublattice
  // basis mod 2.
  std::vector<Vec> basis;
  for (const auto& b : dc.sublattice_basis) basis.push_back(to_vec(b));
  std::vector<std::vector<int>> residues;
  for (const auto& c : dc.centers) {
    const auto coords = coordinates_in(basis, vec_sub(c, dc.centers[0]));
    if (!coords || !is_integral(*coords))
      throw internal_error("dual_vertex_check: center outside Lambda(F)");
    std::vector<int> res;
    for (const auto& x : *coords)
      res.push_back(static_cast<int>(mpz_fdiv_ui(x.get_num_mpz_t(), 2)));
    residues.push_back(std::move(res));
  }
  for (std::size_t i = 0; i < residues.size(); ++i)
    for (std::size_t j = i + 1; j < residues.size(); ++j)
      if (residues[i] == residues[j]) {
        out.pass = false;
        out.failure = "centers " + vec_to_string(dc.centers[i]) + " and " +
                      vec_to_string(dc.centers[j]) + " coincide mod 2*Lambda(F)";
        return out;
      }
  return out;
}

namespace {

Vec face_barycenter(const Face& f) {
  Vec x = zero_vec(static_cast<int>(f.vertices[0].size()));
  for (const auto& v : f.vertices) x = vec_add(x, v);
  return vec_scale(Scalar(1, static_cast<unsigned long>(f.vertices.size())), x);
}

bool cones_interior_intersect(const std::vector<Vec>& normals_a,
                              const std::vector<Vec>& normals_b, int k) {
  HPolyhedron strict;
  strict.dim = k;
  for (const auto& n : normals_a) strict.halfspaces.push_back({n, Scalar(-1)});
  for (const auto& n : normals_b) strict.halfspaces.push_back({n, Scalar(-1)});
  return feasible_point(strict).has_value();
}

}  // namespace

ConeFan fan_of_face(const Tiling& tiling, const Face& f, const FaceStar& star) {
  const int d = tiling.faces.space_dim;
  const int k = f.codim(d);
  if (f.dim < 0 || k <= 0)
    throw input_error("fan_of_face: face must be proper (0 <= dim < d)");

  ConeFan fan;
  fan.k = k;
  const Vec x0 = face_barycenter(f);
  const Projector proj(f.lin_basis, tiling.lattice.ambient_form());

  // Tangent cone of each star tile at F, projected along lin F. Generators
  // are the projected vertex directions; zero generators (vertices inside
  // aff F) are the apex and are dropped.
  std::set<Vec> ray_set;
  std::vector<std::vector<Vec>> cone_gen_rays(star.valence());
  for (int ci = 0; ci < star.valence(); ++ci) {
    const Vec t = to_vec(star.translations[ci]);
    std::vector<Vec> gens;
    for (const auto& v : tiling.cell.vrep.vertices) {
      const Vec dir = proj.complement_coords(vec_sub(vec_add(v, t), x0));
      if (!is_zero_vec(dir)) gens.push_back(dir);
    }
    const auto normals = cone_facet_normals(gens, k);
    if (rank(Mat(normals.begin(), normals.end())) != k)
      throw internal_error("fan_of_face: projected tangent cone is not pointed");
    // Extreme rays among the generators: active normal rank k-1.
    std::set<Vec> rays;
    for (const auto& g : gens) {
      const Vec r = to_vec(primitive(g));
      if (rays.count(r)) continue;
      Mat active;
      for (const auto& n : normals)
        if (dot(n, r) == 0) active.push_back(n);
      if (rank(std::move(active)) == k - 1) rays.insert(r);
    }
    fan.cone_normals.push_back(normals);
    cone_gen_rays[ci].assign(rays.begin(), rays.end());
    for (const auto& r : rays) ray_set.insert(r);
  }

  fan.rays.assign(ray_set.begin(), ray_set.end());
  auto ray_id = [&](const Vec& r) {
    const auto it = std::lower_bound(fan.rays.begin(), fan.rays.end(), r);
    return static_cast<int>(it - fan.rays.begin());
  };

  std::set<std::pair<std::vector<int>, int>> face_keys;
  std::vector<std::set<std::vector<int>>> cone_face_sets(star.valence());
  for (int ci = 0; ci < star.valence(); ++ci) {
    std::vector<int> global_ids;
    for (const auto& r : cone_gen_rays[ci]) global_ids.push_back(ray_id(r));
    const int nr = static_cast<int>(global_ids.size());
    std::vector<std::vector<int>> members(fan.cone_normals[ci].size());
    for (std::size_t ni = 0; ni < fan.cone_normals[ci].size(); ++ni)
      for (int li = 0; li < nr; ++li)
        if (dot(fan.cone_normals[ci][ni], cone_gen_rays[ci][li]) == 0)
          members[ni].push_back(li);
    for (const auto& local : incidence_closure(nr, members)) {
      std::vector<int> global;
      for (int li : local) global.push_back(global_ids[li]);
      std::sort(global.begin(), global.end());
      Mat vecs;
      for (int gi : global) vecs.push_back(fan.rays[gi]);
      const int dim = rank(std::move(vecs));
      cone_face_sets[ci].insert(global);
      face_keys.emplace(std::move(global), dim);
    }
    std::vector<int> sorted_ids = global_ids;
    std::sort(sorted_ids.begin(), sorted_ids.end());
    fan.cone_rays.push_back(std::move(sorted_ids));
  }

  for (const auto& [ids, dim] : face_keys) fan.faces.push_back({ids, dim});
  std::sort(fan.faces.begin(), fan.faces.end(), [](const FanFace& a, const FanFace& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.ray_ids < b.ray_ids;
  });

  for (std::size_t i = 0; i < fan.faces.size(); ++i)
    for (std::size_t j = 0; j < fan.faces.size(); ++j) {
      if (fan.faces[j].dim != fan.faces[i].dim + 1) continue;
      if (std::includes(fan.faces[j].ray_ids.begin(), fan.faces[j].ray_ids.end(),
                        fan.faces[i].ray_ids.begin(), fan.faces[i].ray_ids.end()))
        fan.covers.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }

  // Structural checks: distinct top cones, one per tile; every ridge in
  // exactly two top cones; pairwise disjoint interiors.
  std::set<std::vector<int>> distinct_tops(fan.cone_rays.begin(), fan.cone_rays.end());
  if (static_cast<int>(distinct_tops.size()) != star.valence())
    throw internal_error("fan_of_face: coincident tangent cones");
  for (const auto& face : fan.faces) {
    if (face.dim != k - 1) continue;
    int owners = 0;
    for (const auto& cs : cone_face_sets)
      if (cs.count(face.ray_ids)) ++owners;
    if (owners != 2)
      throw internal_error("fan_of_face: a ridge is not shared by exactly two cones");
  }
  for (int a = 0; a < star.valence(); ++a)
    for (int b = a + 1; b < star.valence(); ++b)
      if (cones_interior_intersect(fan.cone_normals[a], fan.cone_normals[b], k))
        throw internal_error("fan_of_face: cone interiors overlap");

  return fan;
}

std::string fan_signature(const ConeFan& fan) {
  std::vector<int> labels;
  for (const auto& f : fan.faces) labels.push_back(f.dim);
  std::ostringstream os;
  os << "k" << fan.k << ";" << canonical_poset_certificate(labels, fan.covers);
  return os.str();
}

std::string signature_digest(const std::string& signature) {
  return hex64(fnv1a64(signature));
}

std::string fan_signature_digest(const ConeFan& fan) {
  std::ostringstream os;
  os << "k" << fan.k << ".m" << fan.top_cones() << "."
     << signature_digest(fan_signature(fan)).substr(0, 12);
  return os.str();
}

PolytopePoset polytope_face_poset(const std::vector<Vec>& points) {
  std::vector<Vec> pts = points;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  PolytopePoset out;
  if (pts.size() == 1) {
    out.labels.push_back(0);
    return out;
  }
  const AffineSubspace hull = affine_hull(pts);
  std::vector<Vec> local;
  for (const auto& p : pts) {
    auto c = coordinates_in(hull.direction_basis, vec_sub(p, hull.base_point));
    if (!c) throw internal_error("polytope_face_poset: inconsistent affine hull");
    local.push_back(std::move(*c));
  }
  const auto desc = hull_description(local);
  // Restrict to hull vertices; interior points are not poset elements.
  std::vector<int> vertex_of(pts.size(), -1);
  std::vector<Vec> vertex_pts;
  for (int idx : desc.hull_vertices) {
    vertex_of[idx] = static_cast<int>(vertex_pts.size());
    vertex_pts.push_back(local[idx]);
  }
  std::vector<std::vector<int>> members;
  for (const auto& m : desc.facet_members) {
    std::vector<int> filtered;
    for (int idx : m)
      if (vertex_of[idx] >= 0) filtered.push_back(vertex_of[idx]);
    members.push_back(std::move(filtered));
  }
  const auto sets = incidence_closure(static_cast<int>(vertex_pts.size()), members);
  std::vector<std::pair<std::vector<int>, int>> faces;
  for (const auto& s : sets) {
    if (s.empty()) continue;  // drop the empty face
    std::vector<Vec> sub;
    for (int i : s) sub.push_back(vertex_pts[i]);
    faces.emplace_back(s, affine_rank(sub));
  }
  std::sort(faces.begin(), faces.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second < b.second;
    return a.first < b.first;
  });
  for (const auto& [ids, dim] : faces) out.labels.push_back(dim);
  for (std::size_t i = 0; i < faces.size(); ++i)
    for (std::size_t j = 0; j < faces.size(); ++j) {
      if (faces[j].second != faces[i].second + 1) continue;
      if (std::includes(faces[j].first.begin(), faces[j].first.end(),
                        faces[i].first.begin(), faces[i].first.end()))
        out.covers.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  return out;
}

CensusTable census(const std::vector<std::pair<std::string, Lattice>>& corpus, int k,
                   int jobs) {
  if (k < 1) throw input_error("census: k must be >= 1");
  CensusTable table;
  for (const auto& [name, lattice] : corpus) {
    if (lattice.dim() < k)
      throw input_error("census: lattice '" + name + "' has dimension < k");
    const Tiling tiling = build_tiling(lattice);
    const auto ids = tiling.faces.ids_of_codim(k);
    std::vector<std::string> sigs(ids.size());
    parallel_for(static_cast<int>(ids.size()), jobs, [&](int i) {
      const Face& f = tiling.faces.face(ids[i]);
      const FaceStar star = translate_star(tiling, f);
      sigs[i] = fan_signature(fan_of_face(tiling, f, star));
    });
    for (std::size_t i = 0; i < ids.size(); ++i) {
      auto& entry = table[sigs[i]];
      ++entry.count;
      bool seen = false;
      for (const auto& [wname, wid] : entry.witnesses) seen = seen || wname == name;
      if (!seen) entry.witnesses.emplace_back(name, ids[i]);
    }
  }
  return table;
}

}  // namespace parv
