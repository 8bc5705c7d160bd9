#include "parv/dd.hpp"

#include <algorithm>
#include <set>

#include "parv/errors.hpp"
#include "parv/lp.hpp"

namespace parv {

namespace {

// Double description for a pointed cone {x : <a_i, x> >= 0}. Pointedness is
// equivalent to rank{a_i} = n and is required for the rank-(n-2) adjacency
// test, which in turn keeps the ray set minimal after every insertion
// (Fukuda & Prodon). Constraints are normalized to primitive vectors and
// inserted in lexicographic order so the whole computation is deterministic.
std::vector<Vec> dd_rays(const std::vector<Vec>& constraints, int n, const char* what) {
  std::vector<Vec> cons;
  cons.reserve(constraints.size());
  for (const auto& c : constraints) {
    if (static_cast<int>(c.size()) != n) throw input_error("dd: constraint dimension mismatch");
    if (is_zero_vec(c)) continue;
    cons.push_back(to_vec(primitive(c)));
  }
  std::sort(cons.begin(), cons.end());
  cons.erase(std::unique(cons.begin(), cons.end()), cons.end());

  // Initial simplicial cone from a greedily chosen independent subset.
  std::vector<int> init;
  Mat rows;
  for (std::size_t i = 0; i < cons.size() && static_cast<int>(rows.size()) < n; ++i) {
    rows.push_back(cons[i]);
    if (rank(rows) == static_cast<int>(rows.size()))
      init.push_back(static_cast<int>(i));
    else
      rows.pop_back();
  }
  if (static_cast<int>(init.size()) != n)
    throw internal_error(std::string(what) + ": cone is not pointed");
  const auto inv = inverse(rows);
  if (!inv) throw internal_error("dd: singular initial subset");
  std::vector<Vec> rays;
  for (int j = 0; j < n; ++j) {
    Vec r(n);
    for (int i = 0; i < n; ++i) r[i] = (*inv)[i][j];
    rays.push_back(to_vec(primitive(r)));
  }

  std::vector<Vec> processed;
  for (int i : init) processed.push_back(cons[i]);
  std::set<int> init_set(init.begin(), init.end());

  auto tight_rows = [&](const Vec& p, const Vec& q) {
    Mat t;
    for (const auto& a : processed)
      if (dot(a, p) == 0 && dot(a, q) == 0) t.push_back(a);
    return t;
  };

  for (std::size_t ci = 0; ci < cons.size(); ++ci) {
    if (init_set.count(static_cast<int>(ci))) continue;
    const Vec& a = cons[ci];
    std::vector<Vec> plus, zero, minus;
    for (const auto& r : rays) {
      const Scalar e = dot(a, r);
      if (e > 0)
        plus.push_back(r);
      else if (e == 0)
        zero.push_back(r);
      else
        minus.push_back(r);
    }
    if (minus.empty()) {
      processed.push_back(a);
      continue;
    }
    std::vector<Vec> next = plus;
    next.insert(next.end(), zero.begin(), zero.end());
    for (const auto& p : plus) {
      for (const auto& q : minus) {
        Mat t = tight_rows(p, q);
        if (rank(std::move(t)) != n - 2) continue;
        const Scalar ep = dot(a, p);
        const Scalar eq = dot(a, q);
        Vec w = vec_sub(vec_scale(ep, q), vec_scale(eq, p));
        next.push_back(to_vec(primitive(w)));
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    rays = std::move(next);
    processed.push_back(a);
  }

  std::sort(rays.begin(), rays.end());
  return rays;
}

}  // namespace

DdResult dual_description(const HPolyhedron& h) {
  const int d = h.dim;
  if (h.halfspaces.empty())
    throw unbounded_error("dual_description: no halfspaces", to_vec(IVec(d, 1)));
  for (const auto& hs : h.halfspaces)
    if (is_zero_vec(hs.normal)) throw input_error("dual_description: zero normal");

  for (int i = 0; i < d; ++i) {
    for (int s = 0; s < 2; ++s) {
      Vec obj = zero_vec(d);
      obj[i] = s ? -1 : 1;
      const auto lp = solve_lp(h, obj);
      if (lp.status == LpResult::Status::infeasible)
        throw input_error("dual_description: empty polyhedron");
      if (lp.status == LpResult::Status::unbounded)
        throw unbounded_error("dual_description: unbounded polyhedron", lp.ray);
    }
  }

  // Homogenize: <a,x> <= b becomes <(-a, b), (x, x0)> >= 0, plus x0 >= 0.
  std::vector<Vec> lifted;
  for (const auto& hs : h.halfspaces) {
    Vec row = vec_neg(hs.normal);
    row.push_back(hs.offset);
    lifted.push_back(std::move(row));
  }
  Vec x0 = zero_vec(d + 1);
  x0[d] = 1;
  lifted.push_back(std::move(x0));

  const auto rays = dd_rays(lifted, d + 1, "dual_description");

  DdResult out;
  for (const auto& r : rays) {
    if (r[d] == 0)
      throw internal_error("dual_description: recession ray on bounded input");
    Vec v(d);
    for (int i = 0; i < d; ++i) v[i] = r[i] / r[d];
    out.polytope.vertices.push_back(std::move(v));
  }
  std::sort(out.polytope.vertices.begin(), out.polytope.vertices.end());

  const int nv = static_cast<int>(out.polytope.vertices.size());
  out.polytope.vertex_facets.resize(nv);
  std::vector<std::vector<int>> facet_members(h.halfspaces.size());
  for (int vi = 0; vi < nv; ++vi) {
    for (std::size_t fi = 0; fi < h.halfspaces.size(); ++fi) {
      const auto& hs = h.halfspaces[fi];
      const Scalar val = dot(hs.normal, out.polytope.vertices[vi]);
      if (val > hs.offset)
        throw internal_error("dual_description: vertex violates a halfspace");
      if (val == hs.offset) {
        out.polytope.vertex_facets[vi].push_back(static_cast<int>(fi));
        facet_members[fi].push_back(vi);
      }
    }
  }

  const int poly_dim = affine_rank(out.polytope.vertices);
  for (std::size_t fi = 0; fi < h.halfspaces.size(); ++fi) {
    std::vector<Vec> pts;
    for (int vi : facet_members[fi]) pts.push_back(out.polytope.vertices[vi]);
    if (affine_rank(pts) < poly_dim - 1) out.redundant.push_back(static_cast<int>(fi));
  }
  return out;
}

std::vector<Vec> cone_extreme_rays(const std::vector<Vec>& normals, int dim) {
  std::vector<Vec> cons;
  for (const auto& n : normals) cons.push_back(vec_neg(n));
  return dd_rays(cons, dim, "cone_extreme_rays");
}

std::vector<Vec> cone_facet_normals(const std::vector<Vec>& generators, int dim) {
  if (rank(Mat(generators.begin(), generators.end())) != dim)
    throw internal_error("cone_facet_normals: generators do not span");
  std::vector<Vec> cons;
  for (const auto& g : generators) cons.push_back(vec_neg(g));
  // Extreme rays of the polar cone are the facet normals of the primal.
  return dd_rays(cons, dim, "cone_facet_normals");
}

}  // namespace parv
