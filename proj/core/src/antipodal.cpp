#include "parv/antipodal.hpp"

#include <algorithm>
#include <sstream>

#include "parv/digest.hpp"
#include "parv/errors.hpp"
#include "parv/lp.hpp"
#include "parv/quadratic_form.hpp"
#include "parv/volume.hpp"

namespace parv {

int AntipodalSet::affine_dim() const { return affine_rank(points); }

bool AntipodalCertificate::complete() const {
  return !violation && static_cast<int>(pairs.size()) == m * (m - 1);
}

const PairCertificate* AntipodalCertificate::find(int i, int j) const {
  const auto it = pairs.find({i, j});
  return it == pairs.end() ? nullptr : &it->second;
}

std::string AntipodalCertificate::digest() const {
  std::ostringstream os;
  for (const auto& [key, cert] : pairs) {
    os << key.first << ":" << key.second << ":" << vec_to_string(cert.direction) << ":"
       << rational_to_string(cert.hi) << ":" << rational_to_string(cert.lo) << ";";
  }
  if (violation) os << "violation " << violation->first << "," << violation->second;
  return hex64(fnv1a64(os.str()));
}

namespace {

Vec face_barycenter(const Face& f) {
  Vec x = zero_vec(static_cast<int>(f.vertices[0].size()));
  for (const auto& v : f.vertices) x = vec_add(x, v);
  return vec_scale(Scalar(1, static_cast<unsigned long>(f.vertices.size())), x);
}

// All of W inside [lo, hi] along `direction`, with w_i and w_j exactly on
// the two walls.
bool sandwich_ok(const AntipodalSet& w, int i, int j, const PairCertificate& cert) {
  if (cert.hi <= cert.lo) return false;
  if (dot(cert.direction, w.points[i]) != cert.hi) return false;
  if (dot(cert.direction, w.points[j]) != cert.lo) return false;
  for (const auto& p : w.points) {
    const Scalar v = dot(cert.direction, p);
    if (v < cert.lo || v > cert.hi) return false;
  }
  return true;
}

}  // namespace

AntipodalSet projected_face_set(const Tiling& tiling, const Face& f, const FaceStar& star) {
  if (f.dim < 0 || f.dim >= tiling.faces.space_dim)
    throw input_error("projected_face_set: face must be proper");
  AntipodalSet w;
  w.face_id = f.id;
  const Projector proj(f.lin_basis, tiling.lattice.ambient_form());
  w.k = proj.codim();
  const Vec x0 = face_barycenter(f);
  for (int i = 0; i < star.valence(); ++i) {
    // w_i = pi(barycenter of F_i) = pi(x0 - t_{i1}).
    const Vec point = vec_add(x0, to_vec(star.tau(i)));
    w.points.push_back(proj.complement_coords(point));
  }
  for (std::size_t i = 0; i < w.points.size(); ++i)
    for (std::size_t j = i + 1; j < w.points.size(); ++j)
      if (w.points[i] == w.points[j])
        throw internal_error("projected_face_set: distinct tiles project to one point");
  const auto& basis = proj.complement_basis();
  w.metric.assign(w.k, zero_vec(w.k));
  for (int i = 0; i < w.k; ++i)
    for (int j = 0; j < w.k; ++j)
      w.metric[i][j] = tiling.lattice.ambient_form().pairing(basis[i], basis[j]);
  return w;
}

AntipodalCertificate is_antipodal(const AntipodalSet& w) {
  if (w.size() < 2) throw input_error("is_antipodal: need at least two points");
  AntipodalCertificate out;
  out.m = w.size();
  const int k = static_cast<int>(w.points[0].size());
  for (int i = 0; i < w.size() && !out.violation; ++i) {
    for (int j = i + 1; j < w.size() && !out.violation; ++j) {
      HPolyhedron lp;
      lp.dim = k;
      for (const auto& p : w.points) {
        lp.halfspaces.push_back({vec_sub(p, w.points[i]), Scalar(0)});
        lp.halfspaces.push_back({vec_sub(w.points[j], p), Scalar(0)});
      }
      const Vec gap = vec_sub(w.points[i], w.points[j]);
      lp.halfspaces.push_back({gap, Scalar(1)});
      lp.halfspaces.push_back({vec_neg(gap), Scalar(-1)});
      const auto u = feasible_point(lp);
      if (!u) {
        out.violation = std::make_pair(i, j);
        break;
      }
      PairCertificate cert{*u, dot(*u, w.points[i]), dot(*u, w.points[j])};
      if (!sandwich_ok(w, i, j, cert))
        throw internal_error("is_antipodal: LP returned an invalid certificate");
      out.pairs.emplace(std::make_pair(j, i),
                        PairCertificate{vec_neg(cert.direction), -cert.lo, -cert.hi});
      out.pairs.emplace(std::make_pair(i, j), std::move(cert));
    }
  }
  return out;
}

AntipodalCertificate constructive_certificates(const Tiling& tiling, const Face& f,
                                               const FaceStar& star, const AntipodalSet& w) {
  AntipodalCertificate out;
  out.m = star.valence();
  const int d = tiling.faces.space_dim;
  const Projector proj(f.lin_basis, tiling.lattice.ambient_form());

  for (int i = 0; i < star.valence(); ++i) {
    for (int j = 0; j < star.valence(); ++j) {
      if (i == j) continue;
      const IVec t_ji = ivec_sub(star.tau(i), star.tau(j));  // F_j + t_ji = F_i
      // Find the hyperplane <a, x> = 1/2 supporting P0 from above and
      // P_{ji} = P0 + t_ji from below: minimize the support value s of a
      // over P0 subject to <a, t_ji> = 1. Sharing a face forces s = 1/2.
      HPolyhedron lp;
      lp.dim = d + 1;  // variables (a, s)
      for (const auto& v : tiling.cell.vrep.vertices) {
        Vec row = v;
        row.push_back(Scalar(-1));
        lp.halfspaces.push_back({std::move(row), Scalar(0)});
      }
      Vec eq = to_vec(t_ji);
      eq.push_back(Scalar(0));
      lp.halfspaces.push_back({eq, Scalar(1)});
      lp.halfspaces.push_back({vec_neg(eq), Scalar(-1)});
      Vec objective = zero_vec(d + 1);
      objective[d] = -1;  // maximize -s
      const auto res = solve_lp(lp, objective);
      if (res.status != LpResult::Status::optimal)
        throw internal_error("constructive_certificates: support LP failed");
      if (res.optimum->value != Scalar(-1, 2))
        throw internal_error(
            "constructive_certificates: tiles are not in face-to-face contact");
      const Vec a(res.optimum->point.begin(), res.optimum->point.end() - 1);
      // a must be constant on lin F, otherwise the hyperplane cannot
      // project to a hyperplane of the complement.
      for (const auto& l : f.lin_basis)
        if (dot(a, l) != 0)
          throw internal_error("constructive_certificates: separator not parallel to lin F");
      Vec u(w.k);
      for (int c = 0; c < w.k; ++c) u[c] = dot(a, proj.complement_basis()[c]);
      PairCertificate cert{std::move(u), Scalar(1, 2), Scalar(-1, 2)};
      if (!sandwich_ok(w, i, j, cert))
        throw internal_error("constructive_certificates: projected walls do not sandwich W");
      out.pairs.emplace(std::make_pair(i, j), std::move(cert));
    }
  }
  return out;
}

PackingCheck homothety_packing_check(const AntipodalSet& w, const AntipodalCertificate& cert,
                                     const Scalar& a) {
  if (a <= 0 || a >= Scalar(1, 2))
    throw input_error("homothety_packing_check: ratio must lie in (0, 1/2)");
  PackingCheck out;
  for (int i = 0; i < w.size(); ++i) {
    for (int j = i + 1; j < w.size(); ++j) {
      const PairCertificate* pc = cert.find(i, j);
      if (!pc) {
        out.pass = false;
        out.failed_pair = std::make_pair(i, j);
        out.reason = "no certificate for the pair";
        return out;
      }
      const Scalar mid = (pc->hi + pc->lo) / 2;
      for (const auto& p : w.points) {
        // Homothet vertices w_i + a (p - w_i) and w_j + a (p - w_j).
        const Scalar side_i =
            (1 - a) * dot(pc->direction, w.points[i]) + a * dot(pc->direction, p);
        const Scalar side_j =
            (1 - a) * dot(pc->direction, w.points[j]) + a * dot(pc->direction, p);
        if (side_i <= mid || side_j >= mid) {
          out.pass = false;
          out.failed_pair = std::make_pair(i, j);
          out.reason = "homothets touch the separating hyperplane";
          return out;
        }
      }
    }
  }
  return out;
}

BoundCheck antipodal_bound(const AntipodalSet& w, const AntipodalCertificate& cert) {
  if (!cert.complete())
    throw input_error("antipodal_bound: requires a complete certificate");
  BoundCheck out;
  out.m = w.size();
  out.k = w.k;
  out.k_prime = w.affine_dim();
  const Int m2 = Int(out.m) * Int(out.m);
  Int four_kp = 1;
  for (int i = 0; i < out.k_prime; ++i) four_kp *= 4;
  out.strong = m2 <= four_kp;   // m <= 2^{k'}
  Int four_k = 1;
  for (int i = 0; i < out.k; ++i) four_k *= 4;
  out.weak = m2 <= four_k;      // m <= 2^k

  // Volume instantiation of the packing bound at a = 1/2 - 1/1000: the
  // homothets are disjoint subsets of conv W, so m a^{k'} vol(conv W) <=
  // vol(conv W); in squared form m^2 a^{2k'} <= 1 once vol^2 > 0.
  out.volume2 = squared_volume(w.points, affine_hull(w.points), QuadraticForm(w.metric));
  if (out.volume2 == 0)
    throw internal_error("antipodal_bound: conv W degenerate inside its affine hull");
  const Scalar ratio(499, 1000);
  Scalar chain = Scalar(m2);
  for (int i = 0; i < 2 * out.k_prime; ++i) chain *= ratio;
  out.chain_ok = chain <= 1;
  return out;
}

}  // namespace parv
