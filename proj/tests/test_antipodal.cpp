#include <doctest.h>

#include <algorithm>
#include <set>

#include "parv/antipodal.hpp"
#include "parv/errors.hpp"

using namespace parv;

namespace {

const Mat kHexGram = {{Scalar(2), Scalar(1)}, {Scalar(1), Scalar(2)}};

Lattice zd(int d) { return Lattice(QuadraticForm(mat_identity(d))); }

AntipodalSet raw_set(std::vector<Vec> points, Mat metric) {
  AntipodalSet w;
  w.k = static_cast<int>(points[0].size());
  w.points = std::move(points);
  w.metric = std::move(metric);
  return w;
}

AntipodalSet collinear_triple() {
  return raw_set({Vec{Scalar(0)}, Vec{Scalar(1)}, Vec{Scalar(2)}}, mat_identity(1));
}

struct FaceData {
  Face face;
  FaceStar star;
};

FaceData pick_face(const Tiling& t, int codim, int which = 0) {
  const auto ids = t.faces.ids_of_codim(codim);
  REQUIRE(static_cast<int>(ids.size()) > which);
  FaceData out{t.faces.face(ids[which]), {}};
  out.star = translate_star(t, t.faces.face(ids[which]));
  return out;
}

}  // namespace

TEST_SUITE("projected_face_set") {
  TEST_CASE("Z^2 vertex projects to the four corners of a unit square") {
    const Tiling t = build_tiling(zd(2));
    const auto [face, star] = pick_face(t, 2);
    const auto w = projected_face_set(t, face, star);
    CHECK(w.size() == 4);
    CHECK(w.k == 2);
    CHECK(w.affine_dim() == 2);
    // pairwise difference vectors are integral (they are the -t_i)
    std::set<Vec> pts(w.points.begin(), w.points.end());
    CHECK(pts.size() == 4);
    const auto cert = is_antipodal(w);
    CHECK(cert.complete());
    const auto bound = antipodal_bound(w, cert);
    CHECK(bound.volume2 == Scalar(1));  // unit square
  }

  TEST_CASE("hexagonal vertex projects to a triangle") {
    const Tiling t = build_tiling(Lattice(QuadraticForm(kHexGram)));
    const auto [face, star] = pick_face(t, 2);
    const auto w = projected_face_set(t, face, star);
    CHECK(w.size() == 3);
    CHECK(w.affine_dim() == 2);
  }

  TEST_CASE("facet star projects to two points on a line") {
    const Tiling t = build_tiling(zd(3));
    const auto [face, star] = pick_face(t, 1);
    const auto w = projected_face_set(t, face, star);
    CHECK(w.size() == 2);
    CHECK(w.k == 1);
    CHECK(w.affine_dim() == 1);
  }

  TEST_CASE("the projected point does not depend on the chosen face point") {
    // pi collapses lin F, so projecting any vertex of F_i must give w_i.
    const Tiling t = build_tiling(Lattice(QuadraticForm(kHexGram)));
    for (int codim = 1; codim <= 2; ++codim) {
      const auto [face, star] = pick_face(t, codim);
      const auto w = projected_face_set(t, face, star);
      const Projector proj(face.lin_basis, t.lattice.ambient_form());
      for (int i = 0; i < star.valence(); ++i) {
        const Vec tau = to_vec(star.tau(i));
        for (const auto& v : face.vertices)
          CHECK(proj.complement_coords(vec_add(v, tau)) == w.points[i]);
      }
    }
  }
}

TEST_SUITE("is_antipodal") {
  TEST_CASE("square corners: all six pairs certified") {
    std::vector<Vec> square = {{Scalar(0), Scalar(0)},
                               {Scalar(1), Scalar(0)},
                               {Scalar(0), Scalar(1)},
                               {Scalar(1), Scalar(1)}};
    const auto w = raw_set(square, mat_identity(2));
    const auto cert = is_antipodal(w);
    CHECK(cert.complete());
    CHECK(cert.pairs.size() == 12);  // both orientations of 6 pairs
    for (const auto& [key, pc] : cert.pairs) CHECK(pc.hi - pc.lo == Scalar(1));
  }

  TEST_CASE("evenly spaced collinear triple is not antipodal") {
    const auto cert = is_antipodal(collinear_triple());
    REQUIRE(cert.violation);
    CHECK(*cert.violation == std::make_pair(0, 1));  // midpoint obstruction
    CHECK(!cert.complete());
  }

  TEST_CASE("hexagonal-vertex triangle is antipodal") {
    const Tiling t = build_tiling(Lattice(QuadraticForm(kHexGram)));
    const auto [face, star] = pick_face(t, 2);
    const auto cert = is_antipodal(projected_face_set(t, face, star));
    CHECK(cert.complete());
  }

  TEST_CASE("a single pair needs at least two points") {
    CHECK_THROWS_AS(is_antipodal(raw_set({Vec{Scalar(0)}}, mat_identity(1))), input_error);
  }
}

TEST_SUITE("constructive_certificates") {
  TEST_CASE("both certificate routes certify the same pairs on corpus faces") {
    for (const Mat& gram : {mat_identity(2), mat_identity(3), kHexGram}) {
      const Tiling t = build_tiling(Lattice(QuadraticForm(gram)));
      for (const auto& f : t.faces.faces) {
        if (f.dim < 0 || f.dim == t.faces.space_dim) continue;
        const auto star = translate_star(t, f);
        const auto w = projected_face_set(t, f, star);
        const auto lp = is_antipodal(w);
        const auto tiling_route = constructive_certificates(t, f, star, w);
        CHECK(lp.complete());
        CHECK(tiling_route.complete());
        // identical key sets: the two routes certify exactly the same pairs
        std::set<std::pair<int, int>> lp_keys, ct_keys;
        for (const auto& [key, pc] : lp.pairs) lp_keys.insert(key);
        for (const auto& [key, pc] : tiling_route.pairs) ct_keys.insert(key);
        CHECK(lp_keys == ct_keys);
        // the projected walls sit at +-1/2 of the translation functional
        for (const auto& [key, pc] : tiling_route.pairs) {
          CHECK(pc.hi == Scalar(1, 2));
          CHECK(pc.lo == Scalar(-1, 2));
        }
      }
    }
  }
}

TEST_SUITE("homothety_packing") {
  TEST_CASE("square at a = 1/4 and a = 49/100") {
    std::vector<Vec> square = {{Scalar(0), Scalar(0)},
                               {Scalar(1), Scalar(0)},
                               {Scalar(0), Scalar(1)},
                               {Scalar(1), Scalar(1)}};
    const auto w = raw_set(square, mat_identity(2));
    const auto cert = is_antipodal(w);
    CHECK(homothety_packing_check(w, cert, Scalar(1, 4)).pass);
    CHECK(homothety_packing_check(w, cert, Scalar(49, 100)).pass);
  }

  TEST_CASE("ratio outside (0, 1/2) is rejected") {
    const auto w = raw_set({Vec{Scalar(0)}, Vec{Scalar(1)}}, mat_identity(1));
    const auto cert = is_antipodal(w);
    CHECK_THROWS_AS(homothety_packing_check(w, cert, Scalar(1, 2)), input_error);
    CHECK_THROWS_AS(homothety_packing_check(w, cert, Scalar(0)), input_error);
  }

  TEST_CASE("non-antipodal set fails at the uncertified pair") {
    const auto w = collinear_triple();
    const auto cert = is_antipodal(w);
    const auto packing = homothety_packing_check(w, cert, Scalar(1, 4));
    CHECK(!packing.pass);
    CHECK(*packing.failed_pair == std::make_pair(0, 1));
    CHECK(packing.reason == "no certificate for the pair");
  }
}

TEST_SUITE("antipodal_bound") {
  TEST_CASE("cubic stars meet the bound with equality") {
    for (int d = 2; d <= 3; ++d) {
      const Tiling t = build_tiling(zd(d));
      for (int k = 1; k <= d; ++k) {
        const auto ids = t.faces.ids_of_codim(k);
        const Face& f = t.faces.face(ids[0]);
        const auto star = translate_star(t, f);
        const auto w = projected_face_set(t, f, star);
        const auto bound = antipodal_bound(w, is_antipodal(w));
        CHECK(bound.m == (1 << k));
        CHECK(bound.k_prime == k);
        CHECK(bound.strong);
        CHECK(bound.weak);
        CHECK(bound.chain_ok);
      }
    }
  }

  TEST_CASE("hexagonal vertex: m = 3 within 2^2") {
    const Tiling t = build_tiling(Lattice(QuadraticForm(kHexGram)));
    const auto [face, star] = pick_face(t, 2);
    const auto w = projected_face_set(t, face, star);
    const auto bound = antipodal_bound(w, is_antipodal(w));
    CHECK(bound.m == 3);
    CHECK(bound.k_prime == 2);
    CHECK(bound.strong);
    CHECK(bound.chain_ok);
  }

  TEST_CASE("facet case: m = 2 <= 2^1") {
    const Tiling t = build_tiling(zd(2));
    const auto [face, star] = pick_face(t, 1);
    const auto w = projected_face_set(t, face, star);
    const auto bound = antipodal_bound(w, is_antipodal(w));
    CHECK(bound.m == 2);
    CHECK(bound.k_prime == 1);
    CHECK(bound.strong);
  }

  TEST_CASE("incomplete certificates are rejected") {
    const auto w = collinear_triple();
    CHECK_THROWS_AS(antipodal_bound(w, is_antipodal(w)), input_error);
  }
}

TEST_SUITE("affine_robustness") {
  TEST_CASE("scaling the ambient form changes nothing observable") {
    const QuadraticForm construction(kHexGram);
    Mat scaled = kHexGram;
    for (auto& row : scaled)
      for (auto& x : row) x *= Scalar(5, 2);
    const Tiling plain = build_tiling(Lattice(construction));
    const Tiling skew = build_tiling(Lattice(construction, QuadraticForm(scaled)));
    for (const auto& f : plain.faces.faces) {
      if (f.dim < 0 || f.dim == 2) continue;
      const Face& g = skew.faces.face(f.id);  // same cell, same ids
      const auto star_p = translate_star(plain, f);
      const auto star_s = translate_star(skew, g);
      CHECK(star_p.translations == star_s.translations);
      const auto wp = projected_face_set(plain, f, star_p);
      const auto ws = projected_face_set(skew, g, star_s);
      const auto bp = antipodal_bound(wp, is_antipodal(wp));
      const auto bs = antipodal_bound(ws, is_antipodal(ws));
      CHECK(bp.k_prime == bs.k_prime);
      CHECK(bp.strong == bs.strong);
      CHECK(bp.chain_ok == bs.chain_ok);
      for (const Scalar& a : {Scalar(1, 10), Scalar(2, 5)}) {
        CHECK(homothety_packing_check(wp, is_antipodal(wp), a).pass ==
              homothety_packing_check(ws, is_antipodal(ws), a).pass);
      }
    }
  }
}
