#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "parv/dualfan.hpp"
#include "parv/errors.hpp"
#include "parv/poset_canon.hpp"

using namespace parv;

namespace {

const Mat kHexGram = {{Scalar(2), Scalar(1)}, {Scalar(1), Scalar(2)}};
const Mat kFccGram = {{Scalar(2), Scalar(1), Scalar(1)},
                      {Scalar(1), Scalar(2), Scalar(1)},
                      {Scalar(1), Scalar(1), Scalar(2)}};
const Mat kHexzGram = {{Scalar(2), Scalar(1), Scalar(0)},
                       {Scalar(1), Scalar(2), Scalar(0)},
                       {Scalar(0), Scalar(0), Scalar(1)}};
const Mat kPyramidGram = {{Scalar(3, 2), Scalar(1), Scalar(-2, 3)},
                          {Scalar(1), Scalar(1), Scalar(-1, 2)},
                          {Scalar(-2, 3), Scalar(-1, 2), Scalar(4)}};

Lattice zd(int d) { return Lattice(QuadraticForm(mat_identity(d))); }

struct FaceData {
  Face face;
  FaceStar star;
};

FaceData pick_face(const Tiling& t, int codim, int which = 0) {
  const auto ids = t.faces.ids_of_codim(codim);
  REQUIRE(static_cast<int>(ids.size()) > which);
  FaceData out{t.faces.face(ids[which]), {}};
  out.star = translate_star(t, out.face);
  return out;
}

std::string reversed_certificate(const PolytopePoset& poset, int k) {
  // Anti-isomorphism target: flip covers and relabel dim -> k - dim.
  std::vector<int> labels;
  for (int l : poset.labels) labels.push_back(k - l);
  std::vector<std::pair<int, int>> covers;
  for (const auto& [a, b] : poset.covers) covers.emplace_back(b, a);
  return canonical_poset_certificate(labels, covers);
}

std::string fan_certificate(const ConeFan& fan) {
  std::vector<int> labels;
  for (const auto& f : fan.faces) labels.push_back(f.dim);
  return canonical_poset_certificate(labels, fan.covers);
}

}  // namespace

TEST_SUITE("delaunay_cell") {
  TEST_CASE("Z^3 vertex dual is the unit cube") {
    const Tiling t = build_tiling(zd(3));
    const auto [face, star] = pick_face(t, 3);
    const auto dc = delaunay_cell(face, star);
    CHECK(dc.centers.size() == 8);
    CHECK(dc.dual_dim == 3);
    CHECK(dc.sublattice_basis.size() == 3);
  }

  TEST_CASE("hexagonal vertex dual is a triangle") {
    const Tiling t = build_tiling(Lattice(QuadraticForm(kHexGram)));
    const auto [face, star] = pick_face(t, 2);
    const auto dc = delaunay_cell(face, star);
    CHECK(dc.centers.size() == 3);
    CHECK(dc.dual_dim == 2);
  }

  TEST_CASE("fcc valence-4 vertex dual is a tetrahedron") {
    const Tiling t = build_tiling(Lattice(QuadraticForm(kFccGram)));
    bool found = false;
    for (int id : t.faces.ids_of_codim(3)) {
      const auto star = translate_star(t, t.faces.face(id));
      if (star.valence() != 4) continue;
      found = true;
      const auto dc = delaunay_cell(t.faces.face(id), star);
      CHECK(affine_rank(dc.centers) == 3);  // 4 affinely independent centers
    }
    CHECK(found);
  }
}

TEST_SUITE("dual_dim_check") {
  TEST_CASE("voronoi mode asserts dual_dim == k") {
    const Tiling t = build_tiling(zd(3));
    for (int k = 1; k <= 3; ++k) {
      const auto [face, star] = pick_face(t, k);
      const auto check = dual_dim_check(delaunay_cell(face, star), true);
      CHECK(check.ok);
      CHECK(check.dual_dim == k);
    }
  }

  TEST_CASE("facet dual is always a segment") {
    const Tiling t = build_tiling(Lattice(QuadraticForm(kHexGram)));
    const auto [face, star] = pick_face(t, 1);
    CHECK(delaunay_cell(face, star).dual_dim == 1);
  }

  TEST_CASE("skew mode records without asserting") {
    // same lattice, ambient form stretched: centers are unchanged
    const Lattice skew{QuadraticForm(kHexGram),
                       QuadraticForm({{Scalar(4), Scalar(2)}, {Scalar(2), Scalar(4)}})};
    const Tiling t = build_tiling(skew);
    const auto [face, star] = pick_face(t, 2);
    const auto check = dual_dim_check(delaunay_cell(face, star), false);
    CHECK(check.dual_dim == 2);
    CHECK(!check.noteworthy);
  }
}

TEST_SUITE("dual_vertex_check") {
  TEST_CASE("Z^2 vertex: four centers forming a square") {
    const Tiling t = build_tiling(zd(2));
    const auto [face, star] = pick_face(t, 2);
    CHECK(dual_vertex_check(delaunay_cell(face, star), star).pass);
  }

  TEST_CASE("fcc valence-6 vertex: octahedron, distinct mod 2*Lambda(F)") {
    const Tiling t = build_tiling(Lattice(QuadraticForm(kFccGram)));
    bool found = false;
    for (int id : t.faces.ids_of_codim(3)) {
      const auto star = translate_star(t, t.faces.face(id));
      if (star.valence() != 6) continue;
      found = true;
      const auto dc = delaunay_cell(t.faces.face(id), star);
      CHECK(dual_vertex_check(dc, star).pass);
    }
    CHECK(found);
  }

  TEST_CASE("passes on every face of the voronoi corpus") {
    for (const Mat& gram : {mat_identity(2), mat_identity(3), kHexGram, kFccGram}) {
      const Tiling t = build_tiling(Lattice(QuadraticForm(gram)));
      for (const auto& f : t.faces.faces) {
        if (f.dim < 0 || f.dim == t.faces.space_dim) continue;
        const auto star = translate_star(t, f);
        const auto dc = delaunay_cell(f, star);
        CHECK(dual_vertex_check(dc, star).pass);
        CHECK(static_cast<int>(dc.centers.size()) == star.valence());
      }
    }
  }
}

TEST_SUITE("fan_of_face") {
  TEST_CASE("Z^2 vertex fan is the four quadrants") {
    const Tiling t = build_tiling(zd(2));
    const auto [face, star] = pick_face(t, 2);
    const auto fan = fan_of_face(t, face, star);
    CHECK(fan.k == 2);
    CHECK(fan.top_cones() == 4);
    CHECK(fan.rays.size() == 4);
    CHECK(fan.faces.size() == 9);  // apex + 4 rays + 4 quadrants
  }

  TEST_CASE("hexagonal vertex fan: 3 cones and 3 rays") {
    const Tiling t = build_tiling(Lattice(QuadraticForm(kHexGram)));
    const auto [face, star] = pick_face(t, 2);
    const auto fan = fan_of_face(t, face, star);
    CHECK(fan.top_cones() == 3);
    CHECK(fan.rays.size() == 3);
    CHECK(fan.faces.size() == 7);
  }

  TEST_CASE("facet fan is the two-halfline fan") {
    const Tiling t = build_tiling(zd(3));
    const auto [face, star] = pick_face(t, 1);
    const auto fan = fan_of_face(t, face, star);
    CHECK(fan.k == 1);
    CHECK(fan.top_cones() == 2);
    CHECK(fan.faces.size() == 3);
  }

  TEST_CASE("Z^3 edge fan equals the Z^2 vertex fan") {
    const Tiling t3 = build_tiling(zd(3));
    const auto [edge, estar] = pick_face(t3, 2);
    REQUIRE(edge.dim == 1);
    const Tiling t2 = build_tiling(zd(2));
    const auto [corner, cstar] = pick_face(t2, 2);
    CHECK(fan_signature(fan_of_face(t3, edge, estar)) ==
          fan_signature(fan_of_face(t2, corner, cstar)));
  }

  TEST_CASE("top cone count always equals the valence") {
    const Tiling t = build_tiling(Lattice(QuadraticForm(kFccGram)));
    for (const auto& f : t.faces.faces) {
      if (f.dim < 0 || f.dim == 3) continue;
      const auto star = translate_star(t, f);
      CHECK(fan_of_face(t, f, star).top_cones() == star.valence());
    }
  }
}

TEST_SUITE("fan_signature") {
  TEST_CASE("square vs hexagonal vertex fans differ") {
    const Tiling tz = build_tiling(zd(2));
    const auto [fz, sz] = pick_face(tz, 2);
    const Tiling th = build_tiling(Lattice(QuadraticForm(kHexGram)));
    const auto [fh, sh] = pick_face(th, 2);
    CHECK(fan_signature(fan_of_face(tz, fz, sz)) != fan_signature(fan_of_face(th, fh, sh)));
  }

  TEST_CASE("canonicalization is invariant under relabeling") {
    // the same poset with elements permuted must produce the same string
    std::vector<int> labels = {0, 1, 1, 2, 2};
    std::vector<std::pair<int, int>> covers = {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}};
    std::mt19937 rng(3);
    const auto reference = canonical_poset_certificate(labels, covers);
    std::vector<int> perm = {0, 1, 2, 3, 4};
    for (int trial = 0; trial < 20; ++trial) {
      std::shuffle(perm.begin(), perm.end(), rng);
      std::vector<int> plabels(5);
      std::vector<std::pair<int, int>> pcovers;
      for (int i = 0; i < 5; ++i) plabels[perm[i]] = labels[i];
      for (const auto& [a, b] : covers) pcovers.emplace_back(perm[a], perm[b]);
      std::shuffle(pcovers.begin(), pcovers.end(), rng);
      CHECK(canonical_poset_certificate(plabels, pcovers) == reference);
    }
  }

  TEST_CASE("distinct labeled posets get distinct certificates") {
    std::vector<int> labels = {0, 1, 1};
    CHECK(canonical_poset_certificate(labels, {{0, 1}, {0, 2}}) !=
          canonical_poset_certificate(labels, {{0, 1}}));
    CHECK(canonical_poset_certificate({0, 1, 2}, {{0, 1}, {1, 2}}) !=
          canonical_poset_certificate({0, 1, 1}, {{0, 1}, {0, 2}}));
  }

  TEST_CASE("signature is stable under an ambient form change") {
    const Lattice plain{QuadraticForm(kHexzGram)};
    Mat stretched = kHexzGram;
    stretched[2][2] = Scalar(2);
    const Lattice skew{QuadraticForm(kHexzGram), QuadraticForm(stretched)};
    const Tiling tp = build_tiling(plain);
    const Tiling ts = build_tiling(skew);
    for (int k = 1; k <= 3; ++k) {
      const auto [fp, sp] = pick_face(tp, k);
      const auto [fs, ss] = pick_face(ts, k);
      CHECK(fan_signature(fan_of_face(tp, fp, sp)) == fan_signature(fan_of_face(ts, fs, ss)));
    }
    // scaling the ambient form is also invisible
    Mat scaled = kHexzGram;
    for (auto& row : scaled)
      for (auto& x : row) x *= Scalar(7, 3);
    const Lattice rescaled{QuadraticForm(kHexzGram), QuadraticForm(scaled)};
    const Tiling tr = build_tiling(rescaled);
    const auto [fr, sr] = pick_face(tr, 3);
    const auto [fp3, sp3] = pick_face(tp, 3);
    CHECK(fan_signature(fan_of_face(tr, fr, sr)) == fan_signature(fan_of_face(tp, fp3, sp3)));
  }
}

TEST_SUITE("fan_dual_consistency") {
  TEST_CASE("fan poset is anti-isomorphic to the dual cell poset (voronoi)") {
    for (const Mat& gram : {mat_identity(2), mat_identity(3), kHexGram, kFccGram}) {
      const Tiling t = build_tiling(Lattice(QuadraticForm(gram)));
      for (const auto& f : t.faces.faces) {
        if (f.dim < 0 || f.dim == t.faces.space_dim) continue;
        const auto star = translate_star(t, f);
        const auto fan = fan_of_face(t, f, star);
        const auto dc = delaunay_cell(f, star);
        const auto poset = polytope_face_poset(dc.centers);
        CHECK(fan_certificate(fan) == reversed_certificate(poset, fan.k));
      }
    }
  }
}

TEST_SUITE("census") {
  TEST_CASE("2-d corpus: exactly two types") {
    const auto table = census({{"z2", zd(2)}, {"hexagonal", Lattice(QuadraticForm(kHexGram))}}, 2);
    CHECK(table.size() == 2);
    long total = 0;
    for (const auto& [sig, entry] : table) total += entry.count;
    CHECK(total == 10);  // 4 square corners + 6 hexagon corners
  }

  TEST_CASE("Z^3 alone: one type at k = 3") {
    const auto table = census({{"z3", zd(3)}}, 3);
    CHECK(table.size() == 1);
    CHECK(table.begin()->second.count == 8);
    CHECK(table.begin()->second.witnesses ==
          std::vector<std::pair<std::string, int>>{{"z3", 1}});
  }

  TEST_CASE("3-d corpus reaches all five types with the frozen witness") {
    const std::vector<std::pair<std::string, Lattice>> corpus = {
        {"z3", zd(3)},
        {"fcc", Lattice(QuadraticForm(kFccGram))},
        {"hexz", Lattice(QuadraticForm(kHexzGram))},
        {"pyramid_witness", Lattice(QuadraticForm(kPyramidGram))},
    };
    const auto table = census(corpus, 3);
    CHECK(table.size() == 5);
    // top-cone profile of the five types: 4, 5, 6, 6, 8
    std::multiset<int> tops;
    for (const auto& [sig, entry] : table) {
      // recover the top count from a witness fan
      const auto& [name, fid] = entry.witnesses.front();
      for (const auto& [cname, lattice] : corpus) {
        if (cname != name) continue;
        const Tiling t = build_tiling(lattice);
        const auto star = translate_star(t, t.faces.face(fid));
        tops.insert(fan_of_face(t, t.faces.face(fid), star).top_cones());
      }
    }
    CHECK(tops == std::multiset<int>{4, 5, 6, 6, 8});
  }

  TEST_CASE("pyramid witness regression: a valence-5 vertex exists") {
    const Tiling t = build_tiling(Lattice(QuadraticForm(kPyramidGram)));
    int fives = 0;
    for (int id : t.faces.ids_of_codim(3))
      if (translate_star(t, t.faces.face(id)).valence() == 5) ++fives;
    CHECK(fives > 0);
  }

  TEST_CASE("dimension below k is rejected") {
    CHECK_THROWS_AS(census({{"z2", zd(2)}}, 3), input_error);
  }
}

TEST_SUITE("census_property") {
  TEST_CASE("no sixth type over random rational Gram matrices (d = 3)") {
    // Fixed-seed sweep; every fan of a (d-3)-face must be one of the five
    // known types realized by the reference corpus.
    std::set<std::string> known;
    for (const auto& [sig, entry] :
         census({{"z3", zd(3)},
                 {"fcc", Lattice(QuadraticForm(kFccGram))},
                 {"hexz", Lattice(QuadraticForm(kHexzGram))},
                 {"pyramid_witness", Lattice(QuadraticForm(kPyramidGram))}},
                3))
      known.insert(sig);
    REQUIRE(known.size() == 5);

    std::mt19937 rng(20260808);
    std::uniform_int_distribution<int> entry_num(-3, 3);
    std::uniform_int_distribution<int> entry_den(1, 4);
    std::uniform_int_distribution<int> diag_num(1, 4);
    int accepted = 0;
    while (accepted < 50) {
      Mat g(3, zero_vec(3));
      for (int i = 0; i < 3; ++i) g[i][i] = Scalar(diag_num(rng), entry_den(rng));
      for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
          g[i][j] = Scalar(entry_num(rng), entry_den(rng));
          g[j][i] = g[i][j];
        }
      try {
        const auto table = census({{"random", Lattice(QuadraticForm(g))}}, 3);
        ++accepted;
        for (const auto& [sig, entry] : table) {
          CHECK(known.count(sig) == 1);
        }
      } catch (const input_error&) {
        continue;  // not positive definite; draw again
      }
    }
  }

  TEST_CASE("no third type over random rational Gram matrices (d = 2)") {
    std::set<std::string> known;
    for (const auto& [sig, entry] :
         census({{"z2", zd(2)}, {"hexagonal", Lattice(QuadraticForm(kHexGram))}}, 2))
      known.insert(sig);
    REQUIRE(known.size() == 2);
    std::mt19937 rng(1234);
    std::uniform_int_distribution<int> num(-3, 3), den(1, 4), diag(1, 4);
    int accepted = 0;
    while (accepted < 30) {
      Mat g(2, zero_vec(2));
      g[0][0] = Scalar(diag(rng), den(rng));
      g[1][1] = Scalar(diag(rng), den(rng));
      g[0][1] = g[1][0] = Scalar(num(rng), den(rng));
      try {
        for (const auto& [sig, entry] : census({{"r", Lattice(QuadraticForm(g))}}, 2))
          CHECK(known.count(sig) == 1);
        ++accepted;
      } catch (const input_error&) {
      }
    }
  }
}
