#include <doctest.h>

#include <sstream>

#include "parv/errors.hpp"
#include "parv/parallel.hpp"
#include "parv/verify.hpp"

using namespace parv;

namespace {

TilingSpec spec_from(const std::string& text) {
  std::istringstream in(text);
  return parse_tiling_spec(in, "inline");
}

const char* kHexSpec =
    "name hexagonal\n"
    "dim 2\n"
    "gram_construction\n"
    "2 1\n"
    "1 2\n";

}  // namespace

TEST_SUITE("tiling_spec") {
  TEST_CASE("round trip of a plain spec") {
    const auto spec = spec_from(kHexSpec);
    CHECK(spec.name == "hexagonal");
    CHECK(spec.dim == 2);
    CHECK(spec.gram_construction[0][1] == Scalar(1));
    CHECK(!spec.gram_ambient);
  }

  TEST_CASE("rationals, comments, ambient section") {
    const auto spec = spec_from(
        "# comment\n"
        "name bcc\n"
        "dim 3\n"
        "gram_construction\n"
        "1 0 1/2\n"
        "0 1 1/2\n"
        "1/2 1/2 3/4\n"
        "gram_ambient\n"
        "1 0 1/2   # trailing comment\n"
        "0 1 1/2\n"
        "1/2 1/2 7/8\n"
        "notes some text\n");
    CHECK(spec.gram_construction[2][2] == Scalar(3, 4));
    REQUIRE(spec.gram_ambient);
    CHECK((*spec.gram_ambient)[2][2] == Scalar(7, 8));
    CHECK(spec.notes == "some text");
  }

  TEST_CASE("malformed rational is an input error") {
    CHECK_THROWS_AS(spec_from("name x\ndim 2\ngram_construction\n1/0 0\n0 1\n"), input_error);
  }

  TEST_CASE("non-positive-definite gram is an input error") {
    const auto spec = spec_from("name x\ndim 2\ngram_construction\n1 2\n2 1\n");
    CHECK_THROWS_AS(make_lattice(spec, Mode::voronoi), input_error);
  }

  TEST_CASE("asymmetric gram is an input error") {
    const auto spec = spec_from("name x\ndim 2\ngram_construction\n1 1\n0 1\n");
    CHECK_THROWS_AS(make_lattice(spec, Mode::voronoi), input_error);
  }

  TEST_CASE("missing pieces are input errors") {
    CHECK_THROWS_AS(spec_from("dim 2\n"), input_error);
    CHECK_THROWS_AS(spec_from("name x\ngram_construction\n1\n"), input_error);
    CHECK_THROWS_AS(spec_from("name x\ndim 2\ngram_construction\n1 0\n"), input_error);
    CHECK_THROWS_AS(spec_from("name x\ndim 2\nbogus_key 1\n"), input_error);
  }

  TEST_CASE("mode selects the ambient form") {
    const auto spec = spec_from(
        "name x\ndim 2\ngram_construction\n1 0\n0 1\ngram_ambient\n2 0\n0 2\n");
    CHECK(make_lattice(spec, Mode::voronoi).voronoi_case());
    CHECK(!make_lattice(spec, Mode::skew).voronoi_case());
  }
}

TEST_SUITE("verify_pipeline") {
  TEST_CASE("hexagonal lattice verifies clean") {
    const auto spec = spec_from(kHexSpec);
    const auto report =
        verify_tiling(spec.name, make_lattice(spec, Mode::voronoi), Mode::voronoi, 1, 2);
    CHECK(report.exit_code() == 0);
    CHECK(report.violations.empty());
    CHECK(report.faces.size() == 12);
    CHECK(report.max_valence_per_k.at(1) == 2);
    CHECK(report.max_valence_per_k.at(2) == 3);
    for (const auto& fc : report.faces) {
      CHECK(fc.star_match);
      CHECK(fc.parity_pass);
      CHECK(fc.antipodal_pass);
      CHECK(fc.constructive_match);
      CHECK(fc.packing_pass);
      CHECK(fc.bound_strong);
      CHECK(fc.chain_ok);
    }
  }

  TEST_CASE("reports are byte-identical across runs and job counts") {
    const auto spec = spec_from(kHexSpec);
    std::string first, second, parallel;
    for (std::string* out : {&first, &second, &parallel}) {
      const auto report = verify_tiling(spec.name, make_lattice(spec, Mode::voronoi),
                                        Mode::voronoi, 1, 2, out == &parallel ? 3 : 1);
      std::ostringstream os;
      report.render(os);
      *out = os.str();
    }
    CHECK(first == second);
    CHECK(first == parallel);
  }

  TEST_CASE("an injected star defect is caught as a cross-check failure") {
    const auto spec = spec_from(kHexSpec);
    const auto lattice = make_lattice(spec, Mode::voronoi);
    const auto clean = verify_tiling(spec.name, lattice, Mode::voronoi, 1, 2);
    const int victim = clean.faces.front().face_id;
    const auto report = verify_tiling(spec.name, lattice, Mode::voronoi, 1, 2, 1,
                                      StarDefect{victim});
    CHECK(report.exit_code() == 3);
    CHECK(report.crosscheck_failure);
    CHECK(!report.bound_violation);
  }

  TEST_CASE("skew mode records dual dimension instead of asserting") {
    const auto spec = spec_from(
        "name hexz\ndim 3\ngram_construction\n2 1 0\n1 2 0\n0 0 1\n"
        "gram_ambient\n2 1 0\n1 2 0\n0 0 2\n");
    const auto report =
        verify_tiling(spec.name, make_lattice(spec, Mode::skew), Mode::skew, 1, 3);
    CHECK(report.exit_code() == 0);
    CHECK(!report.voronoi_case);
    for (const auto& fc : report.faces) {
      CHECK(!fc.dual_checks_asserted);
      CHECK(fc.dual_dim == fc.k);  // observed, not assumed
    }
  }

  TEST_CASE("empty k range is an input error") {
    const auto spec = spec_from(kHexSpec);
    CHECK_THROWS_AS(
        verify_tiling(spec.name, make_lattice(spec, Mode::voronoi), Mode::voronoi, 3, 7),
        input_error);
  }
}

TEST_SUITE("cell_summary") {
  TEST_CASE("hexagonal summary values") {
    const auto spec = spec_from(kHexSpec);
    const auto summary = cell_summary(spec.name, make_lattice(spec, Mode::voronoi));
    CHECK(summary.relevant.vectors.size() == 6);
    CHECK(summary.fvector == std::vector<long>{6, 6, 1});
    CHECK(summary.circumradius2 == Scalar(2, 3));
    std::ostringstream os;
    summary.render(os);
    CHECK(os.str().find("circumradius2: 2/3 (~0.666667)") != std::string::npos);
  }

  TEST_CASE("z3 and fcc summary values") {
    const auto z3 = cell_summary(
        "z3", make_lattice(spec_from("name z3\ndim 3\ngram_construction\n1 0 0\n0 1 0\n0 0 1\n"),
                           Mode::voronoi));
    CHECK(z3.relevant.vectors.size() == 6);
    CHECK(z3.fvector == std::vector<long>{8, 12, 6, 1});
    const auto fcc = cell_summary(
        "fcc", make_lattice(spec_from("name fcc\ndim 3\ngram_construction\n2 1 1\n1 2 1\n1 1 2\n"),
                            Mode::voronoi));
    CHECK(fcc.relevant.vectors.size() == 12);
    CHECK(fcc.fvector == std::vector<long>{14, 24, 12, 1});
  }
}

TEST_SUITE("parallel_sweep") {
  TEST_CASE("worker exceptions reach the caller") {
    CHECK_THROWS_AS(parallel_for(8, 3,
                                 [](int i) {
                                   if (i == 5) throw input_error("boom");
                                 }),
                    input_error);
  }
}

TEST_SUITE("census_cli_layer") {
  TEST_CASE("census_specs rejects corpora below the requested k") {
    std::vector<TilingSpec> specs = {spec_from(kHexSpec)};
    CHECK_THROWS_AS(census_specs(specs, 3), input_error);
  }

  TEST_CASE("census_specs sweeps the 2-d inline corpus") {
    std::vector<TilingSpec> specs = {
        spec_from(kHexSpec),
        spec_from("name z2\ndim 2\ngram_construction\n1 0\n0 1\n"),
    };
    const auto report = census_specs(specs, 2);
    CHECK(report.distinct_types() == 2);
    CHECK(report.faces_swept == 10);
    std::ostringstream os;
    report.render(os);
    CHECK(os.str().find("distinct_types: 2") != std::string::npos);
  }
}
