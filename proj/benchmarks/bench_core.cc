#include <benchmark/benchmark.h>

#include "parv/dualfan.hpp"
#include "parv/verify.hpp"

namespace {

using namespace parv;

const Mat kBccGram = {{Scalar(1), Scalar(0), Scalar(1, 2)},
                      {Scalar(0), Scalar(1), Scalar(1, 2)},
                      {Scalar(1, 2), Scalar(1, 2), Scalar(3, 4)}};
const Mat kHexGram = {{Scalar(2), Scalar(1)}, {Scalar(1), Scalar(2)}};

void BM_voronoi_cell_bcc(benchmark::State& state) {
  const Lattice l{QuadraticForm(kBccGram)};
  for (auto _ : state) {
    auto cell = voronoi_cell(l);
    benchmark::DoNotOptimize(cell.vrep.vertices.size());
  }
}
BENCHMARK(BM_voronoi_cell_bcc);

void BM_face_lattice_bcc(benchmark::State& state) {
  const auto cell = voronoi_cell(Lattice{QuadraticForm(kBccGram)});
  for (auto _ : state) {
    auto fl = face_lattice(cell);
    benchmark::DoNotOptimize(fl.faces.size());
  }
}
BENCHMARK(BM_face_lattice_bcc);

void BM_vertex_star_zd(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const Tiling t = build_tiling(Lattice{QuadraticForm(mat_identity(d))});
  const Face& corner = t.faces.face(t.faces.ids_of_codim(d).front());
  for (auto _ : state) {
    auto star = direct_star(t, corner);
    benchmark::DoNotOptimize(star.valence());
  }
}
BENCHMARK(BM_vertex_star_zd)->Arg(2)->Arg(3)->Arg(4);

void BM_fan_signature_z3_vertex(benchmark::State& state) {
  const Tiling t = build_tiling(Lattice{QuadraticForm(mat_identity(3))});
  const Face& corner = t.faces.face(t.faces.ids_of_codim(3).front());
  const auto star = translate_star(t, corner);
  const auto fan = fan_of_face(t, corner, star);
  for (auto _ : state) {
    auto sig = fan_signature(fan);
    benchmark::DoNotOptimize(sig.size());
  }
}
BENCHMARK(BM_fan_signature_z3_vertex);

void BM_verify_face_hexagonal_vertex(benchmark::State& state) {
  const Tiling t = build_tiling(Lattice{QuadraticForm(kHexGram)});
  const Face& corner = t.faces.face(t.faces.ids_of_codim(2).front());
  for (auto _ : state) {
    auto check = verify_face(t, corner);
    benchmark::DoNotOptimize(check.problems.size());
  }
}
BENCHMARK(BM_verify_face_hexagonal_vertex);

}  // namespace

BENCHMARK_MAIN();
