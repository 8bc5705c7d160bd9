// parv: face stars, cone fans, and valence bounds of lattice Voronoi
// tilings, all in exact rational arithmetic. Subcommands: cell, verify,
// census. Exit codes: 0 ok, 2 invalid input, 3 internal cross-check
// failure, 4 a valence above 2^k, 5 census expectation mismatch.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "parv/errors.hpp"
#include "parv/verify.hpp"

namespace {

constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;
constexpr int kExitCensus = 5;

void emit(const std::string& text, const std::string& out_path) {
  std::cout << text;
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw parv::input_error("cannot write report to '" + out_path + "'");
    out << text;
  }
}

std::pair<int, int> parse_k_range(const std::string& text, int dim) {
  if (text.empty()) return {1, dim};
  const auto sep = text.find("..");
  try {
    if (sep == std::string::npos) {
      const int k = std::stoi(text);
      return {k, k};
    }
    return {std::stoi(text.substr(0, sep)), std::stoi(text.substr(sep + 2))};
  } catch (const std::exception&) {
    throw parv::input_error("cannot parse k range '" + text + "'");
  }
}

int run_cell(const std::string& spec_path, const std::string& out_path) {
  const auto spec = parv::parse_tiling_spec_file(spec_path);
  const auto summary = parv::cell_summary(spec.name, parv::make_lattice(spec, parv::Mode::voronoi));
  std::ostringstream os;
  summary.render(os);
  emit(os.str(), out_path);
  return 0;
}

int run_verify(const std::string& spec_path, const std::string& k_text,
               const std::string& mode_text, int jobs, int defect_face,
               const std::string& out_path) {
  const auto spec = parv::parse_tiling_spec_file(spec_path);
  const parv::Mode mode =
      mode_text == "skew" ? parv::Mode::skew : parv::Mode::voronoi;
  if (mode_text != "skew" && mode_text != "voronoi")
    throw parv::input_error("mode must be 'voronoi' or 'skew'");
  const auto [k_lo, k_hi] = parse_k_range(k_text, spec.dim);
  std::optional<parv::StarDefect> defect;
  if (defect_face >= 0) defect = parv::StarDefect{defect_face};
  const auto report = parv::verify_tiling(spec.name, parv::make_lattice(spec, mode), mode,
                                          k_lo, k_hi, jobs, defect);
  std::ostringstream os;
  report.render(os);
  emit(os.str(), out_path);
  return report.exit_code();
}

int run_census(const std::string& dir, int k, int expect_types, int jobs,
               const std::string& out_path) {
  namespace fs = std::filesystem;
  std::vector<std::string> files;
  std::error_code ec;
  for (const auto& entry : fs::directory_iterator(dir, ec))
    if (entry.path().extension() == ".spec") files.push_back(entry.path().string());
  if (ec) throw parv::input_error("cannot read corpus directory '" + dir + "'");
  std::sort(files.begin(), files.end());
  if (files.empty()) throw parv::input_error("no .spec files in '" + dir + "'");
  std::vector<parv::TilingSpec> specs;
  for (const auto& f : files) specs.push_back(parv::parse_tiling_spec_file(f));
  const auto report = parv::census_specs(specs, k, jobs);
  std::ostringstream os;
  report.render(os);
  if (expect_types >= 0)
    os << "expected_types: " << expect_types
       << (report.distinct_types() == expect_types ? " (met)" : " (MISMATCH)") << "\n";
  emit(os.str(), out_path);
  if (expect_types >= 0 && report.distinct_types() != expect_types) return kExitCensus;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification toolkit for parallelohedral tilings of lattices"};
  app.require_subcommand(1);

  std::string spec_path, out_path, k_text, mode_text = "voronoi", census_dir;
  int jobs = 1, census_k = 0, expect_types = -1, defect_face = -1;

  auto* cell = app.add_subcommand("cell", "prototile summary: relevant vectors, f-vector");
  cell->add_option("spec", spec_path, "tiling spec file")->required();
  cell->add_option("--out", out_path, "also write the report to this path");

  auto* verify = app.add_subcommand("verify", "run the full per-face verification pipeline");
  verify->add_option("spec", spec_path, "tiling spec file")->required();
  verify->add_option("--k", k_text, "codimension range, e.g. 1..3 or 2");
  verify->add_option("--mode", mode_text, "voronoi | skew (default voronoi)");
  verify->add_option("--jobs", jobs, "parallel face sweep width");
  verify->add_option("--out", out_path, "also write the report to this path");
  verify->add_option("--inject-star-defect", defect_face,
                     "test hook: corrupt the direct star of the given face id")
      ->group("");  // hidden

  auto* census = app.add_subcommand("census", "aggregate fan signatures over a corpus");
  census->add_option("dir", census_dir, "directory of .spec files")->required();
  census->add_option("--k", census_k, "face codimension")->required();
  census->add_option("--expect-types", expect_types, "fail (exit 5) unless this many types");
  census->add_option("--jobs", jobs, "parallel face sweep width");
  census->add_option("--out", out_path, "also write the report to this path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (cell->parsed()) return run_cell(spec_path, out_path);
    if (verify->parsed())
      return run_verify(spec_path, k_text, mode_text, jobs, defect_face, out_path);
    return run_census(census_dir, census_k, expect_types, jobs, out_path);
  } catch (const parv::input_error& e) {
    std::cerr << "parv: invalid input: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "parv: internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
