#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "parv/lattice.hpp"

namespace parv {

/// On-disk lattice description. Plain structured text with rationals as
/// "p/q" strings, so exactness survives serialization:
///
///   # comment
///   name hexagonal
///   dim 2
///   gram_construction
///   2 1
///   1 2
///   gram_ambient        (optional; defaults to gram_construction)
///   2 1
///   1 2
///   notes optional free text
struct TilingSpec {
  std::string name;
  int dim = 0;
  Mat gram_construction;
  std::optional<Mat> gram_ambient;
  std::string notes;
};

TilingSpec parse_tiling_spec(std::istream& in, const std::string& display_name);
TilingSpec parse_tiling_spec_file(const std::string& path);

/// voronoi: geometry measured in the construction form itself.
/// skew: projections and orthogonality use gram_ambient when present.
enum class Mode { voronoi, skew };

Lattice make_lattice(const TilingSpec& spec, Mode mode);

std::string mode_name(Mode mode);

}  // namespace parv
