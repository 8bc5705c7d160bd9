#pragma once

#include <iosfwd>
#include <optional>

#include "parv/antipodal.hpp"
#include "parv/dualfan.hpp"
#include "parv/tiling_spec.hpp"

namespace parv {

/// Per-face record of the full verification pipeline: both star
/// algorithms, the parity audit, the dual-cell checks (asserted only when
/// the ambient form equals the construction form), the fan and its
/// signature, and the antipodal certificate chain with the valence bounds.
struct FaceCheck {
  int face_id = -1;
  int face_dim = 0;
  int k = 0;
  int valence_direct = 0;
  int valence_translate = 0;
  bool star_match = false;
  bool parity_pass = false;
  int dual_dim = 0;
  bool dual_checks_asserted = false;  // true in the Voronoi case
  bool dual_dim_ok = true;
  bool dual_dim_noteworthy = false;
  bool dual_vertex_pass = true;
  std::string fan_digest;
  std::string fan_signature;
  int fan_top_cones = 0;
  bool antipodal_pass = false;
  bool constructive_match = false;
  std::string certificate_digest;
  bool packing_pass = false;
  int k_prime = 0;
  bool bound_strong = false;  // m <= 2^{k'}
  bool bound_weak = false;    // m <= 2^k
  bool chain_ok = false;
  std::vector<std::string> problems;  // empty iff the face verified clean
};

struct VerificationReport {
  std::string lattice_name;
  int dim = 0;
  Mode mode = Mode::voronoi;
  bool voronoi_case = true;
  int k_lo = 1, k_hi = 1;
  std::vector<FaceCheck> faces;
  std::map<int, int> max_valence_per_k;
  std::map<std::string, long> signature_counts;  // digest -> count
  std::vector<std::string> violations;
  std::vector<std::string> noteworthy;
  bool crosscheck_failure = false;
  bool bound_violation = false;

  /// 0 clean; 3 internal cross-check mismatch (bug class); 4 a valence
  /// above 2^k, which would falsify the bound and is therefore NOTEWORTHY.
  int exit_code() const;
  void render(std::ostream& os) const;
};

/// Test-harness hook: corrupts the direct star of one face so the
/// cross-check machinery can be exercised end to end.
struct StarDefect {
  int face_id = -1;
};

VerificationReport verify_tiling(const std::string& name, const Lattice& lattice, Mode mode,
                                 int k_lo, int k_hi, int jobs = 1,
                                 const std::optional<StarDefect>& defect = std::nullopt);

FaceCheck verify_face(const Tiling& tiling, const Face& face,
                      const std::optional<StarDefect>& defect = std::nullopt);

struct CellSummary {
  std::string lattice_name;
  int dim = 0;
  RelevantVectorSet relevant;
  std::vector<long> fvector;
  Scalar circumradius2;

  void render(std::ostream& os) const;
};

CellSummary cell_summary(const std::string& name, const Lattice& lattice);

struct CensusReport {
  int k = 0;
  long faces_swept = 0;
  CensusTable table;

  int distinct_types() const { return static_cast<int>(table.size()); }
  void render(std::ostream& os) const;
};

CensusReport census_specs(const std::vector<TilingSpec>& specs, int k, int jobs = 1);

}  // namespace parv
