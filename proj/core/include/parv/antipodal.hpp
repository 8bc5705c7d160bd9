#pragma once

#include <map>
#include <optional>
#include <string>

#include "parv/star.hpp"

namespace parv {

/// W = { pi(F_i) } in complement-basis coordinates, together with the inner
/// product the ambient form induces on the complement. |points| equals the
/// valence of the face.
struct AntipodalSet {
  int face_id = -1;
  int k = 0;                 // dimension of the projected space
  std::vector<Vec> points;   // aligned with the star's translations
  Mat metric;                // Gram matrix of the complement basis under G_A

  int size() const { return static_cast<int>(points.size()); }
  int affine_dim() const;    // k' = dim aff W
};

AntipodalSet projected_face_set(const Tiling& tiling, const Face& f, const FaceStar& star);

/// A pair of distinct parallel hyperplanes <u, x> = hi and <u, x> = lo with
/// hi - lo = 1, w_i on the first, w_j on the second, and all of W between.
struct PairCertificate {
  Vec direction;
  Scalar hi, lo;
};

struct AntipodalCertificate {
  int m = 0;
  std::map<std::pair<int, int>, PairCertificate> pairs;  // ordered (i, j)
  std::optional<std::pair<int, int>> violation;

  bool complete() const;
  const PairCertificate* find(int i, int j) const;
  std::string digest() const;
};

/// Decides antipodality by one exact LP feasibility problem per pair, with
/// the normalization <u, w_i - w_j> = 1 standing in for "distinct parallel
/// hyperplanes". Returns certificates for all ordered pairs, or the first
/// violating pair.
AntipodalCertificate is_antipodal(const AntipodalSet& w);

/// The same certificates built constructively from the tiling: for each
/// ordered pair, an LP finds the hyperplane that separates P0 from P_{ji}
/// while supporting both (its support value must be exactly half the
/// translation functional, or the tiling is not face-to-face); projecting
/// it along lin F gives the sandwiching hyperplane pair. Each certificate
/// is verified against W before being returned.
AntipodalCertificate constructive_certificates(const Tiling& tiling, const Face& f,
                                               const FaceStar& star, const AntipodalSet& w);

struct PackingCheck {
  bool pass = true;
  std::optional<std::pair<int, int>> failed_pair;
  std::string reason;
};

/// Exact disjointness of the homotheties H^a_{w_i}(conv W): for every pair,
/// all homothet vertices must lie strictly on their own side of the
/// mid-hyperplane of the pair's certificate. Requires 0 < a < 1/2.
PackingCheck homothety_packing_check(const AntipodalSet& w, const AntipodalCertificate& cert,
                                     const Scalar& a);

struct BoundCheck {
  int m = 0;
  int k = 0;
  int k_prime = 0;
  bool strong = false;   // m <= 2^{k'}
  bool weak = false;     // m <= 2^k
  bool chain_ok = false; // m^2 a^{2k'} <= 1 at a = 499/1000, with vol^2(conv W) > 0
  Scalar volume2;
};

BoundCheck antipodal_bound(const AntipodalSet& w, const AntipodalCertificate& cert);

}  // namespace parv
