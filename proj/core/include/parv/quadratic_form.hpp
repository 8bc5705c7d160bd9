#pragma once

#include "parv/linalg.hpp"

namespace parv {

/// A rational positive definite symmetric bilinear form. The Gram matrix is
/// validated at construction (symmetry, then positive pivots of the exact
/// LDL^T factorization, which is equivalent to all leading principal minors
/// being positive). The factorization is kept for lattice point enumeration.
class QuadraticForm {
public:
  explicit QuadraticForm(Mat gram);

  int dim() const { return dim_; }
  const Mat& gram() const { return gram_; }

  Scalar pairing(const Vec& u, const Vec& v) const;
  Scalar norm2(const Vec& v) const;

  /// gram = L D L^T with L unit lower triangular and D a positive diagonal.
  const Mat& ldl_lower() const { return ldl_lower_; }
  const Vec& ldl_diag() const { return ldl_diag_; }

  bool operator==(const QuadraticForm& o) const { return gram_ == o.gram_; }

private:
  int dim_;
  Mat gram_;
  Mat ldl_lower_;
  Vec ldl_diag_;
};

}  // namespace parv
