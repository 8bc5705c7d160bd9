#pragma once

#include "parv/quadratic_form.hpp"

namespace parv {

struct AffineSubspace {
  Vec base_point;
  std::vector<Vec> direction_basis;  // linearly independent
  int dim() const { return static_cast<int>(direction_basis.size()); }
};

/// Affine hull of a non-empty point set. base_point is the first point; the
/// basis is picked greedily from the differences in input order, so the
/// result is deterministic.
AffineSubspace affine_hull(const std::vector<Vec>& points);

/// Orthogonal projection along a subspace L onto its form-orthogonal
/// complement N, all over the rationals. The complement basis is the
/// canonical nullspace of L^T G (unnormalized: no square roots appear).
/// project() returns the N-component in ambient coordinates;
/// complement_coords() returns the same component in N-basis coordinates.
class Projector {
public:
  Projector(std::vector<Vec> kernel_basis, const QuadraticForm& form);

  int space_dim() const { return space_dim_; }
  int codim() const { return static_cast<int>(complement_.size()); }
  const std::vector<Vec>& complement_basis() const { return complement_; }

  Vec project(const Vec& x) const;
  Vec complement_coords(const Vec& x) const;

private:
  int space_dim_;
  std::vector<Vec> kernel_;
  std::vector<Vec> complement_;
  Mat mixed_inverse_;  // inverse of [kernel | complement] as columns
};

/// Form-orthogonal component of (point - sub.base_point) with respect to
/// sub.direction_basis, in ambient coordinates. Idempotent, linear, kills
/// exactly the direction basis.
Vec project_along(const AffineSubspace& sub, const QuadraticForm& form, const Vec& point);

}  // namespace parv
