#include "parv/affine.hpp"

#include "parv/errors.hpp"

namespace parv {

AffineSubspace affine_hull(const std::vector<Vec>& points) {
  if (points.empty()) throw input_error("affine_hull of empty point set");
  AffineSubspace sub;
  sub.base_point = points[0];
  Mat rows;
  for (std::size_t i = 1; i < points.size(); ++i) {
    Vec diff = vec_sub(points[i], points[0]);
    if (is_zero_vec(diff)) continue;
    rows.push_back(diff);
    if (rank(rows) == static_cast<int>(rows.size()))
      sub.direction_basis.push_back(std::move(diff));
    else
      rows.pop_back();
  }
  return sub;
}

Projector::Projector(std::vector<Vec> kernel_basis, const QuadraticForm& form)
    : space_dim_(form.dim()), kernel_(std::move(kernel_basis)) {
  for (const auto& v : kernel_)
    if (static_cast<int>(v.size()) != space_dim_)
      throw input_error("Projector: kernel vector of wrong dimension");
  if (kernel_.empty()) {
    const Mat id = mat_identity(space_dim_);
    for (const auto& row : id) complement_.push_back(row);
    mixed_inverse_ = id;
    return;
  }
  // N = nullspace of L^T G: the G-orthogonal complement of span(L).
  Mat lt_g;
  for (const auto& l : kernel_) lt_g.push_back(mat_apply(form.gram(), l));
  complement_ = nullspace(lt_g);
  if (static_cast<int>(kernel_.size() + complement_.size()) != space_dim_)
    throw internal_error("Projector: kernel basis not linearly independent");
  Mat mixed(space_dim_, Vec(space_dim_));
  for (int i = 0; i < space_dim_; ++i) {
    for (std::size_t j = 0; j < kernel_.size(); ++j) mixed[i][j] = kernel_[j][i];
    for (std::size_t j = 0; j < complement_.size(); ++j)
      mixed[i][kernel_.size() + j] = complement_[j][i];
  }
  auto inv = inverse(mixed);
  if (!inv) throw internal_error("Projector: degenerate decomposition");
  mixed_inverse_ = *inv;
}

Vec Projector::project(const Vec& x) const {
  Vec beta = complement_coords(x);
  Vec out = zero_vec(space_dim_);
  for (std::size_t j = 0; j < complement_.size(); ++j)
    out = vec_add(out, vec_scale(beta[j], complement_[j]));
  return out;
}

Vec Projector::complement_coords(const Vec& x) const {
  if (static_cast<int>(x.size()) != space_dim_)
    throw input_error("Projector: point of wrong dimension");
  const Vec coeffs = mat_apply(mixed_inverse_, x);
  return Vec(coeffs.begin() + kernel_.size(), coeffs.end());
}

Vec project_along(const AffineSubspace& sub, const QuadraticForm& form, const Vec& point) {
  Projector proj(sub.direction_basis, form);
  return proj.project(vec_sub(point, sub.base_point));
}

}  // namespace parv
