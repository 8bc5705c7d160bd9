#pragma once

#include <optional>
#include <vector>

#include "parv/rational.hpp"

namespace parv {

// Row-major dense matrix of rationals. Sizes here are tiny (d <= 4 plus a
// handful of LP rows), so plain Gaussian elimination over mpq is exact and
// fast enough everywhere.
using Mat = std::vector<Vec>;

Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Scalar& s, const Vec& v);
Vec vec_neg(const Vec& v);
Scalar dot(const Vec& a, const Vec& b);
bool is_zero_vec(const Vec& v);
Vec zero_vec(int n);

Mat mat_identity(int n);
Mat mat_transpose(const Mat& m);
Mat mat_mul(const Mat& a, const Mat& b);
Vec mat_apply(const Mat& m, const Vec& v);

int rank(Mat m);
Scalar det(Mat m);
std::optional<Mat> inverse(const Mat& m);

/// One solution of A x = b, or nullopt when inconsistent. If the system is
/// underdetermined the free variables are set to zero, so the result is
/// deterministic.
std::optional<Vec> solve(const Mat& a, const Vec& b);

/// Coordinates of `target` in the given spanning vectors (columns), or
/// nullopt if target is outside their span.
std::optional<Vec> coordinates_in(const std::vector<Vec>& basis, const Vec& target);

/// Canonical nullspace basis of A (from the reduced row echelon form, one
/// vector per free column, in column order).
std::vector<Vec> nullspace(const Mat& a);

/// dim aff(points): rank of the difference set. Empty input -> -1.
int affine_rank(const std::vector<Vec>& points);

bool is_integral(const Vec& v);
IVec to_ivec(const Vec& v);
Vec to_vec(const IVec& v);
IVec ivec_add(const IVec& a, const IVec& b);
IVec ivec_sub(const IVec& a, const IVec& b);
IVec ivec_neg(const IVec& v);

/// Scales a nonzero rational vector by the positive rational that makes it
/// integral with content 1. Direction is preserved.
IVec primitive(const Vec& ray);

/// Basis (column-style Hermite reduction) of the lattice generated by the
/// given integer vectors. Deterministic; result size = rank.
std::vector<IVec> lattice_basis(const std::vector<IVec>& generators, int dim);

}  // namespace parv
