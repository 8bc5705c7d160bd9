#include "parv/quadratic_form.hpp"

#include "parv/errors.hpp"

namespace parv {

QuadraticForm::QuadraticForm(Mat gram) : gram_(std::move(gram)) {
  dim_ = static_cast<int>(gram_.size());
  if (dim_ == 0) throw input_error("empty Gram matrix");
  for (auto& row : gram_) {
    if (static_cast<int>(row.size()) != dim_)
      throw input_error("Gram matrix is not square");
    // mpq comparisons assume canonical form; entries built as mpq_class(p, q)
    // with gcd(p, q) != 1 would otherwise poison every equality test.
    for (auto& x : row) x.canonicalize();
  }
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j)
      if (gram_[i][j] != gram_[j][i])
        throw input_error("Gram matrix is not symmetric");

  ldl_lower_ = mat_identity(dim_);
  ldl_diag_ = zero_vec(dim_);
  for (int j = 0; j < dim_; ++j) {
    Scalar d = gram_[j][j];
    for (int k = 0; k < j; ++k)
      d -= ldl_lower_[j][k] * ldl_lower_[j][k] * ldl_diag_[k];
    if (d <= 0) throw input_error("Gram matrix is not positive definite");
    ldl_diag_[j] = d;
    for (int i = j + 1; i < dim_; ++i) {
      Scalar v = gram_[i][j];
      for (int k = 0; k < j; ++k)
        v -= ldl_lower_[i][k] * ldl_lower_[j][k] * ldl_diag_[k];
      ldl_lower_[i][j] = v / d;
    }
  }
}

Scalar QuadraticForm::pairing(const Vec& u, const Vec& v) const {
  if (static_cast<int>(u.size()) != dim_ || static_cast<int>(v.size()) != dim_)
    throw input_error("pairing: dimension mismatch");
  Scalar s = 0;
  for (int i = 0; i < dim_; ++i) {
    if (u[i] == 0) continue;
    for (int j = 0; j < dim_; ++j) s += u[i] * gram_[i][j] * v[j];
  }
  return s;
}

Scalar QuadraticForm::norm2(const Vec& v) const { return pairing(v, v); }

}  // namespace parv
