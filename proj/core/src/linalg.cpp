#include "parv/linalg.hpp"

#include <algorithm>

#include "parv/errors.hpp"

namespace parv {

namespace {

void check_same_size(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw input_error("vector dimension mismatch");
}

// Reduced row echelon form in place; returns pivot column per row.
std::vector<int> rref(Mat& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != 0) { p = i; break; }
    if (p < 0) continue;
    std::swap(m[r], m[p]);
    const Scalar inv = m[r][c];
    for (int j = c; j < cols; ++j) m[r][j] /= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Scalar f = m[i][c];
      for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Vec vec_add(const Vec& a, const Vec& b) {
  check_same_size(a, b);
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  check_same_size(a, b);
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vec vec_scale(const Scalar& s, const Vec& v) {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
  return out;
}

Vec vec_neg(const Vec& v) {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
  return out;
}

Scalar dot(const Vec& a, const Vec& b) {
  check_same_size(a, b);
  Scalar s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero_vec(const Vec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

Vec zero_vec(int n) { return Vec(static_cast<std::size_t>(n), Scalar(0)); }

Mat mat_identity(int n) {
  Mat m(n, zero_vec(n));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Mat mat_transpose(const Mat& m) {
  if (m.empty()) return {};
  Mat t(m[0].size(), Vec(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[0].size(); ++j) t[j][i] = m[i][j];
  return t;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  if (a.empty() || b.empty()) return {};
  Mat out(a.size(), zero_vec(static_cast<int>(b[0].size())));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < b[0].size(); ++j)
        out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

Vec mat_apply(const Mat& m, const Vec& v) {
  Vec out(m.size(), Scalar(0));
  for (std::size_t i = 0; i < m.size(); ++i) out[i] = dot(m[i], v);
  return out;
}

int rank(Mat m) { return static_cast<int>(rref(m).size()); }

Scalar det(Mat m) {
  const int n = static_cast<int>(m.size());
  Scalar d = 1;
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i)
      if (m[i][c] != 0) { p = i; break; }
    if (p < 0) return Scalar(0);
    if (p != c) { std::swap(m[p], m[c]); d = -d; }
    d *= m[c][c];
    for (int i = c + 1; i < n; ++i) {
      if (m[i][c] == 0) continue;
      const Scalar f = m[i][c] / m[c][c];
      for (int j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return d;
}

std::optional<Mat> inverse(const Mat& m) {
  const int n = static_cast<int>(m.size());
  Mat aug = m;
  for (int i = 0; i < n; ++i) {
    const Mat id = mat_identity(n);
    aug[i].insert(aug[i].end(), id[i].begin(), id[i].end());
  }
  const auto pivots = rref(aug);
  if (static_cast<int>(pivots.size()) != n || pivots.back() != n - 1) return std::nullopt;
  Mat inv(n, Vec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

std::optional<Vec> solve(const Mat& a, const Vec& b) {
  if (a.size() != b.size()) throw input_error("solve: shape mismatch");
  if (a.empty()) return Vec{};
  const int cols = static_cast<int>(a[0].size());
  Mat aug = a;
  for (std::size_t i = 0; i < a.size(); ++i) aug[i].push_back(b[i]);
  const auto pivots = rref(aug);
  // Inconsistent iff some pivot lands in the augmented column.
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  Vec x = zero_vec(cols);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug[r][cols];
  return x;
}

std::optional<Vec> coordinates_in(const std::vector<Vec>& basis, const Vec& target) {
  if (basis.empty()) return is_zero_vec(target) ? std::optional<Vec>(Vec{}) : std::nullopt;
  Mat a(target.size(), Vec(basis.size()));
  for (std::size_t i = 0; i < target.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) a[i][j] = basis[j][i];
  return solve(a, target);
}

std::vector<Vec> nullspace(const Mat& a) {
  if (a.empty()) return {};
  const int cols = static_cast<int>(a[0].size());
  Mat m = a;
  const auto pivots = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (int c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    Vec v = zero_vec(cols);
    v[c] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][c];
    basis.push_back(std::move(v));
  }
  return basis;
}

int affine_rank(const std::vector<Vec>& points) {
  if (points.empty()) return -1;
  Mat diffs;
  for (std::size_t i = 1; i < points.size(); ++i)
    diffs.push_back(vec_sub(points[i], points[0]));
  if (diffs.empty()) return 0;
  return rank(diffs);
}

bool is_integral(const Vec& v) {
  for (const auto& x : v)
    if (x.get_den() != 1) return false;
  return true;
}

IVec to_ivec(const Vec& v) {
  IVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].get_den() != 1) throw internal_error("to_ivec: non-integral entry");
    out[i] = v[i].get_num();
  }
  return out;
}

Vec to_vec(const IVec& v) {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Scalar(v[i]);
  return out;
}

IVec ivec_add(const IVec& a, const IVec& b) {
  IVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

IVec ivec_sub(const IVec& a, const IVec& b) {
  IVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

IVec ivec_neg(const IVec& v) {
  IVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
  return out;
}

IVec primitive(const Vec& ray) {
  if (is_zero_vec(ray)) throw internal_error("primitive: zero vector");
  Int lcm = 1;
  for (const auto& x : ray) {
    Int d = x.get_den();
    Int g;
    mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), d.get_mpz_t());
    lcm = lcm / g * d;
  }
  IVec out(ray.size());
  Int content = 0;
  for (std::size_t i = 0; i < ray.size(); ++i) {
    Scalar scaled = ray[i] * Scalar(lcm);
    out[i] = scaled.get_num();
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), out[i].get_mpz_t());
  }
  for (auto& x : out) x /= content;
  return out;
}

std::vector<IVec> lattice_basis(const std::vector<IVec>& generators, int dim) {
  // Column-style Hermite reduction: gcd out the top nonzero coordinate
  // across columns, recurse on the remainder rows.
  std::vector<IVec> cols;
  for (const auto& g : generators) {
    bool nz = false;
    for (const auto& x : g) nz = nz || x != 0;
    if (nz) cols.push_back(g);
  }
  std::vector<IVec> basis;
  int row = 0;
  while (row < dim && !cols.empty()) {
    // Find a column with nonzero entry at `row`; reduce all others against it.
    bool any = false;
    for (const auto& c : cols) any = any || c[row] != 0;
    if (!any) { ++row; continue; }
    for (;;) {
      int best = -1;
      for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j][row] == 0) continue;
        if (best < 0 || cmp(abs(cols[j][row]), abs(cols[best][row])) < 0) best = static_cast<int>(j);
      }
      int others = 0;
      for (std::size_t j = 0; j < cols.size(); ++j)
        if (static_cast<int>(j) != best && cols[j][row] != 0) ++others;
      if (others == 0) {
        if (cols[best][row] < 0)
          for (auto& x : cols[best]) x = -x;
        basis.push_back(cols[best]);
        cols.erase(cols.begin() + best);
        break;
      }
      for (std::size_t j = 0; j < cols.size(); ++j) {
        if (static_cast<int>(j) == best || cols[j][row] == 0) continue;
        Int q = cols[j][row] / cols[best][row];  // truncated division is fine here
        if (q != 0)
          for (int i = 0; i < dim; ++i) cols[j][i] -= q * cols[best][i];
      }
    }
    ++row;
  }
  return basis;
}

}  // namespace parv
