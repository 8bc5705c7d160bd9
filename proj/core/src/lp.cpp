#include "parv/lp.hpp"

#include "parv/errors.hpp"

namespace parv {

namespace {

// Dictionary tableau for max c^T z, A z = b, z >= 0 with b >= 0.
// Rows are kept as B^{-1}A; reduced costs are recomputed on demand, which
// is cheap at the sizes this library sees (a few dozen rows/columns).
struct Tableau {
  int m = 0, n = 0;
  std::vector<Vec> rows;
  Vec rhs;
  std::vector<int> basis;

  Scalar reduced_cost(const Vec& cost, int j) const {
    Scalar rc = cost[j];
    for (int r = 0; r < m; ++r)
      if (rows[r][j] != 0 && cost[basis[r]] != 0) rc -= cost[basis[r]] * rows[r][j];
    return rc;
  }

  void pivot(int r, int j) {
    const Scalar p = rows[r][j];
    for (int c = 0; c < n; ++c) rows[r][c] /= p;
    rhs[r] /= p;
    for (int i = 0; i < m; ++i) {
      if (i == r || rows[i][j] == 0) continue;
      const Scalar f = rows[i][j];
      for (int c = 0; c < n; ++c) rows[i][c] -= f * rows[r][c];
      rhs[i] -= f * rhs[r];
    }
    basis[r] = j;
  }

  // Bland's rule. Returns optimal / unbounded(j) outcomes via out-params.
  enum class Step { optimal, unbounded, pivoted };
  Step step(const Vec& cost, int limit_cols, int* unbounded_col) {
    int enter = -1;
    for (int j = 0; j < limit_cols; ++j) {
      bool basic = false;
      for (int r = 0; r < m; ++r) basic = basic || basis[r] == j;
      if (basic) continue;
      if (reduced_cost(cost, j) > 0) { enter = j; break; }
    }
    if (enter < 0) return Step::optimal;
    int leave = -1;
    Scalar best_ratio = 0;
    for (int r = 0; r < m; ++r) {
      if (rows[r][enter] <= 0) continue;
      const Scalar ratio = rhs[r] / rows[r][enter];
      if (leave < 0 || ratio < best_ratio ||
          (ratio == best_ratio && basis[r] < basis[leave])) {
        leave = r;
        best_ratio = ratio;
      }
    }
    if (leave < 0) {
      *unbounded_col = enter;
      return Step::unbounded;
    }
    pivot(leave, enter);
    return Step::pivoted;
  }
};

}  // namespace

LpResult solve_lp(const HPolyhedron& constraints, const Vec& objective) {
  const int d = constraints.dim;
  if (static_cast<int>(objective.size()) != d)
    throw input_error("solve_lp: objective dimension mismatch");
  for (const auto& h : constraints.halfspaces) {
    if (static_cast<int>(h.normal.size()) != d)
      throw input_error("solve_lp: constraint dimension mismatch");
    if (is_zero_vec(h.normal) && h.offset < 0)
      return {LpResult::Status::infeasible, std::nullopt, {}};
  }
  // Keep only constraints with a nonzero normal; trivially-true rows carry
  // dual multiplier 0.
  std::vector<int> live;
  for (std::size_t i = 0; i < constraints.halfspaces.size(); ++i)
    if (!is_zero_vec(constraints.halfspaces[i].normal)) live.push_back(static_cast<int>(i));

  const int m = static_cast<int>(live.size());
  // Columns: u_0..u_{d-1}, v_0..v_{d-1} (x = u - v), slacks, then phase-1
  // artificials for rows whose right-hand side had to be flipped.
  const int n_struct = 2 * d + m;
  std::vector<int> flipped(m, 0);
  std::vector<int> art_col(m, -1);
  int n_art = 0;
  for (int r = 0; r < m; ++r) {
    if (constraints.halfspaces[live[r]].offset < 0) {
      flipped[r] = 1;
      art_col[r] = n_struct + n_art++;
    }
  }

  Tableau tab;
  tab.m = m;
  tab.n = n_struct + n_art;
  tab.rows.assign(m, zero_vec(tab.n));
  tab.rhs = zero_vec(m);
  tab.basis.assign(m, -1);
  for (int r = 0; r < m; ++r) {
    const auto& h = constraints.halfspaces[live[r]];
    const Scalar sign = flipped[r] ? -1 : 1;
    for (int j = 0; j < d; ++j) {
      tab.rows[r][j] = sign * h.normal[j];
      tab.rows[r][d + j] = -sign * h.normal[j];
    }
    tab.rows[r][2 * d + r] = sign;  // slack
    tab.rhs[r] = sign * h.offset;
    if (flipped[r]) {
      tab.rows[r][art_col[r]] = 1;
      tab.basis[r] = art_col[r];
    } else {
      tab.basis[r] = 2 * d + r;
    }
  }

  int ub_col = -1;
  if (n_art > 0) {
    Vec phase1 = zero_vec(tab.n);
    for (int r = 0; r < m; ++r)
      if (art_col[r] >= 0) phase1[art_col[r]] = -1;
    for (;;) {
      const auto s = tab.step(phase1, tab.n, &ub_col);
      if (s == Tableau::Step::optimal) break;
      if (s == Tableau::Step::unbounded)
        throw internal_error("solve_lp: phase-1 objective unbounded");
    }
    Scalar art_sum = 0;
    for (int r = 0; r < m; ++r)
      if (tab.basis[r] >= n_struct) art_sum += tab.rhs[r];
    if (art_sum != 0) return {LpResult::Status::infeasible, std::nullopt, {}};
    // Drive leftover zero-valued artificials out of the basis.
    for (int r = 0; r < m; ++r) {
      if (tab.basis[r] < n_struct) continue;
      int target = -1;
      for (int j = 0; j < n_struct && target < 0; ++j)
        if (tab.rows[r][j] != 0) target = j;
      if (target >= 0) tab.pivot(r, target);
    }
    // Any row still basic in an artificial is identically zero on the
    // structural columns (a redundant constraint); freeze it by keeping the
    // artificial at value zero and never letting it re-enter: phase 2 only
    // scans structural columns.
  }

  Vec cost = zero_vec(tab.n);
  for (int j = 0; j < d; ++j) {
    cost[j] = objective[j];
    cost[d + j] = -objective[j];
  }
  for (;;) {
    const auto s = tab.step(cost, n_struct, &ub_col);
    if (s == Tableau::Step::optimal) break;
    if (s == Tableau::Step::unbounded) {
      Vec dir = zero_vec(d);
      // z-space direction: entering column 1, basic columns -T[r][enter].
      for (int j = 0; j < d; ++j) {
        if (ub_col == j) dir[j] += 1;
        if (ub_col == d + j) dir[j] -= 1;
      }
      for (int r = 0; r < tab.m; ++r) {
        const int b = tab.basis[r];
        if (b < d)
          dir[b] -= tab.rows[r][ub_col];
        else if (b < 2 * d)
          dir[b - d] += tab.rows[r][ub_col];
      }
      return {LpResult::Status::unbounded, std::nullopt, dir};
    }
  }

  LpOptimum opt;
  opt.point = zero_vec(d);
  for (int r = 0; r < m; ++r) {
    const int b = tab.basis[r];
    if (b < d)
      opt.point[b] += tab.rhs[r];
    else if (b < 2 * d)
      opt.point[b - d] -= tab.rhs[r];
  }
  opt.value = dot(objective, opt.point);
  opt.dual = zero_vec(static_cast<int>(constraints.halfspaces.size()));
  for (int r = 0; r < m; ++r) {
    // y_i = -reduced cost of the slack of row i.
    const Scalar rc = tab.reduced_cost(cost, 2 * d + r);
    opt.dual[live[r]] = -rc;
  }
  return {LpResult::Status::optimal, std::move(opt), {}};
}

std::optional<Vec> feasible_point(const HPolyhedron& constraints) {
  const auto r = solve_lp(constraints, zero_vec(constraints.dim));
  if (r.status != LpResult::Status::optimal) return std::nullopt;
  return r.optimum->point;
}

bool satisfies(const HPolyhedron& h, const Vec& point) {
  for (const auto& hs : h.halfspaces)
    if (dot(hs.normal, point) > hs.offset) return false;
  return true;
}

}  // namespace parv
