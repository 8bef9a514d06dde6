#include "hv/lp.hpp"

#include <algorithm>

#include "hv/errors.hpp"

namespace hv {

namespace {

// Dense tableau in basic feasible form: rows[i] spans all structural columns
// plus rhs; basis[i] is the column owning row i. Rhs stays >= 0 throughout.
struct Tableau {
  std::vector<RatVector> rows;  // m x (ncols + 1), last entry = rhs
  std::vector<int> basis;       // m entries
  int ncols = 0;

  Rational& rhs(int i) { return rows[i][ncols]; }

  void pivot(int row, int col) {
    Rational inv = rows[row][col];
    for (auto& v : rows[row]) v /= inv;
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == row || rows[i][col] == 0) continue;
      Rational f = rows[i][col];
      for (int j = 0; j <= ncols; ++j) rows[i][j] -= f * rows[row][j];
    }
    basis[row] = col;
  }

  // Minimize cost . y by Bland's rule. `allowed[j]` masks columns eligible to
  // enter. Returns false when unbounded below.
  bool minimize(const RatVector& cost, const std::vector<bool>& allowed) {
    const int m = static_cast<int>(rows.size());
    for (;;) {
      // Reduced costs: r_j = c_j - c_B . column_j.
      int enter = -1;
      for (int j = 0; j < ncols; ++j) {
        if (!allowed[j]) continue;
        Rational r = cost[j];
        for (int i = 0; i < m; ++i) {
          const Rational& cb = cost[basis[i]];
          if (cb != 0 && rows[i][j] != 0) r -= cb * rows[i][j];
        }
        if (r < 0) {
          enter = j;
          break;  // Bland: lowest index
        }
      }
      if (enter < 0) return true;
      int leave = -1;
      Rational best;
      for (int i = 0; i < m; ++i) {
        if (rows[i][enter] <= 0) continue;
        Rational ratio = rhs(i) / rows[i][enter];
        if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) return false;  // unbounded
      pivot(leave, enter);
    }
  }

  Rational objective_value(const RatVector& cost) const {
    Rational v = 0;
    for (size_t i = 0; i < rows.size(); ++i)
      if (cost[basis[i]] != 0) v += cost[basis[i]] * rows[i][ncols];
    return v;
  }
};

// Standard-form encoding of a system over free variables:
// columns [0, dim)        x+ part
// columns [dim, 2*dim)    x- part
// columns [2*dim, ...)    one slack per inequality
// then one artificial per row (phase 1 only).
struct Program {
  int dim;
  int nslack = 0;
  int nstruct = 0;  // structural columns: 2*dim + nslack
  Tableau t;

  explicit Program(const std::vector<LinConstraint>& cons, int dim_) : dim(dim_) {
    for (const auto& c : cons)
      if (c.sense != Sense::EQ) ++nslack;
    nstruct = 2 * dim + nslack;
    const int m = static_cast<int>(cons.size());
    const int total = nstruct + m;  // artificials appended
    t.ncols = total;
    t.rows.assign(m, RatVector(total + 1, Rational(0)));
    int slack = 0;
    for (int i = 0; i < m; ++i) {
      const auto& c = cons[i];
      if (static_cast<int>(c.normal.size()) != dim)
        throw internal_error("lp: constraint dimension mismatch");
      auto& row = t.rows[i];
      for (int j = 0; j < dim; ++j) {
        row[j] = c.normal[j];
        row[dim + j] = -c.normal[j];
      }
      if (c.sense == Sense::LEQ) row[2 * dim + slack++] = 1;
      else if (c.sense == Sense::GEQ) row[2 * dim + slack++] = -1;
      row[total] = c.bound;
      if (row[total] < 0)
        for (auto& v : row) v = -v;
      row[nstruct + i] = 1;  // artificial
    }
    t.basis.resize(m);
    for (int i = 0; i < m; ++i) t.basis[i] = nstruct + i;
  }

  // Phase 1; true iff feasible. Afterwards artificials are driven out and
  // their columns disabled.
  bool phase1() {
    const int m = static_cast<int>(t.rows.size());
    RatVector cost(t.ncols, Rational(0));
    for (int i = 0; i < m; ++i) cost[nstruct + i] = 1;
    std::vector<bool> allowed(t.ncols, true);
    if (!t.minimize(cost, allowed)) throw internal_error("lp: phase 1 unbounded");
    if (t.objective_value(cost) != 0) return false;
    // Pivot artificials out of the basis where possible; rows that cannot be
    // pivoted are redundant zero rows and are dropped.
    for (int i = static_cast<int>(t.rows.size()) - 1; i >= 0; --i) {
      if (t.basis[i] < nstruct) continue;
      int col = -1;
      for (int j = 0; j < nstruct; ++j)
        if (t.rows[i][j] != 0) {
          col = j;
          break;
        }
      if (col >= 0) {
        t.pivot(i, col);
      } else {
        t.rows.erase(t.rows.begin() + i);
        t.basis.erase(t.basis.begin() + i);
      }
    }
    return true;
  }

  // Phase 2 over structural columns only.
  LpStatus phase2(const RatVector& cost) {
    std::vector<bool> allowed(t.ncols, false);
    for (int j = 0; j < nstruct; ++j) allowed[j] = true;
    return t.minimize(cost, allowed) ? LpStatus::Optimal : LpStatus::Unbounded;
  }

  RatVector extract_point() const {
    RatVector x(dim, Rational(0));
    for (size_t i = 0; i < t.rows.size(); ++i) {
      int b = t.basis[i];
      if (b < dim) x[b] += t.rows[i][t.ncols];
      else if (b < 2 * dim) x[b - dim] -= t.rows[i][t.ncols];
    }
    return x;
  }
};

}  // namespace

std::optional<RatVector> lp_feasible(const std::vector<LinConstraint>& cons, int dim) {
  if (cons.empty()) return RatVector(dim, Rational(0));
  Program p(cons, dim);
  if (!p.phase1()) return std::nullopt;
  return p.extract_point();
}

LpResult lp_optimize(const std::vector<LinConstraint>& cons, int dim, const RatVector& objective,
                     bool maximize) {
  if (static_cast<int>(objective.size()) != dim) throw internal_error("lp: objective dimension");
  if (cons.empty()) {
    bool zero = true;
    for (const auto& c : objective)
      if (c != 0) zero = false;
    if (zero) return {LpStatus::Optimal, Rational(0), RatVector(dim, Rational(0))};
    return {LpStatus::Unbounded, Rational(0), RatVector(dim, Rational(0))};
  }
  Program p(cons, dim);
  if (!p.phase1()) return {LpStatus::Infeasible, Rational(0), {}};
  RatVector cost(p.t.ncols, Rational(0));
  for (int j = 0; j < p.dim; ++j) {
    cost[j] = maximize ? -objective[j] : objective[j];
    cost[p.dim + j] = -cost[j];
  }
  LpStatus st = p.phase2(cost);
  if (st == LpStatus::Unbounded) return {LpStatus::Unbounded, Rational(0), p.extract_point()};
  RatVector x = p.extract_point();
  Rational v = 0;
  for (int j = 0; j < dim; ++j) v += objective[j] * x[j];
  return {LpStatus::Optimal, v, x};
}

bool lp_bounded(const std::vector<LinConstraint>& cons, int dim) {
  if (!lp_feasible(cons, dim)) throw internal_error("lp_bounded: infeasible system");
  // Recession cone, intersected with the unit box so each LP is bounded.
  std::vector<LinConstraint> cone;
  cone.reserve(cons.size() + 2 * dim);
  for (const auto& c : cons) cone.push_back({c.normal, Rational(0), c.sense});
  for (int l = 0; l < dim; ++l) {
    RatVector e(dim, Rational(0));
    e[l] = 1;
    cone.push_back(leq(e, Rational(1)));
    cone.push_back(geq(e, Rational(-1)));
  }
  for (int l = 0; l < dim; ++l) {
    RatVector obj(dim, Rational(0));
    obj[l] = 1;
    LpResult up = lp_optimize(cone, dim, obj, true);
    if (up.status != LpStatus::Optimal) throw internal_error("lp_bounded: cone LP not optimal");
    if (up.value != 0) return false;
    LpResult down = lp_optimize(cone, dim, obj, false);
    if (down.status != LpStatus::Optimal) throw internal_error("lp_bounded: cone LP not optimal");
    if (down.value != 0) return false;
  }
  return true;
}

}  // namespace hv
