#pragma once

#include <optional>
#include <vector>

#include "hv/rational.hpp"

namespace hv {

enum class Sense { GEQ, LEQ, EQ };

struct LinConstraint {
  RatVector normal;
  Rational bound;
  Sense sense;
};

inline LinConstraint geq(RatVector a, Rational b) { return {std::move(a), std::move(b), Sense::GEQ}; }
inline LinConstraint leq(RatVector a, Rational b) { return {std::move(a), std::move(b), Sense::LEQ}; }
inline LinConstraint eq(RatVector a, Rational b) { return {std::move(a), std::move(b), Sense::EQ}; }

enum class LpStatus { Infeasible, Optimal, Unbounded };

struct LpResult {
  LpStatus status;
  Rational value;   // objective value when Optimal
  RatVector point;  // witness when Optimal (or feasible point when Unbounded was detected late)
};

// Exact two-phase dense simplex, Bland's rule throughout; no floating point,
// no tolerances. Free variables are split into nonnegative pairs.

// Feasibility witness, or nullopt.
std::optional<RatVector> lp_feasible(const std::vector<LinConstraint>& cons, int dim);

// min/max of objective . x over the feasible set.
LpResult lp_optimize(const std::vector<LinConstraint>& cons, int dim, const RatVector& objective,
                     bool maximize);

// Recession-cone test: the feasible set of `cons` (which must be nonempty) is
// bounded iff max and min of every coordinate over {homogenized cons} meet in
// the unit box at 0.
bool lp_bounded(const std::vector<LinConstraint>& cons, int dim);

}  // namespace hv
