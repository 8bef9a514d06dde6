#pragma once

#include <optional>
#include <vector>

#include "hv/rational.hpp"

namespace hv {

using RatMatrix = std::vector<RatVector>;

// In-place reduced row echelon form; returns rank. Deterministic pivoting
// (first usable row per column, columns left to right).
int rref(RatMatrix& m);

int rank(RatMatrix m);
int rank_int(const std::vector<IntVector>& rows);

// Right kernel of the matrix whose rows are `rows` (each of length `cols`).
// Basis vectors are denominator-cleared coprime integers, first nonzero entry
// positive, ordered by ascending free column. Empty input yields the standard
// basis of the full space.
std::vector<IntVector> kernel_basis(const RatMatrix& rows, int cols);

// Unique solution of a full-rank square system; nullopt when the system is
// singular or inconsistent.
std::optional<RatVector> solve_square(const std::vector<IntVector>& rows, const RatVector& rhs);

// v / gcd(|entries|); zero vector is a contract violation. Division by the
// positive gcd preserves every entry's sign.
IntVector make_primitive(const IntVector& v);

// Fraction-free determinant (Bareiss).
Integer det_integer(std::vector<IntVector> m);

// |det| == 1 for a square integer matrix given by rows.
bool is_unimodular(const std::vector<IntVector>& rows);

// Scale a rational vector to coprime integers, first nonzero entry positive.
IntVector clear_denominators(const RatVector& v);

// rank(span) == rank(span + target)?
bool in_span(const std::vector<IntVector>& span, const IntVector& target);

}  // namespace hv
