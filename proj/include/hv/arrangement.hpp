#pragma once

#include <string>
#include <vector>

#include "hv/rational.hpp"

namespace hv {

// One cooriented rational affine hyperplane H = {x : <x,a> = r}, with closed
// half-spaces F = {<x,a> >= r} and G = {<x,a> <= r}. The normal is stored
// primitive; parsing rescales the offset alongside the normal.
struct Hyperplane {
  IntVector normal;
  Rational offset;
};

struct Arrangement {
  int dimension = 0;
  std::string name;  // optional, carried through round-trips
  std::vector<Hyperplane> hyperplanes;

  int n() const { return static_cast<int>(hyperplanes.size()); }
};

// JSON wire format:
//   {"dimension": d, "name": "...", "hyperplanes":
//     [{"normal": [ints], "offset": "int or p/q"}, ...]}
// Offsets are strings; hyperplane order is meaningful and preserved.
Arrangement parse_arrangement(const std::string& text);
Arrangement load_arrangement(const std::string& path);

// Canonical bytes: fixed key order, primitive normals, reduced offsets,
// 2-space indent, trailing newline. parse(serialize(A)) == A.
std::string serialize_arrangement(const Arrangement& arr);

struct ValidationWitness {
  std::vector<int> subset;  // 1-based hyperplane indices
  std::string reason;
};

// is_simple: every matroid circuit of the normals has nonzero offset-sum
// (equivalently, any m hyperplanes that meet do so in codimension m).
// is_smooth: is_simple and every full-rank d-subset of normals has |det| = 1.
struct ValidationReport {
  bool is_simple = false;
  bool is_smooth = false;
  std::vector<ValidationWitness> witnesses;
};

ValidationReport validate(const Arrangement& arr);

// Throws validation_error when not simple.
void require_simple(const Arrangement& arr);

// Reverses coorientation of hyperplane l (1-based): a -> -a, r -> -r.
Arrangement flip_coorientation(const Arrangement& arr, int l);

// Moves every offset by <c, a_i>; combinatorics are unchanged.
Arrangement translate(const Arrangement& arr, const RatVector& c);

// Rows of the d x n matrix whose columns are the normals; row l is the
// coefficient vector of the linear form  sum_i (a_i)_l u_i.
std::vector<IntVector> kernel_form_rows(const Arrangement& arr);

}  // namespace hv
