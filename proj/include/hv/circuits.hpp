#pragma once

#include <vector>

#include "hv/arrangement.hpp"

namespace hv {

// Minimal dependent subset of normals. `dependence` is aligned with
// `support` (1-based hyperplane indices, ascending), has coprime integer
// entries, all nonzero. Normalization: offset_sum > 0 when nonzero,
// otherwise first dependence entry > 0.
struct Circuit {
  std::vector<int> support;
  IntVector dependence;
  Rational offset_sum;
};

// Splitting S1 = {i : lambda_i < 0}, S2 = {i : lambda_i > 0} under the
// offset_sum > 0 normalization; the unique split for which the halved system
// {x in G_i for i in S1} + {x in F_j for j in S2} is empty.
struct SplitCircuit {
  Circuit circuit;
  std::vector<int> s1;
  std::vector<int> s2;
};

// Circuits of the linear matroid of the normals, sorted lexicographically by
// support. Dependences are sign-normalized by first entry only; offsets are
// not consulted (usable on non-simple input, e.g. by validation).
std::vector<Circuit> matroid_circuits(const Arrangement& arr);

// Circuits with offset-sum normalization applied; requires a simple
// arrangement (every offset_sum nonzero).
std::vector<Circuit> enumerate_circuits(const Arrangement& arr);

SplitCircuit split_circuit(const Arrangement& arr, const Circuit& c);

std::vector<SplitCircuit> enumerate_split_circuits(const Arrangement& arr);

// Exact-LP emptiness oracle for a candidate splitting:
// true iff {<x,a_i> <= r_i for i in s1} + {<x,a_j> >= r_j for j in s2} is empty.
bool verify_split(const Arrangement& arr, const std::vector<int>& s1, const std::vector<int>& s2);

}  // namespace hv
