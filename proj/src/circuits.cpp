#include "hv/circuits.hpp"

#include <algorithm>

#include "hv/errors.hpp"
#include "hv/linalg.hpp"
#include "hv/lp.hpp"

namespace hv {

namespace {

// Column matrix of the normals indexed by `pick` (0-based).
RatMatrix columns_of(const Arrangement& arr, const std::vector<int>& pick) {
  RatMatrix m(arr.dimension, RatVector(pick.size()));
  for (size_t k = 0; k < pick.size(); ++k)
    for (int r = 0; r < arr.dimension; ++r)
      m[r][k] = Rational(arr.hyperplanes[pick[k]].normal[r]);
  return m;
}

Rational offset_sum_of(const Arrangement& arr, const std::vector<int>& support,
                       const IntVector& dependence) {
  Rational s = 0;
  for (size_t k = 0; k < support.size(); ++k)
    s += Rational(dependence[k]) * arr.hyperplanes[support[k] - 1].offset;
  return s;
}

}  // namespace

std::vector<Circuit> matroid_circuits(const Arrangement& arr) {
  const int n = arr.n();
  if (n > 24) throw resource_error("circuit enumeration capped at 24 hyperplanes");
  std::vector<IntVector> normals;
  for (const auto& h : arr.hyperplanes) normals.push_back(h.normal);
  const int total_rank = rank_int(normals);

  std::vector<Circuit> out;
  std::vector<std::vector<int>> found_supports;  // 0-based, for pruning

  const int max_size = std::min(n, total_rank + 1);
  std::vector<int> pick;
  for (int size = 2; size <= max_size; ++size) {
    pick.assign(size, 0);
    for (int i = 0; i < size; ++i) pick[i] = i;
    for (;;) {
      bool contains_known = false;
      for (const auto& s : found_supports) {
        if (std::includes(pick.begin(), pick.end(), s.begin(), s.end())) {
          contains_known = true;
          break;
        }
      }
      if (!contains_known) {
        auto kernel = kernel_basis(columns_of(arr, pick), size);
        if (kernel.size() == 1) {
          bool full = true;
          for (const auto& z : kernel[0])
            if (z == 0) full = false;
          if (full) {
            Circuit c;
            for (int i : pick) c.support.push_back(i + 1);
            c.dependence = kernel[0];  // coprime, first nonzero positive
            c.offset_sum = offset_sum_of(arr, c.support, c.dependence);
            out.push_back(std::move(c));
            found_supports.push_back(pick);
          }
        }
      }
      int k = size - 1;
      while (k >= 0 && pick[k] == n - size + k) --k;
      if (k < 0) break;
      ++pick[k];
      for (int i = k + 1; i < size; ++i) pick[i] = pick[i - 1] + 1;
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Circuit& a, const Circuit& b) { return a.support < b.support; });
  return out;
}

std::vector<Circuit> enumerate_circuits(const Arrangement& arr) {
  require_simple(arr);
  std::vector<Circuit> out = matroid_circuits(arr);
  for (auto& c : out) {
    if (c.offset_sum == 0)
      throw internal_error("simple arrangement produced a zero offset-sum circuit");
    if (c.offset_sum < 0) {
      for (auto& z : c.dependence) z = -z;
      c.offset_sum = -c.offset_sum;
    }
  }
  return out;
}

SplitCircuit split_circuit(const Arrangement& arr, const Circuit& c) {
  SplitCircuit sc;
  sc.circuit = c;
  if (sc.circuit.offset_sum < 0) {
    for (auto& z : sc.circuit.dependence) z = -z;
    sc.circuit.offset_sum = -sc.circuit.offset_sum;
  }
  if (sc.circuit.offset_sum == 0)
    throw validation_error("cannot split a circuit with zero offset-sum");
  for (size_t k = 0; k < sc.circuit.support.size(); ++k) {
    if (sc.circuit.dependence[k] < 0) sc.s1.push_back(sc.circuit.support[k]);
    else sc.s2.push_back(sc.circuit.support[k]);
  }
  return sc;
}

std::vector<SplitCircuit> enumerate_split_circuits(const Arrangement& arr) {
  std::vector<SplitCircuit> out;
  for (const auto& c : enumerate_circuits(arr)) out.push_back(split_circuit(arr, c));
  return out;
}

bool verify_split(const Arrangement& arr, const std::vector<int>& s1, const std::vector<int>& s2) {
  std::vector<LinConstraint> cons;
  auto normal_of = [&](int i) {
    if (i < 1 || i > arr.n()) throw input_error("verify_split: index out of range");
    RatVector a(arr.dimension);
    for (int l = 0; l < arr.dimension; ++l) a[l] = Rational(arr.hyperplanes[i - 1].normal[l]);
    return a;
  };
  for (int i : s1) cons.push_back(leq(normal_of(i), arr.hyperplanes[i - 1].offset));
  for (int j : s2) cons.push_back(geq(normal_of(j), arr.hyperplanes[j - 1].offset));
  return !lp_feasible(cons, arr.dimension).has_value();
}

}  // namespace hv
