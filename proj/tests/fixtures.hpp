// Programmatic copies of the shipped fixture arrangements plus small
// polynomial-building helpers used across the test suites.
#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "hv/arrangement.hpp"
#include "hv/poly.hpp"

namespace hvtest {

inline hv::Arrangement make_arr(int d, const std::vector<std::vector<long>>& normals,
                                const std::vector<std::string>& offsets,
                                const std::string& name = "") {
  hv::Arrangement arr;
  arr.dimension = d;
  arr.name = name;
  for (size_t i = 0; i < normals.size(); ++i) {
    hv::Hyperplane h;
    for (long z : normals[i]) h.normal.push_back(hv::Integer(z));
    h.offset = hv::parse_rational(offsets[i]);
    arr.hyperplanes.push_back(std::move(h));
  }
  return arr;
}

inline hv::Arrangement fig2a() {
  return make_arr(2, {{1, 1}, {1, 0}, {-1, 0}, {0, -1}}, {"1", "0", "-2", "-2"}, "FIG2A");
}

inline hv::Arrangement fig2b() {
  return make_arr(2, {{1, 1}, {-1, 0}, {-1, 0}, {0, -1}}, {"1", "0", "-2", "-2"}, "FIG2B");
}

inline hv::Arrangement fig2c() {
  return make_arr(2, {{1, 1}, {1, 0}, {-1, 0}, {0, -1}}, {"3", "0", "-2", "-2"}, "FIG2C");
}

inline hv::Arrangement fig2a5() {
  return make_arr(2, {{1, 1}, {1, 0}, {-1, 0}, {0, -1}, {1, 1}}, {"1", "0", "-2", "-2", "0"},
                  "FIG2A5");
}

inline hv::Arrangement fig2c5() {
  return make_arr(2, {{1, 1}, {1, 0}, {-1, 0}, {0, -1}, {1, 1}}, {"3", "0", "-2", "-2", "0"},
                  "FIG2C5");
}

// Product of variables (1-based indices) in an nv-variable ring.
template <class K>
hv::Poly<K> vars_product(int nv, const std::vector<int>& idx) {
  hv::Poly<K> p = hv::poly_one<K>(nv);
  for (int i : idx) p = p * hv::poly_var<K>(i - 1, nv);
  return p;
}

// Product over s1 of u_i times product over s2 of (x - u_j); x is var nv-1.
template <class K>
hv::Poly<K> split_poly(int nv, const std::vector<int>& s1, const std::vector<int>& s2) {
  hv::Poly<K> p = hv::poly_one<K>(nv);
  for (int i : s1) p = p * hv::poly_var<K>(i - 1, nv);
  for (int j : s2) p = p * (hv::poly_var<K>(nv - 1, nv) - hv::poly_var<K>(j - 1, nv));
  return p;
}

template <class K>
std::vector<hv::Poly<K>> sorted_polys(std::vector<hv::Poly<K>> v) {
  std::sort(v.begin(), v.end(), hv::poly_less<K>);
  return v;
}

}  // namespace hvtest
