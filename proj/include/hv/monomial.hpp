#pragma once

#include <numeric>
#include <vector>

#include "hv/errors.hpp"

namespace hv {

// Exponent vector; the variable count is fixed per ring and checked by the
// polynomial layer.
struct Monomial {
  std::vector<int> e;

  int deg() const { return std::accumulate(e.begin(), e.end(), 0); }
  int nvars() const { return static_cast<int>(e.size()); }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.e < b.e; }
};

inline Monomial mono_one(int nvars) { return {std::vector<int>(nvars, 0)}; }

inline Monomial mono_var(int var, int nvars) {
  Monomial m = mono_one(nvars);
  m.e[var] = 1;
  return m;
}

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial m = a;
  for (int i = 0; i < b.nvars(); ++i) m.e[i] += b.e[i];
  return m;
}

inline bool mono_divides(const Monomial& a, const Monomial& b) {  // a | b
  for (int i = 0; i < a.nvars(); ++i)
    if (a.e[i] > b.e[i]) return false;
  return true;
}

inline Monomial mono_div(const Monomial& b, const Monomial& a) {  // b / a
  Monomial m = b;
  for (int i = 0; i < a.nvars(); ++i) m.e[i] -= a.e[i];
  return m;
}

inline Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  Monomial m = a;
  for (int i = 0; i < b.nvars(); ++i) m.e[i] = std::max(m.e[i], b.e[i]);
  return m;
}

inline Monomial mono_gcd(const Monomial& a, const Monomial& b) {
  Monomial m = a;
  for (int i = 0; i < b.nvars(); ++i) m.e[i] = std::min(m.e[i], b.e[i]);
  return m;
}

inline bool mono_coprime(const Monomial& a, const Monomial& b) {
  for (int i = 0; i < a.nvars(); ++i)
    if (a.e[i] > 0 && b.e[i] > 0) return false;
  return true;
}

// Graded reverse lexicographic with variables ordered by index
// (var 0 < var 1 < ...): higher degree wins; on equal degree, scan from the
// smallest variable up — more of a smaller variable makes a monomial smaller.
inline bool grevlex_less(const Monomial& a, const Monomial& b) {
  int da = a.deg(), db = b.deg();
  if (da != db) return da < db;
  for (int i = 0; i < a.nvars(); ++i) {
    int diff = a.e[i] - b.e[i];
    if (diff != 0) return diff > 0;
  }
  return false;
}

// Monomial order selector. elim_var >= 0 eliminates that variable: any power
// of it dominates, ties fall back to grevlex on the full vector. Used only by
// the ideal-intersection engine; the public order is pure grevlex.
struct Order {
  int elim_var = -1;

  bool less(const Monomial& a, const Monomial& b) const {
    if (elim_var >= 0 && a.e[elim_var] != b.e[elim_var]) return a.e[elim_var] < b.e[elim_var];
    return grevlex_less(a, b);
  }
};

}  // namespace hv
