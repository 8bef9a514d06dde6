#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "hv/gf2.hpp"
#include "hv/monomial.hpp"

namespace hv {

// Sparse polynomial over K. Terms are kept in canonical form: strictly
// descending grevlex, no zero coefficients. Leading terms under other orders
// are found by scanning, which keeps storage order-independent.
template <class K>
struct Poly {
  int nv = 0;
  std::vector<std::pair<Monomial, K>> terms;

  Poly() = default;
  explicit Poly(int nvars) : nv(nvars) {}

  bool is_zero() const { return terms.empty(); }

  int degree() const {  // max term degree; -1 for zero
    int d = -1;
    for (const auto& t : terms) d = std::max(d, t.first.deg());
    return d;
  }

  bool is_homogeneous() const {
    if (terms.empty()) return true;
    int d = terms.front().first.deg();
    for (const auto& t : terms)
      if (t.first.deg() != d) return false;
    return true;
  }

  void canonicalize() {
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return grevlex_less(b.first, a.first); });
    std::vector<std::pair<Monomial, K>> merged;
    for (auto& t : terms) {
      if (!merged.empty() && merged.back().first == t.first) merged.back().second = merged.back().second + t.second;
      else merged.push_back(std::move(t));
    }
    terms.clear();
    for (auto& t : merged)
      if (t.second != field_traits<K>::zero()) terms.push_back(std::move(t));
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.nv == b.nv && a.terms == b.terms; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
};

template <class K>
Poly<K> poly_zero(int nv) {
  return Poly<K>(nv);
}

template <class K>
Poly<K> poly_const(int nv, const K& c) {
  Poly<K> p(nv);
  if (c != field_traits<K>::zero()) p.terms.push_back({mono_one(nv), c});
  return p;
}

template <class K>
Poly<K> poly_one(int nv) {
  return poly_const<K>(nv, field_traits<K>::one());
}

template <class K>
Poly<K> poly_var(int var, int nv) {
  Poly<K> p(nv);
  p.terms.push_back({mono_var(var, nv), field_traits<K>::one()});
  return p;
}

template <class K>
Poly<K> poly_term(int nv, const Monomial& m, const K& c) {
  Poly<K> p(nv);
  if (c != field_traits<K>::zero()) p.terms.push_back({m, c});
  return p;
}

template <class K>
Poly<K> operator+(const Poly<K>& a, const Poly<K>& b) {
  if (a.nv != b.nv) throw internal_error("poly: variable mismatch");
  Poly<K> out = a;
  out.terms.insert(out.terms.end(), b.terms.begin(), b.terms.end());
  out.canonicalize();
  return out;
}

template <class K>
Poly<K> operator-(const Poly<K>& a) {
  Poly<K> out = a;
  for (auto& t : out.terms) t.second = -t.second;
  return out;
}

template <class K>
Poly<K> operator-(const Poly<K>& a, const Poly<K>& b) {
  return a + (-b);
}

template <class K>
Poly<K> operator*(const Poly<K>& a, const Poly<K>& b) {
  if (a.nv != b.nv) throw internal_error("poly: variable mismatch");
  Poly<K> out(a.nv);
  out.terms.reserve(a.terms.size() * b.terms.size());
  for (const auto& ta : a.terms)
    for (const auto& tb : b.terms)
      out.terms.push_back({mono_mul(ta.first, tb.first), ta.second * tb.second});
  out.canonicalize();
  return out;
}

template <class K>
Poly<K> operator*(const K& c, const Poly<K>& a) {
  Poly<K> out = a;
  for (auto& t : out.terms) t.second = c * t.second;
  out.canonicalize();
  return out;
}

// p * c*m without re-sorting neighbours (multiplying by a monomial preserves
// the grevlex order of terms).
template <class K>
Poly<K> mono_scale(const Poly<K>& p, const Monomial& m, const K& c) {
  Poly<K> out(p.nv);
  if (c == field_traits<K>::zero()) return out;
  out.terms.reserve(p.terms.size());
  for (const auto& t : p.terms) out.terms.push_back({mono_mul(t.first, m), c * t.second});
  return out;
}

// Leading term under `ord` by scanning.
template <class K>
const std::pair<Monomial, K>& leading_term(const Poly<K>& p, const Order& ord) {
  if (p.is_zero()) throw internal_error("leading_term of zero");
  size_t best = 0;
  for (size_t i = 1; i < p.terms.size(); ++i)
    if (ord.less(p.terms[best].first, p.terms[i].first)) best = i;
  return p.terms[best];
}

// Homogeneous slices, ascending degree; skips empty ones.
template <class K>
std::vector<Poly<K>> homogeneous_components(const Poly<K>& p) {
  std::vector<Poly<K>> out;
  if (p.is_zero()) return out;
  int dmax = p.degree();
  for (int d = 0; d <= dmax; ++d) {
    Poly<K> comp(p.nv);
    for (const auto& t : p.terms)
      if (t.first.deg() == d) comp.terms.push_back(t);
    if (!comp.is_zero()) out.push_back(std::move(comp));
  }
  return out;
}

// Deterministic total order on polynomials: (degree, term sequence).
template <class K>
bool poly_less(const Poly<K>& a, const Poly<K>& b);

inline bool coeff_less(const Rational& a, const Rational& b) { return a < b; }
inline bool coeff_less(GF2 a, GF2 b) { return a.v < b.v; }

template <class K>
bool poly_less(const Poly<K>& a, const Poly<K>& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const size_t n = std::min(a.terms.size(), b.terms.size());
  for (size_t i = 0; i < n; ++i) {
    if (a.terms[i].first != b.terms[i].first)
      return grevlex_less(a.terms[i].first, b.terms[i].first);
    if (a.terms[i].second != b.terms[i].second) return coeff_less(a.terms[i].second, b.terms[i].second);
  }
  return a.terms.size() < b.terms.size();
}

// Rendering. Monomials print as products var[^k]; coefficients as leading
// integers/rationals; F2 coefficients are implicit.
std::string render_monomial(const Monomial& m, const std::vector<std::string>& vars);

template <class K>
std::string render_poly(const Poly<K>& p, const std::vector<std::string>& vars) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms) {
    bool unit_mono = m.deg() == 0;
    std::string coeff;
    bool negative = false;
    if constexpr (std::is_same_v<K, Rational>) {
      Rational a = c;
      if (a < 0) {
        negative = true;
        a = -a;
      }
      if (a != 1 || unit_mono) coeff = to_string(a);
    } else {
      if (unit_mono) coeff = "1";
    }
    if (first) {
      if (negative) out += "-";
      first = false;
    } else {
      out += negative ? "-" : "+";
    }
    std::string mono = unit_mono ? "" : render_monomial(m, vars);
    if (!coeff.empty() && !mono.empty()) out += coeff + "*" + mono;
    else out += coeff + mono;
  }
  return out;
}

inline std::string render_monomial(const Monomial& m, const std::vector<std::string>& vars) {
  std::string out;
  for (int i = 0; i < m.nvars(); ++i) {
    if (m.e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += vars[i];
    if (m.e[i] > 1) out += "^" + std::to_string(m.e[i]);
  }
  return out;
}

}  // namespace hv
