#pragma once

#include <map>
#include <set>

#include "hv/poly.hpp"

namespace hv {

template <class K>
using PolyList = std::vector<Poly<K>>;

struct GrobnerOptions {
  Order ord;
  long max_reductions = 200000;  // S-polynomial reductions before giving up
};

// Fully reduced remainder of p modulo G (deterministic: divisors scanned in
// list order, leading term under `ord` reduced first). For a Groebner basis
// the remainder is the unique normal form.
template <class K>
Poly<K> normal_form(Poly<K> p, const PolyList<K>& g, const Order& ord = {}) {
  Poly<K> rem(p.nv);
  while (!p.is_zero()) {
    const auto& lt = leading_term(p, ord);
    bool reduced = false;
    for (const auto& q : g) {
      if (q.is_zero()) continue;
      const auto& ltq = leading_term(q, ord);
      if (!mono_divides(ltq.first, lt.first)) continue;
      p = p - mono_scale(q, mono_div(lt.first, ltq.first), K(lt.second / ltq.second));
      reduced = true;
      break;
    }
    if (!reduced) {
      rem.terms.push_back(lt);
      p = p - poly_term<K>(p.nv, lt.first, lt.second);
    }
  }
  rem.canonicalize();
  return rem;
}

// Buchberger with the two classical pair filters (coprime leading monomials;
// chain criterion), then autoreduction to the unique reduced basis: monic
// elements, no leading term divides another, every element fully reduced
// against the rest, sorted ascending by leading term.
template <class K>
PolyList<K> buchberger(const PolyList<K>& gens, const GrobnerOptions& opt = {}) {
  const Order& ord = opt.ord;
  PolyList<K> g;
  int nv = 0;
  for (const auto& p : gens) {
    nv = p.nv;
    if (!p.is_zero()) g.push_back(p);
  }

  auto lt = [&](size_t i) -> const Monomial& { return leading_term(g[i], ord).first; };

  std::set<std::pair<size_t, size_t>> pending, dropped;
  for (size_t i = 0; i < g.size(); ++i)
    for (size_t j = i + 1; j < g.size(); ++j) pending.insert({i, j});

  long budget = opt.max_reductions;
  while (!pending.empty()) {
    // Normal selection: smallest lcm under the order.
    auto chosen = pending.begin();
    Monomial best = mono_lcm(lt(chosen->first), lt(chosen->second));
    for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
      Monomial cand = mono_lcm(lt(it->first), lt(it->second));
      if (ord.less(cand, best)) {
        chosen = it;
        best = std::move(cand);
      }
    }
    auto [i, j] = *chosen;
    pending.erase(chosen);
    dropped.insert({i, j});

    if (mono_coprime(lt(i), lt(j))) continue;

    // Chain criterion: some k with LT(k) | lcm(i,j) and both (i,k), (j,k)
    // already handled.
    Monomial lij = mono_lcm(lt(i), lt(j));
    bool chained = false;
    for (size_t k = 0; k < g.size() && !chained; ++k) {
      if (k == i || k == j || !mono_divides(lt(k), lij)) continue;
      auto a = std::minmax(i, k), b = std::minmax(j, k);
      std::pair<size_t, size_t> pa{a.first, a.second}, pb{b.first, b.second};
      if (!pending.count(pa) && !pending.count(pb)) chained = true;
    }
    if (chained) continue;

    if (--budget < 0) throw resource_error("groebner basis computation exceeded the reduction cap");

    // S-polynomial.
    const auto& ti = leading_term(g[i], ord);
    const auto& tj = leading_term(g[j], ord);
    Poly<K> s = mono_scale(g[i], mono_div(lij, ti.first), field_traits<K>::one() / ti.second) -
                mono_scale(g[j], mono_div(lij, tj.first), field_traits<K>::one() / tj.second);
    s.canonicalize();
    Poly<K> r = normal_form(std::move(s), g, ord);
    if (r.is_zero()) continue;
    g.push_back(std::move(r));
    for (size_t k = 0; k + 1 < g.size(); ++k) pending.insert({k, g.size() - 1});
  }

  // Autoreduce to the reduced basis.
  for (;;) {
    bool changed = false;
    for (size_t i = 0; i < g.size(); ++i) {
      Poly<K> self = g[i];
      PolyList<K> others;
      for (size_t k = 0; k < g.size(); ++k)
        if (k != i && !g[k].is_zero()) others.push_back(g[k]);
      Poly<K> r = normal_form(self, others, ord);
      if (r != g[i]) {
        g[i] = std::move(r);
        changed = true;
      }
    }
    if (!changed) break;
  }
  PolyList<K> out;
  for (auto& p : g) {
    if (p.is_zero()) continue;
    const auto& l = leading_term(p, ord);
    out.push_back(mono_scale(p, mono_one(p.nv), field_traits<K>::one() / l.second));
  }
  std::sort(out.begin(), out.end(), [&](const Poly<K>& a, const Poly<K>& b) {
    return ord.less(leading_term(a, ord).first, leading_term(b, ord).first);
  });
  (void)nv;
  return out;
}

template <class K>
bool ideal_member(const Poly<K>& p, const PolyList<K>& gb, const Order& ord = {}) {
  return normal_form(p, gb, ord).is_zero();
}

// Reduced bases are unique, so ideal equality is basis equality.
template <class K>
bool ideal_equal(const PolyList<K>& a, const PolyList<K>& b, const GrobnerOptions& opt = {}) {
  return buchberger(a, opt) == buchberger(b, opt);
}

// Exact division by a single divisor; throws when p is not a multiple.
template <class K>
Poly<K> divide_exact(Poly<K> p, const Poly<K>& f, const Order& ord = {}) {
  Poly<K> q(p.nv);
  const auto& ltf = leading_term(f, ord);
  while (!p.is_zero()) {
    const auto& lt = leading_term(p, ord);
    if (!mono_divides(ltf.first, lt.first))
      throw internal_error("divide_exact: not a multiple of the divisor");
    Monomial m = mono_div(lt.first, ltf.first);
    K c = lt.second / ltf.second;
    q.terms.push_back({m, c});
    p = p - mono_scale(f, m, c);
  }
  q.canonicalize();
  return q;
}

// (I : f), f != 0, I homogeneous: computed through I ∩ <f> with one auxiliary
// eliminated variable, then exact division by f. Output generators are
// homogeneous, deduplicated, deterministically sorted, and include a
// generating set of I itself.
template <class K>
PolyList<K> ideal_quotient(const PolyList<K>& gens, const Poly<K>& f,
                           const GrobnerOptions& opt = {}) {
  if (f.is_zero()) throw input_error("ideal quotient by zero");
  const int nv = f.nv;
  const int nt = nv + 1;  // auxiliary variable appended

  auto lift = [&](const Poly<K>& p, bool times_t) {
    Poly<K> out(nt);
    for (const auto& [m, c] : p.terms) {
      Monomial mm;
      mm.e = m.e;
      mm.e.push_back(times_t ? 1 : 0);
      out.terms.push_back({mm, c});
    }
    out.canonicalize();
    return out;
  };

  PolyList<K> work;
  for (const auto& gpoly : gens)
    if (!gpoly.is_zero()) work.push_back(lift(gpoly, true));  // t*g
  work.push_back(lift(f, false) - lift(f, true));             // (1-t)*f

  GrobnerOptions elim = opt;
  elim.ord.elim_var = nv;
  PolyList<K> gb = buchberger(work, elim);

  PolyList<K> out;
  for (const auto& p : gb) {
    bool has_t = false;
    for (const auto& t : p.terms)
      if (t.first.e[nv] > 0) has_t = true;
    if (has_t) continue;
    Poly<K> drop(nv);
    for (const auto& [m, c] : p.terms) {
      Monomial mm;
      mm.e.assign(m.e.begin(), m.e.end() - 1);
      drop.terms.push_back({mm, c});
    }
    drop.canonicalize();
    for (const auto& comp : homogeneous_components(drop))
      out.push_back(divide_exact(comp, f, opt.ord));
  }
  for (const auto& gpoly : gens)
    if (!gpoly.is_zero()) out.push_back(gpoly);
  std::sort(out.begin(), out.end(), poly_less<K>);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// --- degree-slice linear algebra (oracle side; no Groebner bases) ---

// All monomials of the given degree, deterministic order.
std::vector<Monomial> monomials_of_degree(int nvars, int degree);

// Row space dimension of a list of coefficient vectors over K.
template <class K>
int rank_rows(std::vector<std::vector<K>> rows) {
  int rank = 0;
  const int cols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  for (int c = 0; c < cols; ++c) {
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r)
      if (rows[r][c] != field_traits<K>::zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    K inv = field_traits<K>::one() / rows[rank][c];
    for (int j = c; j < cols; ++j) rows[rank][j] = inv * rows[rank][j];
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == rank || rows[r][c] == field_traits<K>::zero()) continue;
      K f = rows[r][c];
      for (int j = c; j < cols; ++j) rows[r][j] = rows[r][j] - f * rows[rank][j];
    }
    ++rank;
    if (rank == static_cast<int>(rows.size())) break;
  }
  return rank;
}

// Coefficient vector of a homogeneous-degree slice on the monomial basis
// returned by monomials_of_degree.
template <class K>
std::vector<K> coeff_vector(const Poly<K>& p, const std::vector<Monomial>& basis,
                            const std::map<Monomial, int>& index) {
  std::vector<K> row(basis.size(), field_traits<K>::zero());
  for (const auto& [m, c] : p.terms) {
    auto it = index.find(m);
    if (it == index.end()) throw internal_error("coeff_vector: monomial outside basis");
    row[it->second] = c;
  }
  return row;
}

// Quotient dimensions dim (R/I)_e for e = 0..cap, by dense rank over the
// degree slice spanned by monomial multiples of the generators. Independent
// of the Groebner path: only Gaussian elimination.
template <class K>
std::vector<Integer> dims_by_degree(const PolyList<K>& gens, int nvars, int cap) {
  std::vector<Integer> dims;
  for (int e = 0; e <= cap; ++e) {
    auto basis = monomials_of_degree(nvars, e);
    if (basis.size() > size_t(2000000)) throw resource_error("degree slice too large");
    std::map<Monomial, int> index;
    for (size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], static_cast<int>(i));
    std::vector<std::vector<K>> rows;
    for (const auto& gpoly : gens) {
      if (gpoly.is_zero()) continue;
      if (!gpoly.is_homogeneous()) throw input_error("dims_by_degree: inhomogeneous generator");
      int d = gpoly.degree();
      if (d > e) continue;
      for (const auto& m : monomials_of_degree(nvars, e - d))
        rows.push_back(coeff_vector(mono_scale(gpoly, m, field_traits<K>::one()), basis, index));
    }
    dims.push_back(Integer(basis.size()) - rank_rows<K>(std::move(rows)));
  }
  return dims;
}

// --- Hilbert series of R/I through the leading-term ideal ---

struct HilbertData {
  std::vector<Integer> numerator;   // N(t); series is N(t) / (1-t)^nvars
  int denominator_power = 0;
  std::vector<Integer> truncation;  // dim (R/I)_e for e = 0..cap
};

std::vector<Integer> hilbert_numerator(std::vector<Monomial> lt_gens);
std::vector<Integer> expand_series(const std::vector<Integer>& numerator, int nvars, int cap);

template <class K>
HilbertData hilbert_series(const PolyList<K>& gens, int nvars, int cap,
                           const GrobnerOptions& opt = {}) {
  for (const auto& gpoly : gens)
    if (!gpoly.is_homogeneous()) throw input_error("hilbert_series: inhomogeneous generator");
  PolyList<K> gb = buchberger(gens, opt);
  std::vector<Monomial> lts;
  for (const auto& p : gb) lts.push_back(leading_term(p, opt.ord).first);
  HilbertData h;
  h.numerator = hilbert_numerator(std::move(lts));
  h.denominator_power = nvars;
  h.truncation = expand_series(h.numerator, nvars, cap);
  return h;
}

// Degrees (with multiplicity) of a minimal homogeneous generating set of J
// over I (I ⊆ J required): per degree, dim J_e - dim (I_e + (m·J)_e).
// Scans up to the largest degree among the supplied J generators, beyond
// which nothing new can appear.
template <class K>
std::map<int, int> minimal_generator_degrees(const PolyList<K>& j_gens, const PolyList<K>& i_gens,
                                             int nvars, const GrobnerOptions& opt = {}) {
  PolyList<K> j_gb = buchberger(j_gens, opt);
  for (const auto& gpoly : i_gens)
    if (!ideal_member(gpoly, j_gb, opt.ord))
      throw internal_error("minimal_generator_degrees: I is not contained in J");

  int dmax = 0;
  for (const auto& gpoly : j_gens)
    if (!gpoly.is_zero()) dmax = std::max(dmax, gpoly.degree());

  std::map<int, int> out;
  for (int e = 0; e <= dmax; ++e) {
    auto basis = monomials_of_degree(nvars, e);
    std::map<Monomial, int> index;
    for (size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], static_cast<int>(i));

    std::vector<std::vector<K>> lower;  // I_e + (m·J)_e
    std::vector<std::vector<K>> full;   // + J_e
    auto add_multiples = [&](const PolyList<K>& gens, int min_shift,
                             std::vector<std::vector<K>>& rows) {
      for (const auto& gpoly : gens) {
        if (gpoly.is_zero()) continue;
        int d = gpoly.degree();
        if (e - d < min_shift) continue;
        for (const auto& m : monomials_of_degree(nvars, e - d))
          rows.push_back(coeff_vector(mono_scale(gpoly, m, field_traits<K>::one()), basis, index));
      }
    };
    add_multiples(i_gens, 0, lower);
    add_multiples(j_gens, 1, lower);
    full = lower;
    add_multiples(j_gens, 0, full);
    int gap = rank_rows<K>(std::move(full)) - rank_rows<K>(std::move(lower));
    if (gap > 0) out[e] = gap;
  }
  return out;
}

// Substitute images[v] for variable v (each image zero or homogeneous of
// degree 1 in the target ring).
template <class K>
Poly<K> substitute(const Poly<K>& p, const PolyList<K>& images, int target_nvars) {
  if (static_cast<int>(images.size()) != p.nv) throw input_error("substitute: image count mismatch");
  for (const auto& im : images)
    if (!im.is_zero() && !(im.is_homogeneous() && im.degree() == 1))
      throw input_error("substitute: images must be zero or homogeneous of degree 1");
  Poly<K> out(target_nvars);
  for (const auto& [m, c] : p.terms) {
    Poly<K> term = poly_const<K>(target_nvars, c);
    for (int v = 0; v < p.nv; ++v)
      for (int k = 0; k < m.e[v]; ++k) term = term * images[v];
    out = out + term;
  }
  return out;
}

}  // namespace hv
