#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hv/arrangement.hpp"
#include "hv/circuits.hpp"
#include "hv/gf2.hpp"
#include "hv/grobner.hpp"

namespace hv {

enum class RingName { TD, ORDINARY, TDS1, S1, OS2, Z2OS, LAWRENCE };

std::string ring_name_string(RingName name);
// CLI spellings: td | h | tds1 | s1 | os2 | z2os | lawrence ("h" = ORDINARY).
std::optional<RingName> ring_name_from_flag(const std::string& flag);
bool ring_has_x(RingName name);
bool ring_supports_q(RingName name);   // false for OS2, Z2OS
bool ring_supports_f2(RingName name);  // false for LAWRENCE
bool ring_defaults_f2(RingName name);  // OS2, Z2OS

// Warning attached to presentations of simple-but-not-smooth arrangements.
extern const char* const kNonSmoothWarning;
// Note attached to F2 annihilator scans standing in for integral claims.
extern const char* const kF2SurrogateNote;

// A graded quotient presentation: polynomial ring on `vars` (every variable
// of algebraic degree 1; cohomological degree is twice that) modulo the
// homogeneous `relations`, sorted deterministically.
template <class K>
struct Presentation {
  RingName name = RingName::TD;
  std::vector<std::string> vars;
  std::vector<Poly<K>> relations;
  int x_index = -1;  // position of x in vars, -1 when the ring has no x
  std::string warning;

  int nvars() const { return static_cast<int>(vars.size()); }
};

namespace detail {

inline std::vector<std::string> var_range(const char* stem, int n) {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back(stem + std::to_string(i));
  return out;
}

inline std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

template <class K>
void finalize(Presentation<K>& pres, const Arrangement& arr) {
  std::erase_if(pres.relations, [](const Poly<K>& p) { return p.is_zero(); });
  std::sort(pres.relations.begin(), pres.relations.end(), poly_less<K>);
  pres.relations.erase(std::unique(pres.relations.begin(), pres.relations.end()),
                       pres.relations.end());
  ValidationReport report = validate(arr);
  if (report.is_simple && !report.is_smooth) pres.warning = kNonSmoothWarning;
}

template <class K>
Poly<K> support_monomial(int nv, const std::vector<int>& support) {
  Monomial m = mono_one(nv);
  for (int i : support) m = mono_mul(m, mono_var(i - 1, nv));
  return poly_term<K>(nv, m, field_traits<K>::one());
}

// u_{i} for i in s1 times (x - u_{j}) for j in s2 (x + u_j over F2).
template <class K>
Poly<K> split_product(int nv, int x_var, const SplitCircuit& sc) {
  Poly<K> rel = poly_one<K>(nv);
  for (int i : sc.s1) rel = rel * poly_var<K>(i - 1, nv);
  for (int j : sc.s2)
    rel = rel * (poly_var<K>(x_var, nv) - poly_var<K>(j - 1, nv));
  return rel;
}

template <class K>
PolyList<K> kernel_form_polys(const Arrangement& arr, int nv) {
  PolyList<K> out;
  for (const auto& row : kernel_form_rows(arr)) {
    Poly<K> f(nv);
    for (int i = 0; i < arr.n(); ++i) {
      K c = field_traits<K>::from_integer(row[i]);
      if (c != field_traits<K>::zero()) f.terms.push_back({mono_var(i, nv), c});
    }
    f.canonicalize();
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace detail

// Squarefree circuit-support monomials on u_1..u_n.
template <class K>
Presentation<K> present_td(const Arrangement& arr) {
  auto circuits = enumerate_circuits(arr);
  Presentation<K> pres;
  pres.name = RingName::TD;
  pres.vars = detail::var_range("u", arr.n());
  for (const auto& c : circuits)
    pres.relations.push_back(detail::support_monomial<K>(arr.n(), c.support));
  detail::finalize(pres, arr);
  return pres;
}

// td relations plus the d kernel linear forms sum_i (a_i)_l u_i.
template <class K>
Presentation<K> present_ordinary(const Arrangement& arr) {
  Presentation<K> pres = present_td<K>(arr);
  pres.name = RingName::ORDINARY;
  for (auto& f : detail::kernel_form_polys<K>(arr, arr.n()))
    pres.relations.push_back(std::move(f));
  detail::finalize(pres, arr);
  return pres;
}

// Split-circuit products on u_1..u_n, x.
template <class K>
Presentation<K> present_tds1(const Arrangement& arr) {
  auto splits = enumerate_split_circuits(arr);
  const int n = arr.n();
  Presentation<K> pres;
  pres.name = RingName::TDS1;
  pres.vars = detail::var_range("u", n);
  pres.vars.push_back("x");
  pres.x_index = n;
  for (const auto& sc : splits)
    pres.relations.push_back(detail::split_product<K>(n + 1, n, sc));
  detail::finalize(pres, arr);
  return pres;
}

// tds1 relations plus the kernel linear forms (which do not involve x).
template <class K>
Presentation<K> present_s1(const Arrangement& arr) {
  Presentation<K> pres = present_tds1<K>(arr);
  pres.name = RingName::S1;
  for (auto& f : detail::kernel_form_polys<K>(arr, arr.n() + 1))
    pres.relations.push_back(std::move(f));
  detail::finalize(pres, arr);
  return pres;
}

// Circuit-support monomials plus all squares, on e_1..e_n over F2.
Presentation<GF2> present_os2(const Arrangement& arr);

// Split-circuit products plus u_i(x + u_i), on u_1..u_n, x over F2.
Presentation<GF2> present_z2os(const Arrangement& arr);

// One product per circuit with S1 on u-variables and S2 on v-variables,
// on u_1..u_n, v_1..v_n over Q.
Presentation<Rational> present_lawrence(const Arrangement& arr);

// True iff substituting v_i = x - u_i carries the Lawrence ideal exactly
// onto the tds1 ideal over Q.
bool lawrence_specialize(const Arrangement& arr);

template <class K>
Presentation<K> build_presentation(const Arrangement& arr, RingName name) {
  constexpr bool f2 = std::is_same_v<K, GF2>;
  if (f2 && !ring_supports_f2(name))
    throw input_error("ring " + ring_name_string(name) + " is not defined over F2");
  if (!f2 && !ring_supports_q(name))
    throw input_error("ring " + ring_name_string(name) + " is fixed to F2 coefficients");
  switch (name) {
    case RingName::TD: return present_td<K>(arr);
    case RingName::ORDINARY: return present_ordinary<K>(arr);
    case RingName::TDS1: return present_tds1<K>(arr);
    case RingName::S1: return present_s1<K>(arr);
    case RingName::OS2:
      if constexpr (f2) return present_os2(arr);
      break;
    case RingName::Z2OS:
      if constexpr (f2) return present_z2os(arr);
      break;
    case RingName::LAWRENCE:
      if constexpr (!f2) return present_lawrence(arr);
      break;
  }
  throw internal_error("unreachable presentation dispatch");
}

// Substitute 0 for one variable and remove it from the ambient ring.
template <class K>
Poly<K> poly_drop_var_zero(const Poly<K>& p, int var) {
  Poly<K> out(p.nv - 1);
  for (const auto& [m, c] : p.terms) {
    if (m.e[var] > 0) continue;
    Monomial mm;
    mm.e = m.e;
    mm.e.erase(mm.e.begin() + var);
    out.terms.push_back({mm, c});
  }
  out.canonicalize();
  return out;
}

template <class K>
PolyList<K> ideal_drop_var_zero(const PolyList<K>& gens, int var) {
  PolyList<K> out;
  for (const auto& g : gens) {
    Poly<K> h = poly_drop_var_zero(g, var);
    if (!h.is_zero()) out.push_back(std::move(h));
  }
  std::sort(out.begin(), out.end(), poly_less<K>);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// --- deterministic text formats ---

template <class K>
std::string render_native(const Presentation<K>& pres) {
  std::string out = "ring " + ring_name_string(pres.name) + " field " +
                    field_traits<K>::name() + " vars " + detail::join(pres.vars, ",") + "\n";
  if constexpr (std::is_same_v<K, GF2>) {
    if (pres.x_index >= 0) out += "# over F2 each x-u form is rendered x+u\n";
  }
  for (const auto& rel : pres.relations) out += render_poly(rel, pres.vars) + "\n";
  return out;
}

template <class K>
std::string render_cas(const Presentation<K>& pres) {
  const char* field = std::is_same_v<K, GF2> ? "ZZ/2" : "QQ";
  std::string out = "R = " + std::string(field) + "[" + detail::join(pres.vars, ",") + "];\n";
  if (pres.relations.empty()) {
    out += "I = ideal(0_R);\n";
    return out;
  }
  std::vector<std::string> rendered;
  for (const auto& rel : pres.relations) rendered.push_back(render_poly(rel, pres.vars));
  out += "I = ideal(" + detail::join(rendered, ", ") + ");\n";
  return out;
}

// --- annihilator profiles and fingerprints ---

// Minimal-generator data of (I : ell) over I: algebraic degrees with
// multiplicity, plus deterministic representative generators.
struct AnnProfile {
  std::vector<int> degrees;
  std::vector<std::string> generators;

  bool operator==(const AnnProfile& o) const {
    return degrees == o.degrees && generators == o.generators;
  }
};

std::string format_degree_multiset(const std::vector<int>& degrees);

template <class K>
AnnProfile annihilator_profile(const Presentation<K>& pres, const Poly<K>& ell,
                               const GrobnerOptions& opt = {}) {
  if (ell.is_zero() || !ell.is_homogeneous() || ell.degree() != 1)
    throw input_error("annihilator class must be a nonzero homogeneous degree-1 form");
  const int nv = pres.nvars();
  PolyList<K> quotient = ideal_quotient(pres.relations, ell, opt);

  AnnProfile out;
  int dmax = 0;
  for (const auto& q : quotient) dmax = std::max(dmax, q.degree());
  for (int e = 0; e <= dmax; ++e) {
    auto basis = monomials_of_degree(nv, e);
    std::map<Monomial, int> index;
    for (size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], static_cast<int>(i));

    // I_e + (m * quotient)_e
    std::vector<std::vector<K>> lower;
    auto add_multiples = [&](const PolyList<K>& gens, int min_shift) {
      for (const auto& g : gens) {
        if (g.is_zero()) continue;
        int d = g.degree();
        if (e - d < min_shift) continue;
        for (const auto& m : monomials_of_degree(nv, e - d))
          lower.push_back(coeff_vector(mono_scale(g, m, field_traits<K>::one()), basis, index));
      }
    };
    add_multiples(pres.relations, 0);
    add_multiples(quotient, 1);
    int rank = rank_rows<K>(lower);

    for (const auto& g : quotient) {
      if (g.degree() != e) continue;
      auto with = lower;
      with.push_back(coeff_vector(g, basis, index));
      int r2 = rank_rows<K>(with);
      if (r2 > rank) {
        lower.push_back(coeff_vector(g, basis, index));
        rank = r2;
        out.degrees.push_back(e);
        out.generators.push_back(render_poly(g, pres.vars));
      }
    }
  }
  return out;
}

// One scanned degree-1 class: bit k of `mask` is the coefficient of vars[k].
struct ClassProfile {
  uint64_t mask = 0;
  std::string element;
  AnnProfile ann;
};

Poly<GF2> class_from_mask(int nv, uint64_t mask);

// Every nonzero F2 class, ascending mask order; parallel over classes with
// a serial reference twin.
std::vector<ClassProfile> scan_annihilators(const Presentation<GF2>& pres);
std::vector<ClassProfile> scan_annihilators_serial(const Presentation<GF2>& pres);

template <class K>
bool x_regular(const Presentation<K>& pres, const GrobnerOptions& opt = {}) {
  if (pres.x_index < 0) throw internal_error("x_regular on a ring without x");
  Poly<K> x = poly_var<K>(pres.x_index, pres.nvars());
  return ideal_equal(ideal_quotient(pres.relations, x, opt), pres.relations, opt);
}

struct Fingerprint {
  std::vector<Integer> hilbert_numerator;
  std::vector<Integer> hilbert_truncation;
  bool has_x = false;
  bool x_regular = false;
  bool scanned = false;                 // F2 class table below is populated
  std::vector<ClassProfile> profiles;  // ascending mask
};

template <class K>
Fingerprint fingerprint(const Presentation<K>& pres, int cap = 8) {
  Fingerprint fp;
  HilbertData h = hilbert_series(pres.relations, pres.nvars(), cap);
  fp.hilbert_numerator = h.numerator;
  fp.hilbert_truncation = h.truncation;
  fp.has_x = pres.x_index >= 0;
  if (fp.has_x) fp.x_regular = x_regular(pres);
  if constexpr (std::is_same_v<K, GF2>) {
    fp.scanned = true;
    fp.profiles = scan_annihilators(pres);
  }
  return fp;
}

struct DistinguishResult {
  bool distinguished = false;
  std::string message;  // "EQUAL_FINGERPRINT" or "DISTINGUISHED: <witness>"
};

// Fingerprints are invariants of the graded algebra (the class table is
// compared as a multiset, so relabeling classes cannot distinguish).
// DISTINGUISHED proves non-isomorphism; EQUAL_FINGERPRINT proves nothing.
DistinguishResult compare_fingerprints(const Fingerprint& a, const Fingerprint& b);

// --- substitution isomorphisms ---

GF2 gf2_from_rational(const Rational& c);

template <class K>
Poly<K> poly_from_rational(const Poly<Rational>& p) {
  if constexpr (std::is_same_v<K, Rational>) {
    return p;
  } else {
    Poly<K> out(p.nv);
    for (const auto& [m, c] : p.terms) {
      K v = gf2_from_rational(c);
      if (v != field_traits<K>::zero()) out.terms.push_back({m, v});
    }
    out.canonicalize();
    return out;
  }
}

template <class K>
std::vector<Poly<K>> images_from_rational(const std::vector<Poly<Rational>>& images) {
  std::vector<Poly<K>> out;
  for (const auto& p : images) out.push_back(poly_from_rational<K>(p));
  return out;
}

// True iff `images` defines a graded-algebra isomorphism A -> B: invertible
// degree-1 coefficient matrix, every relation of A lands in B's ideal, and
// the two Hilbert series agree. When both rings carry x the map must fix it.
template <class K>
bool verify_substitution_iso(const Presentation<K>& a, const Presentation<K>& b,
                             const std::vector<Poly<K>>& images, std::string* reason = nullptr,
                             const GrobnerOptions& opt = {}) {
  auto fail = [&](const char* why) {
    if (reason) *reason = why;
    return false;
  };
  if (a.vars != b.vars) throw input_error("substitution requires identical ambient variables");
  const int nv = a.nvars();
  if (static_cast<int>(images.size()) != nv)
    throw input_error("substitution must map every variable");

  if (a.x_index >= 0 && images[a.x_index] != poly_var<K>(a.x_index, nv))
    throw input_error("substitution must fix x");

  std::vector<std::vector<K>> matrix;
  for (const auto& im : images) {
    if (!im.is_zero() && !(im.is_homogeneous() && im.degree() == 1))
      throw input_error("substitution images must be homogeneous of degree 1");
    std::vector<K> row(nv, field_traits<K>::zero());
    for (const auto& [m, c] : im.terms)
      for (int v = 0; v < nv; ++v)
        if (m.e[v] == 1) row[v] = c;
    matrix.push_back(std::move(row));
  }
  if (rank_rows<K>(matrix) != nv) return fail("degree-1 matrix is not invertible");

  PolyList<K> gb = buchberger(b.relations, opt);
  for (const auto& rel : a.relations)
    if (!ideal_member(substitute(rel, images, nv), gb, opt.ord))
      return fail("image of a relation is not in the target ideal");

  if (hilbert_series(a.relations, nv, 8, opt).numerator !=
      hilbert_series(b.relations, nv, 8, opt).numerator)
    return fail("hilbert series differ");
  return true;
}

}  // namespace hv
