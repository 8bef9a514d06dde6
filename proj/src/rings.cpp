#include <exception>

#include "hv/parallel.hpp"
#include "hv/rings.hpp"

namespace hv {

const char* const kNonSmoothWarning =
    "arrangement is simple but not smooth: theorem hypotheses not met; Q-coefficients advised";
const char* const kF2SurrogateNote =
    "exhaustive scan over F2 degree-1 classes; integral claims are checked via this mod-2 surrogate";

std::string ring_name_string(RingName name) {
  switch (name) {
    case RingName::TD: return "TD";
    case RingName::ORDINARY: return "ORDINARY";
    case RingName::TDS1: return "TDS1";
    case RingName::S1: return "S1";
    case RingName::OS2: return "OS2";
    case RingName::Z2OS: return "Z2OS";
    case RingName::LAWRENCE: return "LAWRENCE";
  }
  throw internal_error("unknown ring name");
}

std::optional<RingName> ring_name_from_flag(const std::string& flag) {
  if (flag == "td") return RingName::TD;
  if (flag == "h") return RingName::ORDINARY;
  if (flag == "tds1") return RingName::TDS1;
  if (flag == "s1") return RingName::S1;
  if (flag == "os2") return RingName::OS2;
  if (flag == "z2os") return RingName::Z2OS;
  if (flag == "lawrence") return RingName::LAWRENCE;
  return std::nullopt;
}

bool ring_has_x(RingName name) {
  return name == RingName::TDS1 || name == RingName::S1 || name == RingName::Z2OS;
}

bool ring_supports_q(RingName name) {
  return name != RingName::OS2 && name != RingName::Z2OS;
}

bool ring_supports_f2(RingName name) { return name != RingName::LAWRENCE; }

bool ring_defaults_f2(RingName name) {
  return name == RingName::OS2 || name == RingName::Z2OS;
}

Presentation<GF2> present_os2(const Arrangement& arr) {
  auto circuits = enumerate_circuits(arr);
  const int n = arr.n();
  Presentation<GF2> pres;
  pres.name = RingName::OS2;
  pres.vars = detail::var_range("e", n);
  for (const auto& c : circuits)
    pres.relations.push_back(detail::support_monomial<GF2>(n, c.support));
  for (int i = 0; i < n; ++i) {
    Monomial sq = mono_mul(mono_var(i, n), mono_var(i, n));
    pres.relations.push_back(poly_term<GF2>(n, sq, GF2(1)));
  }
  detail::finalize(pres, arr);
  return pres;
}

Presentation<GF2> present_z2os(const Arrangement& arr) {
  Presentation<GF2> pres = present_tds1<GF2>(arr);
  pres.name = RingName::Z2OS;
  const int nv = pres.nvars();
  for (int i = 0; i < arr.n(); ++i) {
    Poly<GF2> ui = poly_var<GF2>(i, nv);
    Poly<GF2> x = poly_var<GF2>(pres.x_index, nv);
    pres.relations.push_back(ui * (x + ui));
  }
  detail::finalize(pres, arr);
  return pres;
}

Presentation<Rational> present_lawrence(const Arrangement& arr) {
  auto splits = enumerate_split_circuits(arr);
  const int n = arr.n();
  const int nv = 2 * n;
  Presentation<Rational> pres;
  pres.name = RingName::LAWRENCE;
  pres.vars = detail::var_range("u", n);
  for (auto& v : detail::var_range("v", n)) pres.vars.push_back(std::move(v));
  for (const auto& sc : splits) {
    Monomial m = mono_one(nv);
    for (int i : sc.s1) m = mono_mul(m, mono_var(i - 1, nv));
    for (int j : sc.s2) m = mono_mul(m, mono_var(n + j - 1, nv));
    pres.relations.push_back(poly_term<Rational>(nv, m, Rational(1)));
  }
  detail::finalize(pres, arr);
  return pres;
}

bool lawrence_specialize(const Arrangement& arr) {
  Presentation<Rational> law = present_lawrence(arr);
  const int n = arr.n();
  const int nv = n + 1;  // u_1..u_n, x
  std::vector<Poly<Rational>> images;
  for (int i = 0; i < n; ++i) images.push_back(poly_var<Rational>(i, nv));
  for (int i = 0; i < n; ++i)
    images.push_back(poly_var<Rational>(n, nv) - poly_var<Rational>(i, nv));
  PolyList<Rational> specialized;
  for (const auto& rel : law.relations) specialized.push_back(substitute(rel, images, nv));
  return ideal_equal(specialized, present_tds1<Rational>(arr).relations);
}

std::string format_degree_multiset(const std::vector<int>& degrees) {
  std::string out = "{";
  for (size_t i = 0; i < degrees.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(degrees[i]);
  }
  return out + "}";
}

Poly<GF2> class_from_mask(int nv, uint64_t mask) {
  Poly<GF2> out(nv);
  for (int v = 0; v < nv; ++v)
    if (mask & (uint64_t(1) << v)) out.terms.push_back({mono_var(v, nv), GF2(1)});
  out.canonicalize();
  return out;
}

std::vector<ClassProfile> scan_annihilators_serial(const Presentation<GF2>& pres) {
  const int nv = pres.nvars();
  if (nv > 16) throw resource_error("annihilator scan is capped at 16 variables");
  const uint64_t total = (uint64_t(1) << nv) - 1;
  std::vector<ClassProfile> out(total);
  for (uint64_t mask = 1; mask <= total; ++mask) {
    Poly<GF2> ell = class_from_mask(nv, mask);
    out[mask - 1] = {mask, render_poly(ell, pres.vars), annihilator_profile(pres, ell)};
  }
  return out;
}

std::vector<ClassProfile> scan_annihilators(const Presentation<GF2>& pres) {
  const int nv = pres.nvars();
  if (nv > 16) throw resource_error("annihilator scan is capped at 16 variables");
  const int64_t total = (int64_t(1) << nv) - 1;
  std::vector<ClassProfile> out(total);
  std::exception_ptr first_error = nullptr;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(thread_count())
#endif
  for (int64_t mask = 1; mask <= total; ++mask) {
    try {
      Poly<GF2> ell = class_from_mask(nv, static_cast<uint64_t>(mask));
      out[mask - 1] = {static_cast<uint64_t>(mask), render_poly(ell, pres.vars),
                       annihilator_profile(pres, ell)};
    } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
      {
        if (!first_error) first_error = std::current_exception();
      }
    }
  }
  if (first_error) std::rethrow_exception(first_error);
  return out;
}

namespace {

std::string render_series_entry(const std::vector<Integer>& v, size_t i) {
  return i < v.size() ? to_string(v[i]) : "0";
}

}  // namespace

DistinguishResult compare_fingerprints(const Fingerprint& a, const Fingerprint& b) {
  size_t top = std::max(a.hilbert_truncation.size(), b.hilbert_truncation.size());
  for (size_t e = 0; e < top; ++e) {
    std::string va = render_series_entry(a.hilbert_truncation, e);
    std::string vb = render_series_entry(b.hilbert_truncation, e);
    if (va != vb)
      return {true, "DISTINGUISHED: graded dimensions differ at degree " + std::to_string(e) +
                        " (" + va + " in A, " + vb + " in B)"};
  }
  if (a.hilbert_numerator != b.hilbert_numerator)
    return {true, "DISTINGUISHED: hilbert series numerators differ"};

  if (a.has_x && b.has_x && a.x_regular != b.x_regular)
    return {true, std::string("DISTINGUISHED: x-regularity differs (") +
                      (a.x_regular ? "regular" : "torsion") + " in A, " +
                      (b.x_regular ? "regular" : "torsion") + " in B)"};

  if (a.scanned && b.scanned) {
    // Substitution isomorphisms permute classes, so compare profile multisets.
    // Report the lexicographically smallest profile whose counts disagree,
    // preferring nonempty profiles: a regular class has no annihilator
    // structure to exhibit, so the empty profile is the witness of last
    // resort. The report is carried by the lowest-mask class on the surplus
    // side (profiles are stored ascending by mask, so the first match wins).
    std::map<std::vector<int>, std::pair<int, int>> counts;
    for (const auto& p : a.profiles) ++counts[p.ann.degrees].first;
    for (const auto& p : b.profiles) ++counts[p.ann.degrees].second;
    auto witness = [](const std::vector<ClassProfile>& profiles,
                      const std::vector<int>& degrees) -> const ClassProfile* {
      for (const auto& p : profiles)
        if (p.ann.degrees == degrees) return &p;
      return nullptr;
    };

    const std::vector<int>* best = nullptr;
    const ClassProfile* best_witness = nullptr;
    bool best_in_a = true;
    int best_ca = 0, best_cb = 0;
    for (bool allow_empty : {false, true}) {
      for (const auto& [degrees, cab] : counts) {
        auto [ca, cb] = cab;
        if (ca == cb || degrees.empty() != allow_empty) continue;
        bool in_a = ca > cb;
        const ClassProfile* w = witness(in_a ? a.profiles : b.profiles, degrees);
        if (!w) continue;
        best = &degrees;
        best_witness = w;
        best_in_a = in_a;
        best_ca = ca;
        best_cb = cb;
        break;
      }
      if (best) break;
    }
    if (best) {
      std::string profile = format_degree_multiset(*best);
      std::string at = " at class " + best_witness->element;
      if (best_in_a && best_cb == 0)
        return {true, "DISTINGUISHED: annihilator profile " + profile + at + " present only in A"};
      if (!best_in_a && best_ca == 0)
        return {true, "DISTINGUISHED: annihilator profile " + profile + at + " present only in B"};
      return {true, "DISTINGUISHED: annihilator profile " + profile + at + " occurs " +
                        std::to_string(best_ca) + " times in A but " + std::to_string(best_cb) +
                        " times in B"};
    }
  }
  return {false, "EQUAL_FINGERPRINT"};
}

GF2 gf2_from_rational(const Rational& c) {
  Integer den = boost::multiprecision::denominator(c);
  if (den % 2 == 0)
    throw input_error("coefficient " + to_string(c) + " has no reduction mod 2");
  return GF2(boost::multiprecision::numerator(c));
}

}  // namespace hv
