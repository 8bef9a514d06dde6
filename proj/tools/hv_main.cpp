// hv: exact workbench for cooriented rational hyperplane arrangements.
// One verb per run; deterministic bytes; --json wraps every figure in a
// machine-readable report envelope.

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hv/arrangement.hpp"
#include "hv/circuits.hpp"
#include "hv/coreflow.hpp"
#include "hv/expr.hpp"
#include "hv/regions.hpp"
#include "hv/rings.hpp"

using nlohmann::ordered_json;

namespace {

constexpr int kReportVersion = 1;

// --- small formatting helpers ---

std::vector<int> mask_to_set(uint32_t mask, int n) {
  std::vector<int> out;
  for (int i = 1; i <= n; ++i)
    if (mask & (uint32_t(1) << (i - 1))) out.push_back(i);
  return out;
}

std::string set_string(const std::vector<int>& s) {
  std::string out = "{";
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "}";
}

std::string intvec_string(const hv::IntVector& v) {
  std::string out = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += hv::to_string(v[i]);
  }
  return out + ")";
}

std::string ratvec_string(const hv::RatVector& v) {
  std::string out = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += hv::to_string(v[i]);
  }
  return out + ")";
}

ordered_json set_json(const std::vector<int>& s) { return ordered_json(s); }

ordered_json intvec_json(const hv::IntVector& v) {
  ordered_json arr = ordered_json::array();
  for (const auto& z : v) arr.push_back(hv::to_string(z));
  return arr;
}

ordered_json ratvec_json(const hv::RatVector& v) {
  ordered_json arr = ordered_json::array();
  for (const auto& q : v) arr.push_back(hv::to_string(q));
  return arr;
}

// Coefficient list ascending in t, rendered like "1-3*t^2+2*t^3".
std::string t_poly_string(const std::vector<hv::Integer>& coeffs) {
  std::string out;
  for (size_t e = 0; e < coeffs.size(); ++e) {
    const hv::Integer& c = coeffs[e];
    if (c == 0) continue;
    hv::Integer mag = c < 0 ? hv::Integer(-c) : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? "-" : "+";
    }
    bool unit = mag == 1;
    if (e == 0) {
      out += hv::to_string(mag);
    } else {
      if (!unit) out += hv::to_string(mag) + "*";
      out += "t";
      if (e > 1) out += "^" + std::to_string(e);
    }
  }
  if (out.empty()) out = "0";
  return out;
}

ordered_json integers_json(const std::vector<hv::Integer>& v) {
  ordered_json arr = ordered_json::array();
  for (const auto& z : v) arr.push_back(hv::to_string(z));
  return arr;
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

// --- report plumbing ---

struct Report {
  bool json = false;
  std::string verb;
  std::vector<std::string> inputs;
  ordered_json options = ordered_json::object();
  ordered_json result = ordered_json::object();
  std::string text;  // human-readable body

  void line(const std::string& s) { text += s + "\n"; }

  int emit(int code = 0) const {
    if (json) {
      ordered_json envelope;
      envelope["tool"] = "hv";
      envelope["report_version"] = kReportVersion;
      envelope["verb"] = verb;
      envelope["inputs"] = inputs;
      envelope["options"] = options;
      envelope["result"] = result;
      std::cout << envelope.dump(2) << "\n";
    } else {
      std::cout << text;
    }
    return code;
  }
};

void warn(const std::string& message) {
  if (!message.empty()) std::cerr << "warning: " << message << "\n";
}

// --- ring/field option plumbing shared by the algebra verbs ---

struct RingChoice {
  std::string which;
  std::string field;  // "", "q", "f2"
};

hv::RingName parse_which(const std::string& which) {
  auto name = hv::ring_name_from_flag(which);
  if (!name) throw hv::input_error("unknown ring '" + which + "' (use td|h|tds1|s1|os2|z2os|lawrence)");
  return *name;
}

// true = F2, false = Q.
bool resolve_field(hv::RingName name, const std::string& field) {
  if (field.empty()) return hv::ring_defaults_f2(name);
  if (field == "q") {
    if (!hv::ring_supports_q(name))
      throw hv::input_error("ring " + hv::ring_name_string(name) + " is fixed to F2 coefficients");
    return false;
  }
  if (field == "f2") {
    if (!hv::ring_supports_f2(name))
      throw hv::input_error("ring " + hv::ring_name_string(name) + " is not defined over F2");
    return true;
  }
  throw hv::input_error("unknown field '" + field + "' (use q or f2)");
}

template <class K>
ordered_json presentation_json(const hv::Presentation<K>& pres) {
  ordered_json out;
  out["ring"] = hv::ring_name_string(pres.name);
  out["field"] = hv::field_traits<K>::name();
  out["vars"] = pres.vars;
  ordered_json rels = ordered_json::array();
  for (const auto& rel : pres.relations) rels.push_back(hv::render_poly(rel, pres.vars));
  out["relations"] = rels;
  out["x_variable"] = pres.x_index >= 0 ? ordered_json(pres.vars[pres.x_index]) : ordered_json(nullptr);
  out["warning"] = pres.warning.empty() ? ordered_json(nullptr) : ordered_json(pres.warning);
  return out;
}

template <class K>
std::string presentation_header(const hv::Presentation<K>& pres) {
  return "ring " + hv::ring_name_string(pres.name) + " field " + hv::field_traits<K>::name() +
         " vars " + join(pres.vars, ",");
}

ordered_json ann_json(const hv::AnnProfile& ann) {
  ordered_json out;
  out["degrees"] = ann.degrees;
  std::vector<int> coh;
  for (int d : ann.degrees) coh.push_back(2 * d);
  out["cohomological_degrees"] = coh;
  out["generators"] = ann.generators;
  return out;
}

std::string ann_line(const hv::AnnProfile& ann) {
  std::string out = "degrees " + hv::format_degree_multiset(ann.degrees);
  if (!ann.generators.empty()) out += "; generators: " + join(ann.generators, ", ");
  return out;
}

ordered_json fingerprint_json(const hv::Fingerprint& fp) {
  ordered_json out;
  out["hilbert_numerator"] = integers_json(fp.hilbert_numerator);
  out["hilbert_truncation"] = integers_json(fp.hilbert_truncation);
  out["has_x"] = fp.has_x;
  out["x_regular"] = fp.has_x ? ordered_json(fp.x_regular) : ordered_json(nullptr);
  out["scanned"] = fp.scanned;
  if (fp.scanned) {
    ordered_json classes = ordered_json::array();
    for (const auto& p : fp.profiles) {
      ordered_json c;
      c["mask"] = p.mask;
      c["element"] = p.element;
      c["degrees"] = p.ann.degrees;
      classes.push_back(std::move(c));
    }
    out["classes"] = classes;
  }
  return out;
}

// --- verbs ---

int run_validate(Report& rep, const std::string& file) {
  hv::Arrangement arr = hv::load_arrangement(file);
  hv::ValidationReport v = hv::validate(arr);
  rep.line(std::string("simple: ") + (v.is_simple ? "yes" : "no") + ", smooth: " +
           (v.is_smooth ? "yes" : "no"));
  for (const auto& w : v.witnesses)
    rep.line("witness " + set_string(w.subset) + ": " + w.reason);
  rep.result["name"] = arr.name;
  rep.result["dimension"] = arr.dimension;
  rep.result["hyperplanes"] = arr.n();
  rep.result["simple"] = v.is_simple;
  rep.result["smooth"] = v.is_smooth;
  ordered_json ws = ordered_json::array();
  for (const auto& w : v.witnesses) {
    ordered_json j;
    j["subset"] = set_json(w.subset);
    j["reason"] = w.reason;
    ws.push_back(std::move(j));
  }
  rep.result["witnesses"] = ws;
  return rep.emit(v.is_simple ? 0 : 2);
}

int run_circuits(Report& rep, const std::string& file, bool split) {
  hv::Arrangement arr = hv::load_arrangement(file);
  auto circuits = hv::enumerate_circuits(arr);
  rep.line("circuits: " + std::to_string(circuits.size()));
  ordered_json list = ordered_json::array();
  std::vector<std::string> vars;
  if (split) {
    for (int i = 1; i <= arr.n(); ++i) vars.push_back("u" + std::to_string(i));
    vars.push_back("x");
  }
  for (const auto& c : circuits) {
    ordered_json j;
    j["support"] = set_json(c.support);
    j["dependence"] = intvec_json(c.dependence);
    j["offset_sum"] = hv::to_string(c.offset_sum);
    std::string line = "circuit " + set_string(c.support) + "  dependence " +
                       intvec_string(c.dependence) + "  offset-sum " + hv::to_string(c.offset_sum);
    if (split) {
      hv::SplitCircuit sc = hv::split_circuit(arr, c);
      auto rel = hv::detail::split_product<hv::Rational>(arr.n() + 1, arr.n(), sc);
      j["s1"] = set_json(sc.s1);
      j["s2"] = set_json(sc.s2);
      j["relation"] = hv::render_poly(rel, vars);
      line += "  S1 " + set_string(sc.s1) + "  S2 " + set_string(sc.s2) + "  relation " +
              hv::render_poly(rel, vars);
    }
    rep.line(line);
    list.push_back(std::move(j));
  }
  rep.result["count"] = circuits.size();
  rep.result["circuits"] = list;
  return rep.emit();
}

int run_regions(Report& rep, const std::string& file, bool bounded_only, bool with_vertices) {
  hv::Arrangement arr = hv::load_arrangement(file);
  auto regions = hv::enumerate_regions(arr);
  int feasible = 0, bounded = 0;
  for (const auto& r : regions) {
    feasible += r.feasible ? 1 : 0;
    bounded += r.bounded ? 1 : 0;
  }
  rep.line("regions: " + std::to_string(feasible) + " feasible of " +
           std::to_string(regions.size()) + ", bounded " + std::to_string(bounded));
  ordered_json list = ordered_json::array();
  for (const auto& r : regions) {
    if (!r.feasible) continue;
    if (bounded_only && !r.bounded) continue;
    auto s = mask_to_set(r.mask, arr.n());
    rep.line("region " + set_string(s) + ": " + (r.bounded ? "bounded" : "unbounded"));
    ordered_json j;
    j["mask"] = r.mask;
    j["halfspaces"] = set_json(s);
    j["bounded"] = r.bounded;
    j["witness"] = r.witness ? ratvec_json(*r.witness) : ordered_json(nullptr);
    list.push_back(std::move(j));
  }
  rep.result["total_masks"] = regions.size();
  rep.result["feasible"] = feasible;
  rep.result["bounded"] = bounded;
  rep.result["regions"] = list;
  if (with_vertices) {
    auto verts = hv::vertices(arr);
    rep.line("vertices: " + std::to_string(verts.size()));
    ordered_json vlist = ordered_json::array();
    for (const auto& v : verts) {
      rep.line("vertex " + ratvec_string(v.point) + "  lines " + set_string(v.incident));
      ordered_json j;
      j["point"] = ratvec_json(v.point);
      j["incident"] = set_json(v.incident);
      vlist.push_back(std::move(j));
    }
    rep.result["vertices"] = vlist;
  }
  return rep.emit();
}

int run_core(Report& rep, const std::string& file) {
  hv::Arrangement arr = hv::load_arrangement(file);
  hv::require_simple(arr);
  auto comps = hv::core_components(arr);
  rep.line("core components: " + std::to_string(comps.size()));
  ordered_json list = ordered_json::array();
  for (const auto& c : comps) {
    auto region = mask_to_set(c.region, arr.n());
    auto tight = mask_to_set(c.min_tight, arr.n());
    rep.line("region " + set_string(region) + ": eta " + intvec_string(c.eta) + ", min value " +
             hv::to_string(c.min_value) + ", min face tight " + set_string(tight) + " dim " +
             std::to_string(c.min_dim));
    ordered_json j;
    j["region"] = set_json(region);
    j["eta"] = intvec_json(c.eta);
    j["min_value"] = hv::to_string(c.min_value);
    j["min_tight"] = set_json(tight);
    j["min_dim"] = c.min_dim;
    list.push_back(std::move(j));
  }
  rep.result["count"] = comps.size();
  rep.result["components"] = list;
  return rep.emit();
}

int run_fixed(Report& rep, const std::string& file) {
  hv::Arrangement arr = hv::load_arrangement(file);
  hv::require_simple(arr);
  hv::FixedComponents fc = hv::fixed_components(arr);
  rep.line("fixed components: " + std::to_string(fc.components.size()) + " (bounded " +
           std::to_string(fc.bounded_count) + ")");
  ordered_json faces = ordered_json::array();
  for (const auto& f : fc.faces) {
    ordered_json j;
    j["carrier"] = set_json(mask_to_set(f.face.carrier, arr.n()));
    j["tight"] = set_json(mask_to_set(f.face.tight, arr.n()));
    j["dim"] = f.face.dim;
    j["bounded"] = f.face.bounded;
    j["eta"] = intvec_json(f.eta);
    faces.push_back(std::move(j));
  }
  ordered_json comps = ordered_json::array();
  for (size_t k = 0; k < fc.components.size(); ++k) {
    const auto& comp = fc.components[k];
    rep.line("component " + std::to_string(k + 1) + (comp.bounded ? " (bounded)" : " (unbounded)") +
             (comp.is_phi_minimum ? " (potential minimum)" : "") + ":");
    for (int id : comp.face_ids) {
      const auto& f = fc.faces[id];
      rep.line("  carrier " + set_string(mask_to_set(f.face.carrier, arr.n())) + " tight " +
               set_string(mask_to_set(f.face.tight, arr.n())) + " dim " +
               std::to_string(f.face.dim) + "  eta " + intvec_string(f.eta));
    }
    ordered_json j;
    j["faces"] = set_json(comp.face_ids);
    j["bounded"] = comp.bounded;
    j["is_potential_minimum"] = comp.is_phi_minimum;
    comps.push_back(std::move(j));
  }
  rep.line(fc.phi_minimum ? "potential minimum: component " + std::to_string(*fc.phi_minimum + 1)
                          : "potential minimum: none (all-G region infeasible)");
  rep.result["faces"] = faces;
  rep.result["components"] = comps;
  rep.result["bounded_count"] = fc.bounded_count;
  rep.result["potential_minimum"] =
      fc.phi_minimum ? ordered_json(*fc.phi_minimum) : ordered_json(nullptr);
  return rep.emit();
}

template <class K>
int emit_ring(Report& rep, const hv::Presentation<K>& pres, const std::string& format) {
  warn(pres.warning);
  rep.result = presentation_json(pres);
  rep.result["native"] = hv::render_native(pres);
  rep.result["cas"] = hv::render_cas(pres);
  if (format == "json") rep.json = true;
  rep.text = format == "cas" ? hv::render_cas(pres) : hv::render_native(pres);
  return rep.emit();
}

int run_ring(Report& rep, const std::string& file, const RingChoice& rc, const std::string& format) {
  if (format != "native" && format != "cas" && format != "json")
    throw hv::input_error("unknown format '" + format + "' (use native|cas|json)");
  hv::Arrangement arr = hv::load_arrangement(file);
  hv::RingName name = parse_which(rc.which);
  if (resolve_field(name, rc.field)) {
    auto pres = hv::build_presentation<hv::GF2>(arr, name);
    return emit_ring(rep, pres, format);
  }
  auto pres = hv::build_presentation<hv::Rational>(arr, name);
  return emit_ring(rep, pres, format);
}

template <class K>
int emit_hilbert(Report& rep, const hv::Presentation<K>& pres, int maxdeg) {
  warn(pres.warning);
  hv::HilbertData h = hv::hilbert_series(pres.relations, pres.nvars(), maxdeg);
  rep.line(presentation_header(pres));
  rep.line("numerator " + t_poly_string(h.numerator));
  rep.line("denominator (1-t)^" + std::to_string(h.denominator_power));
  std::vector<std::string> dims;
  for (const auto& z : h.truncation) dims.push_back(hv::to_string(z));
  rep.line("dims 0.." + std::to_string(maxdeg) + ": " + join(dims, ","));
  rep.result["ring"] = hv::ring_name_string(pres.name);
  rep.result["field"] = hv::field_traits<K>::name();
  rep.result["numerator"] = integers_json(h.numerator);
  rep.result["denominator_power"] = h.denominator_power;
  rep.result["maxdeg"] = maxdeg;
  rep.result["dims"] = integers_json(h.truncation);
  return rep.emit();
}

int run_hilbert(Report& rep, const std::string& file, const RingChoice& rc, int maxdeg) {
  if (maxdeg < 0 || maxdeg > 64)
    throw hv::input_error("--maxdeg must lie between 0 and 64");
  hv::Arrangement arr = hv::load_arrangement(file);
  hv::RingName name = parse_which(rc.which);
  if (resolve_field(name, rc.field)) {
    auto pres = hv::build_presentation<hv::GF2>(arr, name);
    return emit_hilbert(rep, pres, maxdeg);
  }
  auto pres = hv::build_presentation<hv::Rational>(arr, name);
  return emit_hilbert(rep, pres, maxdeg);
}

template <class K>
int emit_ann(Report& rep, const hv::Presentation<K>& pres, const std::string& element) {
  warn(pres.warning);
  hv::Poly<hv::Rational> parsed = hv::parse_linear_expression(element, pres.vars);
  hv::Poly<K> ell = hv::poly_from_rational<K>(parsed);
  hv::AnnProfile ann = hv::annihilator_profile(pres, ell);
  rep.line(presentation_header(pres));
  rep.line("class " + hv::render_poly(ell, pres.vars) + ": " + ann_line(ann));
  rep.result["ring"] = hv::ring_name_string(pres.name);
  rep.result["field"] = hv::field_traits<K>::name();
  rep.result["element"] = hv::render_poly(ell, pres.vars);
  rep.result["annihilator"] = ann_json(ann);
  if (std::is_same_v<K, hv::GF2>) {
    rep.line("note: " + std::string(hv::kF2SurrogateNote));
    rep.result["note"] = hv::kF2SurrogateNote;
  } else {
    rep.result["note"] = nullptr;
  }
  return rep.emit();
}

int run_ann(Report& rep, const std::string& file, const RingChoice& rc, const std::string& element) {
  hv::Arrangement arr = hv::load_arrangement(file);
  hv::RingName name = parse_which(rc.which);
  if (resolve_field(name, rc.field)) {
    auto pres = hv::build_presentation<hv::GF2>(arr, name);
    return emit_ann(rep, pres, element);
  }
  auto pres = hv::build_presentation<hv::Rational>(arr, name);
  return emit_ann(rep, pres, element);
}

int run_scan_ann(Report& rep, const std::string& file, const RingChoice& rc) {
  hv::Arrangement arr = hv::load_arrangement(file);
  hv::RingName name = parse_which(rc.which);
  if (!resolve_field(name, rc.field))
    throw hv::input_error("scan-ann is exhaustive over F2 classes; pass --field f2 or an F2 ring");
  auto pres = hv::build_presentation<hv::GF2>(arr, name);
  warn(pres.warning);
  auto classes = hv::scan_annihilators(pres);
  rep.line(presentation_header(pres));
  rep.line("note: " + std::string(hv::kF2SurrogateNote));
  rep.line("classes: " + std::to_string(classes.size()));
  ordered_json list = ordered_json::array();
  for (const auto& c : classes) {
    rep.line("class " + c.element + ": " + ann_line(c.ann));
    ordered_json j;
    j["mask"] = c.mask;
    j["element"] = c.element;
    j["annihilator"] = ann_json(c.ann);
    list.push_back(std::move(j));
  }
  rep.result["ring"] = hv::ring_name_string(pres.name);
  rep.result["field"] = "F2";
  rep.result["note"] = hv::kF2SurrogateNote;
  rep.result["count"] = classes.size();
  rep.result["classes"] = list;
  return rep.emit();
}

template <class K>
int emit_iso(Report& rep, const hv::Presentation<K>& a, const hv::Presentation<K>& b,
             const std::string& map_text) {
  warn(a.warning);
  auto images_q = hv::parse_variable_map(map_text, a.vars, b.vars);
  auto images = hv::images_from_rational<K>(images_q);
  std::string reason;
  bool ok = hv::verify_substitution_iso(a, b, images, &reason);
  rep.line(ok ? "ISOMORPHISM VERIFIED" : "NOT VERIFIED: " + reason);
  rep.result["verified"] = ok;
  rep.result["reason"] = ok ? ordered_json(nullptr) : ordered_json(reason);
  ordered_json imgs = ordered_json::object();
  for (size_t i = 0; i < images.size(); ++i)
    imgs[a.vars[i]] = hv::render_poly(images[i], b.vars);
  rep.result["map"] = imgs;
  return rep.emit();
}

int run_iso(Report& rep, const std::string& file_a, const std::string& file_b, const RingChoice& rc,
            const std::string& map_text) {
  hv::Arrangement arr_a = hv::load_arrangement(file_a);
  hv::Arrangement arr_b = hv::load_arrangement(file_b);
  hv::RingName name = parse_which(rc.which);
  if (resolve_field(name, rc.field)) {
    auto a = hv::build_presentation<hv::GF2>(arr_a, name);
    auto b = hv::build_presentation<hv::GF2>(arr_b, name);
    return emit_iso(rep, a, b, map_text);
  }
  auto a = hv::build_presentation<hv::Rational>(arr_a, name);
  auto b = hv::build_presentation<hv::Rational>(arr_b, name);
  return emit_iso(rep, a, b, map_text);
}

int run_distinguish(Report& rep, const std::string& file_a, const std::string& file_b,
                    const RingChoice& rc) {
  hv::Arrangement arr_a = hv::load_arrangement(file_a);
  hv::Arrangement arr_b = hv::load_arrangement(file_b);
  hv::RingName name = parse_which(rc.which);
  hv::DistinguishResult verdict;
  ordered_json fa, fb;
  std::string field;
  if (hv::ring_supports_f2(name)) {
    field = "F2";
    auto a = hv::build_presentation<hv::GF2>(arr_a, name);
    auto b = hv::build_presentation<hv::GF2>(arr_b, name);
    warn(a.warning);
    hv::Fingerprint pa = hv::fingerprint(a), pb = hv::fingerprint(b);
    verdict = hv::compare_fingerprints(pa, pb);
    fa = fingerprint_json(pa);
    fb = fingerprint_json(pb);
  } else {
    field = "Q";
    auto a = hv::build_presentation<hv::Rational>(arr_a, name);
    auto b = hv::build_presentation<hv::Rational>(arr_b, name);
    warn(a.warning);
    hv::Fingerprint pa = hv::fingerprint(a), pb = hv::fingerprint(b);
    verdict = hv::compare_fingerprints(pa, pb);
    fa = fingerprint_json(pa);
    fb = fingerprint_json(pb);
  }
  rep.line(verdict.message);
  if (field == "F2") rep.line("note: " + std::string(hv::kF2SurrogateNote));
  rep.result["ring"] = hv::ring_name_string(name);
  rep.result["field"] = field;
  rep.result["verdict"] = verdict.distinguished ? "DISTINGUISHED" : "EQUAL_FINGERPRINT";
  rep.result["message"] = verdict.message;
  rep.result["fingerprint_a"] = fa;
  rep.result["fingerprint_b"] = fb;
  return rep.emit();
}

int run_rewrite(Report& rep, const hv::Arrangement& out_arr, const std::string& out_path) {
  std::string bytes = hv::serialize_arrangement(out_arr);
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw hv::input_error("cannot write '" + out_path + "'");
  f << bytes;
  f.close();
  rep.line("wrote " + out_path);
  rep.result["output"] = out_path;
  rep.result["arrangement"] = ordered_json::parse(bytes);
  return rep.emit();
}

int run_flip(Report& rep, const std::string& file, int index, const std::string& out_path) {
  hv::Arrangement arr = hv::load_arrangement(file);
  return run_rewrite(rep, hv::flip_coorientation(arr, index), out_path);
}

int run_translate(Report& rep, const std::string& file, const std::string& by,
                  const std::string& out_path) {
  hv::Arrangement arr = hv::load_arrangement(file);
  hv::RatVector c;
  std::string token;
  std::stringstream ss(by);
  while (std::getline(ss, token, ',')) c.push_back(hv::parse_rational(token));
  if (static_cast<int>(c.size()) != arr.dimension)
    throw hv::input_error("--by expects " + std::to_string(arr.dimension) +
                          " comma-separated rationals");
  return run_rewrite(rep, hv::translate(arr, c), out_path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hv: exact toolkit for cooriented rational hyperplane arrangements"};
  app.require_subcommand(1);

  Report rep;
  std::function<int()> action;

  std::string file, file_b, out_path, element, map_text, by;
  RingChoice rc;
  std::string format = "native";
  int maxdeg = 8, flip_index = 0;
  bool split = false, bounded_only = false, with_vertices = false;

  auto common = [&](CLI::App* sub) {
    sub->add_flag("--json", rep.json, "emit a JSON report instead of text");
    return sub;
  };
  auto ring_opts = [&](CLI::App* sub, bool field_flag = true) {
    sub->add_option("--which", rc.which, "ring: td|h|tds1|s1|os2|z2os|lawrence")->required();
    if (field_flag) sub->add_option("--field", rc.field, "coefficients: q|f2");
  };

  auto* validate = common(app.add_subcommand("validate", "check simplicity and smoothness"));
  validate->add_option("file", file)->required();
  validate->callback([&] { action = [&] { return run_validate(rep, file); }; });

  auto* circuits = common(app.add_subcommand("circuits", "list circuits of the normals"));
  circuits->add_option("file", file)->required();
  circuits->add_flag("--split", split, "include the sign splitting and its relation");
  circuits->callback([&] { action = [&] { return run_circuits(rep, file, split); }; });

  auto* regions = common(app.add_subcommand("regions", "enumerate feasible regions"));
  regions->add_option("file", file)->required();
  regions->add_flag("--bounded", bounded_only, "list bounded regions only");
  regions->add_flag("--vertices", with_vertices, "also list arrangement vertices");
  regions->callback(
      [&] { action = [&] { return run_regions(rep, file, bounded_only, with_vertices); }; });

  auto* core = common(app.add_subcommand("core", "minimizing face of each bounded region"));
  core->add_option("file", file)->required();
  core->callback([&] { action = [&] { return run_core(rep, file); }; });

  auto* fixed = common(app.add_subcommand("fixed", "components of the potential-fixed locus"));
  fixed->add_option("file", file)->required();
  fixed->callback([&] { action = [&] { return run_fixed(rep, file); }; });

  auto* ring = common(app.add_subcommand("ring", "print a quotient-ring presentation"));
  ring->add_option("file", file)->required();
  ring_opts(ring);
  ring->add_option("--format", format, "native|cas|json (default native)");
  ring->callback([&] { action = [&] { return run_ring(rep, file, rc, format); }; });

  auto* hilbert = common(app.add_subcommand("hilbert", "Hilbert series of a presentation"));
  hilbert->add_option("file", file)->required();
  ring_opts(hilbert);
  hilbert->add_option("--maxdeg", maxdeg, "truncation degree (default 8)");
  hilbert->callback([&] { action = [&] { return run_hilbert(rep, file, rc, maxdeg); }; });

  auto* ann = common(app.add_subcommand("ann", "annihilator profile of a degree-1 class"));
  ann->add_option("file", file)->required();
  ring_opts(ann);
  ann->add_option("--element", element, "degree-1 expression, e.g. u1+2*u2-x")->required();
  ann->callback([&] { action = [&] { return run_ann(rep, file, rc, element); }; });

  auto* scan = common(app.add_subcommand("scan-ann", "annihilator profiles of every F2 class"));
  scan->add_option("file", file)->required();
  ring_opts(scan);
  scan->callback([&] { action = [&] { return run_scan_ann(rep, file, rc); }; });

  auto* iso = common(app.add_subcommand("iso", "verify a substitution isomorphism"));
  iso->add_option("fileA", file)->required();
  iso->add_option("fileB", file_b)->required();
  ring_opts(iso);
  iso->add_option("--map", map_text, "variable map, e.g. \"u1->u1+u2,x->x\"")->required();
  iso->callback([&] { action = [&] { return run_iso(rep, file, file_b, rc, map_text); }; });

  auto* flip = common(app.add_subcommand("flip", "reverse one coorientation"));
  flip->add_option("file", file)->required();
  flip->add_option("--index", flip_index, "hyperplane index, 1-based")->required();
  flip->add_option("-o,--output", out_path, "output file")->required();
  flip->callback([&] { action = [&] { return run_flip(rep, file, flip_index, out_path); }; });

  auto* translate = common(app.add_subcommand("translate", "translate the arrangement"));
  translate->add_option("file", file)->required();
  translate->add_option("--by", by, "translation vector, e.g. \"1,1/2\"")->required();
  translate->add_option("-o,--output", out_path, "output file")->required();
  translate->callback([&] { action = [&] { return run_translate(rep, file, by, out_path); }; });

  auto* dist = common(app.add_subcommand("distinguish", "compare graded-algebra fingerprints"));
  dist->add_option("fileA", file)->required();
  dist->add_option("fileB", file_b)->required();
  ring_opts(dist, false);
  dist->callback([&] { action = [&] { return run_distinguish(rep, file, file_b, rc); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n" << app.help() << std::flush;
    return 1;
  }

  rep.verb = app.get_subcommands().front()->get_name();
  rep.inputs = {file};
  if (!file_b.empty()) rep.inputs.push_back(file_b);
  ordered_json& opt = rep.options;
  if (!rc.which.empty()) opt["which"] = rc.which;
  if (!rc.field.empty()) opt["field"] = rc.field;
  if (rep.verb == "ring") opt["format"] = format;
  if (rep.verb == "hilbert") opt["maxdeg"] = maxdeg;
  if (split) opt["split"] = true;
  if (bounded_only) opt["bounded"] = true;
  if (with_vertices) opt["vertices"] = true;
  if (!element.empty()) opt["element"] = element;
  if (!map_text.empty()) opt["map"] = map_text;
  if (flip_index != 0) opt["index"] = flip_index;
  if (!by.empty()) opt["by"] = by;
  if (!out_path.empty()) opt["output"] = out_path;

  try {
    return action();
  } catch (const hv::input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const hv::validation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const hv::resource_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
}
