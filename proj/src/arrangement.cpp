#include "hv/arrangement.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

#include "hv/circuits.hpp"
#include "hv/errors.hpp"
#include "hv/linalg.hpp"

namespace hv {

namespace {

using ordered_json = nlohmann::ordered_json;

[[noreturn]] void fail_at(const std::string& where, const std::string& what) {
  throw input_error("arrangement: " + where + ": " + what);
}

Integer json_int(const ordered_json& j, const std::string& where) {
  if (j.is_number_integer()) return Integer(j.get<long long>());
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    Rational q = parse_rational(s);
    if (denominator(q) != 1) fail_at(where, "expected an integer, got '" + s + "'");
    return numerator(q);
  }
  fail_at(where, "expected an integer");
}

}  // namespace

Arrangement parse_arrangement(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw input_error(std::string("arrangement: JSON syntax error: ") + e.what());
  }
  if (!j.is_object()) fail_at("top level", "expected an object");
  if (!j.contains("dimension")) fail_at("top level", "missing field 'dimension'");
  if (!j["dimension"].is_number_integer()) fail_at("dimension", "expected an integer");
  Arrangement arr;
  long long dim = j["dimension"].get<long long>();
  if (dim < 1 || dim > 64) fail_at("dimension", "must be in [1, 64]");
  arr.dimension = static_cast<int>(dim);
  if (j.contains("name")) {
    if (!j["name"].is_string()) fail_at("name", "expected a string");
    arr.name = j["name"].get<std::string>();
  }
  if (!j.contains("hyperplanes")) fail_at("top level", "missing field 'hyperplanes'");
  if (!j["hyperplanes"].is_array() || j["hyperplanes"].empty())
    fail_at("hyperplanes", "expected a nonempty array");
  int idx = 0;
  for (const auto& hj : j["hyperplanes"]) {
    ++idx;
    const std::string where = "hyperplanes[" + std::to_string(idx) + "]";
    if (!hj.is_object()) fail_at(where, "expected an object");
    if (!hj.contains("normal")) fail_at(where, "missing field 'normal'");
    if (!hj.contains("offset")) fail_at(where, "missing field 'offset'");
    if (!hj["normal"].is_array()) fail_at(where + ".normal", "expected an array");
    if (static_cast<int>(hj["normal"].size()) != arr.dimension)
      fail_at(where + ".normal", "expected " + std::to_string(arr.dimension) + " entries");
    Hyperplane h;
    for (const auto& entry : hj["normal"]) h.normal.push_back(json_int(entry, where + ".normal"));
    bool zero = true;
    for (const auto& z : h.normal)
      if (z != 0) zero = false;
    if (zero) fail_at(where + ".normal", "zero vector");
    if (hj["offset"].is_string()) {
      try {
        h.offset = parse_rational(hj["offset"].get<std::string>());
      } catch (const input_error& e) {
        fail_at(where + ".offset", e.what());
      }
    } else if (hj["offset"].is_number_integer()) {
      h.offset = Rational(Integer(hj["offset"].get<long long>()));
    } else {
      fail_at(where + ".offset", "expected a string (\"p\" or \"p/q\")");
    }
    // Normalize: primitive normal, offset rescaled by the same positive gcd.
    Integer g = 0;
    for (const auto& z : h.normal) g = boost::multiprecision::gcd(g, z);
    if (g > 1) {
      for (auto& z : h.normal) z /= g;
      h.offset /= Rational(g);
    }
    arr.hyperplanes.push_back(std::move(h));
  }
  return arr;
}

Arrangement load_arrangement(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_arrangement(buf.str());
}

std::string serialize_arrangement(const Arrangement& arr) {
  std::string out = "{\n";
  out += "  \"dimension\": " + std::to_string(arr.dimension) + ",\n";
  if (!arr.name.empty()) out += "  \"name\": " + ordered_json(arr.name).dump() + ",\n";
  out += "  \"hyperplanes\": [\n";
  for (int i = 0; i < arr.n(); ++i) {
    const auto& h = arr.hyperplanes[i];
    out += "    {\"normal\": [";
    for (size_t k = 0; k < h.normal.size(); ++k) {
      if (k) out += ",";
      out += h.normal[k].str();
    }
    out += "], \"offset\": " + ordered_json(to_string(h.offset)).dump() + "}";
    out += (i + 1 < arr.n()) ? ",\n" : "\n";
  }
  out += "  ]\n}\n";
  return out;
}

ValidationReport validate(const Arrangement& arr) {
  ValidationReport rep;
  rep.is_simple = true;
  bool unimodular = true;

  for (const auto& c : matroid_circuits(arr)) {
    Rational s = 0;
    for (size_t k = 0; k < c.support.size(); ++k)
      s += Rational(c.dependence[k]) * arr.hyperplanes[c.support[k] - 1].offset;
    if (s == 0) {
      rep.is_simple = false;
      rep.witnesses.push_back({c.support, "circuit with zero offset-sum meets in low codimension"});
    }
  }

  // Every full-rank d-subset of normals determines a point where those d
  // hyperplanes meet; smoothness asks each such subset to be a lattice basis.
  const int d = arr.dimension, n = arr.n();
  if (n >= d) {
    std::vector<int> pick(d);
    for (int i = 0; i < d; ++i) pick[i] = i;
    for (;;) {
      std::vector<IntVector> rows;
      rows.reserve(d);
      for (int i : pick) rows.push_back(arr.hyperplanes[i].normal);
      if (rank_int(rows) == d && !is_unimodular(rows)) {
        unimodular = false;
        std::vector<int> subset;
        for (int i : pick) subset.push_back(i + 1);
        Integer det_abs = det_integer(rows);
        if (det_abs < 0) det_abs = -det_abs;
        rep.witnesses.push_back(
            {subset, "normal d-subset with |det| = " + to_string(det_abs)});
      }
      int k = d - 1;
      while (k >= 0 && pick[k] == n - d + k) --k;
      if (k < 0) break;
      ++pick[k];
      for (int i = k + 1; i < d; ++i) pick[i] = pick[i - 1] + 1;
    }
  }

  rep.is_smooth = rep.is_simple && unimodular;
  return rep;
}

void require_simple(const Arrangement& arr) {
  ValidationReport rep = validate(arr);
  if (!rep.is_simple) {
    std::string msg = "arrangement is not simple";
    for (const auto& w : rep.witnesses) {
      if (w.reason.find("circuit") == std::string::npos) continue;
      msg += "; offending subset {";
      for (size_t i = 0; i < w.subset.size(); ++i)
        msg += (i ? "," : "") + std::to_string(w.subset[i]);
      msg += "}";
      break;
    }
    throw validation_error(msg);
  }
}

Arrangement flip_coorientation(const Arrangement& arr, int l) {
  if (l < 1 || l > arr.n()) throw input_error("flip: index out of range");
  Arrangement out = arr;
  auto& h = out.hyperplanes[l - 1];
  for (auto& z : h.normal) z = -z;
  h.offset = -h.offset;
  return out;
}

Arrangement translate(const Arrangement& arr, const RatVector& c) {
  if (static_cast<int>(c.size()) != arr.dimension)
    throw input_error("translate: vector dimension mismatch");
  Arrangement out = arr;
  for (auto& h : out.hyperplanes) h.offset += dot(c, h.normal);
  return out;
}

std::vector<IntVector> kernel_form_rows(const Arrangement& arr) {
  std::vector<IntVector> rows(arr.dimension, IntVector(arr.n()));
  for (int l = 0; l < arr.dimension; ++l)
    for (int i = 0; i < arr.n(); ++i) rows[l][i] = arr.hyperplanes[i].normal[l];
  return rows;
}

}  // namespace hv
