#include "hv/coreflow.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "hv/errors.hpp"
#include "hv/linalg.hpp"

namespace hv {

namespace {

RatVector to_rat(const IntVector& v) {
  RatVector out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = Rational(v[i]);
  return out;
}

bool eta_in_tight_span(const Arrangement& arr, uint32_t tight, const IntVector& eta) {
  std::vector<IntVector> span;
  for (int i = 0; i < arr.n(); ++i)
    if (tight >> i & 1) span.push_back(arr.hyperplanes[i].normal);
  return in_span(span, eta);
}

struct DisjointSet {
  std::vector<int> parent;
  explicit DisjointSet(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

IntVector potential(const Arrangement& arr, uint32_t mask) {
  IntVector eta(arr.dimension, Integer(0));
  for (int i = 0; i < arr.n(); ++i)
    if (mask >> i & 1)
      for (int l = 0; l < arr.dimension; ++l) eta[l] += arr.hyperplanes[i].normal[l];
  return eta;
}

std::vector<FixedFace> fixed_faces(const Arrangement& arr, const RegionOptions& opt) {
  std::vector<FixedFace> out;
  for (const auto& f : face_complex(arr, opt).faces) {
    IntVector eta = potential(arr, f.carrier);
    if (eta_in_tight_span(arr, f.tight, eta)) out.push_back({f, eta});
  }
  return out;
}

FixedComponents fixed_components(const Arrangement& arr, const RegionOptions& opt) {
  FixedComponents fcs;

  // Deduplicate geometrically: a closed face is determined by its tight set
  // and the carrier's sides off the tight set.
  std::map<std::pair<uint32_t, uint32_t>, int> canonical;
  for (const auto& ff : fixed_faces(arr, opt)) {
    auto key = std::make_pair(ff.face.tight, ff.face.carrier & ~ff.face.tight);
    if (!canonical.count(key)) {
      canonical.emplace(key, static_cast<int>(fcs.faces.size()));
      fcs.faces.push_back(ff);
    }
  }

  const int m = static_cast<int>(fcs.faces.size());
  DisjointSet ds(m);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (ds.find(i) == ds.find(j)) continue;
      // Closed faces intersect iff their combined constraint systems meet.
      auto cons = face_constraints(arr, fcs.faces[i].face);
      auto extra = face_constraints(arr, fcs.faces[j].face);
      cons.insert(cons.end(), extra.begin(), extra.end());
      if (lp_feasible(cons, arr.dimension)) ds.unite(i, j);
    }
  }

  std::map<int, int> root_to_component;
  for (int i = 0; i < m; ++i) {
    int root = ds.find(i);
    auto it = root_to_component.find(root);
    if (it == root_to_component.end()) {
      it = root_to_component.emplace(root, static_cast<int>(fcs.components.size())).first;
      fcs.components.push_back({});
      fcs.components.back().bounded = true;
    }
    fcs.components[it->second].face_ids.push_back(i);
    if (!fcs.faces[i].face.bounded) fcs.components[it->second].bounded = false;
  }

  // The all-G region (eta = 0, potential value 0) when feasible is itself a
  // fixed face; the component holding its top face is the potential minimum.
  if (lp_feasible(region_constraints(arr, 0), arr.dimension)) {
    int best = -1;
    for (int i = 0; i < m; ++i) {
      const auto& f = fcs.faces[i].face;
      if ((f.carrier & ~f.tight) != 0) continue;  // all sides on the G half
      if (best < 0 || f.dim > fcs.faces[best].face.dim) best = i;
    }
    if (best >= 0) {
      for (size_t ci = 0; ci < fcs.components.size(); ++ci) {
        for (int fi : fcs.components[ci].face_ids) {
          if (fi == best) {
            fcs.phi_minimum = static_cast<int>(ci);
            fcs.components[ci].is_phi_minimum = true;
          }
        }
      }
    }
  }

  for (const auto& comp : fcs.components)
    if (comp.bounded) ++fcs.bounded_count;
  return fcs;
}

VertexFlow vertex_flow(const Arrangement& arr, const Vertex& v) {
  const int d = arr.dimension;
  VertexFlow vf;
  vf.vertex = v;
  if (static_cast<int>(v.incident.size()) < d)
    throw internal_error("vertex_flow: vertex with deficient incident set");

  for (int l : v.incident) {
    LineFlow lf;
    lf.line = l;
    // Kernel of the other incident normals: one primitive direction.
    RatMatrix rows;
    for (int j : v.incident) {
      if (j == l) continue;
      RatVector row(d);
      for (int t = 0; t < d; ++t) row[t] = Rational(arr.hyperplanes[j - 1].normal[t]);
      rows.push_back(std::move(row));
    }
    auto kernel = kernel_basis(rows, d);
    if (kernel.size() != 1) throw internal_error("vertex_flow: incident set not corank one");
    IntVector b = kernel[0];
    Integer pair = dot(arr.hyperplanes[l - 1].normal, b);
    if (pair == 0) throw internal_error("vertex_flow: degenerate pairing");
    if (pair < 0) {
      for (auto& z : b) z = -z;
      pair = -pair;
    }
    lf.direction = b;
    lf.pairing = pair;

    // Step to a relative-interior point of each ray: half the distance to the
    // nearest crossing hyperplane (or 1 when none).
    auto region_beside = [&](int sign) -> uint32_t {
      Rational tmax = 0;
      bool found = false;
      for (int i = 0; i < arr.n(); ++i) {
        Integer adv = dot(arr.hyperplanes[i].normal, b) * sign;
        if (adv == 0) continue;
        Rational gap = arr.hyperplanes[i].offset - dot(v.point, arr.hyperplanes[i].normal);
        Rational t = gap / Rational(adv);
        if (t > 0 && (!found || t < tmax)) {
          tmax = t;
          found = true;
        }
      }
      Rational step = found ? tmax / 2 : Rational(1);
      RatVector x(d);
      for (int t = 0; t < d; ++t) x[t] = v.point[t] + step * Rational(sign) * Rational(b[t]);
      uint32_t mask = 0;
      for (int i = 0; i < arr.n(); ++i)
        if (dot(x, arr.hyperplanes[i].normal) >= arr.hyperplanes[i].offset)
          mask |= uint32_t(1) << i;
      return mask;
    };

    uint32_t region_fwd = region_beside(+1);
    uint32_t region_bwd = region_beside(-1);
    IntVector eta = potential(arr, region_fwd);

    lf.forward.adjacent_region = region_fwd;
    lf.forward.test_value = dot(b, eta);
    lf.forward.unstable = lf.forward.test_value >= 0;

    // Literal opposite-ray test, using the region beside the forward ray.
    IntVector al_plus_eta = eta;
    for (int t = 0; t < d; ++t) al_plus_eta[t] += arr.hyperplanes[l - 1].normal[t];
    lf.backward.adjacent_region = region_bwd;
    lf.backward.test_value = -dot(b, al_plus_eta);
    lf.backward.unstable = lf.backward.test_value >= 0;

    vf.lines.push_back(std::move(lf));
  }
  return vf;
}

std::vector<VertexFlow> vertex_flows(const Arrangement& arr) {
  std::vector<VertexFlow> out;
  for (const auto& v : vertices(arr)) out.push_back(vertex_flow(arr, v));
  return out;
}

std::vector<CoreComponent> core_components(const Arrangement& arr, const RegionOptions& opt) {
  std::vector<CoreComponent> out;
  const int d = arr.dimension;
  for (uint32_t mask : bounded_index_set(arr, opt)) {
    CoreComponent cc;
    cc.region = mask;
    cc.eta = potential(arr, mask);
    auto cons = region_constraints(arr, mask);
    LpResult r = lp_optimize(cons, d, to_rat(cc.eta), false);
    if (r.status != LpStatus::Optimal)
      throw internal_error("core: potential not minimized over a bounded region");
    cc.min_value = r.value;
    // The minimizing face: add the level-set equality, then take the tight closure.
    auto face_cons = cons;
    face_cons.push_back(eq(to_rat(cc.eta), r.value));
    uint32_t closure = 0;
    for (int i = 0; i < arr.n(); ++i) {
      RatVector obj(d);
      for (int t = 0; t < d; ++t) obj[t] = Rational(arr.hyperplanes[i].normal[t]);
      bool from_above = (mask >> i & 1);
      LpResult opt_r = lp_optimize(face_cons, d, obj, from_above);
      if (opt_r.status == LpStatus::Optimal && opt_r.value == arr.hyperplanes[i].offset)
        closure |= uint32_t(1) << i;
    }
    cc.min_tight = closure;
    std::vector<IntVector> tight_normals;
    for (int i = 0; i < arr.n(); ++i)
      if (closure >> i & 1) tight_normals.push_back(arr.hyperplanes[i].normal);
    cc.min_dim = d - rank_int(tight_normals);
    out.push_back(std::move(cc));
  }
  return out;
}

}  // namespace hv
