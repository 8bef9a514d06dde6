#include "hv/regions.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "hv/errors.hpp"
#include "hv/linalg.hpp"
#include "hv/parallel.hpp"

namespace hv {

namespace {

RatVector normal_rat(const Arrangement& arr, int i0) {
  RatVector a(arr.dimension);
  for (int l = 0; l < arr.dimension; ++l) a[l] = Rational(arr.hyperplanes[i0].normal[l]);
  return a;
}

void check_cap(const Arrangement& arr, const RegionOptions& opt) {
  if (arr.n() > opt.max_n || arr.n() > 31)
    throw resource_error("region enumeration over 2^" + std::to_string(arr.n()) +
                         " sign vectors exceeds the configured cap");
}

Region probe_region(const Arrangement& arr, uint32_t mask) {
  Region reg;
  reg.mask = mask;
  auto cons = region_constraints(arr, mask);
  auto witness = lp_feasible(cons, arr.dimension);
  if (!witness) return reg;
  reg.feasible = true;
  reg.witness = std::move(witness);
  reg.bounded = lp_bounded(cons, arr.dimension);
  return reg;
}

}  // namespace

std::vector<LinConstraint> region_constraints(const Arrangement& arr, uint32_t mask) {
  std::vector<LinConstraint> cons;
  cons.reserve(arr.n());
  for (int i = 0; i < arr.n(); ++i) {
    if (mask >> i & 1) cons.push_back(geq(normal_rat(arr, i), arr.hyperplanes[i].offset));
    else cons.push_back(leq(normal_rat(arr, i), arr.hyperplanes[i].offset));
  }
  return cons;
}

std::vector<LinConstraint> face_constraints(const Arrangement& arr, const Face& f) {
  std::vector<LinConstraint> cons;
  cons.reserve(arr.n());
  for (int i = 0; i < arr.n(); ++i) {
    if (f.tight >> i & 1) cons.push_back(eq(normal_rat(arr, i), arr.hyperplanes[i].offset));
    else if (f.carrier >> i & 1) cons.push_back(geq(normal_rat(arr, i), arr.hyperplanes[i].offset));
    else cons.push_back(leq(normal_rat(arr, i), arr.hyperplanes[i].offset));
  }
  return cons;
}

std::vector<Region> enumerate_regions_serial(const Arrangement& arr, const RegionOptions& opt) {
  require_simple(arr);
  check_cap(arr, opt);
  const uint32_t total = uint32_t(1) << arr.n();
  std::vector<Region> out(total);
  for (uint32_t mask = 0; mask < total; ++mask) out[mask] = probe_region(arr, mask);
  return out;
}

std::vector<Region> enumerate_regions(const Arrangement& arr, const RegionOptions& opt) {
  if (!opt.parallel) return enumerate_regions_serial(arr, opt);
  require_simple(arr);
  check_cap(arr, opt);
  const uint32_t total = uint32_t(1) << arr.n();
  std::vector<Region> out(total);
  std::string error;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8) num_threads(hv::thread_count())
#endif
  for (int64_t mask = 0; mask < int64_t(total); ++mask) {
    try {
      out[size_t(mask)] = probe_region(arr, uint32_t(mask));
    } catch (const std::exception& e) {
#ifdef _OPENMP
#pragma omp critical
#endif
      if (error.empty()) error = e.what();
    }
  }
  if (!error.empty()) throw internal_error("region enumeration: " + error);
  return out;
}

std::vector<uint32_t> bounded_index_set(const Arrangement& arr, const RegionOptions& opt) {
  std::vector<uint32_t> out;
  for (const auto& r : enumerate_regions(arr, opt))
    if (r.feasible && r.bounded) out.push_back(r.mask);
  return out;
}

std::vector<Vertex> vertices(const Arrangement& arr) {
  require_simple(arr);
  const int d = arr.dimension, n = arr.n();
  std::map<RatVector, std::vector<int>> points;
  if (n >= d) {
    std::vector<int> pick(d);
    for (int i = 0; i < d; ++i) pick[i] = i;
    for (;;) {
      std::vector<IntVector> rows;
      RatVector rhs;
      for (int i : pick) {
        rows.push_back(arr.hyperplanes[i].normal);
        rhs.push_back(arr.hyperplanes[i].offset);
      }
      if (auto p = solve_square(rows, rhs)) {
        auto& incident = points[*p];
        if (incident.empty()) {
          for (int i = 0; i < n; ++i)
            if (dot(*p, arr.hyperplanes[i].normal) == arr.hyperplanes[i].offset)
              incident.push_back(i + 1);
        }
      }
      int k = d - 1;
      while (k >= 0 && pick[k] == n - d + k) --k;
      if (k < 0) break;
      ++pick[k];
      for (int i = k + 1; i < d; ++i) pick[i] = pick[i - 1] + 1;
    }
  }
  std::vector<Vertex> out;
  out.reserve(points.size());
  for (auto& [point, incident] : points) out.push_back({point, incident});
  return out;
}

bool face_contains(const Face& big, const Face& small) {
  if (big.tight & ~small.tight) return false;
  return ((small.carrier ^ big.carrier) & ~small.tight) == 0;
}

FaceComplex face_complex(const Arrangement& arr, const RegionOptions& opt) {
  FaceComplex fc;
  fc.verts = vertices(arr);
  const int d = arr.dimension, n = arr.n();
  auto regions = enumerate_regions(arr, opt);

  for (const auto& reg : regions) {
    if (!reg.feasible) continue;
    auto base = region_constraints(arr, reg.mask);

    // Hyperplanes the closed region meets at all; only these can be tight.
    uint32_t touch = 0;
    for (int i = 0; i < n; ++i) {
      auto cons = base;
      cons.push_back(eq(normal_rat(arr, i), arr.hyperplanes[i].offset));
      if (lp_feasible(cons, d)) touch |= uint32_t(1) << i;
    }

    std::set<uint32_t> seen;  // tight closures already recorded for this carrier
    // Enumerate subsets of `touch`, including the empty set, ascending.
    uint32_t sub = 0;
    for (;;) {
      auto cons = base;
      for (int i = 0; i < n; ++i)
        if (sub >> i & 1) cons[i] = eq(normal_rat(arr, i), arr.hyperplanes[i].offset);
      if (lp_feasible(cons, d)) {
        // Tight closure: every touchable hyperplane forced to equality on the face.
        uint32_t closure = sub;
        for (int i = 0; i < n; ++i) {
          if (!(touch >> i & 1) || (sub >> i & 1)) continue;
          RatVector obj = normal_rat(arr, i);
          bool from_above = (reg.mask >> i & 1);  // face on the >= side: tight iff max == offset
          LpResult r = lp_optimize(cons, d, obj, from_above);
          if (r.status == LpStatus::Optimal && r.value == arr.hyperplanes[i].offset)
            closure |= uint32_t(1) << i;
        }
        if (!seen.count(closure)) {
          seen.insert(closure);
          Face f;
          f.carrier = reg.mask;
          f.tight = closure;
          std::vector<IntVector> tight_normals;
          for (int i = 0; i < n; ++i)
            if (closure >> i & 1) tight_normals.push_back(arr.hyperplanes[i].normal);
          f.dim = d - rank_int(tight_normals);
          f.bounded = lp_bounded(face_constraints(arr, f), d);
          fc.faces.push_back(f);
        }
      }
      if (sub == touch) break;
      sub = (sub - touch) & touch;  // next submask of touch, ascending
    }
  }
  std::sort(fc.faces.begin(), fc.faces.end(), [](const Face& a, const Face& b) {
    return a.carrier != b.carrier ? a.carrier < b.carrier : a.tight < b.tight;
  });
  return fc;
}

}  // namespace hv
