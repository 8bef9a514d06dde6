#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hv/arrangement.hpp"
#include "hv/lp.hpp"

namespace hv {

struct RegionOptions {
  int max_n = 20;        // 2^n sign vectors are enumerated; hard cap
  bool parallel = true;  // OpenMP over sign vectors when built with OpenMP
};

// Delta_A for the sign vector A (bit i-1 set: x in F_i, else x in G_i).
struct Region {
  uint32_t mask = 0;
  bool feasible = false;
  bool bounded = false;
  std::optional<RatVector> witness;
};

// All 2^n regions indexed by mask. Deterministic regardless of thread count.
std::vector<Region> enumerate_regions(const Arrangement& arr, const RegionOptions& opt = {});
std::vector<Region> enumerate_regions_serial(const Arrangement& arr, const RegionOptions& opt = {});

// Masks of bounded feasible regions, ascending.
std::vector<uint32_t> bounded_index_set(const Arrangement& arr, const RegionOptions& opt = {});

struct Vertex {
  RatVector point;
  std::vector<int> incident;  // all hyperplanes through the point, 1-based
};

// Intersection points of full-rank d-subsets, deduplicated, sorted by point.
std::vector<Vertex> vertices(const Arrangement& arr);

// Closed face of the region complex: carrier region, maximal tight set,
// affine dimension. Two faces are geometrically equal iff their tight masks
// and their carrier sides off the tight set agree.
struct Face {
  uint32_t carrier = 0;
  uint32_t tight = 0;
  int dim = 0;
  bool bounded = false;
};

struct FaceComplex {
  std::vector<Vertex> verts;
  std::vector<Face> faces;  // sorted by (carrier, tight)
};

// Every face of every feasible region.
FaceComplex face_complex(const Arrangement& arr, const RegionOptions& opt = {});

// Geometric containment test via sign vectors.
bool face_contains(const Face& big, const Face& small);

std::vector<LinConstraint> region_constraints(const Arrangement& arr, uint32_t mask);
std::vector<LinConstraint> face_constraints(const Arrangement& arr, const Face& f);

}  // namespace hv
