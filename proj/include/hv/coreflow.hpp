#pragma once

#include <optional>
#include <vector>

#include "hv/regions.hpp"

namespace hv {

// eta_A = sum of normals indexed by the sign vector; the circle potential is
// the linear functional <., eta_A> on Delta_A (up to an additive constant
// glued across the complex).
IntVector potential(const Arrangement& arr, uint32_t mask);

// A face on which the potential is constant: eta of the carrier lies in the
// rational span of the tight normals.
struct FixedFace {
  Face face;
  IntVector eta;
};

// All fixed faces of all feasible regions (one entry per carrier; the same
// geometric face shows up once per adjacent region and the fixedness verdict
// agrees across carriers).
std::vector<FixedFace> fixed_faces(const Arrangement& arr, const RegionOptions& opt = {});

struct FixedComponent {
  std::vector<int> face_ids;  // indices into FixedComponents::faces
  bool bounded = false;
  bool is_phi_minimum = false;  // contains the all-G region (eta = 0, value 0)
};

struct FixedComponents {
  std::vector<FixedFace> faces;  // geometrically deduplicated, deterministic order
  std::vector<FixedComponent> components;
  // Components made of bounded faces only; matches |bounded_index_set| for
  // smooth arrangements. An unbounded phi-minimum component is reported but
  // not counted here.
  int bounded_count = 0;
  std::optional<int> phi_minimum;  // component index, when the all-G region is feasible
};

FixedComponents fixed_components(const Arrangement& arr, const RegionOptions& opt = {});

struct RayClassification {
  uint32_t adjacent_region = 0;  // canonical region beside the positive ray
  Integer test_value;
  bool unstable = false;
};

// Flow data along one line through a vertex: b is primitive, orthogonal to
// the other incident normals, with <a_l, b> > 0. The forward ray (direction
// b) is unstable iff <b, eta_A> >= 0; the backward ray (direction -b) iff
// <-b, a_l + eta_A> >= 0, A taken beside the forward ray. The two test values
// sum to -<a_l, b>.
struct LineFlow {
  int line = 0;  // 1-based
  IntVector direction;
  Integer pairing;  // <a_l, b>; 1 at smooth vertices
  RayClassification forward;
  RayClassification backward;
};

struct VertexFlow {
  Vertex vertex;
  std::vector<LineFlow> lines;
};

VertexFlow vertex_flow(const Arrangement& arr, const Vertex& v);
std::vector<VertexFlow> vertex_flows(const Arrangement& arr);

// One entry per bounded region: the face of Delta_A minimizing <., eta_A>.
struct CoreComponent {
  uint32_t region = 0;
  IntVector eta;
  uint32_t min_tight = 0;  // tight set of the minimizing face
  int min_dim = 0;
  Rational min_value;  // minimum of the potential over the region
};

std::vector<CoreComponent> core_components(const Arrangement& arr, const RegionOptions& opt = {});

}  // namespace hv
