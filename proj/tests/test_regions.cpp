#include "test_main.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "fixtures.hpp"
#include "hv/regions.hpp"

using namespace hv;

namespace {

RatVector pt(long x, long y) { return {Rational(x), Rational(y)}; }

int count_feasible(const std::vector<Region>& rs) {
  int k = 0;
  for (const auto& r : rs) k += r.feasible;
  return k;
}

}  // namespace

TEST_CASE("FIG2A/B/C region counts") {
  for (auto arr : {hvtest::fig2a(), hvtest::fig2b(), hvtest::fig2c()}) {
    auto rs = enumerate_regions(arr);
    REQUIRE(rs.size() == 16);
    CHECK(count_feasible(rs) == 10);
    CHECK(bounded_index_set(arr).size() == 2);
  }
  CHECK(bounded_index_set(hvtest::fig2a()) == std::vector<uint32_t>{13, 15});
  CHECK(bounded_index_set(hvtest::fig2c()) == std::vector<uint32_t>{6, 15});
}

TEST_CASE("region witnesses satisfy their constraint systems") {
  auto arr = hvtest::fig2a();
  for (const auto& r : enumerate_regions(arr)) {
    if (!r.feasible) {
      CHECK(!r.witness);
      continue;
    }
    REQUIRE(r.witness);
    for (const auto& c : region_constraints(arr, r.mask)) {
      Rational lhs = dot(*r.witness, c.normal);
      if (c.sense == Sense::GEQ) CHECK(lhs >= c.bound);
      else if (c.sense == Sense::LEQ) CHECK(lhs <= c.bound);
      else CHECK(lhs == c.bound);
    }
  }
}

TEST_CASE("FIG2A5 region counts") {
  auto arr = hvtest::fig2a5();
  auto rs = enumerate_regions(arr);
  REQUIRE(rs.size() == 32);
  CHECK(count_feasible(rs) == 14);
  CHECK(bounded_index_set(arr).size() == 4);
}

TEST_CASE("FIG2A vertices are the five pinned points") {
  auto vs = vertices(hvtest::fig2a());
  REQUIRE(vs.size() == 5);
  CHECK(vs[0].point == pt(-1, 2));
  CHECK(vs[0].incident == std::vector<int>{1, 4});
  CHECK(vs[1].point == pt(0, 1));
  CHECK(vs[1].incident == std::vector<int>{1, 2});
  CHECK(vs[2].point == pt(0, 2));
  CHECK(vs[2].incident == std::vector<int>{2, 4});
  CHECK(vs[3].point == pt(2, -1));
  CHECK(vs[3].incident == std::vector<int>{1, 3});
  CHECK(vs[4].point == pt(2, 2));
  CHECK(vs[4].incident == std::vector<int>{3, 4});
}

TEST_CASE("FIG2A5 gains three vertices on the new line") {
  auto vs = vertices(hvtest::fig2a5());
  REQUIRE(vs.size() == 8);
  std::map<RatVector, std::vector<int>> by_point;
  for (const auto& v : vs) by_point[v.point] = v.incident;
  CHECK(by_point.at(pt(0, 0)) == std::vector<int>{2, 5});
  CHECK(by_point.at(pt(2, -2)) == std::vector<int>{3, 5});
  CHECK(by_point.at(pt(-2, 2)) == std::vector<int>{4, 5});
  // H5 is parallel to H1: no vertex on that pair.
  for (const auto& v : vs) {
    bool on1 = std::count(v.incident.begin(), v.incident.end(), 1);
    bool on5 = std::count(v.incident.begin(), v.incident.end(), 5);
    CHECK_FALSE((on1 && on5));
  }
}

TEST_CASE("FIG2A face complex: carrier-by-carrier structure") {
  auto arr = hvtest::fig2a();
  auto fc = face_complex(arr);
  CHECK(fc.verts.size() == 5);
  REQUIRE(fc.faces.size() == 58);

  std::map<uint32_t, int> per_carrier;
  for (const auto& f : fc.faces) ++per_carrier[f.carrier];
  CHECK(per_carrier.size() == 10);
  CHECK(per_carrier.at(15) == 9);  // trapezoid: 1 + 4 edges + 4 vertices
  CHECK(per_carrier.at(13) == 7);  // triangle: 1 + 3 edges + 3 vertices

  std::map<int, int> trapezoid_dims;
  for (const auto& f : fc.faces)
    if (f.carrier == 15) {
      ++trapezoid_dims[f.dim];
      CHECK(f.bounded);
    }
  CHECK(trapezoid_dims == std::map<int, int>{{0, 4}, {1, 4}, {2, 1}});

  // Distinct geometric vertices in the complex match vertices(arr).
  std::set<std::pair<uint32_t, uint32_t>> vertex_keys;
  for (const auto& f : fc.faces)
    if (f.dim == 0) vertex_keys.insert({f.tight, f.carrier & ~f.tight});
  CHECK(vertex_keys.size() == 5);
}

TEST_CASE("face containment follows tight sets and shared sides") {
  auto top = Face{15, 0, 2, true};
  auto edge2 = Face{15, 2, 1, true};            // x = 0 edge of the trapezoid
  auto corner = Face{15, 3, 0, true};           // (0,1)
  auto edge3_right = Face{11, 4, 1, true};      // x = 2 edge seen from region 11
  auto edge3_trap = Face{15, 4, 1, true};       // same edge seen from the trapezoid
  CHECK(face_contains(top, edge2));
  CHECK(face_contains(edge2, corner));
  CHECK(face_contains(top, corner));
  CHECK_FALSE(face_contains(edge2, top));
  CHECK_FALSE(face_contains(edge2, edge3_trap));
  // Geometric equality: containment both ways across carriers.
  CHECK(face_contains(edge3_right, edge3_trap));
  CHECK(face_contains(edge3_trap, edge3_right));
}

TEST_CASE("constraint builders use the mask sides") {
  auto arr = hvtest::fig2a();
  auto cons = region_constraints(arr, 15);
  REQUIRE(cons.size() == 4);
  for (const auto& c : cons) CHECK(c.sense == Sense::GEQ);
  cons = region_constraints(arr, 13);
  CHECK(cons[1].sense == Sense::LEQ);

  auto fcons = face_constraints(arr, Face{15, 2, 1, true});
  CHECK(fcons[0].sense == Sense::GEQ);
  CHECK(fcons[1].sense == Sense::EQ);
  CHECK(fcons[2].sense == Sense::GEQ);
}

TEST_CASE("region enumeration guards") {
  RegionOptions small;
  small.max_n = 3;
  CHECK_THROWS_AS(enumerate_regions(hvtest::fig2a(), small), resource_error);

  auto bad = hvtest::make_arr(2, {{1, 1}, {1, 0}, {-1, 0}, {0, -1}}, {"1", "0", "0", "-2"});
  CHECK_THROWS_AS(enumerate_regions(bad), validation_error);
}

TEST_CASE("one-line arrangement: two half-plane regions, no vertices") {
  auto arr = hvtest::make_arr(2, {{1, 0}}, {"0"}, "HALF");
  auto rs = enumerate_regions(arr);
  REQUIRE(rs.size() == 2);
  for (const auto& r : rs) {
    CHECK(r.feasible);
    CHECK_FALSE(r.bounded);
  }
  CHECK(vertices(arr).empty());
}
