#include "clarke/fixtures.hpp"
#include "doctest.h"

using namespace clarke;
using namespace clarke::nef;
using lattice::Tag;
using poly::Polytope;

namespace {

RatVec rv(std::vector<int> v) {
  RatVec r;
  for (int x : v) r.push_back(Rat(x));
  return r;
}

Polytope hull(std::vector<std::vector<int>> pts, Tag tag = Tag::N) {
  std::vector<RatVec> p;
  for (auto& q : pts) p.push_back(rv(q));
  return poly::convex_hull(p, tag);
}

}  // namespace

TEST_CASE("axis partition of the quadrilateral is a nef partition") {
  NefPartition np = fixtures::cross_axis_k2();
  CHECK(np.k() == 2);
  CHECK(np.delta_parts[0].vertices == std::vector<RatVec>{rv({-1, 0}), rv({1, 0})});
  DualNefPartition d = dual_nef_partition(np);
  CHECK(d.parts[0].vertices == std::vector<RatVec>{rv({-1, 0}), rv({1, 0})});
  CHECK(d.parts[1].vertices == std::vector<RatVec>{rv({0, -1}), rv({0, 1})});
  // the union hull is the quadrilateral again (self-mirror data)
  CHECK(d.hull.vertices == np.delta.vertices);
}

TEST_CASE("trivial partition dualizes to the polar") {
  for (int idx : {0, 3, 14}) {
    Polytope p = fixtures::reflexive_polygons()[idx];
    std::vector<int> all(p.vertices.size());
    for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    NefPartition np = validate_nef_partition(p, {all});
    DualNefPartition d = dual_nef_partition(np);
    CHECK(d.parts[0].same_geometry(poly::polar_dual(p)));
  }
}

TEST_CASE("two-class split of the simplex validates by linear programming") {
  Polytope p = fixtures::reflexive_polygons()[0];  // vertices (-1,-1),(0,1),(1,0)
  NefPartition np = validate_nef_partition(p, {{2}, {0, 1}});
  DualNefPartition d = dual_nef_partition(np);
  CHECK(d.parts.size() == 2);
  // frozen from the inequality system m1 >= -1, m2 >= 0, m1 + m2 <= 0
  CHECK(d.parts[0].vertices == std::vector<RatVec>{rv({-1, 0}), rv({-1, 1}), rv({0, 0})});
}

TEST_CASE("dual of the dual returns the original classes") {
  NefPartition np = fixtures::cross_axis_k2();
  DualNefPartition d = dual_nef_partition(np);
  // rebuild a partition of the dual hull from the dual classes
  std::vector<std::vector<int>> parts(2);
  for (size_t v = 0; v < d.hull.vertices.size(); ++v)
    for (int i = 0; i < 2; ++i)
      for (const auto& w : d.parts[i].vertices)
        if (w == d.hull.vertices[v] && w != RatVec(2, Rat(0))) parts[i].push_back(static_cast<int>(v));
  NefPartition dual_np = validate_nef_partition(d.hull, parts);
  DualNefPartition dd = dual_nef_partition(dual_np);
  for (int i = 0; i < 2; ++i) CHECK(dd.parts[i].same_geometry(np.delta_parts[i]));
}

TEST_CASE("invalid partitions are rejected") {
  Polytope p = fixtures::reflexive_polygons()[3];
  CHECK_THROWS_AS(validate_nef_partition(p, {{0, 1}, {2}}), InputError);     // misses a vertex
  CHECK_THROWS_AS(validate_nef_partition(p, {{0, 1}, {1, 2, 3}}), InputError);
  // splitting two opposite vertices off the hexagon pairs a piece against a
  // negative curve: the convexity certificate must fail
  Polytope hexagon = fixtures::reflexive_polygons()[9];
  CHECK_THROWS_AS(validate_nef_partition(hexagon, {{0, 5}, {1, 2, 3, 4}}), MathError);
}

TEST_CASE("clarke validation of the worked total-space pair") {
  auto pair = validate_clarke(fixtures::p1_total_space_rooted(), fixtures::p1_dual_total_space());
  CHECK(pair.certificate.valid);
  CHECK(pair.certificate.checked_pairs == 9);
  SUBCASE("without the root structure convexity fails") {
    fan::StackyFan plain = fixtures::p1_total_space_rooted();
    for (auto& b : plain.beta) b = 1;
    auto bad = validate_clarke(plain, fixtures::p1_dual_total_space());
    CHECK_FALSE(bad.certificate.valid);
    CHECK(bad.certificate.failure.find("convexity") != std::string::npos);
  }
  SUBCASE("regularity is symmetric") {
    auto swapped = validate_clarke(fixtures::p1_dual_total_space(), fixtures::p1_total_space_rooted());
    CHECK(swapped.certificate.valid);
  }
}

TEST_CASE("batyrev pair over the quadrilateral") {
  // spanning-cone fans of the polygon and its polar, lifted to their
  // anticanonical total spaces, form a Clarke dual pair
  auto t = extremal_transition_pair(fixtures::reflexive_polygons()[3],
                                    fixtures::reflexive_polygons()[3]);
  CHECK(t.certificate.valid);
}

TEST_CASE("sigma family fans over the quadrilateral") {
  CoverGeometry g = build_cover_geometry(fixtures::cross_axis_k2());
  CHECK(g.numeric_supported);
  CHECK(g.product_split);
  SUBCASE("k=2 mirror pair validates") {
    for (unsigned j = 0; j < 4; ++j) {
      fan::StackyFan a = sigma_family(g, j);
      CoverGeometry dual_g = g;  // self-mirror fixture: same geometry on the M side
      fan::StackyFan b = sigma_family(dual_g, 3u & ~j);
      b.fan.tag = lattice::Tag::M;
      auto pair = validate_clarke(a, b);
      CHECK(pair.certificate.valid);
    }
  }
  SUBCASE("negative pairings are caught") {
    fan::Fan a = fan::make_fan(1, lattice::Tag::N, {{{Int(1)}}});
    fan::Fan b = fan::make_fan(1, lattice::Tag::M, {{{Int(-1)}}});
    auto pair = validate_clarke(fan::trivial_stacky(a), fan::trivial_stacky(b));
    CHECK_FALSE(pair.certificate.valid);
    CHECK(pair.certificate.failure.find("regularity") != std::string::npos);
  }
}

TEST_CASE("segment-based transition pair") {
  auto fx = fixtures::transition_pairs()[0];
  auto t = extremal_transition_pair(fx.delta_ii, fx.delta_i_check);
  CHECK(t.certificate.valid);
  CHECK(t.delta_i.vertices == std::vector<RatVec>{rv({-1, 1}), rv({0, -1}), rv({1, 1})});
}

TEST_CASE("cover geometry of the segment fixtures") {
  CoverGeometry g1 = build_cover_geometry(fixtures::segment_k1());
  CHECK(g1.numeric_supported);
  CHECK(g1.branch_degree == std::vector<Int>{Int(4)});
  CHECK(g1.dual_branch_degree == std::vector<Int>{Int(4)});
  CoverGeometry g2 = build_cover_geometry(fixtures::segment_k2());
  CHECK(g2.branch_degree == std::vector<Int>{Int(2), Int(2)});
  CHECK(g2.dual_branch_degree == std::vector<Int>{Int(2), Int(2)});
  SUBCASE("cover spec over the projective line") {
    CoverSpec spec = build_cover_spec(g1, 1);
    CHECK(spec.base_fan.rays.size() == 2);
    CHECK(spec.geom.branch_degree[0] == 4);  // a double cover branched at four points
  }
}

TEST_CASE("lg models over the segment") {
  CoverGeometry g = build_cover_geometry(fixtures::segment_k1());
  SUBCASE("empty quadratic set uses only linear terms on O(-2E)") {
    LGModel m = build_lg_model(g, 0);
    CHECK(m.quadratic == 0);
    // all fiber weights in the potential are one
    for (const auto& q : m.potential_support) CHECK(q[1] == 1);
    // the total space is Tot(O(-2E)): rays (1,2),(-1,2),(0,1)
    CHECK(m.total_space.fan.rays.size() == 3);
  }
  SUBCASE("quadratic model lives on O(-E)") {
    LGModel m = build_lg_model(g, 1);
    for (const auto& q : m.potential_support) CHECK(q[1] == 2);
    CHECK(m.total_space.fan.ray_index({Int(1), Int(1)}) >= 0);
  }
}
