#include "clarke/fan.hpp"
#include "doctest.h"

using namespace clarke;
using namespace clarke::fan;
using lattice::Tag;
using poly::Polytope;

namespace {

RatVec rv(std::vector<int> v) {
  RatVec r;
  for (int x : v) r.push_back(Rat(x));
  return r;
}

IntVec iv(std::vector<int> v) {
  IntVec r;
  for (int x : v) r.push_back(Int(x));
  return r;
}

Polytope hull(std::vector<std::vector<int>> pts, Tag tag = Tag::N) {
  std::vector<RatVec> p;
  for (auto& q : pts) p.push_back(rv(q));
  return poly::convex_hull(p, tag);
}

Fan p1_fan() { return make_fan(1, Tag::N, {{iv({1})}, {iv({-1})}}); }

Fan p2_fan() {
  return make_fan(2, Tag::N,
                  {{iv({1, 0}), iv({0, 1})}, {iv({0, 1}), iv({-1, -1})}, {iv({-1, -1}), iv({1, 0})}});
}

// the total-space fan from the worked example over the projective line:
// rays (0,1),(1,2),(-1,2), optionally with multiplier two on (0,1)
StackyFan sigma_l(bool root_stack) {
  Fan f = cayley_fan(p1_fan(), {{Int(2), Int(2)}});
  StackyFan s = trivial_stacky(f);
  if (root_stack) s.beta[f.ray_index(iv({0, 1}))] = 2;
  return s;
}

}  // namespace

TEST_CASE("spanning fans") {
  SUBCASE("cross polygon gives the complete fan on four rays") {
    Fan f = spanning_fan(hull({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}));
    CHECK(f.rays.size() == 4);
    CHECK(f.maximal_cones.size() == 4);
    std::string why;
    CHECK(is_complete(f, &why));
  }
  SUBCASE("simplex gives the fan of the projective plane") {
    Fan f = spanning_fan(hull({{1, 0}, {0, 1}, {-1, -1}}));
    CHECK(f.maximal_cones.size() == 3);
    CHECK(f.cones.size() == 1 + 3 + 3);  // zero cone, rays, maximal
    CHECK(is_unimodular(f));
  }
  SUBCASE("rank one") {
    Fan f = spanning_fan(hull({{1}, {-1}}));
    CHECK(f.rays.size() == 2);
    CHECK(is_complete(f));
  }
}

TEST_CASE("face closure invariant") {
  Fan f = p2_fan();
  for (const auto& c : f.cones)
    for (size_t drop = 0; drop < c.size(); ++drop) {
      ConeKey sub;
      for (size_t j = 0; j < c.size(); ++j)
        if (j != drop) sub.push_back(c[j]);
      CHECK(f.has_cone(sub));  // simplicial: all subsets are faces
    }
}

TEST_CASE("cayley fans over the projective line") {
  SUBCASE("O(-2E1-2E2)") {
    Fan f = cayley_fan(p1_fan(), {{Int(2), Int(2)}});
    CHECK(f.rays == std::vector<IntVec>{iv({-1, 2}), iv({0, 1}), iv({1, 2})});
    CHECK(f.maximal_cones.size() == 2);
  }
  SUBCASE("trivial bundle is a product fan") {
    Fan f = cayley_fan(p1_fan(), {{Int(0), Int(0)}});
    CHECK(f.rays == std::vector<IntVec>{iv({-1, 0}), iv({0, 1}), iv({1, 0})});
  }
  SUBCASE("O(-E1-E2)") {
    Fan f = cayley_fan(p1_fan(), {{Int(1), Int(1)}});
    CHECK(f.rays == std::vector<IntVec>{iv({-1, 1}), iv({0, 1}), iv({1, 1})});
  }
}

TEST_CASE("property record for the projective plane") {
  StackyFan s = trivial_stacky(p2_fan());
  auto& p = check_properties(s);
  CHECK(*p.simplicial);
  CHECK(*p.unimodular);
  CHECK(*p.gorenstein);
  CHECK(*p.quasiprojective);
  CHECK(*p.convex);
  CHECK(*p.complete);
  SUBCASE("gorenstein witnesses evaluate to one on all rays") {
    for (size_t ci = 0; ci < s.fan.maximal_cones.size(); ++ci)
      for (const auto& r : s.fan.cone_rays(s.fan.maximal_cones[ci]))
        CHECK(lattice::dot(r, p.gorenstein_witnesses[ci]) == 1);
  }
}

TEST_CASE("the total-space fan is convex only with the root stack") {
  StackyFan plain = sigma_l(false);
  std::string why;
  CHECK_FALSE(is_convex_support(plain, &why));
  StackyFan rooted = sigma_l(true);
  CHECK(is_convex_support(rooted, &why));
  CHECK(is_simplicial(rooted.fan));
  CHECK(is_quasiprojective(rooted.fan));
}

TEST_CASE("completeness: sampled primitive vectors lie in some cone") {
  Fan f = p2_fan();
  for (int x = -3; x <= 3; ++x)
    for (int y = -3; y <= 3; ++y) {
      if (x == 0 && y == 0) continue;
      bool found = false;
      for (const auto& c : f.maximal_cones) {
        // membership in a simplicial cone: nonnegative coordinates
        auto rays = f.cone_rays(c);
        std::vector<RatVec> rows(2, RatVec(rays.size()));
        for (size_t j = 0; j < rays.size(); ++j) {
          rows[0][j] = Rat(rays[j][0]);
          rows[1][j] = Rat(rays[j][1]);
        }
        auto sol = lattice::solve_rational(rows, {Rat(x), Rat(y)});
        if (sol && std::all_of(sol->begin(), sol->end(), [](const Rat& q) { return q >= 0; }))
          found = true;
      }
      CHECK(found);
    }
}

TEST_CASE("regular triangulations") {
  SUBCASE("quadrilateral with five lattice points gives four unimodular triangles") {
    Polytope cross = hull({{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
    auto five = poly::lattice_points(cross);
    REQUIRE(five.size() == 5);
    Triangulation t = regular_triangulation(cross, five);
    CHECK(t.cells.size() == 4);
    CHECK(t.unimodular);
  }
  SUBCASE("reflexive polygons with all lattice points are unimodular") {
    for (auto pts : {std::vector<std::vector<int>>{{1, 0}, {0, 1}, {-1, -1}},
                     std::vector<std::vector<int>>{{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}}) {
      Polytope p = hull(pts);
      Triangulation t = regular_triangulation(p, poly::lattice_points(p));
      CHECK(t.unimodular);
    }
  }
  SUBCASE("a simplex with no interior candidates is its own triangulation") {
    Polytope p = hull({{1, 0}, {0, 1}, {-1, -1}});
    std::vector<IntVec> verts = {iv({1, 0}), iv({0, 1}), iv({-1, -1})};
    Triangulation t = regular_triangulation(p, verts);
    CHECK(t.cells == std::vector<std::vector<int>>{{0, 1, 2}});
  }
  SUBCASE("heights reproduce the cells bit for bit") {
    Polytope p = hull({{1, 1}, {1, -1}, {-1, 1}, {-1, -1}});
    Triangulation t = regular_triangulation(p, poly::lattice_points(p));
    CHECK(lower_hull_cells(t.points, t.heights) == t.cells);
  }
}

TEST_CASE("mpcs fan of the square uses all boundary points") {
  Fan f = mpcs_fan(hull({{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}));
  CHECK(f.rays.size() == 8);
  CHECK(is_unimodular(f));
  CHECK(is_complete(f));
}
