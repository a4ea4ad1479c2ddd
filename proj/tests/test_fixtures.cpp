#include "clarke/fixtures.hpp"
#include "doctest.h"

using namespace clarke;
using namespace clarke::fixtures;

TEST_CASE("the sixteen polygons are reflexive and pairwise inequivalent") {
  const auto& R = reflexive_polygons();
  REQUIRE(R.size() == 16);
  for (const auto& p : R) {
    CHECK(poly::is_reflexive(p));
    CHECK(poly::interior_lattice_points(p).size() == 1);
  }
  for (size_t i = 0; i < R.size(); ++i)
    for (size_t j = i + 1; j < R.size(); ++j) CHECK_FALSE(unimodular_equivalent(R[i], R[j]));
}

TEST_CASE("boundary point histogram matches the classification") {
  std::map<size_t, int> hist;
  for (const auto& p : reflexive_polygons()) ++hist[poly::boundary_lattice_points(p).size()];
  CHECK(hist == std::map<size_t, int>{{3, 1}, {4, 3}, {5, 2}, {6, 4}, {7, 2}, {8, 3}, {9, 1}});
}

TEST_CASE("the list is closed under polar duality") {
  for (const auto& p : reflexive_polygons()) {
    int cls = polygon_class(poly::polar_dual(p));
    CHECK(cls >= 0);
  }
}

TEST_CASE("twelve boundary points between a polygon and its dual") {
  for (const auto& p : reflexive_polygons()) {
    size_t b = poly::boundary_lattice_points(p).size();
    size_t bd = poly::boundary_lattice_points(poly::polar_dual(p)).size();
    CHECK(b + bd == 12);
  }
}

TEST_CASE("transition fixtures satisfy their inclusions") {
  for (const auto& fx : transition_pairs()) {
    CHECK(poly::is_reflexive(fx.delta_ii));
    CHECK(poly::is_reflexive(fx.delta_i_check));
    for (const auto& v : fx.delta_ii.vertices) CHECK(fx.delta_i_check.contains(v));
  }
  CHECK(transition_pairs().size() >= 6);
}
