#include <random>

#include "clarke/lp.hpp"
#include "doctest.h"

using namespace clarke;
using clarke::lp::Constraint;

TEST_CASE("one-variable feasibility") {
  // x >= 0, -x >= -1 (i.e. x <= 1)
  auto r = lp::feasible({{{Rat(1)}, Rat(0), false}, {{Rat(-1)}, Rat(-1), false}}, 1);
  CHECK(r.feasible);
  CHECK(r.point[0] >= 0);
  CHECK(r.point[0] <= 1);
}

TEST_CASE("infeasible pair gives a Farkas witness") {
  // x >= 1 and -x >= 0 (x <= 0)
  auto r = lp::feasible({{{Rat(1)}, Rat(1), false}, {{Rat(-1)}, Rat(0), false}}, 1);
  CHECK_FALSE(r.feasible);
  REQUIRE(r.witness.size() == 2);
  CHECK(r.witness[0] * Rat(1) + r.witness[1] * Rat(-1) == 0);
  CHECK(r.witness[0] * Rat(1) + r.witness[1] * Rat(0) > 0);
}

TEST_CASE("strict constraints are honored") {
  // x > 0, x < 1: feasible strictly
  auto r = lp::feasible({{{Rat(1)}, Rat(0), true}, {{Rat(-1)}, Rat(-1), true}}, 1);
  CHECK(r.feasible);
  CHECK(r.point[0] > 0);
  CHECK(r.point[0] < 1);
  // x >= 0 and x < 0: infeasible only because of strictness
  auto s = lp::feasible({{{Rat(1)}, Rat(0), false}, {{Rat(-1)}, Rat(0), true}}, 1);
  CHECK_FALSE(s.feasible);
}

TEST_CASE("height function LP for the unit square split into two triangles") {
  // square (0,0),(1,0),(0,1),(1,1) triangulated along the main diagonal:
  // heights h with the lift of each triangle below the opposite vertex.
  // cells {0,1,2} and {1,2,3} with points p0=(0,0),p1=(1,0),p2=(0,1),p3=(1,1):
  // p3 above aff(p0,p1,p2): h3 > h1 + h2 - h0; p0 above aff(p1,p2,p3) similarly.
  std::vector<Constraint> cons;
  cons.push_back({{Rat(-1), Rat(1), Rat(1), Rat(-1)}, Rat(0), true});
  cons.push_back({{Rat(-1), Rat(1), Rat(1), Rat(-1)}, Rat(0), true});
  auto r = lp::feasible(cons, 4);
  CHECK(r.feasible);
  CHECK(-r.point[0] + r.point[1] + r.point[2] - r.point[3] > 0);
}

TEST_CASE("random systems: answers verify either way") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> d(-4, 4);
  for (int trial = 0; trial < 60; ++trial) {
    int nv = 1 + trial % 3, m = 1 + (trial * 7) % 5;
    std::vector<Constraint> cons;
    for (int i = 0; i < m; ++i) {
      Constraint c;
      for (int j = 0; j < nv; ++j) c.coeffs.push_back(Rat(d(rng)));
      c.rhs = Rat(d(rng));
      c.strict = (d(rng) > 2);
      cons.push_back(c);
    }
    // feasible() itself verifies points by substitution and witnesses by
    // the Farkas identities, throwing on any inconsistency.
    CHECK_NOTHROW(lp::feasible(cons, nv));
  }
}
