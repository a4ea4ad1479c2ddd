#include "clarke/fixtures.hpp"

#include <algorithm>

namespace clarke {
namespace fixtures {

using poly::Polytope;

namespace {

Polytope make_polygon(const std::vector<std::pair<int, int>>& verts, const std::string& name) {
  std::vector<RatVec> pts;
  for (auto [x, y] : verts) pts.push_back({Rat(x), Rat(y)});
  Polytope p = poly::convex_hull(pts, lattice::Tag::N);
  p.name = name;
  return p;
}

}  // namespace

const std::vector<Polytope>& reflexive_polygons() {
  static const std::vector<Polytope> polygons = [] {
    std::vector<Polytope> v;
    v.push_back(make_polygon({{1, 0}, {0, 1}, {-1, -1}}, "R01"));
    v.push_back(make_polygon({{1, 0}, {0, 1}, {-1, -2}}, "R02"));
    v.push_back(make_polygon({{-1, -1}, {-1, 0}, {0, -1}, {1, 1}}, "R03"));
    v.push_back(make_polygon({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}, "R04"));
    v.push_back(make_polygon({{-1, -1}, {-1, 0}, {0, 1}, {1, -1}}, "R05"));
    v.push_back(make_polygon({{-1, -1}, {-1, 0}, {0, -1}, {0, 1}, {1, 0}}, "R06"));
    v.push_back(make_polygon({{1, 0}, {0, 1}, {-2, -3}}, "R07"));
    v.push_back(make_polygon({{-1, -1}, {-1, 0}, {1, -1}, {1, 1}}, "R08"));
    v.push_back(make_polygon({{-1, -1}, {-1, 0}, {0, 1}, {1, -1}, {1, 0}}, "R09"));
    v.push_back(make_polygon({{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}}, "R10"));
    v.push_back(make_polygon({{-2, -1}, {-1, -1}, {1, 0}, {1, 2}}, "R11"));
    v.push_back(make_polygon({{-1, -1}, {-1, 0}, {0, 1}, {1, -1}, {1, 1}}, "R12"));
    v.push_back(make_polygon({{-2, -1}, {0, 1}, {2, -1}}, "R13"));
    v.push_back(make_polygon({{-2, -1}, {0, -1}, {1, 0}, {1, 2}}, "R14"));
    v.push_back(make_polygon({{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}, "R15"));
    v.push_back(make_polygon({{2, -1}, {-1, 2}, {-1, -1}}, "R16"));
    return v;
  }();
  return polygons;
}

Polytope segment() {
  Polytope p = poly::convex_hull({{Rat(-1)}, {Rat(1)}}, lattice::Tag::N);
  p.name = "segment";
  return p;
}

bool unimodular_equivalent(const Polytope& a, const Polytope& b) {
  if (a.rank != 2 || b.rank != 2) throw InputError("unimodular_equivalent: rank-2 only");
  auto ba = poly::boundary_lattice_points(a);
  auto bb = poly::boundary_lattice_points(b);
  if (ba.size() != bb.size()) return false;
  if (poly::normalized_volume(a) != poly::normalized_volume(b)) return false;
  std::set<IntVec> target(bb.begin(), bb.end());
  for (const auto& u : bb)
    for (const auto& v : bb) {
      if (u == v) continue;
      if (abs(u[0] * v[1] - u[1] * v[0]) != 1) continue;
      for (const auto& a1 : ba)
        for (const auto& a2 : ba) {
          if (a1 == a2) continue;
          if (a1[0] * a2[1] - a1[1] * a2[0] != 1) continue;
          // M [a1 a2] = [u v] with det[a1 a2] = 1
          Int m00 = u[0] * a2[1] - v[0] * a1[1];
          Int m01 = -u[0] * a2[0] + v[0] * a1[0];
          Int m10 = u[1] * a2[1] - v[1] * a1[1];
          Int m11 = -u[1] * a2[0] + v[1] * a1[0];
          bool all = true;
          for (const auto& q : ba) {
            IntVec img = {m00 * q[0] + m01 * q[1], m10 * q[0] + m11 * q[1]};
            if (!target.count(img)) { all = false; break; }
          }
          if (all) return true;
        }
    }
  return false;
}

int polygon_class(const Polytope& p) {
  const auto& all = reflexive_polygons();
  for (size_t i = 0; i < all.size(); ++i)
    if (unimodular_equivalent(all[i], p)) return static_cast<int>(i);
  return -1;
}

fan::StackyFan p1_total_space_rooted() {
  fan::Fan base = fan::make_fan(1, lattice::Tag::N, {{{Int(1)}}, {{Int(-1)}}});
  fan::Fan total = fan::cayley_fan(base, {{Int(2), Int(2)}});
  fan::StackyFan s = fan::trivial_stacky(total);
  s.beta[total.ray_index({Int(0), Int(1)})] = 2;
  s.fan.name = "p1-total-space-rooted";
  return s;
}

fan::StackyFan p1_dual_total_space() {
  fan::Fan base = fan::make_fan(1, lattice::Tag::M, {{{Int(1)}}, {{Int(-1)}}});
  fan::Fan total = fan::cayley_fan(base, {{Int(1), Int(1)}});
  fan::StackyFan s = fan::trivial_stacky(total);
  s.fan.name = "p1-dual-total-space";
  return s;
}

nef::NefPartition segment_k1() {
  return nef::validate_nef_partition(segment(), {{0, 1}});
}

nef::NefPartition segment_k2() {
  // vertex order in the hull is (-1) then (1)
  return nef::validate_nef_partition(segment(), {{1}, {0}});
}

nef::NefPartition cross_axis_k2() {
  Polytope cross = reflexive_polygons()[3];  // conv(+-e1, +-e2)
  // vertices sorted: (-1,0),(0,-1),(0,1),(1,0); axis classes {x}, {y}
  return nef::validate_nef_partition(cross, {{0, 3}, {1, 2}});
}

std::vector<TransitionFixture> transition_pairs() {
  const auto& R = reflexive_polygons();
  std::vector<TransitionFixture> out;
  auto seg = segment();
  Polytope dii = poly::cayley_polytope({poly::polar_dual(seg)}, {Int(1)});
  Polytope dic = poly::cayley_polytope({poly::polar_dual(seg)}, {Int(2)});
  dii.name = "segment-lift";
  dic.name = "segment-lift-wide";
  out.push_back({"segment-case", dii, dic});
  out.push_back({"quadric-in-square", R[3], R[14]});       // cross inside square
  out.push_back({"quadric-in-cubic-dual", R[3], R[15]});   // cross inside the b=9 triangle
  out.push_back({"cubic-in-cubic-dual", R[0], R[15]});     // simplex inside its polar
  out.push_back({"cubic-in-square", R[0], R[14]});
  out.push_back({"square-self", R[14], R[14]});            // equality case
  out.push_back({"cross-self", R[3], R[3]});
  return out;
}

}  // namespace fixtures
}  // namespace clarke
