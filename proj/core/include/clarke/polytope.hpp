#ifndef CLARKE_POLYTOPE_HPP
#define CLARKE_POLYTOPE_HPP

#include <map>
#include <string>

#include "clarke/lattice.hpp"

namespace clarke {
namespace poly {

using lattice::Tag;

// sum_i normal[i] x[i] >= -offset; the normal is primitive integral and
// lives in the dual lattice.
struct Facet {
  IntVec normal;
  Rat offset;
  bool operator==(const Facet& o) const { return normal == o.normal && offset == o.offset; }
  bool operator<(const Facet& o) const {
    if (normal != o.normal) return normal < o.normal;
    return offset < o.offset;
  }
};

// w . x == c on the affine hull (used by lower-dimensional polytopes).
struct HullEquation {
  IntVec normal;
  Rat value;
  bool operator==(const HullEquation& o) const { return normal == o.normal && value == o.value; }
  bool operator<(const HullEquation& o) const {
    if (normal != o.normal) return normal < o.normal;
    return value < o.value;
  }
};

// Rational polytope given by its vertex set, with a derived, canonical
// H-representation. Vertices are sorted lexicographically; facets are
// sorted as (normal, offset) pairs, so equality of polytopes is equality
// of the structs.
struct Polytope {
  int rank = 0;          // ambient rank
  Tag tag = Tag::N;
  int dim = -1;          // affine dimension (-1: empty)
  std::vector<RatVec> vertices;
  std::vector<Facet> facets;          // tight on (dim-1)-faces
  std::vector<HullEquation> span_eqs; // empty when full-dimensional
  std::string name;

  bool full_dimensional() const { return dim == rank; }
  bool contains(const RatVec& x) const;
  bool contains_strictly(const RatVec& x) const;  // interior of the hull
  bool is_lattice_polytope() const;
  bool same_geometry(const Polytope& o) const {
    return rank == o.rank && tag == o.tag && vertices == o.vertices;
  }
};

Polytope convex_hull(const std::vector<RatVec>& points, Tag tag);
Polytope convex_hull_lattice(const std::vector<IntVec>& points, Tag tag);

// {m : <n, m> >= -1 for all n in p}; requires 0 interior. Lives in the
// dual lattice.
Polytope polar_dual(const Polytope& p);

bool is_reflexive(const Polytope& p);

// All lattice points, in lexicographic order.
std::vector<IntVec> lattice_points(const Polytope& p);
std::vector<IntVec> boundary_lattice_points(const Polytope& p);
std::vector<IntVec> interior_lattice_points(const Polytope& p);

Polytope minkowski_sum(const Polytope& a, const Polytope& b);
Polytope dilate(const Polytope& p, const Int& factor);

// Conv( scale_i * part_i x e_i  union  0 x -e_i ), in rank + k dimensions.
Polytope cayley_polytope(const std::vector<Polytope>& parts, const std::vector<Int>& scales);

// Vertex enumeration for a bounded H-described region (all d-subsets of
// tight constraint systems); returns the hull of the solutions.
Polytope from_inequalities(int rank, Tag tag, const std::vector<Facet>& facets);

// Normalized volume (rank! times euclidean volume); full-dimensional only.
Int normalized_volume(const Polytope& p);

// Lexicographic placing triangulation of a point set. Returns the maximal
// cells as sorted index lists; every input point is used as a vertex.
std::vector<std::vector<int>> placing_cells(const std::vector<RatVec>& pts);

// Coordinates of each point in a rational basis of the affine span of the
// whole set (first point as origin).
std::vector<RatVec> affine_coordinates(const std::vector<RatVec>& pts);

// Same, but in a lattice basis of the saturated direction lattice, so that
// unimodularity of lattice simplices can be read off determinants.
std::vector<RatVec> lattice_affine_coordinates(const std::vector<IntVec>& pts);

// Piecewise-linear level function: nu(x) = min { t >= 0 : x in t*p }.
// Defined for 0 in the interior, or 0 a vertex ("convenient" one-sided
// supports); nu is linear on each cone over a facet not through 0.
struct NewtonLevel {
  Polytope polytope;
  bool zero_interior = false;

  // nullopt when x lies outside cone(p).
  std::optional<Rat> level(const IntVec& x) const;
  std::optional<Rat> level(const RatVec& x) const;
};

NewtonLevel newton_level(const Polytope& p);

// Counts lattice points with nu(m) == level, for each requested level,
// among points with nu(m) <= truncation.
std::map<Rat, Int> nu_weighted_count(const NewtonLevel& nl, const std::vector<Rat>& levels,
                                     const Int& truncation);

}  // namespace poly
}  // namespace clarke

#endif
