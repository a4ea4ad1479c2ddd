#ifndef CLARKE_FAN_HPP
#define CLARKE_FAN_HPP

#include <map>
#include <optional>
#include <set>

#include "clarke/polytope.hpp"

namespace clarke {
namespace fan {

using lattice::Tag;

// Cones are sorted lists of indices into the owning fan's ray table.
using ConeKey = std::vector<int>;

struct PropertyRecord {
  std::optional<bool> simplicial, unimodular, gorenstein, quasiprojective, convex, complete;
  // Gorenstein witnesses m_c per maximal cone (parallel to maximal_cones).
  std::vector<IntVec> gorenstein_witnesses;
  // strictly convex piecewise-linear certificate: value per ray
  RatVec quasiproj_heights;
  std::string failure;  // human-readable locus of the first failure
};

struct Fan {
  int rank = 0;
  Tag tag = Tag::N;
  std::vector<IntVec> rays;       // primitive, deduplicated
  std::vector<ConeKey> maximal_cones;
  std::set<ConeKey> cones;        // all faces, including {} (the zero cone)
  PropertyRecord props;
  std::string name;

  int ray_index(const IntVec& r) const;
  bool has_cone(const ConeKey& c) const { return cones.count(c) > 0; }
  std::vector<IntVec> cone_rays(const ConeKey& c) const;
};

struct StackyFan {
  Fan fan;
  std::vector<Int> beta;  // positive multiplier per ray

  IntVec extended_ray(int i) const;
  std::vector<IntVec> extended_cone_rays(const ConeKey& c) const;
};

StackyFan trivial_stacky(const Fan& f);

// Builds a fan from maximal cones given as ray vectors; faces are closed
// over automatically.
Fan make_fan(int rank, Tag tag, const std::vector<std::vector<IntVec>>& maximal_cones);

// Cones over the proper faces of a polytope with interior origin.
Fan spanning_fan(const poly::Polytope& p);

// The complete fan refining spanning_fan(p) whose rays pass through every
// boundary lattice point (rank <= 2: this is the unique MPCS refinement).
Fan mpcs_fan(const poly::Polytope& p);

// Fan of the total space Tot(sum_j O(-sum_i a_ij E_i)): rays (rho_i, a_i*)
// plus fiber rays (0, e_j), cones lifted from the base.
Fan cayley_fan(const Fan& base, const std::vector<std::vector<Int>>& bundle_coeffs);

struct Triangulation {
  poly::Polytope support;
  std::vector<IntVec> points;            // candidate points actually used
  std::vector<std::vector<int>> cells;   // sorted index lists into points
  RatVec heights;                        // regularity certificate, one per point
  bool unimodular = false;
};

// Lexicographic placing triangulation of the candidate set, with an LP
// height certificate. Candidates must include all vertices of p.
Triangulation regular_triangulation(const poly::Polytope& p, const std::vector<IntVec>& candidates);

// Recomputes the cells induced by the given heights through the
// lifted-lower-hull construction (used to validate certificates).
std::vector<std::vector<int>> lower_hull_cells(const std::vector<IntVec>& points, const RatVec& heights);

// Exact property checks, each with a certificate or a violating cone.
const PropertyRecord& check_properties(StackyFan& f);

bool is_simplicial(const Fan& f, std::string* failure = nullptr);
bool is_unimodular(const Fan& f, std::string* failure = nullptr);
bool is_complete(const Fan& f, std::string* failure = nullptr);
bool is_gorenstein(const StackyFan& f, std::vector<IntVec>* witnesses = nullptr,
                   std::string* failure = nullptr);
bool is_quasiprojective(const Fan& f, RatVec* heights = nullptr, std::string* failure = nullptr);
bool is_convex_support(const StackyFan& f, std::string* failure = nullptr);

}  // namespace fan
}  // namespace clarke

#endif
