#ifndef CLARKE_FIXTURES_HPP
#define CLARKE_FIXTURES_HPP

#include "clarke/nefclarke.hpp"

namespace clarke {
namespace fixtures {

// The sixteen reflexive polygons up to unimodular equivalence, ordered by
// boundary point count (3,4,4,4,5,5,6,6,6,6,7,7,8,8,8,9). Named R01..R16.
const std::vector<poly::Polytope>& reflexive_polygons();

// conv(-1, 1) in rank one.
poly::Polytope segment();

// Exact unimodular-equivalence test (GL(2,Z) on boundary lattice points).
bool unimodular_equivalent(const poly::Polytope& a, const poly::Polytope& b);

// index into reflexive_polygons() of the class of p, or -1
int polygon_class(const poly::Polytope& p);

// The worked pair over the projective line: the multiplier-two total-space
// fan of O(-2E_1-2E_2) on the N side against the fan of O(-E_1-E_2) on the
// M side.
fan::StackyFan p1_total_space_rooted();
fan::StackyFan p1_dual_total_space();

// Nef partition fixtures.
nef::NefPartition segment_k1();        // one class containing both vertices
nef::NefPartition segment_k2();        // classes {+1}, {-1}
nef::NefPartition cross_axis_k2();     // conv(+-e1,+-e2) split along the axes

// Inclusion pairs (delta_ii, delta_i_check) among the bundled polygons for
// the extremal-transition suite, plus the segment-based pair.
struct TransitionFixture {
  std::string name;
  poly::Polytope delta_ii;
  poly::Polytope delta_i_check;
};
std::vector<TransitionFixture> transition_pairs();

}  // namespace fixtures
}  // namespace clarke

#endif
