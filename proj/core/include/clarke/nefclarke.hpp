#ifndef CLARKE_NEFCLARKE_HPP
#define CLARKE_NEFCLARKE_HPP

#include "clarke/fan.hpp"

namespace clarke {
namespace nef {

// A validated nef partition of a reflexive polytope: the vertex classes
// S_1..S_k together with the per-cone linear certificates psi_i (value 1 on
// S_i, 0 on the other classes, convex across walls).
struct NefPartition {
  poly::Polytope delta;
  std::vector<std::vector<int>> parts;        // vertex indices per class
  fan::Fan spanning;                          // spanning fan of delta
  std::vector<std::vector<RatVec>> psi;       // psi[i][cone]: functional on max cone
  std::vector<poly::Polytope> delta_parts;    // conv(S_i u {0})

  int k() const { return static_cast<int>(parts.size()); }
  int part_of_vertex(int v) const;
};

NefPartition validate_nef_partition(const poly::Polytope& delta,
                                    const std::vector<std::vector<int>>& parts);

struct DualNefPartition {
  std::vector<poly::Polytope> parts;  // the dual classes (often lower-dimensional)
  poly::Polytope hull;                // conv of their union
};

// Mixed inequality systems; also verifies the two Minkowski-sum identities
// against the polar duals (failure indicates a bug, not bad input).
DualNefPartition dual_nef_partition(const NefPartition& np);

struct ClarkeCertificate {
  bool valid = false;
  std::string failure;
  // the regularity check enumerates extended-ray pairs only; sufficient by
  // bilinearity and convexity of the supports (recorded assumption)
  Int checked_pairs = 0;
};

// Regularity (all extended-ray pairings >= 0) plus convexity of both
// supports; fans must be simplicial and quasiprojective.
struct ClarkePair {
  fan::StackyFan sigma;        // N side
  fan::StackyFan sigma_check;  // M side
  ClarkeCertificate certificate;
};

ClarkePair validate_clarke(fan::StackyFan sigma, fan::StackyFan sigma_check);

// The anticanonical total-space fans of a pair of reflexive polytopes with
// delta_ii inside the polar of delta_i; both come back with unimodular and
// Gorenstein certificates and the Clarke validation already run.
struct TransitionPair {
  poly::Polytope delta_i;               // polar of delta_i_check, N side
  fan::StackyFan fan_i;                 // over delta_i, N x Z
  fan::StackyFan fan_ii;                // over delta_ii, M x Z
  ClarkeCertificate certificate;
};

TransitionPair extremal_transition_pair(const poly::Polytope& delta_ii,
                                        const poly::Polytope& delta_i_check);

// Derived cover bookkeeping shared by the numeric Hodge calculators.
// Numeric evaluation is exact for one-dimensional bases and for bases that
// split as products of one-dimensional factors aligned with the partition.
struct CoverGeometry {
  NefPartition np;
  DualNefPartition dual;
  std::vector<std::vector<IntVec>> ray_parts;   // A_i: nonzero lattice points of delta_i
  std::vector<Int> branch_degree;               // deg B_i = 2 |A_i| on curve factors
  int base_dim = 0;
  bool product_split = false;                   // true: factors along coordinate axes
  std::vector<int> part_axis;                   // product case: axis of each part
  bool numeric_supported = false;               // base_dim == 1 or product of curves

  std::vector<Int> dual_branch_degree;          // same data for the mirror side
};

CoverGeometry build_cover_geometry(const NefPartition& np);

// X^_I: the 2^|I|-cover of the base branched over the B_i, i in I.
struct CoverSpec {
  CoverGeometry geom;
  unsigned index_set = 0;  // bitmask I
  fan::Fan base_fan;       // MPCS fan of the base (rank <= 2)
};

CoverSpec build_cover_spec(const CoverGeometry& geom, unsigned index_set);

// (V_J, g_{2,J} + g_{1,J^c}): factor i carries O(-E_i) and a quadratic
// potential term when i in J, O(-2E_i) and a linear term otherwise.
// `rooted` adds the root-stack structure along the chosen zero sections
// (the total-space models of the mirror construction).
struct LGModel {
  CoverGeometry geom;
  unsigned quadratic = 0;  // bitmask J
  unsigned rooted = 0;     // factors with multiplier-two fiber rays
  fan::StackyFan total_space;
  std::vector<IntVec> potential_support;  // lattice points of the potential
};

LGModel build_lg_model(const CoverGeometry& geom, unsigned quadratic, unsigned rooted = 0);

// The stacky fan with rays rho x a_i e_i (a_i = 2 on J) and rooted fiber
// rays, over the MPCS fan of the base.
fan::StackyFan sigma_family(const CoverGeometry& geom, unsigned doubled_mask);

}  // namespace nef
}  // namespace clarke

#endif
