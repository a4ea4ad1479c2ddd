#ifndef CLARKE_ORBIFOLD_HPP
#define CLARKE_ORBIFOLD_HPP

#include "clarke/hodge.hpp"

namespace clarke {
namespace orbifold {

// A lattice point g = sum a_rho (beta_rho rho) with all a_rho in (0,1),
// attributed to the unique cone where every coefficient is nonzero.
struct BoxElement {
  fan::ConeKey cone;
  RatVec coefficients;  // parallel to the cone's rays
  IntVec point;
  Rat age;              // sum of the coefficients

  bool operator<(const BoxElement& o) const {
    if (cone != o.cone) return cone < o.cone;
    return point < o.point;
  }
};

// All box elements of all cones, each listed once at its minimal cone.
std::vector<BoxElement> box_elements(const fan::StackyFan& f);

// Sectors are keyed by (cone, point); the untwisted sector uses the zero
// cone and the origin.
struct SectorKey {
  fan::ConeKey cone;
  IntVec point;
  bool operator<(const SectorKey& o) const {
    if (cone != o.cone) return cone < o.cone;
    return point < o.point;
  }
};

SectorKey untwisted_sector(const fan::StackyFan& f);

// Sum of the age-shifted sector diamonds; a diamond must be supplied for
// the untwisted sector and for every box element. Ages must be
// half-integral to fit the diamond grading.
hodge::Diamond orbifold_diamond(const fan::StackyFan& f,
                                const std::map<SectorKey, hodge::Diamond>& sector_diamonds);

struct CdualRow {
  int l2 = 0, m2 = 0;  // doubled indices on the left side
  Int left, right;     // right side read at (d - lambda, mu)
  bool ok = false;
};

struct CdualReport {
  std::vector<CdualRow> rows;
  bool pass = false;
};

// Checks left(lambda, mu) == right(d - lambda, mu) entry by entry.
CdualReport verify_cdual(const hodge::Diamond& left, const hodge::Diamond& right, int d);

}  // namespace orbifold
}  // namespace clarke

#endif
