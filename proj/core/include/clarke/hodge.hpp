#ifndef CLARKE_HODGE_HPP
#define CLARKE_HODGE_HPP

#include "clarke/nefclarke.hpp"

namespace clarke {
namespace hodge {

// Sparse table of graded dimensions h^{lambda,mu} = dim gr^lambda H^{lambda+mu}.
// Keys are doubled so that half-integer gradings stay exact integers.
struct Diamond {
  std::map<std::pair<int, int>, Int> entries;  // (2*lambda, 2*mu) -> count

  void add(int l2, int m2, const Int& c);
  Diamond& operator+=(const Diamond& o);
  Diamond shifted(int alpha2) const;  // entries moved by (alpha, alpha)
  Int total() const;
  bool leq(const Diamond& o) const;   // entrywise
  bool operator==(const Diamond& o) const { return entries == o.entries; }
  bool empty() const { return entries.empty(); }
  std::string str() const;
};

Diamond shift(const Diamond& d, int alpha2);
Diamond kunneth(const Diamond& a, const Diamond& b);  // convolution

// h^{p,p} of a smooth complete toric variety from the alternating f-vector.
Diamond toric_diamond(const fan::Fan& f);

// A configuration of complete curves meeting transversally in a smooth
// projective surface: components with geometric genera, intersection points
// as unordered component pairs (repeats allowed: several points per pair).
struct CurveConfig {
  std::vector<Int> genus;
  std::vector<std::pair<int, int>> nodes;

  int component_count() const { return static_cast<int>(genus.size()); }
  int connected_components() const;
  Int loop_count() const;  // cycle rank of the incidence graph
};

// Mixed Hodge numbers gr_F of the configuration itself.
Diamond curve_config_cohomology(const CurveConfig& z);

// H^*_Z(X) for the configuration inside a smooth projective surface
// (through homology of Z with a Tate twist).
Diamond local_cohomology_surface(const CurveConfig& z);

// H^*_Z(X) for n reduced points in a smooth projective curve.
Diamond local_cohomology_points(const Int& n);

// Coinvariant cohomology of the 2^|I| cover of the projective line with the
// given branch degrees (all even): entries (1,0) and (0,1), each of
// dimension (sum deg)/2 - 1. Empty input throws (the invariant part is not
// this function's business).
Diamond ev_coinvariant_p1(const std::vector<Int>& branch_degrees);

// Euler characteristics chi(Omega^p(log B) tensor L^{-1}) on a smooth
// projective toric surface, with B = 2L given by its components; individual
// h^q are never fabricated from these.
struct SurfaceChi {
  std::vector<Rat> chi;  // indexed by p = 0,1,2
  std::string note;
};
SurfaceChi ev_coinvariant_surface_chi(const fan::Fan& surface_fan, const std::vector<Int>& l_class,
                                      const std::vector<std::vector<Int>>& component_classes);

// Irregular Hodge diamond of (V_J, g_{2,J} + g_{1,J^c}) over curve bases or
// products of curves; exact via the direct-sum decomposition.
Diamond lg_diamond(const nef::LGModel& model);

// Orbifold diamond of the rooted total-space models: the plain model
// diamonds of the star strata, shifted by the ages of the fiber sectors.
Diamond lg_orbifold_diamond(const nef::CoverGeometry& geom, unsigned rooted_mask);

// Sector dimensions B_{I-,I0,I+}(shift) evaluated over a cover geometry;
// parts are bitmasks of original indices (merged classes allowed).
struct SectorIndex {
  std::vector<unsigned> coinv, twist, inv;
  int shift2 = 0;
};
Diamond sector_diamond(const nef::CoverGeometry& geom, const SectorIndex& s, bool mirror_side);

// Generic hypersurface of a smooth projective toric surface cut out by the
// monomials of a reflexive polygon contained in the anticanonical polygon:
// smooth irreducible of genus one; the checks guarding the genericity
// assumptions are run exactly.
Diamond transition_hypersurface_diamond(const poly::Polytope& delta_ii,
                                        const poly::Polytope& delta_i);

// Newton-filtration spectrum of a generic Laurent (torus) or convenient
// polynomial (affine) potential with the given Newton polytope.
struct Spectrum {
  std::map<Rat, Int> mult;
  Int total() const;
  bool operator==(const Spectrum& o) const { return mult == o.mult; }
};

Spectrum newton_spectrum(const poly::NewtonLevel& nl);

// Independent brute-force check: linear algebra on the twisted Jacobian
// complex over a truncated monomial basis, with randomized exact rational
// coefficients. Reruns under a second seed and requires agreement.
struct KoszulOptions {
  unsigned seed = 1;
  int truncation = 0;        // 0: choose from the polytope size
  size_t memory_budget_mb = 512;
};

struct KoszulResult {
  Int dimension;
  std::map<Rat, Int> histogram;
  bool stabilized = false;
};

KoszulResult koszul_oracle(const poly::Polytope& newton, const KoszulOptions& opts = {});

}  // namespace hodge
}  // namespace clarke

#endif
