#ifndef CLARKE_LP_HPP
#define CLARKE_LP_HPP

#include <optional>

#include "clarke/numeric.hpp"

namespace clarke {
namespace lp {

// One linear condition  sum_j coeffs[j] x_j >= rhs  (strict when flagged)
// over free rational variables.
struct Constraint {
  RatVec coeffs;
  Rat rhs;
  bool strict = false;
};

struct Result {
  bool feasible = false;
  RatVec point;  // set when feasible; satisfies every constraint exactly
  // Farkas-style witness when infeasible: multipliers y >= 0, one per
  // constraint, with  sum_i y_i a_i = 0  and either  sum y_i rhs_i > 0, or
  // sum y_i rhs_i = 0 with some y_i > 0 on a strict constraint.
  RatVec witness;
};

// Exact rational simplex with Bland's rule; strict constraints handled by
// maximizing a slack bounded by 1. Both outcomes are verified by
// substitution before returning.
Result feasible(const std::vector<Constraint>& cons, int num_vars);

}  // namespace lp
}  // namespace clarke

#endif
