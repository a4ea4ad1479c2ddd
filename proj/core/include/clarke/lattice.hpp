#ifndef CLARKE_LATTICE_HPP
#define CLARKE_LATTICE_HPP

#include <optional>

#include "clarke/numeric.hpp"

namespace clarke {
namespace lattice {

// The two dual lattices; the bilinear pairing is only defined across tags.
enum class Tag { N, M };

inline Tag dual_tag(Tag t) { return t == Tag::N ? Tag::M : Tag::N; }
inline const char* tag_name(Tag t) { return t == Tag::N ? "N" : "M"; }

struct LatticeVector {
  IntVec coords;
  Tag tag = Tag::N;

  size_t rank() const { return coords.size(); }
  bool operator==(const LatticeVector&) const = default;
};

// <n, m> for n in N and m in M (either order); errors on rank/tag mismatch.
Int pair(const LatticeVector& a, const LatticeVector& b);

Int dot(const IntVec& a, const IntVec& b);
Rat dot(const RatVec& a, const RatVec& b);
Rat dot(const IntVec& a, const RatVec& b);

struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<IntVec> a;  // row major

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a(r, IntVec(c, 0)) {}
  static IntMatrix identity(int n);
  static IntMatrix from_rows(const std::vector<IntVec>& rows);
  static IntMatrix from_cols(const std::vector<IntVec>& cols);

  Int& at(int i, int j) { return a[i][j]; }
  const Int& at(int i, int j) const { return a[i][j]; }
  IntVec col(int j) const;
  IntMatrix mul(const IntMatrix& o) const;
  IntMatrix transpose() const;
  bool operator==(const IntMatrix&) const = default;
};

struct SmithNormalForm {
  IntMatrix u, d, v;  // u * a * v == d
  std::vector<Int> invariants() const;  // nonzero diagonal entries, in order
  int rank() const { return static_cast<int>(invariants().size()); }
};

// U*A*V = D, D diagonal with d1 | d2 | ... and U, V unimodular.
SmithNormalForm smith_normal_form(const IntMatrix& a);

Int det(const IntMatrix& a);  // square matrices only

// Solves A x = b over the rationals; returns nullopt if inconsistent.
// For underdetermined systems the solution with free variables set to zero
// under fixed pivoting is returned, so results are deterministic.
std::optional<RatVec> solve_rational(const IntMatrix& a, const RatVec& b);
std::optional<RatVec> solve_rational(const std::vector<RatVec>& a, const RatVec& b);

// Solves A x = b over the integers (via Smith normal form).
std::optional<IntVec> solve_integral(const IntMatrix& a, const IntVec& b);

int rank_rational(const std::vector<RatVec>& rows);

// Basis of the saturation of the column span: span_Q(cols) `intersect` Z^d.
std::vector<IntVec> saturation_basis(const IntMatrix& a);

}  // namespace lattice
}  // namespace clarke

#endif
