#include "clarke/orbifold.hpp"

#include <algorithm>

namespace clarke {
namespace orbifold {

using lattice::IntMatrix;

std::vector<BoxElement> box_elements(const fan::StackyFan& f) {
  std::string why;
  if (!fan::is_simplicial(f.fan, &why))
    throw MathError("box_elements: simplicial stacky fans only: " + why);
  std::vector<BoxElement> out;
  int d = f.fan.rank;
  for (const auto& cone : f.fan.cones) {
    int r = static_cast<int>(cone.size());
    if (r == 0) continue;
    auto gens = f.extended_cone_rays(cone);
    IntMatrix g = IntMatrix::from_cols(gens);
    auto basis = lattice::saturation_basis(g);
    IntMatrix b = IntMatrix::from_cols(basis);
    // express the generators in the saturated lattice basis
    IntMatrix x(r, r);
    for (int j = 0; j < r; ++j) {
      RatVec rhs(d);
      for (int i = 0; i < d; ++i) rhs[i] = Rat(gens[j][i]);
      auto sol = lattice::solve_rational(b, rhs);
      if (!sol) throw MathError("box_elements: generator outside its saturation (bug)");
      for (int i = 0; i < r; ++i) {
        if (!is_integral((*sol)[i])) throw MathError("box_elements: non-integral coordinates (bug)");
        x.at(i, j) = numerator((*sol)[i]);
      }
    }
    // enumerate the finite group Z^r / X Z^r via the Smith form of X
    auto snf = lattice::smith_normal_form(x);
    std::vector<Int> diag = snf.invariants();
    if (static_cast<int>(diag.size()) != r)
      throw MathError("box_elements: degenerate cone matrix");
    // columns of U^-1 give coset representatives U^-1 y
    IntMatrix uinv(r, r);
    for (int j = 0; j < r; ++j) {
      RatVec e(r, Rat(0));
      e[j] = 1;
      auto col = lattice::solve_rational(snf.u, e);
      for (int i = 0; i < r; ++i) uinv.at(i, j) = numerator((*col)[i]);
    }
    IntVec y(r, 0);
    auto rec = [&](auto&& self, int pos) -> void {
      if (pos == r) {
        RatVec z(r, Rat(0));
        for (int i = 0; i < r; ++i)
          for (int j = 0; j < r; ++j) z[i] += Rat(uinv.at(i, j) * y[j]);
        auto a = lattice::solve_rational(x, z);
        if (!a) throw MathError("box_elements: coset solve failed");
        bool interior = true;
        Rat age = 0;
        RatVec frac(r);
        for (int i = 0; i < r; ++i) {
          frac[i] = frac_part((*a)[i]);
          if (frac[i] == 0) interior = false;
          age += frac[i];
        }
        if (interior) {
          BoxElement be;
          be.cone = cone;
          be.coefficients = frac;
          be.age = age;
          IntVec p(d, 0);
          for (int i = 0; i < d; ++i) {
            Rat s = 0;
            for (int j = 0; j < r; ++j) s += frac[j] * Rat(gens[j][i]);
            if (!is_integral(s)) throw MathError("box_elements: non-lattice box point (bug)");
            p[i] = numerator(s);
          }
          be.point = p;
          out.push_back(be);
        }
        return;
      }
      for (Int v = 0; v < diag[pos]; ++v) {
        y[pos] = v;
        self(self, pos + 1);
      }
    };
    rec(rec, 0);
  }
  std::sort(out.begin(), out.end());
  return out;
}

SectorKey untwisted_sector(const fan::StackyFan& f) {
  return SectorKey{{}, IntVec(f.fan.rank, 0)};
}

hodge::Diamond orbifold_diamond(const fan::StackyFan& f,
                                const std::map<SectorKey, hodge::Diamond>& sector_diamonds) {
  hodge::Diamond out;
  auto untw = sector_diamonds.find(untwisted_sector(f));
  if (untw == sector_diamonds.end())
    throw InputError("orbifold_diamond: missing untwisted sector diamond");
  out += untw->second;
  for (const auto& be : box_elements(f)) {
    auto it = sector_diamonds.find(SectorKey{be.cone, be.point});
    if (it == sector_diamonds.end())
      throw InputError("orbifold_diamond: missing sector diamond for a box element");
    Rat doubled = be.age * 2;
    if (!is_integral(doubled))
      throw MathError("orbifold_diamond: age is not half-integral; not representable");
    out += it->second.shifted(static_cast<int>(numerator(doubled)));
  }
  return out;
}

CdualReport verify_cdual(const hodge::Diamond& left, const hodge::Diamond& right, int d) {
  CdualReport rep;
  std::set<std::pair<int, int>> keys;
  for (const auto& [k, v] : left.entries) keys.insert(k);
  for (const auto& [k, v] : right.entries) keys.insert({2 * d - k.first, k.second});
  rep.pass = true;
  for (const auto& k : keys) {
    CdualRow row;
    row.l2 = k.first;
    row.m2 = k.second;
    auto it = left.entries.find(k);
    row.left = it == left.entries.end() ? Int(0) : it->second;
    auto jt = right.entries.find({2 * d - k.first, k.second});
    row.right = jt == right.entries.end() ? Int(0) : jt->second;
    row.ok = row.left == row.right;
    if (!row.ok) rep.pass = false;
    rep.rows.push_back(row);
  }
  return rep;
}

}  // namespace orbifold
}  // namespace clarke
