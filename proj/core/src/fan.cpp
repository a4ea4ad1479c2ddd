#include "clarke/fan.hpp"

#include <algorithm>

#include "clarke/lp.hpp"

namespace clarke {
namespace fan {

using lattice::dot;
using lattice::IntMatrix;
using poly::Polytope;

int Fan::ray_index(const IntVec& r) const {
  auto it = std::find(rays.begin(), rays.end(), r);
  if (it == rays.end()) throw InputError("ray not in fan");
  return static_cast<int>(it - rays.begin());
}

std::vector<IntVec> Fan::cone_rays(const ConeKey& c) const {
  std::vector<IntVec> out;
  for (int i : c) out.push_back(rays[i]);
  return out;
}

IntVec StackyFan::extended_ray(int i) const {
  IntVec r = fan.rays[i];
  for (Int& x : r) x *= beta[i];
  return r;
}

std::vector<IntVec> StackyFan::extended_cone_rays(const ConeKey& c) const {
  std::vector<IntVec> out;
  for (int i : c) out.push_back(extended_ray(i));
  return out;
}

StackyFan trivial_stacky(const Fan& f) {
  StackyFan s;
  s.fan = f;
  s.beta.assign(f.rays.size(), Int(1));
  return s;
}

namespace {

int span_rank(const std::vector<IntVec>& vecs) {
  std::vector<RatVec> rows;
  for (const auto& v : vecs) rows.push_back(to_rat(v));
  return lattice::rank_rational(rows);
}

// All faces of the cone spanned by the given rays (by index into `c`),
// via supporting facets through the apex.
void collect_faces(const std::vector<IntVec>& all_rays, const ConeKey& c, std::set<ConeKey>& out) {
  if (out.count(c)) return;
  out.insert(c);
  if (c.empty()) return;
  std::vector<RatVec> pts;
  pts.push_back(RatVec(all_rays[0].size(), Rat(0)));
  for (int i : c) pts.push_back(to_rat(all_rays[i]));
  Polytope hull = poly::convex_hull(pts, Tag::N);
  for (const auto& f : hull.facets) {
    if (f.offset != 0) continue;  // only facets through the apex
    ConeKey sub;
    for (int i : c)
      if (dot(f.normal, all_rays[i]) == 0) sub.push_back(i);
    std::sort(sub.begin(), sub.end());
    if (sub != c) collect_faces(all_rays, sub, out);
  }
  // a pointed 1-dimensional cone has only the zero cone below it
  out.insert({});
}

// facets (codimension-1 faces) of a single cone
std::vector<ConeKey> cone_facets(const std::vector<IntVec>& all_rays, const ConeKey& c) {
  std::vector<ConeKey> out;
  if (c.empty()) return out;
  std::vector<RatVec> pts;
  pts.push_back(RatVec(all_rays[0].size(), Rat(0)));
  for (int i : c) pts.push_back(to_rat(all_rays[i]));
  Polytope hull = poly::convex_hull(pts, Tag::N);
  std::set<ConeKey> seen;
  for (const auto& f : hull.facets) {
    if (f.offset != 0) continue;
    ConeKey sub;
    for (int i : c)
      if (dot(f.normal, all_rays[i]) == 0) sub.push_back(i);
    std::sort(sub.begin(), sub.end());
    if (sub != c && seen.insert(sub).second) out.push_back(sub);
  }
  return out;
}

}  // namespace

Fan make_fan(int rank, Tag tag, const std::vector<std::vector<IntVec>>& maximal_cones) {
  Fan f;
  f.rank = rank;
  f.tag = tag;
  std::set<IntVec> rayset;
  for (const auto& c : maximal_cones)
    for (const auto& r : c) rayset.insert(primitive(r));
  f.rays.assign(rayset.begin(), rayset.end());
  for (const auto& c : maximal_cones) {
    ConeKey key;
    for (const auto& r : c) key.push_back(f.ray_index(primitive(r)));
    std::sort(key.begin(), key.end());
    key.erase(std::unique(key.begin(), key.end()), key.end());
    f.maximal_cones.push_back(key);
  }
  std::sort(f.maximal_cones.begin(), f.maximal_cones.end());
  f.maximal_cones.erase(std::unique(f.maximal_cones.begin(), f.maximal_cones.end()),
                        f.maximal_cones.end());
  for (const auto& c : f.maximal_cones) collect_faces(f.rays, c, f.cones);
  f.cones.insert({});
  return f;
}

Fan spanning_fan(const Polytope& p) {
  RatVec zero(p.rank, Rat(0));
  if (!p.contains_strictly(zero)) throw MathError("spanning_fan: origin not interior");
  std::vector<std::vector<IntVec>> maxc;
  for (const auto& f : p.facets) {
    std::vector<IntVec> cone;
    for (const auto& v : p.vertices)
      if (dot(f.normal, v) == -f.offset) cone.push_back(primitive(v));
    maxc.push_back(cone);
  }
  return make_fan(p.rank, p.tag, maxc);
}

Fan mpcs_fan(const Polytope& p) {
  RatVec zero(p.rank, Rat(0));
  if (!p.contains_strictly(zero)) throw MathError("mpcs_fan: origin not interior");
  if (!p.is_lattice_polytope()) throw MathError("mpcs_fan: lattice polytopes only");
  if (p.rank == 1) return spanning_fan(p);
  if (p.rank != 2)
    throw MathError("mpcs_fan: rank > 2 not supported (resolutions are only canonical in rank <= 2)");
  std::vector<IntVec> bd = poly::boundary_lattice_points(p);
  // exact counterclockwise angular order starting from the positive x-axis
  auto half = [](const IntVec& v) { return (v[1] < 0 || (v[1] == 0 && v[0] < 0)) ? 1 : 0; };
  std::sort(bd.begin(), bd.end(), [&](const IntVec& a, const IntVec& b) {
    if (half(a) != half(b)) return half(a) < half(b);
    Int cr = a[0] * b[1] - a[1] * b[0];
    return cr > 0;
  });
  std::vector<std::vector<IntVec>> maxc;
  for (size_t i = 0; i < bd.size(); ++i)
    maxc.push_back({bd[i], bd[(i + 1) % bd.size()]});
  return make_fan(2, p.tag, maxc);
}

Fan cayley_fan(const Fan& base, const std::vector<std::vector<Int>>& bundle_coeffs) {
  int m = static_cast<int>(bundle_coeffs.size());
  if (m == 0) throw InputError("cayley_fan: need at least one bundle summand");
  for (const auto& a : bundle_coeffs)
    if (a.size() != base.rays.size()) throw InputError("cayley_fan: coefficient count mismatch");
  int rank = base.rank + m;
  auto lift_ray = [&](int i) {
    IntVec v(rank, 0);
    for (int j = 0; j < base.rank; ++j) v[j] = base.rays[i][j];
    for (int j = 0; j < m; ++j) v[base.rank + j] = bundle_coeffs[j][i];
    return v;
  };
  std::vector<std::vector<IntVec>> maxc;
  for (const auto& c : base.maximal_cones) {
    std::vector<IntVec> cone;
    for (int i : c) cone.push_back(lift_ray(i));
    for (int j = 0; j < m; ++j) {
      IntVec e(rank, 0);
      e[base.rank + j] = 1;
      cone.push_back(e);
    }
    maxc.push_back(cone);
  }
  return make_fan(rank, base.tag, maxc);
}

Triangulation regular_triangulation(const Polytope& p, const std::vector<IntVec>& candidates) {
  if (!p.is_lattice_polytope()) throw MathError("regular_triangulation: lattice polytopes only");
  std::vector<IntVec> pts = candidates;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  for (const auto& v : p.vertices) {
    IntVec iv(p.rank);
    for (int i = 0; i < p.rank; ++i) iv[i] = numerator(v[i]);
    if (!std::binary_search(pts.begin(), pts.end(), iv))
      throw InputError("regular_triangulation: candidates must include all vertices");
  }
  for (const auto& q : pts)
    if (!p.contains(to_rat(q))) throw InputError("regular_triangulation: candidate outside polytope");

  Triangulation t;
  t.support = p;
  t.points = pts;
  std::vector<RatVec> ratpts;
  for (const auto& q : pts) ratpts.push_back(to_rat(q));
  t.cells = poly::placing_cells(ratpts);

  // unimodularity within the saturated lattice of the affine span
  auto mapped = poly::lattice_affine_coordinates(pts);
  int r = mapped.empty() ? 0 : static_cast<int>(mapped[0].size());
  t.unimodular = true;
  for (const auto& c : t.cells) {
    if (static_cast<int>(c.size()) != r + 1) { t.unimodular = false; continue; }
    std::vector<RatVec> m;
    for (size_t i = 1; i < c.size(); ++i) {
      RatVec d(r);
      for (int j = 0; j < r; ++j) d[j] = mapped[c[i]][j] - mapped[c[0]][j];
      m.push_back(d);
    }
    // integer determinant of the lattice simplex
    Rat det = 1;
    {
      std::vector<RatVec> mm = m;
      size_t n = mm.size();
      det = 0;
      if (n) {
        det = 1;
        for (size_t tcol = 0; tcol < n; ++tcol) {
          size_t piv = tcol;
          while (piv < n && mm[piv][tcol] == 0) ++piv;
          if (piv == n) { det = 0; break; }
          if (piv != tcol) { std::swap(mm[piv], mm[tcol]); det = -det; }
          det *= mm[tcol][tcol];
          for (size_t i2 = tcol + 1; i2 < n; ++i2) {
            if (mm[i2][tcol] == 0) continue;
            Rat f = mm[i2][tcol] / mm[tcol][tcol];
            for (size_t j2 = tcol; j2 < n; ++j2) mm[i2][j2] -= f * mm[tcol][j2];
          }
        }
      }
    }
    if (det != 1 && det != -1) t.unimodular = false;
  }

  // regularity certificate: lifted points of each cell must lie strictly
  // below every other lifted point, solved as an exact LP over the heights
  auto coords = poly::affine_coordinates(ratpts);
  int n = static_cast<int>(pts.size());
  std::vector<lp::Constraint> cons;
  for (const auto& c : t.cells) {
    std::vector<RatVec> rows(coords[0].size() + 1, RatVec(c.size()));
    for (size_t i = 0; i < c.size(); ++i) {
      for (size_t j = 0; j < coords[0].size(); ++j) rows[j][i] = coords[c[i]][j];
      rows[coords[0].size()][i] = 1;
    }
    for (int q = 0; q < n; ++q) {
      if (std::find(c.begin(), c.end(), q) != c.end()) continue;
      RatVec rhs;
      for (size_t j = 0; j < coords[0].size(); ++j) rhs.push_back(coords[q][j]);
      rhs.push_back(Rat(1));
      auto lam = lattice::solve_rational(rows, rhs);
      if (!lam) continue;  // q not in the affine span of the cell
      lp::Constraint con;
      con.coeffs.assign(n, Rat(0));
      con.coeffs[q] = 1;
      for (size_t i = 0; i < c.size(); ++i) con.coeffs[c[i]] -= (*lam)[i];
      con.rhs = 0;
      con.strict = true;
      cons.push_back(con);
    }
  }
  auto res = lp::feasible(cons, n);
  if (!res.feasible) throw MathError("regular_triangulation: no height certificate (bug)");
  t.heights = res.point;

  if (lower_hull_cells(t.points, t.heights) != t.cells)
    throw MathError("regular_triangulation: heights fail to reproduce cells");
  return t;
}

std::vector<std::vector<int>> lower_hull_cells(const std::vector<IntVec>& points, const RatVec& heights) {
  if (points.size() != heights.size()) throw InputError("lower_hull_cells: size mismatch");
  std::vector<RatVec> ratpts;
  for (const auto& q : points) ratpts.push_back(to_rat(q));
  auto coords = poly::affine_coordinates(ratpts);
  int r = coords.empty() ? 0 : static_cast<int>(coords[0].size());
  std::vector<RatVec> lifted;
  for (size_t i = 0; i < points.size(); ++i) {
    RatVec v = coords[i];
    v.push_back(heights[i]);
    lifted.push_back(v);
  }
  Polytope hull = poly::convex_hull(lifted, Tag::N);
  if (hull.dim <= r) {
    // affine heights induce the trivial subdivision
    std::vector<int> all(points.size());
    for (size_t i = 0; i < points.size(); ++i) all[i] = static_cast<int>(i);
    return {all};
  }
  std::vector<std::vector<int>> cells;
  for (const auto& f : hull.facets) {
    if (f.normal[r] <= 0) continue;  // keep facets visible from below
    std::vector<int> cell;
    for (size_t i = 0; i < lifted.size(); ++i)
      if (dot(f.normal, lifted[i]) == -f.offset) cell.push_back(static_cast<int>(i));
    std::sort(cell.begin(), cell.end());
    cells.push_back(cell);
  }
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  return cells;
}

bool is_simplicial(const Fan& f, std::string* failure) {
  for (const auto& c : f.maximal_cones)
    if (span_rank(f.cone_rays(c)) != static_cast<int>(c.size())) {
      if (failure) *failure = "non-simplicial cone";
      return false;
    }
  return true;
}

bool is_unimodular(const Fan& f, std::string* failure) {
  if (!is_simplicial(f, failure)) return false;
  for (const auto& c : f.maximal_cones) {
    IntMatrix m = IntMatrix::from_cols(f.cone_rays(c));
    for (const Int& inv : lattice::smith_normal_form(m).invariants())
      if (inv != 1) {
        if (failure) *failure = "cone with lattice index > 1";
        return false;
      }
  }
  return true;
}

bool is_complete(const Fan& f, std::string* failure) {
  if (f.maximal_cones.empty()) {
    if (failure) *failure = "no cones";
    return false;
  }
  for (const auto& c : f.maximal_cones)
    if (span_rank(f.cone_rays(c)) != f.rank) {
      if (failure) *failure = "maximal cone not full-dimensional";
      return false;
    }
  std::map<ConeKey, int> wall_count;
  for (const auto& c : f.maximal_cones)
    for (const auto& w : cone_facets(f.rays, c)) ++wall_count[w];
  for (const auto& [w, n] : wall_count)
    if (n != 2) {
      if (failure) *failure = "boundary wall found";
      return false;
    }
  return true;
}

bool is_gorenstein(const StackyFan& f, std::vector<IntVec>* witnesses, std::string* failure) {
  std::vector<IntVec> ws;
  for (const auto& c : f.fan.maximal_cones) {
    auto rays = f.extended_cone_rays(c);
    IntMatrix m = IntMatrix::from_rows(rays);
    IntVec ones(rays.size(), 1);
    auto sol = lattice::solve_integral(m, ones);
    if (!sol) {
      if (failure) *failure = "cone without integral support hyperplane at level one";
      return false;
    }
    for (const auto& r : rays)
      if (dot(r, *sol) != 1) throw MathError("is_gorenstein: witness verification failed");
    ws.push_back(*sol);
  }
  if (witnesses) *witnesses = ws;
  return true;
}

bool is_quasiprojective(const Fan& f, RatVec* heights, std::string* failure) {
  // strictly convex piecewise-linear support function, found exactly:
  // variables are a value per ray and a linear functional per maximal cone.
  int nray = static_cast<int>(f.rays.size());
  int nmax = static_cast<int>(f.maximal_cones.size());
  int nvars = nray + nmax * f.rank;
  std::vector<lp::Constraint> cons;
  auto mvar = [&](int ci, int j) { return nray + ci * f.rank + j; };
  for (int ci = 0; ci < nmax; ++ci) {
    const auto& c = f.maximal_cones[ci];
    for (int ri = 0; ri < nray; ++ri) {
      bool inside = std::find(c.begin(), c.end(), ri) != c.end();
      lp::Constraint a;
      a.coeffs.assign(nvars, Rat(0));
      for (int j = 0; j < f.rank; ++j) a.coeffs[mvar(ci, j)] = Rat(f.rays[ri][j]);
      a.coeffs[ri] -= 1;  // <m_c, ray> - h_ray
      a.rhs = 0;
      if (inside) {
        lp::Constraint b = a;
        for (auto& x : b.coeffs) x = -x;
        cons.push_back(a);   // >= 0
        cons.push_back(b);   // <= 0
      } else {
        for (auto& x : a.coeffs) x = -x;  // h_ray - <m_c, ray> > 0
        a.strict = true;
        cons.push_back(a);
      }
    }
  }
  auto res = lp::feasible(cons, nvars);
  if (!res.feasible) {
    if (failure) *failure = "no strictly convex support function";
    return false;
  }
  if (heights) heights->assign(res.point.begin(), res.point.begin() + nray);
  return true;
}

bool is_convex_support(const StackyFan& f, std::string* failure) {
  if (f.fan.maximal_cones.size() == 1) return true;
  std::vector<IntVec> all;
  for (const auto& c : f.fan.maximal_cones) {
    if (span_rank(f.fan.cone_rays(c)) != f.fan.rank) {
      if (failure) *failure = "maximal cone not full-dimensional";
      return false;
    }
    for (int i : c) all.push_back(f.extended_ray(i));
  }
  Int cells = 0;
  for (const auto& c : f.fan.maximal_cones) {
    if (c.size() != static_cast<size_t>(f.fan.rank)) {
      if (failure) *failure = "non-simplicial cone";
      return false;
    }
    Int d = lattice::det(IntMatrix::from_cols(f.extended_cone_rays(c)));
    cells += abs(d);
  }
  all.push_back(IntVec(f.fan.rank, 0));
  Polytope hull = poly::convex_hull_lattice(all, f.fan.tag);
  Int vol = poly::normalized_volume(hull);
  if (cells != vol) {
    if (failure) *failure = "support not convex (volume deficit " + Int(vol - cells).str() + ")";
    return false;
  }
  return true;
}

const PropertyRecord& check_properties(StackyFan& f) {
  PropertyRecord& p = f.fan.props;
  std::string why;
  if (!p.simplicial) p.simplicial = is_simplicial(f.fan, &why);
  if (!p.unimodular) p.unimodular = is_unimodular(f.fan, &why);
  if (!p.complete) p.complete = is_complete(f.fan, &why);
  if (!p.gorenstein) p.gorenstein = is_gorenstein(f, &p.gorenstein_witnesses, &why);
  if (!p.quasiprojective) p.quasiprojective = is_quasiprojective(f.fan, &p.quasiproj_heights, &why);
  if (!p.convex) p.convex = is_convex_support(f, &why);
  p.failure = why;
  return p;
}

}  // namespace fan
}  // namespace clarke
