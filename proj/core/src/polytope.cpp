#include "clarke/polytope.hpp"

#include <algorithm>
#include <set>

namespace clarke {
namespace poly {

using lattice::dot;
using lattice::IntMatrix;
using lattice::rank_rational;
using lattice::solve_rational;

namespace {

std::vector<RatVec> nullspace(const std::vector<RatVec>& rows, int cols) {
  std::vector<RatVec> m = rows;
  std::vector<int> pivot_of_col(cols, -1);
  size_t r = 0;
  for (int c = 0; c < cols && r < m.size(); ++c) {
    size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[r], m[p]);
    Rat inv = m[r][c];
    for (int j = 0; j < cols; ++j) m[r][j] /= inv;
    for (size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (int j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivot_of_col[c] = static_cast<int>(r);
    ++r;
  }
  std::vector<RatVec> basis;
  for (int c = 0; c < cols; ++c) {
    if (pivot_of_col[c] >= 0) continue;
    RatVec x(cols, Rat(0));
    x[c] = 1;
    for (int j = 0; j < cols; ++j)
      if (pivot_of_col[j] >= 0) x[j] = -m[pivot_of_col[j]][c];
    basis.push_back(x);
  }
  return basis;
}

RatVec sub(const RatVec& a, const RatVec& b) {
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

// Columns form a basis of the direction space; coords(x) solves D c = x - p0.
struct AffineFrame {
  RatVec anchor;
  std::vector<RatVec> dirs;  // each ambient-sized
  int ambient = 0;

  int dim() const { return static_cast<int>(dirs.size()); }

  std::optional<RatVec> coords(const RatVec& x) const {
    std::vector<RatVec> rows(ambient, RatVec(dirs.size()));
    for (int i = 0; i < ambient; ++i)
      for (size_t j = 0; j < dirs.size(); ++j) rows[i][j] = dirs[j][i];
    return solve_rational(rows, sub(x, anchor));
  }

  bool in_hull(const RatVec& x) const {
    std::vector<RatVec> rows;
    for (const auto& d : dirs) rows.push_back(d);
    rows.push_back(sub(x, anchor));
    return rank_rational(rows) == dim();
  }
};

AffineFrame affine_frame(const std::vector<RatVec>& pts, int ambient) {
  AffineFrame f;
  f.ambient = ambient;
  f.anchor = pts[0];
  std::vector<RatVec> rows;
  for (size_t i = 1; i < pts.size(); ++i) {
    RatVec d = sub(pts[i], pts[0]);
    rows.push_back(d);
    if (rank_rational(rows) == static_cast<int>(rows.size()))
      f.dirs.push_back(d);
    else
      rows.pop_back();
  }
  return f;
}

Rat det_rat(std::vector<RatVec> m) {
  size_t n = m.size();
  Rat d = 1;
  for (size_t t = 0; t < n; ++t) {
    size_t p = t;
    while (p < n && m[p][t] == 0) ++p;
    if (p == n) return 0;
    if (p != t) { std::swap(m[p], m[t]); d = -d; }
    d *= m[t][t];
    for (size_t i = t + 1; i < n; ++i) {
      if (m[i][t] == 0) continue;
      Rat f = m[i][t] / m[t][t];
      for (size_t j = t; j < n; ++j) m[i][j] -= f * m[t][j];
    }
  }
  return d;
}

// Facets of the hull of full-dimensional mapped points: every (r-1)-dim
// affine span of r points that supports the whole set.
struct MappedFacet {
  RatVec a;
  Rat b;  // a.x <= b, tight on the facet
  bool operator==(const MappedFacet& o) const { return a == o.a && b == o.b; }
  bool operator<(const MappedFacet& o) const {
    if (a != o.a) return a < o.a;
    return b < o.b;
  }
};

void canonicalize(MappedFacet& f) {
  IntVec p = primitive(f.a);
  // recover the positive scale applied by primitive()
  Rat scale;
  for (size_t i = 0; i < f.a.size(); ++i)
    if (f.a[i] != 0) { scale = Rat(p[i]) / f.a[i]; break; }
  if (scale < 0) {  // primitive() may flip sign via gcd; keep orientation
    for (Int& x : p) x = -x;
    scale = -scale;
  }
  for (size_t i = 0; i < f.a.size(); ++i) f.a[i] = Rat(p[i]);
  f.b *= scale;
}

std::vector<MappedFacet> brute_facets(const std::vector<RatVec>& pts, int r) {
  std::set<MappedFacet> out;
  size_t n = pts.size();
  if (r == 1) {
    Rat lo = pts[0][0], hi = pts[0][0];
    for (const auto& p : pts) { lo = std::min(lo, p[0]); hi = std::max(hi, p[0]); }
    out.insert({{Rat(1)}, hi});
    out.insert({{Rat(-1)}, -lo});
    return {out.begin(), out.end()};
  }
  std::vector<int> idx(r);
  // iterate over r-subsets
  std::vector<int> c(r);
  for (int i = 0; i < r; ++i) c[i] = i;
  auto advance = [&]() -> bool {
    int i = r - 1;
    while (i >= 0 && c[i] == static_cast<int>(n) - r + i) --i;
    if (i < 0) return false;
    ++c[i];
    for (int j = i + 1; j < r; ++j) c[j] = c[j - 1] + 1;
    return true;
  };
  if (static_cast<int>(n) < r) return {};
  do {
    std::vector<RatVec> rows;
    for (int i = 1; i < r; ++i) rows.push_back(sub(pts[c[i]], pts[c[0]]));
    if (rank_rational(rows) != r - 1) continue;
    auto ns = nullspace(rows, r);
    if (ns.size() != 1) continue;
    RatVec a = ns[0];
    Rat b = dot(a, pts[c[0]]);
    bool le = true, ge = true;
    for (const auto& p : pts) {
      Rat v = dot(a, p);
      if (v > b) le = false;
      if (v < b) ge = false;
      if (!le && !ge) break;
    }
    if (!le && !ge) continue;
    if (ge && !le) {
      for (Rat& x : a) x = -x;
      b = -b;
    }
    MappedFacet f{a, b};
    canonicalize(f);
    out.insert(f);
  } while (advance());
  return {out.begin(), out.end()};
}

}  // namespace

bool Polytope::contains(const RatVec& x) const {
  for (const auto& e : span_eqs)
    if (dot(e.normal, x) != e.value) return false;
  for (const auto& f : facets)
    if (dot(f.normal, x) < -f.offset) return false;
  return dim >= 0;
}

bool Polytope::contains_strictly(const RatVec& x) const {
  if (!full_dimensional()) return false;
  for (const auto& f : facets)
    if (dot(f.normal, x) <= -f.offset) return false;
  return true;
}

bool Polytope::is_lattice_polytope() const {
  for (const auto& v : vertices)
    for (const auto& q : v)
      if (!is_integral(q)) return false;
  return true;
}

Polytope convex_hull(const std::vector<RatVec>& points, Tag tag) {
  if (points.empty()) throw InputError("convex_hull: empty point list");
  int rank = static_cast<int>(points[0].size());
  for (const auto& p : points)
    if (static_cast<int>(p.size()) != rank) throw InputError("convex_hull: mixed ranks");

  std::vector<RatVec> pts = points;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  Polytope poly;
  poly.rank = rank;
  poly.tag = tag;

  AffineFrame frame = affine_frame(pts, rank);
  int r = frame.dim();
  poly.dim = r;

  // affine-hull equations (lower-dimensional case)
  if (r < rank) {
    std::vector<RatVec> rows;
    for (const auto& d : frame.dirs) rows.push_back(d);
    if (rows.empty()) rows.push_back(RatVec(rank, Rat(0)));
    for (const auto& w : nullspace(rows, rank)) {
      IntVec n = primitive(w);
      for (const Int& x : n) {
        if (x == 0) continue;
        if (x < 0)
          for (Int& y : n) y = -y;
        break;
      }
      Rat val = dot(n, frame.anchor);
      poly.span_eqs.push_back({n, val});
    }
    std::sort(poly.span_eqs.begin(), poly.span_eqs.end());
  }

  if (r == 0) {
    poly.vertices = {pts[0]};
    return poly;
  }

  std::vector<RatVec> mapped;
  for (const auto& p : pts) mapped.push_back(*frame.coords(p));

  auto mfacets = brute_facets(mapped, r);

  // vertices: points whose tight facet normals span the mapped space
  for (size_t i = 0; i < pts.size(); ++i) {
    std::vector<RatVec> tight;
    for (const auto& f : mfacets)
      if (dot(f.a, mapped[i]) == f.b) tight.push_back(f.a);
    if (rank_rational(tight) == r) poly.vertices.push_back(pts[i]);
  }
  std::sort(poly.vertices.begin(), poly.vertices.end());

  // transport facet functionals back to the ambient space
  std::vector<RatVec> dtr(frame.dim(), RatVec(rank));
  for (int j = 0; j < frame.dim(); ++j)
    for (int i = 0; i < rank; ++i) dtr[j][i] = frame.dirs[j][i];
  for (const auto& mf : mfacets) {
    auto w = solve_rational(dtr, mf.a);
    if (!w) throw MathError("convex_hull: facet transport failed");
    // mf.a . coords(x) <= mf.b  <=>  w.x <= mf.b + w.anchor
    Rat beta = mf.b + dot(*w, frame.anchor);
    RatVec neg(rank);
    for (int i = 0; i < rank; ++i) neg[i] = -(*w)[i];
    IntVec n = primitive(neg);
    Rat scale;
    for (int i = 0; i < rank; ++i)
      if (neg[i] != 0) { scale = Rat(n[i]) / neg[i]; break; }
    if (scale < 0) {
      for (Int& x : n) x = -x;
      scale = -scale;
    }
    poly.facets.push_back({n, beta * scale});
  }
  std::sort(poly.facets.begin(), poly.facets.end());
  return poly;
}

Polytope convex_hull_lattice(const std::vector<IntVec>& points, Tag tag) {
  std::vector<RatVec> pts;
  pts.reserve(points.size());
  for (const auto& p : points) pts.push_back(to_rat(p));
  return convex_hull(pts, tag);
}

Polytope polar_dual(const Polytope& p) {
  if (!p.full_dimensional()) throw MathError("polar_dual: polytope not full-dimensional");
  RatVec zero(p.rank, Rat(0));
  if (!p.contains_strictly(zero)) throw MathError("polar_dual: origin not interior");
  std::vector<RatVec> verts;
  for (const auto& f : p.facets) {
    RatVec v(p.rank);
    for (int i = 0; i < p.rank; ++i) v[i] = Rat(f.normal[i]) / f.offset;
    verts.push_back(v);
  }
  return convex_hull(verts, lattice::dual_tag(p.tag));
}

bool is_reflexive(const Polytope& p) {
  RatVec zero(p.rank, Rat(0));
  if (!p.full_dimensional() || !p.contains_strictly(zero))
    throw MathError("is_reflexive: needs full dimension and interior origin");
  if (!p.is_lattice_polytope()) return false;
  return polar_dual(p).is_lattice_polytope();
}

std::vector<IntVec> lattice_points(const Polytope& p) {
  std::vector<Int> lo(p.rank), hi(p.rank);
  for (int i = 0; i < p.rank; ++i) {
    Rat mn = p.vertices[0][i], mx = p.vertices[0][i];
    for (const auto& v : p.vertices) {
      mn = std::min(mn, v[i]);
      mx = std::max(mx, v[i]);
    }
    lo[i] = rat_ceil(mn);
    hi[i] = rat_floor(mx);
  }
  std::vector<IntVec> out;
  IntVec cur(p.rank);
  RatVec curq(p.rank);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == p.rank) {
      if (p.contains(curq)) out.push_back(cur);
      return;
    }
    for (Int x = lo[i]; x <= hi[i]; ++x) {
      cur[i] = x;
      curq[i] = Rat(x);
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;  // lexicographic by construction
}

std::vector<IntVec> boundary_lattice_points(const Polytope& p) {
  std::vector<IntVec> out;
  for (const auto& m : lattice_points(p)) {
    RatVec q = to_rat(m);
    bool strict = p.full_dimensional() && p.contains_strictly(q);
    if (!strict) out.push_back(m);
  }
  return out;
}

std::vector<IntVec> interior_lattice_points(const Polytope& p) {
  std::vector<IntVec> out;
  for (const auto& m : lattice_points(p))
    if (p.contains_strictly(to_rat(m))) out.push_back(m);
  return out;
}

Polytope minkowski_sum(const Polytope& a, const Polytope& b) {
  if (a.rank != b.rank || a.tag != b.tag)
    throw InputError("minkowski_sum: lattice mismatch");
  std::vector<RatVec> pts;
  for (const auto& u : a.vertices)
    for (const auto& v : b.vertices) {
      RatVec s(a.rank);
      for (int i = 0; i < a.rank; ++i) s[i] = u[i] + v[i];
      pts.push_back(s);
    }
  return convex_hull(pts, a.tag);
}

Polytope dilate(const Polytope& p, const Int& factor) {
  if (factor <= 0) throw InputError("dilate: factor must be positive");
  std::vector<RatVec> pts;
  for (const auto& v : p.vertices) {
    RatVec s(p.rank);
    for (int i = 0; i < p.rank; ++i) s[i] = v[i] * Rat(factor);
    pts.push_back(s);
  }
  return convex_hull(pts, p.tag);
}

Polytope cayley_polytope(const std::vector<Polytope>& parts, const std::vector<Int>& scales) {
  if (parts.empty()) throw InputError("cayley_polytope: no parts");
  if (parts.size() != scales.size()) throw InputError("cayley_polytope: scales length mismatch");
  int rank = parts[0].rank;
  Tag tag = parts[0].tag;
  int k = static_cast<int>(parts.size());
  for (const auto& q : parts)
    if (q.rank != rank || q.tag != tag) throw InputError("cayley_polytope: parts in different lattices");
  for (const auto& s : scales)
    if (s <= 0) throw InputError("cayley_polytope: scales must be positive");
  std::vector<RatVec> pts;
  for (int i = 0; i < k; ++i) {
    for (const auto& v : parts[i].vertices) {
      RatVec w(rank + k, Rat(0));
      for (int j = 0; j < rank; ++j) w[j] = v[j] * Rat(scales[i]);
      w[rank + i] = 1;
      pts.push_back(w);
    }
    RatVec w(rank + k, Rat(0));
    w[rank + i] = -1;
    pts.push_back(w);
  }
  return convex_hull(pts, tag);
}

Polytope from_inequalities(int rank, Tag tag, const std::vector<Facet>& facets) {
  size_t n = facets.size();
  if (static_cast<int>(n) < rank) throw InputError("from_inequalities: too few constraints");
  std::vector<RatVec> pts;
  std::vector<int> c(rank);
  for (int i = 0; i < rank; ++i) c[i] = i;
  auto advance = [&]() -> bool {
    int i = rank - 1;
    while (i >= 0 && c[i] == static_cast<int>(n) - rank + i) --i;
    if (i < 0) return false;
    ++c[i];
    for (int j = i + 1; j < rank; ++j) c[j] = c[j - 1] + 1;
    return true;
  };
  do {
    std::vector<RatVec> rows;
    RatVec rhs;
    for (int i = 0; i < rank; ++i) {
      rows.push_back(to_rat(facets[c[i]].normal));
      rhs.push_back(-facets[c[i]].offset);
    }
    if (rank_rational(rows) != rank) continue;
    auto x = solve_rational(rows, rhs);
    if (!x) continue;
    bool ok = true;
    for (const auto& f : facets)
      if (dot(f.normal, *x) < -f.offset) { ok = false; break; }
    if (ok) pts.push_back(*x);
  } while (advance());
  if (pts.empty()) throw MathError("from_inequalities: empty region");
  return convex_hull(pts, tag);
}

std::vector<std::vector<int>> placing_cells(const std::vector<RatVec>& pts_in) {
  // lexicographic placing triangulation; every point becomes a vertex
  // because no point lies in the hull of its lexicographic predecessors.
  std::vector<int> order(pts_in.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return pts_in[a] < pts_in[b]; });

  std::vector<int> used;  // insertion order
  std::vector<std::vector<int>> cells;

  auto current_frame = [&]() {
    std::vector<RatVec> ps;
    for (int i : used) ps.push_back(pts_in[i]);
    return affine_frame(ps, static_cast<int>(pts_in[0].size()));
  };

  for (int pi : order) {
    if (used.empty()) {
      used.push_back(pi);
      cells.push_back({pi});
      continue;
    }
    AffineFrame f = current_frame();
    if (!f.in_hull(pts_in[pi])) {
      // dimension jump: cone every cell over the new point
      for (auto& c : cells) c.push_back(pi);
      used.push_back(pi);
      continue;
    }
    int r = f.dim();
    // boundary facets of the triangulated ball (appear in exactly one cell)
    std::map<std::vector<int>, std::vector<int>> owner;  // facet -> owning cells' opposite vertex
    for (const auto& c : cells)
      for (size_t drop = 0; drop < c.size(); ++drop) {
        std::vector<int> fct;
        for (size_t j = 0; j < c.size(); ++j)
          if (j != drop) fct.push_back(c[j]);
        std::sort(fct.begin(), fct.end());
        owner[fct].push_back(c[drop]);
      }
    RatVec pm = *f.coords(pts_in[pi]);
    for (const auto& [fct, opp] : owner) {
      if (opp.size() != 1) continue;
      // supporting hyperplane of the facet in mapped coordinates
      std::vector<RatVec> rows;
      RatVec base = *f.coords(pts_in[fct[0]]);
      for (size_t i = 1; i < fct.size(); ++i) rows.push_back(sub(*f.coords(pts_in[fct[i]]), base));
      auto ns = nullspace(rows, r);
      if (ns.size() != 1) continue;
      RatVec a = ns[0];
      Rat b = dot(a, base);
      Rat w = dot(a, *f.coords(pts_in[opp[0]]));
      if (w > b) {
        for (Rat& x : a) x = -x;
        b = -b;
        w = -w;
      }
      if (dot(a, pm) > b) {  // strictly visible
        std::vector<int> nc = fct;
        nc.push_back(pi);
        std::sort(nc.begin(), nc.end());
        cells.push_back(nc);
      }
    }
    used.push_back(pi);
  }
  for (auto& c : cells) std::sort(c.begin(), c.end());
  std::sort(cells.begin(), cells.end());
  return cells;
}

std::vector<RatVec> affine_coordinates(const std::vector<RatVec>& pts) {
  if (pts.empty()) return {};
  AffineFrame f = affine_frame(pts, static_cast<int>(pts[0].size()));
  std::vector<RatVec> out;
  for (const auto& p : pts) out.push_back(*f.coords(p));
  return out;
}

std::vector<RatVec> lattice_affine_coordinates(const std::vector<IntVec>& pts) {
  if (pts.empty()) return {};
  int rank = static_cast<int>(pts[0].size());
  std::vector<IntVec> dirs;
  for (size_t i = 1; i < pts.size(); ++i) {
    IntVec d(rank);
    for (int j = 0; j < rank; ++j) d[j] = pts[i][j] - pts[0][j];
    dirs.push_back(d);
  }
  std::vector<IntVec> basis;
  if (!dirs.empty()) basis = lattice::saturation_basis(lattice::IntMatrix::from_cols(dirs));
  std::vector<RatVec> rows(rank, RatVec(basis.size()));
  for (int i = 0; i < rank; ++i)
    for (size_t j = 0; j < basis.size(); ++j) rows[i][j] = Rat(basis[j][i]);
  std::vector<RatVec> out;
  for (const auto& p : pts) {
    RatVec rhs(rank);
    for (int j = 0; j < rank; ++j) rhs[j] = Rat(p[j] - pts[0][j]);
    auto c = solve_rational(rows, rhs);
    if (!c) throw MathError("lattice_affine_coordinates: point outside affine span");
    out.push_back(*c);
  }
  return out;
}

Int normalized_volume(const Polytope& p) {
  if (!p.full_dimensional()) throw MathError("normalized_volume: full-dimensional polytopes only");
  auto cells = placing_cells(p.vertices);
  Rat total = 0;
  for (const auto& c : cells) {
    if (static_cast<int>(c.size()) != p.rank + 1) continue;
    std::vector<RatVec> m;
    for (size_t i = 1; i < c.size(); ++i) m.push_back(sub(p.vertices[c[i]], p.vertices[c[0]]));
    Rat d = det_rat(m);
    total += d < 0 ? -d : d;
  }
  if (!is_integral(total)) throw MathError("normalized_volume: non-integral result");
  return numerator(total);
}

NewtonLevel newton_level(const Polytope& p) {
  if (!p.full_dimensional()) throw MathError("newton_level: polytope not full-dimensional");
  NewtonLevel nl;
  nl.polytope = p;
  RatVec zero(p.rank, Rat(0));
  nl.zero_interior = p.contains_strictly(zero);
  if (!nl.zero_interior) {
    bool vertex = std::any_of(p.vertices.begin(), p.vertices.end(),
                              [&](const RatVec& v) { return v == zero; });
    if (!vertex) throw MathError("newton_level: origin must be interior or a vertex");
  }
  return nl;
}

std::optional<Rat> NewtonLevel::level(const RatVec& x) const {
  Rat best = 0;
  for (const auto& f : polytope.facets) {
    Rat v = dot(f.normal, x);
    if (f.offset == 0) {
      if (v < 0) return std::nullopt;  // outside cone(p)
      continue;
    }
    Rat t = -v / f.offset;
    if (t > best) best = t;
  }
  return best;
}

std::optional<Rat> NewtonLevel::level(const IntVec& x) const { return level(to_rat(x)); }

std::map<Rat, Int> nu_weighted_count(const NewtonLevel& nl, const std::vector<Rat>& levels,
                                     const Int& truncation) {
  if (truncation < 1) throw InputError("nu_weighted_count: truncation must be >= 1");
  std::map<Rat, Int> out;
  for (const Rat& l : levels) out[l] = 0;
  Polytope big = dilate(nl.polytope, truncation);
  for (const auto& m : lattice_points(big)) {
    auto l = nl.level(m);
    if (!l) continue;
    auto it = out.find(*l);
    if (it != out.end()) ++it->second;
  }
  return out;
}

}  // namespace poly
}  // namespace clarke
