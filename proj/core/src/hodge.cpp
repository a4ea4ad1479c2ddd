#include "clarke/hodge.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

namespace clarke {
namespace hodge {

using lattice::dot;
using poly::Polytope;

void Diamond::add(int l2, int m2, const Int& c) {
  if (c == 0) return;
  auto key = std::make_pair(l2, m2);
  auto it = entries.find(key);
  if (it == entries.end()) it = entries.emplace(key, Int(0)).first;
  it->second += c;
  if (it->second < 0) throw MathError("Diamond: negative multiplicity");
  if (it->second == 0) entries.erase(it);
}

Diamond& Diamond::operator+=(const Diamond& o) {
  for (const auto& [k, v] : o.entries) add(k.first, k.second, v);
  return *this;
}

Diamond Diamond::shifted(int alpha2) const {
  Diamond d;
  for (const auto& [k, v] : entries) d.entries[{k.first + alpha2, k.second + alpha2}] = v;
  return d;
}

Int Diamond::total() const {
  Int t = 0;
  for (const auto& [k, v] : entries) t += v;
  return t;
}

bool Diamond::leq(const Diamond& o) const {
  for (const auto& [k, v] : entries) {
    auto it = o.entries.find(k);
    if (it == o.entries.end() || it->second < v) return false;
  }
  return true;
}

std::string Diamond::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : entries) {
    if (!first) os << ", ";
    first = false;
    auto half = [](int x) {
      std::ostringstream h;
      if (x % 2 == 0) h << x / 2; else h << x << "/2";
      return h.str();
    };
    os << "(" << half(k.first) << "," << half(k.second) << "):" << v;
  }
  return first ? "0" : os.str();
}

Diamond shift(const Diamond& d, int alpha2) { return d.shifted(alpha2); }

Diamond kunneth(const Diamond& a, const Diamond& b) {
  Diamond out;
  for (const auto& [ka, va] : a.entries)
    for (const auto& [kb, vb] : b.entries)
      out.add(ka.first + kb.first, ka.second + kb.second, va * vb);
  return out;
}

Diamond toric_diamond(const fan::Fan& f) {
  std::string why;
  if (!fan::is_complete(f, &why) || !fan::is_unimodular(f, &why))
    throw MathError("toric_diamond: fan must be complete and unimodular: " + why);
  int d = f.rank;
  std::vector<Int> count(d + 1, 0);  // cones per dimension
  for (const auto& c : f.cones) count[c.size()] += 1;  // simplicial: dim = #rays
  Diamond out;
  for (int k = 0; k <= d; ++k) {
    Int b = 0;
    for (int i = k; i <= d; ++i) {
      Int term = binomial(i, k) * count[d - i];
      b += (i - k) % 2 == 0 ? term : -term;
    }
    out.add(2 * k, 2 * k, b);
  }
  return out;
}

int CurveConfig::connected_components() const {
  int n = component_count();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [a, b] : nodes) parent[find(a)] = find(b);
  std::set<int> roots;
  for (int i = 0; i < n; ++i) roots.insert(find(i));
  return static_cast<int>(roots.size());
}

Int CurveConfig::loop_count() const {
  return Int(static_cast<int>(nodes.size()) - component_count() + connected_components());
}

Diamond curve_config_cohomology(const CurveConfig& z) {
  Int g = 0;
  for (const auto& gi : z.genus) g += gi;
  Int loops = z.loop_count();
  if (loops < 0) throw MathError("curve_config_cohomology: malformed configuration");
  Diamond d;
  d.add(0, 0, z.connected_components());
  d.add(2, 0, g);
  d.add(0, 2, g + loops);
  d.add(2, 2, z.component_count());
  return d;
}

Diamond local_cohomology_surface(const CurveConfig& z) {
  Int g = 0;
  for (const auto& gi : z.genus) g += gi;
  Int loops = z.loop_count();
  Diamond d;
  d.add(2, 2, z.component_count());          // H^2_Z
  d.add(2, 4, g);                            // H^3_Z, F-level 1
  d.add(4, 2, g + loops);                    // H^3_Z, F-level 2
  d.add(4, 4, z.connected_components());     // H^4_Z
  return d;
}

Diamond local_cohomology_points(const Int& n) {
  Diamond d;
  d.add(2, 2, n);
  return d;
}

Diamond ev_coinvariant_p1(const std::vector<Int>& branch_degrees) {
  if (branch_degrees.empty())
    throw InputError("ev_coinvariant_p1: empty index set has no coinvariant part");
  Int total = 0;
  for (const Int& b : branch_degrees) {
    if (b <= 0 || b % 2 != 0) throw MathError("ev_coinvariant_p1: branch degrees must be even and positive");
    total += b;
  }
  Int g = total / 2 - 1;
  Diamond d;
  d.add(2, 0, g);
  d.add(0, 2, g);
  return d;
}

namespace {

// ray self-intersections on a smooth complete toric surface, and the
// intersection pairing of ray divisor classes
struct SurfaceIntersection {
  std::vector<IntVec> cyclic;     // rays in counterclockwise order
  std::vector<Int> self;          // E_i^2
  int n = 0;

  Rat pair_classes(const std::vector<Int>& a, const std::vector<Int>& b) const {
    Rat s = 0;
    for (int i = 0; i < n; ++i) {
      s += Rat(a[i] * b[i] * self[i]);
      int j = (i + 1) % n;
      s += Rat(a[i] * b[j]) + Rat(a[j] * b[i]);
    }
    return s;
  }
};

SurfaceIntersection surface_intersection(const fan::Fan& f) {
  std::string why;
  if (f.rank != 2 || !fan::is_complete(f, &why) || !fan::is_unimodular(f, &why))
    throw MathError("surface_intersection: smooth complete toric surfaces only");
  SurfaceIntersection s;
  s.cyclic = f.rays;
  auto half = [](const IntVec& v) { return (v[1] < 0 || (v[1] == 0 && v[0] < 0)) ? 1 : 0; };
  std::sort(s.cyclic.begin(), s.cyclic.end(), [&](const IntVec& a, const IntVec& b) {
    if (half(a) != half(b)) return half(a) < half(b);
    return a[0] * b[1] - a[1] * b[0] > 0;
  });
  s.n = static_cast<int>(s.cyclic.size());
  for (int i = 0; i < s.n; ++i) {
    const IntVec& prev = s.cyclic[(i + s.n - 1) % s.n];
    const IntVec& next = s.cyclic[(i + 1) % s.n];
    const IntVec& cur = s.cyclic[i];
    // prev + next = -E^2 * cur
    Int c;
    if (cur[0] != 0)
      c = (prev[0] + next[0]) / cur[0];
    else
      c = (prev[1] + next[1]) / cur[1];
    s.self.push_back(-c);
  }
  return s;
}

}  // namespace

SurfaceChi ev_coinvariant_surface_chi(const fan::Fan& surface_fan, const std::vector<Int>& l_class,
                                      const std::vector<std::vector<Int>>& component_classes) {
  SurfaceIntersection s = surface_intersection(surface_fan);
  int n = s.n;
  if (static_cast<int>(l_class.size()) != n)
    throw InputError("ev_coinvariant_surface_chi: class length mismatch");
  // reorder caller coefficients (given in fan ray order) to the cyclic order
  auto reorder = [&](const std::vector<Int>& v) {
    std::vector<Int> out(n);
    for (int i = 0; i < n; ++i) {
      auto it = std::find(s.cyclic.begin(), s.cyclic.end(), surface_fan.rays[i]);
      out[it - s.cyclic.begin()] = v[i];
    }
    return out;
  };
  std::vector<Int> l = reorder(l_class);
  std::vector<Int> k(n, -1);  // canonical class K = -sum E
  std::vector<Int> minus_l(n);
  for (int i = 0; i < n; ++i) minus_l[i] = -l[i];

  auto chi_line = [&](const std::vector<Int>& dcls) {
    std::vector<Int> dk(n);
    for (int i = 0; i < n; ++i) dk[i] = dcls[i] - k[i];
    return Rat(1) + s.pair_classes(dcls, dk) / 2;
  };

  SurfaceChi out;
  out.chi.resize(3);
  out.chi[0] = chi_line(minus_l);

  // chi(Omega^1(log B) (x) -L) = chi(Omega^1 (x) -L) + sum chi(-L | component)
  Rat e = Rat(static_cast<int>(surface_fan.maximal_cones.size()));
  std::vector<Int> c1(n);  // K + 2(-L)
  for (int i = 0; i < n; ++i) c1[i] = k[i] + 2 * minus_l[i];
  std::vector<Int> kk(n);
  for (int i = 0; i < n; ++i) kk[i] = c1[i] - k[i];
  Rat c2 = e + s.pair_classes(k, minus_l) + s.pair_classes(minus_l, minus_l);
  Rat chi1 = Rat(2) + s.pair_classes(c1, kk) / 2 - c2;
  for (const auto& comp_in : component_classes) {
    std::vector<Int> comp = reorder(comp_in);
    // genus by adjunction, degree of -L on the component
    Rat twog = s.pair_classes(comp, comp) + s.pair_classes(comp, k) + 2;
    Rat deg = s.pair_classes(minus_l, comp);
    chi1 += deg + 1 - twog / 2;
  }
  out.chi[1] = chi1;

  std::vector<Int> top(n);  // K + B - L = K + L  (B = 2L)
  for (int i = 0; i < n; ++i) top[i] = k[i] + l[i];
  out.chi[2] = chi_line(top);
  out.note = "Euler characteristics only; individual h^q require vanishing input";
  return out;
}

namespace {

unsigned mask_popcount(unsigned m) {
  unsigned c = 0;
  while (m) { c += m & 1; m >>= 1; }
  return c;
}

// direct-sum decomposition over a single curve factor: factor set F,
// quadratic subset Q, branch degrees per index
Diamond lg_plain_curve(const std::vector<Int>& degs, unsigned F, unsigned Q) {
  Diamond out;
  if (F == 0) {
    out.add(0, 0, 1);
    out.add(2, 2, 1);
    return out;
  }
  // iterate I over subsets of Q
  unsigned I = 0;
  for (;;) {
    unsigned S = F & ~I;
    int ni = static_cast<int>(mask_popcount(I));
    if (mask_popcount(S) == 1) {
      int j = 0;
      while (!((S >> j) & 1)) ++j;
      out.add(2 + ni, 2 + ni, degs[j]);
    } else if (S == 0) {
      Int total = 0;
      for (size_t j = 0; j < degs.size(); ++j)
        if ((F >> j) & 1) total += degs[j];
      Int g = total / 2 - 1;
      out.add(2 + ni, ni, g);
      out.add(ni, 2 + ni, g);
    }
    if (I == Q) break;
    I = (I - Q) & Q;  // next subset of Q
  }
  return out;
}

Diamond lg_plain(const nef::CoverGeometry& geom, unsigned F, unsigned Q) {
  if (!geom.numeric_supported)
    throw MathError("lg_diamond: base not computable by this toolkit (dimension > 1 and not a curve product)");
  int k = geom.np.k();
  if (!geom.product_split) {
    std::vector<Int> degs(geom.branch_degree.begin(), geom.branch_degree.end());
    return lg_plain_curve(degs, F, Q);
  }
  Diamond out;
  out.add(0, 0, 1);
  for (int axis = 0; axis < geom.base_dim; ++axis) {
    unsigned fa = 0, qa = 0, bit = 0;
    std::vector<Int> adegs;
    for (int i = 0; i < k; ++i) {
      if (geom.part_axis[i] != axis) continue;
      adegs.push_back(geom.branch_degree[i]);
      if ((F >> i) & 1) fa |= 1u << bit;
      if ((Q >> i) & 1) qa |= 1u << bit;
      ++bit;
    }
    out = kunneth(out, lg_plain_curve(adegs, fa, qa));
  }
  return out;
}

}  // namespace

Diamond lg_diamond(const nef::LGModel& model) {
  if (model.rooted != 0)
    throw InputError("lg_diamond: rooted models are handled by lg_orbifold_diamond");
  unsigned full = (1u << model.geom.np.k()) - 1;
  return lg_plain(model.geom, full, model.quadratic);
}

Diamond lg_orbifold_diamond(const nef::CoverGeometry& geom, unsigned rooted_mask) {
  unsigned full = (1u << geom.np.k()) - 1;
  unsigned quadratic = full & ~rooted_mask;
  Diamond out;
  unsigned I = 0;
  for (;;) {
    int ni = static_cast<int>(mask_popcount(I));
    out += lg_plain(geom, full & ~I, quadratic).shifted(ni);
    if (I == rooted_mask) break;
    I = (I - rooted_mask) & rooted_mask;
  }
  return out;
}

namespace {

Diamond sector_diamond_curve(const std::vector<Int>& degs, const SectorIndex& s, int shift2) {
  int nm = static_cast<int>(s.coinv.size());
  int nz = static_cast<int>(s.twist.size());
  int ni = static_cast<int>(s.inv.size());
  int S2 = shift2 + nm + nz;
  Diamond out;
  auto part_degree = [&](unsigned mask) {
    Int b = 0;
    for (size_t i = 0; i < degs.size(); ++i)
      if ((mask >> i) & 1) b += degs[i];
    return b;
  };
  if (ni >= 2) return out;
  if (ni == 1) {
    out.add(2 + S2, 2 + S2, part_degree(s.inv[0]));
    return out;
  }
  if (nm == 0) {
    out.add(S2, S2, 1);
    out.add(2 + S2, 2 + S2, 1);
    return out;
  }
  Int total = 0;
  for (unsigned p : s.coinv) total += part_degree(p);
  Int g = total / 2 - 1;
  out.add(2 + S2, S2, g);
  out.add(S2, 2 + S2, g);
  return out;
}

}  // namespace

Diamond sector_diamond(const nef::CoverGeometry& geom, const SectorIndex& s, bool mirror_side) {
  if (!geom.numeric_supported)
    throw MathError("sector_diamond: base not computable by this toolkit");
  const auto& degs = mirror_side ? geom.dual_branch_degree : geom.branch_degree;
  if (!geom.product_split) {
    return sector_diamond_curve(degs, s, s.shift2);
  }
  // split every part along the coordinate axes; merged parts must be
  // axis-pure for the product formula to apply
  int k = geom.np.k();
  Diamond out;
  out.add(0, 0, 1);
  for (int axis = 0; axis < geom.base_dim; ++axis) {
    unsigned axis_mask = 0;
    std::vector<Int> adegs;
    std::vector<int> local_of_global(k, -1);
    int bit = 0;
    for (int i = 0; i < k; ++i) {
      if (geom.part_axis[i] != axis) continue;
      axis_mask |= 1u << i;
      local_of_global[i] = bit++;
      adegs.push_back(degs[i]);
    }
    auto localize = [&](const std::vector<unsigned>& parts) {
      std::vector<unsigned> out_parts;
      for (unsigned p : parts) {
        unsigned inter = p & axis_mask;
        if (inter == 0) continue;
        if (inter != p)
          throw MathError("sector_diamond: merged class crosses product factors (not computable)");
        unsigned local = 0;
        for (int i = 0; i < k; ++i)
          if ((inter >> i) & 1) local |= 1u << local_of_global[i];
        out_parts.push_back(local);
      }
      return out_parts;
    };
    SectorIndex local;
    local.coinv = localize(s.coinv);
    local.twist = localize(s.twist);
    local.inv = localize(s.inv);
    out = kunneth(out, sector_diamond_curve(adegs, local, 0));
  }
  return out.shifted(s.shift2);
}

Diamond transition_hypersurface_diamond(const Polytope& delta_ii, const Polytope& delta_i) {
  if (delta_ii.rank != 2 || delta_i.rank != 2)
    throw MathError("transition_hypersurface_diamond: rank-2 data only");
  if (!poly::is_reflexive(delta_ii) || !poly::is_reflexive(delta_i))
    throw MathError("transition_hypersurface_diamond: reflexive polygons required");
  fan::Fan sigma = fan::mpcs_fan(delta_i);
  auto monomials = poly::lattice_points(delta_ii);
  // no ray may be a fixed component of the linear system
  for (const auto& rho : sigma.rays) {
    Int mn = 0;
    bool first = true;
    for (const auto& m : monomials) {
      Int v = dot(rho, m);
      if (first || v < mn) mn = v;
      first = false;
    }
    if (mn + 1 > 0)
      throw MathError("transition_hypersurface_diamond: fixed toric component (not computable)");
  }
  // smoothness of the generic member at the torus-fixed base points
  for (const auto& cone : sigma.maximal_cones) {
    auto rays = sigma.cone_rays(cone);
    bool ok = false;
    for (const auto& m : monomials) {
      Int a = dot(rays[0], m) + 1, b = dot(rays[1], m) + 1;
      if ((a == 0 && b == 0) || (a == 1 && b == 0) || (a == 0 && b == 1)) ok = true;
    }
    if (!ok)
      throw MathError("transition_hypersurface_diamond: generic member singular at a fixed point");
  }
  Int g(static_cast<long>(poly::interior_lattice_points(delta_ii).size()));
  Diamond d;
  d.add(0, 0, 1);
  d.add(2, 0, g);
  d.add(0, 2, g);
  d.add(2, 2, 1);
  return d;
}

Int Spectrum::total() const {
  Int t = 0;
  for (const auto& [l, m] : mult) t += m;
  return t;
}

namespace {

Spectrum torus_spectrum(const poly::NewtonLevel& nl) {
  const Polytope& p = nl.polytope;
  int d = p.rank;
  Polytope big = poly::dilate(p, Int(d) + 1);
  std::map<Rat, Int> count;  // lattice points of cone at each level <= d+1
  for (const auto& m : poly::lattice_points(big)) {
    auto l = nl.level(m);
    if (l) ++count[*l];
  }
  Spectrum s;
  std::set<Rat> candidates;
  for (const auto& [l, c] : count)
    for (int j = 0; j <= d; ++j) candidates.insert(l + j);
  for (const Rat& l : candidates) {
    if (l > d) continue;
    Int m = 0;
    for (int j = 0; j <= d; ++j) {
      auto it = count.find(l - j);
      if (it == count.end()) continue;
      Int term = binomial(d, j) * it->second;
      m += j % 2 == 0 ? term : -term;
    }
    if (m < 0) throw MathError("newton_spectrum: negative multiplicity (degenerate data)");
    if (m != 0) s.mult[l] = m;
  }
  return s;
}

}  // namespace

Spectrum newton_spectrum(const poly::NewtonLevel& nl) {
  const Polytope& p = nl.polytope;
  if (nl.zero_interior) {
    Spectrum s = torus_spectrum(nl);
    if (s.total() != poly::normalized_volume(p))
      throw MathError("newton_spectrum: total does not match the normalized volume (bug)");
    return s;
  }
  // convenient one-sided support: inclusion-exclusion over coordinate faces
  int d = p.rank;
  for (const auto& v : p.vertices)
    for (const auto& c : v)
      if (c < 0) throw MathError("newton_spectrum: non-convenient support (negative coordinates)");
  auto pts = poly::lattice_points(p);
  for (int j = 0; j < d; ++j) {
    bool touches = false;
    for (const auto& m : pts) {
      bool axis = m[j] > 0;
      for (int i = 0; i < d && axis; ++i)
        if (i != j && m[i] != 0) axis = false;
      if (axis) touches = true;
    }
    if (!touches) throw MathError("newton_spectrum: non-convenient support (axis untouched)");
  }
  std::map<Rat, Int> acc;
  for (unsigned S = 0; S < (1u << d); ++S) {
    // the face of the polytope supported on the axes in S
    std::vector<IntVec> face_pts;
    for (const auto& m : pts) {
      bool ok = true;
      for (int j = 0; j < d; ++j)
        if (!((S >> j) & 1) && m[j] != 0) ok = false;
      if (!ok) continue;
      IntVec q;
      for (int j = 0; j < d; ++j)
        if ((S >> j) & 1) q.push_back(m[j]);
      face_pts.push_back(q);
    }
    int sd = static_cast<int>(mask_popcount(S));
    int sign = (d - sd) % 2 == 0 ? 1 : -1;
    if (sd == 0) {
      acc[Rat(0)] += sign;
      continue;
    }
    Polytope face = poly::convex_hull_lattice(face_pts, p.tag);
    if (!face.full_dimensional())
      throw MathError("newton_spectrum: degenerate coordinate face");
    Spectrum fs = torus_spectrum(poly::newton_level(face));
    for (const auto& [l, m] : fs.mult) acc[l] += sign * m;
  }
  Spectrum s;
  for (const auto& [l, m] : acc) {
    if (m < 0) throw MathError("newton_spectrum: negative multiplicity (degenerate data)");
    if (m != 0) s.mult[l] = m;
  }
  return s;
}

namespace {

struct SparseRow {
  std::vector<std::pair<int, Rat>> terms;  // sorted by column
};

// rank + standard-column detection by elimination with the given column
// priority (pivot on the earliest column in `order` present in each row)
std::pair<int, std::vector<char>> eliminate(std::vector<SparseRow>& rows, int ncols,
                                            const std::vector<int>& colrank) {
  std::vector<int> pivot_row_of_col(ncols, -1);
  int rank = 0;
  for (auto& row : rows) {
    for (;;) {
      // find the highest-priority column in this row
      int best = -1;
      Rat coef;
      for (const auto& [c, v] : row.terms)
        if (v != 0 && (best < 0 || colrank[c] < colrank[best])) { best = c; coef = v; }
      if (best < 0) break;
      int pr = pivot_row_of_col[best];
      if (pr < 0) {
        // normalize and register
        for (auto& [c, v] : row.terms) v /= coef;
        pivot_row_of_col[best] = static_cast<int>(&row - rows.data());
        ++rank;
        break;
      }
      // subtract the registered pivot row
      const SparseRow& p = rows[pr];
      std::map<int, Rat> merged;
      for (const auto& [c, v] : row.terms) merged[c] += v;
      for (const auto& [c, v] : p.terms) merged[c] -= coef * v;
      row.terms.clear();
      for (const auto& [c, v] : merged)
        if (v != 0) row.terms.push_back({c, v});
    }
  }
  std::vector<char> is_pivot(ncols, 0);
  for (int c = 0; c < ncols; ++c)
    if (pivot_row_of_col[c] >= 0) is_pivot[c] = 1;
  return {rank, is_pivot};
}

struct KoszulRun {
  Int dimension;
  std::map<Rat, Int> histogram;
};

KoszulRun koszul_once(const Polytope& newton, bool torus, const poly::NewtonLevel& nl, int T,
                      unsigned seed, size_t budget_mb) {
  int d = newton.rank;
  auto support = poly::lattice_points(newton);
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> coef(1, 999);
  std::map<IntVec, Int> c;
  for (const auto& m : support) c[m] = coef(rng);

  // monomial box
  std::vector<IntVec> cols;
  IntVec cur(d);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == d) { cols.push_back(cur); return; }
    for (Int x = torus ? -T : 0; x <= T; ++x) { cur[i] = x; self(self, i + 1); }
  };
  rec(rec, 0);
  std::map<IntVec, int> col_of;
  for (size_t i = 0; i < cols.size(); ++i) col_of[cols[i]] = static_cast<int>(i);

  size_t estimate = cols.size() * (support.size() + 1) * d * 48;
  if (estimate > budget_mb * 1024 * 1024)
    throw MathError("koszul_oracle: memory budget exceeded");

  // relations: the twisted differential applied to the (d-1)-form basis;
  // in the torus case nabla(x^a dlog x_{!=i}) has top coefficient
  // a_i x^a + sum_m m_i c_m x^{a+m}; the affine case replaces a_i by the
  // polynomial derivative and shifts by one in the i-th coordinate.
  std::vector<SparseRow> rows;
  int margin = 0;
  for (const auto& m : support)
    for (const auto& x : m) margin = std::max(margin, static_cast<int>(abs(x)));
  IntVec a(d);
  auto gen = [&](auto&& self, int i) -> void {
    if (i == d) {
      for (int axis = 0; axis < d; ++axis) {
        std::map<IntVec, Rat> entry;
        if (torus) {
          entry[a] += Rat(a[axis]);
          for (const auto& m : support) {
            if (m[axis] == 0) continue;
            IntVec t(d);
            for (int j = 0; j < d; ++j) t[j] = a[j] + m[j];
            entry[t] += Rat(m[axis] * c[m]);
          }
        } else {
          if (a[axis] > 0) {
            IntVec t = a;
            t[axis] -= 1;
            entry[t] += Rat(a[axis]);
          }
          for (const auto& m : support) {
            if (m[axis] == 0) continue;
            IntVec t(d);
            for (int j = 0; j < d; ++j) t[j] = a[j] + m[j];
            t[axis] -= 1;
            entry[t] += Rat(m[axis] * c[m]);
          }
        }
        SparseRow row;
        bool inside = true;
        for (const auto& [mon, v] : entry) {
          if (v == 0) continue;
          auto it = col_of.find(mon);
          if (it == col_of.end()) { inside = false; break; }
          row.terms.push_back({it->second, v});
        }
        if (inside && !row.terms.empty()) rows.push_back(row);
      }
      return;
    }
    int lo = torus ? -T - margin : 0;
    for (Int x = lo; x <= T + margin; ++x) { a[i] = x; self(self, i + 1); }
  };
  gen(gen, 0);

  // priority: eliminate monomials outside the Newton cone first, then by
  // descending level (so standard monomials are the lowest levels), lex ties
  std::vector<std::pair<std::pair<int, Rat>, int>> keyed;
  for (size_t i = 0; i < cols.size(); ++i) {
    IntVec probe = cols[i];
    if (!torus)
      for (int j = 0; j < d; ++j) probe[j] += 1;  // affine forms carry dx_1..dx_d
    auto l = nl.level(probe);
    if (l)
      keyed.push_back({{1, -*l}, static_cast<int>(i)});
    else
      keyed.push_back({{0, Rat(0)}, static_cast<int>(i)});
  }
  std::sort(keyed.begin(), keyed.end(), [&](const auto& x, const auto& y) {
    if (x.first.first != y.first.first) return x.first.first < y.first.first;
    if (x.first.second != y.first.second) return x.first.second < y.first.second;
    return cols[x.second] < cols[y.second];
  });
  std::vector<int> colrank(cols.size());
  for (size_t i = 0; i < keyed.size(); ++i) colrank[keyed[i].second] = static_cast<int>(i);

  auto [rank, is_pivot] = eliminate(rows, static_cast<int>(cols.size()), colrank);

  KoszulRun run;
  run.dimension = Int(static_cast<long>(cols.size()) - rank);
  for (size_t i = 0; i < cols.size(); ++i) {
    if (is_pivot[i]) continue;
    IntVec probe = cols[i];
    if (!torus)
      for (int j = 0; j < d; ++j) probe[j] += 1;
    auto l = nl.level(probe);
    if (!l) throw MathError("koszul_oracle: standard monomial outside the Newton cone");
    ++run.histogram[*l];
  }
  return run;
}

}  // namespace

KoszulResult koszul_oracle(const Polytope& newton, const KoszulOptions& opts) {
  if (newton.rank > 2) throw MathError("koszul_oracle: rank <= 2 only");
  poly::NewtonLevel nl = poly::newton_level(newton);
  bool torus = nl.zero_interior;
  int spread = 0;
  for (const auto& v : newton.vertices)
    for (const auto& q : v)
      spread = std::max(spread, static_cast<int>(abs(rat_floor(q))) + 1);
  int T = opts.truncation > 0 ? opts.truncation : spread * (newton.rank + 1) + 2;

  KoszulResult out;
  KoszulRun first, second;
  for (unsigned pass = 0; pass < 2; ++pass) {
    unsigned seed = opts.seed + pass * 1000003u;
    KoszulRun a = koszul_once(newton, torus, nl, T, seed, opts.memory_budget_mb);
    KoszulRun b = koszul_once(newton, torus, nl, T + 1, seed, opts.memory_budget_mb);
    if (a.dimension != b.dimension || a.histogram != b.histogram) {
      out.stabilized = false;
      throw MathError("koszul_oracle: dimension did not stabilize across truncations");
    }
    if (pass == 0) first = a;
    else second = a;
  }
  if (first.dimension != second.dimension || first.histogram != second.histogram)
    throw MathError("koszul_oracle: two random draws disagree (degenerate coefficients?)");
  out.dimension = first.dimension;
  out.histogram = first.histogram;
  out.stabilized = true;
  return out;
}

}  // namespace hodge
}  // namespace clarke
