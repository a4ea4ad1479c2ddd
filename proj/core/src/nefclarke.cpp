#include "clarke/nefclarke.hpp"

#include <algorithm>

namespace clarke {
namespace nef {

using lattice::dot;
using poly::Polytope;

int NefPartition::part_of_vertex(int v) const {
  for (size_t i = 0; i < parts.size(); ++i)
    if (std::find(parts[i].begin(), parts[i].end(), v) != parts[i].end())
      return static_cast<int>(i);
  return -1;
}

NefPartition validate_nef_partition(const Polytope& delta,
                                    const std::vector<std::vector<int>>& parts) {
  if (!poly::is_reflexive(delta)) throw MathError("validate_nef_partition: polytope not reflexive");
  std::vector<int> seen(delta.vertices.size(), 0);
  for (const auto& s : parts)
    for (int v : s) {
      if (v < 0 || v >= static_cast<int>(delta.vertices.size()))
        throw InputError("validate_nef_partition: vertex index out of range");
      ++seen[v];
    }
  for (int c : seen)
    if (c != 1) throw InputError("validate_nef_partition: parts must partition the vertex set");

  NefPartition np;
  np.delta = delta;
  np.parts = parts;
  np.spanning = fan::spanning_fan(delta);

  // vertex index per spanning-fan ray (vertices of a reflexive polytope are
  // primitive, so rays and vertices coincide)
  std::vector<int> vertex_of_ray(np.spanning.rays.size(), -1);
  for (size_t r = 0; r < np.spanning.rays.size(); ++r) {
    RatVec q = to_rat(np.spanning.rays[r]);
    for (size_t v = 0; v < delta.vertices.size(); ++v)
      if (delta.vertices[v] == q) vertex_of_ray[r] = static_cast<int>(v);
    if (vertex_of_ray[r] < 0) throw MathError("validate_nef_partition: non-vertex ray");
  }

  int k = static_cast<int>(parts.size());
  np.psi.assign(k, {});
  for (int i = 0; i < k; ++i) {
    for (const auto& cone : np.spanning.maximal_cones) {
      std::vector<RatVec> rows;
      RatVec rhs;
      for (int r : cone) {
        rows.push_back(to_rat(np.spanning.rays[r]));
        int v = vertex_of_ray[r];
        rhs.push_back(np.part_of_vertex(v) == i ? Rat(1) : Rat(0));
      }
      auto m = lattice::solve_rational(rows, rhs);
      if (!m)
        throw MathError("validate_nef_partition: no linear certificate on a cone (not a nef partition)");
      np.psi[i].push_back(*m);
    }
    // convexity across walls: each linear piece stays below the function
    for (size_t ci = 0; ci < np.spanning.maximal_cones.size(); ++ci)
      for (size_t r = 0; r < np.spanning.rays.size(); ++r) {
        Rat value = np.part_of_vertex(vertex_of_ray[r]) == i ? Rat(1) : Rat(0);
        if (dot(np.spanning.rays[r], np.psi[i][ci]) > value)
          throw MathError("validate_nef_partition: certificate not convex (not a nef partition)");
      }
  }

  for (int i = 0; i < k; ++i) {
    std::vector<RatVec> pts = {RatVec(delta.rank, Rat(0))};
    for (int v : parts[i]) pts.push_back(delta.vertices[v]);
    np.delta_parts.push_back(poly::convex_hull(pts, delta.tag));
  }
  return np;
}

DualNefPartition dual_nef_partition(const NefPartition& np) {
  DualNefPartition out;
  int k = np.k();
  for (int i = 0; i < k; ++i) {
    std::vector<poly::Facet> facets;
    for (size_t v = 0; v < np.delta.vertices.size(); ++v) {
      IntVec n(np.delta.rank);
      for (int j = 0; j < np.delta.rank; ++j) n[j] = numerator(np.delta.vertices[v][j]);
      facets.push_back({n, np.part_of_vertex(static_cast<int>(v)) == i ? Rat(1) : Rat(0)});
    }
    out.parts.push_back(poly::from_inequalities(np.delta.rank, lattice::dual_tag(np.delta.tag), facets));
  }
  std::vector<RatVec> all;
  for (const auto& p : out.parts)
    for (const auto& v : p.vertices) all.push_back(v);
  out.hull = poly::convex_hull(all, lattice::dual_tag(np.delta.tag));

  // Minkowski identities against the polar duals
  Polytope sum_dual = out.parts[0];
  for (int i = 1; i < k; ++i) sum_dual = poly::minkowski_sum(sum_dual, out.parts[i]);
  if (!sum_dual.same_geometry(poly::polar_dual(np.delta)))
    throw MathError("dual_nef_partition: Minkowski identity failed for the polar (bug)");
  Polytope sum_primal = np.delta_parts[0];
  for (int i = 1; i < k; ++i) sum_primal = poly::minkowski_sum(sum_primal, np.delta_parts[i]);
  if (!sum_primal.same_geometry(poly::polar_dual(out.hull)))
    throw MathError("dual_nef_partition: Minkowski identity failed for the dual hull (bug)");
  return out;
}

ClarkePair validate_clarke(fan::StackyFan sigma, fan::StackyFan sigma_check) {
  if (sigma.fan.rank != sigma_check.fan.rank)
    throw InputError("validate_clarke: rank mismatch");
  if (sigma.fan.tag == sigma_check.fan.tag)
    throw InputError("validate_clarke: fans must live in dual lattices");
  ClarkePair pair;
  auto check_fan = [&](fan::StackyFan& f, const char* side) -> bool {
    std::string why;
    if (!fan::is_simplicial(f.fan, &why)) {
      pair.certificate.failure = std::string(side) + ": " + why;
      return false;
    }
    if (!fan::is_quasiprojective(f.fan, nullptr, &why)) {
      pair.certificate.failure = std::string(side) + ": " + why;
      return false;
    }
    if (!fan::is_convex_support(f, &why)) {
      pair.certificate.failure = std::string(side) + ": convexity: " + why;
      return false;
    }
    return true;
  };
  bool ok = check_fan(sigma, "sigma") && check_fan(sigma_check, "sigma_check");
  if (ok) {
    for (size_t i = 0; i < sigma.fan.rays.size() && ok; ++i)
      for (size_t j = 0; j < sigma_check.fan.rays.size() && ok; ++j) {
        ++pair.certificate.checked_pairs;
        if (dot(sigma.extended_ray(static_cast<int>(i)),
                sigma_check.extended_ray(static_cast<int>(j))) < 0) {
          pair.certificate.failure =
              "regularity: rays " + to_string(sigma.fan.rays[i]) + " and " +
              to_string(sigma_check.fan.rays[j]) + " pair negatively";
          ok = false;
        }
      }
  }
  pair.certificate.valid = ok;
  pair.sigma = std::move(sigma);
  pair.sigma_check = std::move(sigma_check);
  return pair;
}

namespace {

// fan of the total space of the anticanonical bundle over the MPCS
// resolution: rays (rho, 1) for boundary lattice points plus (0,1)
fan::Fan anticanonical_lift(const Polytope& p, lattice::Tag tag) {
  Polytope q = p;
  q.tag = tag;
  fan::Fan base = fan::mpcs_fan(q);
  std::vector<Int> ones(base.rays.size(), Int(1));
  return fan::cayley_fan(base, {ones});
}

}  // namespace

TransitionPair extremal_transition_pair(const Polytope& delta_ii, const Polytope& delta_i_check) {
  if (!poly::is_reflexive(delta_ii) || !poly::is_reflexive(delta_i_check))
    throw MathError("extremal_transition_pair: both polytopes must be reflexive");
  for (const auto& v : delta_ii.vertices)
    if (!delta_i_check.contains(v))
      throw MathError("extremal_transition_pair: inclusion fails");

  TransitionPair t;
  t.delta_i = poly::polar_dual(delta_i_check);
  t.fan_i = fan::trivial_stacky(anticanonical_lift(t.delta_i, lattice::Tag::N));
  t.fan_ii = fan::trivial_stacky(anticanonical_lift(delta_ii, lattice::Tag::M));

  std::string why;
  if (!fan::is_unimodular(t.fan_i.fan, &why) || !fan::is_unimodular(t.fan_ii.fan, &why))
    throw MathError("extremal_transition_pair: triangulation not unimodular: " + why);
  if (!fan::is_gorenstein(t.fan_i, nullptr, &why) || !fan::is_gorenstein(t.fan_ii, nullptr, &why))
    throw MathError("extremal_transition_pair: Gorenstein certificate missing: " + why);

  ClarkePair pair = validate_clarke(t.fan_i, t.fan_ii);
  t.certificate = pair.certificate;
  if (!t.certificate.valid)
    throw MathError("extremal_transition_pair: Clarke validation failed: " + t.certificate.failure);
  return t;
}

CoverGeometry build_cover_geometry(const NefPartition& np) {
  CoverGeometry g;
  g.np = np;
  g.dual = dual_nef_partition(np);
  g.base_dim = np.delta.rank;
  int k = np.k();

  for (int i = 0; i < k; ++i) {
    std::vector<IntVec> pts;
    for (const auto& m : poly::lattice_points(np.delta_parts[i])) {
      bool zero = std::all_of(m.begin(), m.end(), [](const Int& x) { return x == 0; });
      if (!zero) pts.push_back(m);
    }
    g.ray_parts.push_back(pts);
    g.branch_degree.push_back(Int(2 * static_cast<int>(pts.size())));
  }
  for (int i = 0; i < k; ++i) {
    int cnt = 0;
    for (const auto& m : poly::lattice_points(g.dual.parts[i])) {
      bool zero = std::all_of(m.begin(), m.end(), [](const Int& x) { return x == 0; });
      if (!zero) ++cnt;
    }
    g.dual_branch_degree.push_back(Int(2 * cnt));
  }

  // the classes must partition the nonzero lattice points of delta
  std::map<IntVec, int> owner;
  bool partition_ok = true;
  for (int i = 0; i < k && partition_ok; ++i)
    for (const auto& m : g.ray_parts[i])
      if (!owner.emplace(m, i).second) partition_ok = false;
  size_t nonzero = poly::lattice_points(np.delta).size() - 1;
  if (owner.size() != nonzero) partition_ok = false;

  if (!partition_ok) {
    g.numeric_supported = false;
    return g;
  }

  if (g.base_dim == 1) {
    g.numeric_supported = true;
    g.product_split = false;
    g.part_axis.assign(k, 0);
    return g;
  }

  // product of unit segments along coordinate axes, classes axis-aligned
  g.part_axis.assign(k, -1);
  bool product = true;
  for (int i = 0; i < k && product; ++i) {
    for (const auto& m : g.ray_parts[i]) {
      int axis = -1;
      for (int j = 0; j < g.base_dim; ++j)
        if (m[j] != 0) {
          if (axis >= 0 || abs(m[j]) != 1) { axis = -2; break; }
          axis = j;
        }
      if (axis < 0) { product = false; break; }
      if (g.part_axis[i] < 0) g.part_axis[i] = axis;
      if (g.part_axis[i] != axis) { product = false; break; }
    }
  }
  if (product) {
    std::set<int> axes(g.part_axis.begin(), g.part_axis.end());
    for (int j = 0; j < g.base_dim; ++j)
      if (!axes.count(j)) product = false;
  }
  g.product_split = product;
  g.numeric_supported = product;
  return g;
}

CoverSpec build_cover_spec(const CoverGeometry& geom, unsigned index_set) {
  if (index_set >> geom.np.k()) throw InputError("build_cover_spec: index set out of range");
  CoverSpec spec;
  spec.geom = geom;
  spec.index_set = index_set;
  spec.base_fan = fan::mpcs_fan(geom.np.delta);
  for (int i = 0; i < geom.np.k(); ++i)
    if (geom.branch_degree[i] % 2 != 0)
      throw MathError("build_cover_spec: branch degree must be even");
  return spec;
}

fan::StackyFan sigma_family(const CoverGeometry& geom, unsigned doubled_mask) {
  int k = geom.np.k();
  fan::Fan base = fan::mpcs_fan(geom.np.delta);
  std::vector<int> part_of_ray(base.rays.size(), -1);
  for (size_t r = 0; r < base.rays.size(); ++r) {
    for (int i = 0; i < k; ++i)
      if (std::find(geom.ray_parts[i].begin(), geom.ray_parts[i].end(), base.rays[r]) !=
          geom.ray_parts[i].end())
        part_of_ray[r] = i;
    if (part_of_ray[r] < 0)
      throw MathError("sigma_family: base ray not assigned to a class");
  }
  std::vector<std::vector<Int>> coeffs(k, std::vector<Int>(base.rays.size(), 0));
  for (size_t r = 0; r < base.rays.size(); ++r) {
    int i = part_of_ray[r];
    coeffs[i][r] = (doubled_mask >> i) & 1 ? 2 : 1;
  }
  fan::Fan total = fan::cayley_fan(base, coeffs);
  fan::StackyFan s = fan::trivial_stacky(total);
  for (int i = 0; i < k; ++i) {
    if (!((doubled_mask >> i) & 1)) continue;
    IntVec e(total.rank, 0);
    e[geom.np.delta.rank + i] = 1;
    s.beta[total.ray_index(e)] = 2;
  }
  return s;
}

LGModel build_lg_model(const CoverGeometry& geom, unsigned quadratic, unsigned rooted) {
  int k = geom.np.k();
  unsigned full = (1u << k) - 1;
  if ((quadratic | rooted) & ~full) throw InputError("build_lg_model: subset out of range");
  LGModel m;
  m.geom = geom;
  m.quadratic = quadratic;
  m.rooted = rooted;
  unsigned doubled = (~quadratic) & full;  // linear factors carry O(-2E)
  fan::StackyFan s = sigma_family(geom, doubled);
  // the root structure is separate bookkeeping: reset multipliers and mark
  // only the requested fiber rays
  int d = geom.np.delta.rank;
  for (size_t r = 0; r < s.fan.rays.size(); ++r) {
    s.beta[r] = 1;
    for (int i = 0; i < k; ++i) {
      IntVec e(s.fan.rank, 0);
      e[d + i] = 1;
      if (s.fan.rays[r] == e && ((rooted >> i) & 1)) s.beta[r] = 2;
    }
  }
  m.total_space = s;

  // potential support: per class, the dual lattice points at fiber weight
  // two (quadratic term s_i^2 sigma_i) or one (linear term t_i sigma_i)
  for (int i = 0; i < k; ++i) {
    int w = (quadratic >> i) & 1 ? 2 : 1;
    std::vector<IntVec> pts = {IntVec(d, 0)};
    for (const auto& p : poly::lattice_points(geom.dual.parts[i])) pts.push_back(p);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    for (const auto& p : pts) {
      IntVec q(d + k, 0);
      for (int j = 0; j < d; ++j) q[j] = p[j];
      q[d + i] = w;
      m.potential_support.push_back(q);
    }
  }
  for (const auto& q : m.potential_support)
    for (size_t r = 0; r < s.fan.rays.size(); ++r)
      if (dot(q, s.extended_ray(static_cast<int>(r))) < 0)
        throw MathError("build_lg_model: potential not regular on the total space");
  return m;
}

}  // namespace nef
}  // namespace clarke
