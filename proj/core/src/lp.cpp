#include "clarke/lp.hpp"

#include <algorithm>

namespace clarke {
namespace lp {

namespace {

// Dense dictionary simplex over Q. Variable ids: 0..nv-1 structural,
// nv..nv+m-1 slacks, nv+m the phase-one auxiliary.
struct Dictionary {
  int total = 0;
  std::vector<int> basic;              // var id per row
  std::vector<RatVec> row;             // row[i][j]: coefficient of var j
  RatVec row_const;
  RatVec obj;                          // objective coefficients per var
  Rat obj_const = 0;
  std::vector<char> is_basic;

  void pivot(int r, int e) {
    int leave = basic[r];
    Rat ce = row[r][e];
    // express x_e from row r:  x_e = -const/ce + (1/ce) x_leave - sum_j (c_j/ce) x_j
    RatVec nr(total, Rat(0));
    Rat nc = -row_const[r] / ce;
    for (int j = 0; j < total; ++j)
      if (j != e && row[r][j] != 0) nr[j] = -row[r][j] / ce;
    nr[leave] = Rat(1) / ce;
    // substitute into the other rows and the objective
    for (size_t i = 0; i < row.size(); ++i) {
      if (static_cast<int>(i) == r) continue;
      Rat f = row[i][e];
      if (f == 0) continue;
      row[i][e] = 0;
      row_const[i] += f * nc;
      for (int j = 0; j < total; ++j) row[i][j] += f * nr[j];
    }
    Rat f = obj[e];
    if (f != 0) {
      obj[e] = 0;
      obj_const += f * nc;
      for (int j = 0; j < total; ++j) obj[j] += f * nr[j];
    }
    row[r] = nr;
    row_const[r] = nc;
    basic[r] = e;
    is_basic[leave] = 0;
    is_basic[e] = 1;
  }

  // Bland's rule; returns true when an optimum is reached, false on
  // unboundedness (cannot happen for our bounded encodings).
  bool maximize() {
    for (;;) {
      int e = -1;
      for (int j = 0; j < total; ++j)
        if (!is_basic[j] && obj[j] > 0) { e = j; break; }
      if (e < 0) return true;
      int r = -1;
      Rat best = 0;
      for (size_t i = 0; i < row.size(); ++i) {
        if (row[i][e] >= 0) continue;
        Rat ratio = -row_const[i] / row[i][e];
        if (r < 0 || ratio < best || (ratio == best && basic[i] < basic[r])) {
          r = static_cast<int>(i);
          best = ratio;
        }
      }
      if (r < 0) return false;
      pivot(r, e);
    }
  }
};

}  // namespace

Result feasible(const std::vector<Constraint>& cons, int num_vars) {
  // encode over nonnegative variables: x_j = u_j - v_j, plus eps for strict
  // rows; constraints become  -sum a x - [strict] eps >= r  in <= form.
  int m = static_cast<int>(cons.size());
  int nu = num_vars, nv = num_vars;
  int eps_id = nu + nv;
  int nstruct = nu + nv + 1;
  int rows = m + 1;  // + cap row eps <= 1
  int aux_id = nstruct + rows;
  int total = nstruct + rows + 1;

  Dictionary d;
  d.total = total;
  d.basic.resize(rows);
  d.row.assign(rows, RatVec(total, Rat(0)));
  d.row_const.assign(rows, Rat(0));
  d.obj.assign(total, Rat(0));
  d.is_basic.assign(total, 0);

  auto a_coef = [&](int i, int j) -> Rat {
    if (j < nu) return -cons[i].coeffs[j];
    if (j < nu + nv) return cons[i].coeffs[j - nu];
    return cons[i].strict ? Rat(1) : Rat(0);  // eps column
  };

  for (int i = 0; i < m; ++i) {
    d.basic[i] = nstruct + i;
    d.is_basic[nstruct + i] = 1;
    d.row_const[i] = -cons[i].rhs;
    for (int j = 0; j < nstruct; ++j) d.row[i][j] = -a_coef(i, j);
  }
  // cap row: eps <= 1
  d.basic[m] = nstruct + m;
  d.is_basic[nstruct + m] = 1;
  d.row_const[m] = 1;
  d.row[m][eps_id] = -1;

  // phase one if any slack starts negative
  bool need_phase1 = false;
  int worst = -1;
  for (int i = 0; i < rows; ++i)
    if (d.row_const[i] < 0 && (worst < 0 || d.row_const[i] < d.row_const[worst])) {
      worst = i;
      need_phase1 = true;
    }
  if (need_phase1) {
    for (int i = 0; i < rows; ++i) d.row[i][aux_id] = 1;
    d.obj[aux_id] = -1;
    d.pivot(worst, aux_id);
    d.maximize();
    if (d.obj_const < 0) {
      // infeasible: read Farkas multipliers off the objective row
      Result res;
      res.feasible = false;
      res.witness.assign(m, Rat(0));
      for (int i = 0; i < m; ++i) res.witness[i] = -d.obj[nstruct + i];
      // verify: y >= 0, y^T a = 0, y^T rhs > 0
      Rat yr = 0;
      RatVec ya(num_vars, Rat(0));
      for (int i = 0; i < m; ++i) {
        if (res.witness[i] < 0) throw MathError("lp: negative Farkas multiplier");
        yr += res.witness[i] * cons[i].rhs;
        for (int j = 0; j < num_vars; ++j) ya[j] += res.witness[i] * cons[i].coeffs[j];
      }
      for (const Rat& c : ya)
        if (c != 0) throw MathError("lp: Farkas witness fails y^T A = 0");
      if (yr <= 0) throw MathError("lp: Farkas witness fails y^T b > 0");
      return res;
    }
    // drive the auxiliary out of the basis if it lingers at value zero
    for (int i = 0; i < rows; ++i)
      if (d.basic[i] == aux_id) {
        for (int j = 0; j < nstruct + rows; ++j)
          if (!d.is_basic[j] && d.row[i][j] != 0) { d.pivot(i, j); break; }
        break;
      }
    for (int i = 0; i < rows; ++i) d.row[i][aux_id] = 0;
    d.obj.assign(total, Rat(0));
    d.obj_const = 0;
  }

  // phase two: maximize eps
  if (d.is_basic[eps_id]) {
    for (int i = 0; i < rows; ++i)
      if (d.basic[i] == eps_id) {
        d.obj_const = d.row_const[i];
        for (int j = 0; j < total; ++j) d.obj[j] = d.row[i][j];
        break;
      }
  } else {
    d.obj[eps_id] = 1;
  }
  if (!d.maximize()) throw MathError("lp: unbounded epsilon (cap row missing?)");

  bool has_strict = std::any_of(cons.begin(), cons.end(), [](const Constraint& c) { return c.strict; });
  if (has_strict && d.obj_const == 0) {
    Result res;
    res.feasible = false;
    res.witness.assign(m, Rat(0));
    for (int i = 0; i < m; ++i) res.witness[i] = -d.obj[nstruct + i];
    Rat yr = 0, ystrict = 0;
    RatVec ya(num_vars, Rat(0));
    for (int i = 0; i < m; ++i) {
      if (res.witness[i] < 0) throw MathError("lp: negative Farkas multiplier");
      yr += res.witness[i] * cons[i].rhs;
      if (cons[i].strict) ystrict += res.witness[i];
      for (int j = 0; j < num_vars; ++j) ya[j] += res.witness[i] * cons[i].coeffs[j];
    }
    for (const Rat& c : ya)
      if (c != 0) throw MathError("lp: Farkas witness fails y^T A = 0");
    if (!(yr > 0 || (yr == 0 && ystrict > 0)))
      throw MathError("lp: strict-infeasibility witness invalid");
    return res;
  }

  Result res;
  res.feasible = true;
  res.point.assign(num_vars, Rat(0));
  RatVec value(total, Rat(0));
  for (int i = 0; i < rows; ++i) value[d.basic[i]] = d.row_const[i];
  for (int j = 0; j < num_vars; ++j) res.point[j] = value[j] - value[nu + j];
  for (const auto& c : cons) {
    Rat lhs = 0;
    for (int j = 0; j < num_vars; ++j) lhs += c.coeffs[j] * res.point[j];
    if (lhs < c.rhs || (c.strict && lhs == c.rhs))
      throw MathError("lp: feasible point fails substitution check");
  }
  return res;
}

}  // namespace lp
}  // namespace clarke
