#include "clarke/lattice.hpp"

#include <algorithm>
#include <sstream>

namespace clarke {

IntVec primitive(const RatVec& v) {
  Int lcm = 1;
  for (const Rat& q : v) lcm = lcm / int_gcd(lcm, denominator(q)) * denominator(q);
  IntVec w(v.size());
  Int g = 0;
  for (size_t i = 0; i < v.size(); ++i) {
    w[i] = numerator(v[i]) * (lcm / denominator(v[i]));
    g = int_gcd(g, w[i]);
  }
  if (g > 1)
    for (Int& x : w) x /= g;
  return w;
}

std::string to_string(const IntVec& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

std::string to_string(const RatVec& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

namespace lattice {

Int dot(const IntVec& a, const IntVec& b) {
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat dot(const RatVec& a, const RatVec& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat dot(const IntVec& a, const RatVec& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
  return s;
}

Int pair(const LatticeVector& a, const LatticeVector& b) {
  if (a.rank() != b.rank())
    throw InputError("pair: rank mismatch");
  if (a.tag == b.tag)
    throw InputError("pair: both vectors tagged " + std::string(tag_name(a.tag)));
  return dot(a.coords, b.coords);
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.a[i][i] = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVec>& rows) {
  IntMatrix m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  m.a = rows;
  return m;
}

IntMatrix IntMatrix::from_cols(const std::vector<IntVec>& cols) {
  int c = static_cast<int>(cols.size());
  int r = cols.empty() ? 0 : static_cast<int>(cols[0].size());
  IntMatrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.a[i][j] = cols[j][i];
  return m;
}

IntVec IntMatrix::col(int j) const {
  IntVec v(rows);
  for (int i = 0; i < rows; ++i) v[i] = a[i][j];
  return v;
}

IntMatrix IntMatrix::mul(const IntMatrix& o) const {
  IntMatrix r(rows, o.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      if (a[i][k] == 0) continue;
      for (int j = 0; j < o.cols; ++j) r.a[i][j] += a[i][k] * o.a[k][j];
    }
  return r;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix r(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) r.a[j][i] = a[i][j];
  return r;
}

std::vector<Int> SmithNormalForm::invariants() const {
  std::vector<Int> inv;
  int n = std::min(d.rows, d.cols);
  for (int i = 0; i < n; ++i)
    if (d.a[i][i] != 0) inv.push_back(d.a[i][i]);
  return inv;
}

namespace {

void swap_rows(IntMatrix& m, IntMatrix& u, int i, int j) {
  std::swap(m.a[i], m.a[j]);
  std::swap(u.a[i], u.a[j]);
}

void swap_cols(IntMatrix& m, IntMatrix& v, int i, int j) {
  for (auto& row : m.a) std::swap(row[i], row[j]);
  for (auto& row : v.a) std::swap(row[i], row[j]);
}

void add_row(IntMatrix& m, IntMatrix& u, int dst, int src, const Int& c) {
  for (int j = 0; j < m.cols; ++j) m.a[dst][j] += c * m.a[src][j];
  for (int j = 0; j < u.cols; ++j) u.a[dst][j] += c * u.a[src][j];
}

void add_col(IntMatrix& m, IntMatrix& v, int dst, int src, const Int& c) {
  for (int i = 0; i < m.rows; ++i) m.a[i][dst] += c * m.a[i][src];
  for (int i = 0; i < v.rows; ++i) v.a[i][dst] += c * v.a[i][src];
}

void negate_row(IntMatrix& m, IntMatrix& u, int i) {
  for (auto& x : m.a[i]) x = -x;
  for (auto& x : u.a[i]) x = -x;
}

}  // namespace

SmithNormalForm smith_normal_form(const IntMatrix& input) {
  SmithNormalForm s;
  s.d = input;
  s.u = IntMatrix::identity(input.rows);
  s.v = IntMatrix::identity(input.cols);
  IntMatrix& m = s.d;

  int n = std::min(m.rows, m.cols);
  for (int t = 0; t < n; ++t) {
    // find a nonzero pivot of minimal absolute value in the trailing block
    int pi = -1, pj = -1;
    Int best = 0;
    for (int i = t; i < m.rows; ++i)
      for (int j = t; j < m.cols; ++j) {
        if (m.a[i][j] == 0) continue;
        Int v = abs(m.a[i][j]);
        if (pi < 0 || v < best) { best = v; pi = i; pj = j; }
      }
    if (pi < 0) break;
    swap_rows(m, s.u, t, pi);
    swap_cols(m, s.v, t, pj);

    bool again = true;
    while (again) {
      again = false;
      for (int i = t + 1; i < m.rows; ++i) {
        if (m.a[i][t] == 0) continue;
        Int q = floor_div(m.a[i][t], m.a[t][t]);
        add_row(m, s.u, i, t, -q);
        if (m.a[i][t] != 0) { swap_rows(m, s.u, t, i); again = true; }
      }
      for (int j = t + 1; j < m.cols; ++j) {
        if (m.a[t][j] == 0) continue;
        Int q = floor_div(m.a[t][j], m.a[t][t]);
        add_col(m, s.v, j, t, -q);
        if (m.a[t][j] != 0) { swap_cols(m, s.v, t, j); again = true; }
      }
      if (again) continue;
      // divisibility: every remaining entry must be a multiple of the pivot
      for (int i = t + 1; i < m.rows && !again; ++i)
        for (int j = t + 1; j < m.cols && !again; ++j)
          if (m.a[i][j] % m.a[t][t] != 0) {
            add_row(m, s.u, t, i, 1);
            again = true;
          }
    }
    if (m.a[t][t] < 0) negate_row(m, s.u, t);
  }
  return s;
}

Int det(const IntMatrix& a) {
  if (a.rows != a.cols) throw InputError("det: matrix not square");
  // fraction-free Gaussian elimination (Bareiss)
  int n = a.rows;
  if (n == 0) return 1;
  std::vector<IntVec> m = a.a;
  Int sign = 1, prev = 1;
  for (int t = 0; t < n - 1; ++t) {
    if (m[t][t] == 0) {
      int p = -1;
      for (int i = t + 1; i < n; ++i)
        if (m[i][t] != 0) { p = i; break; }
      if (p < 0) return 0;
      std::swap(m[t], m[p]);
      sign = -sign;
    }
    for (int i = t + 1; i < n; ++i)
      for (int j = t + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[t][t] - m[i][t] * m[t][j]) / prev;
    prev = m[t][t];
  }
  return sign * m[n - 1][n - 1];
}

std::optional<RatVec> solve_rational(const std::vector<RatVec>& a, const RatVec& b) {
  size_t rows = a.size();
  size_t cols = rows ? a[0].size() : 0;
  std::vector<RatVec> m(rows, RatVec(cols + 1));
  for (size_t i = 0; i < rows; ++i) {
    for (size_t j = 0; j < cols; ++j) m[i][j] = a[i][j];
    m[i][cols] = b[i];
  }
  std::vector<int> pivot_col;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[r], m[p]);
    Rat inv = m[r][c];
    for (size_t j = c; j <= cols; ++j) m[r][j] /= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (size_t j = c; j <= cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivot_col.push_back(static_cast<int>(c));
    ++r;
  }
  for (size_t i = r; i < rows; ++i)
    if (m[i][cols] != 0) return std::nullopt;
  RatVec x(cols, Rat(0));
  for (size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = m[i][cols];
  return x;
}

std::optional<RatVec> solve_rational(const IntMatrix& a, const RatVec& b) {
  std::vector<RatVec> rows(a.rows, RatVec(a.cols));
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) rows[i][j] = Rat(a.a[i][j]);
  return solve_rational(rows, b);
}

std::optional<IntVec> solve_integral(const IntMatrix& a, const IntVec& b) {
  SmithNormalForm s = smith_normal_form(a);
  // A = U^-1 D V^-1, so A x = b  <=>  D y = U b with x = V y.
  IntVec ub(a.rows, 0);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.rows; ++j) ub[i] += s.u.a[i][j] * b[j];
  IntVec y(a.cols, 0);
  int n = std::min(a.rows, a.cols);
  for (int i = 0; i < a.rows; ++i) {
    Int di = i < n ? s.d.a[i][i] : Int(0);
    if (di == 0) {
      if (ub[i] != 0) return std::nullopt;
    } else {
      if (ub[i] % di != 0) return std::nullopt;
      y[i] = ub[i] / di;
    }
  }
  IntVec x(a.cols, 0);
  for (int i = 0; i < a.cols; ++i)
    for (int j = 0; j < a.cols; ++j) x[i] += s.v.a[i][j] * y[j];
  return x;
}

int rank_rational(const std::vector<RatVec>& rows_in) {
  std::vector<RatVec> m = rows_in;
  size_t rows = m.size();
  size_t cols = rows ? m[0].size() : 0;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[r], m[p]);
    for (size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      Rat f = m[i][c] / m[r][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return static_cast<int>(r);
}

std::vector<IntVec> saturation_basis(const IntMatrix& a) {
  SmithNormalForm s = smith_normal_form(a);
  // A V = U^-1 D, so columns of U^-1 matching nonzero invariants span the
  // saturation of the column space over Z.
  int r = s.rank();
  // invert the unimodular U by solving U X = I over Q (entries are integral)
  IntMatrix uinv(a.rows, a.rows);
  for (int j = 0; j < a.rows; ++j) {
    RatVec e(a.rows, Rat(0));
    e[j] = 1;
    auto x = solve_rational(s.u, e);
    for (int i = 0; i < a.rows; ++i) uinv.a[i][j] = numerator((*x)[i]);
  }
  std::vector<IntVec> basis;
  for (int j = 0; j < r; ++j) basis.push_back(uinv.col(j));
  return basis;
}

}  // namespace lattice
}  // namespace clarke
