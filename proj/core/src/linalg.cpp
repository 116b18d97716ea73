#include "ybs/linalg.hpp"

#include <algorithm>
#include <limits>

namespace ybs {

std::vector<std::size_t> rref(QMatrix& a) {
  std::vector<std::size_t> pivots;
  if (a.empty()) return pivots;
  const std::size_t rows = a.size(), cols = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    const Rational inv = Rational(1) / a[r][c];
    for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(QMatrix a) { return rref(a).size(); }

std::vector<std::vector<Rational>> nullspace(QMatrix a, std::size_t ncols) {
  const auto piv = rref(a);
  std::vector<bool> is_pivot(ncols, false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(ncols, Rational(0));
    v[f] = 1;
    for (std::size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -a[k][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

namespace {

bool is_unit(const RatFunc& f) {
  if (f.is_zero()) return false;
  return f.num().is_constant() || factor_linear_differences(f.num()).has_value();
}

}  // namespace

FracMatrix solve(FracMatrix a, FracMatrix b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw AlgebraError("solve: row count mismatch");
  const std::size_t m = n ? b[0].size() : 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t best = n, best_cost = std::numeric_limits<std::size_t>::max();
    bool any_nonzero = false;
    for (std::size_t r = c; r < n; ++r) {
      if (a[r][c].is_zero()) continue;
      any_nonzero = true;
      if (!is_unit(a[r][c])) continue;
      const std::size_t cost = a[r][c].den().size() * 4 + a[r][c].num().size();
      if (cost < best_cost) {
        best = r;
        best_cost = cost;
      }
    }
    if (!any_nonzero) throw DivisionByZero("solve: singular matrix");
    if (best == n) throw NonLocalizable("solve: no unit pivot in column " + std::to_string(c));
    std::swap(a[best], a[c]);
    std::swap(b[best], b[c]);
    const RatFunc inv = RatFunc(MultiPoly(a[c][c].varset(), Rational(1))) / a[c][c];
    for (std::size_t j = c; j < n; ++j) a[c][j] *= inv;
    for (std::size_t j = 0; j < m; ++j) b[c][j] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c].is_zero()) continue;
      const RatFunc f = a[r][c];
      for (std::size_t j = c; j < n; ++j)
        if (!a[c][j].is_zero()) a[r][j] -= f * a[c][j];
      for (std::size_t j = 0; j < m; ++j)
        if (!b[c][j].is_zero()) b[r][j] -= f * b[c][j];
    }
  }
  return b;
}

FracMatrix inverse(const FracMatrix& a) {
  const std::size_t n = a.size();
  VarSetPtr vs;
  for (const auto& row : a)
    for (const auto& e : row)
      if (!vs && e.varset()) vs = e.varset();
  FracMatrix id(n, std::vector<RatFunc>(n));
  for (std::size_t i = 0; i < n; ++i) id[i][i] = RatFunc(MultiPoly(vs, Rational(1)));
  return solve(a, id);
}

MultiPoly cleared_determinant(const FracMatrix& a) {
  const std::size_t n = a.size();
  VarSetPtr vs;
  for (const auto& row : a)
    for (const auto& e : row)
      if (!vs && e.varset()) vs = e.varset();
  std::vector<std::vector<MultiPoly>> m(n, std::vector<MultiPoly>(n));
  for (std::size_t i = 0; i < n; ++i) {
    // row lcm of denominators: multiset max of the factor lists
    std::vector<RatFunc::Factor> lcm;
    for (const auto& e : a[i]) {
      std::vector<RatFunc::Factor> merged;
      std::size_t p = 0, q = 0;
      const auto& d = e.den();
      while (p < lcm.size() || q < d.size()) {
        if (q == d.size() || (p < lcm.size() && lcm[p] < d[q])) {
          merged.push_back(lcm[p++]);
        } else if (p == lcm.size() || d[q] < lcm[p]) {
          merged.push_back(d[q++]);
        } else {
          merged.push_back(lcm[p]);
          ++p;
          ++q;
        }
      }
      lcm = std::move(merged);
    }
    MultiPoly L(vs, Rational(1));
    for (const auto& [x, y] : lcm) L *= MultiPoly::t(vs, x) - MultiPoly::t(vs, y);
    for (std::size_t j = 0; j < n; ++j) m[i][j] = (RatFunc(L) * a[i][j]).to_poly();
  }
  // Bareiss
  MultiPoly prev(vs, Rational(1));
  bool neg = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m[p][k].is_zero()) ++p;
      if (p == n) return MultiPoly(vs);
      std::swap(m[p], m[k]);
      neg = !neg;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = divide_exact(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      m[i][k] = MultiPoly(vs);
    }
    prev = m[k][k];
  }
  if (n == 0) return MultiPoly(vs, Rational(1));
  MultiPoly d = m[n - 1][n - 1];
  return neg ? -d : d;
}

bool invertible_over_loc(const FracMatrix& a) {
  const MultiPoly d = cleared_determinant(a);
  if (d.is_zero()) return false;
  return d.is_constant() || factor_linear_differences(d).has_value();
}

}  // namespace ybs
