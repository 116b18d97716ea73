#pragma once

// Independent numeric oracles: evaluation at rational points and dense
// monodromy matrices built from Kronecker products of the Lax tables.

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "ybs/random.hpp"
#include "ybs/vertexmodel.hpp"

namespace oracle {

using ybs::MultiPoly;
using ybs::Rational;
using ybs::RatFunc;

using Point = std::map<std::string, Rational>;
using Dense = std::vector<std::vector<Rational>>;

inline Rational eval(const MultiPoly& p, const Point& pt) {
  if (p.is_zero()) return 0;
  const auto& vs = p.varset();
  std::vector<std::pair<std::size_t, MultiPoly>> b;
  for (std::size_t i = 0; i < vs->size(); ++i) {
    auto it = pt.find(vs->name(i));
    b.emplace_back(i, MultiPoly(vs, it == pt.end() ? Rational(0) : it->second));
  }
  return p.specialize(b).constant_term();
}

inline Rational eval(const RatFunc& f, const Point& pt) {
  Rational r = eval(f.num(), pt);
  for (auto [a, b] : f.den()) r /= pt.at("t" + std::to_string(a)) - pt.at("t" + std::to_string(b));
  return r;
}

// Distinct small integers for t1..tN, plus the named extra variables.
inline Point random_point(int N, ybs::Rng& rng, std::vector<std::string> extra = {"x", "x1", "x2", "y", "q"}) {
  Point p;
  std::vector<int> used;
  std::uniform_int_distribution<int> d(-40, 40);
  for (int i = 1; i <= N; ++i) {
    int v;
    do v = d(rng);
    while (std::find(used.begin(), used.end(), v) != used.end());
    used.push_back(v);
    p["t" + std::to_string(i)] = v;
  }
  for (const auto& e : extra) {
    Rational q(d(rng), 1 + (d(rng) & 7));
    q.canonicalize();
    p[e] = q;
  }
  return p;
}

inline Dense identity(std::size_t n) {
  Dense m(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline Dense mul(const Dense& a, const Dense& b) {
  Dense c(a.size(), std::vector<Rational>(b[0].size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      if (a[i][k] != 0)
        for (std::size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

// 4x4 table with local variables (x, y, t) set to numbers.
inline Dense table_at(const ybs::Table& T, const Rational& x, const Rational& y, const Rational& t) {
  Dense m(4, std::vector<Rational>(4));
  const Point pt{{"x", x}, {"y", y}, {"t", t}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m[i][j] = eval(T[i][j], pt);
  return m;
}

// Operator on `nspaces` two-dimensional factors acting by T on factors (a, b),
// T[out][in] in the basis (first, second) = (factor a, factor b). Factor 0 is
// the most significant bit of the state index.
inline Dense embed_pair(const Dense& T, int nspaces, int a, int b) {
  const std::size_t dim = std::size_t(1) << nspaces;
  Dense m(dim, std::vector<Rational>(dim, 0));
  auto bit = [&](std::size_t s, int f) { return int((s >> (nspaces - 1 - f)) & 1); };
  for (std::size_t s = 0; s < dim; ++s) {
    const int in = 2 * bit(s, a) + bit(s, b);
    for (int out = 0; out < 4; ++out) {
      if (T[out][in] == 0) continue;
      std::size_t r = s;
      r &= ~(std::size_t(1) << (nspaces - 1 - a));
      r &= ~(std::size_t(1) << (nspaces - 1 - b));
      r |= std::size_t(out >> 1) << (nspaces - 1 - a);
      r |= std::size_t(out & 1) << (nspaces - 1 - b);
      m[r][s] += T[out][in];
    }
  }
  return m;
}

// M = L_{0N} ... L_{01} at spectral value x, factor 0 auxiliary.
inline Dense monodromy(const ybs::VertexModel& m, int N, const Point& pt) {
  Dense M = identity(std::size_t(1) << (N + 1));
  for (int j = 1; j <= N; ++j) {
    const Dense L = table_at(m.table(ybs::Role::Lax), pt.at("x"), 0, pt.at("t" + std::to_string(j)));
    M = mul(embed_pair(L, N + 1, 0, j), M);
  }
  return M;
}

// Block O_ab: entry (out word, in word) with aux output a and input b.
inline Rational block_entry(const Dense& M, int N, ybs::Tag tag, const ybs::SpinWord& out, const ybs::SpinWord& in) {
  auto [a, b] = ybs::tag_labels(tag);
  const std::size_t r = (std::size_t(a) << N) | out.code();
  const std::size_t c = (std::size_t(b) << N) | in.code();
  return M[r][c];
}

}  // namespace oracle
