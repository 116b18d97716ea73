#include "ybs/quantumcoha.hpp"

#include <array>

#include "ybs/ybops.hpp"

namespace ybs {

namespace {

MultiPoly tv(const VarSetPtr& vs, int j) { return MultiPoly::t(vs, j); }
MultiPoly qv(const VarSetPtr& vs) { return MultiPoly::var(vs, "q"); }
RatFunc constant(const VarSetPtr& vs, long c) { return RatFunc(MultiPoly(vs, Rational(c))); }

SparseOperator commutator(const SparseOperator& a, const SparseOperator& b) { return a * b - b * a; }

// c1(T_n) on the fixed points of weight n
SparseOperator chern1(int N, int n) {
  const VarSetPtr vs = VarSet::standard(N);
  SparseOperator c(N);
  for (const auto& w : words_of_weight(N, n)) {
    MultiPoly s(vs);
    for (int i : w.ones()) s += tv(vs, i);
    c.set(w, w, RatFunc(s));
  }
  return c;
}

SparseOperator power(const SparseOperator& diag, int e, int N) {
  SparseOperator r = SparseOperator::identity(N, VarSet::standard(N));
  for (int i = 0; i < e; ++i) r = r * diag;
  return r;
}

long binom(int j, int m) {
  long r = 1;
  for (int i = 1; i <= m; ++i) r = r * (j - m + i) / i;
  return r;
}

}  // namespace

// ---------------------------------------------------------------- quantum T

QuantumOperator QuantumOperator::at_q(const MultiPoly& value) const {
  const VarSetPtr vs = VarSet::standard(N);
  QuantumOperator r = *this;
  r.series = series.map_coeffs([&](const SparseOperator& op) {
    return op.map_entries([&](const RatFunc& f) { return f.specialize({{vs->index("q"), value}}); });
  });
  return r;
}

QuantumOperator quantum_T(Model m, int N, int n) {
  const VarSetPtr vs = VarSet::standard(N);
  const Monodromy& M = monodromy(m, N);
  const SparseOperator full = M[Tag::A] + RatFunc(qv(vs)) * M[Tag::D];
  return {m, N, n, OperatorPoly::from_operator(full.restrict_weights(n, n), vs->index("x"))};
}

Report check_quantum_commute(Model m, int N, bool cross) {
  Report rep("quantum-commute", to_string(m), N);
  const Model other = m == Model::OSC ? Model::VIC : Model::OSC;
  for (int n = 0; n <= N; ++n) {
    const OperatorPoly T = quantum_T(m, N, n).series;
    const std::string col = "n=" + std::to_string(n);
    for (int i = 0; i <= T.degree(); ++i)
      for (int j = i + 1; j <= T.degree(); ++j) {
        const SparseOperator c = commutator(T.coeff(i), T.coeff(j));
        rep.expect(c.is_zero(), "T^(" + std::to_string(i) + ") T^(" + std::to_string(j) + ") = T^(j) T^(i)", "", col,
                   std::to_string(c.nnz()) + " nonzero entries", "0");
      }
    if (!cross) continue;
    const OperatorPoly U = quantum_T(other, N, n).series;
    for (int i = 0; i <= T.degree(); ++i)
      for (int j = 0; j <= U.degree(); ++j) {
        const SparseOperator c = commutator(T.coeff(i), U.coeff(j));
        rep.expect(c.is_zero(), "T^(" + std::to_string(i) + ") and T'^(" + std::to_string(j) + ") commute", "", col,
                   std::to_string(c.nnz()) + " nonzero entries", "0");
      }
  }
  return rep;
}

Report check_quantum_specialize(Model m, int N) {
  Report rep("quantum-specialize", to_string(m), N);
  const VarSetPtr vs = VarSet::standard(N);
  const bool primed = m == Model::VIC;
  const SparseOperator geomA = to_standard_basis(geom_operator(N, Tag::A, primed));
  for (int n = 0; n <= N; ++n) {
    const QuantumOperator T = quantum_T(m, N, n);
    const OperatorPoly a = OperatorPoly::from_operator(geomA.restrict_weights(n, n), vs->index("x"));
    rep.expect(T.at_q(MultiPoly(vs)).series == a, "T(x) at q = 0 is A(x)", "n=" + std::to_string(n));
  }
  // top class for T, bottom class for T'
  const SpinWord w = primed ? SpinWord(N, 0) : SpinWord(N, (std::uint32_t(1) << N) - 1);
  MultiPoly e = qv(vs) + MultiPoly(vs, Rational(1));
  MultiPoly prod(vs, Rational(1));
  for (int j = 1; j <= N; ++j) prod *= MultiPoly::var(vs, "x") + Rational(primed ? -1 : 1) * tv(vs, j);
  e = prod + qv(vs);
  const SparseOperator full = quantum_T(m, N, w.weight()).series.evaluate(MultiPoly::var(vs, "x"));
  TensorVector expect(N);
  expect.add(w, RatFunc(e));
  compare_vectors(rep, primed ? "T'(x) v_0...0 = (prod (x - t_j) + q) v_0...0" : "T(x) v_1...1 = (prod (x + t_j) + q) v_1...1",
                  w.str(), full.apply(TensorVector::basis(w, vs)), expect);
  if (!primed)
    for (int n = 1; n <= N; ++n) {
      const QuantumOperator T = quantum_T(m, N, n);
      const SparseOperator top = T.series.coeff(n - 1) - T.at_q(MultiPoly(vs)).series.coeff(n - 1);
      compare_operators(rep, "x^(n-1) coefficient of T(x) - A(x) = q D^(n-1)", top, RatFunc(qv(vs)) * rimhook_D(N, n));
    }
  return rep;
}

// ---------------------------------------------------------------- rim hook

SparseOperator rimhook_D(int N, int n) {
  const VarSetPtr vs = VarSet::standard(N);
  SparseOperator r(N);
  if (n < 1) return r;
  for (const auto& w : words_of_weight(N, n)) {
    if (w.at(N) != 1) continue;
    if (N > 1 && w.at(1) != 0) continue;
    r.set(w.swapped(1, N), w, constant(vs, 1));
  }
  return r;
}

Report check_rimhook(int N) {
  Report rep("rimhook", "osc", N);
  const OperatorPoly& D = block_poly(Model::OSC, N, Tag::D);
  std::size_t printed_only = 0;
  for (int n = 1; n <= N; ++n) {
    compare_operators(rep, "D^(n-1) on weight " + std::to_string(n) + " = rim-hook rule", D.coeff(n - 1).restrict_weights(n, n),
                      rimhook_D(N, n));
    for (const auto& w : words_of_weight(N, n))
      if (N > 1 && w.at(1) == 1 && w.at(N) == 1) ++printed_only;
  }
  if (printed_only)
    rep.notes.push_back("the rule without the lambda_1 = 0 condition would wrongly send " + std::to_string(printed_only) +
                        " words to themselves");
  return rep;
}

// ---------------------------------------------------------------- COHA

SparseOperator gamma(GammaSign s, int j, int N, int n) {
  SparseOperator r(N);
  const bool plus = s == GammaSign::Plus;
  const int level = plus ? n : n - 1;  // flag variety X_(level, 1, N - level - 1)
  if (level < 0 || level >= N) return r;
  const VarSetPtr vs = VarSet::standard(N);
  const auto ej = [&](FlagFunction f) {
    for (auto& [x, v] : f) v *= RatFunc(tv(vs, x.z).pow(unsigned(j)));
    return f;
  };
  for (const auto& src : words_of_weight(N, n)) {
    const LocFunction col = plus ? pushforward_ab(N, level, FlagMap::Pi2, ej(pullback(N, level, FlagMap::Pi1, indicator(N, src))))
                                 : pushforward_ab(N, level, FlagMap::Pi1, ej(pullback(N, level, FlagMap::Pi2, indicator(N, src))));
    for (const auto& [y, v] : col)
      if (!v.is_zero()) r.set(y, src, v);
  }
  return r;
}

SparseOperator gamma_total(GammaSign s, int j, int N) {
  SparseOperator r(N);
  for (int n = 0; n <= N; ++n) r += gamma(s, j, N, n);
  return r;
}

SparseOperator gamma_closed(GammaSign s, int j, int N, int n) {
  const VarSetPtr vs = VarSet::standard(N);
  SparseOperator r(N);
  for (const auto& w : words_of_weight(N, n)) {
    if (s == GammaSign::Plus)
      for (int z : w.zeros()) {
        std::vector<RatFunc::Factor> den;
        for (int i : w.ones()) den.push_back({i, z});
        r.set(w.with(z, 1), w, RatFunc(tv(vs, z).pow(unsigned(j)), den));
      }
    else
      for (int z : w.ones()) {
        std::vector<RatFunc::Factor> den;
        for (int i : w.zeros()) den.push_back({z, i});
        r.set(w.with(z, 0), w, RatFunc(tv(vs, z).pow(unsigned(j)), den));
      }
  }
  return r;
}

SparseOperator gamma_binomial(GammaSign s, int j, int N, int n) {
  SparseOperator r(N);
  const bool plus = s == GammaSign::Plus;
  const int level = plus ? n : n - 1;
  if (level < 0 || level >= N) return r;
  const auto [b, c] = bn_cn(N, level);
  const SparseOperator lo = chern1(N, level), hi = chern1(N, level + 1);
  for (int m = 0; m <= j; ++m) {
    const SparseOperator term = plus ? power(hi, j - m, N) * (b * power(lo, m, N)) : power(lo, m, N) * (c * power(hi, j - m, N));
    r += constant(VarSet::standard(N), (m % 2 ? -1 : 1) * binom(j, m)) * term;
  }
  return r;
}

Report check_coha(int N, int jmax) {
  Report rep("coha", "-", N);
  const VarSetPtr vs = VarSet::standard(N);
  const char* names[2] = {"gamma+", "gamma-"};
  for (GammaSign s : {GammaSign::Plus, GammaSign::Minus}) {
    const std::string g = names[int(s)];
    for (int j = 0; j <= jmax; ++j)
      for (int n = 0; n <= N; ++n) {
        const SparseOperator G = gamma(s, j, N, n);
        const std::string at = "_" + std::to_string(j) + " on weight " + std::to_string(n);
        compare_operators(rep, g + at + ": pushforward = closed form", G, gamma_closed(s, j, N, n));
        compare_operators(rep, g + at + ": pushforward = binomial expansion", G, gamma_binomial(s, j, N, n));
      }
  }
  // gamma_1 through Yang-Baxter generators: c1(T_n) and b_n (resp. c_n) as x-coefficients
  const OperatorPoly A = geom_series(N, Tag::A, false), B = geom_series(N, Tag::B, false);
  const OperatorPoly Ap = geom_series(N, Tag::A, true), Cp = geom_series(N, Tag::C, true);
  MultiPoly e1(vs);
  for (int j = 1; j <= N; ++j) e1 += tv(vs, j);
  const auto c1_from_A = [&](int n) {
    return n == 0 ? SparseOperator(N) : A.coeff(n - 1).restrict_weights(n, n);
  };
  const auto c1_from_Ap = [&](int n) {
    SparseOperator r = RatFunc(e1) * SparseOperator::identity(N, vs).restrict_weights(n, n);
    if (n < N) r += Ap.coeff(N - n - 1).restrict_weights(n, n);
    return r;
  };
  for (int n = 0; n < N; ++n) {
    const SparseOperator bn = B.coeff(n).restrict_weights(n, n + 1);
    compare_operators(rep, "gamma+_1 = c1(T_{n+1}) b_n - b_n c1(T_n), n=" + std::to_string(n), gamma(GammaSign::Plus, 1, N, n),
                      c1_from_A(n + 1) * bn - bn * c1_from_A(n));
    const SparseOperator cn = Cp.coeff(N - n - 1).restrict_weights(n + 1, n);
    compare_operators(rep, "gamma-_1 = c_n c1(T_{n+1}) - c1(T_n) c_n, n=" + std::to_string(n),
                      gamma(GammaSign::Minus, 1, N, n + 1), cn * c1_from_Ap(n + 1) - c1_from_Ap(n) * cn);
  }
  // exterior relations on the direct sum
  for (GammaSign s : {GammaSign::Plus, GammaSign::Minus}) {
    std::vector<SparseOperator> G;
    for (int j = 0; j <= jmax; ++j) G.push_back(gamma_total(s, j, N));
    for (int j = 0; j <= jmax; ++j)
      for (int k = j; k <= jmax; ++k) {
        const SparseOperator ac = G[std::size_t(j)] * G[std::size_t(k)] + G[std::size_t(k)] * G[std::size_t(j)];
        rep.expect(ac.is_zero(), std::string(names[int(s)]) + "_j " + names[int(s)] + "_k = -" + names[int(s)] + "_k " +
                                     names[int(s)] + "_j",
                   "j=" + std::to_string(j), "k=" + std::to_string(k), std::to_string(ac.nnz()) + " nonzero entries", "0");
      }
    // S_N-equivariance: G(s mu, s lambda) = s(G(mu, lambda))
    for (int j = 0; j <= jmax; ++j)
      for (int i = 1; i < N; ++i) {
        const Permutation si = Permutation::simple(N, i);
        const SparseOperator& g = G[std::size_t(j)];
        SparseOperator moved(N);
        g.for_each([&](const SpinWord& r, const SpinWord& c, const RatFunc& v) {
          moved.set(si.act(r), si.act(c), act_on_frac(si, v));
        });
        compare_operators(rep, std::string(names[int(s)]) + "_" + std::to_string(j) + " commutes with s_" + std::to_string(i),
                          moved, g);
      }
  }
  if (N == 2) {
    // gamma_j^+ b_01 = t1^j / (t2 - t1) b_11
    for (int j = 0; j <= jmax; ++j) {
      const RatFunc v = gamma(GammaSign::Plus, j, 2, 1).at(SpinWord::parse("11"), SpinWord::parse("01"));
      const RatFunc expect(tv(vs, 1).pow(unsigned(j)), {{2, 1}});
      rep.expect(v == expect, "gamma+_j b_01 = t1^j / (t2 - t1) b_11", "j=" + std::to_string(j), "", v.str(), expect.str());
    }
  }
  return rep;
}

// ---------------------------------------------------------------- gl2[t]

std::string CurrentGenerator::str() const {
  static const char* names[] = {"E", "F", "H1", "H2"};
  return std::string(names[int(base)]) + "*t^" + std::to_string(power);
}

CurrentBase parse_current_base(std::string_view s) {
  if (s == "E") return CurrentBase::E;
  if (s == "F") return CurrentBase::F;
  if (s == "H1") return CurrentBase::H1;
  if (s == "H2") return CurrentBase::H2;
  throw std::invalid_argument("unknown current generator '" + std::string(s) + "' (E, F, H1, H2)");
}

namespace {

// matrix unit E_{ab}, a, b in {1, 2}; index 1 is v0, index 2 is v1
std::pair<int, int> unit_of(CurrentBase b) {
  switch (b) {
    case CurrentBase::E: return {1, 2};
    case CurrentBase::F: return {2, 1};
    case CurrentBase::H1: return {1, 1};
    case CurrentBase::H2: return {2, 2};
  }
  return {1, 1};
}

CurrentBase base_of(int a, int b) {
  if (a == 1 && b == 2) return CurrentBase::E;
  if (a == 2 && b == 1) return CurrentBase::F;
  return a == 1 ? CurrentBase::H1 : CurrentBase::H2;
}

}  // namespace

SparseOperator current_act(const CurrentGenerator& g, int N) {
  const VarSetPtr vs = VarSet::standard(N);
  const auto [a, b] = unit_of(g.base);
  SparseOperator r(N);
  for (const auto& w : all_words(N))
    for (int l = 1; l <= N; ++l)
      if (w.at(l) == b - 1) r.add(w.with(l, a - 1), w, RatFunc(tv(vs, l).pow(unsigned(g.power))));
  return r;
}

Report check_current(int N, int max_degree) {
  Report rep("current", "-", N);
  const VarSetPtr vs = VarSet::standard(N);
  const std::array<CurrentBase, 4> bases{CurrentBase::E, CurrentBase::F, CurrentBase::H1, CurrentBase::H2};
  // weight behaviour
  for (CurrentBase x : bases) {
    const auto [a, b] = unit_of(x);
    const SparseOperator op = current_act({x, 1}, N);
    bool ok = true;
    op.for_each([&](const SpinWord& r, const SpinWord& c, const RatFunc&) { ok = ok && r.weight() - c.weight() == a - b; });
    rep.expect(ok, CurrentGenerator{x, 1}.str() + " shifts the number of ones by " + std::to_string(a - b));
  }
  TensorVector v1(1);
  v1 = current_act({CurrentBase::E, 0}, 1).apply(TensorVector::basis(SpinWord::parse("1"), VarSet::standard(1)));
  rep.expect(v1 == TensorVector::basis(SpinWord::parse("0"), VarSet::standard(1)), "E v1 = v0 on one slot");
  // power sums
  for (int r = 0; r <= max_degree; ++r) {
    MultiPoly p(vs);
    for (int l = 1; l <= N; ++l) p += tv(vs, l).pow(unsigned(r));
    compare_operators(rep, "(H1 + H2) t^" + std::to_string(r) + " = p_" + std::to_string(r),
                      current_act({CurrentBase::H1, r}, N) + current_act({CurrentBase::H2, r}, N),
                      RatFunc(p) * SparseOperator::identity(N, vs));
  }
  // brackets [E_ab t^i, E_cd t^j] = (delta_bc E_ad - delta_da E_cb) t^(i+j)
  for (CurrentBase x : bases)
    for (CurrentBase y : bases)
      for (int i = 0; i <= max_degree; ++i)
        for (int j = 0; i + j <= max_degree; ++j) {
          const auto [a, b] = unit_of(x);
          const auto [c, d] = unit_of(y);
          SparseOperator rhs(N);
          if (b == c) rhs += current_act({base_of(a, d), i + j}, N);
          if (d == a) rhs -= current_act({base_of(c, b), i + j}, N);
          compare_operators(rep,
                            "[" + CurrentGenerator{x, i}.str() + ", " + CurrentGenerator{y, j}.str() + "]",
                            commutator(current_act({x, i}, N), current_act({y, j}, N)), rhs);
        }
  // S_N by simultaneous permutation of slots and variables, and symmetric multipliers
  std::vector<MultiPoly> sym;
  for (int k = 1; k <= N; ++k) {
    MultiPoly p(vs);
    for (int l = 1; l <= N; ++l) p += tv(vs, l).pow(unsigned(k));
    sym.push_back(p);
  }
  std::size_t twisted_fail = 0;
  for (CurrentBase x : bases)
    for (int pw = 0; pw <= std::min(max_degree, 2); ++pw) {
      const CurrentGenerator g{x, pw};
      const SparseOperator op = current_act(g, N);
      const SparseOperator opB = to_standard_basis(op);  // the same action read in the Bethe basis
      for (const auto& w : all_words(N)) {
        const TensorVector v = TensorVector::basis(w, vs);
        for (int i = 1; i < N; ++i) {
          compare_vectors(rep, g.str() + " commutes with the permutation s_" + std::to_string(i), w.str(),
                          op.apply(naive_flip(i, v)), naive_flip(i, op.apply(v)));
          compare_vectors(rep, g.str() + " in the Bethe basis commutes with s_" + std::to_string(i), w.str(),
                          opB.apply(sym_action(Model::OSC, i, v)), sym_action(Model::OSC, i, opB.apply(v)));
          if (op.apply(sym_action(Model::OSC, i, v)) != sym_action(Model::OSC, i, op.apply(v))) ++twisted_fail;
        }
        for (const auto& p : sym)
          compare_vectors(rep, g.str() + " is P^S_N-linear", w.str(), op.apply(RatFunc(p) * v), RatFunc(p) * op.apply(v));
      }
    }
  if (twisted_fail)
    rep.notes.push_back("standard-basis current action does not commute with the H-action s_i (" +
                        std::to_string(twisted_fail) + " basis vectors); it does after passing to the Bethe basis");
  return rep;
}

}  // namespace ybs
