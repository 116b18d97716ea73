#include "ybs/ybops.hpp"

#include <algorithm>

#include "ybs/random.hpp"

namespace ybs {

BetheIndex BetheIndex::of(const SpinWord& lambda) { return {lambda.size(), lambda.zeros()}; }

std::vector<BetheIndex> BetheIndex::all(int N) {
  std::vector<BetheIndex> r;
  for (const auto& w : all_words(N)) r.push_back(of(w));
  return r;
}

SpinWord BetheIndex::word() const {
  SpinWord w(N, (std::uint32_t(1) << N) - 1);
  for (int i : removed) w = w.with(i, 0);
  return w;
}

SparseOperator yb_generator(Model m, int N, Tag tag, int i) { return block_poly(m, N, tag).coeff(i); }

namespace {

MultiPoly minus_t(const VarSetPtr& vs, int j) { return -MultiPoly::t(vs, j); }

SpinWord all_ones(int N) { return SpinWord(N, (std::uint32_t(1) << N) - 1); }

}  // namespace

TensorVector bethe_vector_ordered(int N, const std::vector<int>& order) {
  const VarSetPtr vs = VarSet::standard(N);
  const OperatorPoly& C = block_poly(Model::OSC, N, Tag::C);
  TensorVector v = TensorVector::basis(all_ones(N), vs);
  for (auto it = order.rbegin(); it != order.rend(); ++it) v = C.apply(v, minus_t(vs, *it));
  return v;
}

RatFunc bethe_normalization(const SpinWord& lambda) {
  const int N = lambda.size();
  std::vector<RatFunc::Factor> den;
  for (int b : lambda.zeros())
    for (int a : lambda.ones()) den.push_back({a, b});
  return RatFunc(MultiPoly(VarSet::standard(N), Rational(1)), std::move(den));
}

TensorVector bethe_vector(const BetheIndex& idx, bool normalized) {
  TensorVector v = bethe_vector_ordered(idx.N, idx.removed);
  if (normalized) v *= bethe_normalization(idx.word());
  return v;
}

TensorVector bethe_vector_primed(int N, const std::vector<int>& ones) {
  const VarSetPtr vs = VarSet::standard(N);
  const OperatorPoly& B = block_poly(Model::VIC, N, Tag::B);
  TensorVector v = TensorVector::basis(SpinWord(N, 0), vs);
  for (auto it = ones.rbegin(); it != ones.rend(); ++it) v = B.apply(v, MultiPoly::t(vs, *it));
  return v;
}

Report bethe_eigencheck(const BetheIndex& idx) {
  const int N = idx.N;
  Report rep("bethe-eigen", "osc", N);
  const VarSetPtr vs = VarSet::standard(N);
  const MultiPoly x = MultiPoly::var(vs, "x");
  const TensorVector b = bethe_vector(idx, false);
  MultiPoly ev(vs, Rational(1));
  for (int j = 1; j <= N; ++j)
    if (!std::binary_search(idx.removed.begin(), idx.removed.end(), j)) ev *= x + MultiPoly::t(vs, j);
  const TensorVector lhs = block_poly(Model::OSC, N, Tag::A).apply(b, x);
  compare_vectors(rep, "A(x) b = ev b [" + idx.word().str() + "]", "", lhs, RatFunc(ev) * b);
  rep.expect(!b.is_zero(), "b nonzero [" + idx.word().str() + "]");
  return rep;
}

// ---------------------------------------------------------------- H-action

TensorVector sym_action(Model, int i, const TensorVector& v) {
  const int N = v.sites();
  if (i < 1 || i >= N) throw std::invalid_argument("sym_action: index out of range");
  const VarSetPtr vs = VarSet::standard(N);
  const Permutation s = Permutation::simple(N, i);
  // Both models give v_lambda + (t_i - t_{i+1}) v_{s lambda} for lambda_i < lambda_{i+1}.
  const RatFunc d(MultiPoly::t(vs, i) - MultiPoly::t(vs, i + 1));
  TensorVector r(N);
  for (const auto& [w, f] : v.coeffs()) {
    const RatFunc g = act_on_frac(s, f);
    r.add(w, g);
    if (w.at(i) < w.at(i + 1)) r.add(w.swapped(i, i + 1), g * d);
  }
  return r;
}

TensorVector naive_flip(int i, const TensorVector& v) {
  const int N = v.sites();
  const Permutation s = Permutation::simple(N, i);
  TensorVector r(N);
  for (const auto& [w, f] : v.coeffs()) r.add(w.swapped(i, i + 1), act_on_frac(s, f));
  return r;
}

TensorVector sym_action_via_r(const VertexModel& m, int i, const TensorVector& v) {
  const int N = v.sites();
  const VarSetPtr vs = VarSet::standard(N);
  // R' acts on the slots in the order (i+1, i) with arguments (t_i, t_{i+1}).
  const bool rev = m.kind() == Model::VIC;
  const int p = rev ? i + 1 : i, q = rev ? i : i + 1;
  const Table R = m.rmat_at(MultiPoly::t(vs, q), MultiPoly::t(vs, p));
  TensorVector rv(N);
  for (const auto& [w, f] : v.coeffs()) {
    const int in = pair_index(w.at(p), w.at(q));
    for (int out = 0; out < 4; ++out) {
      const MultiPoly& c = R[std::size_t(out)][std::size_t(in)];
      if (c.is_zero()) continue;
      rv.add(w.with(p, out >> 1).with(q, out & 1), RatFunc(c) * f);
    }
  }
  return naive_flip(i, rv);
}

TensorVector haction(Model m, const Permutation& w, const TensorVector& v) {
  const auto word = w.reduced_word();
  TensorVector r = v;
  for (auto it = word.rbegin(); it != word.rend(); ++it) r = sym_action(m, *it, r);
  return r;
}

TensorVector haction(const MultiPoly& f, const TensorVector& v) { return RatFunc(f) * v; }

Report check_commute(const VertexModel& m, int N, SymVariant variant) {
  Report rep(variant == SymVariant::Standard ? "commute" : "commute-naive", m.name(), N);
  const VarSetPtr vs = VarSet::standard(N);
  const Monodromy M = m.perturbed() ? monodromy(m, N) : monodromy(m.kind(), N);
  auto s = [&](int i, const TensorVector& v) {
    return variant == SymVariant::Standard ? sym_action_via_r(m, i, v) : naive_flip(i, v);
  };
  for (int t = 0; t < 4; ++t)
    for (int i = 1; i < N; ++i)
      for (const auto& w : all_words(N)) {
        const TensorVector v = TensorVector::basis(w, vs);
        const TensorVector lhs = s(i, M.block[std::size_t(t)].apply(v));
        const TensorVector rhs = M.block[std::size_t(t)].apply(s(i, v));
        compare_vectors(rep, "s" + std::to_string(i) + " " + to_string(Tag(t)) + " = " + to_string(Tag(t)) + " s" +
                                 std::to_string(i),
                        w.str(), lhs, rhs);
      }
  return rep;
}

Report check_bethe_permute(int N) {
  Report rep("bethe-permute", "osc", N);
  std::map<SpinWord, TensorVector> raw, norm;
  for (const auto& w : all_words(N)) {
    raw[w] = bethe_vector(w, false);
    norm[w] = raw[w];
    norm[w] *= bethe_normalization(w);
  }
  for (const auto& w : all_words(N))
    for (int j = 1; j < N; ++j) {
      const SpinWord sw = w.swapped(j, j + 1);
      compare_vectors(rep, "s" + std::to_string(j) + " b(lambda) = b(s lambda)", w.str(),
                      sym_action(Model::OSC, j, raw[w]), raw[sw]);
      compare_vectors(rep, "s" + std::to_string(j) + " b_lambda = b_{s lambda}", w.str(),
                      sym_action(Model::OSC, j, norm[w]), norm[sw]);
    }
  return rep;
}

namespace {

void subsets(int N, int k, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (int(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int j = start; j <= N; ++j) {
    cur.push_back(j);
    subsets(N, k, j + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

Report check_lemma_ac(int N, int k) {
  Report rep("lemma-ac", "osc", N);
  if (k < 0 || k > N) throw std::invalid_argument("check_lemma_ac: k out of range");
  const VarSetPtr vs = VarSet::standard(N);
  const MultiPoly x = MultiPoly::var(vs, "x");
  const OperatorPoly& A = block_poly(Model::OSC, N, Tag::A);
  const OperatorPoly& C = block_poly(Model::OSC, N, Tag::C);
  std::vector<std::vector<int>> js;
  std::vector<int> cur;
  subsets(N, k, 1, cur, js);
  for (const auto& J : js) {
    // y_i = -t_{J[i-1]}; P = prod (x - y_i)
    std::vector<MultiPoly> y;
    for (int j : J) y.push_back(minus_t(vs, j));
    MultiPoly P(vs, Rational(1));
    for (const auto& yi : y) P *= x - yi;
    auto chain = [&](const std::vector<MultiPoly>& ys, TensorVector v) {
      for (auto it = ys.rbegin(); it != ys.rend(); ++it) v = C.apply(v, *it);
      return v;
    };
    std::string jtxt;
    for (int j : J) jtxt += std::to_string(j);
    for (const auto& w : all_words(N)) {
      const TensorVector v = TensorVector::basis(w, vs);
      const TensorVector lhs = RatFunc(P) * A.apply(chain(y, v), x);
      TensorVector rhs = chain(y, A.apply(v, x));
      for (std::size_t i = 0; i < y.size(); ++i) {
        std::vector<MultiPoly> yx = y;
        yx[i] = x;
        MultiPoly rest(vs, Rational(1));
        for (std::size_t l = 0; l < y.size(); ++l)
          if (l != i) rest *= x - y[l];
        // 1 / prod_{l != i} (y_i - y_l) = 1 / prod (t_{J_l} - t_{J_i})
        std::vector<RatFunc::Factor> den;
        for (std::size_t l = 0; l < y.size(); ++l)
          if (l != i) den.push_back({J[l], J[i]});
        const RatFunc coef(rest, den);
        rhs -= coef * chain(yx, A.apply(v, y[i]));
      }
      compare_vectors(rep, "A C...C exchange, y = -t[" + jtxt + "]", w.str(), lhs, rhs);
    }
  }
  return rep;
}

Report check_coxeter(Model m, int N, unsigned long long seed, int samples) {
  Report rep("coxeter", to_string(m), N);
  Rng rng(seed);
  for (int s = 0; s < samples; ++s) {
    const TensorVector v = random_vector(N, rng);
    for (int i = 1; i < N; ++i) {
      const TensorVector si = sym_action(m, i, v);
      compare_vectors(rep, "s" + std::to_string(i) + "^2 = 1", "", sym_action(m, i, si), v);
      // Demazure: v - s_i v vanishes at t_i = t_{i+1}
      const TensorVector diff = v - si;
      const VarSetPtr vs = VarSet::standard(N);
      for (const auto& [w, f] : diff.coeffs())
        rep.expect(f.num().vanishes_on_diagonal(vs->t(i), vs->t(i + 1)), "(1 - s_i) v divisible by t_i - t_{i+1}",
                   w.str(), "", f.str());
      if (i + 1 < N) {
        const TensorVector a = sym_action(m, i, sym_action(m, i + 1, sym_action(m, i, v)));
        const TensorVector b = sym_action(m, i + 1, sym_action(m, i, sym_action(m, i + 1, v)));
        compare_vectors(rep, "braid s" + std::to_string(i) + "s" + std::to_string(i + 1), "", a, b);
      }
      for (int j = i + 2; j < N; ++j)
        compare_vectors(rep, "s" + std::to_string(i) + "s" + std::to_string(j) + " commute", "",
                        sym_action(m, i, sym_action(m, j, v)), sym_action(m, j, sym_action(m, i, v)));
    }
  }
  return rep;
}

FracMatrix bethe_matrix(int N, int n) {
  const auto words = words_of_weight(N, n);
  FracMatrix a(words.size(), std::vector<RatFunc>(words.size()));
  for (std::size_t c = 0; c < words.size(); ++c) {
    const TensorVector b = bethe_vector(words[c], true);
    for (std::size_t r = 0; r < words.size(); ++r) a[r][c] = b.at(words[r]);
  }
  return a;
}

Report check_bethe_basis(int N) {
  Report rep("bethe-basis", "osc", N);
  for (int n = 0; n <= N; ++n) {
    const FracMatrix a = bethe_matrix(N, n);
    const MultiPoly d = cleared_determinant(a);
    rep.expect(invertible_over_loc(a), "normalized Bethe vectors form a basis", "n=" + std::to_string(n), "",
               d.str());
  }
  return rep;
}

Report check_primed_bethe(int N) {
  Report rep("bethe-primed", "vic", N);
  const VarSetPtr vs = VarSet::standard(N);
  const MultiPoly x = MultiPoly::var(vs, "x");
  for (const auto& w : all_words(N)) {
    const TensorVector bp = bethe_vector_primed(N, w.ones());
    compare_vectors(rep, "b'(ones) = b(zeros)", w.str(), bp, bethe_vector(w, false));
    MultiPoly ev(vs, Rational(1));
    for (int j : w.zeros()) ev *= x - MultiPoly::t(vs, j);
    compare_vectors(rep, "A'(x) b' = prod (x - t_j) b'", w.str(), block_poly(Model::VIC, N, Tag::A).apply(bp, x),
                    RatFunc(ev) * bp);
  }
  return rep;
}

Report check_bethe_eigen(int N) {
  Report rep("bethe-eigen", "osc", N);
  for (const auto& idx : BetheIndex::all(N)) rep.absorb(bethe_eigencheck(idx));
  return rep;
}

Report check_hvector(int N) {
  Report rep("hvector", "osc", N);
  const VarSetPtr vs = VarSet::standard(N);
  for (int n = 0; n <= N; ++n) {
    const SpinWord z = SpinWord::zeta(N, n);
    compare_vectors(rep, "b(0^k 1^n) = v", z.str(), bethe_vector(z, false), TensorVector::basis(z, vs));
  }
  return rep;
}

Report check_bethe_single(int N) {
  Report rep("bethe-single", "osc", N);
  const VarSetPtr vs = VarSet::standard(N);
  const MultiPoly x = MultiPoly::var(vs, "x");
  const SpinWord ones = all_ones(N);
  TensorVector lhs = block_poly(Model::OSC, N, Tag::C).apply(TensorVector::basis(ones, vs), x);
  TensorVector rhs(N);
  for (int i = 1; i <= N; ++i) {
    MultiPoly c(vs, Rational(1));
    for (int j = 1; j < i; ++j) c *= x + MultiPoly::t(vs, j);
    rhs.add(ones.with(i, 0), RatFunc(c));
  }
  compare_vectors(rep, "C(x) v_1...1", ones.str(), lhs, rhs);
  for (int i1 = 1; i1 <= N; ++i1) {
    TensorVector want(N);
    for (int i = 1; i <= N; ++i) {
      MultiPoly c(vs, Rational(1));
      for (int j = 1; j < i; ++j) c *= MultiPoly::t(vs, j) - MultiPoly::t(vs, i1);
      if (!c.is_zero()) want.add(ones.with(i, 0), RatFunc(c));
    }
    compare_vectors(rep, "b((i1))", "i1=" + std::to_string(i1), bethe_vector(ones.with(i1, 0), false), want);
  }
  return rep;
}

Report check_bethe_order(int N) {
  Report rep("bethe-order", "osc", N);
  for (const auto& w : all_words(N)) {
    auto idx = w.zeros();
    const TensorVector ref = bethe_vector_ordered(N, idx);
    while (std::next_permutation(idx.begin(), idx.end()))
      compare_vectors(rep, "b(eta) independent of the order of eta", w.str(), bethe_vector_ordered(N, idx), ref);
  }
  return rep;
}

}  // namespace ybs
