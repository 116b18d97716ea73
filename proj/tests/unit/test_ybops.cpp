#include "doctest.h"
#include "oracle.hpp"
#include "ybs/ybops.hpp"

using namespace ybs;

namespace {

// C(-t_{i_1}) ... C(-t_{i_k}) v_{1...1} with dense numeric matrices.
std::vector<Rational> dense_bethe(int N, const std::vector<int>& removed, oracle::Point pt) {
  const std::size_t dim = std::size_t(1) << N;
  std::vector<Rational> v(dim, 0);
  v[dim - 1] = 1;
  for (auto it = removed.rbegin(); it != removed.rend(); ++it) {
    pt["x"] = -pt.at("t" + std::to_string(*it));
    const auto M = oracle::monodromy(VertexModel::osc(), N, pt);
    std::vector<Rational> w(dim, 0);
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = 0; c < dim; ++c)
        w[r] += oracle::block_entry(M, N, Tag::C, SpinWord(N, std::uint32_t(r)), SpinWord(N, std::uint32_t(c))) * v[c];
    v = w;
  }
  return v;
}

}  // namespace

TEST_CASE("Bethe vectors against dense products") {
  Rng rng(41);
  for (int N = 1; N <= 4; ++N)
    for (const auto& idx : BetheIndex::all(N)) {
      const auto pt = oracle::random_point(N, rng);
      const TensorVector b = bethe_vector(idx, false);
      const auto d = dense_bethe(N, idx.removed, pt);
      for (const auto& w : all_words(N)) CHECK(oracle::eval(b.at(w), pt) == d[w.code()]);
    }
}

TEST_CASE("Bethe eigenvectors") {
  for (int N = 1; N <= 4; ++N) {
    CHECK(check_bethe_eigen(N).passed());
    CHECK(check_hvector(N).passed());
    CHECK(check_bethe_single(N).passed());
    CHECK(check_bethe_order(N).passed());
    CHECK(check_primed_bethe(N).passed());
  }
  CHECK(check_bethe_basis(3).passed());
}

TEST_CASE("single removed index, written out") {
  const int N = 4;
  const auto vs = VarSet::standard(N);
  auto t = [&](int i) { return MultiPoly::t(vs, i); };
  // b((2)) = v_0111 + (t1 - t2) v_1011
  TensorVector want(N);
  want.add(SpinWord::parse("0111"), RatFunc(MultiPoly(vs, 1L)));
  want.add(SpinWord::parse("1011"), RatFunc(t(1) - t(2)));
  CHECK(bethe_vector(SpinWord::parse("1011"), false) == want);
  CHECK(bethe_vector(SpinWord::parse("0111"), false) == TensorVector::basis(SpinWord::parse("0111"), vs));
}

TEST_CASE("normalization") {
  const auto vs = VarSet::standard(2);
  // lambda = 01: b = 1, a = 2, factor (t2 - t1)^{-1}
  CHECK(bethe_normalization(SpinWord::parse("01")) == RatFunc::inverse_linear(vs, 2, 1));
  CHECK(bethe_normalization(SpinWord::parse("11")) == RatFunc(MultiPoly(vs, 1L)));
}

TEST_CASE("H-action") {
  Rng rng(42);
  for (int N = 2; N <= 4; ++N)
    for (int trial = 0; trial < 3; ++trial) {
      const TensorVector v = random_vector(N, rng);
      for (int i = 1; i < N; ++i) {
        CHECK(sym_action(Model::OSC, i, sym_action(Model::OSC, i, v)) == v);
        CHECK(naive_flip(i, naive_flip(i, v)) == v);
        CHECK(sym_action(Model::OSC, i, v) == sym_action_via_r(VertexModel::osc(), i, v));
        CHECK(sym_action(Model::VIC, i, v) == sym_action_via_r(VertexModel::vic(), i, v));
      }
      for (int i = 1; i + 1 < N; ++i) {
        auto s = [&](int j, const TensorVector& u) { return sym_action(Model::OSC, j, u); };
        CHECK(s(i, s(i + 1, s(i, v))) == s(i + 1, s(i, s(i + 1, v))));
      }
    }
  for (Model m : {Model::OSC, Model::VIC})
    for (int N = 2; N <= 4; ++N) {
      CHECK(check_commute(VertexModel::of(m), N).passed());
      CHECK(check_coxeter(m, N, 7).passed());
    }
  CHECK(check_bethe_permute(4).passed());
  for (int k = 0; k <= 3; ++k) CHECK(check_lemma_ac(3, k).passed());
}

TEST_CASE("naive flip does not commute with the monodromy") {
  for (Model m : {Model::OSC, Model::VIC}) {
    const Report r = check_commute(VertexModel::of(m), 3, SymVariant::NaiveFlip);
    CHECK_FALSE(r.passed());
    CHECK(r.failures > 0);
  }
}

TEST_CASE("generators") {
  // the x^n coefficient of A is the identity on weight n
  const int N = 3;
  const auto vs = VarSet::standard(N);
  for (int n = 0; n <= N; ++n)
    CHECK(yb_generator(Model::OSC, N, Tag::A, n).restrict_weights(n, n) ==
          SparseOperator::identity(N, vs).restrict_weights(n, n));
  CHECK(yb_generator(Model::OSC, N, Tag::A, N + 1).is_zero());
}
