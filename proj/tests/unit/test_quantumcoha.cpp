#include "doctest.h"
#include "oracle.hpp"
#include "ybs/quantumcoha.hpp"

using namespace ybs;

namespace {

SpinWord W(const char* s) { return SpinWord::parse(s); }
RatFunc one(int N) { return RatFunc(MultiPoly(VarSet::standard(N), 1L)); }

}  // namespace

TEST_CASE("rim-hook images on three sites") {
  const SparseOperator d1 = rimhook_D(3, 1);
  CHECK(d1.at(W("100"), W("001")) == one(3));
  CHECK(d1.nnz() == 1);
  const SparseOperator d2 = rimhook_D(3, 2);
  CHECK(d2.at(W("110"), W("011")) == one(3));
  CHECK(d2.nnz() == 1);  // 101 has lambda_1 = 1 and goes to 0
  CHECK(rimhook_D(1, 1).at(W("1"), W("1")) == one(1));
  for (int N = 1; N <= 5; ++N) CHECK(check_rimhook(N).passed());
}

TEST_CASE("quantum transfer operators") {
  for (Model m : {Model::OSC, Model::VIC})
    for (int N = 1; N <= 3; ++N) {
      CHECK(check_quantum_commute(m, N).passed());
      CHECK(check_quantum_specialize(m, N).passed());
    }
  const int N = 3;
  const auto vs = VarSet::standard(N);
  const QuantumOperator T = quantum_T(Model::OSC, N, 1);
  const QuantumOperator T0 = T.at_q(MultiPoly(vs));
  const OperatorPoly A = block_poly(Model::OSC, N, Tag::A);
  for (int i = 0; i <= N; ++i) CHECK(T0.series.coeff(i) == A.coeff(i).restrict_weights(1, 1));
}

TEST_CASE("gamma on two sites") {
  const auto vs = VarSet::standard(2);
  const SparseOperator g = gamma_closed(GammaSign::Plus, 1, 2, 0);
  CHECK(g.at(W("10"), W("00")) == RatFunc(MultiPoly::t(vs, 1)));
  CHECK(g.at(W("01"), W("00")) == RatFunc(MultiPoly::t(vs, 2)));
  // gamma_0^+ on weight n is b_n
  CHECK(gamma(GammaSign::Plus, 0, 2, 1) == bn_cn(2, 1).first);
  CHECK(gamma(GammaSign::Minus, 0, 2, 1) == bn_cn(2, 0).second);
  for (int N = 1; N <= 3; ++N)
    for (int n = 0; n <= N; ++n)
      for (int j = 0; j <= 2; ++j)
        for (GammaSign s : {GammaSign::Plus, GammaSign::Minus}) {
          CHECK(gamma(s, j, N, n) == gamma_closed(s, j, N, n));
          CHECK(gamma(s, j, N, n) == gamma_binomial(s, j, N, n));
        }
  for (int N = 1; N <= 3; ++N) CHECK(check_coha(N, 3).passed());
}

TEST_CASE("current algebra") {
  const auto vs = VarSet::standard(1);
  CHECK(current_act({CurrentBase::E, 0}, 1).at(W("0"), W("1")) == one(1));
  CHECK(current_act({CurrentBase::F, 2}, 1).at(W("1"), W("0")) == RatFunc(MultiPoly::t(vs, 1).pow(2)));
  CHECK(CurrentGenerator{CurrentBase::E, 2}.str() == "E*t^2");
  CHECK(parse_current_base("H2") == CurrentBase::H2);
  for (int N = 1; N <= 3; ++N) CHECK(check_current(N).passed());
}
