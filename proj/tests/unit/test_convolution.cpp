#include "doctest.h"
#include "oracle.hpp"
#include "ybs/convolution.hpp"

using namespace ybs;

namespace {

RatFunc inv(int N, int a, int b) { return RatFunc::inverse_linear(VarSet::standard(N), a, b); }
SpinWord W(const char* s) { return SpinWord::parse(s); }

}  // namespace

TEST_CASE("Euler class of a point of P1") {
  const auto vs = VarSet::standard(2);
  CHECK(euler_class(2, {{1}, {2}}) == MultiPoly::t(vs, 2) - MultiPoly::t(vs, 1));
  // tangent weights of Gr(1,3) at a point: two linear factors
  CHECK(euler_class(3, {{1}, {2, 3}}).total_degree() == 2);
}

TEST_CASE("b_n and c_n on two sites") {
  const auto [b1, c1] = bn_cn(2, 1);
  CHECK(b1.at(W("11"), W("10")) == inv(2, 1, 2));
  CHECK(b1.at(W("11"), W("01")) == inv(2, 2, 1));
  const auto [b0, c0] = bn_cn(2, 0);
  CHECK(b0.at(W("10"), W("00")) == RatFunc(MultiPoly(VarSet::standard(2), 1L)));
  CHECK(c0.at(W("00"), W("10")) == inv(2, 1, 2));
  CHECK(c0.at(W("00"), W("01")) == inv(2, 2, 1));
  CHECK(bn_cn(2, 2).first.is_zero());
}

TEST_CASE("closed form against the pushforward") {
  for (int N = 1; N <= 4; ++N) CHECK(check_bn_cn(N).passed());
}

TEST_CASE("localization formula integrates exact classes") {
  // sum over fixed points of alpha / eu is a polynomial; for alpha = 1 on P^1 it is 0
  const auto p = flag_fixed_points(2, 0);
  CHECK(p.size() == 2);
  RatFunc s{MultiPoly(VarSet::standard(2))};
  for (const auto& w : words_of_weight(2, 1)) {
    s += RatFunc(MultiPoly(VarSet::standard(2), 1L)) /
         RatFunc(euler_class(2, grassmannian_point(w)));
  }
  CHECK(s.is_zero());
}

TEST_CASE("geometric A is diagonal in fixed points") {
  const auto vs = VarSet::standard(2);
  const SparseOperator A = geom_operator(2, Tag::A, false);
  CHECK(A.at(W("10"), W("10")) == RatFunc(MultiPoly::parse(vs, "x+t1")));
  CHECK(A.at(W("11"), W("11")) == RatFunc(MultiPoly::parse(vs, "x+t1") * MultiPoly::parse(vs, "x+t2")));
  CHECK(A.at(W("10"), W("01")).is_zero());
}

TEST_CASE("geometry matches the Yang-Baxter blocks") {
  for (int N = 1; N <= 3; ++N) {
    CHECK(check_match(Model::OSC, N).passed());
    CHECK(check_match(Model::VIC, N).passed());
    CHECK(check_proprel(N).passed());
    CHECK(check_chern(N).passed());
    CHECK(check_d_reconstruction(N).passed());
    CHECK(check_explicit_formulas(N).passed());
    CHECK(check_geom_sixteen(N, false).passed());
    CHECK(check_geom_sixteen(N, true).passed());
  }
}

TEST_CASE("d_zeta from the lattice and the formula") {
  for (int N = 1; N <= 4; ++N)
    for (int n = 1; n <= N; ++n) CHECK(d_zeta_lattice(N, n) == d_zeta_formula(N, n));
}

TEST_CASE("Schubert basis change") {
  const int N = 3;
  const Permutation w0 = Permutation::longest(N);
  const SparseOperator g = geom_operator(N, Tag::C, false);
  CHECK(to_schubert_basis(g, w0) == to_standard_basis(g));
  const Permutation w({2, 3, 1});
  CHECK(schubert_basis_inverse(w) * schubert_basis_operator(w) == SparseOperator::identity(N, VarSet::standard(N)));
}
