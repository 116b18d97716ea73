#include "doctest.h"
#include "oracle.hpp"
#include "ybs/vertexmodel.hpp"

using namespace ybs;

TEST_CASE("monodromy agrees with a dense Kronecker product") {
  Rng rng(31);
  for (Model m : {Model::OSC, Model::VIC})
    for (int N = 1; N <= 4; ++N) {
      const Monodromy& M = monodromy(m, N);
      for (int trial = 0; trial < 2; ++trial) {
        const auto pt = oracle::random_point(N, rng);
        const auto D = oracle::monodromy(VertexModel::of(m), N, pt);
        for (int t = 0; t < 4; ++t)
          for (const auto& out : all_words(N))
            for (const auto& in : all_words(N))
              CHECK(oracle::eval(M[Tag(t)].at(out, in), pt) == oracle::block_entry(D, N, Tag(t), out, in));
      }
    }
}

TEST_CASE("Yang-Baxter equation at random points") {
  // L23(x2,t) L13(x1,t) R12(x1,x2) = R12 L13 L23 on three factors
  Rng rng(32);
  for (Model m : {Model::OSC, Model::VIC}) {
    const VertexModel vm = VertexModel::of(m);
    for (int trial = 0; trial < 5; ++trial) {
      const auto pt = oracle::random_point(1, rng);
      const Rational x1 = pt.at("x1"), x2 = pt.at("x2"), t = pt.at("t1");
      const auto R = oracle::embed_pair(oracle::table_at(vm.table(Role::Rmat), x1, x2, 0), 3, 0, 1);
      const auto L13 = oracle::embed_pair(oracle::table_at(vm.table(Role::Lax), x1, 0, t), 3, 0, 2);
      const auto L23 = oracle::embed_pair(oracle::table_at(vm.table(Role::Lax), x2, 0, t), 3, 1, 2);
      CHECK(oracle::mul(L23, oracle::mul(L13, R)) == oracle::mul(R, oracle::mul(L13, L23)));
    }
  }
}

TEST_CASE("symbolic checks") {
  for (Model m : {Model::OSC, Model::VIC}) {
    CHECK(check_rll(VertexModel::of(m)).passed());
    for (int N = 2; N <= 3; ++N) {
      CHECK(check_sixteen(VertexModel::of(m), N).passed());
      CHECK(check_rmm(VertexModel::of(m), N).passed());
      CHECK(check_monodromy_lattice(VertexModel::of(m), N).passed());
    }
  }
  CHECK(check_sixteen_listed(VertexModel::osc(), 3).passed());
  CHECK(check_transformation().passed());
}

TEST_CASE("C block on three sites") {
  const auto vs = VarSet::standard(3);
  const Monodromy& M = monodromy(Model::OSC, 3);
  CHECK(M[Tag::C].at(SpinWord::parse("010"), SpinWord::parse("011")) == RatFunc(MultiPoly::parse(vs, "x+t2")));
  CHECK(M[Tag::C].at(SpinWord::parse("011"), SpinWord::parse("111")) == RatFunc(MultiPoly(vs, 1L)));
  CHECK(M[Tag::C].at(SpinWord::parse("110"), SpinWord::parse("111")) ==
        RatFunc(MultiPoly::parse(vs, "x+t1") * MultiPoly::parse(vs, "x+t2")));
}

TEST_CASE("perturbation breaks the relations and is reproducible") {
  for (Model m : {Model::OSC, Model::VIC})
    for (unsigned long long seed : {1ULL, 2ULL, 99ULL}) {
      const VertexModel p = perturbed_model(m, seed);
      CHECK(p.perturbed());
      CHECK(p.table(Role::Lax)[3][3] == perturbed_model(m, seed).table(Role::Lax)[3][3]);
      const Report r = check_rll(p);
      CHECK_FALSE(r.passed());
      CHECK_FALSE(r.mismatches.empty());
      CHECK_FALSE(check_sixteen(p, 3).passed());
    }
}

TEST_CASE("Baxter delta") {
  const auto osc = six_vertex_weights(VertexModel::osc().table(Role::Lax));
  CHECK(baxter_delta(osc).status2 == BaxterDelta::Status::NonConstant);
  const auto vicR = six_vertex_weights(VertexModel::vic().table(Role::Rmat));
  CHECK(baxter_delta(vicR).status1 == BaxterDelta::Status::Inapplicable);
}

TEST_CASE("tags") {
  bool primed = false;
  CHECK(parse_tag("C'", &primed) == Tag::C);
  CHECK(primed);
  CHECK(parse_tag("A", &primed) == Tag::A);
  CHECK_FALSE(primed);
  CHECK_THROWS(parse_tag("E"));
  CHECK(parse_model("vic") == Model::VIC);
  CHECK(tag_labels(Tag::B) == std::pair{0, 1});
}
