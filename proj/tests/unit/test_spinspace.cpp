#include "doctest.h"
#include "oracle.hpp"
#include "ybs/random.hpp"
#include "ybs/spinspace.hpp"

using namespace ybs;

TEST_CASE("words") {
  const SpinWord w = SpinWord::parse("0110");
  CHECK(w.size() == 4);
  CHECK(w.at(1) == 0);
  CHECK(w.at(2) == 1);
  CHECK(w.weight() == 2);
  CHECK(w.ones() == std::vector<int>{2, 3});
  CHECK(w.zeros() == std::vector<int>{1, 4});
  CHECK(w.str() == "0110");
  CHECK(SpinWord::zeta(5, 2).str() == "00011");
  CHECK(w.swapped(1, 2).str() == "1010");
  CHECK(SpinWord::parse("01").concat(SpinWord::parse("1")).str() == "011");
  const auto all = all_words(3);
  REQUIRE(all.size() == 8);
  for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1] < all[i]);
  std::size_t total = 0;
  for (int n = 0; n <= 5; ++n) total += words_of_weight(5, n).size();
  CHECK(total == 32);
  CHECK(words_of_weight(5, 2).size() == 10);
}

TEST_CASE("permutations") {
  for (int N = 1; N <= 4; ++N)
    for (const auto& w : Permutation::all(N)) {
      CHECK(w * w.inverse() == Permutation::identity(N));
      // inversion count by brute force
      int inv = 0;
      for (int i = 1; i <= N; ++i)
        for (int j = i + 1; j <= N; ++j) inv += w(i) > w(j);
      CHECK(w.length() == inv);
      CHECK(int(w.reduced_word().size()) == inv);
      CHECK(Permutation::from_word(N, w.reduced_word()) == w);
    }
  CHECK(Permutation::all(4).size() == 24);
  CHECK(Permutation::parse(3, "s1s2") == Permutation::simple(3, 1) * Permutation::simple(3, 2));
  CHECK(Permutation::parse(3, "w0") == Permutation::longest(3));
  CHECK(Permutation::parse(3, "2,1,3") == Permutation::simple(3, 1));
  CHECK(Permutation::parse(3, "e") == Permutation::identity(3));
  // (w lambda)_j = lambda_{w^{-1}(j)}
  const Permutation w({2, 3, 1});
  const SpinWord l = SpinWord::parse("100");
  CHECK(w.act(l).str() == "010");
}

TEST_CASE("sparse operators compose like matrices") {
  Rng rng(21);
  const int N = 3;
  const auto vs = VarSet::standard(N);
  auto random_op = [&] {
    SparseOperator op(N);
    std::uniform_int_distribution<int> word(0, 7);
    for (int k = 0; k < 6; ++k)
      op.add(SpinWord(N, std::uint32_t(word(rng))), SpinWord(N, std::uint32_t(word(rng))),
             RatFunc(random_poly(vs, N, 1, 2, rng)));
    return op;
  };
  for (int trial = 0; trial < 10; ++trial) {
    const SparseOperator a = random_op(), b = random_op(), c = random_op();
    const TensorVector v = random_vector(N, rng);
    CHECK((a * b).apply(v) == a.apply(b.apply(v)));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a.transpose().transpose() == a);
    CHECK((a + b).apply(v) == a.apply(v) + b.apply(v));
  }
}

TEST_CASE("operator polynomials split and evaluate") {
  const int N = 2;
  const auto vs = VarSet::standard(N);
  const MultiPoly x = MultiPoly::var(vs, "x");
  SparseOperator op(N);
  op.add(SpinWord::parse("01"), SpinWord::parse("10"), RatFunc(x * x + MultiPoly::t(vs, 1)));
  op.add(SpinWord::parse("11"), SpinWord::parse("11"), RatFunc(x - MultiPoly::t(vs, 2)));
  const OperatorPoly p = OperatorPoly::from_operator(op, vs->index("x"));
  CHECK(p.degree() == 2);
  CHECK(p.evaluate(x) == op);
  CHECK(p.coeff(2).at(SpinWord::parse("01"), SpinWord::parse("10")) == RatFunc(MultiPoly(vs, 1L)));
  CHECK(p.coeff(5).is_zero());
}

TEST_CASE("polynomial action of S_N") {
  const auto vs = VarSet::standard(3);
  const MultiPoly p = MultiPoly::parse(vs, "t1^2*t2 - t3");
  const Permutation w({2, 3, 1});
  CHECK(act_on_poly(w, p) == MultiPoly::parse(vs, "t2^2*t3 - t1"));
  CHECK(act_on_poly(w.inverse(), act_on_poly(w, p)) == p);
}
