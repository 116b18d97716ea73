#include "ybs/random.hpp"

namespace ybs {

MultiPoly random_poly(const VarSetPtr& vs, int N, int max_degree, int terms, Rng& rng) {
  std::uniform_int_distribution<int> coef(-5, 5), var(1, N), deg(0, max_degree);
  MultiPoly p(vs);
  for (int k = 0; k < terms; ++k) {
    Monomial m;
    const int d = deg(rng);
    for (int j = 0; j < d; ++j) {
      const std::size_t v = vs->t(var(rng));
      m.set(v, m.exp(v) + 1);
    }
    p += MultiPoly::monomial(vs, m, Rational(coef(rng)));
  }
  return p;
}

TensorVector random_vector(int N, Rng& rng, int support, int max_degree) {
  const VarSetPtr vs = VarSet::standard(N);
  std::uniform_int_distribution<std::uint32_t> word(0, (std::uint32_t(1) << N) - 1);
  TensorVector v(N);
  for (int k = 0; k < support; ++k) v.add(SpinWord(N, word(rng)), RatFunc(random_poly(vs, N, max_degree, 3, rng)));
  return v;
}

}  // namespace ybs
