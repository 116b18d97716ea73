#pragma once

// Yang-Baxter generators as operators on V_N, Bethe vectors, and the
// S_N / H-action s_i = s_i R_{i,i+1}(t_{i+1}, t_i).

#include <vector>

#include "ybs/linalg.hpp"
#include "ybs/vertexmodel.hpp"

namespace ybs {

// Sorted positions of the zeros of a word; the Bethe vector C(-t_{i_1})...
// C(-t_{i_k}) v_{1...1} is attached to it.
struct BetheIndex {
  int N = 0;
  std::vector<int> removed;

  static BetheIndex of(const SpinWord& lambda);
  static std::vector<BetheIndex> all(int N);
  SpinWord word() const;
};

// O^(i) for the model's monodromy; zero beyond the x-degree.
SparseOperator yb_generator(Model m, int N, Tag tag, int i);

// C(y_1) ... C(y_k) v_{1...1} with y_j = -t_{order[j]}; `order` need not be sorted.
TensorVector bethe_vector_ordered(int N, const std::vector<int>& order);
TensorVector bethe_vector(const BetheIndex& idx, bool normalized);
inline TensorVector bethe_vector(const SpinWord& lambda, bool normalized) {
  return bethe_vector(BetheIndex::of(lambda), normalized);
}
// prod_{b in I0, a not in I0} (t_a - t_b)^{-1}
RatFunc bethe_normalization(const SpinWord& lambda);
// B'(t_{i_1}) ... B'(t_{i_n}) v_{0...0}, indexed by the positions of ones.
TensorVector bethe_vector_primed(int N, const std::vector<int>& ones);

Report bethe_eigencheck(const BetheIndex& idx);

// The H-action, the same for both models. sym_action_via_r applies s_i after
// R_{i,i+1}(t_{i+1}, t_i), or after R' on the slots (i+1, i) at (t_i, t_{i+1}).
TensorVector sym_action(Model m, int i, const TensorVector& v);
TensorVector sym_action_via_r(const VertexModel& m, int i, const TensorVector& v);
// s_i alone: swaps tensor slots i, i+1 and the variables t_i, t_{i+1}.
TensorVector naive_flip(int i, const TensorVector& v);
TensorVector haction(Model m, const Permutation& w, const TensorVector& v);
TensorVector haction(const MultiPoly& f, const TensorVector& v);

enum class SymVariant { Standard, NaiveFlip };
// (1 (x) s_i) M(x) = M(x) (1 (x) s_i), checked on every block and basis vector.
Report check_commute(const VertexModel& m, int N, SymVariant variant = SymVariant::Standard);
// s_j b(lambda) = b(s_j lambda), unnormalized and normalized.
Report check_bethe_permute(int N);
// A(x) C(y_k)...C(y_1) expanded by the exchange identity, y_i = -t_{j_i},
// on every basis vector after clearing the factors x - y_i.
Report check_lemma_ac(int N, int k);
// Coxeter relations and Demazure divisibility on seeded random vectors.
Report check_coxeter(Model m, int N, unsigned long long seed, int samples = 4);
// Normalized Bethe vectors of each weight are a P^loc-basis.
Report check_bethe_basis(int N);
// b'(eta') = b(eta) for complementary index sets.
Report check_primed_bethe(int N);
// bethe_eigencheck over all 2^N index sets.
Report check_bethe_eigen(int N);
// Unnormalized b(0^k 1^n) = v_{0^k 1^n}.
Report check_hvector(int N);
// One removed index: C(x) v_{1...1} = sum_i prod_{j<i} (x + t_j) v_{lambda(i)} and
// b((i1)) = sum_i prod_{j<i} (t_j - t_{i1}) v_{lambda(i)}.
Report check_bethe_single(int N);
// Permuting eta does not change b(eta).
Report check_bethe_order(int N);

// Columns b_lambda (lambda in Lambda_n) in the standard basis.
FracMatrix bethe_matrix(int N, int n);

}  // namespace ybs
