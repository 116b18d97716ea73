#pragma once

// Fixed-point geometry of X_n <- X_(n,1,N-n-1) -> X_{n+1}: Euler classes,
// Atiyah-Bott pushforwards, b_n and c_n, and the geometric generating
// functions A..D, A'..D' in fixed-point coordinates.
//
// Operators act on the direct sum over n of functions on Lambda_n; a word
// lambda stands for the fixed point 1_lambda. Matrix entries are stored as
// (target, source).

#include <map>
#include <utility>
#include <vector>

#include "ybs/gkmschubert.hpp"
#include "ybs/vertexmodel.hpp"

namespace ybs {

// Blocks w_1, ..., w_m partitioning [N].
using Partitioning = std::vector<std::vector<int>>;

// prod_{i > j} prod_{a in w_i, b in w_j} (t_a - t_b)
MultiPoly euler_class(int N, const Partitioning& w);
// The sign-twisted class (-1)^dim eu used by the pushforward.
MultiPoly euler_class_ab(int N, const Partitioning& w);
Partitioning grassmannian_point(const SpinWord& lambda);

// (w1, z) in X_(n,1,N-n-1): w1 the ones of a word, z outside w1.
struct FlagFixedPoint {
  SpinWord w1;
  int z = 0;
  SpinWord image() const { return w1.with(z, 1); }  // w1 u z in X_{n+1}
  Partitioning partitioning() const;
  friend bool operator<(const FlagFixedPoint& a, const FlagFixedPoint& b) {
    return a.w1 < b.w1 || (a.w1 == b.w1 && a.z < b.z);
  }
};
std::vector<FlagFixedPoint> flag_fixed_points(int N, int n);

using FlagFunction = std::map<FlagFixedPoint, RatFunc>;
enum class FlagMap { Pi1, Pi2 };  // to X_n, to X_{n+1}

// f_*(alpha)(y) = sum_{f(x) = y} eu_y / eu_x alpha(x)
LocFunction pushforward_ab(int N, int n, FlagMap f, const FlagFunction& alpha);
FlagFunction pullback(int N, int n, FlagMap f, const LocFunction& beta);

// b_n: X_n -> X_{n+1} and c_n: X_{n+1} -> X_n from the closed form; zero when n >= N.
std::pair<SparseOperator, SparseOperator> bn_cn(int N, int n);
// Same operators as pi2_* pi1^* and pi1_* pi2^* through pushforward_ab.
std::pair<SparseOperator, SparseOperator> bn_cn_ab(int N, int n);
Report check_bn_cn(int N);

// Full operators (all weights) with entries in x, t over VarSet::standard(N).
SparseOperator geom_operator(int N, Tag tag, bool primed);
// The same split into x-coefficients; restrict_weights gives a single n.
OperatorPoly geom_series(int N, Tag tag, bool primed);
OperatorPoly geom_series(int N, int n, Tag tag, bool primed);

// Psi in matrix form: entry (mu, lambda) = S^{w0}_lambda(mu), and its inverse.
SparseOperator psi_operator(int N);
SparseOperator psi_inverse_operator(int N);
// Psi^{-1} G Psi, i.e. the geometric operator in the standard basis.
SparseOperator to_standard_basis(const SparseOperator& g);
// Columns S^w_lambda in fixed-point coordinates, its inverse, and P^{-1} G P.
SparseOperator schubert_basis_operator(const Permutation& w);
SparseOperator schubert_basis_inverse(const Permutation& w);
SparseOperator to_schubert_basis(const SparseOperator& g, const Permutation& w);

Report check_proprel(int N);
// The geometric operators against the monodromy blocks (OSC: A..D, VIC: A'..D').
Report check_match(Model m, int N);
// D from A, B, C and D|X_N = 1, against b A c.
Report check_d_reconstruction(int N);
// R M1 M2 = M2 M1 R for the geometric blocks in fixed-point coordinates.
Report check_geom_sixteen(int N, bool primed);
// Chern restrictions: A_n(x) eigenvalue sum_i sigma_i(w) x^{n-i}.
Report check_chern(int N);

// Closed formulas on v_zeta and b_zeta, zeta = 0^k 1^n, for one tag.
Report explicit_bethe_action(Tag tag, bool primed, int N, int n);
Report check_explicit_formulas(int N);
// Coefficient of b_zeta in D(x) v_zeta: from the lattice monodromy, and from
// sum_{i>k} S^{w0}_{lambda(i)}(zeta) prod_{k<j<i} (x + t_j).
RatFunc d_zeta_lattice(int N, int n);
RatFunc d_zeta_formula(int N, int n);

}  // namespace ybs
