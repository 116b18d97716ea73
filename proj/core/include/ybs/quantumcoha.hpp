#pragma once

// T(x) = A(x) + q D(x), the top coefficient D^(n-1), the operators gamma_j^+-
// and the gl2[t] action on V^(x)N [t].

#include <string>

#include "ybs/convolution.hpp"

namespace ybs {

// Coefficients in x; entries polynomial in t and q.
struct QuantumOperator {
  Model model = Model::OSC;
  int N = 0, n = 0;
  OperatorPoly series;
  QuantumOperator at_q(const MultiPoly& value) const;
};

// A(x) + q D(x) (A'(x) + q D'(x) for VIC) on weight n.
QuantumOperator quantum_T(Model m, int N, int n);
// All coefficient pairs of T commute; with `cross`, also T^(i) T'^(j) = T'^(j) T^(i).
Report check_quantum_commute(Model m, int N, bool cross = true);
// q = 0 gives A, against the geometric A read in the standard basis; the top class
// gets (prod (x + t_j) + q).
Report check_quantum_specialize(Model m, int N);

// v_lambda -> v_{lambda_N lambda_2 ... lambda_{N-1} lambda_1} when lambda_N = 1 and
// lambda_1 = 0 (any lambda_1 when N = 1), else 0.
SparseOperator rimhook_D(int N, int n);
// Against the x^(n-1) coefficient of D on weight n, every n >= 1.
Report check_rimhook(int N);

enum class GammaSign { Plus, Minus };
// pi2_*(e^j pi1^*) (Plus, X_n -> X_{n+1}) or pi1_*(e^j pi2^*) (Minus, X_n -> X_{n-1}),
// in fixed-point coordinates, e restricting to t_z at (w1, z). n is the source weight;
// zero if the target is out of range.
SparseOperator gamma(GammaSign s, int j, int N, int n);
// Sum over all n.
SparseOperator gamma_total(GammaSign s, int j, int N);
// Entry t_z^j prod_{r in w} (t_r - t_z)^{-1} (Plus, w -> w u z) and
// t_z^j prod_{r not in u} (t_z - t_r)^{-1} (Minus, u -> u \ z).
SparseOperator gamma_closed(GammaSign s, int j, int N, int n);
// sum_m (-1)^m C(j,m) c1^(j-m) b_n c1^m, and the mirror for Minus.
SparseOperator gamma_binomial(GammaSign s, int j, int N, int n);
Report check_coha(int N, int jmax);

enum class CurrentBase { E, F, H1, H2 };
struct CurrentGenerator {
  CurrentBase base = CurrentBase::E;
  int power = 0;
  std::string str() const;  // "E*t^2"
};
CurrentBase parse_current_base(std::string_view s);
// Sum over slots l of t_l^power times the local matrix unit; E v1 = v0, F v0 = v1,
// H1 on v0, H2 on v1.
SparseOperator current_act(const CurrentGenerator& g, int N);
Report check_current(int N, int max_degree = 3);

}  // namespace ybs
