#pragma once

// GKM model of H_T(Gr(n, N)): classes as functions on the 0/1 words of
// weight n, twisted Schubert classes, Demazure operators, wall-crossing and
// the map Psi: v_lambda -> S^{w0}_lambda.

#include <map>
#include <vector>

#include "ybs/linalg.hpp"
#include "ybs/report.hpp"
#include "ybs/spinspace.hpp"

namespace ybs {

// A function Lambda_n -> P. Every word of weight n has an entry.
class GKMClass {
 public:
  GKMClass() = default;
  GKMClass(int N, int n);  // zero class over VarSet::standard(N)
  static GKMClass constant(int N, int n, const MultiPoly& c);
  static GKMClass point(int N, const SpinWord& lambda, const MultiPoly& value);

  int sites() const { return N_; }
  int weight() const { return n_; }
  const VarSetPtr& varset() const { return vs_; }
  const MultiPoly& at(const SpinWord& lambda) const;
  void set(const SpinWord& lambda, MultiPoly value);
  const std::map<SpinWord, MultiPoly>& values() const { return values_; }
  std::vector<SpinWord> support() const;
  bool is_zero() const;

  GKMClass& operator+=(const GKMClass& o);
  GKMClass& operator-=(const GKMClass& o);
  friend GKMClass operator+(GKMClass a, const GKMClass& b) { return a += b; }
  friend GKMClass operator-(GKMClass a, const GKMClass& b) { return a -= b; }
  // Pointwise product (ring structure) and scalar multiple.
  friend GKMClass operator*(const GKMClass& a, const GKMClass& b);
  friend GKMClass operator*(const MultiPoly& f, GKMClass a);
  friend bool operator==(const GKMClass& a, const GKMClass& b) { return a.values_ == b.values_; }
  friend bool operator!=(const GKMClass& a, const GKMClass& b) { return !(a == b); }

  // "10: t1 - t2; 01: 0", words in enumeration order.
  std::string str() const;

 private:
  int N_ = 0, n_ = 0;
  VarSetPtr vs_;
  std::map<SpinWord, MultiPoly> values_;
};

// Values in P^loc, used where Psi is applied to localized vectors.
using LocFunction = std::map<SpinWord, RatFunc>;
LocFunction to_loc(const GKMClass& a);
LocFunction indicator(int N, const SpinWord& lambda);

// (w . alpha)(lambda) = w(alpha(w^{-1} lambda))
GKMClass act(const Permutation& w, const GKMClass& a);

// One failure per violated (lambda, mu = s_ij lambda, (i, j)).
Report gkm_check(const GKMClass& a);

// (alpha - s_i . alpha) / (t_i - t_{i+1}); DivisibilityError on a non-class.
GKMClass demazure(int i, const GKMClass& a);

// Partial-sum dominance mu >= lambda, and its twist mu >=_w lambda.
bool dominates(const SpinWord& mu, const SpinWord& lambda);
bool dominates_w(const Permutation& w, const SpinWord& mu, const SpinWord& lambda);
std::vector<std::pair<int, int>> inversions(const SpinWord& lambda);
std::vector<std::pair<int, int>> inversions_w(const Permutation& w, const SpinWord& lambda);
int length(const SpinWord& lambda);
// prod_{(i,j) in inv_w(lambda)} (t_i - t_j)
MultiPoly stab2_value(const Permutation& w, const SpinWord& lambda);

// S^w_lambda = w . S^e_{w^{-1} lambda}; the untwisted family is built once per
// (N, n) by Demazure recursion from the point class of 1^n 0^k.
GKMClass schubert_class(const Permutation& w, const SpinWord& lambda);
// Independent route: twisted Demazure recursion from the point class at the
// w-maximal word w(1^n 0^k).
GKMClass schubert_class_twisted_demazure(const Permutation& w, const SpinWord& lambda);

// Stab1-Stab3 and GKM for one class.
Report check_stab(const Permutation& w, const SpinWord& lambda, const GKMClass& a);
// Every lambda of every weight for the given twists; both routes compared.
Report check_schubert(int N, const std::vector<Permutation>& twists);
// e, w0, all of S_N for N <= 3, else `samples` seeded random permutations.
std::vector<Permutation> schubert_twists(int N, unsigned long long seed, int samples = 10);
// Delta_a S^e_lambda = S^e_{s_a lambda} or 0 by length.
Report check_demazure_rule(int N);
// Products, the S_N action and Demazure operators keep random classes classes.
Report check_class_closure(int N, unsigned long long seed, int samples = 4);
// Solves Stab1-Stab3 + GKM as a linear system over Q and compares.
Report check_uniqueness(int N);

struct WallCross {
  SpinWord lambda;   // S^{ws}_lambda ...
  SpinWord swapped;  // ... = S^w_{w s w^{-1} lambda}
  MultiPoly coeff;   // + coeff * S^w_lambda (zero in the single-term case)
};
WallCross wall_cross(const Permutation& w, int i, const SpinWord& lambda);
Report check_wall_cross(const Permutation& w, int i, int n);
// Base change S^{ws_i} -> S^w against R_{a,b}(t_b, t_a), a = w(i), b = w(i+1).
Report wallcross_vs_R(const Permutation& w, int i, int n);
// All (w, i, lambda) for N <= 3 style sweeps, and the chain e -> w0 along a reduced word.
Report check_wall_cross_all(int N);
Report check_wall_cross_chain(int N);

// Psi(v) per weight n = 0..N.
std::vector<LocFunction> psi(const TensorVector& v);
// Inverse by elimination against the w0-twisted basis.
TensorVector psi_inverse(int N, const std::vector<LocFunction>& f);
// alpha = sum alpha(lambda) 1_lambda, and the expansion of 1_lambda in the
// w0-twisted basis (solved over P^loc).
LocFunction fixedpoint_expand(const GKMClass& a);
TensorVector indicator_in_twisted_basis(int N, const SpinWord& lambda);
// Psi(b_lambda) = 1_lambda, and psi_inverse(psi(v)) = v on random vectors.
Report check_psi_bethe(int N);
Report check_psi_roundtrip(int N, unsigned long long seed, int samples = 3);
Report check_sym2(int N);

}  // namespace ybs
