#pragma once

// V^{(x)N}[t] and its localization: basis words, sparse vectors and sparse
// operators over P^loc, operator-valued polynomials in x, and S_N.

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ybs/exactalg.hpp"
#include "ybs/report.hpp"

namespace ybs {

inline constexpr int kMaxSites = 24;

// A {0,1}-word of length n. Position 1 is the most significant bit of the
// code, so ordering by code is the basis enumeration order.
class SpinWord {
 public:
  SpinWord() = default;
  SpinWord(int n, std::uint32_t code);
  static SpinWord parse(std::string_view bits);
  static SpinWord from_bits(const std::vector<int>& bits);
  // (0^k, 1^n)
  static SpinWord zeta(int N, int n);

  int size() const { return n_; }
  std::uint32_t code() const { return code_; }
  int at(int i) const { return int((code_ >> (n_ - i)) & 1U); }  // 1-based
  int weight() const;
  SpinWord with(int i, int v) const;
  SpinWord swapped(int i, int j) const;
  // Positions of 1s (or 0s), increasing, 1-based.
  std::vector<int> ones() const;
  std::vector<int> zeros() const;
  // Concatenation: this word followed by `tail`.
  SpinWord concat(const SpinWord& tail) const;
  SpinWord slice(int from, int len) const;  // positions from..from+len-1
  std::string str() const;

  friend bool operator==(const SpinWord& a, const SpinWord& b) { return a.n_ == b.n_ && a.code_ == b.code_; }
  friend bool operator!=(const SpinWord& a, const SpinWord& b) { return !(a == b); }
  friend bool operator<(const SpinWord& a, const SpinWord& b) {
    return a.n_ != b.n_ ? a.n_ < b.n_ : a.code_ < b.code_;
  }

 private:
  int n_ = 0;
  std::uint32_t code_ = 0;
};

std::vector<SpinWord> all_words(int N);
std::vector<SpinWord> words_of_weight(int N, int n);

// Element of S_N in one-line notation, w(i) = img[i-1].
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> one_line);
  static Permutation identity(int N);
  static Permutation simple(int N, int i);  // s_i = (i, i+1)
  static Permutation transposition(int N, int i, int j);
  static Permutation longest(int N);  // omega_0: i -> N+1-i
  // Product s_{w[0]} s_{w[1]} ... of simple reflections.
  static Permutation from_word(int N, const std::vector<int>& word);
  // Accepts "e", "w0", "s1s2...", or comma/space separated one-line "2,1,3".
  static Permutation parse(int N, std::string_view text);
  static std::vector<Permutation> all(int N);

  int size() const { return int(img_.size()); }
  int operator()(int i) const { return img_.at(std::size_t(i - 1)); }
  const std::vector<int>& one_line() const { return img_; }
  Permutation inverse() const;
  int length() const;
  // A reduced word (i_1, ..., i_l) with w = s_{i_1} ... s_{i_l}.
  std::vector<int> reduced_word() const;
  // (w lambda)_j = lambda_{w^{-1}(j)}
  SpinWord act(const SpinWord& w) const;
  std::string str() const;

  friend Permutation operator*(const Permutation& u, const Permutation& v);  // u after v
  friend bool operator==(const Permutation& a, const Permutation& b) { return a.img_ == b.img_; }
  friend bool operator<(const Permutation& a, const Permutation& b) { return a.img_ < b.img_; }

 private:
  std::vector<int> img_;
};

// t_i -> t_{w(i)}
MultiPoly act_on_poly(const Permutation& w, const MultiPoly& p);
RatFunc act_on_frac(const Permutation& w, const RatFunc& f);

class TensorVector {
 public:
  using Map = std::map<SpinWord, RatFunc>;

  TensorVector() = default;
  explicit TensorVector(int N) : n_(N) {}
  static TensorVector basis(const SpinWord& w, const VarSetPtr& vs);

  int sites() const { return n_; }
  const Map& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  std::size_t size() const { return c_.size(); }
  RatFunc at(const SpinWord& w) const;
  void add(const SpinWord& w, const RatFunc& f);
  // Weight n if all keys share it, -1 otherwise (or if empty).
  int homogeneous_weight() const;

  TensorVector& operator+=(const TensorVector& o);
  TensorVector& operator-=(const TensorVector& o);
  TensorVector& operator*=(const RatFunc& f);
  friend TensorVector operator+(TensorVector a, const TensorVector& b) { return a += b; }
  friend TensorVector operator-(TensorVector a, const TensorVector& b) { return a -= b; }
  friend TensorVector operator*(const RatFunc& f, TensorVector v) { return v *= f; }
  friend bool operator==(const TensorVector& a, const TensorVector& b) { return a.n_ == b.n_ && a.c_ == b.c_; }
  friend bool operator!=(const TensorVector& a, const TensorVector& b) { return !(a == b); }

  TensorVector map_coeffs(const std::function<RatFunc(const RatFunc&)>& f) const;
  std::string str() const;

 private:
  int n_ = 0;
  Map c_;
};

TensorVector weight_project(const TensorVector& v, int n);

class SparseOperator {
 public:
  using Row = std::map<SpinWord, RatFunc>;
  using Rows = std::map<SpinWord, Row>;

  SparseOperator() = default;
  explicit SparseOperator(int N) : n_(N) {}
  static SparseOperator identity(int N, const VarSetPtr& vs);

  int sites() const { return n_; }
  const Rows& rows() const { return rows_; }
  bool is_zero() const { return rows_.empty(); }
  std::size_t nnz() const;
  RatFunc at(const SpinWord& row, const SpinWord& col) const;
  void add(const SpinWord& row, const SpinWord& col, const RatFunc& f);
  void set(const SpinWord& row, const SpinWord& col, const RatFunc& f);
  template <class F>
  void for_each(F&& f) const {
    for (const auto& [r, row] : rows_)
      for (const auto& [c, v] : row) f(r, c, v);
  }

  TensorVector apply(const TensorVector& v) const;
  SparseOperator& operator+=(const SparseOperator& o);
  SparseOperator& operator-=(const SparseOperator& o);
  SparseOperator& operator*=(const RatFunc& f);
  friend SparseOperator operator+(SparseOperator a, const SparseOperator& b) { return a += b; }
  friend SparseOperator operator-(SparseOperator a, const SparseOperator& b) { return a -= b; }
  friend SparseOperator operator*(const RatFunc& f, SparseOperator a) { return a *= f; }
  // Composition: (a * b)(v) = a(b(v)).
  friend SparseOperator operator*(const SparseOperator& a, const SparseOperator& b);
  friend bool operator==(const SparseOperator& a, const SparseOperator& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }
  friend bool operator!=(const SparseOperator& a, const SparseOperator& b) { return !(a == b); }

  SparseOperator map_entries(const std::function<RatFunc(const RatFunc&)>& f) const;
  // Keep entries whose row has weight `out` and column weight `in`.
  SparseOperator restrict_weights(int in, int out) const;
  SparseOperator transpose() const;

 private:
  int n_ = 0;
  Rows rows_;
};

// Entrywise comparison, one check per entry of the union of supports.
void compare_operators(Report& rep, const std::string& relation, const SparseOperator& lhs,
                       const SparseOperator& rhs);
void compare_vectors(Report& rep, const std::string& relation, const std::string& col,
                     const TensorVector& lhs, const TensorVector& rhs);

// O(x) = sum_i O^(i) x^i
class OperatorPoly {
 public:
  OperatorPoly() = default;
  explicit OperatorPoly(int N) : n_(N) {}
  OperatorPoly(int N, std::vector<SparseOperator> coeffs);
  // Splits an operator whose entries involve variable x into x-coefficients.
  static OperatorPoly from_operator(const SparseOperator& op, std::size_t xvar);

  int sites() const { return n_; }
  int degree() const { return int(c_.size()) - 1; }  // -1 for zero
  const std::vector<SparseOperator>& coeffs() const { return c_; }
  // O^(i); zero operator beyond the degree.
  SparseOperator coeff(int i) const;
  SparseOperator evaluate(const MultiPoly& xval) const;
  TensorVector apply(const TensorVector& v, const MultiPoly& xval) const;

  OperatorPoly& operator+=(const OperatorPoly& o);
  friend OperatorPoly operator+(OperatorPoly a, const OperatorPoly& b) { return a += b; }
  friend OperatorPoly operator*(const OperatorPoly& f, const OperatorPoly& g);  // compose
  friend bool operator==(const OperatorPoly& a, const OperatorPoly& b) { return a.n_ == b.n_ && a.c_ == b.c_; }

  OperatorPoly map_coeffs(const std::function<SparseOperator(const SparseOperator&)>& f) const;

 private:
  void trim();
  int n_ = 0;
  std::vector<SparseOperator> c_;
};

// Operator series in two commuting spectral variables: sum O_{ij} x1^i x2^j.
class OperatorSeries2 {
 public:
  using Key = std::pair<int, int>;
  explicit OperatorSeries2(int N) : n_(N) {}

  // f(xf) g(xg) with f applied after g; xf, xg in {1, 2}.
  static OperatorSeries2 product(const OperatorPoly& f, int xf, const OperatorPoly& g, int xg);

  const std::map<Key, SparseOperator>& terms() const { return t_; }
  OperatorSeries2& operator+=(const OperatorSeries2& o);
  OperatorSeries2& operator-=(const OperatorSeries2& o);
  // Multiplies by a polynomial c(x1, x2) whose coefficients may involve t.
  OperatorSeries2 scaled(const MultiPoly& c, std::size_t x1var, std::size_t x2var) const;
  bool is_zero() const { return t_.empty(); }

 private:
  void add(const Key& k, const SparseOperator& op);
  int n_;
  std::map<Key, SparseOperator> t_;
};

}  // namespace ybs
