#pragma once

// Exact sparse polynomials over Q and their localization at the linear
// differences t_a - t_b.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ybs {

using Rational = mpq_class;

class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class VarsetMismatch : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};
class DivisibilityError : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};
class DivisionByZero : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};
class NonLocalizable : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};
class ParseError : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

inline constexpr std::size_t kMaxVars = 16;
inline constexpr unsigned kMaxExponent = 127;

// Ordered list of variable names. The leading variables may be named
// t1, t2, ..., tk in that order; these are the equivariant parameters and
// the only ones allowed in RatFunc denominators.
class VarSet;
using VarSetPtr = std::shared_ptr<const VarSet>;

class VarSet {
 public:
  explicit VarSet(std::vector<std::string> names);

  static VarSetPtr make(std::vector<std::string> names);
  // t1..tn followed by x, x1, x2, q. Cached, so repeated calls share one object.
  static VarSetPtr standard(int n);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> find(std::string_view name) const;
  std::size_t index(std::string_view name) const;  // throws AlgebraError
  int num_t() const { return num_t_; }
  std::size_t t(int a) const;  // variable index of t_a, 1-based

  bool operator==(const VarSet& o) const { return names_ == o.names_; }

 private:
  std::vector<std::string> names_;
  int num_t_ = 0;
};

bool same_varset(const VarSetPtr& a, const VarSetPtr& b);

// Exponent vector packed one byte per variable; variable 0 sits in the most
// significant byte of hi, so (hi, lo) compared as integers is lex order.
struct Monomial {
  std::uint64_t hi = 0;
  std::uint64_t lo = 0;

  unsigned exp(std::size_t var) const {
    return var < 8 ? unsigned((hi >> (8 * (7 - var))) & 0xFF)
                   : unsigned((lo >> (8 * (15 - var))) & 0xFF);
  }
  void set(std::size_t var, unsigned e);
  unsigned degree() const;
  bool is_one() const { return hi == 0 && lo == 0; }
  bool divides(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend Monomial operator/(const Monomial& a, const Monomial& b);  // requires b | a
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.hi == b.hi && a.lo == b.lo;
  }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
};

// Graded lex: true if a comes strictly before b (a is the larger monomial).
bool grlex_before(const Monomial& a, const Monomial& b);

class MultiPoly {
 public:
  struct Term {
    Monomial mono;
    Rational coef;
  };

  // The zero polynomial with no varset behaves as a scalar and adopts the
  // varset of whatever it is combined with.
  MultiPoly() = default;
  explicit MultiPoly(VarSetPtr vs) : vs_(std::move(vs)) {}
  MultiPoly(VarSetPtr vs, const Rational& c);
  MultiPoly(VarSetPtr vs, long c) : MultiPoly(std::move(vs), Rational(c)) {}

  static MultiPoly var(const VarSetPtr& vs, std::size_t idx);
  static MultiPoly var(const VarSetPtr& vs, std::string_view name);
  static MultiPoly t(const VarSetPtr& vs, int a) { return var(vs, vs->t(a)); }
  static MultiPoly monomial(const VarSetPtr& vs, const Monomial& m, const Rational& c);
  static MultiPoly parse(const VarSetPtr& vs, std::string_view text);

  const VarSetPtr& varset() const { return vs_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  int total_degree() const;  // -1 for zero
  unsigned degree_in(std::size_t var) const;
  bool is_homogeneous() const;
  const Term& leading_term() const { return terms_.front(); }

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);
  MultiPoly operator-() const;
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  MultiPoly pow(unsigned e) const;
  MultiPoly mul_monomial(const Monomial& m, const Rational& c) const;

  // Simultaneous substitution of some variables by polynomials.
  MultiPoly specialize(const std::vector<std::pair<std::size_t, MultiPoly>>& bindings) const;
  // Substitution var `from` := var `to`.
  MultiPoly rename(std::size_t from, std::size_t to) const;
  // True if p vanishes after identifying variables a and b.
  bool vanishes_on_diagonal(std::size_t a, std::size_t b) const;
  // Coefficient of var^k, as a polynomial free of var.
  MultiPoly coeff_in(std::size_t var, unsigned k) const;
  // Relabel variables: variable i becomes variable image[i].
  MultiPoly permute_vars(const std::vector<std::size_t>& image) const;
  // Map into another varset by variable names; fails if a used name is absent.
  MultiPoly embed(const VarSetPtr& target) const;
  // Total substitution into another varset: variable i := images[i].
  MultiPoly substitute(const VarSetPtr& target, const std::vector<MultiPoly>& images) const;

  std::string str() const;

 private:
  void adopt(const MultiPoly& o);
  void check_compatible(const MultiPoly& o) const;
  static MultiPoly from_unsorted(VarSetPtr vs, std::vector<Term> terms);

  VarSetPtr vs_;
  std::vector<Term> terms_;  // strictly decreasing in grlex, no zero coefficients
};

std::string to_string(const Rational& q);

// q with q * (t_a - t_b) = p; throws DivisibilityError otherwise.
MultiPoly divide_by_linear(const MultiPoly& p, int a, int b);
// q with q * (v - h) = p where h does not involve variable v.
MultiPoly divide_by_linear_form(const MultiPoly& p, std::size_t v, const MultiPoly& h);
// Exact quotient p / d by multivariate division; throws DivisibilityError if
// the remainder is nonzero.
MultiPoly divide_exact(const MultiPoly& p, const MultiPoly& d);

// Element of P^loc: num / prod (t_a - t_b), fully reduced.
class RatFunc {
 public:
  using Factor = std::pair<int, int>;  // (a, b) with a < b stands for t_a - t_b

  RatFunc() = default;
  RatFunc(MultiPoly num);  // NOLINT: polynomials embed implicitly
  // Pairs may come in either orientation; (a, b) with a > b contributes a sign.
  RatFunc(MultiPoly num, std::vector<Factor> den);

  static RatFunc parse(const VarSetPtr& vs, std::string_view text);
  // 1 / (t_a - t_b)
  static RatFunc inverse_linear(const VarSetPtr& vs, int a, int b);

  const MultiPoly& num() const { return num_; }
  const std::vector<Factor>& den() const { return den_; }
  const VarSetPtr& varset() const { return num_.varset(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.empty(); }
  MultiPoly to_poly() const;  // throws if a denominator remains
  MultiPoly den_poly() const;

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  RatFunc operator-() const;
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.den_ == b.den_ && a.num_ == b.num_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  // Exact division of the numerator by an arbitrary polynomial.
  RatFunc divide_num_exact(const MultiPoly& g) const;
  // Coefficient of var^k for a variable that is not a t-variable.
  RatFunc coeff_in(std::size_t var, unsigned k) const;
  // Substitution of non-t variables only (denominators are untouched).
  RatFunc specialize(const std::vector<std::pair<std::size_t, MultiPoly>>& bindings) const;
  // Permutation of the t-variables: t_i -> t_{w(i)}, w given 1-based in one-line form.
  RatFunc permute_t(const std::vector<int>& w) const;

  std::string str() const;

 private:
  void reduce(const std::vector<Factor>& candidates);
  void normalize_all();

  MultiPoly num_;
  std::vector<Factor> den_;  // sorted, a < b
};

// Splits p as c * prod (t_a - t_b); nullopt if p is not of that shape.
std::optional<std::pair<Rational, std::vector<RatFunc::Factor>>> factor_linear_differences(
    const MultiPoly& p);

}  // namespace ybs
