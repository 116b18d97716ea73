#include "ybs/exactalg.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

namespace ybs {

// ---------------------------------------------------------------- VarSet

VarSet::VarSet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > kMaxVars) throw AlgebraError("too many variables in varset");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j)
      if (names_[i] == names_[j]) throw AlgebraError("duplicate variable name " + names_[i]);
  }
  while (num_t_ < int(names_.size()) && names_[num_t_] == "t" + std::to_string(num_t_ + 1))
    ++num_t_;
}

VarSetPtr VarSet::make(std::vector<std::string> names) {
  return std::make_shared<const VarSet>(std::move(names));
}

VarSetPtr VarSet::standard(int n) {
  static std::mutex mu;
  static std::map<int, VarSetPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("t" + std::to_string(i));
  for (const char* extra : {"x", "x1", "x2", "q"}) names.emplace_back(extra);
  auto vs = make(std::move(names));
  cache.emplace(n, vs);
  return vs;
}

std::optional<std::size_t> VarSet::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::size_t VarSet::index(std::string_view name) const {
  auto i = find(name);
  if (!i) throw AlgebraError("unknown variable " + std::string(name));
  return *i;
}

std::size_t VarSet::t(int a) const {
  if (a < 1 || a > num_t_) throw AlgebraError("t-index out of range: " + std::to_string(a));
  return std::size_t(a - 1);
}

bool same_varset(const VarSetPtr& a, const VarSetPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

// -------------------------------------------------------------- Monomial

namespace {
constexpr std::uint64_t kHighBits = 0x8080808080808080ULL;

unsigned byte_sum(std::uint64_t w) {
  std::uint64_t s = (w & 0x00FF00FF00FF00FFULL) + ((w >> 8) & 0x00FF00FF00FF00FFULL);
  s = (s & 0x0000FFFF0000FFFFULL) + ((s >> 16) & 0x0000FFFF0000FFFFULL);
  return unsigned((s & 0xFFFFFFFFULL) + (s >> 32));
}
}  // namespace

void Monomial::set(std::size_t var, unsigned e) {
  if (e > kMaxExponent) throw AlgebraError("exponent overflow");
  if (var < 8) {
    const unsigned sh = 8 * (7 - unsigned(var));
    hi = (hi & ~(std::uint64_t(0xFF) << sh)) | (std::uint64_t(e) << sh);
  } else {
    const unsigned sh = 8 * (15 - unsigned(var));
    lo = (lo & ~(std::uint64_t(0xFF) << sh)) | (std::uint64_t(e) << sh);
  }
}

unsigned Monomial::degree() const { return byte_sum(hi) + byte_sum(lo); }

bool Monomial::divides(const Monomial& o) const {
  return (((o.hi | kHighBits) - hi) & kHighBits) == kHighBits &&
         (((o.lo | kHighBits) - lo) & kHighBits) == kHighBits;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m{a.hi + b.hi, a.lo + b.lo};
  if ((m.hi | m.lo) & kHighBits) throw AlgebraError("exponent overflow");
  return m;
}

Monomial operator/(const Monomial& a, const Monomial& b) { return {a.hi - b.hi, a.lo - b.lo}; }

bool grlex_before(const Monomial& a, const Monomial& b) {
  const unsigned da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  if (a.hi != b.hi) return a.hi > b.hi;
  return a.lo > b.lo;
}

// ------------------------------------------------------------- MultiPoly

namespace {

struct KeyedTerm {
  unsigned deg;
  Monomial mono;
  Rational coef;
};

bool keyed_before(const KeyedTerm& a, const KeyedTerm& b) {
  if (a.deg != b.deg) return a.deg > b.deg;
  if (a.mono.hi != b.mono.hi) return a.mono.hi > b.mono.hi;
  return a.mono.lo > b.mono.lo;
}

std::vector<MultiPoly::Term> collapse(std::vector<KeyedTerm>& v) {
  std::sort(v.begin(), v.end(), keyed_before);
  std::vector<MultiPoly::Term> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size();) {
    std::size_t j = i + 1;
    Rational c = v[i].coef;
    while (j < v.size() && v[j].mono == v[i].mono) c += v[j++].coef;
    if (sgn(c) != 0) out.push_back({v[i].mono, std::move(c)});
    i = j;
  }
  return out;
}

}  // namespace

MultiPoly::MultiPoly(VarSetPtr vs, const Rational& c) : vs_(std::move(vs)) {
  if (sgn(c) != 0) terms_.push_back({Monomial{}, c});
}

MultiPoly MultiPoly::var(const VarSetPtr& vs, std::size_t idx) {
  if (!vs || idx >= vs->size()) throw AlgebraError("variable index out of range");
  Monomial m;
  m.set(idx, 1);
  return monomial(vs, m, Rational(1));
}

MultiPoly MultiPoly::var(const VarSetPtr& vs, std::string_view name) {
  return var(vs, vs->index(name));
}

MultiPoly MultiPoly::monomial(const VarSetPtr& vs, const Monomial& m, const Rational& c) {
  MultiPoly p(vs);
  if (sgn(c) != 0) p.terms_.push_back({m, c});
  return p;
}

MultiPoly MultiPoly::from_unsorted(VarSetPtr vs, std::vector<Term> terms) {
  std::vector<KeyedTerm> k;
  k.reserve(terms.size());
  for (auto& t : terms) k.push_back({t.mono.degree(), t.mono, std::move(t.coef)});
  MultiPoly p(std::move(vs));
  p.terms_ = collapse(k);
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

Rational MultiPoly::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coef;
  return Rational(0);
}

int MultiPoly::total_degree() const {
  return terms_.empty() ? -1 : int(terms_.front().mono.degree());
}

unsigned MultiPoly::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.exp(var));
  return d;
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const unsigned d = terms_.front().mono.degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const Term& t) { return t.mono.degree() == d; });
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
  if (vs_ && o.vs_ && !same_varset(vs_, o.vs_)) throw VarsetMismatch("varset mismatch");
}

void MultiPoly::adopt(const MultiPoly& o) {
  check_compatible(o);
  if (!vs_) vs_ = o.vs_;
}

namespace {

// Merge of two sorted term lists with coefficient scale s on the second.
std::vector<MultiPoly::Term> merge_terms(const std::vector<MultiPoly::Term>& a,
                                         const std::vector<MultiPoly::Term>& b, int s) {
  std::vector<MultiPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].mono == b[j].mono) {
      Rational c = s > 0 ? Rational(a[i].coef + b[j].coef) : Rational(a[i].coef - b[j].coef);
      if (sgn(c) != 0) out.push_back({a[i].mono, std::move(c)});
      ++i;
      ++j;
    } else if (grlex_before(a[i].mono, b[j].mono)) {
      out.push_back(a[i++]);
    } else {
      out.push_back({b[j].mono, s > 0 ? b[j].coef : Rational(-b[j].coef)});
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back({b[j].mono, s > 0 ? b[j].coef : Rational(-b[j].coef)});
  return out;
}

}  // namespace

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  adopt(o);
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) {
    terms_ = o.terms_;
    return *this;
  }
  terms_ = merge_terms(terms_, o.terms_, +1);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  adopt(o);
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, o.terms_, -1);
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coef *= c;
  return *this;
}

MultiPoly MultiPoly::mul_monomial(const Monomial& m, const Rational& c) const {
  MultiPoly r(vs_);
  if (sgn(c) == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coef * c});
  return r;  // monomial orders are multiplicative, so the order is kept
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_compatible(b);
  VarSetPtr vs = a.vs_ ? a.vs_ : b.vs_;
  if (a.terms_.empty() || b.terms_.empty()) return MultiPoly(vs);
  if (a.terms_.size() == 1) {
    MultiPoly r = b.mul_monomial(a.terms_[0].mono, a.terms_[0].coef);
    r.vs_ = vs;
    return r;
  }
  if (b.terms_.size() == 1) {
    MultiPoly r = a.mul_monomial(b.terms_[0].mono, b.terms_[0].coef);
    r.vs_ = vs;
    return r;
  }
  std::vector<KeyedTerm> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      Monomial m = x.mono * y.mono;
      prod.push_back({m.degree(), m, x.coef * y.coef});
    }
  }
  MultiPoly r(vs);
  r.terms_ = collapse(prod);
  return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  *this = *this * o;
  return *this;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.vs_ && b.vs_ && !same_varset(a.vs_, b.vs_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coef != b.terms_[i].coef)
      return false;
  }
  return true;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result(vs_, Rational(1));
  MultiPoly base = *this;
  while (e) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e) base *= base;
  }
  return result;
}

MultiPoly MultiPoly::specialize(
    const std::vector<std::pair<std::size_t, MultiPoly>>& bindings) const {
  if (bindings.empty() || terms_.empty()) return *this;
  for (const auto& [v, val] : bindings) check_compatible(val);
  // powers[k][e] = value_k^e, filled lazily
  std::vector<std::vector<MultiPoly>> powers(bindings.size());
  MultiPoly result(vs_);
  std::vector<Term> untouched;
  for (const auto& t : terms_) {
    Monomial rest = t.mono;
    MultiPoly factor(vs_, t.coef);
    bool bound = false;
    for (std::size_t k = 0; k < bindings.size(); ++k) {
      const unsigned e = rest.exp(bindings[k].first);
      if (e == 0) continue;
      bound = true;
      rest.set(bindings[k].first, 0);
      auto& pw = powers[k];
      if (pw.empty()) pw.push_back(MultiPoly(vs_, Rational(1)));
      while (pw.size() <= e) pw.push_back(pw.back() * bindings[k].second);
      factor *= pw[e];
    }
    if (!bound) {
      untouched.push_back(t);
      continue;
    }
    result += factor.mul_monomial(rest, Rational(1));
  }
  if (!untouched.empty()) result += from_unsorted(vs_, std::move(untouched));
  return result;
}

MultiPoly MultiPoly::rename(std::size_t from, std::size_t to) const {
  if (from == to) return *this;
  std::vector<Term> out;
  out.reserve(terms_.size());
  bool moved = false;
  for (const auto& t : terms_) {
    Monomial m = t.mono;
    const unsigned e = m.exp(from);
    if (e) {
      moved = true;
      m.set(from, 0);
      m.set(to, m.exp(to) + e);
    }
    out.push_back({m, t.coef});
  }
  if (!moved) return *this;
  return from_unsorted(vs_, std::move(out));
}

bool MultiPoly::vanishes_on_diagonal(std::size_t a, std::size_t b) const {
  if (terms_.empty()) return true;
  return rename(a, b).is_zero();
}

MultiPoly MultiPoly::coeff_in(std::size_t var, unsigned k) const {
  MultiPoly r(vs_);
  for (const auto& t : terms_) {
    if (t.mono.exp(var) != k) continue;
    Monomial m = t.mono;
    m.set(var, 0);
    r.terms_.push_back({m, t.coef});
  }
  return r;
}

MultiPoly MultiPoly::permute_vars(const std::vector<std::size_t>& image) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m;
    for (std::size_t v = 0; v < image.size(); ++v) {
      const unsigned e = t.mono.exp(v);
      if (e) m.set(image[v], m.exp(image[v]) + e);
    }
    out.push_back({m, t.coef});
  }
  return from_unsorted(vs_, std::move(out));
}

MultiPoly MultiPoly::embed(const VarSetPtr& target) const {
  if (!vs_ || same_varset(vs_, target)) {
    MultiPoly r = *this;
    r.vs_ = target;
    return r;
  }
  std::vector<int> image(vs_->size(), -1);
  for (std::size_t i = 0; i < vs_->size(); ++i) {
    auto j = target->find(vs_->name(i));
    if (j) image[i] = int(*j);
  }
  std::vector<Term> out;
  for (const auto& t : terms_) {
    Monomial m;
    for (std::size_t v = 0; v < vs_->size(); ++v) {
      const unsigned e = t.mono.exp(v);
      if (!e) continue;
      if (image[v] < 0) throw VarsetMismatch("cannot embed: variable " + vs_->name(v) + " absent");
      m.set(std::size_t(image[v]), e);
    }
    out.push_back({m, t.coef});
  }
  return from_unsorted(target, std::move(out));
}

MultiPoly MultiPoly::substitute(const VarSetPtr& target, const std::vector<MultiPoly>& images) const {
  const std::size_t nv = vs_ ? vs_->size() : 0;
  if (images.size() < nv) throw AlgebraError("substitute: missing images");
  MultiPoly result(target);
  std::vector<std::vector<MultiPoly>> powers(nv);
  for (const auto& t : terms_) {
    MultiPoly f(target, t.coef);
    for (std::size_t v = 0; v < nv; ++v) {
      const unsigned e = t.mono.exp(v);
      if (!e) continue;
      auto& pw = powers[v];
      if (pw.empty()) pw.push_back(MultiPoly(target, Rational(1)));
      while (pw.size() <= e) pw.push_back(pw.back() * images[v]);
      f *= pw[e];
    }
    result += f;
  }
  return result;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    const bool neg = sgn(t.coef) < 0;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    Rational a = abs(t.coef);
    std::string mono;
    for (std::size_t v = 0; vs_ && v < vs_->size(); ++v) {
      const unsigned e = t.mono.exp(v);
      if (!e) continue;
      if (!mono.empty()) mono += '*';
      mono += vs_->name(v);
      if (e > 1) mono += '^' + std::to_string(e);
    }
    if (mono.empty()) {
      os << a.get_str();
    } else if (a == 1) {
      os << mono;
    } else {
      os << a.get_str() << '*' << mono;
    }
  }
  return os.str();
}

// --------------------------------------------------------------- division

MultiPoly divide_by_linear_form(const MultiPoly& p, std::size_t v, const MultiPoly& h) {
  if (h.degree_in(v) != 0) throw AlgebraError("divide_by_linear_form: h involves the variable");
  if (p.is_zero()) return MultiPoly(p.varset());
  const unsigned m = p.degree_in(v);
  if (m == 0) throw DivisibilityError("not divisible: degree 0 in division variable");
  std::vector<MultiPoly> c(m + 1);
  for (unsigned k = 0; k <= m; ++k) c[k] = p.coeff_in(v, k);
  // q_{k-1} = c_k + h q_k, starting from q_{m-1} = c_m
  std::vector<MultiPoly> q(m);
  q[m - 1] = c[m];
  for (unsigned k = m - 1; k >= 1; --k) q[k - 1] = c[k] + h * q[k];
  MultiPoly rem = c[0] + h * q[0];
  if (!rem.is_zero()) throw DivisibilityError("polynomial not divisible by linear form");
  const VarSetPtr& vs = p.varset();
  MultiPoly result(vs);
  MultiPoly vp = MultiPoly::var(vs, v);
  MultiPoly pw(vs, Rational(1));
  for (unsigned k = 0; k < m; ++k) {
    result += q[k] * pw;
    pw *= vp;
  }
  return result;
}

MultiPoly divide_by_linear(const MultiPoly& p, int a, int b) {
  if (a == b) throw DivisionByZero("division by t_a - t_a");
  if (p.is_zero()) return p;
  const VarSetPtr& vs = p.varset();
  if (!vs) throw DivisibilityError("constant not divisible by a linear difference");
  return divide_by_linear_form(p, vs->t(a), MultiPoly::t(vs, b));
}

MultiPoly divide_exact(const MultiPoly& p, const MultiPoly& d) {
  if (d.is_zero()) throw DivisionByZero("exact division by zero");
  VarSetPtr vs = p.varset() ? p.varset() : d.varset();
  MultiPoly r = p;
  MultiPoly q(vs);
  const auto& lt = d.leading_term();
  while (!r.is_zero()) {
    const auto& rt = r.leading_term();
    if (!lt.mono.divides(rt.mono)) throw DivisibilityError("exact division has a remainder");
    Monomial m = rt.mono / lt.mono;
    Rational c = rt.coef / lt.coef;
    q += MultiPoly::monomial(vs, m, c);
    r -= d.mul_monomial(m, c);
  }
  return q;
}

// --------------------------------------------------------------- RatFunc

namespace {

MultiPoly linear_difference(const VarSetPtr& vs, int a, int b) {
  return MultiPoly::t(vs, a) - MultiPoly::t(vs, b);
}

std::vector<RatFunc::Factor> distinct(const std::vector<RatFunc::Factor>& f) {
  std::vector<RatFunc::Factor> d = f;
  d.erase(std::unique(d.begin(), d.end()), d.end());
  return d;
}

}  // namespace

RatFunc::RatFunc(MultiPoly num) : num_(std::move(num)) {}

RatFunc::RatFunc(MultiPoly num, std::vector<Factor> den) : num_(std::move(num)) {
  bool neg = false;
  for (auto& [a, b] : den) {
    if (a == b) throw DivisionByZero("denominator factor t_a - t_a");
    if (a > b) {
      std::swap(a, b);
      neg = !neg;
    }
  }
  if (neg) num_ = -num_;
  std::sort(den.begin(), den.end());
  den_ = std::move(den);
  normalize_all();
}

void RatFunc::normalize_all() { reduce(distinct(den_)); }

void RatFunc::reduce(const std::vector<Factor>& candidates) {
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  if (den_.empty()) return;
  const VarSetPtr& vs = num_.varset();
  for (const auto& f : candidates) {
    if (!vs) break;  // a scalar is never divisible
    for (;;) {
      auto it = std::lower_bound(den_.begin(), den_.end(), f);
      if (it == den_.end() || *it != f) break;
      if (!num_.vanishes_on_diagonal(vs->t(f.first), vs->t(f.second))) break;
      num_ = divide_by_linear(num_, f.first, f.second);
      den_.erase(it);
    }
  }
}

RatFunc RatFunc::inverse_linear(const VarSetPtr& vs, int a, int b) {
  return RatFunc(MultiPoly(vs, Rational(1)), {{a, b}});
}

MultiPoly RatFunc::to_poly() const {
  if (!den_.empty()) throw AlgebraError("not a polynomial: " + str());
  return num_;
}

MultiPoly RatFunc::den_poly() const {
  MultiPoly d(varset(), Rational(1));
  for (const auto& [a, b] : den_) d *= linear_difference(varset(), a, b);
  return d;
}

namespace {

// Multiset maximum of two sorted factor lists, plus the complements.
void common_denominator(const std::vector<RatFunc::Factor>& f, const std::vector<RatFunc::Factor>& g,
                        std::vector<RatFunc::Factor>& common, std::vector<RatFunc::Factor>& f_missing,
                        std::vector<RatFunc::Factor>& g_missing) {
  std::size_t i = 0, j = 0;
  while (i < f.size() || j < g.size()) {
    if (j == g.size() || (i < f.size() && f[i] < g[j])) {
      common.push_back(f[i]);
      g_missing.push_back(f[i++]);
    } else if (i == f.size() || g[j] < f[i]) {
      common.push_back(g[j]);
      f_missing.push_back(g[j++]);
    } else {
      common.push_back(f[i]);
      ++i;
      ++j;
    }
  }
}

MultiPoly product_of(const VarSetPtr& vs, const std::vector<RatFunc::Factor>& fs) {
  MultiPoly p(vs, Rational(1));
  for (const auto& [a, b] : fs) p *= linear_difference(vs, a, b);
  return p;
}

}  // namespace

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) {
    if (!num_.varset() && o.varset()) num_ = MultiPoly(o.varset()) + num_;
    return *this;
  }
  if (is_zero()) {
    *this = o;
    return *this;
  }
  if (den_.empty() && o.den_.empty()) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) {
    num_ += o.num_;
    reduce(distinct(den_));
    return *this;
  }
  std::vector<Factor> common, mine, theirs;
  common_denominator(den_, o.den_, common, mine, theirs);
  VarSetPtr vs = varset() ? varset() : o.varset();
  num_ = num_ * product_of(vs, mine) + o.num_ * product_of(vs, theirs);
  den_ = std::move(common);
  reduce(distinct(den_));
  return *this;
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero() || o.is_zero()) {
    VarSetPtr vs = varset() ? varset() : o.varset();
    num_ = MultiPoly(vs);
    den_.clear();
    return *this;
  }
  num_ *= o.num_;
  if (o.den_.empty() && den_.empty()) return *this;
  std::vector<Factor> cand;
  // only factors that meet a numerator that has not yet been tested against them
  if (!o.den_.empty()) cand = distinct(o.den_);
  if (!den_.empty() && !o.num_.is_constant()) {
    auto mine = distinct(den_);
    cand.insert(cand.end(), mine.begin(), mine.end());
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  }
  std::vector<Factor> merged;
  merged.reserve(den_.size() + o.den_.size());
  std::merge(den_.begin(), den_.end(), o.den_.begin(), o.den_.end(), std::back_inserter(merged));
  den_ = std::move(merged);
  reduce(cand);
  return *this;
}

std::optional<std::pair<Rational, std::vector<RatFunc::Factor>>> factor_linear_differences(
    const MultiPoly& p) {
  if (p.is_zero()) return std::nullopt;
  std::vector<RatFunc::Factor> found;
  MultiPoly rest = p;
  const VarSetPtr& vs = p.varset();
  while (!rest.is_constant()) {
    const int nt = vs ? vs->num_t() : 0;
    std::vector<int> live;
    for (int a = 1; a <= nt; ++a)
      if (rest.degree_in(vs->t(a)) > 0) live.push_back(a);
    bool progressed = false;
    for (std::size_t i = 0; i < live.size() && !progressed; ++i) {
      for (std::size_t j = i + 1; j < live.size() && !progressed; ++j) {
        const int a = live[i], b = live[j];
        if (rest.vanishes_on_diagonal(vs->t(a), vs->t(b))) {
          rest = divide_by_linear(rest, a, b);
          found.push_back({a, b});
          progressed = true;
        }
      }
    }
    if (!progressed) return std::nullopt;
  }
  std::sort(found.begin(), found.end());
  return std::make_pair(rest.constant_term(), std::move(found));
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
  if (o.is_zero()) throw DivisionByZero("division by zero in P^loc");
  auto f = factor_linear_differences(o.num_);
  if (!f) throw NonLocalizable("denominator is not a product of linear differences: " + o.num_.str());
  VarSetPtr vs = varset() ? varset() : o.varset();
  MultiPoly num = num_ * o.den_poly();
  num *= Rational(1) / f->first;
  std::vector<Factor> den = den_;
  den.insert(den.end(), f->second.begin(), f->second.end());
  *this = RatFunc(num.varset() ? num : MultiPoly(vs) + num, std::move(den));
  return *this;
}

RatFunc RatFunc::divide_num_exact(const MultiPoly& g) const {
  return RatFunc(divide_exact(num_, g), den_);
}

RatFunc RatFunc::coeff_in(std::size_t var, unsigned k) const {
  if (varset() && int(var) < varset()->num_t()) throw AlgebraError("coeff_in on a t-variable of a fraction");
  return RatFunc(num_.coeff_in(var, k), den_);
}

RatFunc RatFunc::specialize(const std::vector<std::pair<std::size_t, MultiPoly>>& bindings) const {
  for (const auto& b : bindings)
    if (varset() && int(b.first) < varset()->num_t())
      throw AlgebraError("cannot specialize a t-variable of a fraction");
  return RatFunc(num_.specialize(bindings), den_);
}

RatFunc RatFunc::permute_t(const std::vector<int>& w) const {
  if (is_zero()) return *this;
  const VarSetPtr& vs = varset();
  std::vector<Factor> den;
  den.reserve(den_.size());
  for (const auto& [a, b] : den_) den.push_back({w.at(std::size_t(a - 1)), w.at(std::size_t(b - 1))});
  if (!vs) return RatFunc(num_, std::move(den));
  std::vector<std::size_t> image(vs->size());
  for (std::size_t v = 0; v < vs->size(); ++v) image[v] = v;
  for (std::size_t i = 0; i < w.size(); ++i) image[vs->t(int(i) + 1)] = vs->t(w[i]);
  return RatFunc(num_.permute_vars(image), std::move(den));
}

std::string RatFunc::str() const {
  if (den_.empty()) return num_.str();
  std::string s = num_.size() > 1 ? "(" + num_.str() + ")" : num_.str();
  s += " / ";
  bool first = true;
  for (std::size_t i = 0; i < den_.size();) {
    std::size_t j = i;
    while (j < den_.size() && den_[j] == den_[i]) ++j;
    if (!first) s += '*';
    first = false;
    s += "(t" + std::to_string(den_[i].first) + "-t" + std::to_string(den_[i].second) + ")";
    if (j - i > 1) s += "^" + std::to_string(j - i);
    i = j;
  }
  return s;
}

}  // namespace ybs
