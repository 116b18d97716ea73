#include "ybs/spinspace.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <numeric>
#include <sstream>

namespace ybs {

// ---------------------------------------------------------------- SpinWord

SpinWord::SpinWord(int n, std::uint32_t code) : n_(n), code_(code) {
  if (n < 0 || n > kMaxSites) throw std::invalid_argument("word length out of range");
  if (n < 32 && (code >> n) != 0) throw std::invalid_argument("word code exceeds length");
}

SpinWord SpinWord::parse(std::string_view bits) {
  std::vector<int> b;
  for (char c : bits) {
    if (c == '0' || c == '1') {
      b.push_back(c - '0');
    } else if (c == ',' || c == ' ' || c == '(' || c == ')') {
      continue;
    } else {
      throw std::invalid_argument("bad character in word '" + std::string(bits) + "'");
    }
  }
  return from_bits(b);
}

SpinWord SpinWord::from_bits(const std::vector<int>& bits) {
  std::uint32_t c = 0;
  for (int b : bits) c = (c << 1) | std::uint32_t(b & 1);
  return SpinWord(int(bits.size()), c);
}

SpinWord SpinWord::zeta(int N, int n) { return SpinWord(N, (std::uint32_t(1) << n) - 1); }

int SpinWord::weight() const { return std::popcount(code_); }

SpinWord SpinWord::with(int i, int v) const {
  const std::uint32_t bit = std::uint32_t(1) << (n_ - i);
  return SpinWord(n_, v ? (code_ | bit) : (code_ & ~bit));
}

SpinWord SpinWord::swapped(int i, int j) const {
  const int a = at(i), b = at(j);
  return with(i, b).with(j, a);
}

std::vector<int> SpinWord::ones() const {
  std::vector<int> r;
  for (int i = 1; i <= n_; ++i)
    if (at(i)) r.push_back(i);
  return r;
}

std::vector<int> SpinWord::zeros() const {
  std::vector<int> r;
  for (int i = 1; i <= n_; ++i)
    if (!at(i)) r.push_back(i);
  return r;
}

SpinWord SpinWord::concat(const SpinWord& tail) const {
  return SpinWord(n_ + tail.n_, (code_ << tail.n_) | tail.code_);
}

SpinWord SpinWord::slice(int from, int len) const {
  const std::uint32_t shifted = code_ >> (n_ - (from - 1) - len);
  return SpinWord(len, len == 0 ? 0 : shifted & ((std::uint32_t(1) << len) - 1));
}

std::string SpinWord::str() const {
  std::string s(static_cast<std::size_t>(n_), '0');
  for (int i = 1; i <= n_; ++i) s[std::size_t(i - 1)] = char('0' + at(i));
  return s;
}

std::vector<SpinWord> all_words(int N) {
  std::vector<SpinWord> r;
  r.reserve(std::size_t(1) << N);
  for (std::uint32_t c = 0; c < (std::uint32_t(1) << N); ++c) r.emplace_back(N, c);
  return r;
}

std::vector<SpinWord> words_of_weight(int N, int n) {
  std::vector<SpinWord> r;
  for (std::uint32_t c = 0; c < (std::uint32_t(1) << N); ++c)
    if (std::popcount(c) == n) r.emplace_back(N, c);
  return r;
}

// ------------------------------------------------------------- Permutation

Permutation::Permutation(std::vector<int> one_line) : img_(std::move(one_line)) {
  std::vector<bool> seen(img_.size() + 1, false);
  for (int v : img_) {
    if (v < 1 || v > int(img_.size()) || seen[std::size_t(v)])
      throw std::invalid_argument("not a permutation");
    seen[std::size_t(v)] = true;
  }
}

Permutation Permutation::identity(int N) {
  std::vector<int> v(static_cast<std::size_t>(N));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::simple(int N, int i) { return transposition(N, i, i + 1); }

Permutation Permutation::transposition(int N, int i, int j) {
  if (i < 1 || j < 1 || i > N || j > N) throw std::invalid_argument("transposition index out of range");
  auto p = identity(N);
  std::swap(p.img_[std::size_t(i - 1)], p.img_[std::size_t(j - 1)]);
  return p;
}

Permutation Permutation::longest(int N) {
  std::vector<int> v(static_cast<std::size_t>(N));
  for (int i = 0; i < N; ++i) v[std::size_t(i)] = N - i;
  return Permutation(std::move(v));
}

Permutation Permutation::from_word(int N, const std::vector<int>& word) {
  auto p = identity(N);
  for (int i : word) p = p * simple(N, i);
  return p;
}

Permutation Permutation::parse(int N, std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty() || s == "e" || s == "id") return identity(N);
  if (s == "w0") return longest(N);
  if (s[0] == 's') {
    std::vector<int> word;
    std::size_t i = 0;
    while (i < s.size()) {
      if (s[i] != 's') throw std::invalid_argument("bad reduced word '" + s + "'");
      ++i;
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j == i) throw std::invalid_argument("bad reduced word '" + s + "'");
      const int k = std::stoi(s.substr(i, j - i));
      if (k < 1 || k >= N) throw std::invalid_argument("simple reflection out of range");
      word.push_back(k);
      i = j;
    }
    return from_word(N, word);
  }
  std::vector<int> v;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) v.push_back(std::stoi(tok));
  if (int(v.size()) != N) throw std::invalid_argument("one-line permutation has wrong length");
  return Permutation(std::move(v));
}

std::vector<Permutation> Permutation::all(int N) {
  std::vector<Permutation> r;
  auto p = identity(N).img_;
  do {
    r.emplace_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return r;
}

Permutation Permutation::inverse() const {
  std::vector<int> v(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) v[std::size_t(img_[i] - 1)] = int(i) + 1;
  return Permutation(std::move(v));
}

int Permutation::length() const {
  int l = 0;
  for (std::size_t i = 0; i < img_.size(); ++i)
    for (std::size_t j = i + 1; j < img_.size(); ++j)
      if (img_[i] > img_[j]) ++l;
  return l;
}

std::vector<int> Permutation::reduced_word() const {
  // peel right descents: w = w' s_i with l(w') = l(w) - 1
  std::vector<int> rev;
  std::vector<int> v = img_;
  for (;;) {
    bool found = false;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
      if (v[i] > v[i + 1]) {
        std::swap(v[i], v[i + 1]);
        rev.push_back(int(i) + 1);
        found = true;
        break;
      }
    }
    if (!found) break;
  }
  return {rev.rbegin(), rev.rend()};
}

SpinWord Permutation::act(const SpinWord& w) const {
  std::vector<int> bits(static_cast<std::size_t>(w.size()));
  for (int i = 1; i <= w.size(); ++i) bits[std::size_t((*this)(i) - 1)] = w.at(i);
  return SpinWord::from_bits(bits);
}

std::string Permutation::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(img_[i]);
  }
  return s + "]";
}

Permutation operator*(const Permutation& u, const Permutation& v) {
  if (u.size() != v.size()) throw std::invalid_argument("permutation size mismatch");
  std::vector<int> r(v.img_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = u(v.img_[i]);
  return Permutation(std::move(r));
}

MultiPoly act_on_poly(const Permutation& w, const MultiPoly& p) {
  return RatFunc(p).permute_t(w.one_line()).num();
}

RatFunc act_on_frac(const Permutation& w, const RatFunc& f) { return f.permute_t(w.one_line()); }

// ------------------------------------------------------------ TensorVector

TensorVector TensorVector::basis(const SpinWord& w, const VarSetPtr& vs) {
  TensorVector v(w.size());
  v.c_.emplace(w, RatFunc(MultiPoly(vs, Rational(1))));
  return v;
}

RatFunc TensorVector::at(const SpinWord& w) const {
  auto it = c_.find(w);
  return it == c_.end() ? RatFunc() : it->second;
}

void TensorVector::add(const SpinWord& w, const RatFunc& f) {
  if (f.is_zero()) return;
  if (n_ == 0) n_ = w.size();
  auto [it, fresh] = c_.try_emplace(w, f);
  if (fresh) return;
  it->second += f;
  if (it->second.is_zero()) c_.erase(it);
}

int TensorVector::homogeneous_weight() const {
  if (c_.empty()) return -1;
  const int n = c_.begin()->first.weight();
  for (const auto& kv : c_)
    if (kv.first.weight() != n) return -1;
  return n;
}

TensorVector& TensorVector::operator+=(const TensorVector& o) {
  if (n_ == 0) n_ = o.n_;
  for (const auto& [w, f] : o.c_) add(w, f);
  return *this;
}

TensorVector& TensorVector::operator-=(const TensorVector& o) {
  if (n_ == 0) n_ = o.n_;
  for (const auto& [w, f] : o.c_) add(w, -f);
  return *this;
}

TensorVector& TensorVector::operator*=(const RatFunc& f) {
  if (f.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& kv : c_) kv.second *= f;
  return *this;
}

TensorVector TensorVector::map_coeffs(const std::function<RatFunc(const RatFunc&)>& f) const {
  TensorVector r(n_);
  for (const auto& [w, c] : c_) r.add(w, f(c));
  return r;
}

std::string TensorVector::str() const {
  if (c_.empty()) return "0";
  std::string s;
  for (const auto& [w, c] : c_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.str() + ")*v" + w.str();
  }
  return s;
}

TensorVector weight_project(const TensorVector& v, int n) {
  TensorVector r(v.sites());
  for (const auto& [w, c] : v.coeffs())
    if (w.weight() == n) r.add(w, c);
  return r;
}

// ---------------------------------------------------------- SparseOperator

SparseOperator SparseOperator::identity(int N, const VarSetPtr& vs) {
  SparseOperator op(N);
  const RatFunc one(MultiPoly(vs, Rational(1)));
  for (const auto& w : all_words(N)) op.rows_[w].emplace(w, one);
  return op;
}

std::size_t SparseOperator::nnz() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.second.size();
  return n;
}

RatFunc SparseOperator::at(const SpinWord& row, const SpinWord& col) const {
  auto it = rows_.find(row);
  if (it == rows_.end()) return RatFunc();
  auto jt = it->second.find(col);
  return jt == it->second.end() ? RatFunc() : jt->second;
}

void SparseOperator::add(const SpinWord& row, const SpinWord& col, const RatFunc& f) {
  if (f.is_zero()) return;
  if (n_ == 0) n_ = row.size();
  auto& r = rows_[row];
  auto [it, fresh] = r.try_emplace(col, f);
  if (fresh) return;
  it->second += f;
  if (it->second.is_zero()) {
    r.erase(it);
    if (r.empty()) rows_.erase(row);
  }
}

void SparseOperator::set(const SpinWord& row, const SpinWord& col, const RatFunc& f) {
  if (n_ == 0) n_ = row.size();
  if (f.is_zero()) {
    auto it = rows_.find(row);
    if (it == rows_.end()) return;
    it->second.erase(col);
    if (it->second.empty()) rows_.erase(it);
    return;
  }
  rows_[row][col] = f;
}

TensorVector SparseOperator::apply(const TensorVector& v) const {
  TensorVector r(n_ ? n_ : v.sites());
  if (v.is_zero()) return r;
  for (const auto& [row, entries] : rows_) {
    RatFunc acc;
    for (const auto& [col, f] : entries) {
      auto it = v.coeffs().find(col);
      if (it != v.coeffs().end()) acc += f * it->second;
    }
    r.add(row, acc);
  }
  return r;
}

SparseOperator& SparseOperator::operator+=(const SparseOperator& o) {
  if (n_ == 0) n_ = o.n_;
  o.for_each([&](const SpinWord& r, const SpinWord& c, const RatFunc& f) { add(r, c, f); });
  return *this;
}

SparseOperator& SparseOperator::operator-=(const SparseOperator& o) {
  if (n_ == 0) n_ = o.n_;
  o.for_each([&](const SpinWord& r, const SpinWord& c, const RatFunc& f) { add(r, c, -f); });
  return *this;
}

SparseOperator& SparseOperator::operator*=(const RatFunc& f) {
  if (f.is_zero()) {
    rows_.clear();
    return *this;
  }
  for (auto& r : rows_)
    for (auto& e : r.second) e.second *= f;
  return *this;
}

SparseOperator operator*(const SparseOperator& a, const SparseOperator& b) {
  SparseOperator r(a.n_ ? a.n_ : b.n_);
  for (const auto& [row, aentries] : a.rows_) {
    std::map<SpinWord, RatFunc> acc;
    for (const auto& [mid, f] : aentries) {
      auto it = b.rows_.find(mid);
      if (it == b.rows_.end()) continue;
      for (const auto& [col, g] : it->second) {
        auto [jt, fresh] = acc.try_emplace(col, f * g);
        if (!fresh) jt->second += f * g;
      }
    }
    for (auto& [col, v] : acc)
      if (!v.is_zero()) r.rows_[row].emplace(col, std::move(v));
  }
  return r;
}

SparseOperator SparseOperator::map_entries(const std::function<RatFunc(const RatFunc&)>& f) const {
  SparseOperator r(n_);
  for_each([&](const SpinWord& row, const SpinWord& col, const RatFunc& v) { r.add(row, col, f(v)); });
  return r;
}

SparseOperator SparseOperator::restrict_weights(int in, int out) const {
  SparseOperator r(n_);
  for_each([&](const SpinWord& row, const SpinWord& col, const RatFunc& v) {
    if (row.weight() == out && col.weight() == in) r.add(row, col, v);
  });
  return r;
}

SparseOperator SparseOperator::transpose() const {
  SparseOperator r(n_);
  for_each([&](const SpinWord& row, const SpinWord& col, const RatFunc& v) { r.add(col, row, v); });
  return r;
}

void compare_operators(Report& rep, const std::string& relation, const SparseOperator& lhs,
                       const SparseOperator& rhs) {
  std::map<std::pair<SpinWord, SpinWord>, std::pair<RatFunc, RatFunc>> all;
  lhs.for_each([&](const SpinWord& r, const SpinWord& c, const RatFunc& v) { all[{r, c}].first = v; });
  rhs.for_each([&](const SpinWord& r, const SpinWord& c, const RatFunc& v) { all[{r, c}].second = v; });
  if (all.empty()) {
    rep.expect(true, relation);
    return;
  }
  for (const auto& [rc, lr] : all) {
    const bool ok = lr.first == lr.second || (lr.first - lr.second).is_zero();
    if (ok) {
      rep.expect(true, relation);
    } else {
      rep.expect(false, relation, rc.first.str(), rc.second.str(), lr.first.str(), lr.second.str());
    }
  }
}

void compare_vectors(Report& rep, const std::string& relation, const std::string& col,
                     const TensorVector& lhs, const TensorVector& rhs) {
  std::map<SpinWord, std::pair<RatFunc, RatFunc>> all;
  for (const auto& [w, f] : lhs.coeffs()) all[w].first = f;
  for (const auto& [w, f] : rhs.coeffs()) all[w].second = f;
  if (all.empty()) {
    rep.expect(true, relation);
    return;
  }
  for (const auto& [w, lr] : all) {
    const bool ok = (lr.first - lr.second).is_zero();
    if (ok) {
      rep.expect(true, relation);
    } else {
      rep.expect(false, relation, w.str(), col, lr.first.str(), lr.second.str());
    }
  }
}

// ------------------------------------------------------------ OperatorPoly

OperatorPoly::OperatorPoly(int N, std::vector<SparseOperator> coeffs) : n_(N), c_(std::move(coeffs)) {
  trim();
}

void OperatorPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

OperatorPoly OperatorPoly::from_operator(const SparseOperator& op, std::size_t xvar) {
  std::vector<SparseOperator> cs;
  op.for_each([&](const SpinWord& r, const SpinWord& c, const RatFunc& v) {
    const unsigned d = v.num().degree_in(xvar);
    if (cs.size() < d + 1) cs.resize(d + 1, SparseOperator(op.sites()));
    for (unsigned k = 0; k <= d; ++k) cs[k].add(r, c, v.coeff_in(xvar, k));
  });
  return OperatorPoly(op.sites(), std::move(cs));
}

SparseOperator OperatorPoly::coeff(int i) const {
  if (i < 0 || i >= int(c_.size())) return SparseOperator(n_);
  return c_[std::size_t(i)];
}

SparseOperator OperatorPoly::evaluate(const MultiPoly& xval) const {
  SparseOperator r(n_);
  MultiPoly p(xval.varset(), Rational(1));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) p *= xval;
    r += RatFunc(p) * c_[i];
  }
  return r;
}

TensorVector OperatorPoly::apply(const TensorVector& v, const MultiPoly& xval) const {
  TensorVector r(n_);
  MultiPoly p(xval.varset(), Rational(1));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) p *= xval;
    r += RatFunc(p) * c_[i].apply(v);
  }
  return r;
}

OperatorPoly& OperatorPoly::operator+=(const OperatorPoly& o) {
  if (n_ == 0) n_ = o.n_;
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), SparseOperator(n_));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

OperatorPoly operator*(const OperatorPoly& f, const OperatorPoly& g) {
  const int N = f.n_ ? f.n_ : g.n_;
  if (f.c_.empty() || g.c_.empty()) return OperatorPoly(N);
  std::vector<SparseOperator> cs(f.c_.size() + g.c_.size() - 1, SparseOperator(N));
  for (std::size_t i = 0; i < f.c_.size(); ++i)
    for (std::size_t j = 0; j < g.c_.size(); ++j) cs[i + j] += f.c_[i] * g.c_[j];
  return OperatorPoly(N, std::move(cs));
}

OperatorPoly OperatorPoly::map_coeffs(const std::function<SparseOperator(const SparseOperator&)>& f) const {
  std::vector<SparseOperator> cs;
  cs.reserve(c_.size());
  for (const auto& c : c_) cs.push_back(f(c));
  return OperatorPoly(n_, std::move(cs));
}

// --------------------------------------------------------- OperatorSeries2

void OperatorSeries2::add(const Key& k, const SparseOperator& op) {
  if (op.is_zero()) return;
  auto [it, fresh] = t_.try_emplace(k, op);
  if (fresh) return;
  it->second += op;
  if (it->second.is_zero()) t_.erase(it);
}

OperatorSeries2 OperatorSeries2::product(const OperatorPoly& f, int xf, const OperatorPoly& g, int xg) {
  OperatorSeries2 r(f.sites() ? f.sites() : g.sites());
  for (int i = 0; i <= f.degree(); ++i) {
    if (f.coeffs()[std::size_t(i)].is_zero()) continue;
    for (int j = 0; j <= g.degree(); ++j) {
      if (g.coeffs()[std::size_t(j)].is_zero()) continue;
      int e1 = 0, e2 = 0;
      (xf == 1 ? e1 : e2) += i;
      (xg == 1 ? e1 : e2) += j;
      r.add({e1, e2}, f.coeffs()[std::size_t(i)] * g.coeffs()[std::size_t(j)]);
    }
  }
  return r;
}

OperatorSeries2& OperatorSeries2::operator+=(const OperatorSeries2& o) {
  for (const auto& [k, op] : o.t_) add(k, op);
  return *this;
}

OperatorSeries2& OperatorSeries2::operator-=(const OperatorSeries2& o) {
  for (const auto& [k, op] : o.t_) {
    SparseOperator neg(op.sites());
    neg -= op;
    add(k, neg);
  }
  return *this;
}

OperatorSeries2 OperatorSeries2::scaled(const MultiPoly& c, std::size_t x1var, std::size_t x2var) const {
  OperatorSeries2 r(n_);
  for (const auto& term : c.terms()) {
    const int a = int(term.mono.exp(x1var)), b = int(term.mono.exp(x2var));
    Monomial rest = term.mono;
    rest.set(x1var, 0);
    rest.set(x2var, 0);
    const RatFunc k(MultiPoly::monomial(c.varset(), rest, term.coef));
    for (const auto& [key, op] : t_) r.add({key.first + a, key.second + b}, k * op);
  }
  return r;
}

}  // namespace ybs
