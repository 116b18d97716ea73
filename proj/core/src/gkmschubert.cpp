#include "ybs/gkmschubert.hpp"

#include <algorithm>
#include <mutex>

#include "ybs/random.hpp"
#include "ybs/vertexmodel.hpp"
#include "ybs/ybops.hpp"

namespace ybs {

GKMClass::GKMClass(int N, int n) : N_(N), n_(n), vs_(VarSet::standard(N)) {
  if (n < 0 || n > N) throw std::invalid_argument("GKMClass: weight out of range");
  for (const auto& w : words_of_weight(N, n)) values_.emplace(w, MultiPoly(vs_));
}

GKMClass GKMClass::constant(int N, int n, const MultiPoly& c) {
  GKMClass a(N, n);
  for (auto& [w, v] : a.values_) v = c;
  return a;
}

GKMClass GKMClass::point(int N, const SpinWord& lambda, const MultiPoly& value) {
  GKMClass a(N, lambda.weight());
  a.set(lambda, value);
  return a;
}

const MultiPoly& GKMClass::at(const SpinWord& lambda) const {
  auto it = values_.find(lambda);
  if (it == values_.end()) throw std::out_of_range("GKMClass: word " + lambda.str() + " not in Lambda_n");
  return it->second;
}

void GKMClass::set(const SpinWord& lambda, MultiPoly value) {
  auto it = values_.find(lambda);
  if (it == values_.end()) throw std::out_of_range("GKMClass: word " + lambda.str() + " not in Lambda_n");
  it->second = std::move(value);
}

std::vector<SpinWord> GKMClass::support() const {
  std::vector<SpinWord> s;
  for (const auto& [w, v] : values_)
    if (!v.is_zero()) s.push_back(w);
  return s;
}

bool GKMClass::is_zero() const { return support().empty(); }

GKMClass& GKMClass::operator+=(const GKMClass& o) {
  for (const auto& [w, v] : o.values_) values_.at(w) += v;
  return *this;
}

GKMClass& GKMClass::operator-=(const GKMClass& o) {
  for (const auto& [w, v] : o.values_) values_.at(w) -= v;
  return *this;
}

GKMClass operator*(const GKMClass& a, const GKMClass& b) {
  GKMClass r = a;
  for (auto& [w, v] : r.values_) v *= b.at(w);
  return r;
}

GKMClass operator*(const MultiPoly& f, GKMClass a) {
  for (auto& [w, v] : a.values_) v *= f;
  return a;
}

std::string GKMClass::str() const {
  std::string s;
  for (const auto& [w, v] : values_) {
    if (!s.empty()) s += "; ";
    s += w.str() + ": " + v.str();
  }
  return s;
}

LocFunction to_loc(const GKMClass& a) {
  LocFunction f;
  for (const auto& [w, v] : a.values()) f.emplace(w, RatFunc(v));
  return f;
}

LocFunction indicator(int N, const SpinWord& lambda) {
  const VarSetPtr vs = VarSet::standard(N);
  LocFunction f;
  for (const auto& w : words_of_weight(N, lambda.weight()))
    f.emplace(w, RatFunc(MultiPoly(vs, Rational(w == lambda ? 1 : 0))));
  return f;
}

GKMClass act(const Permutation& w, const GKMClass& a) {
  GKMClass r(a.sites(), a.weight());
  for (const auto& [mu, v] : a.values()) r.set(w.act(mu), act_on_poly(w, v));
  return r;
}

Report gkm_check(const GKMClass& a) {
  Report rep("gkm", "-", a.sites());
  const int N = a.sites();
  for (const auto& [lambda, v] : a.values())
    for (int i = 1; i <= N; ++i)
      for (int j = i + 1; j <= N; ++j) {
        if (lambda.at(i) == lambda.at(j)) continue;
        const SpinWord mu = lambda.swapped(i, j);
        if (mu < lambda) continue;  // each unordered pair once
        const MultiPoly d = v - a.at(mu);
        rep.expect(d.vanishes_on_diagonal(a.varset()->t(i), a.varset()->t(j)), "GKM condition",
                   lambda.str() + "," + mu.str(), "(" + std::to_string(i) + "," + std::to_string(j) + ")", d.str(),
                   "0 mod t" + std::to_string(i) + "-t" + std::to_string(j));
      }
  return rep;
}

GKMClass demazure(int i, const GKMClass& a) {
  const int N = a.sites();
  if (i < 1 || i >= N) throw std::invalid_argument("demazure: index out of range");
  GKMClass d = a - act(Permutation::simple(N, i), a);
  GKMClass r(N, a.weight());
  for (const auto& [w, v] : d.values()) r.set(w, divide_by_linear(v, i, i + 1));
  return r;
}

bool dominates(const SpinWord& mu, const SpinWord& lambda) {
  int sm = 0, sl = 0;
  for (int j = 1; j <= mu.size(); ++j) {
    sm += mu.at(j);
    sl += lambda.at(j);
    if (sm < sl) return false;
  }
  return sm == sl;
}

bool dominates_w(const Permutation& w, const SpinWord& mu, const SpinWord& lambda) {
  const Permutation wi = w.inverse();
  return dominates(wi.act(mu), wi.act(lambda));
}

std::vector<std::pair<int, int>> inversions(const SpinWord& lambda) {
  return inversions_w(Permutation::identity(lambda.size()), lambda);
}

std::vector<std::pair<int, int>> inversions_w(const Permutation& w, const SpinWord& lambda) {
  const Permutation wi = w.inverse();
  std::vector<std::pair<int, int>> r;
  for (int i = 1; i <= lambda.size(); ++i)
    for (int j = 1; j <= lambda.size(); ++j)
      if (wi(i) < wi(j) && lambda.at(i) > lambda.at(j)) r.emplace_back(i, j);
  return r;
}

int length(const SpinWord& lambda) { return int(inversions(lambda).size()); }

MultiPoly stab2_value(const Permutation& w, const SpinWord& lambda) {
  const VarSetPtr vs = VarSet::standard(lambda.size());
  MultiPoly p(vs, Rational(1));
  for (const auto& [i, j] : inversions_w(w, lambda)) p *= MultiPoly::t(vs, i) - MultiPoly::t(vs, j);
  return p;
}

namespace {

// First a with lambda_a = 0, lambda_{a+1} = 1; 0 if lambda is the top word.
int ascent(const SpinWord& lambda) {
  for (int a = 1; a < lambda.size(); ++a)
    if (lambda.at(a) == 0 && lambda.at(a + 1) == 1) return a;
  return 0;
}

const std::map<SpinWord, GKMClass>& untwisted(int N, int n) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::map<SpinWord, GKMClass>> cache;
  std::lock_guard lock(mu);
  auto [it, fresh] = cache.try_emplace({N, n});
  if (!fresh) return it->second;
  auto& table = it->second;
  auto words = words_of_weight(N, n);
  std::stable_sort(words.begin(), words.end(),
                   [](const SpinWord& a, const SpinWord& b) { return length(a) > length(b); });
  const Permutation e = Permutation::identity(N);
  for (const auto& lambda : words) {
    const int a = ascent(lambda);
    if (a == 0)
      table.emplace(lambda, GKMClass::point(N, lambda, stab2_value(e, lambda)));
    else
      table.emplace(lambda, demazure(a, table.at(lambda.swapped(a, a + 1))));
  }
  return table;
}

void compare_classes(Report& rep, const std::string& relation, const std::string& col, const GKMClass& a,
                     const GKMClass& b) {
  for (const auto& [mu, v] : a.values()) {
    const MultiPoly& u = b.at(mu);
    rep.expect(v == u, relation, mu.str(), col, v.str(), u.str());
  }
}

}  // namespace

GKMClass schubert_class(const Permutation& w, const SpinWord& lambda) {
  const int N = lambda.size();
  const auto& table = untwisted(N, lambda.weight());
  return act(w, table.at(w.inverse().act(lambda)));
}

GKMClass schubert_class_twisted_demazure(const Permutation& w, const SpinWord& lambda) {
  const int N = lambda.size();
  const SpinWord nu = w.inverse().act(lambda);
  const int a = ascent(nu);
  if (a == 0) return GKMClass::point(N, lambda, stab2_value(w, lambda));
  const int p = w(a), q = w(a + 1);
  const GKMClass parent = schubert_class_twisted_demazure(w, lambda.swapped(p, q));
  const GKMClass d = parent - act(Permutation::transposition(N, p, q), parent);
  GKMClass r(N, lambda.weight());
  for (const auto& [mu, v] : d.values()) r.set(mu, divide_by_linear(v, p, q));
  return r;
}

Report check_stab(const Permutation& w, const SpinWord& lambda, const GKMClass& a) {
  Report rep("stab", "-", lambda.size());
  const std::string col = "w=" + w.str() + " lambda=" + lambda.str();
  rep.absorb(gkm_check(a));
  rep.expect(!a.at(lambda).is_zero(), "Stab1: lambda in support", lambda.str(), col);
  for (const auto& mu : a.support())
    rep.expect(dominates_w(w, mu, lambda), "Stab1: support above lambda", mu.str(), col, a.at(mu).str(), "0");
  const MultiPoly s2 = stab2_value(w, lambda);
  rep.expect(a.at(lambda) == s2, "Stab2: value at lambda", lambda.str(), col, a.at(lambda).str(), s2.str());
  const int deg = length(w.inverse().act(lambda));
  for (const auto& [mu, v] : a.values()) {
    if (!dominates_w(w, mu, lambda) || v.is_zero()) continue;
    rep.expect(v.is_homogeneous() && v.total_degree() == deg, "Stab3: degree", mu.str(), col,
               std::to_string(v.total_degree()), std::to_string(deg));
  }
  return rep;
}

Report check_schubert(int N, const std::vector<Permutation>& twists) {
  Report rep("schubert", "-", N);
  for (const auto& w : twists)
    for (int n = 0; n <= N; ++n)
      for (const auto& lambda : words_of_weight(N, n)) {
        const GKMClass a = schubert_class(w, lambda);
        rep.absorb(check_stab(w, lambda, a));
        compare_classes(rep, "twist formula = twisted Demazure", "w=" + w.str() + " lambda=" + lambda.str(), a,
                        schubert_class_twisted_demazure(w, lambda));
      }
  return rep;
}

std::vector<Permutation> schubert_twists(int N, unsigned long long seed, int samples) {
  if (N <= 3) return Permutation::all(N);
  std::vector<Permutation> r{Permutation::identity(N), Permutation::longest(N)};
  Rng rng(seed);
  std::vector<int> img(static_cast<std::size_t>(N));
  for (int s = 0; s < samples; ++s) {
    for (int i = 0; i < N; ++i) img[std::size_t(i)] = i + 1;
    std::shuffle(img.begin(), img.end(), rng);
    r.emplace_back(img);
  }
  return r;
}

Report check_demazure_rule(int N) {
  Report rep("demazure-rule", "-", N);
  for (int n = 0; n <= N; ++n) {
    const auto& table = untwisted(N, n);
    for (const auto& [lambda, s] : table)
      for (int a = 1; a < N; ++a) {
        const SpinWord sl = lambda.swapped(a, a + 1);
        const GKMClass expect = length(lambda) > length(sl) ? table.at(sl) : GKMClass(N, n);
        compare_classes(rep, "Delta_" + std::to_string(a) + " S^e_lambda", lambda.str(), demazure(a, s), expect);
      }
  }
  return rep;
}

Report check_class_closure(int N, unsigned long long seed, int samples) {
  Report rep("class-closure", "-", N);
  Rng rng(seed);
  const VarSetPtr vs = VarSet::standard(N);
  for (int n = 0; n <= N; ++n) {
    const auto& table = untwisted(N, n);
    auto random_class = [&] {
      GKMClass a(N, n);
      for (const auto& [lambda, s] : table) a += random_poly(vs, N, 1, 2, rng) * s;
      return a;
    };
    for (int k = 0; k < samples; ++k) {
      const GKMClass a = random_class(), b = random_class();
      rep.absorb(gkm_check(a * b));
      rep.absorb(gkm_check(a + random_poly(vs, N, 2, 3, rng) * b));
      for (const auto& w : schubert_twists(N, seed + unsigned(k), 2)) rep.absorb(gkm_check(act(w, a)));
      for (int i = 1; i < N; ++i) {
        bool ok = true;
        try {
          rep.absorb(gkm_check(demazure(i, a)));
        } catch (const DivisibilityError&) {
          ok = false;
        }
        rep.expect(ok, "Demazure of a class is defined", "i=" + std::to_string(i));
      }
    }
  }
  return rep;
}

namespace {

void monomials_of_degree(int N, int d, int var, Monomial cur, std::vector<Monomial>& out, const VarSetPtr& vs) {
  if (var == N) {
    if (d == 0) out.push_back(cur);
    return;
  }
  for (int e = 0; e <= d; ++e) {
    Monomial m = cur;
    m.set(vs->t(var + 1), unsigned(e));
    monomials_of_degree(N, d - e, var + 1, m, out, vs);
  }
}

// Stab1-3 + GKM as a linear system in the coefficients of alpha(mu);
// returns the unique solution, or nullopt (with a reason) otherwise.
std::optional<GKMClass> solve_stab(const Permutation& w, const SpinWord& lambda, std::string& why) {
  const int N = lambda.size(), n = lambda.weight();
  const VarSetPtr vs = VarSet::standard(N);
  const int deg = length(w.inverse().act(lambda));
  std::vector<Monomial> monos;
  monomials_of_degree(N, deg, 0, Monomial{}, monos, vs);
  std::vector<SpinWord> free;
  for (const auto& mu : words_of_weight(N, n))
    if (mu != lambda && dominates_w(w, mu, lambda)) free.push_back(mu);
  const std::size_t nv = free.size() * monos.size();
  const MultiPoly fixed = stab2_value(w, lambda);
  auto slot = [&](const SpinWord& mu) -> int {
    auto it = std::find(free.begin(), free.end(), mu);
    return it == free.end() ? -1 : int(it - free.begin());
  };
  QMatrix rows;
  for (const auto& mu : words_of_weight(N, n))
    for (int i = 1; i <= N; ++i)
      for (int j = i + 1; j <= N; ++j) {
        if (mu.at(i) == mu.at(j)) continue;
        const SpinWord nu = mu.swapped(i, j);
        if (nu < mu) continue;
        // (alpha(mu) - alpha(nu)) at t_j = t_i, collected by monomial
        std::map<std::pair<std::uint64_t, std::uint64_t>, std::vector<Rational>> eq;
        auto restrict_mono = [&](Monomial m) {
          m.set(vs->t(i), m.exp(vs->t(i)) + m.exp(vs->t(j)));
          m.set(vs->t(j), 0);
          return std::make_pair(m.hi, m.lo);
        };
        auto row_for = [&](std::pair<std::uint64_t, std::uint64_t> k) -> std::vector<Rational>& {
          auto [it, fresh] = eq.try_emplace(k);
          if (fresh) it->second.assign(nv + 1, Rational(0));
          return it->second;
        };
        auto add_side = [&](const SpinWord& x, int sign) {
          if (x == lambda) {
            for (const auto& t : fixed.terms()) row_for(restrict_mono(t.mono))[nv] -= sign * t.coef;
            return;
          }
          const int s = slot(x);
          if (s < 0) return;
          for (std::size_t k = 0; k < monos.size(); ++k)
            row_for(restrict_mono(monos[k]))[std::size_t(s) * monos.size() + k] += sign;
        };
        add_side(mu, 1);
        add_side(nu, -1);
        for (auto& [k, r] : eq) rows.push_back(std::move(r));
      }
  if (rows.empty()) rows.push_back(std::vector<Rational>(nv + 1, Rational(0)));
  const auto piv = rref(rows);
  if (!piv.empty() && piv.back() == nv) {
    why = "inconsistent";
    return std::nullopt;
  }
  if (piv.size() != nv) {
    why = std::to_string(nv - piv.size()) + "-dimensional solution family";
    return std::nullopt;
  }
  GKMClass a = GKMClass::point(N, lambda, fixed);
  for (std::size_t s = 0; s < free.size(); ++s) {
    MultiPoly v(vs);
    for (std::size_t k = 0; k < monos.size(); ++k)
      v += MultiPoly::monomial(vs, monos[k], rows[s * monos.size() + k][nv]);
    a.set(free[s], v);
  }
  return a;
}

}  // namespace

Report check_uniqueness(int N) {
  Report rep("uniqueness", "-", N);
  for (const auto& w : Permutation::all(N))
    for (int n = 0; n <= N; ++n)
      for (const auto& lambda : words_of_weight(N, n)) {
        std::string why;
        const auto sol = solve_stab(w, lambda, why);
        const std::string col = "w=" + w.str() + " lambda=" + lambda.str();
        rep.expect(sol.has_value(), "Stab1-3 determine a unique class", "", col, why, "unique");
        if (sol) compare_classes(rep, "unique solution = S^w_lambda", col, *sol, schubert_class(w, lambda));
      }
  return rep;
}

WallCross wall_cross(const Permutation& w, int i, const SpinWord& lambda) {
  const int N = lambda.size();
  if (i < 1 || i >= N) throw std::invalid_argument("wall_cross: index out of range");
  const VarSetPtr vs = VarSet::standard(N);
  const int a = w(i), b = w(i + 1);
  WallCross r{lambda, lambda.swapped(a, b), MultiPoly(vs)};
  if (lambda.at(b) > lambda.at(a)) r.coeff = MultiPoly::t(vs, b) - MultiPoly::t(vs, a);
  return r;
}

Report check_wall_cross(const Permutation& w, int i, int n) {
  const int N = w.size();
  Report rep("wall-cross", "-", N);
  const Permutation ws = w * Permutation::simple(N, i);
  for (const auto& lambda : words_of_weight(N, n)) {
    const WallCross wc = wall_cross(w, i, lambda);
    const GKMClass rhs = schubert_class(w, wc.swapped) + wc.coeff * schubert_class(w, lambda);
    compare_classes(rep, "S^{ws}_lambda expansion", "w=" + w.str() + " i=" + std::to_string(i) + " lambda=" + lambda.str(),
                    schubert_class(ws, lambda), rhs);
  }
  return rep;
}

Report wallcross_vs_R(const Permutation& w, int i, int n) {
  const int N = w.size();
  Report rep("wallcross-R", "osc", N);
  const VarSetPtr vs = VarSet::standard(N);
  const Permutation ws = w * Permutation::simple(N, i);
  const auto words = words_of_weight(N, n);
  // Solve S^{ws}_lambda = sum_mu X[mu][lambda] S^w_mu from fixed-point values.
  FracMatrix A(words.size(), std::vector<RatFunc>(words.size())), B = A;
  for (std::size_t c = 0; c < words.size(); ++c) {
    const GKMClass sw = schubert_class(w, words[c]), sws = schubert_class(ws, words[c]);
    for (std::size_t r = 0; r < words.size(); ++r) {
      A[r][c] = RatFunc(sw.at(words[r]));
      B[r][c] = RatFunc(sws.at(words[r]));
    }
  }
  const FracMatrix X = solve(A, B);
  const int a = w(i), b = w(i + 1);
  const Table R = VertexModel::osc().rmat_at(MultiPoly::t(vs, b), MultiPoly::t(vs, a));
  const std::string col = "w=" + w.str() + " i=" + std::to_string(i);
  for (std::size_t c = 0; c < words.size(); ++c) {
    const SpinWord& in = words[c];
    const int pin = pair_index(in.at(a), in.at(b));
    for (std::size_t r = 0; r < words.size(); ++r) {
      const SpinWord& out = words[r];
      RatFunc expect{MultiPoly(vs)};
      if (out.with(a, in.at(a)).with(b, in.at(b)) == in)
        expect = RatFunc(R[std::size_t(pair_index(out.at(a), out.at(b)))][std::size_t(pin)]);
      rep.expect((X[r][c] - expect).is_zero(), "base change = R_{a,b}(t_b,t_a)", out.str() + "<-" + in.str(), col,
                 X[r][c].str(), expect.str());
    }
  }
  return rep;
}

Report check_wall_cross_all(int N) {
  Report rep("wall-cross-all", "osc", N);
  for (const auto& w : Permutation::all(N))
    for (int i = 1; i < N; ++i)
      for (int n = 0; n <= N; ++n) {
        rep.absorb(check_wall_cross(w, i, n));
        rep.absorb(wallcross_vs_R(w, i, n));
      }
  return rep;
}

Report check_wall_cross_chain(int N) {
  Report rep("wall-cross-chain", "osc", N);
  Permutation w = Permutation::identity(N);
  for (int i : Permutation::longest(N).reduced_word()) {
    for (int n = 0; n <= N; ++n) {
      rep.absorb(check_wall_cross(w, i, n));
      rep.absorb(wallcross_vs_R(w, i, n));
    }
    w = w * Permutation::simple(N, i);
  }
  rep.expect(w == Permutation::longest(N), "chain ends at w0", "", "", w.str(), Permutation::longest(N).str());
  return rep;
}

std::vector<LocFunction> psi(const TensorVector& v) {
  const int N = v.sites();
  const VarSetPtr vs = VarSet::standard(N);
  const Permutation w0 = Permutation::longest(N);
  std::vector<LocFunction> r(std::size_t(N + 1));
  for (int n = 0; n <= N; ++n)
    for (const auto& w : words_of_weight(N, n)) r[std::size_t(n)].emplace(w, RatFunc(MultiPoly(vs)));
  for (const auto& [lambda, c] : v.coeffs()) {
    const GKMClass s = schubert_class(w0, lambda);
    auto& f = r[std::size_t(lambda.weight())];
    for (const auto& [mu, val] : s.values())
      if (!val.is_zero()) f.at(mu) += c * RatFunc(val);
  }
  return r;
}

TensorVector psi_inverse(int N, const std::vector<LocFunction>& f) {
  const Permutation w0 = Permutation::longest(N);
  TensorVector v(N);
  for (const auto& part : f) {
    if (part.empty()) continue;
    const int n = part.begin()->first.weight();
    const auto words = words_of_weight(N, n);
    FracMatrix A(words.size(), std::vector<RatFunc>(words.size()));
    FracMatrix b(words.size(), std::vector<RatFunc>(1));
    for (std::size_t c = 0; c < words.size(); ++c) {
      const GKMClass s = schubert_class(w0, words[c]);
      for (std::size_t r = 0; r < words.size(); ++r) A[r][c] = RatFunc(s.at(words[r]));
    }
    for (std::size_t r = 0; r < words.size(); ++r) {
      auto it = part.find(words[r]);
      b[r][0] = it == part.end() ? RatFunc(MultiPoly(VarSet::standard(N))) : it->second;
    }
    const FracMatrix x = solve(A, b);
    for (std::size_t c = 0; c < words.size(); ++c)
      if (!x[c][0].is_zero()) v.add(words[c], x[c][0]);
  }
  return v;
}

LocFunction fixedpoint_expand(const GKMClass& a) { return to_loc(a); }

TensorVector indicator_in_twisted_basis(int N, const SpinWord& lambda) {
  return psi_inverse(N, {indicator(N, lambda)});
}

namespace {

void compare_loc(Report& rep, const std::string& relation, const std::string& col, const LocFunction& a,
                 const LocFunction& b) {
  for (const auto& [mu, v] : a) {
    auto it = b.find(mu);
    const RatFunc u = it == b.end() ? RatFunc() : it->second;
    rep.expect(v == u || (v.is_zero() && u.is_zero()), relation, mu.str(), col, v.str(), u.str());
  }
}

}  // namespace

Report check_psi_bethe(int N) {
  Report rep("psi-bethe", "osc", N);
  for (const auto& lambda : all_words(N)) {
    const TensorVector b = bethe_vector(lambda, true);
    const auto image = psi(b);
    for (int n = 0; n <= N; ++n) {
      const LocFunction expect =
          n == lambda.weight() ? indicator(N, lambda) : to_loc(GKMClass(N, n));
      compare_loc(rep, "Psi(b_lambda) = 1_lambda", lambda.str(), image[std::size_t(n)], expect);
    }
    compare_vectors(rep, "1_lambda expanded in S^{w0} = b_lambda", lambda.str(), indicator_in_twisted_basis(N, lambda), b);
  }
  return rep;
}

Report check_psi_roundtrip(int N, unsigned long long seed, int samples) {
  Report rep("psi-roundtrip", "-", N);
  Rng rng(seed);
  for (int s = 0; s < samples; ++s) {
    const TensorVector v = random_vector(N, rng);
    compare_vectors(rep, "Psi^{-1} Psi v = v", std::to_string(s), psi_inverse(N, psi(v)), v);
  }
  for (int n = 0; n <= N; ++n) {
    const GKMClass one = GKMClass::constant(N, n, MultiPoly(VarSet::standard(N), Rational(1)));
    const auto f = psi(psi_inverse(N, {fixedpoint_expand(one)}));
    compare_loc(rep, "expand then collect = identity", "n=" + std::to_string(n), f[std::size_t(n)],
                fixedpoint_expand(one));
  }
  return rep;
}

Report check_sym2(int N) {
  Report rep("sym2", "-", N);
  const VarSetPtr vs = VarSet::standard(N);
  const Permutation w0 = Permutation::longest(N);
  const Permutation e = Permutation::identity(N);
  for (int n = 0; n <= N; ++n)
    for (const auto& lambda : words_of_weight(N, n)) {
      const GKMClass s = schubert_class(w0, lambda);
      compare_classes(rep, "w0 . S_{w0 lambda} = S^{w0}_lambda", lambda.str(),
                      act(w0, schubert_class(e, w0.act(lambda))), s);
      for (int i = 1; i < N; ++i) {
        GKMClass rhs = s;
        const SpinWord sl = lambda.swapped(i, i + 1);
        if (sl != lambda && dominates(sl, lambda))
          rhs -= (MultiPoly::t(vs, i + 1) - MultiPoly::t(vs, i)) * schubert_class(w0, sl);
        compare_classes(rep, "s_" + std::to_string(i) + " . S^{w0}_lambda", lambda.str(),
                        act(Permutation::simple(N, i), s), rhs);
      }
    }
  return rep;
}

}  // namespace ybs
