#include "ybs/vertexmodel.hpp"
#include "ybs/random.hpp"

#include <functional>
#include <map>
#include <mutex>

namespace ybs {

std::string to_string(Model m) { return m == Model::OSC ? "osc" : "vic"; }

std::string to_string(Tag t) {
  static const char* names[] = {"A", "B", "C", "D"};
  return names[int(t)];
}

Model parse_model(std::string_view s) {
  if (s == "osc" || s == "OSC") return Model::OSC;
  if (s == "vic" || s == "VIC") return Model::VIC;
  throw std::invalid_argument("unknown model '" + std::string(s) + "'");
}

Tag parse_tag(std::string_view s, bool* primed) {
  if (s.empty() || s.size() > 2 || (s.size() == 2 && s[1] != '\'' && s[1] != 'p'))
    throw std::invalid_argument("unknown operator tag '" + std::string(s) + "'");
  if (primed) *primed = s.size() == 2;
  switch (s[0]) {
    case 'A': return Tag::A;
    case 'B': return Tag::B;
    case 'C': return Tag::C;
    case 'D': return Tag::D;
    default: throw std::invalid_argument("unknown operator tag '" + std::string(s) + "'");
  }
}

const VarSetPtr& table_varset() {
  static const VarSetPtr vs = VarSet::make({"x", "y", "t"});
  return vs;
}

namespace {

Table parse_table(const std::array<std::array<const char*, 4>, 4>& src) {
  Table t;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) t[i][j] = MultiPoly::parse(table_varset(), src[i][j]);
  return t;
}

Table substitute_table(const Table& t, const VarSetPtr& target, const std::vector<MultiPoly>& images) {
  Table r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r[i][j] = t[i][j].is_zero() ? MultiPoly(target) : t[i][j].substitute(target, images);
  return r;
}

}  // namespace

VertexModel VertexModel::osc() {
  VertexModel m;
  m.kind_ = Model::OSC;
  m.name_ = "osc";
  m.lax_ = parse_table({{{"1", "0", "0", "0"}, {"0", "x+t", "1", "0"}, {"0", "1", "0", "0"}, {"0", "0", "0", "1"}}});
  m.rmat_ = parse_table({{{"1", "0", "0", "0"}, {"0", "x-y", "1", "0"}, {"0", "1", "0", "0"}, {"0", "0", "0", "1"}}});
  return m;
}

VertexModel VertexModel::vic() {
  VertexModel m;
  m.kind_ = Model::VIC;
  m.name_ = "vic";
  m.lax_ = parse_table({{{"x-t", "0", "0", "0"}, {"0", "1", "1", "0"}, {"0", "1", "1", "0"}, {"0", "0", "0", "0"}}});
  m.rmat_ = parse_table({{{"1", "0", "0", "0"}, {"0", "0", "1", "0"}, {"0", "1", "y-x", "0"}, {"0", "0", "0", "1"}}});
  return m;
}

VertexModel perturbed_model(Model m, unsigned long long seed) {
  Rng rng(seed);
  const long c = std::uniform_int_distribution<long>(2, 9)(rng);
  return VertexModel::of(m).with_weight(Role::Lax, 3, 3, MultiPoly(table_varset(), c));
}

VertexModel VertexModel::with_weight(Role r, int out, int in, const MultiPoly& w) const {
  VertexModel m = *this;
  (r == Role::Lax ? m.lax_ : m.rmat_)[std::size_t(out)][std::size_t(in)] = w;
  m.perturbed_ = true;
  m.name_ = name_ + "*";
  return m;
}

MultiPoly VertexModel::crossing_weight(Role r, std::pair<int, int> in, std::pair<int, int> out) const {
  return table(r)[std::size_t(pair_index(out.first, out.second))][std::size_t(pair_index(in.first, in.second))];
}

Table VertexModel::lax_at(const MultiPoly& x, const MultiPoly& t) const {
  const VarSetPtr& vs = x.varset() ? x.varset() : t.varset();
  return substitute_table(lax_, vs, {x, MultiPoly(vs), t});
}

Table VertexModel::rmat_at(const MultiPoly& x, const MultiPoly& y) const {
  const VarSetPtr& vs = x.varset() ? x.varset() : y.varset();
  return substitute_table(rmat_, vs, {x, y, MultiPoly(vs)});
}

// ------------------------------------------------------------ six-vertex

std::array<MultiPoly, 6> six_vertex_weights(const Table& t) {
  return {t[0][0], t[3][3], t[1][1], t[2][2], t[1][2], t[2][1]};
}

Table from_six_vertex(const std::array<MultiPoly, 6>& w) {
  VarSetPtr vs;
  for (const auto& p : w)
    if (p.varset()) vs = p.varset();
  Table t;
  for (auto& row : t) row.fill(MultiPoly(vs));
  t[0][0] = w[0];
  t[3][3] = w[1];
  t[1][1] = w[2];
  t[2][2] = w[3];
  t[1][2] = w[4];
  t[2][1] = w[5];
  return t;
}

Table transform_first(const Table& t) {
  const auto w = six_vertex_weights(t);
  return from_six_vertex({w[1], w[0], w[3], w[2], w[5], w[4]});
}

Table transform_second(const Table& t) {
  const auto w = six_vertex_weights(t);
  return from_six_vertex({w[2], w[3], w[0], w[1], w[5], w[4]});
}

Table negate_t(const Table& t) {
  const auto& vs = table_varset();
  return substitute_table(t, vs, {MultiPoly::var(vs, 0), MultiPoly::var(vs, 1), -MultiPoly::var(vs, 2)});
}

Table swap_xy(const Table& t) {
  const auto& vs = table_varset();
  return substitute_table(t, vs, {MultiPoly::var(vs, 1), MultiPoly::var(vs, 0), MultiPoly::var(vs, 2)});
}

namespace {

// Whether num/den is a rational constant; the constant goes to c.
BaxterDelta::Status constant_ratio(const MultiPoly& num, const MultiPoly& den, Rational& c) {
  if (den.is_zero()) return BaxterDelta::Status::Inapplicable;
  if (num.is_zero()) {
    c = 0;
    return BaxterDelta::Status::Constant;
  }
  c = num.leading_term().coef / den.leading_term().coef;
  return num == c * den ? BaxterDelta::Status::Constant : BaxterDelta::Status::NonConstant;
}

}  // namespace

BaxterDelta baxter_delta(const std::array<MultiPoly, 6>& w) {
  BaxterDelta d;
  const MultiPoly den = w[0] * w[2];
  const MultiPoly n1 = w[0] * w[1] + w[2] * w[3] - w[4] * w[5];
  d.status1 = constant_ratio(n1, Rational(2) * den, d.delta1);
  d.status2 = constant_ratio(w[0] * w[1], den, d.delta2);
  return d;
}

// ------------------------------------------------------------ monodromy

namespace {

std::vector<Table> column_tables(const VertexModel& m, int N, const VarSetPtr& vs) {
  std::vector<Table> cols;
  const MultiPoly x = MultiPoly::var(vs, "x");
  for (int c = 1; c <= N; ++c) cols.push_back(m.lax_at(x, MultiPoly::t(vs, c)));
  return cols;
}

}  // namespace

MultiPoly row_lattice_entry(const VertexModel& m, Tag tag, const SpinWord& in, const SpinWord& out,
                            const VarSetPtr& vs) {
  const int N = in.size();
  const auto cols = column_tables(m, N, vs);
  const auto [right, left] = tag_labels(tag);
  MultiPoly total(vs);
  // depth-first over the internal horizontal labels h_1..h_{N-1}
  std::function<void(int, int, const MultiPoly&)> walk = [&](int c, int h, const MultiPoly& acc) {
    if (c > N) {
      if (h == right) total += acc;
      return;
    }
    for (int next = 0; next < 2; ++next) {
      if (c == N && next != right) continue;
      const MultiPoly& w =
          cols[std::size_t(c - 1)][std::size_t(pair_index(next, out.at(c)))][std::size_t(pair_index(h, in.at(c)))];
      if (w.is_zero()) continue;
      walk(c + 1, next, acc * w);
    }
  };
  walk(1, left, MultiPoly(vs, Rational(1)));
  return total;
}

Monodromy monodromy(const VertexModel& m, int N) {
  if (N < 1 || N > kMaxSites) throw std::invalid_argument("monodromy: N out of range");
  const VarSetPtr vs = VarSet::standard(N);
  const auto cols = column_tables(m, N, vs);
  // blocks on zero sites: A = D = 1, B = C = 0
  std::array<SparseOperator, 4> cur;
  const SpinWord empty(0, 0);
  const RatFunc one(MultiPoly(vs, Rational(1)));
  cur[0].set(empty, empty, one);
  cur[3].set(empty, empty, one);
  for (int j = 1; j <= N; ++j) {
    const Table& L = cols[std::size_t(j - 1)];
    std::array<SparseOperator, 4> next;
    for (auto& b : next) b = SparseOperator(j);
    for (int e = 0; e < 2; ++e) {
      for (int b = 0; b < 2; ++b) {
        cur[std::size_t(2 * e + b)].for_each([&](const SpinWord& mu, const SpinWord& lam, const RatFunc& f) {
          for (int a = 0; a < 2; ++a)
            for (int i = 0; i < 2; ++i)
              for (int k = 0; k < 2; ++k) {
                const MultiPoly& w = L[std::size_t(pair_index(a, i))][std::size_t(pair_index(e, k))];
                if (w.is_zero()) continue;
                next[std::size_t(2 * a + b)].add(mu.concat(SpinWord(1, std::uint32_t(i))),
                                                  lam.concat(SpinWord(1, std::uint32_t(k))), RatFunc(w) * f);
              }
        });
      }
    }
    cur = std::move(next);
  }
  Monodromy M;
  M.N = N;
  M.block = std::move(cur);
  return M;
}

Monodromy monodromy_by_lattice(const VertexModel& m, int N) {
  const VarSetPtr vs = VarSet::standard(N);
  Monodromy M;
  M.N = N;
  for (int t = 0; t < 4; ++t) {
    M.block[std::size_t(t)] = SparseOperator(N);
    const auto [right, left] = tag_labels(Tag(t));
    for (const auto& in : all_words(N))
      for (const auto& out : all_words(N)) {
        // every crossing conserves the number of 1-labels
        if (in.weight() + left != out.weight() + right) continue;
        const MultiPoly e = row_lattice_entry(m, Tag(t), in, out, vs);
        if (!e.is_zero()) M.block[std::size_t(t)].set(out, in, RatFunc(e));
      }
  }
  return M;
}

namespace {

std::mutex& cache_mutex() {
  static std::mutex mu;
  return mu;
}

}  // namespace

const Monodromy& monodromy(Model m, int N) {
  static std::map<std::pair<Model, int>, std::unique_ptr<Monodromy>> cache;
  {
    std::lock_guard<std::mutex> lock(cache_mutex());
    auto it = cache.find({m, N});
    if (it != cache.end()) return *it->second;
  }
  auto M = std::make_unique<Monodromy>(monodromy(VertexModel::of(m), N));
  std::lock_guard<std::mutex> lock(cache_mutex());
  auto [it, fresh] = cache.try_emplace({m, N}, std::move(M));
  return *it->second;
}

OperatorPoly block_poly(const VertexModel& m, int N, Tag tag) {
  const Monodromy M = monodromy(m, N);
  return OperatorPoly::from_operator(M[tag], VarSet::standard(N)->index("x"));
}

const OperatorPoly& block_poly(Model m, int N, Tag tag) {
  static std::map<std::tuple<Model, int, Tag>, std::unique_ptr<OperatorPoly>> cache;
  {
    std::lock_guard<std::mutex> lock(cache_mutex());
    auto it = cache.find({m, N, tag});
    if (it != cache.end()) return *it->second;
  }
  const Monodromy& M = monodromy(m, N);
  auto P = std::make_unique<OperatorPoly>(OperatorPoly::from_operator(M[tag], VarSet::standard(N)->index("x")));
  std::lock_guard<std::mutex> lock(cache_mutex());
  auto [it, fresh] = cache.try_emplace({m, N, tag}, std::move(P));
  return *it->second;
}

// ------------------------------------------------------------ YBE checks

namespace {

using Mat8 = std::array<std::array<MultiPoly, 8>, 8>;

std::string bits3(int i) {
  return std::string{char('0' + ((i >> 2) & 1)), char('0' + ((i >> 1) & 1)), char('0' + (i & 1))};
}

// T acting on tensor factors p < q of V (x) V (x) V (factors 0, 1, 2).
Mat8 embed(const Table& T, int p, int q, const VarSetPtr& vs) {
  const int r = 3 - p - q;
  auto bit = [](int idx, int f) { return (idx >> (2 - f)) & 1; };
  Mat8 M;
  for (int o = 0; o < 8; ++o)
    for (int i = 0; i < 8; ++i) {
      if (bit(o, r) != bit(i, r)) {
        M[o][i] = MultiPoly(vs);
        continue;
      }
      M[o][i] = T[std::size_t(pair_index(bit(o, p), bit(o, q)))][std::size_t(pair_index(bit(i, p), bit(i, q)))];
    }
  return M;
}

Mat8 mul(const Mat8& a, const Mat8& b, const VarSetPtr& vs) {
  Mat8 c;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      MultiPoly s(vs);
      for (int k = 0; k < 8; ++k)
        if (!a[i][k].is_zero() && !b[k][j].is_zero()) s += a[i][k] * b[k][j];
      c[i][j] = s;
    }
  return c;
}

}  // namespace

Report check_rll(const VertexModel& m) {
  Report rep("rll", m.name(), 1);
  const VarSetPtr vs = VarSet::standard(1);
  const MultiPoly x1 = MultiPoly::var(vs, "x1"), x2 = MultiPoly::var(vs, "x2"), t = MultiPoly::t(vs, 1);
  const Mat8 L13 = embed(m.lax_at(x1, t), 0, 2, vs);
  const Mat8 L23 = embed(m.lax_at(x2, t), 1, 2, vs);
  const Mat8 R12 = embed(m.rmat_at(x1, x2), 0, 1, vs);
  // composition: rightmost factor acts first
  const Mat8 lhs = mul(L23, mul(L13, R12, vs), vs);
  const Mat8 rhs = mul(R12, mul(L13, L23, vs), vs);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      rep.expect(lhs[i][j] == rhs[i][j], "L23 L13 R12 = R12 L13 L23", bits3(i), bits3(j), lhs[i][j].str(),
                 rhs[i][j].str());
  return rep;
}

namespace {

using BlockMat = std::array<std::array<SparseOperator, 4>, 4>;

BlockMat block_mul(const BlockMat& a, const BlockMat& b, int N) {
  BlockMat c;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      SparseOperator s(N);
      for (int k = 0; k < 4; ++k)
        if (!a[i][k].is_zero() && !b[k][j].is_zero()) s += a[i][k] * b[k][j];
      c[i][j] = std::move(s);
    }
  return c;
}

SparseOperator substitute_x(const SparseOperator& op, std::size_t xvar, const MultiPoly& val) {
  return op.map_entries([&](const RatFunc& f) { return f.specialize({{xvar, val}}); });
}

std::string pair_str(int p) { return std::string{char('0' + (p >> 1)), char('0' + (p & 1))}; }

}  // namespace

Report check_rmm(const VertexModel& m, int N) {
  Report rep("rmm", m.name(), N);
  const VarSetPtr vs = VarSet::standard(N);
  const std::size_t xv = vs->index("x");
  const MultiPoly x1 = MultiPoly::var(vs, "x1"), x2 = MultiPoly::var(vs, "x2");
  const Monodromy M = monodromy(m, N);
  std::array<SparseOperator, 4> O1, O2;
  for (int t = 0; t < 4; ++t) {
    O1[std::size_t(t)] = substitute_x(M.block[std::size_t(t)], xv, x1);
    O2[std::size_t(t)] = substitute_x(M.block[std::size_t(t)], xv, x2);
  }
  const Table R = m.rmat_at(x1, x2);
  const SparseOperator id = SparseOperator::identity(N, vs);
  BlockMat M1, M2, RR;
  for (int p = 0; p < 4; ++p)
    for (int q = 0; q < 4; ++q) {
      const int a = p >> 1, c = p & 1, b = q >> 1, d = q & 1;
      M1[p][q] = c == d ? O1[std::size_t(2 * a + b)] : SparseOperator(N);
      M2[p][q] = a == b ? O2[std::size_t(2 * c + d)] : SparseOperator(N);
      RR[p][q] = R[p][q].is_zero() ? SparseOperator(N) : RatFunc(R[p][q]) * id;
    }
  const BlockMat lhs = block_mul(M2, block_mul(M1, RR, N), N);
  const BlockMat rhs = block_mul(RR, block_mul(M1, M2, N), N);
  for (int p = 0; p < 4; ++p)
    for (int q = 0; q < 4; ++q)
      compare_operators(rep, "M2 M1 R12 = R12 M1 M2 [" + pair_str(p) + "," + pair_str(q) + "]", lhs[p][q],
                        rhs[p][q]);
  return rep;
}

namespace {

struct ProductTerm {
  std::string coef;  // polynomial in x1, x2
  Tag first;         // applied last
  int first_var;
  Tag second;  // applied first
  int second_var;
};

struct ListedRelation {
  std::string name;
  std::vector<ProductTerm> terms;  // sum of terms = 0
};

void check_series_relation(Report& rep, const std::string& name, const std::vector<ProductTerm>& terms,
                           const std::array<OperatorPoly, 4>& O, int N) {
  const VarSetPtr vs = VarSet::standard(N);
  const std::size_t x1 = vs->index("x1"), x2 = vs->index("x2");
  OperatorSeries2 total(N);
  for (const auto& t : terms) {
    const MultiPoly c = MultiPoly::parse(vs, t.coef);
    total += OperatorSeries2::product(O[std::size_t(t.first)], t.first_var, O[std::size_t(t.second)], t.second_var)
                 .scaled(c, x1, x2);
  }
  if (total.is_zero()) {
    rep.expect(true, name);
    return;
  }
  for (const auto& [k, op] : total.terms()) {
    const std::string where = "x1^" + std::to_string(k.first) + " x2^" + std::to_string(k.second);
    compare_operators(rep, name + " @ " + where, op, SparseOperator(N));
  }
}

std::array<OperatorPoly, 4> blocks_of(const VertexModel& m, int N) {
  const Monodromy M = m.perturbed() ? monodromy(m, N) : monodromy(m.kind(), N);
  const std::size_t xv = VarSet::standard(N)->index("x");
  std::array<OperatorPoly, 4> O;
  for (int t = 0; t < 4; ++t) O[std::size_t(t)] = OperatorPoly::from_operator(M.block[std::size_t(t)], xv);
  return O;
}

std::string coef_text(const MultiPoly& p) { return p.is_zero() ? "0" : p.str(); }

}  // namespace

Report check_sixteen_blocks(const Table& R, const std::array<OperatorPoly, 4>& O, int N, Report rep) {
  // entry ((a,c),(b,d)) of R M1(x1) M2(x2) - M2(x2) M1(x1) R
  for (int a = 0; a < 2; ++a)
    for (int c = 0; c < 2; ++c)
      for (int b = 0; b < 2; ++b)
        for (int d = 0; d < 2; ++d) {
          std::vector<ProductTerm> terms;
          for (int e = 0; e < 2; ++e)
            for (int f = 0; f < 2; ++f) {
              const MultiPoly& r1 = R[std::size_t(pair_index(a, c))][std::size_t(pair_index(e, f))];
              if (!r1.is_zero()) terms.push_back({coef_text(r1), tag_of(e, b), 1, tag_of(f, d), 2});
              const MultiPoly& r2 = R[std::size_t(pair_index(e, f))][std::size_t(pair_index(b, d))];
              if (!r2.is_zero()) terms.push_back({coef_text(-r2), tag_of(c, f), 2, tag_of(a, e), 1});
            }
          const std::string name = "relation (" + std::to_string(a) + std::to_string(c) + "," + std::to_string(b) +
                                   std::to_string(d) + ")";
          check_series_relation(rep, name, terms, O, N);
        }
  return rep;
}

Report check_sixteen(const VertexModel& m, int N) {
  const VarSetPtr vs = VarSet::standard(N);
  const Table R = m.rmat_at(MultiPoly::var(vs, "x1"), MultiPoly::var(vs, "x2"));
  return check_sixteen_blocks(R, blocks_of(m, N), N, Report("sixteen", m.name(), N));
}

Report check_sixteen_listed(const VertexModel& m, int N) {
  using enum Tag;
  // O1(v1) O2(v2) with O2 applied first
  static const std::vector<ListedRelation> listed = {
      {"A(x1)A(x2)=A(x2)A(x1)", {{"1", A, 1, A, 2}, {"-1", A, 2, A, 1}}},
      {"B(x1)B(x2)=B(x2)B(x1)", {{"1", B, 1, B, 2}, {"-1", B, 2, B, 1}}},
      {"B(x1)A(x2)=B(x2)A(x1)", {{"1", B, 1, A, 2}, {"-1", B, 2, A, 1}}},
      {"A(x1)C(x2)=A(x2)C(x1)", {{"1", A, 1, C, 2}, {"-1", A, 2, C, 1}}},
      {"C(x1)C(x2)=C(x2)C(x1)", {{"1", C, 1, C, 2}, {"-1", C, 2, C, 1}}},
      {"D(x1)D(x2)=D(x2)D(x1)", {{"1", D, 1, D, 2}, {"-1", D, 2, D, 1}}},
      {"B(x2)D(x1)=B(x1)D(x2)", {{"1", B, 2, D, 1}, {"-1", B, 1, D, 2}}},
      {"D(x2)C(x1)=D(x1)C(x2)", {{"1", D, 2, C, 1}, {"-1", D, 1, C, 2}}},
      {"B(x1)C(x2)=B(x2)C(x1)", {{"1", B, 1, C, 2}, {"-1", B, 2, C, 1}}},
      {"B(x1)A(x2)=B(x2)A(x1) (repeated)", {{"1", B, 1, A, 2}, {"-1", B, 2, A, 1}}},
      {"A(x2)B(x1)-A(x1)B(x2)=(x2-x1)B(x2)A(x1)",
       {{"1", A, 2, B, 1}, {"-1", A, 1, B, 2}, {"x1-x2", B, 2, A, 1}}},
      {"C(x2)A(x1)-C(x1)A(x2)=(x1-x2)A(x1)C(x2)",
       {{"1", C, 2, A, 1}, {"-1", C, 1, A, 2}, {"x2-x1", A, 1, C, 2}}},
      {"A(x1)D(x2)-A(x2)D(x1)=(x1-x2)B(x2)C(x1)",
       {{"1", A, 1, D, 2}, {"-1", A, 2, D, 1}, {"x2-x1", B, 2, C, 1}}},
      {"D(x2)B(x1)-D(x1)B(x2)=(x1-x2)B(x1)D(x2)",
       {{"1", D, 2, B, 1}, {"-1", D, 1, B, 2}, {"x2-x1", B, 1, D, 2}}},
      {"C(x1)D(x2)-C(x2)D(x1)=(x1-x2)D(x2)C(x1)",
       {{"1", C, 1, D, 2}, {"-1", C, 2, D, 1}, {"x2-x1", D, 2, C, 1}}},
      {"C(x2)B(x1)-C(x1)B(x2)=(x1-x2)(A(x1)D(x2)-D(x2)A(x1))",
       {{"1", C, 2, B, 1}, {"-1", C, 1, B, 2}, {"x2-x1", A, 1, D, 2}, {"x1-x2", D, 2, A, 1}}},
  };
  Report rep("sixteen-listed", m.name(), N);
  const auto O = blocks_of(m, N);
  for (const auto& rel : listed) check_series_relation(rep, rel.name, rel.terms, O, N);
  return rep;
}

Report check_monodromy_lattice(const VertexModel& m, int N) {
  Report rep("monodromy-lattice", m.name(), N);
  const Monodromy a = monodromy(m, N);
  const Monodromy b = monodromy_by_lattice(m, N);
  for (int t = 0; t < 4; ++t)
    compare_operators(rep, "block " + to_string(Tag(t)), a.block[std::size_t(t)], b.block[std::size_t(t)]);
  return rep;
}

Report check_transformation() {
  Report rep("transformation", "vic->osc", 1);
  const VertexModel osc = VertexModel::osc(), vic = VertexModel::vic();
  const Table l = negate_t(transform_second(vic.table(Role::Lax)));
  const Table& L = osc.table(Role::Lax);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      rep.expect(l[i][j] == L[i][j], "second-type(L') with t->-t = L", pair_str(i), pair_str(j), l[i][j].str(),
                 L[i][j].str());
  const Table r = transform_second(vic.table(Role::Rmat));
  bool r_equal = true;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r_equal = r_equal && r[i][j] == osc.table(Role::Rmat)[i][j];
  if (!r_equal)
    rep.notes.push_back("second-type image of R' differs from R; first-type image of R' is R(y,x)");
  return rep;
}

}  // namespace ybs
